"""Exact communication bounds from matrices, rectangles, and rank.

For each problem a matrix over the promise inputs is built (with holes
where the promise excludes a pair). A protocol-tree search computes the
exact deterministic cost D, a cover search computes the smallest
partitions of the 1s and 0s into monochromatic rectangles, and rank plus
fooling-set arguments certify the answers from below. The script walks
these on the smallest instances and shows the complement-pair family
that forces the exponential equality bound.
"""

from fractions import Fraction

from promisecc import (
    Margin,
    PromiseLabel,
    check_rectangle_bound,
    classify_disj_promise,
    exact_deterministic_cc,
    find_cross_refutation,
    fooling_pairs,
    greedy_fooling_set,
    min_monochromatic_partition,
    problem_matrix,
)

# ---------------------------------------------------------------------------
# Total problems first: equality and disjointness need n + 1 bits exactly.
# check_rectangle_bound bundles D with the partition counts C1 and C0 and
# confirms D >= ceil(log2 C) for both colors.
# ---------------------------------------------------------------------------
print("exact costs and partition counts")
print(f"{'problem':>10} {'n':>3} {'D':>5} {'C1':>5} {'C0':>5} {'bound':>6}")
for kind in ("eq", "disj"):
    for n in (1, 2, 3):
        matrix = problem_matrix(kind, n)
        report = check_rectangle_bound(matrix)
        print(f"{kind:>10} {n:>3} {report.depth!s:>5} "
              f"{report.one_partition!s:>5} {report.zero_partition!s:>5} "
              f"{report.holds!s:>6}")

# ---------------------------------------------------------------------------
# Promise matrices have undefined cells; rectangles may spill into them
# but the partition only needs to cover the defined cells of one color.
# ---------------------------------------------------------------------------
matrix = problem_matrix("promise_eq", 2)
ones = min_monochromatic_partition(matrix, 1)
zeros = min_monochromatic_partition(matrix, 0)
print(f"\npromise equality n=2: D={exact_deterministic_cc(matrix)}, "
      f"C1={len(ones.rectangles)}, C0={len(zeros.rectangles)}")
for rect in ones.rectangles:
    rows = [matrix.rows[i] for i in rect.row_indices]
    cols = [matrix.cols[j] for j in rect.col_indices]
    print(f"  1-rectangle rows={[str(r) for r in rows]} "
          f"cols={[str(c) for c in cols]}")

# ---------------------------------------------------------------------------
# Fooling sets certify lower bounds: cells that no rectangle can share.
# On equality the diagonal plus mixed-value conflicts already force the
# full cost at n=2.
# ---------------------------------------------------------------------------
cells = greedy_fooling_set(problem_matrix("eq", 2))
print(f"\ngreedy conflict set on equality n=2: {len(cells)} cells "
      f"-> D >= ceil(log2 {len(cells)}) = {max(1, (len(cells) - 1).bit_length())}")

# ---------------------------------------------------------------------------
# The complement-pair family: every (x, ~x) over the middle weight band
# is a Yes instance of promise disjointness, and the family has at least
# 2^n/2 members, so the Yes side alone needs exponentially many
# rectangles. Crossing two members produces a No instance, which is the
# single fact the fooling argument needs.
# ---------------------------------------------------------------------------
print("\ncomplement-pair family sizes")
for n in (4, 8):
    margin = Margin(Fraction(1, 4), n)
    pairs = fooling_pairs(margin)
    all_yes = all(classify_disj_promise(x, y, margin) is PromiseLabel.YES
                  for x, y in pairs)
    print(f"  n={n}: |F|={len(pairs)} >= {2**n // 2} (all Yes: {all_yes})")

margin4 = Margin(Fraction(1, 4), 4)
x, z = find_cross_refutation(margin4)
print(f"\ncross refutation at n=4: members ({x},{~x}) and ({z},{~z}); "
      f"the crossed pair ({z},{~x}) has overlap "
      f"{len([i for i in range(4) if z[i] and (~x)[i]])} -> No instance")
