"""Exact classical lower bounds on explicit communication matrices.

Everything here works on small partial matrices: entries are 0, 1, or
undefined (the don't-care cells of a promise problem).  Three exact
searches are provided.

* :func:`exact_deterministic_cc` finds the minimum worst-case bit count
  of a two-party protocol whose transcript determines the output, by
  protocol-tree search.  A greedy fooling-set clique gives an admissible
  lower bound and row/column deduplication gives an upper bound, so the
  recursion only runs inside the gap between the two.
* :func:`min_monochromatic_partition` finds the minimum number of
  pairwise disjoint monochromatic rectangles covering the cells of one
  value, by branch-and-bound over closed (tight) rectangles.
* :func:`check_rectangle_bound` ties the two together and asserts the
  rectangle bound D >= max(ceil(log2 C0), ceil(log2 C1)).

The fooling-set constructions for promise disjointness (complement pairs
over a weight band, plus crossed-pair refutations) live here as well.
"""

from __future__ import annotations

import io
import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2

import numpy as np

from .bits import (
    BitString,
    Margin,
    PromiseLabel,
    all_bitstrings,
    classify_disj_promise,
    weight_band,
)

UNDEFINED = -1
PROBLEM_KINDS = ("eq", "disj", "promise_eq", "promise_disj")

#: Row/column cap for the protocol-tree search.
MATRIX_SIZE_LIMIT = 64
#: Defined-cell cap for the exact partition search.
PARTITION_CELL_LIMIT = 64
#: Cap on candidate-rectangle enumeration work in the partition search.
_ENUMERATION_LIMIT = 2_000_000
#: Cap on bipartition masks tried per node of the protocol-tree search.
_BIPARTITION_LIMIT = 1 << 16


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CommMatrix:
    """Partial two-party matrix: rows are Alice inputs, columns Bob inputs."""

    rows: tuple
    cols: tuple
    entries: np.ndarray

    def __post_init__(self):
        e = np.array(self.entries, dtype=np.int8)
        if e.shape != (len(self.rows), len(self.cols)):
            raise ValueError("entry grid does not match the label counts")
        if not np.isin(e, (0, 1, UNDEFINED)).all():
            raise ValueError("entries must be 0, 1, or UNDEFINED")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))

    @property
    def shape(self):
        return self.entries.shape

    def entry(self, i: int, j: int) -> int:
        return int(self.entries[int(i), int(j)])

    def defined_cells(self, value=None):
        """Index pairs of defined cells, optionally of one value."""
        if value is None:
            mask = self.entries != UNDEFINED
        else:
            mask = self.entries == value
        return [(int(i), int(j)) for i, j in np.argwhere(mask)]

    def submatrix(self, row_indices, col_indices) -> "CommMatrix":
        ri = list(row_indices)
        ci = list(col_indices)
        return CommMatrix(
            rows=tuple(self.rows[i] for i in ri),
            cols=tuple(self.cols[j] for j in ci),
            entries=self.entries[np.ix_(ri, ci)],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [str(c) for c in self.cols])
        symbols = {0: "0", 1: "1", UNDEFINED: "U"}
        for i, r in enumerate(self.rows):
            writer.writerow([str(r)] + [symbols[int(v)] for v in self.entries[i]])
        return buf.getvalue()

    @staticmethod
    def from_csv(text: str) -> "CommMatrix":
        """Inverse of to_csv; binary labels come back as BitString values."""
        reader = list(csv.reader(io.StringIO(text)))
        if not reader or len(reader[0]) < 2:
            raise ValueError("matrix CSV needs a header row of column labels")
        cols = tuple(_parse_label(c) for c in reader[0][1:])
        rows, grid = [], []
        values = {"0": 0, "1": 1, "U": UNDEFINED}
        for line in reader[1:]:
            if not line:
                continue
            rows.append(_parse_label(line[0]))
            try:
                grid.append([values[cell] for cell in line[1:]])
            except KeyError as exc:
                raise ValueError(f"bad matrix cell {exc.args[0]!r}") from None
        return CommMatrix(rows=tuple(rows), cols=cols, entries=np.array(grid))


def _parse_label(text: str):
    if text and set(text) <= {"0", "1"}:
        return BitString(text)
    return text


def _popcounts(n: int) -> np.ndarray:
    table = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(1 << n, dtype=np.int64)
    while table.any():
        counts += table & 1
        table >>= 1
    return counts


def problem_matrix(kind: str, n: int, margin: Margin | None = None) -> CommMatrix:
    """Matrix of one of the four problems over all length-n inputs."""
    if kind not in PROBLEM_KINDS:
        raise ValueError(f"unknown problem kind {kind!r}")
    if not 1 <= n <= 10:
        raise ValueError("matrix construction supports 1 <= n <= 10")
    labels = tuple(all_bitstrings(n))
    values = np.arange(1 << n)
    pc = _popcounts(n)
    if kind in ("eq", "promise_eq"):
        dist = pc[values[:, None] ^ values[None, :]]
        if kind == "eq":
            entries = (dist == 0).astype(np.int8)
        else:
            if n % 2:
                raise ValueError("promise equality needs even n")
            entries = np.full(dist.shape, UNDEFINED, dtype=np.int8)
            entries[dist == 0] = 1
            entries[2 * dist == n] = 0
    else:
        inter = pc[values[:, None] & values[None, :]]
        if kind == "disj":
            entries = (inter == 0).astype(np.int8)
        else:
            if margin is None:
                raise ValueError("promise disjointness needs a margin")
            if margin.n != n:
                raise ValueError("margin length does not match n")
            entries = np.full(inter.shape, UNDEFINED, dtype=np.int8)
            entries[inter == 0] = 1
            entries[(inter >= margin.low) & (inter <= margin.high)] = 0
    return CommMatrix(rows=labels, cols=labels, entries=entries)


# ---------------------------------------------------------------------------
# fooling sets
# ---------------------------------------------------------------------------

def _cells_conflict(grid, a, b) -> bool:
    """True iff the two defined cells cannot share one monochromatic leaf."""
    r1, c1, v1 = a
    r2, c2, v2 = b
    if v1 != v2:
        return True
    return not (
        grid[r1][c2] in (v1, UNDEFINED) and grid[r2][c1] in (v1, UNDEFINED)
    )


def _greedy_clique(grid, ordered_cells):
    chosen = []
    for cell in ordered_cells:
        if all(_cells_conflict(grid, cell, c) for c in chosen):
            chosen.append(cell)
    return chosen


def _bitstring_labels(m: CommMatrix) -> bool:
    return (
        all(isinstance(r, BitString) for r in m.rows)
        and all(isinstance(c, BitString) for c in m.cols)
        and len({r.n for r in m.rows} | {c.n for c in m.cols}) == 1
    )


def greedy_fooling_set(m: CommMatrix):
    """A pairwise-conflicting set of defined cells, greedily grown.

    Several scan orders are tried and the largest result kept; any such
    set lower-bounds the leaf count of every correct protocol tree.
    """
    grid = m.entries.tolist()
    cells = [
        (i, j, grid[i][j])
        for i in range(len(grid))
        for j in range(len(grid[0]))
        if grid[i][j] != UNDEFINED
    ]
    orders = [
        cells,
        sorted(cells, key=lambda c: (c[2], c[0], c[1])),
        sorted(cells, key=lambda c: (-c[2], c[0], c[1])),
    ]
    if _bitstring_labels(m):
        # complementary pairs conflict with each other densely, so scan
        # them first, then diagonal cells, then the rest
        def structure(cell):
            i, j, _ = cell
            x, y = m.rows[i], m.cols[j]
            if y == ~x:
                return 0
            if y == x:
                return 1
            return 2

        orders.insert(0, sorted(cells, key=lambda c: (structure(c), c[0], c[1])))
    best = []
    for order in orders:
        found = _greedy_clique(grid, order)
        if len(found) > len(best):
            best = found
    return [(r, c) for r, c, _ in best]


def fooling_pairs(margin: Margin):
    """Complement pairs (x, ~x) over the weight band; all Yes instances."""
    return [(x, ~x) for x in weight_band(margin)]


def cross_pair_refutation(x: BitString, z: BitString, margin: Margin) -> PromiseLabel:
    """Label of the crossed pair (z, ~x) for two band members x and z."""
    return classify_disj_promise(z, ~x, margin)


def find_cross_refutation(margin: Margin):
    """First pair of band members whose crossed pair is a No instance."""
    band = weight_band(margin)
    for x in band:
        for z in band:
            if z == x:
                continue
            if cross_pair_refutation(x, z, margin) is PromiseLabel.NO:
                return x, z
    return None


# ---------------------------------------------------------------------------
# exact deterministic communication complexity
# ---------------------------------------------------------------------------

def _normalize(sub: np.ndarray) -> np.ndarray:
    """Deduplicate and sort rows and columns to a stable normal form."""
    for _ in range(2):
        sub = np.unique(sub, axis=0)
        sub = np.unique(sub, axis=1)
    return sub


def _canonical(sub: np.ndarray):
    """Normal form up to row/col dedup, permutation, and transposition."""
    a = _normalize(sub)
    b = _normalize(sub.T)
    ka = (a.shape, a.tobytes())
    kb = (b.shape, b.tobytes())
    return (ka, a) if ka <= kb else (kb, b)


def _is_constant(sub: np.ndarray) -> bool:
    defined = sub[sub != UNDEFINED]
    return defined.size == 0 or bool((defined == defined[0]).all())


class SearchTooWideError(ValueError):
    """Exact search would need to enumerate too many bipartitions."""


class _ProtocolSearch:
    """Budgeted protocol-tree search with memoized sub-rectangles."""

    def __init__(self):
        self.solvable_memo = {}
        self.node_info = {}

    def _info(self, key, sub):
        cached = self.node_info.get(key)
        if cached is not None:
            return cached
        constant = _is_constant(sub)
        if constant:
            info = (True, 0, 0)
        else:
            grid = sub.tolist()
            cells = [
                (i, j, grid[i][j])
                for i in range(len(grid))
                for j in range(len(grid[0]))
                if grid[i][j] != UNDEFINED
            ]
            fool = max(
                len(_greedy_clique(grid, cells)),
                len(_greedy_clique(grid, sorted(cells, key=lambda c: (c[2], c[0], c[1])))),
            )
            lower = max(1, ceil(log2(fool)))
            upper = 1 + min(
                ceil(log2(sub.shape[0])), ceil(log2(sub.shape[1]))
            )
            info = (False, lower, upper)
        self.node_info[key] = info
        return info

    def solvable(self, sub: np.ndarray, budget: int) -> bool:
        key, sub = _canonical(sub)
        constant, lower, upper = self._info(key, sub)
        if constant:
            return True
        if budget >= upper:
            return True
        if budget < lower:
            return False
        memo_key = (key, budget)
        cached = self.solvable_memo.get(memo_key)
        if cached is not None:
            return cached
        result = self._branch(sub, budget)
        self.solvable_memo[memo_key] = result
        return result

    def _branch(self, sub: np.ndarray, budget: int) -> bool:
        # one bit from either player splits that player's side in two
        skipped_wide = False
        for side in (sub, sub.T):
            count = side.shape[0]
            if count < 2:
                continue
            if 1 << (count - 1) > _BIPARTITION_LIMIT:
                skipped_wide = True
                continue
            masks = sorted(
                range(1, 1 << (count - 1)),
                key=lambda m: abs(2 * m.bit_count() - count),
            )
            indices = np.arange(1, count)
            for mask in masks:
                picked = indices[[(mask >> b) & 1 == 1 for b in range(count - 1)]]
                part = np.zeros(count, dtype=bool)
                part[picked] = True
                if self.solvable(side[part], budget - 1) and self.solvable(
                    side[~part], budget - 1
                ):
                    return True
        if skipped_wide:
            # without the wide side the failure to split is inconclusive
            raise SearchTooWideError(
                "protocol search would enumerate over "
                f"{_BIPARTITION_LIMIT} bipartitions"
            )
        return False


def exact_deterministic_cc(m: CommMatrix, size_limit: int = MATRIX_SIZE_LIMIT) -> int:
    """Minimum worst-case bits of a protocol whose transcript fixes the output.

    Announcing the answer counts toward the cost, so a nonconstant matrix
    never comes out below 1 and equality over n bits costs n+1.
    """
    n_rows, n_cols = m.shape
    if n_rows > size_limit or n_cols > size_limit:
        raise ValueError(
            f"matrix {n_rows}x{n_cols} exceeds the search limit {size_limit}"
        )
    if n_rows == 0 or n_cols == 0:
        return 0
    if _is_constant(m.entries):
        return 0
    search = _ProtocolSearch()
    key, canon = _canonical(m.entries)
    _, lower, upper = search._info(key, canon)
    # the label-aware greedy usually beats the plain scans, so seed the
    # deepening with whichever clique came out larger
    lower = max(lower, ceil(log2(len(greedy_fooling_set(m)))))
    if not np.any(m.entries == UNDEFINED):
        # a depth-d tree has at most 2^d transcripts, whose rectangles
        # partition the matrix into constant pieces, so 2^d is at least
        # the rank of the one-cells plus the rank of the zero-cells
        rank_sum = sum(
            _indicator_rank(cells)
            for cells in (m.defined_cells(1), m.defined_cells(0))
            if cells
        )
        lower = max(lower, ceil(log2(rank_sum)))
    depth = lower
    while depth < upper and not search.solvable(canon, depth):
        depth += 1
    return depth


# ---------------------------------------------------------------------------
# minimum monochromatic partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rectangle:
    """Product set of row and column indices into a matrix."""

    row_indices: tuple
    col_indices: tuple

    def __post_init__(self):
        if not self.row_indices or not self.col_indices:
            raise ValueError("rectangles must be nonempty")
        object.__setattr__(self, "row_indices", tuple(sorted(self.row_indices)))
        object.__setattr__(self, "col_indices", tuple(sorted(self.col_indices)))

    def cells(self):
        return [(r, c) for r in self.row_indices for c in self.col_indices]


@dataclass(frozen=True)
class PartitionResult:
    count: int
    rectangles: tuple


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _tight_rectangles(entries, value, cells):
    """All closed allowed rectangles: every row and column carries a covered
    cell and the enclosed defined cells are exactly the covered set."""
    rows_used = sorted({r for r, _ in cells})
    cols_used = sorted({c for _, c in cells})
    if len(rows_used) > 16 or len(cols_used) > 16:
        raise ValueError("row/column support too large for the exact search")
    row_pos = {r: i for i, r in enumerate(rows_used)}
    col_pos = {c: i for i, c in enumerate(cols_used)}
    cell_index = {cell: k for k, cell in enumerate(cells)}
    # per used row: usable columns (value or undefined) and covered cells
    ok_cols = []
    row_cells = []
    for r in rows_used:
        ok = 0
        covered = {}
        for c in cols_used:
            e = entries[r][c]
            if e in (value, UNDEFINED):
                ok |= 1 << col_pos[c]
            if e == value:
                covered[col_pos[c]] = cell_index[(r, c)]
        ok_cols.append(ok)
        row_cells.append(covered)
    rects = {}
    work = 0
    for row_mask in range(1, 1 << len(rows_used)):
        allowed = (1 << len(cols_used)) - 1
        for i in _iter_bits(row_mask):
            allowed &= ok_cols[i]
        if allowed == 0:
            continue
        col_options = list(_iter_bits(allowed))
        work += 1 << len(col_options)
        if work > _ENUMERATION_LIMIT:
            raise ValueError("candidate rectangle enumeration too large")
        for col_pick in range(1, 1 << len(col_options)):
            col_mask = 0
            for b in _iter_bits(col_pick):
                col_mask |= 1 << col_options[b]
            cover = 0
            tight_rows = 0
            tight_cols = 0
            for i in _iter_bits(row_mask):
                hits = [j for j in row_cells[i] if (col_mask >> j) & 1]
                for j in hits:
                    cover |= 1 << row_cells[i][j]
                    tight_cols |= 1 << j
                if hits:
                    tight_rows |= 1 << i
            if cover == 0 or tight_rows != row_mask or tight_cols != col_mask:
                continue
            rects[(row_mask, col_mask)] = cover
    return rows_used, cols_used, [
        (rm, cm, cover) for (rm, cm), cover in sorted(rects.items())
    ]


def min_monochromatic_partition(
    m: CommMatrix, value: int, max_cells: int = PARTITION_CELL_LIMIT
) -> PartitionResult:
    """Minimum number of disjoint monochromatic rectangles covering all
    cells of the given value; rectangles may absorb undefined cells but
    never overlap each other.
    """
    if value not in (0, 1):
        raise ValueError("value must be 0 or 1")
    cells = m.defined_cells(value)
    if not cells:
        return PartitionResult(0, ())
    if len(cells) > max_cells:
        raise ValueError(
            f"{len(cells)} cells exceed the partition search limit {max_cells}"
        )
    entries = m.entries.tolist()
    rows_used, cols_used, rects = _tight_rectangles(entries, value, cells)
    full = (1 << len(cells)) - 1
    by_cell = [[] for _ in cells]
    for idx, (_, _, cover) in enumerate(rects):
        for k in _iter_bits(cover):
            by_cell[k].append(idx)
    for options in by_cell:
        options.sort(key=lambda idx: -rects[idx][2].bit_count())

    undefined_inside = any(
        entries[r][c] == UNDEFINED for r in rows_used for c in cols_used
    )
    best_pick = _partition_search(
        entries, value, cells, rects, by_cell, full, strict=undefined_inside
    )
    rectangles = tuple(
        Rectangle(
            row_indices=tuple(rows_used[i] for i in _iter_bits(rects[idx][0])),
            col_indices=tuple(cols_used[j] for j in _iter_bits(rects[idx][1])),
        )
        for idx in best_pick
    )
    return PartitionResult(count=len(best_pick), rectangles=rectangles)


def _partition_clique_mask(entries, value, cells) -> int:
    """Cells that pairwise cannot share an allowed rectangle, as a mask.

    Each such cell forces its own rectangle, an admissible pruning bound.
    """
    tagged = [(r, c, value) for r, c in cells]
    orders = [
        tagged,
        sorted(tagged, key=lambda t: (t[1], t[0])),
        list(reversed(tagged)),
    ]
    best = []
    for order in orders:
        found = _greedy_clique(entries, order)
        if len(found) > len(best):
            best = found
    index = {cell: k for k, cell in enumerate(cells)}
    mask = 0
    for r, c, _ in best:
        mask |= 1 << index[(r, c)]
    return mask


def _stripe_seeds(rects):
    """Single-row and single-column covers; always valid partitions."""
    row_best = {}
    col_best = {}
    for idx, (rm, cm, cover) in enumerate(rects):
        if rm & (rm - 1) == 0:
            held = row_best.get(rm)
            if held is None or cover.bit_count() > rects[held][2].bit_count():
                row_best[rm] = idx
        if cm & (cm - 1) == 0:
            held = col_best.get(cm)
            if held is None or cover.bit_count() > rects[held][2].bit_count():
                col_best[cm] = idx
    return [sorted(row_best.values()), sorted(col_best.values())]


def _partition_search(entries, value, cells, rects, by_cell, full, strict) -> list:
    """Exact minimum via branch and bound seeded with greedy covers.

    With undefined cells in play (strict), overlap through those cells must
    be checked against every picked rectangle and covered-set memoization is
    unsound, so it is disabled; such instances stay small in practice.
    """

    def compatible(idx: int, picked: list) -> bool:
        if not strict:
            return True
        rm, cm, _ = rects[idx]
        for other in picked:
            orm, ocm, _ = rects[other]
            if (rm & orm) and (cm & ocm):
                return False
        return True

    best_pick: list = []
    best_count = full.bit_count() + 1
    for seed in _stripe_seeds(rects) + [
        _greedy_partition(rects, by_cell, full, compatible)
    ]:
        if seed is not None and len(seed) < best_count:
            best_pick = seed
            best_count = len(seed)

    clique_mask = _partition_clique_mask(entries, value, cells)
    lower = max(1, clique_mask.bit_count())
    if best_count <= lower:
        return best_pick
    if not strict:
        # a disjoint partition writes the cell indicator as a sum of
        # rank-one matrices, one per rectangle, so its size is at least
        # the real rank of the indicator
        lower = max(lower, _indicator_rank(cells))
        if best_count <= lower:
            return best_pick

    seen: dict = {}

    def descend(covered: int, picked: list):
        nonlocal best_count, best_pick
        if covered == full:
            if len(picked) < best_count:
                best_count = len(picked)
                best_pick = list(picked)
            return
        remaining = (clique_mask & ~covered & full).bit_count()
        if len(picked) + max(1, remaining) >= best_count:
            return
        if not strict:
            prev = seen.get(covered)
            if prev is not None and prev <= len(picked):
                return
            seen[covered] = len(picked)
        k = next(_iter_bits(~covered & full))
        for idx in by_cell[k]:
            if rects[idx][2] & covered == 0 and compatible(idx, picked):
                picked.append(idx)
                descend(covered | rects[idx][2], picked)
                picked.pop()

    descend(0, [])
    return best_pick


def _indicator_rank(cells) -> int:
    """Exact real rank of the 0/1 matrix marking the given cells.

    Rational elimination avoids floating-point rank tolerance questions.
    """
    rows_used = sorted({r for r, _ in cells})
    cols_used = sorted({c for _, c in cells})
    row_pos = {r: i for i, r in enumerate(rows_used)}
    col_pos = {c: j for j, c in enumerate(cols_used)}
    grid = [[Fraction(0)] * len(cols_used) for _ in rows_used]
    for r, c in cells:
        grid[row_pos[r]][col_pos[c]] = Fraction(1)
    rank = 0
    for c in range(len(cols_used)):
        pivot = next((i for i in range(rank, len(grid)) if grid[i][c]), None)
        if pivot is None:
            continue
        grid[rank], grid[pivot] = grid[pivot], grid[rank]
        lead = grid[rank][c]
        for i in range(rank + 1, len(grid)):
            if grid[i][c]:
                factor = grid[i][c] / lead
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[rank])]
        rank += 1
        if rank == len(grid):
            break
    return rank


def _greedy_partition(rects, by_cell, full, compatible):
    """A valid partition by largest-cover-first, or None if greedy dead-ends.

    Used only to seed the exact search with an upper bound.
    """
    covered, picked = 0, []
    while covered != full:
        k = next(_iter_bits(~covered & full))
        for idx in by_cell[k]:
            if rects[idx][2] & covered == 0 and compatible(idx, picked):
                picked.append(idx)
                covered |= rects[idx][2]
                break
        else:
            return None
    return picked


def verify_partition(m: CommMatrix, value: int, rectangles) -> bool:
    """Independent scan: monochromatic, pairwise disjoint, exact cover."""
    seen = set()
    for rect in rectangles:
        for r, c in rect.cells():
            e = int(m.entries[r, c])
            if e not in (value, UNDEFINED):
                return False
            if (r, c) in seen:
                return False
            seen.add((r, c))
    target = {(r, c) for r, c in m.defined_cells(value)}
    return target <= seen


# ---------------------------------------------------------------------------
# combined report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RectangleBoundReport:
    depth: int | None
    zero_partition: int | None
    one_partition: int | None
    holds: bool | None

    def to_record(self) -> dict:
        return {
            "D": self.depth,
            "C0": self.zero_partition,
            "C1": self.one_partition,
            "bound_ok": self.holds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)


def check_rectangle_bound(m: CommMatrix) -> RectangleBoundReport:
    """Compute D, C0, C1 and verify D >= max(ceil(log2 C0), ceil(log2 C1)).

    A quantity beyond its search cap is reported as None and skipped in
    the comparison; with D unknown the verdict itself becomes None.
    """
    try:
        depth = exact_deterministic_cc(m)
    except SearchTooWideError:
        depth = None
    counts = {}
    for value in (0, 1):
        try:
            result = min_monochromatic_partition(m, value)
        except ValueError:
            counts[value] = None
            continue
        if not verify_partition(m, value, result.rectangles):
            raise AssertionError("partition search returned an invalid cover")
        counts[value] = result.count
    needed = [ceil(log2(c)) for c in counts.values() if c not in (None, 0)]
    holds = None if depth is None else depth >= max(needed, default=0)
    return RectangleBoundReport(
        depth=depth,
        zero_partition=counts[0],
        one_partition=counts[1],
        holds=holds,
    )
