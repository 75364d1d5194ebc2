"""Round repetition versus error target, and the resulting message sizes.

A single quantum round leaves a No instance with acceptance up to
(1 - 2*lambda)^2, so independent repetitions drive the error below any
target eps. The classical one-way protocol samples positions instead.
This script prints the exact repetition counts next to their analytic
ceilings and verifies one amplified sweep end to end.
"""

from fractions import Fraction

from promisecc import (
    BitString,
    bit_cost,
    emit_cost_table,
    positions_count,
    qubit_cost,
    repetition_count,
    round_accept_probability_fast,
)

# ---------------------------------------------------------------------------
# Exact counts: smallest k with (1 - 3*lambda)^k <= eps for the quantum
# rounds and (1 - lambda)^k <= eps for sampled positions. Computed with
# exact rationals, so no floating point creeps into the counts.
# ---------------------------------------------------------------------------
margins = [Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)]
epsilons = [Fraction(1, 3), Fraction(1, 10)]

print("repetition counts per margin and error target")
print(f"{'lambda':>8} {'eps':>6} {'k_quantum':>10} {'k_classical':>12}")
for lam in margins:
    for eps in epsilons:
        kq = repetition_count(lam, eps)
        kc = positions_count(lam, eps)
        print(f"{str(lam):>8} {str(eps):>6} {kq:>10} {kc:>12}")

# ---------------------------------------------------------------------------
# The cost table joins counts with register sizes: k*(3 + 2*ceil(log2 n))
# qubits against k*ceil(log2 n) classical bits.
# ---------------------------------------------------------------------------
rows = emit_cost_table(margins=[Fraction(1, 4), Fraction(1, 8)],
                       epsilons=[Fraction(1, 3)], ns=[8, 64, 1024])
print("\ncommunication budgets at eps = 1/3")
header = ("lambda", "n", "k_quantum", "qubits", "k_classical", "bits")
print(" ".join(f"{h:>12}" for h in header))
for row in rows:
    print(" ".join(f"{row[h]:>12}" for h in header))

print(f"\nsingle-round registers: n=16 -> {qubit_cost(16, 1)} qubits, "
      f"k=4 classical samples at n=16 -> {bit_cost(16, 4)} bits")

# ---------------------------------------------------------------------------
# Verify one amplified sweep: at lambda = 1/8 and n = 8 the count says
# k = 3 rounds suffice for error 1/3 on every No pair.
# ---------------------------------------------------------------------------
n = 8
lam = Fraction(1, 8)
k = repetition_count(lam, Fraction(1, 3))
worst = 0.0
for xv in range(1 << n):
    x = BitString(xv, n)
    for yv in range(1 << n):
        m = (xv & yv).bit_count()
        if lam * n <= m <= (1 - lam) * n:
            p = round_accept_probability_fast(x, BitString(yv, n))
            worst = max(worst, p**k)
print(f"\nlambda={lam}, n={n}: k={k} rounds, worst No acceptance "
      f"{worst:.4f} <= 1/3 = {float(Fraction(1, 3)):.4f}")
