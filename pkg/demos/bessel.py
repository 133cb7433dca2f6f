"""Bessel-type system A = (-1, 1, 2), beta = 1/2, under two weights.

With w = (3, 2, 1) the t-initial ideal is monomial with three top standard
pairs, giving a cubic indicial polynomial; each root carries a series that
solves the system to the requested order.  With w = (-2, -1, 0) the
t-initial ideal is the unit ideal and the indicial polynomial is zero.
"""

from gkzmod import (
    ProblemSpec,
    UnitIndicialIdeal,
    build_atilde,
    build_system,
    fake_exponents,
    gamma_series,
    in_tau,
    indicial,
    indicial_by_elimination,
    residual_check,
    standard_pairs,
    t_initial_monomial_ideal,
    top_pairs,
    toric_ideal,
)

spec = ProblemSpec([[-1, 1, 2]], ["1/2"], [3, 2, 1])
M = t_initial_monomial_ideal(spec)
print("w = (3, 2, 1)")
print("  M =", M)
top = top_pairs(M)
for p in standard_pairs(M):
    print("   ", p.to_text(M.ring), "top" if p in top else "")

b = indicial(spec, "both")
print("  indicial polynomial:", b)
print("  factored:", b.factored())

system = build_system(spec)
for fe in fake_exponents(M, spec):
    s = gamma_series(fe, spec, 15)
    rep = residual_check(system, s)
    point = ", ".join(str(x) for x in fe.point)
    print(f"  v = ({point}): e = {fe.t_exponent}, {len(s.terms)} terms,",
          "verified" if rep.ok else "FAILED", f"through t^{s.e + s.K}")

neg = spec.with_weight([-2, -1, 0])
print("\nw = (-2, -1, 0)")
print("  t-initial ideal:", in_tau(toric_ideal(build_atilde(neg))).ideal)
print("  indicial polynomial:", indicial(neg, "pairs"))
try:
    indicial_by_elimination(neg)
except UnitIndicialIdeal as exc:
    print("  elimination route:", exc)
