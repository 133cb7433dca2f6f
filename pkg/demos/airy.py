"""Airy-type system: A = (1, 3), beta = -1, weight (-1, 0).

Walks the whole pipeline once: the extended matrix, its toric ideal, the
t-initial ideal, the fake exponent, the indicial polynomial and a truncated
series that is then checked against every operator of the system.
"""

from gkzmod import (
    ProblemSpec,
    build_atilde,
    build_system,
    fake_exponents,
    gamma_series,
    in_tau,
    indicial,
    residual_check,
    t_initial_monomial_ideal,
    toric_ideal,
)

spec = ProblemSpec([[1, 3]], ["-1"], [-1, 0])

M_tilde = build_atilde(spec)
print("extended matrix:", M_tilde)

I = toric_ideal(M_tilde)
print("toric ideal:", I)

r = in_tau(I)
print("t-initial ideal:", r.ideal, "(monomial)" if r.is_monomial else "(not monomial)")

M = t_initial_monomial_ideal(spec)
(fe,) = fake_exponents(M, spec)
print("fake exponent:", tuple(str(x) for x in fe.point), "root", fe.t_exponent)

# the two routes are computed independently and compared
print("indicial polynomial:", indicial(spec, "both"))

s = gamma_series(fe, spec, 12)
print("\nseries, first terms (coefficient, x-exponent, t-exponent):")
for rec in s.records():
    print(f"  {rec['coeff']:>12}  x^({', '.join(rec['x'])})  t^{rec['t']}")

report = residual_check(build_system(spec), s)
print()
for c in report.checks:
    print(f"{c.label:>13}: {c.operator:<22} ok through t^{c.verified_through}")
