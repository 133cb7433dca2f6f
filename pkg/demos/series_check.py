"""Residual checking as the ground truth for series coefficients.

Builds the Airy series, confirms it solves the system, then perturbs one
coefficient and shows where the check catches it.
"""

from gkzmod import (
    ProblemSpec,
    build_system,
    fake_exponents,
    gamma_series,
    residual_check,
    t_initial_monomial_ideal,
)

spec = ProblemSpec([[1, 3]], ["-1"], [-1, 0])
(fe,) = fake_exponents(t_initial_monomial_ideal(spec), spec)
system = build_system(spec)

s = gamma_series(fe, spec, 18)
print("clean series:", "ok" if residual_check(system, s).ok else "FAILED")

offset = (-9, 3)
bad = s.with_coefficient(offset, s.coefficient(offset) * 2)
print(f"doubling the coefficient at offset {offset} (t^{s.exponents(offset)[1]}):")
for c in residual_check(system, bad).checks:
    status = "ok" if c.ok else f"fails at t^{c.first_failure}, clean through t^{c.verified_through}"
    print(f"  {c.label:>13}: {status}")

# coefficient growth: |c_m| = (3m)!/m!, roughly 27^m (m!)^2
for m in (5, 10, 20):
    print(f"  m = {m:>2}: |c_m| has {len(str(abs(gamma_series(fe, spec, 3 * m).coefficient((-3 * m, m)))))} digits")
