"""Free ranks computed by three genuinely independent routes.

1. Census + subset count: the rank of H^l is the number of l-element
   subsets of the eigenvalue exponents summing to 0 mod m, evaluated by a
   dynamic program on the cyclotomic census.
2. Trace average: the same number as an averaged trace of exterior powers
   over the group (a character inner product, hence an exact integer).
3. Oracle: the free part of the exact Smith-form evaluation.
"""

from semicoh import (
    count_wedge_roots,
    e2_table,
    exponent_multiset,
    matrix_census,
    molien_rank,
    validate,
)
from semicoh.fixtures import fixture_suite

for fixture in fixture_suite():
    if not fixture.valid:
        continue
    spec = validate(fixture.spec)
    top = spec.n + 2
    x = exponent_multiset(matrix_census(spec.phi, spec.m))
    dp = [count_wedge_roots(x, l, spec.m) for l in range(top + 1)]
    trace = [molien_rank(spec.phi, spec.m, l) for l in range(top + 1)]
    oracle = list(e2_table(spec, top).rank_column())
    status = "agree" if dp == trace == oracle else "DISAGREE"
    print(f"{fixture.name:<10} ranks {dp}  [{status}]")
