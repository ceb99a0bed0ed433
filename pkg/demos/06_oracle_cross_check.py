"""Graded Betti numbers two ways.

The oracle builds each graded piece of R from monomials and finds kernels
by Gaussian elimination; no Gröbner bases are involved.  Where its degree
bound covers a free module, its totals must agree with the resolution.
"""

from syzdim import compare_with_resolution, graded_betti_oracle, resolve
from syzdim.instance import fixture

for name, D, H in [("fibonacci", 6, 5), ("matfac", 8, 5), ("finite_length", 6, 5), ("koszul", 3, 3)]:
    M = fixture(name).to_instance().module
    oracle = graded_betti_oracle(M, D, H)
    cmp = compare_with_resolution(oracle, resolve(M, H))
    print(f"{name:<8} D={D} H={H}  oracle {cmp.oracle_totals}  resolve {cmp.resolve_totals}  {cmp.status}")

M = fixture("finite_length").to_instance().module
print("\ntoo small a bound is flagged:", compare_with_resolution(graded_betti_oracle(M, 1, 2), resolve(M, 2)).status)
