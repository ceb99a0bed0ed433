"""A support can lose a component between Omega_0 and Omega_2.

R = k[x, y, z]/(yz), M = R/(xy).  Here beta_0 = beta_1 = 1 and
Omega_2 is R/(y), so the prime (x, z) is in the support of M but not in
that of Omega_2.  Such a prime must have height one.
"""

from syzdim import Ideal, ModulePresentation, QuotientRing, height, min_primes, resolve
from syzdim import supp_equal, support_handle, syzygy_presentation

R = QuotientRing.from_strings("xyz", ["y*z"])
res = resolve(ModulePresentation.from_rows(R, [["x*y"]]), 4)
h0 = support_handle(syzygy_presentation(res, 0))
h2 = support_handle(syzygy_presentation(res, 2))
p = Ideal(R.base, (R("x"), R("z")))

print("delta_1, delta_2, delta_3:", *(str(res.delta(i)) for i in (1, 2, 3)))
print("supp(Omega_2) = supp(R/(y)):", supp_equal(h2, support_handle(ModulePresentation.from_rows(R, [["y"]]))))
print("(x, z) in supp(M):        ", p.contains_ideal(h0.ideal))
print("(x, z) in supp(Omega_2):  ", p.contains_ideal(h2.ideal))
print("height of (x, z):         ", height(p, min_primes(R), R))
