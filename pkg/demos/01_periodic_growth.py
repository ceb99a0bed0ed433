"""Syzygies whose Betti numbers grow like Fibonacci numbers.

R = k[x, y]/(x^2, xy) and M = R/(y).  The resolution starts 1, 1, 1, 2, 3
and the supports settle down after a couple of steps: the even syzygies
Omega_0 and Omega_2 live only at the maximal ideal, everything from Omega_3
on has full support.
"""

from syzdim import QuotientRing, ModulePresentation, betti_sequence, resolve, syzygy_presentation
from syzdim import module_dim, supp_is_full, support_handle

R = QuotientRing.from_strings("xy", ["x^2", "x*y"])
M = ModulePresentation.from_rows(R, [["y"]])

res = resolve(M, 8)
print("ring   ", R)
print("betti  ", betti_sequence(res))

for i in range(1, 5):
    print(f"\ndelta_{i}:")
    print(res.delta(i))

print("\n  i  dim  full support")
for i in range(8):
    omega = syzygy_presentation(res, i)
    print(f"{i:>3} {module_dim(omega):>4}  {supp_is_full(support_handle(omega))}")
