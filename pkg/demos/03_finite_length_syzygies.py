"""Syzygies of finite length in a one-dimensional ring.

R is k[x, y, z, u, v] modulo twelve quadrics, computed over the rationals.
y is a parameter of R and (0 : y) = (u, v, z^2).  Resolving M = R/(u, v, z^2)
gives the first syzygy R/(y) and the third syzygy (0 : y), both of finite
length, while every other syzygy has dimension 1.

Note that z^2 already lies in I, so the third column of the presentation
vanishes in R and the minimal number of generators of (0 : y) is 2.
"""

from syzdim import Ideal, annihilator_of_ideal_mod, ideal_quotient, ideals_equal, krull_dim
from syzdim.checks import Analysis
from syzdim.instance import fixture

inst = fixture("finite_length").to_instance(characteristic=0, window=6)
R = inst.ring
I = R.ideal
print(R)
print("dim R =", krull_dim(I))
print("z^2 in I:", I.contains(R("z^2")))

colon = ideal_quotient(I, R("y"))
print("(I : y) = I + (u, v, z^2):", ideals_equal(colon, Ideal(R.base, R.ideal_gens + (R("u"), R("v"), R("z^2")))))
ann = annihilator_of_ideal_mod([R("u"), R("v"), R("z^2")], R)
print("(I : (u, v, z^2)) = I + (y):", ideals_equal(ann, Ideal(R.base, R.ideal_gens + (R("y"),))))

an = Analysis(inst)
print("\nbetti", " ".join(map(str, an.window_betti())))
print("dims ", " ".join(str(d) for d in an.dims()))
print("delta_2 =", an.omega(1))
print("delta_3 =", an.omega(2))
