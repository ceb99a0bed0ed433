"""A matrix factorization gives a periodic resolution.

Over R = k[a..e]/(ade - bce) the matrices [[a, b], [c, d]] and
[[de, -be], [-ce, ae]] multiply to (ade - bce) times the identity, so the
resolution of the cokernel of the first alternates between them.  The odd
syzygies have full support while the even ones live on the component
V(ad - bc); the Betti numbers stay at 2 throughout.
"""

from syzdim import (
    Ideal, ModulePresentation, QuotientRing, betti_sequence, ideal_intersection, ideals_equal, min_primes, resolve,
    supp_equal, supp_is_full, support_handle, syzygy_presentation,
)

R = QuotientRing.from_strings("abcde", ["a*d*e - b*c*e"], min_primes=[["e"], ["a*d - b*c"]])
M = ModulePresentation.from_rows(R, [["a", "b"], ["c", "d"]])
res = resolve(M, 7)
print("betti ", betti_sequence(res))
print("delta_2 =")
print(res.delta(2))

curve = support_handle(ModulePresentation.from_rows(R, [["a*d - b*c"]]))
for i in range(6):
    h = support_handle(syzygy_presentation(res, i))
    where = "Spec R" if supp_is_full(h) else ("V(ad - bc)" if supp_equal(h, curve) else "?")
    print(f"supp(Omega_{i}) = {where}")

primes = min_primes(R)
print("\nminimal primes", [str(p) for p in primes], f"({primes.provenance})")
meet = ideal_intersection(primes[0], primes[1])
print("their intersection is exactly I:", ideals_equal(meet, Ideal(R.base, R.ideal_gens)))
