"""Support and dimension of modules over ``R = S/I``.

Supports are represented by an ideal of ``S`` whose zero set, intersected
with ``Spec R``, is the support.  Two handles are compared only through
radical membership.  Dimensions come from leading-term (initial) ideals,
which have the same Hilbert polynomial as the module itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .config import ResourceLimitExceeded, current_limits
from .groebner import Ideal, buchberger, intersect_many, module_step, syzygy_basis
from .resolution import ModulePresentation
from .ring import Polynomial, QuotientRing

__all__ = [
    "EMPTY",
    "SupportHandle",
    "PrimeList",
    "MinPrimeError",
    "ContainmentVerdict",
    "determinant",
    "fitting_ideal_0",
    "module_annihilator",
    "support_filtration",
    "support_handle",
    "krull_dim_monomial",
    "krull_dim",
    "module_dim",
    "dim_from_leads",
    "supp_equal",
    "supp_is_full",
    "minimal_primes_monomial",
    "verify_declared_min_primes",
    "min_primes",
    "height",
    "min_primes_containment_check",
]

#: Dimension of the zero module.  Compares below every integer.
EMPTY = -math.inf


# -- determinants and Fitting ideals -----------------------------------------

def determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Fraction-free (Bareiss) determinant of a square matrix over ``S``."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    a = [list(r) for r in rows]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return ring.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def fitting_ideal_0(M: ModulePresentation) -> Ideal:
    """Ideal of maximal minors of the presentation, plus ``I``.

    Raises :class:`ResourceLimitExceeded` when the number of minors exceeds
    the configured ``minor_cap``.
    """
    ring = M.ring
    I = ring.ideal
    r, c = M.nrows, M.ncols
    if r == 0:
        return Ideal(ring.base, (ring.base.one(),))
    if c < r:
        return I
    count = math.comb(c, r)
    cap = current_limits().minor_cap
    if count > cap:
        raise ResourceLimitExceeded("minor_cap", cap, f"{count} minors of a {r}x{c} matrix")
    minors = []
    for cols in combinations(M.columns, r):
        d = ring.reduce(determinant([[col[i] for col in cols] for i in range(r)]))
        if d:
            minors.append(d)
    return Ideal(ring.base, tuple(minors) + I.gens)


def module_annihilator(M: ModulePresentation) -> Ideal:
    """``ann(M)`` lifted to ``S``: the intersection of ``(U : e_k)`` over the generators."""
    ring = M.ring
    base = ring.base
    I = ring.ideal
    if M.nrows == 0:
        return Ideal(base, (base.one(),))
    parts = []
    for k in range(M.nrows):
        e = tuple(base.one() if i == k else base.zero() for i in range(M.nrows))
        syz = syzygy_basis([e, *M.columns], ring, M.row_twists)
        colon = Ideal(base, tuple(s[0] for s in syz) + I.gens)
        if colon.is_unit():
            continue
        parts.append(colon)
    if not parts:
        return Ideal(base, (base.one(),))
    return intersect_many(parts) + I


def support_filtration(M: ModulePresentation) -> list[Ideal]:
    """Ideals ``L_k`` with ``supp(M) = V(L_1) ∪ ... ∪ V(L_r)``.

    Under a position-over-term order the images of ``S e_k + ... + S e_r``
    filter ``M`` with quotients ``S/L_k``, where ``L_k`` is spanned by the
    ``e_k``-coefficients of basis elements led in component ``k``.  Unit
    ideals and ideals whose zero set lies inside another's are dropped.
    """
    ring = M.ring
    base = ring.base
    r = M.nrows
    zero = base.zero()
    gens = [tuple(col) for col in M.columns if any(col)]
    for k in range(r):
        for g in ring.ideal.basis_gens():
            gens.append(tuple(g if i == k else zero for i in range(r)))
    coeffs: dict[int, list[Polynomial]] = {k: [] for k in range(r)}
    if gens:
        gb = buchberger(gens, rank=r, ring=base, twists=M.row_twists, position="pot")
        for v, lead in zip(gb.vectors, gb.leading_monomials()):
            k = lead[0]
            coeffs[k].append(Polynomial(base, {m[1:]: c for m, c in v.items() if m[0] == k}))
    distinct: dict[tuple, Ideal] = {}
    for k in range(r):
        J = Ideal(base, tuple(coeffs[k]))
        if J.is_unit():
            continue
        distinct.setdefault(tuple(sorted(map(str, J.gens))), J)
    cands = list(distinct.values())
    keep = []
    for i, J in enumerate(cands):
        # V(J) inside V(K) means J is redundant; break ties by position
        if any(_radical_subset(K, J) and (j < i or not _radical_subset(J, K))
               for j, K in enumerate(cands) if j != i):
            continue
        keep.append(J)
    return keep


@dataclass(frozen=True, eq=False)
class SupportHandle:
    """``supp(M) = V(ideal) ∩ Spec R``.  ``source`` says how ``ideal`` was built."""

    ring: QuotientRing
    ideal: Ideal
    source: str = "fitting"

    @property
    def fitt0(self) -> Ideal:
        return self.ideal

    def is_empty(self) -> bool:
        return self.ideal.is_unit()


def support_handle(M: ModulePresentation, method: str = "auto") -> SupportHandle:
    """Support of ``M``.

    ``"fitting"`` uses the maximal minors, ``"annihilator"`` the annihilator
    and ``"filtration"`` the intersection of :func:`support_filtration`; all
    three ideals have the same radical.  ``"auto"`` picks the Fitting ideal
    unless the minors would exceed ``minor_cap``.
    """
    if method not in ("auto", "fitting", "annihilator", "filtration"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        r, c = M.nrows, M.ncols
        small = r == 0 or c < r or math.comb(c, r) <= current_limits().minor_cap
        method = "fitting" if small else "filtration"
    if method == "fitting":
        return SupportHandle(M.ring, fitting_ideal_0(M), "fitting")
    if method == "annihilator":
        return SupportHandle(M.ring, module_annihilator(M), "annihilator")
    parts = support_filtration(M)
    base = M.ring.base
    ideal = intersect_many(parts) if parts else Ideal(base, (base.one(),))
    return SupportHandle(M.ring, ideal, "filtration")


def _radical_subset(A: Ideal, B: Ideal) -> bool:
    """``√A ⊆ √B``."""
    return all(B.radical_contains(g) for g in A.gens)


def supp_equal(A: SupportHandle, B: SupportHandle) -> bool:
    if A.ring is not B.ring and A.ring.base != B.ring.base:
        raise ValueError("support handles over different rings")
    return _radical_subset(A.ideal, B.ideal) and _radical_subset(B.ideal, A.ideal)


def supp_is_full(A: SupportHandle) -> bool:
    """True when the support is all of ``Spec R``."""
    return _radical_subset(A.ideal, A.ring.ideal)


# -- dimension ---------------------------------------------------------------

def _minimal_transversals(edges: Sequence[frozenset]) -> list[frozenset]:
    """Minimal sets meeting every edge (Berge's algorithm)."""
    covers = [frozenset()]
    for edge in sorted(set(edges), key=len):
        grown = set()
        for t in covers:
            if t & edge:
                grown.add(t)
            else:
                grown.update(t | {v} for v in edge)
        covers = [t for t in grown if not any(s < t for s in grown)]
    return covers


def _supports(exps_list) -> list[frozenset]:
    return [frozenset(i for i, a in enumerate(e) if a) for e in exps_list]


def _dim_of_supports(supports: list[frozenset], nvars: int) -> float:
    if any(not s for s in supports):
        return EMPTY
    if not supports:
        return nvars
    return nvars - min(len(t) for t in _minimal_transversals(supports))


def krull_dim_monomial(J: Ideal, nvars: int | None = None) -> float:
    """``dim S/J`` for a monomial ideal: ``n`` minus the smallest vertex cover."""
    if not J.is_monomial():
        raise ValueError("krull_dim_monomial needs monomial generators")
    n = J.ring.nvars if nvars is None else nvars
    return _dim_of_supports(_supports(g.lead_exps() for g in J.gens), n)


def krull_dim(J: Ideal) -> float:
    """``dim S/J`` via the leading-term ideal of a Gröbner basis; ``EMPTY`` for ``(1)``."""
    if not J.gens:
        return J.ring.nvars
    leads = J.gb.leading_monomials()
    return _dim_of_supports(_supports(m[1:] for m in leads), J.ring.nvars)


def dim_from_leads(leads, nrows: int, nvars: int) -> float:
    """Dimension of ``F/U`` from the leading monomials of a Gröbner basis of ``U``.

    ``F/U`` and ``F/in(U) = ⊕ S/in_k`` share a Hilbert polynomial, so the
    dimension is the largest ``dim S/in_k`` over the components.
    """
    by_comp: dict[int, list] = {k: [] for k in range(nrows)}
    for m in leads:
        if m[0] < nrows:
            by_comp[m[0]].append(m[1:])
    return max((_dim_of_supports(_supports(e), nvars) for e in by_comp.values()), default=EMPTY)


def module_dim(M: ModulePresentation, method: str = "leads") -> float:
    """Krull dimension of ``supp(M)``; ``EMPTY`` for the zero module.

    ``method="fitting"`` takes ``krull_dim(fitting_ideal_0(M))`` instead of
    the leading-term module; both agree, the former is limited by ``minor_cap``.
    """
    if method == "fitting":
        return krull_dim(fitting_ideal_0(M))
    if method != "leads":
        raise ValueError(f"unknown method {method!r}")
    if M.nrows == 0:
        return EMPTY
    step = module_step(M.columns, M.ring, M.row_twists, track=False, prune=False)
    return dim_from_leads(step.leads, M.nrows, M.ring.nvars)


# -- minimal primes ----------------------------------------------------------

COMPUTED = "computed-monomial"
DECLARED_VERIFIED = "declared-verified"
DECLARED_UNVERIFIED = "declared-unverified"


@dataclass(frozen=True, eq=False)
class PrimeList:
    """Minimal primes of ``R``.

    ``provenance`` records whether they were computed or declared (and then
    checked).  ``primality_certified`` is true when every ideal is generated
    by linear forms, which makes primality automatic; otherwise it is trusted.
    """

    primes: tuple[Ideal, ...]
    provenance: str
    primality_certified: bool

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __getitem__(self, i):
        return self.primes[i]


class MinPrimeError(ValueError):
    """A declared list of minimal primes failed a check."""

    def __init__(self, check: str, prime: int | None, message: str):
        self.check = check
        self.prime = prime
        super().__init__(message)


def _linear(p: Ideal) -> bool:
    return all(g.total_degree() == 1 and all(sum(e) == 1 for e in g.terms) for g in p.gens)


def minimal_primes_monomial(J: Ideal) -> PrimeList:
    """Minimal primes of a monomial ideal: its minimal vertex covers."""
    if not J.is_monomial():
        raise ValueError("minimal_primes_monomial needs monomial generators")
    ring = J.ring
    supports = _supports(g.lead_exps() for g in J.gens)
    if any(not s for s in supports):
        return PrimeList((), COMPUTED, True)
    covers = sorted(_minimal_transversals(supports), key=lambda t: (len(t), sorted(t)))
    primes = tuple(Ideal(ring, tuple(ring.gens()[i] for i in sorted(t))) for t in covers)
    return PrimeList(primes, COMPUTED, True)


def verify_declared_min_primes(ring: QuotientRing) -> PrimeList:
    """Check declared minimal primes: each contains ``I``, their intersection has
    the radical of ``I``, and they are pairwise incomparable."""
    if ring.declared_min_primes is None:
        raise ValueError("the ring declares no minimal primes")
    base = ring.base
    I = ring.ideal
    primes = [Ideal(base, p) for p in ring.declared_min_primes]
    if not primes:
        if I.is_unit():
            return PrimeList((), DECLARED_VERIFIED, True)
        raise MinPrimeError("cover", None, "empty prime list for a nonzero ring")
    for j, p in enumerate(primes):
        if p.is_unit():
            raise MinPrimeError("containment", j, f"declared prime {p} is the unit ideal")
        for g in I.gens:
            if not p.radical_contains(g):
                raise MinPrimeError("containment", j, f"{g} in I is not in declared prime {p}")
    meet = intersect_many(primes)
    for g in meet.gens:
        if not I.radical_contains(g):
            raise MinPrimeError("cover", None, f"{g} lies in every declared prime but not in the radical of I")
    for i, p in enumerate(primes):
        for j, q in enumerate(primes):
            if i != j and _radical_subset(p, q):
                raise MinPrimeError("incomparable", i, f"declared prime {p} is contained in {q}")
    return PrimeList(tuple(primes), DECLARED_VERIFIED, all(_linear(p) for p in primes))


def min_primes(ring: QuotientRing) -> PrimeList | None:
    """Declared primes (verified), or computed ones for monomial ``I``; else ``None``."""
    if ring.declared_min_primes is not None:
        return verify_declared_min_primes(ring)
    if ring.is_monomial():
        return minimal_primes_monomial(ring.ideal)
    return None


def height(p: Ideal, minn: PrimeList, ring: QuotientRing) -> int:
    """Height of the prime ``p`` of ``R``: the largest ``dim S/q - dim S/p`` over
    minimal primes ``q`` contained in ``p``."""
    below = [q for q in minn if _radical_subset(q, p)]
    if not below:
        raise ValueError(f"no minimal prime of R is contained in {p}")
    dp = krull_dim(p)
    return int(max(krull_dim(q) for q in below) - dp)


@dataclass(frozen=True)
class ContainmentVerdict:
    """Whether ``supp(M)`` is the union of the components ``V(q)`` it contains.

    ``touched`` indexes the minimal primes of ``R`` lying in ``supp(M)``.
    """

    holds: bool
    touched: tuple[int, ...]


def min_primes_containment_check(A: SupportHandle, minn: PrimeList) -> ContainmentVerdict:
    if A.is_empty():
        return ContainmentVerdict(True, ())
    touched = tuple(j for j, q in enumerate(minn) if _radical_subset(A.ideal, q))
    if not touched:
        return ContainmentVerdict(False, ())
    meet = intersect_many([minn[j] for j in touched])
    return ContainmentVerdict(_radical_subset(meet, A.ideal), touched)
