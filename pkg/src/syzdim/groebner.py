"""Gröbner bases, normal forms, syzygies and ideal operations.

Everything over ``R = S/I`` is lifted to ``S`` by augmenting a generating set
with ``g * e_k`` for every Gröbner basis element ``g`` of ``I`` and every
component ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ._engine import Engine, TermOrder, UnitFound
from .ring import MIXED, MonomialOrder, Polynomial, PolynomialRing, QuotientRing, homogeneous_degree

__all__ = [
    "GroebnerBasis",
    "Ideal",
    "buchberger",
    "normal_form",
    "syzygy_basis",
    "ideal_membership",
    "radical_membership",
    "ideal_intersection",
    "ideal_quotient",
    "annihilator_of_ideal_mod",
    "ideals_equal",
    "intersect_many",
]


# -- conversions -------------------------------------------------------------

def to_vector(entries: Sequence[Polynomial], offset: int = 0) -> dict:
    out = {}
    for k, f in enumerate(entries):
        c = (k + offset,)
        for e, v in f.terms.items():
            out[c + e] = v
    return out


def from_vector(vec: dict, ring: PolynomialRing, rank: int, offset: int = 0) -> tuple[Polynomial, ...]:
    parts: list[dict] = [{} for _ in range(rank)]
    for m, v in vec.items():
        k = m[0] - offset
        if 0 <= k < rank:
            parts[k][m[1:]] = v
    return tuple(Polynomial(ring, t) for t in parts)


def poly_dict(f: Polynomial) -> dict:
    return {(0,) + e: v for e, v in f.terms.items()}


def dict_poly(vec: dict, ring: PolynomialRing) -> Polynomial:
    return Polynomial(ring, {m[1:]: v for m, v in vec.items()})


def column_degree(entries: Sequence[Polynomial], twists: Sequence[int]) -> int | None:
    """Common degree of a homogeneous column, ``None`` for the zero column."""
    deg = None
    for f, t in zip(entries, twists):
        d = homogeneous_degree(f)
        if d is None:
            continue
        if d is MIXED:
            raise ValueError(f"entry {f} is not homogeneous")
        if deg is None:
            deg = d + t
        elif deg != d + t:
            raise ValueError("column is not homogeneous with respect to the row twists")
    return deg


# -- Gröbner bases -----------------------------------------------------------

class GroebnerBasis:
    """Reduced Gröbner basis of an ideal (``rank == 1``) or a submodule of ``S^rank``."""

    def __init__(self, ring: PolynomialRing, rank: int, engine: Engine, *, is_ideal: bool):
        self.ring = ring
        self.rank = rank
        self.is_ideal = is_ideal
        self._engine = engine
        self.vectors = engine.reduced_basis()
        # rebuild a clean engine holding only the reduced basis for reductions
        clean = Engine(engine.order, engine.p)
        for v in self.vectors:
            clean.add_known(v)
        self._reducer = clean

    @property
    def order(self) -> TermOrder:
        return self._engine.order

    @property
    def elements(self):
        if self.is_ideal:
            return tuple(dict_poly(v, self.ring) for v in self.vectors)
        return tuple(from_vector(v, self.ring, self.rank) for v in self.vectors)

    def __len__(self):
        return len(self.vectors)

    def leading_monomials(self) -> list[tuple]:
        """Leading monomials ``(comp, *exps)`` of the basis elements."""
        return [self._reducer.leads[i] for i in range(len(self.vectors))]

    def is_unit(self) -> bool:
        return any(not any(m[1:]) for m in self.leading_monomials())

    def reduce_vector(self, vec: dict) -> dict:
        return self._reducer.full_reduce(vec)

    def normal_form(self, f):
        if self.is_ideal:
            return dict_poly(self.reduce_vector(poly_dict(f)), f.ring)
        ring = f[0].ring if f else self.ring
        return from_vector(self.reduce_vector(to_vector(f)), ring, self.rank)

    def contains(self, f) -> bool:
        if self.is_ideal:
            return not self.reduce_vector(poly_dict(f))
        return not self.reduce_vector(to_vector(f))

    def spairs_reduce_to_zero(self) -> bool:
        """Exhaustive check of every S-pair of the basis."""
        eng = self._reducer
        n = len(self.vectors)
        for i in range(n):
            for j in range(i + 1, n):
                if eng.leads[i][0] != eng.leads[j][0]:
                    continue
                if eng.full_reduce(eng.spoly(i, j)):
                    return False
        return True


def _run(engine: Engine, vectors: Sequence[dict], degrees=None) -> Engine:
    """Feed generators to ``engine`` and finish the computation."""
    if degrees is not None:
        for d, v in sorted(zip(degrees, vectors), key=lambda t: t[0]):
            engine.process(upto=d)
            engine.add_generator(v)
    else:
        for v in vectors:
            engine.add_generator(v)
    engine.process()
    engine.audit()
    return engine


def buchberger(gens, *, rank: int | None = None, ring: PolynomialRing | None = None,
               twists: Sequence[int] | None = None, position: str = "top",
               order: MonomialOrder | None = None) -> GroebnerBasis:
    """Gröbner basis of the ideal or submodule spanned by ``gens``.

    ``gens`` is a list of polynomials (an ideal) or of equal-length sequences
    of polynomials (a submodule of ``S^rank``).
    """
    gens = list(gens)
    is_ideal = rank is None and all(isinstance(g, Polynomial) for g in gens)
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring if is_ideal else next(f.ring for g in gens for f in g)
    order = order or ring.order
    if is_ideal:
        rank = 1
        vecs = [poly_dict(g) for g in gens if g]
    else:
        rank = rank if rank is not None else len(gens[0])
        for g in gens:
            if len(g) != rank:
                raise ValueError("generators live in different free modules")
        vecs = [v for v in (to_vector(g) for g in gens) if v]
    tw = list(twists) if twists is not None else None
    engine = Engine(TermOrder(order, tw, position=position), ring.field.characteristic,
                    product_criterion=is_ideal)
    degrees = None
    if all(homogeneous_degree(f) is not MIXED for g in gens for f in ([g] if is_ideal else g)):
        try:
            degrees = [engine.order.degree(max(v, key=engine.keys.__getitem__)) for v in vecs]
            if not is_ideal:
                for g in gens:
                    column_degree(g, tw or [0] * rank)
        except ValueError:
            degrees = None
    _run(engine, vecs, degrees)
    return GroebnerBasis(ring, rank, engine, is_ideal=is_ideal)


def normal_form(f, gb: GroebnerBasis):
    return gb.normal_form(f)


# -- ideals ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Ideal:
    """Ideal of ``S`` given by generators.  Compare with :func:`ideals_equal`."""

    ring: PolynomialRing
    gens: tuple[Polynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(g for g in (self.ring(g) for g in self.gens) if g))

    @classmethod
    def of(cls, ring, gens) -> Ideal:
        if isinstance(ring, QuotientRing):
            ring = ring.base
        return cls(ring, tuple(ring(g) for g in gens))

    @cached_property
    def gb(self) -> GroebnerBasis:
        return buchberger(list(self.gens), ring=self.ring)

    def reduce(self, f: Polynomial) -> Polynomial:
        if not self.gens:
            return f
        return self.gb.normal_form(f)

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        if not self.gens:
            return False
        return self.gb.contains(f)

    def contains_ideal(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.gens)

    def is_unit(self) -> bool:
        return bool(self.gens) and self.gb.is_unit()

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def basis_gens(self) -> tuple[Polynomial, ...]:
        """Generators of the reduced Gröbner basis (same ideal, usually fewer)."""
        return self.gb.elements if self.gens else ()

    def __add__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, self.gens + tuple(other.gens))

    def __mul__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, tuple(a * b for a in self.gens for b in other.gens))

    def radical_contains(self, f: Polynomial) -> bool:
        return radical_membership(f, self)

    @cached_property
    def _radical_memo(self) -> dict:
        return {}

    def __str__(self):
        return "(" + (", ".join(map(str, self.gens)) or "0") + ")"

    def __repr__(self):
        return f"Ideal{self}"


def ideal_membership(f: Polynomial, J: Ideal) -> bool:
    return J.contains(f)


def ideals_equal(J: Ideal, K: Ideal) -> bool:
    return J.contains_ideal(K) and K.contains_ideal(J)


def _monomial_radical_contains(f: Polynomial, J: Ideal) -> bool:
    supports = [frozenset(i for i, a in enumerate(g.lead_exps()) if a) for g in J.gens]
    for e in f.terms:
        s = {i for i, a in enumerate(e) if a}
        if not any(t <= s for t in supports):
            return False
    return True


def radical_membership(f: Polynomial, J: Ideal) -> bool:
    """``f`` in the radical of ``J``, via ``1 in J + (1 - t f)`` in ``S[t]``."""
    if not f or J.contains(f):
        return True
    if not J.gens:
        return False
    memo = J._radical_memo
    if f in memo:
        return memo[f]
    if J.is_monomial():
        result = _monomial_radical_contains(f, J)
    else:
        result = _rabinowitsch(f, J)
    memo[f] = result
    return result


def _rabinowitsch(f: Polynomial, J: Ideal) -> bool:
    ring = J.ring
    p = ring.field.characteristic
    order = TermOrder(MonomialOrder("grevlex"))
    engine = Engine(order, p, product_criterion=True, stop_on_unit=True)
    try:
        for v in J.gb.vectors:
            engine.add_known({m + (0,): c for m, c in v.items()})
        one = (0,) * (ring.nvars + 2)
        g = {one: 1}
        minus = (p - 1) if p else -1
        for e, c in f.terms.items():
            g[(0,) + e + (1,)] = (minus * c) % p if p else minus * c
        engine.add_generator(g)
        engine.process()
    except UnitFound:
        return True
    return False


def ideal_intersection(J: Ideal, K: Ideal) -> Ideal:
    """``J ∩ K`` by eliminating ``t`` from ``t J + (1 - t) K``."""
    ring = J.ring
    if not J.gens or not K.gens:
        return Ideal(ring, ())
    p = ring.field.characteristic
    order = TermOrder(MonomialOrder("grevlex", eliminate=1))
    engine = Engine(order, p, product_criterion=True)
    vecs = []
    for g in J.gens:
        vecs.append({(0, 1) + e: c for e, c in g.terms.items()})
    minus = (p - 1) if p else -1
    for h in K.gens:
        v = {}
        for e, c in h.terms.items():
            v[(0, 0) + e] = c
            v[(0, 1) + e] = (minus * c) % p if p else minus * c
        vecs.append(v)
    _run(engine, vecs)
    gens = []
    for v in engine.reduced_basis():
        if all(m[1] == 0 for m in v):
            gens.append(Polynomial(ring, {m[2:]: c for m, c in v.items()}))
    return Ideal(ring, tuple(gens))


def intersect_many(ideals: Sequence[Ideal]) -> Ideal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("empty intersection")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = ideal_intersection(acc, J)
    return acc


def ideal_quotient(J: Ideal, f: Polynomial) -> Ideal:
    """``(J : f)`` computed as ``(J ∩ (f)) / f``."""
    if not f:
        raise ZeroDivisionError("colon by the zero polynomial")
    meet = ideal_intersection(J, Ideal(J.ring, (f,)))
    return Ideal(J.ring, tuple(g.divide_exact(f) for g in meet.gens))


def annihilator_of_ideal_mod(J_list: Sequence[Polynomial], ring: QuotientRing) -> Ideal:
    """Preimage in ``S`` of ``(0 :_R J R)``, i.e. the intersection of ``(I : g)``."""
    J_list = [ring(g) for g in J_list]
    if not J_list:
        raise ValueError("empty generator list")
    I = ring.ideal
    parts = [I if not I.reduce(g) else ideal_quotient(I, g) for g in J_list]
    parts = [P for P in parts if P is not I] or [Ideal(ring.base, (ring.base.one(),))]
    return intersect_many(parts) + I


# -- syzygies over R ---------------------------------------------------------

@dataclass
class ModuleStep:
    """Result of one tracked Gröbner computation over ``R``.

    ``kept`` indexes the input columns that are minimal generators of their
    span; ``syzygies`` are kernel generators in those kept coordinates (with
    their degrees); ``leads`` are the leading monomials of the image's
    Gröbner basis, including the ``I`` part.
    """

    kept: list[int]
    syzygies: list[tuple[tuple[Polynomial, ...], int]]
    leads: list[tuple]


def module_step(columns: Sequence[Sequence[Polynomial]], qring: QuotientRing, row_twists: Sequence[int],
                *, track: bool = True, prune: bool = True) -> ModuleStep:
    """Gröbner basis of ``span(columns) + I R^r`` with syzygy tracking.

    Columns are inserted by increasing degree after all S-pairs of lower or
    equal degree are reduced, so a column whose main part reduces to zero is
    redundant and, with ``prune``, is dropped.
    """
    base = qring.base
    r = len(row_twists)
    n = len(columns)
    degs = []
    for col in columns:
        d = column_degree(col, row_twists)
        degs.append(d)
    twists = list(row_twists) + [d if d is not None else 0 for d in degs]
    order = TermOrder(base.order, twists, boundary=r if track else None)
    engine = Engine(order, base.field.characteristic)
    I = qring.ideal
    if I.gens:
        for g in I.gb.vectors:
            for k in range(r):
                engine.add_known({(k,) + m[1:]: c for m, c in g.items()})
    zero = (0,) * base.nvars
    kept = []
    order_idx = sorted((j for j in range(n) if degs[j] is not None), key=lambda j: degs[j])
    for j in order_idx:
        v = to_vector(columns[j])
        if track:
            v[(r + j,) + zero] = 1
        engine.process(upto=degs[j])
        if engine.add_generator(v, drop_redundant=prune):
            kept.append(j)
        elif not prune:
            kept.append(j)
    engine.process()
    engine.audit()
    kept.sort()
    syz = []
    if track:
        pos = {j: i for i, j in enumerate(kept)}
        for s in engine.syzygies:
            parts: list[dict] = [{} for _ in kept]
            for m, c in s.items():
                parts[pos[m[0] - r]][m[1:]] = c
            entries = tuple(I.reduce(Polynomial(base, t)) for t in parts)
            if any(entries):
                syz.append((entries, order.degree(max(s, key=engine.keys.__getitem__))))
    leads = [engine.leads[i] for i in engine.alive_indices()]
    return ModuleStep(kept, syz, leads)


def syzygy_basis(columns: Sequence[Sequence[Polynomial]], qring: QuotientRing,
                 row_twists: Sequence[int] | None = None) -> list[tuple[Polynomial, ...]]:
    """Generators of ``ker(R^n -> R^r, e_j -> columns[j])``, as columns of length ``n``.

    All input columns are kept (no pruning), so the result is indexed by the
    original columns.
    """
    columns = [tuple(qring(f) for f in col) for col in columns]
    if not columns:
        return []
    r = len(columns[0])
    if row_twists is None:
        from .resolution import infer_row_twists

        row_twists = infer_row_twists(columns, r)
    zero_cols = [j for j, c in enumerate(columns) if not any(qring.reduce(f) for f in c)]
    live = [j for j in range(len(columns)) if j not in zero_cols]
    step = module_step([columns[j] for j in live], qring, row_twists, prune=False)
    n = len(columns)
    base = qring.base
    out = []
    for j in zero_cols:
        e = [base.zero()] * n
        e[j] = base.one()
        out.append(tuple(e))
    for entries, _ in step.syzygies:
        full = [base.zero()] * n
        for i, j in enumerate(live):
            full[j] = entries[i]
        out.append(tuple(full))
    return out
