"""Buchberger's algorithm on raw sparse vectors.

A vector is a dict ``{mono: coeff}`` where ``mono = (comp, e_1, ..., e_n)``;
ideals use ``comp == 0`` throughout.  Components ``>= boundary`` form a
*tracking block* ranked below every other component, so an element whose
leading term falls there has zero main part: it is a syzygy and is collected
instead of being added to the basis.

Pairs are selected by degree of their lcm (normal strategy) and pruned with
the Gebauer-Möller update.  The product criterion is only valid for ideals
without tracking and must be switched on explicitly.
"""

from __future__ import annotations

import heapq
from itertools import count
from operator import add, le, sub

from .config import ResourceLimitExceeded, current_audit, current_limits
from .ring import MonomialOrder


class TermOrder:
    """Order on module monomials ``(comp, *exps)``.

    ``position="top"`` compares terms first (degree including the component
    twist), then components, lower index ranking higher; ``"pot"`` compares
    components first.
    """

    def __init__(self, base: MonomialOrder, twists=None, boundary=None, position="top"):
        self.base = base
        self.twists = twists
        self.boundary = boundary
        self.position = position

    def degree(self, m) -> int:
        tw = self.twists
        return sum(m[1:]) + (tw[m[0]] if tw else 0)

    def key(self, m) -> tuple:
        comp = m[0]
        bnd = self.boundary
        blk = 1 if bnd is None or comp < bnd else 0
        bk = self.base.key(m[1:])
        tw = self.twists
        if tw and self.base.kind == "grevlex" and not self.base.eliminate:
            bk = (bk[0] + tw[comp],) + bk[1:]
        if self.position == "pot":
            return (blk, -comp) + bk
        return (blk,) + bk + (-comp,)


class _Keys(dict):
    __slots__ = ("fn",)

    def __init__(self, fn):
        super().__init__()
        self.fn = fn

    def __missing__(self, m):
        k = self.fn(m)
        self[m] = k
        return k


class UnitFound(Exception):
    """Raised internally when ``stop_on_unit`` is set and a unit enters the basis."""


def divides(a, b) -> bool:
    return a[0] == b[0] and all(map(le, a, b))


def lcm(a, b):
    return (a[0],) + tuple(map(max, a[1:], b[1:]))


def coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a[1:], b[1:]))


class Engine:
    """Incremental Gröbner basis of a submodule of ``S^r`` (optionally tracked)."""

    def __init__(self, order: TermOrder, p: int, *, product_criterion=False, stop_on_unit=False):
        self.order = order
        self.keys = _Keys(order.key)
        self.p = p
        self.product_criterion = product_criterion
        self.stop_on_unit = stop_on_unit
        self.boundary = order.boundary
        self.basis: list[dict] = []
        self.leads: list[tuple] = []
        self.alive: list[bool] = []
        self.by_comp: dict[int, list[int]] = {}
        self.pairs: dict[tuple[int, int], tuple] = {}
        self.heap: list = []
        self._tiebreak = count()
        self.syzygies: list[dict] = []
        self.pairs_done = 0
        lim = current_limits()
        self.pair_cap = lim.pair_cap
        self.degree_cap = lim.degree_cap

    # -- arithmetic ----------------------------------------------------------
    def inv(self, c):
        return pow(c, -1, self.p) if self.p else 1 / c

    def lead(self, f):
        return max(f, key=self.keys.__getitem__)

    def in_tracking(self, m) -> bool:
        return self.boundary is not None and m[0] >= self.boundary

    def axpy(self, f: dict, g: dict, c, shift) -> None:
        """``f += c * x^shift * g`` in place."""
        p = self.p
        get = f.get
        if any(shift):
            for m, v in g.items():
                k = tuple(map(add, m, shift))
                w = get(k, 0) + c * v
                if p:
                    w %= p
                if w:
                    f[k] = w
                else:
                    del f[k]
        else:
            for k, v in g.items():
                w = get(k, 0) + c * v
                if p:
                    w %= p
                if w:
                    f[k] = w
                else:
                    del f[k]

    def normalize(self, f: dict) -> dict:
        c = self.inv(f[self.lead(f)])
        p = self.p
        if c == 1:
            return f
        return {m: (v * c % p if p else v * c) for m, v in f.items()}

    def find_reducer(self, m):
        for i in self.by_comp.get(m[0], ()):
            if self.alive[i] and divides(self.leads[i], m):
                return i
        return None

    def top_reduce(self, f: dict) -> dict:
        """Reduce the leading term until it is irreducible or lies in the tracking block."""
        f = dict(f)
        p = self.p
        while f:
            m = self.lead(f)
            if self.in_tracking(m):
                return f
            i = self.find_reducer(m)
            if i is None:
                return f
            c = f[m]
            self.axpy(f, self.basis[i], (-c % p) if p else -c, tuple(map(sub, m, self.leads[i])))
        return f

    def full_reduce(self, f: dict) -> dict:
        """Remainder with no term divisible by a basis lead."""
        f = dict(f)
        out = {}
        p = self.p
        keys = self.keys
        while f:
            m = max(f, key=keys.__getitem__)
            i = self.find_reducer(m)
            if i is None:
                out[m] = f.pop(m)
                continue
            c = f[m]
            self.axpy(f, self.basis[i], (-c % p) if p else -c, tuple(map(sub, m, self.leads[i])))
        return out

    def spoly(self, i: int, j: int) -> dict:
        li, lj = self.leads[i], self.leads[j]
        L = lcm(li, lj)
        s = {}
        p = self.p
        self.axpy(s, self.basis[i], 1, tuple(map(sub, L, li)))
        self.axpy(s, self.basis[j], (p - 1) if p else -1, tuple(map(sub, L, lj)))
        return s

    # -- basis maintenance ---------------------------------------------------
    def _append(self, g: dict) -> int:
        g = self.normalize(g)
        idx = len(self.basis)
        m = self.lead(g)
        self.basis.append(g)
        self.leads.append(m)
        self.alive.append(True)
        self.by_comp.setdefault(m[0], []).append(idx)
        if self.stop_on_unit and not any(m[1:]):
            raise UnitFound
        return idx

    def add_known(self, g: dict) -> int:
        """Add an element of an already-Gröbner family; no pairs are formed with it."""
        return self._append(g)

    def insert(self, g: dict) -> int:
        """Add a reduced element and update the pair set (Gebauer-Möller)."""
        h = self._append(g)
        lh = self.leads[h]
        comp = lh[0]
        prod = self.product_criterion
        cands = [(g, lcm(self.leads[g], lh)) for g in self.by_comp[comp] if g != h and self.alive[g]]
        kept = []
        for n, (g, L) in enumerate(cands):
            if prod and coprime(self.leads[g], lh):
                kept.append((g, L, True))
                continue
            if any(divides(L2, L) for _, L2 in cands[n + 1:]):
                continue
            if any(divides(L2, L) for _, L2, _ in kept):
                continue
            kept.append((g, L, False))
        pairs = self.pairs
        for (i, j), L in list(pairs.items()):
            if L[0] == comp and divides(lh, L):
                if L != lcm(self.leads[i], lh) and L != lcm(self.leads[j], lh):
                    del pairs[(i, j)]
        deg = self.order.degree
        keys = self.keys
        for g, L, disjoint in kept:
            if disjoint:
                continue
            pairs[(g, h)] = L
            heapq.heappush(self.heap, (deg(L), keys[L], next(self._tiebreak), g, h))
        for g in self.by_comp[comp]:
            if g != h and self.alive[g] and divides(lh, self.leads[g]):
                self.alive[g] = False
        return h

    def next_degree(self):
        while self.heap:
            d, _, _, i, j = self.heap[0]
            if (i, j) in self.pairs:
                return d
            heapq.heappop(self.heap)
        return None

    def process(self, upto=None) -> None:
        """Reduce pending S-pairs of degree ``<= upto`` (all if ``None``)."""
        heap = self.heap
        pairs = self.pairs
        while heap:
            d, _, _, i, j = heap[0]
            if upto is not None and d > upto:
                return
            heapq.heappop(heap)
            if pairs.pop((i, j), None) is None:
                continue
            self.pairs_done += 1
            if self.pairs_done > self.pair_cap:
                raise ResourceLimitExceeded("pair_cap", self.pair_cap, f"{len(self.basis)} basis elements")
            if d > self.degree_cap:
                raise ResourceLimitExceeded("degree_cap", self.degree_cap, f"S-pair of degree {d}")
            r = self.top_reduce(self.spoly(i, j))
            if not r:
                continue
            if self.in_tracking(self.lead(r)):
                self.syzygies.append(r)
                continue
            self.insert(r)

    def add_generator(self, f: dict, *, drop_redundant=False) -> bool:
        """Reduce and insert ``f``; returns False if its main part reduced to zero."""
        r = self.top_reduce(f)
        if not r or self.in_tracking(self.lead(r)):
            if r and not drop_redundant:
                self.syzygies.append(r)
            return False
        self.insert(r)
        return True

    def alive_indices(self) -> list[int]:
        return [i for i, a in enumerate(self.alive) if a]

    def reduced_basis(self) -> list[dict]:
        """Interreduced, monic basis from the alive elements (no tracking)."""
        # alive leads are pairwise non-divisible, so no element reduces its own tail
        idx = sorted(self.alive_indices(), key=lambda i: self.keys[self.leads[i]])
        out = []
        for i in idx:
            g = self.basis[i]
            lead = self.leads[i]
            tail = self.full_reduce({m: v for m, v in g.items() if m != lead})
            tail[lead] = g[lead]
            out.append(self.normalize(tail))
        return out

    def audit(self) -> None:
        """Exhaustively check that every S-pair of alive elements reduces to zero."""
        log = current_audit()
        if log is None:
            return
        idx = self.alive_indices()
        checked = 0
        for a, i in enumerate(idx):
            for j in idx[a + 1:]:
                if self.leads[i][0] != self.leads[j][0]:
                    continue
                checked += 1
                r = self.top_reduce(self.spoly(i, j))
                if r and not self.in_tracking(self.lead(r)):
                    log.failures.append(f"S-pair ({i},{j}) does not reduce to zero")
        log.bases_checked += 1
        log.pairs_checked += checked
