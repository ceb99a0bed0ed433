"""Graded Betti numbers by linear algebra on graded pieces.

This is an independent check on :func:`syzdim.resolution.resolve`: it uses
no Gröbner bases.  Each graded piece ``R_e`` gets a monomial basis from the
row-reduced span of ``I_e``; kernels and minimal generators are then found
degree by degree with plain Gaussian elimination over the coefficient field.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .resolution import ModulePresentation, Resolution, betti_sequence

__all__ = ["OracleResult", "Comparison", "graded_betti_oracle", "compare_with_resolution"]


class _Field:
    def __init__(self, p: int):
        self.p = p

    def norm(self, a):
        return a % self.p if self.p else a

    def inv(self, a):
        return pow(a, -1, self.p) if self.p else Fraction(1) / a


def _axpy(f: dict, g: dict, c, fld: _Field) -> None:
    """``f += c * g`` in place."""
    for k, v in g.items():
        w = fld.norm(f.get(k, 0) + c * v)
        if w:
            f[k] = w
        else:
            f.pop(k, None)


class _Echelon:
    """Row-echelon span of sparse vectors; each row's pivot is its largest key."""

    def __init__(self, fld: _Field):
        self.fld = fld
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        while v:
            c = max(v)
            row = self.rows.get(c)
            if row is None:
                return v
            _axpy(v, row, -v[c], self.fld)
        return v

    def insert(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        c = max(r)
        inv = self.fld.inv(r[c])
        self.rows[c] = {k: self.fld.norm(a * inv) for k, a in r.items()}
        return True


class _Graded:
    """Monomial bases and normal forms of ``R_e = S_e / I_e``."""

    def __init__(self, ring, fld: _Field):
        self.ring = ring
        self.fld = fld
        self.n = ring.nvars
        self.gens = [(g.total_degree(), dict(g.terms)) for g in ring.ideal_gens]
        self._rref: dict[int, dict] = {}
        self._basis: dict[int, list] = {}

    def monomials(self, e: int) -> list[tuple]:
        out = []
        for combo in combinations_with_replacement(range(self.n), e):
            exps = [0] * self.n
            for v in combo:
                exps[v] += 1
            out.append(tuple(exps))
        return out

    def _ideal_part(self, e: int) -> dict:
        """Fully reduced rows spanning ``I_e``, keyed by pivot monomial."""
        if e in self._rref:
            return self._rref[e]
        fld = self.fld
        ech = _Echelon(fld)
        if e > 0:
            for row in self._ideal_part(e - 1).values():
                for v in range(self.n):
                    ech.insert({tuple(a + (i == v) for i, a in enumerate(m)): c for m, c in row.items()})
        for d, g in self.gens:
            if d == e:
                ech.insert(g)
        rows = ech.rows
        # back-substitute so no row contains another row's pivot
        for piv in sorted(rows):
            row = rows[piv]
            for other in rows.values():
                if other is not row and piv in other:
                    _axpy(other, row, -other[piv], fld)
        self._rref[e] = rows
        return rows

    def basis(self, e: int) -> list[tuple]:
        if e < 0:
            return []
        if e not in self._basis:
            piv = self._ideal_part(e)
            self._basis[e] = [m for m in self.monomials(e) if m not in piv]
        return self._basis[e]

    def nf_monomial(self, m: tuple) -> dict:
        rows = self._ideal_part(sum(m))
        row = rows.get(m)
        if row is None:
            return {m: 1}
        return {k: self.fld.norm(-c) for k, c in row.items() if k != m}

    def times(self, mono: tuple, poly: dict) -> dict:
        """Normal form of ``mono * poly`` (``poly`` homogeneous)."""
        out: dict = {}
        for m, c in poly.items():
            prod = tuple(a + b for a, b in zip(mono, m))
            _axpy(out, self.nf_monomial(prod), c, self.fld)
        return out


@dataclass
class _Layer:
    """Free module with generator degrees and images in the previous free module."""

    twists: list[int]
    images: list[dict]  # coordinate (row, monomial) -> coeff


def _vec_times(gr: _Graded, mono: tuple, vec: dict) -> dict:
    out: dict = {}
    by_row: dict[int, dict] = {}
    for (k, m), c in vec.items():
        by_row.setdefault(k, {})[m] = c
    for k, poly in by_row.items():
        for m, c in gr.times(mono, poly).items():
            out[(k, m)] = c
    return out


def _free_basis(gr: _Graded, twists, d):
    return [(k, b) for k, t in enumerate(twists) for b in gr.basis(d - t)]


def _image(gr: _Graded, layer: _Layer, coord) -> dict:
    k, b = coord
    return _vec_times(gr, b, layer.images[k])


def _kernel(gr: _Graded, layer: _Layer, d: int, target: _Echelon | None) -> list[dict]:
    """Basis of the degree-``d`` kernel of ``layer -> (previous)/target``."""
    fld = gr.fld
    pivots: dict = dict(target.rows) if target is not None else {}
    tracked: dict = {}
    kernel = []
    for coord in _free_basis(gr, layer.twists, d):
        img = _image(gr, layer, coord)
        track = {coord: 1}
        while img:
            c = max(img)
            row = pivots.get(c)
            if row is None:
                break
            a = -img[c]
            _axpy(img, row, a, fld)
            t = tracked.get(c)
            if t:
                _axpy(track, t, a, fld)
        if not img:
            kernel.append(track)
            continue
        c = max(img)
        inv = fld.inv(img[c])
        pivots[c] = {k: fld.norm(a * inv) for k, a in img.items()}
        tracked[c] = {k: fld.norm(a * inv) for k, a in track.items()}
    return kernel


def _shift_up(gr: _Graded, vecs: list[dict]) -> list[dict]:
    """All products ``x_v * vec``."""
    out = []
    for vec in vecs:
        for v in range(gr.n):
            unit = tuple(int(i == v) for i in range(gr.n))
            out.append(_vec_times(gr, unit, vec))
    return out


def _minimal_generators(gr: _Graded, lower: list[dict], current: list[dict]) -> list[dict]:
    """Vectors of ``current`` completing a basis of ``span(m * lower)``."""
    ech = _Echelon(gr.fld)
    for v in _shift_up(gr, lower):
        ech.insert(v)
    return [v for v in current if ech.insert(v)]


@dataclass
class OracleResult:
    """Graded Betti numbers ``beta[(i, j)]`` for ``i <= hom_bound``, ``j <= degree_bound``.

    ``certified`` is false when the presentation itself has generators or
    relations above ``degree_bound``, so even ``beta_0`` may be incomplete.
    """

    degree_bound: int
    hom_bound: int
    graded: dict[tuple[int, int], int] = field(default_factory=dict)
    certified: bool = True
    reason: str = ""

    def totals(self) -> tuple[int, ...]:
        out = [0] * (self.hom_bound + 1)
        for (i, _), b in self.graded.items():
            out[i] += b
        return tuple(out)


def graded_betti_oracle(M: ModulePresentation, degree_bound: int, hom_bound: int) -> OracleResult:
    ring = M.ring
    D, H = degree_bound, hom_bound
    result = OracleResult(D, H)
    fld = _Field(ring.field.characteristic)
    gr = _Graded(ring, fld)
    twists = list(M.row_twists)
    col_degs = [_column_degree(col, twists) for col in M.columns]
    high = [t for t in twists if t > D] + [c for c in col_degs if c is not None and c > D]
    if high:
        result.certified = False
        result.reason = f"presentation has degrees up to {max(high)} > bound {D}"
    if M.nrows == 0:
        return result
    start = min(twists)
    graded: Counter = Counter()

    # step 0: minimal generators of M = G / W
    G = _Layer(twists, [{(k, (0,) * gr.n): 1} for k in range(len(twists))])
    A = _Layer([c if c is not None else 0 for c in col_degs],
               [{(k, m): c for k, f in enumerate(col) for m, c in f.terms.items()} for col in M.columns])
    W: dict[int, _Echelon] = {}
    gens0: list[tuple[int, dict]] = []
    for d in range(start, D + 1):
        ech = _Echelon(fld)
        for j, col in enumerate(M.columns):
            if col_degs[j] is None:
                continue
            for b in gr.basis(d - col_degs[j]):
                ech.insert(_vec_times(gr, b, A.images[j]))
        W[d] = ech
        span = _Echelon(fld)
        span.rows = dict(ech.rows)
        for v in _shift_up(gr, [{c: 1} for c in _free_basis(gr, G.twists, d - 1)]):
            span.insert(v)
        for coord in _free_basis(gr, G.twists, d):
            if span.insert({coord: 1}):
                gens0.append((d, {coord: 1}))
                graded[(0, d)] += 1
    layer = _Layer([d for d, _ in gens0], [v for _, v in gens0])
    target: dict[int, _Echelon] | None = W

    for i in range(1, H + 1):
        if not layer.twists:
            break
        prev: list[dict] = []
        new: list[tuple[int, dict]] = []
        for d in range(min(layer.twists), D + 1):
            ker = _kernel(gr, layer, d, target[d] if target is not None else None)
            for v in _minimal_generators(gr, prev, ker):
                new.append((d, v))
                graded[(i, d)] += 1
            prev = ker
        layer = _Layer([d for d, _ in new], [v for _, v in new])
        target = None
    result.graded = dict(graded)
    return result


def _column_degree(col, twists):
    for k, f in enumerate(col):
        if f:
            return f.total_degree() + twists[k]
    return None


@dataclass
class Comparison:
    """Outcome of checking an oracle table against a computed resolution.

    ``status`` is ``"equal"``, ``"discrepancy"`` or ``"uncertified"``.
    ``compared_totals`` lists homological degrees whose totals were comparable.
    """

    status: str
    oracle_totals: tuple[int, ...]
    resolve_totals: tuple[int, ...]
    compared_totals: tuple[int, ...]
    discrepancies: list[str]


def compare_with_resolution(oracle: OracleResult, res: Resolution) -> Comparison:
    """Graded entries with ``j <= D`` must match; totals are compared for each ``i``
    whose free module in ``res`` has all generators in degree ``<= D``."""
    D = oracle.degree_bound
    betti = betti_sequence(res)
    known = oracle.hom_bound if betti.terminated else min(oracle.hom_bound, len(betti) - 1)

    def twists(i):
        return res.twists(i) if i < len(betti) and betti[i] else ()

    table: Counter = Counter()
    for i in range(known + 1):
        for t in twists(i):
            table[(i, t)] += 1
    problems = []
    for i in range(known + 1):
        for j in range(D + 1):
            a, b = oracle.graded.get((i, j), 0), table.get((i, j), 0)
            if a != b:
                problems.append(f"beta_{i},{j}: oracle {a}, resolve {b}")
    compared = tuple(i for i in range(known + 1) if all(t <= D for t in twists(i)))
    otot = oracle.totals()
    for i in compared:
        if otot[i] != betti[i]:
            problems.append(f"beta_{i}: oracle {otot[i]}, resolve {betti[i]}")
    if problems:
        status = "discrepancy"
    elif not oracle.certified:
        status = "uncertified"
    else:
        status = "equal"
    return Comparison(status, otot, tuple(betti[i] for i in range(known + 1)), compared, problems)
