"""Minimal graded free resolutions over ``R = S/I``.

A module is always given by a presentation ``M = coker(R^c -> R^r)``.  The
``i``-th syzygy module is ``Omega_i(M) = coker(delta_{i+1})``, so
``Omega_0 = M``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence

from .config import ResourceLimitExceeded
from .groebner import column_degree, module_step
from .ring import MIXED, MonomialOrder, Polynomial, QuotientRing, homogeneous_degree

__all__ = [
    "ModulePresentation",
    "Resolution",
    "BettiSequence",
    "infer_row_twists",
    "minimalize_presentation",
    "resolve",
    "betti_sequence",
    "graded_betti",
    "syzygy_presentation",
]


def infer_row_twists(columns: Sequence[Sequence[Polynomial]], nrows: int) -> tuple[int, ...]:
    """Row degrees making every column homogeneous, normalised to minimum 0 per block."""
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(nrows)}
    for col in columns:
        entries = []
        for i, f in enumerate(col):
            d = homogeneous_degree(f)
            if d is None:
                continue
            if d is MIXED:
                raise ValueError(f"entry {f} is not homogeneous")
            entries.append((i, d))
        for (a, da), (b, db) in zip(entries, entries[1:]):
            # t_a + da == t_b + db
            adj[a].append((b, da - db))
            adj[b].append((a, db - da))
    tw: dict[int, int] = {}
    for start in range(nrows):
        if start in tw:
            continue
        block = {start: 0}
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b, delta in adj[a]:
                want = block[a] + delta
                if b in block:
                    if block[b] != want:
                        raise ValueError("presentation is not homogeneous for any choice of row degrees")
                else:
                    block[b] = want
                    queue.append(b)
        low = min(block.values())
        for k, v in block.items():
            tw[k] = v - low
    return tuple(tw[i] for i in range(nrows))


@dataclass(frozen=True, eq=False)
class ModulePresentation:
    """``M = coker(R^c -> R^r)``; ``columns[j]`` is the image of the ``j``-th basis vector.

    Entries are stored reduced modulo ``I``.  ``row_twists[i]`` is the degree
    of the ``i``-th generator of ``R^r``.
    """

    ring: QuotientRing
    columns: tuple[tuple[Polynomial, ...], ...]
    nrows: int
    row_twists: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        ring = self.ring
        raw = tuple(tuple(ring(f) for f in col) for col in self.columns)
        for col in raw:
            if len(col) != self.nrows:
                raise ValueError("column length does not match the number of rows")
        # degrees come from the entries as written, before any vanish modulo I
        tw = self.row_twists
        if tw is None:
            tw = infer_row_twists(raw, self.nrows)
        elif len(tw) != self.nrows:
            raise ValueError("need one twist per row")
        object.__setattr__(self, "row_twists", tuple(tw))
        for col in raw:
            column_degree(col, self.row_twists)
        object.__setattr__(self, "columns", tuple(tuple(ring.reduce(f) for f in col) for col in raw))

    @classmethod
    def from_rows(cls, ring: QuotientRing, rows, row_twists=None, ncols: int | None = None):
        rows = [[ring(f) for f in row] for row in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        cols = tuple(tuple(rows[i][j] for i in range(len(rows))) for j in range(ncols))
        return cls(ring, cols, len(rows), row_twists)

    @classmethod
    def cyclic(cls, ring: QuotientRing, gens) -> ModulePresentation:
        """``R / (gens)``."""
        return cls.from_rows(ring, [[ring(g) for g in gens]], (0,))

    @classmethod
    def free(cls, ring: QuotientRing, rank: int = 1, twists=None) -> ModulePresentation:
        return cls(ring, (), rank, tuple(twists) if twists is not None else (0,) * rank)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def matrix(self) -> tuple[tuple[Polynomial, ...], ...]:
        return tuple(tuple(col[i] for col in self.columns) for i in range(self.nrows))

    def column_degrees(self) -> tuple[int, ...]:
        out = []
        for col in self.columns:
            d = column_degree(col, self.row_twists)
            out.append(d if d is not None else min(self.row_twists, default=0))
        return tuple(out)

    def has_unit_entry(self) -> bool:
        return any(f and f.is_constant() for col in self.columns for f in col)

    def __str__(self):
        rows = self.matrix
        if not rows:
            return f"0 x {self.ncols} matrix"
        cells = [[str(f) for f in row] for row in rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _echelon_same_degree(cols, twists, ring):
    """Reduced echelon form of equal-degree columns over the coefficient field."""
    order = ring.base.order
    fld = ring.field
    p = fld.characteristic
    base = ring.base
    vecs = [{(k, e): c for k, f in enumerate(col) for e, c in f.terms.items()} for col in cols]
    nrows = len(twists)

    def key(t):
        k, e = t
        bk = order.key(e)
        if order.kind == "grevlex":
            bk = (bk[0] + twists[k],) + bk[1:]
        return bk + (-k,)

    pivots: list[tuple] = []
    rows: list[dict] = []
    for v in vecs:
        v = dict(v)
        for piv, row in zip(pivots, rows):
            c = v.get(piv)
            if c:
                for t, a in row.items():
                    w = v.get(t, 0) - c * a
                    if p:
                        w %= p
                    if w:
                        v[t] = w
                    else:
                        v.pop(t, None)
        if not v:
            continue
        piv = max(v, key=key)
        inv = fld.inv(v[piv])
        v = {t: (a * inv % p if p else a * inv) for t, a in v.items()}
        for row in rows:
            c = row.get(piv)
            if c:
                for t, a in v.items():
                    w = row.get(t, 0) - c * a
                    if p:
                        w %= p
                    if w:
                        row[t] = w
                    else:
                        row.pop(t, None)
        pivots.append(piv)
        rows.append(v)
    out = []
    for piv, row in sorted(zip(pivots, rows), key=lambda t: key(t[0])):
        parts: list[dict] = [{} for _ in range(nrows)]
        for (k, e), a in row.items():
            parts[k][e] = a
        out.append(tuple(Polynomial(base, t) for t in parts))
    return out


def canonical_columns(columns, twists, ring: QuotientRing):
    """Columns grouped by degree, each group in reduced echelon form (pivot coefficient 1)."""
    groups: dict[int, list] = {}
    for col in columns:
        d = column_degree(col, twists)
        if d is not None:
            groups.setdefault(d, []).append(col)
    out = []
    for d in sorted(groups):
        out.extend(_echelon_same_degree(groups[d], twists, ring))
    return out


def minimalize_presentation(M: ModulePresentation) -> ModulePresentation:
    """Pivot away every unit entry; the cokernel is unchanged.

    A unit in row ``i``, column ``j`` lets row ``i``'s generator be solved
    for, so both are deleted after clearing the rest of row ``i``.  The
    result has all entries in the homogeneous maximal ideal.
    """
    ring = M.ring
    fld = ring.field
    cols = [list(c) for c in M.columns]
    rows = list(range(M.nrows))
    twists = list(M.row_twists)
    while True:
        pivot = None
        for j, col in enumerate(cols):
            for i, f in enumerate(col):
                if f and f.is_constant():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        u_inv = fld.inv(cols[j][i].constant_term())
        pcol = cols[j]
        for k, col in enumerate(cols):
            if k == j or not col[i]:
                continue
            coef = col[i].scale(u_inv)
            cols[k] = [ring.reduce(a - coef * b) for a, b in zip(col, pcol)]
        del cols[j]
        for col in cols:
            del col[i]
        del rows[i]
        del twists[i]
    cols = [c for c in cols if any(c)]
    return ModulePresentation(ring, tuple(tuple(c) for c in cols), len(twists), tuple(twists))


@dataclass(frozen=True)
class BettiSequence:
    values: tuple[int, ...]
    terminated: bool

    def __getitem__(self, i: int) -> int:
        if i < len(self.values):
            return self.values[i]
        if self.terminated:
            return 0
        raise IndexError(f"Betti number {i} is beyond the computed window")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return " ".join(map(str, self.values))


@dataclass(frozen=True, eq=False)
class Resolution:
    """Differentials ``delta_1 .. delta_k`` of a minimal graded free resolution.

    ``differentials[i]`` is ``delta_{i+1}``, stored as the presentation of
    ``Omega_i``.  ``terminated`` means the last differential has no columns,
    so the resolution is complete; otherwise it was cut at ``window``.
    ``image_leads[i]`` holds the leading monomials of a Gröbner basis of
    ``im(delta_{i+1}) + I F_i``.
    """

    ring: QuotientRing
    differentials: tuple[ModulePresentation, ...]
    terminated: bool
    window: int
    image_leads: tuple[tuple[tuple, ...], ...] = ()

    def __len__(self):
        return len(self.differentials)

    def delta(self, i: int) -> ModulePresentation:
        """``delta_i`` for ``i >= 1``."""
        return self.differentials[i - 1]

    def twists(self, i: int) -> tuple[int, ...]:
        """Generator degrees of ``F_i``."""
        if i == 0:
            return self.differentials[0].row_twists
        return self.differentials[i - 1].column_degrees()


def resolve(M: ModulePresentation, N: int) -> Resolution:
    """Minimal graded resolution of ``M`` through ``delta_N``.

    ``delta_1`` is the minimalized presentation; each later differential
    collects kernel generators of the previous one, and the Gröbner pass on
    the next step drops any that are redundant.
    """
    if N < 0:
        raise ValueError("window must be non-negative")
    ring = M.ring
    current = minimalize_presentation(M)
    current = ModulePresentation(ring, tuple(canonical_columns(current.columns, current.row_twists, ring)),
                                 current.nrows, current.row_twists)
    diffs: list[ModulePresentation] = []
    leads = []
    terminated = False
    for i in range(1, N + 1):
        try:
            step = module_step(current.columns, ring, current.row_twists, track=i < N)
        except ResourceLimitExceeded as exc:
            exc.homological_degree = i
            raise
        delta = ModulePresentation(ring, tuple(current.columns[j] for j in step.kept),
                                   current.nrows, current.row_twists)
        diffs.append(delta)
        leads.append(tuple(step.leads))
        if delta.ncols == 0:
            terminated = True
            break
        if i == N:
            break
        tw = delta.column_degrees()
        cols = canonical_columns([c for c, _ in step.syzygies], tw, ring)
        current = ModulePresentation(ring, tuple(cols), delta.ncols, tw)
    if N == 0:
        diffs = [current]
    return Resolution(ring, tuple(diffs), terminated, N, tuple(leads))


def betti_sequence(res: Resolution) -> BettiSequence:
    if not res.differentials:
        return BettiSequence((), res.terminated)
    values = [res.differentials[0].nrows] + [d.ncols for d in res.differentials]
    if res.window == 0:
        values = values[:1]
    return BettiSequence(tuple(values), res.terminated)


def graded_betti(res: Resolution) -> dict[tuple[int, int], int]:
    """``{(i, j): beta_ij}`` from the generator degrees of each free module."""
    table: Counter = Counter()
    n = len(res.differentials) if res.window else 0
    for i in range(n + 1):
        for d in res.twists(i):
            table[(i, d)] += 1
    return dict(table)


def syzygy_presentation(res: Resolution, i: int) -> ModulePresentation:
    """Presentation of ``Omega_i = coker(delta_{i+1})``."""
    if i < 0:
        raise IndexError("negative syzygy index")
    if i < len(res.differentials) and res.window:
        return res.differentials[i]
    if res.terminated:
        return ModulePresentation(res.ring, (), 0, ())
    raise IndexError(f"Omega_{i} needs delta_{i + 1}, beyond the computed window {res.window}")
