"""Executable checks of the support and dimension statements for syzygies.

Every check runs on a finite window of a minimal resolution.  Statements
about all large ``n`` are reported with an empirical start index and never
fail; statements with finite hypotheses (the lemmas, the quick-switch
proposition, the union-of-supports identity) can fail, which would point
to an engine defect.

Each lemma is also applied to every syzygy ``Omega_s(M)`` in the window,
since those are modules in their own right with resolution the tail of
``M``'s.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import cached_property

from .geometry import (
    EMPTY,
    MinPrimeError,
    PrimeList,
    _radical_subset,
    dim_from_leads,
    height,
    krull_dim,
    min_primes,
    min_primes_containment_check,
    minimal_primes_monomial,
    supp_equal,
    supp_is_full,
    support_handle,
)
from .groebner import Ideal
from .resolution import BettiSequence, ModulePresentation, betti_sequence, resolve, syzygy_presentation
from .ring import QuotientRing

__all__ = [
    "Instance",
    "ClaimVerdict",
    "CheckReport",
    "Analysis",
    "CLAIMS",
    "detect_nondecreasing_start",
    "check_lemma_strict",
    "check_lemma_supp",
    "check_theorem_main",
    "check_corollary_dim",
    "check_lemma_shrink",
    "check_prop_quick",
    "run_checks",
]

REPORT_VERSION = 1
HOLDS, FAILS, VACUOUS, SHORT, SKIPPED = "holds", "fails", "vacuous", "window-too-short", "skipped"
STATUSES = (HOLDS, FAILS, VACUOUS, SHORT, SKIPPED)


@dataclass(frozen=True, eq=False)
class Instance:
    ring: QuotientRing
    module: ModulePresentation
    window: int = 8
    label: str = ""


def detect_nondecreasing_start(b) -> int | None:
    """Least ``n0`` with ``b[i] <= b[i+1]`` for ``n0 <= i < len(b) - 1``.

    ``None`` when even the last step decreases, or when there is no step.
    """
    vals = list(b)
    if len(vals) < 2 or vals[-2] > vals[-1]:
        return None
    n0 = len(vals) - 2
    while n0 > 0 and vals[n0 - 1] <= vals[n0]:
        n0 -= 1
    return n0


def _ideal_str(J: Ideal, limit: int = 6) -> str:
    gens = J.basis_gens() if J.gens else ()
    shown = ", ".join(map(str, gens[:limit]))
    return f"({shown}{', ...' if len(gens) > limit else ''})"


def _dim_str(d) -> str:
    return "empty" if d == EMPTY else str(int(d))


class Analysis:
    """Lazily computed invariants of ``Omega_0 .. Omega_N`` for one instance."""

    def __init__(self, inst: Instance):
        self.inst = inst
        self.ring = inst.ring
        self.N = inst.window
        self.res = resolve(inst.module, self.N + 1)
        self._handles: dict[int, object] = {}
        self._full: dict[int, bool] = {}
        self._eq: dict[tuple[int, int], bool] = {}
        self._touched: dict[int, object] = {}

    @cached_property
    def betti(self) -> BettiSequence:
        return betti_sequence(self.res)

    @property
    def terminated(self) -> bool:
        return self.res.terminated

    def b(self, i: int) -> int:
        return self.betti[i]

    def window_betti(self) -> list[int]:
        """``beta_0 .. beta_N`` (fewer if the resolution ended earlier)."""
        vals = list(self.betti.values[: self.N + 1])
        return vals

    def omega(self, i: int) -> ModulePresentation:
        return syzygy_presentation(self.res, i)

    def handle(self, i: int):
        if i not in self._handles:
            self._handles[i] = support_handle(self.omega(i))
        return self._handles[i]

    def dim(self, i: int):
        if i < len(self.res.differentials):
            d = self.res.differentials[i]
            return dim_from_leads(self.res.image_leads[i], d.nrows, self.ring.nvars)
        return EMPTY

    def is_zero(self, i: int) -> bool:
        return self.omega(i).nrows == 0

    def full(self, i: int) -> bool:
        if i not in self._full:
            self._full[i] = not self.is_zero(i) and supp_is_full(self.handle(i))
        return self._full[i]

    def supp_eq(self, i: int, j: int) -> bool:
        key = (min(i, j), max(i, j))
        if key not in self._eq:
            if i == j:
                self._eq[key] = True
            elif self.full(i) or self.full(j):
                self._eq[key] = self.full(i) and self.full(j)
            else:
                self._eq[key] = supp_equal(self.handle(i), self.handle(j))
        return self._eq[key]

    def supp_contained(self, i: int, j: int) -> bool:
        """``supp(Omega_i) ⊆ supp(Omega_j)``."""
        if self.full(j):
            return True
        return _radical_subset(self.handle(j).ideal, self.handle(i).ideal)

    @cached_property
    def dim_R(self):
        return krull_dim(self.ring.ideal)

    @cached_property
    def minn(self) -> PrimeList | None:
        try:
            return min_primes(self.ring)
        except MinPrimeError as exc:
            self.minn_error = str(exc)
            return None

    minn_error = ""

    def minn_reason(self) -> str:
        self.minn
        if self.minn_error:
            return f"declared minimal primes rejected: {self.minn_error}"
        return "minimal primes of R unavailable (non-monomial ideal, none declared)"

    def touched(self, i: int):
        if i not in self._touched:
            self._touched[i] = min_primes_containment_check(self.handle(i), self.minn)
        return self._touched[i]

    def dims(self) -> list:
        return [self.dim(i) for i in range(self.N + 1)]

    def supp_classes(self) -> list[int]:
        """Class label per ``Omega_i``: equal labels mean equal supports."""
        reps: list[int] = []
        labels = []
        for i in range(self.N + 1):
            for c, r in enumerate(reps):
                if self.is_zero(i) == self.is_zero(r) and (self.is_zero(i) or self.supp_eq(i, r)):
                    labels.append(c)
                    break
            else:
                reps.append(i)
                labels.append(len(reps) - 1)
        return labels


@dataclass
class ClaimVerdict:
    claim: str
    status: str
    witness: str = ""
    index: int | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


def _combine(claim: str, parts: list[ClaimVerdict], empty: ClaimVerdict) -> ClaimVerdict:
    for status in (FAILS, HOLDS, SHORT, VACUOUS, SKIPPED):
        hits = [p for p in parts if p.status == status]
        if hits:
            if status == FAILS:
                return ClaimVerdict(claim, FAILS, hits[0].witness, hits[0].index)
            return ClaimVerdict(claim, status, "; ".join(h.witness for h in hits if h.witness))
    return empty


# -- individual claims ---------------------------------------------------------

def check_lemma_strict(an: Analysis) -> ClaimVerdict:
    """``beta_i > beta_{i-1}`` forces ``Omega_{i+1}`` to have full support."""
    claim = "strict"
    tested = []
    for i in range(1, an.N):
        if i >= len(an.betti) or an.b(i) <= an.b(i - 1):
            continue
        if not an.full(i + 1):
            return ClaimVerdict(claim, FAILS, f"beta_{i} > beta_{i-1} but supp(Omega_{i+1}) = "
                                f"V{_ideal_str(an.handle(i + 1).ideal)} is not Spec R", i)
        if an.dim(i + 1) != an.dim_R:
            return ClaimVerdict(claim, FAILS, f"dim Omega_{i+1} = {_dim_str(an.dim(i + 1))} "
                                f"!= dim R = {_dim_str(an.dim_R)}", i)
        tested.append(i + 1)
    if not tested:
        return ClaimVerdict(claim, VACUOUS, "no strict increase of Betti numbers in the window")
    return ClaimVerdict(claim, HOLDS, "full support and dim = dim R for Omega_" + ",".join(map(str, tested)))


def _supp_lemma_once(an: Analysis, s: int, n: int) -> ClaimVerdict:
    """The support lemma for ``Omega_s(M)`` and a given ``n``."""
    claim = "supp"
    b = [an.b(s + k) for k in range(2 * n)]
    if any(b[k] > b[k + 1] for k in range(len(b) - 1)):
        return ClaimVerdict(claim, SKIPPED)
    top = s + 2 * n
    if an.is_zero(top) or an.full(top):
        return ClaimVerdict(claim, VACUOUS)
    for i in range(n):
        lo = s + 2 * i
        if an.b(lo) != an.b(lo + 1):
            return ClaimVerdict(claim, FAILS, f"shift {s}, n = {n}: beta_{lo} = {an.b(lo)} != "
                                f"beta_{lo+1} = {an.b(lo + 1)}", lo)
        if not an.supp_contained(lo + 2, lo):
            return ClaimVerdict(claim, FAILS, f"shift {s}, n = {n}: supp(Omega_{lo+2}) not inside "
                                f"supp(Omega_{lo})", lo)
    if an.minn is None:
        return ClaimVerdict(claim, HOLDS, f"shift {s}, n = {n}: (a),(b) hold; (c) skipped")
    t_top, t_low = an.touched(top).touched, an.touched(s).touched
    if t_top != t_low:
        return ClaimVerdict(claim, FAILS, f"shift {s}, n = {n}: minimal primes in supp(Omega_{top}) "
                            f"{list(t_top)} differ from those in supp(Omega_{s}) {list(t_low)}", top)
    return ClaimVerdict(claim, HOLDS, f"shift {s}, n = {n}")


def check_lemma_supp(an: Analysis, n: int | None = None) -> ClaimVerdict:
    """With ``beta_0 <= ... <= beta_{2n-1}`` and ``supp(Omega_{2n})`` not full:
    equal Betti pairs, shrinking even supports, and the same minimal primes.

    ``n=None`` tests every ``n`` and every shift ``Omega_s(M)`` in the window.
    """
    claim = "supp"
    if an.N < 2:
        return ClaimVerdict(claim, SHORT, "window below 2")
    shifts = [0] if n is not None else range(an.N - 1)
    parts = []
    for s in shifts:
        ns = [n] if n is not None else range(1, (an.N - s) // 2 + 1)
        for k in ns:
            if s + 2 * k > an.N:
                continue
            if s + 2 * k - 1 >= len(an.betti) and not an.terminated:
                continue
            parts.append(_supp_lemma_once(an, s, k))
    held = [p for p in parts if p.status == HOLDS]
    verdict = _combine(claim, parts, ClaimVerdict(claim, SHORT, "no (shift, n) fits in the window"))
    if verdict.status == HOLDS:
        verdict.witness = f"{len(held)} (shift, n) cases with hypotheses met, e.g. {held[0].witness}"
    elif verdict.status == VACUOUS:
        verdict.witness = "every even syzygy in reach has full support"
    elif verdict.status == SKIPPED:
        verdict.witness = "Betti numbers never non-decreasing over the needed range"
    return verdict


def _pairs_after(an: Analysis, n0: int) -> list[int]:
    return [n for n in range(n0, an.N - 1)]


def check_theorem_main(an: Analysis) -> ClaimVerdict:
    """Eventual stabilisation: minimal primes of ``Omega_n`` are minimal primes
    of ``R``, supports repeat with period 2, and non-full supports come with
    equal Betti pairs.  Reports the least ``n`` from which all hold in the window."""
    claim = "main"
    if an.terminated:
        return ClaimVerdict(claim, VACUOUS, "finite projective dimension")
    n0 = detect_nondecreasing_start(an.window_betti())
    if n0 is None:
        return ClaimVerdict(claim, SKIPPED, "Betti numbers not eventually non-decreasing in the window")
    ns = _pairs_after(an, n0)
    if len(ns) < 3:
        return ClaimVerdict(claim, SHORT, f"only {len(ns)} support pairs after n0 = {n0}")
    use_minn = an.minn is not None

    def good(n: int) -> bool:
        if not an.supp_eq(n, n + 2):
            return False
        if use_minn and n <= an.N and not an.touched(n).holds:
            return False
        if not an.full(n):
            k = n
            while k + 1 <= an.N + 1 and k + 1 < len(an.betti):
                if an.b(k) != an.b(k + 1):
                    return False
                k += 2
        return True

    start = None
    for n in reversed(ns):
        if not good(n):
            break
        start = n
    if use_minn and start is not None:
        for n in (an.N - 1, an.N):
            if not an.touched(n).holds:
                start = None
    if start is None or an.N - 1 - start < 2:
        return ClaimVerdict(claim, SHORT, f"no stable stretch of 3 support pairs after n0 = {n0}", n0)
    parts = [f"n0 = {n0}", f"stable from n = {start}"]
    if not use_minn:
        parts.append("(a) skipped: " + an.minn_reason())
    else:
        parts.append(f"minn(R) {an.minn.provenance}")
    nf = [n for n in range(start, an.N + 1) if not an.full(n)]
    if nf:
        k = nf[0]
        parts.append(f"non-full supp at n = {k}: beta even = beta odd = {an.b(k)}")
    return ClaimVerdict(claim, HOLDS, "; ".join(parts), start)


def check_corollary_dim(an: Analysis) -> ClaimVerdict:
    """Supports of consecutive syzygies cover Spec R (so one of each pair has
    dimension dim R), and the even and odd dimension sequences stabilise."""
    claim = "dim"
    if an.terminated:
        return ClaimVerdict(claim, VACUOUS, "finite projective dimension")
    for n in range(an.N):
        if an.b(n) == 0:
            continue
        if not (an.full(n) or an.full(n + 1)):
            J = an.handle(n).ideal * an.handle(n + 1).ideal
            if not _radical_subset(J, an.ring.ideal):
                return ClaimVerdict(claim, FAILS, f"supp(Omega_{n}) ∪ supp(Omega_{n+1}) != Spec R", n)
        if max(an.dim(n), an.dim(n + 1)) != an.dim_R:
            return ClaimVerdict(claim, FAILS, f"max(dim Omega_{n}, dim Omega_{n+1}) = "
                                f"{_dim_str(max(an.dim(n), an.dim(n + 1)))} != dim R = {_dim_str(an.dim_R)}", n)
    n0 = detect_nondecreasing_start(an.window_betti())
    if n0 is None:
        return ClaimVerdict(claim, SKIPPED, "Betti numbers not eventually non-decreasing in the window")
    dims = an.dims()
    start = an.N - 1
    while start - 1 >= n0 and dims[start - 1] == dims[start + 1]:
        start -= 1
    # from `start` on, dims[n] == dims[n + 2] throughout the window
    if an.N - start < 3:
        return ClaimVerdict(claim, SHORT, f"dimension sequences not seen stable over 2 periods after n0 = {n0}", n0)
    ev = dims[an.N if an.N % 2 == 0 else an.N - 1]
    od = dims[an.N if an.N % 2 else an.N - 1]
    wit = [f"n0 = {n0}", f"stable from n = {start}", f"even -> {_dim_str(ev)}", f"odd -> {_dim_str(od)}",
           f"dim R = {_dim_str(an.dim_R)}"]
    if an.minn is not None:
        other = min(ev, od)
        top = an.N if dims[an.N] == other else an.N - 1
        t = an.touched(top).touched
        pd = {int(krull_dim(an.minn[j])) for j in t}
        wit.append(f"other value matches dim R/p for touched p: {int(other) in pd}")
    return ClaimVerdict(claim, HOLDS, "; ".join(wit), start)


def _support_min_primes(an: Analysis, i: int):
    """Minimal primes of ``supp(Omega_i)`` when its support ideal is monomial."""
    J = an.handle(i).ideal
    gens = J.basis_gens()
    if not all(g.is_monomial() for g in gens):
        return None
    return minimal_primes_monomial(Ideal(J.ring, gens))


def check_lemma_shrink(an: Analysis) -> ClaimVerdict:
    """Equal Betti pairs ``beta_i = beta_{i+1}`` (``i > 0``) give equal supports of
    ``Omega_i`` and ``Omega_{i+2}``; when ``beta_s = beta_{s+1}``, minimal primes of
    ``supp(Omega_s)`` missing from ``supp(Omega_{s+2})`` have height 1."""
    claim = "shrink"
    eq_pairs = [i for i in range(an.N) if i + 1 < len(an.betti) and an.b(i) == an.b(i + 1) and an.b(i)]
    if not eq_pairs:
        return ClaimVerdict(claim, VACUOUS, "no equal consecutive Betti numbers in the window")
    checked = []
    for i in eq_pairs:
        if i > 0 and i + 2 <= an.N:
            if not an.supp_eq(i, i + 2):
                return ClaimVerdict(claim, FAILS, f"beta_{i} = beta_{i+1} but supp(Omega_{i}) != supp(Omega_{i+2})", i)
            checked.append(f"supp(Omega_{i}) = supp(Omega_{i+2})")
    heights = []
    skipped = ""
    for s in eq_pairs:
        if s + 2 > an.N:
            continue
        if an.minn is None:
            skipped = an.minn_reason()
            continue
        primes = _support_min_primes(an, s)
        if primes is None:
            skipped = f"minimal primes of supp(Omega_{s}) not enumerable (non-monomial support ideal)"
            continue
        for p in primes:
            if an.full(s + 2) or _radical_subset(an.handle(s + 2).ideal, p):
                continue  # p lies in supp(Omega_{s+2})
            h = height(p, an.minn, an.ring)
            if h != 1:
                return ClaimVerdict(claim, FAILS, f"p = {p} is minimal in supp(Omega_{s}), outside "
                                    f"supp(Omega_{s+2}), but has height {h}", s)
            heights.append(f"p = {p}, ht = 1 (shift {s})")
    if not checked and not heights:
        if skipped:
            return ClaimVerdict(claim, SKIPPED, skipped)
        return ClaimVerdict(claim, SHORT, "no equal pair with room for Omega_{i+2}")
    wit = (heights[:3] + checked[:3]) if heights else checked[:3]
    if skipped and not heights:
        wit.append("height sub-check skipped: " + skipped)
    return ClaimVerdict(claim, HOLDS, "; ".join(wit))


def check_prop_quick(an: Analysis) -> ClaimVerdict:
    """With Betti numbers non-decreasing from the start, even supports from
    ``Omega_2`` on are constant until they switch to Spec R for good."""
    claim = "quick"
    if an.terminated:
        return ClaimVerdict(claim, VACUOUS, "finite projective dimension")
    if detect_nondecreasing_start(an.window_betti()) != 0:
        return ClaimVerdict(claim, SKIPPED, "Betti numbers not non-decreasing from beta_0")
    evens = list(range(2, an.N + 1, 2))
    if len(evens) < 2:
        return ClaimVerdict(claim, SHORT, "fewer than two even syzygies beyond Omega_0")
    flags = [an.full(i) for i in evens]
    for a, b, i in zip(flags, flags[1:], evens[1:]):
        if a and not b:
            return ClaimVerdict(claim, FAILS, f"supp(Omega_{i-2}) = Spec R but supp(Omega_{i}) is not", i)
    nonfull = [i for i, f in zip(evens, flags) if not f]
    for i in nonfull[1:]:
        if not an.supp_eq(nonfull[0], i):
            return ClaimVerdict(claim, FAILS, f"supp(Omega_{nonfull[0]}) != supp(Omega_{i}), both not full", i)
    if not nonfull:
        return ClaimVerdict(claim, HOLDS, "all even supports from Omega_2 are Spec R")
    if len(nonfull) == len(evens):
        return ClaimVerdict(claim, HOLDS, f"constant, no switch: supp(Omega_2i) = V{_ideal_str(an.handle(2).ideal)}")
    switch = evens[len(nonfull)]
    return ClaimVerdict(claim, HOLDS, f"constant through Omega_{switch - 2}, Spec R from Omega_{switch}", switch)


CLAIMS = {
    "strict": check_lemma_strict,
    "supp": check_lemma_supp,
    "main": check_theorem_main,
    "dim": check_corollary_dim,
    "shrink": check_lemma_shrink,
    "quick": check_prop_quick,
}


# -- reports -------------------------------------------------------------------

@dataclass
class CheckReport:
    label: str
    window: int
    betti: list[int]
    terminated: bool
    n0: int | None
    dims: list[str]
    supp_classes: list[int]
    full_support: list[bool]
    minn: list[str] | None
    minn_provenance: str | None
    verdicts: dict[str, ClaimVerdict] = field(default_factory=dict)
    version: int = REPORT_VERSION

    def fails(self) -> list[ClaimVerdict]:
        return [v for v in self.verdicts.values() if v.status == FAILS]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdicts"] = {k: asdict(v) for k, v in self.verdicts.items()}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> CheckReport:
        d = dict(d)
        if d.get("version") != REPORT_VERSION:
            raise ValueError(f"unsupported report version {d.get('version')}")
        d["verdicts"] = {k: ClaimVerdict(**v) for k, v in d["verdicts"].items()}
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> CheckReport:
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, CheckReport) and self.to_dict() == other.to_dict()

    def text(self) -> str:
        lines = [f"instance {self.label}  window {self.window}",
                 "betti  " + " ".join(map(str, self.betti)) + ("  (terminated)" if self.terminated else ""),
                 "dims   " + " ".join(self.dims),
                 "supp   " + " ".join(map(str, self.supp_classes))]
        if self.minn is not None:
            lines.append(f"minn   {', '.join(self.minn)}  [{self.minn_provenance}]")
        for name, v in self.verdicts.items():
            lines.append(f"{name:<7}{v.status:<17}{v.witness}")
        return "\n".join(lines)


def run_checks(inst: Instance, claims=None) -> CheckReport:
    """Run the named claims (all by default) and assemble a report."""
    names = list(CLAIMS) if claims in (None, "all") else ([claims] if isinstance(claims, str) else list(claims))
    for n in names:
        if n not in CLAIMS:
            raise ValueError(f"unknown claim {n!r}")
    an = Analysis(inst)
    verdicts = {n: CLAIMS[n](an) for n in names}
    minn = an.minn
    return CheckReport(
        label=inst.label,
        window=inst.window,
        betti=an.window_betti(),
        terminated=an.terminated,
        n0=detect_nondecreasing_start(an.window_betti()),
        dims=[_dim_str(d) for d in an.dims()],
        supp_classes=an.supp_classes(),
        full_support=[an.full(i) for i in range(an.N + 1)],
        minn=[str(p) for p in minn] if minn is not None else None,
        minn_provenance=minn.provenance if minn is not None else None,
        verdicts=verdicts,
    )
