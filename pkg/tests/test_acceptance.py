"""Acceptance gate.

Each criterion is a list of named sub-checks run under the Gröbner audit;
every resolution built along the way is kept for the engine-property
criterion.  A one-line verdict per criterion is printed in the terminal
summary (see ``conftest.py``).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import pytest

from syzdim.checks import CLAIMS, Analysis, Instance
from syzdim.config import AuditLog, audit
from syzdim.corpus import generate_corpus
from syzdim.geometry import (
    height, krull_dim, min_primes, module_dim, supp_equal, supp_is_full, support_handle,
    verify_declared_min_primes,
)
from syzdim.groebner import Ideal, annihilator_of_ideal_mod, ideal_intersection, ideal_quotient, ideals_equal
from syzdim.instance import fixture
from syzdim.oracle import compare_with_resolution, graded_betti_oracle
from syzdim.resolution import ModulePresentation, betti_sequence, resolve, syzygy_presentation

from conftest import complex_violations

CORPUS_SEED = 7
CORPUS_SIZE = 20
LIMITS = {1: 10.0, 2: 30.0, 3: 120.0, 4: 10.0, 5: 600.0, 6: None, 7: None}
TITLES = {
    1: "periodic-growth fixture: Betti and dimensions",
    2: "matrix factorization: supports, minimal primes, dimensions",
    3: "finite-length fixture over QQ: colons, Betti, dimensions",
    4: "shrinking-support fixture: supports and height",
    5: "claim suite on fixtures and corpus",
    6: "oracle equivalence",
    7: "engine properties (S-pairs, complex, minimality)",
}


@dataclass
class Outcome:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    resolutions: list = field(default_factory=list)
    seconds: float = 0.0
    log: AuditLog | None = None

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def failed(self) -> list[str]:
        return [f"{n}" + (f" ({d})" if d else "") for n, ok, d in self.checks if not ok]


SUMMARY: dict[int, tuple[bool, str]] = {}
_DONE: dict[int, Outcome] = {}


def _resolve(out: Outcome, M, N):
    res = resolve(M, N)
    out.resolutions.append(res)
    return res


def principal(R, text):
    return ModulePresentation.from_rows(R, [[text]])


# -- criteria ------------------------------------------------------------------

def criterion_1(out: Outcome):
    inst = fixture("fibonacci").to_instance()
    res = _resolve(out, inst.module, 9)
    b = betti_sequence(res)
    out.check("betti 0..4 = (1,1,1,2,3)", tuple(b)[:5] == (1, 1, 1, 2, 3), str(b))
    dims = [module_dim(syzygy_presentation(res, i)) for i in range(9)]
    out.check("dims 0..4 = (0,1,0,1,1)", dims[:5] == [0, 1, 0, 1, 1], str(dims[:5]))
    out.check("dim Omega_i = 1 for 5 <= i <= 8", dims[5:9] == [1] * 4, str(dims[5:9]))


def criterion_2(out: Outcome):
    inst = fixture("matfac").to_instance()
    R = inst.ring
    res = _resolve(out, inst.module, 9)
    b = betti_sequence(res)
    out.check("beta_i = 2 for 0 <= i <= 8", tuple(b)[:9] == (2,) * 9, str(b))
    handles = [support_handle(syzygy_presentation(res, i)) for i in range(9)]
    full = [supp_is_full(h) for h in handles]
    out.check("odd syzygies have full support", all(full[1::2]), str(full))
    out.check("even syzygies do not", not any(full[0::2]), str(full))
    target = support_handle(principal(R, "a*d - b*c"))
    out.check("supp(Omega_even) = supp(R/(ad-bc))", all(supp_equal(handles[i], target) for i in range(0, 9, 2)))
    primes = verify_declared_min_primes(R)
    meet = ideal_intersection(primes[0], primes[1])
    out.check("declared minimal primes verify", primes.provenance == "declared-verified")
    out.check("(e) ∩ (ad-bc) = (ade-bce) exactly", ideals_equal(meet, Ideal(R.base, (R("a*d*e - b*c*e"),))))
    dims = [module_dim(syzygy_presentation(res, i)) for i in range(9)]
    out.check("even and odd dimensions equal 4", dims == [4] * 9, str(dims))


def criterion_3(out: Outcome):
    inst = fixture("finite_length").to_instance(characteristic=0)
    R = inst.ring
    S = R.base
    I = R.ideal
    out.check("coefficients are exact rationals", R.field.characteristic == 0)
    out.check("dim R = 1", krull_dim(I) == 1)
    colon = ideal_quotient(I, R("y"))
    out.check("(I : y) = I + (u, v, z^2)", ideals_equal(colon, Ideal(S, R.ideal_gens + (R("u"), R("v"), R("z^2")))))
    ann = annihilator_of_ideal_mod([R("u"), R("v"), R("z^2")], R)
    out.check("(I : (u, v, z^2)) = I + (y)", ideals_equal(ann, Ideal(S, R.ideal_gens + (R("y"),))))
    an = Analysis(Instance(R, inst.module, 6, inst.label))
    out.resolutions.append(an.res)
    b = tuple(an.window_betti())
    out.check("betti 0..3 = (3,1,1,3)", b[:4] == (3, 1, 1, 3), f"computed {b[:4]}")
    dims = an.dims()
    out.check("dim Omega_1 = dim Omega_3 = 0", dims[1] == 0 and dims[3] == 0, str(dims))
    out.check("dim Omega_0 = dim Omega_2 = 1", dims[0] == 1 and dims[2] == 1, str(dims))
    out.check("dim Omega_i = 1 for 4 <= i <= 6", dims[4:7] == [1, 1, 1], str(dims))
    out.check("dim R/(y) = 0", module_dim(principal(R, "y")) == 0)


def criterion_4(out: Outcome):
    inst = fixture("shrink").to_instance()
    R = inst.ring
    res = _resolve(out, inst.module, 3)
    b = betti_sequence(res)
    out.check("beta_0 = beta_1 = 1", b[0] == 1 and b[1] == 1, str(b))
    h0 = support_handle(syzygy_presentation(res, 0))
    h2 = support_handle(syzygy_presentation(res, 2))
    out.check("supp(Omega_2) = supp(R/(y))", supp_equal(h2, support_handle(principal(R, "y"))))
    p = Ideal(R.base, (R("x"), R("z")))
    out.check("(x, z) in supp(M)", p.contains_ideal(h0.ideal))
    out.check("(x, z) not in supp(Omega_2)", not p.contains_ideal(h2.ideal))
    out.check("height (x, z) = 1", height(p, min_primes(R), R) == 1)


def _claims(out: Outcome, inst: Instance) -> dict:
    an = Analysis(inst)
    out.resolutions.append(an.res)
    return {name: fn(an) for name, fn in CLAIMS.items()}


def criterion_5(out: Outcome):
    for name in ("fibonacci", "matfac", "finite_length", "shrink"):
        verdicts = _claims(out, fixture(name).to_instance())
        bad = [f"{k}: {v.witness}" for k, v in verdicts.items() if v.status == "fails"]
        out.check(f"{name}: no fails", not bad, "; ".join(bad))
    counts = {"main": 0, "dim": 0}
    bad = []
    for inst in generate_corpus(CORPUS_SEED, CORPUS_SIZE):
        verdicts = _claims(out, inst)
        bad += [f"{inst.label} {k}: {v.witness}" for k, v in verdicts.items() if v.status == "fails"]
        for k in counts:
            counts[k] += verdicts[k].status == "holds"
    out.check("corpus: no fails", not bad, "; ".join(bad))
    out.check(">= 10 corpus instances with a non-vacuous main verdict", counts["main"] >= 10, str(counts["main"]))
    out.check(">= 10 corpus instances with a non-vacuous dim verdict", counts["dim"] >= 10, str(counts["dim"]))


def _oracle(out: Outcome, label, M, D, H):
    res = _resolve(out, M, H)
    cmp = compare_with_resolution(graded_betti_oracle(M, D, H), res)
    out.check(f"{label}: {cmp.status}", cmp.status == "equal" and cmp.compared_totals,
              "; ".join(cmp.discrepancies) or f"compared {cmp.compared_totals}")


def criterion_6(out: Outcome):
    for name in ("fibonacci", "matfac", "finite_length", "shrink", "koszul", "free"):
        f = fixture(name)
        _oracle(out, name, f.to_instance().module, f.options.get("degree_bound", 6), f.options.get("hom_bound", 4))
    for inst in generate_corpus(CORPUS_SEED, CORPUS_SIZE):
        _oracle(out, inst.label, inst.module, 10, 5)


def criterion_7(out: Outcome):
    total_bases = 0
    for k in range(1, 7):
        prior = run_criterion(k)
        total_bases += prior.log.bases_checked
        out.check(f"criterion {k}: every S-pair reduces to zero", not prior.log.failures,
                  "; ".join(prior.log.failures[:3]))
        bad = [v for res in prior.resolutions for v in complex_violations(res)]
        out.check(f"criterion {k}: complex and minimality over {len(prior.resolutions)} resolutions", not bad,
                  "; ".join(bad[:3]))
    out.check("audited bases", total_bases > 0, str(total_bases))


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6,
            7: criterion_7}


def run_criterion(k: int) -> Outcome:
    if k not in _DONE:
        out = Outcome()
        start = time.perf_counter()
        with audit() as log:
            CRITERIA[k](out)
        out.seconds = time.perf_counter() - start
        out.log = log
        limit = LIMITS[k]
        if limit is not None:
            out.check(f"runtime < {limit:g} s", out.seconds < limit, f"{out.seconds:.1f} s")
        _DONE[k] = out
        ok = not out.failed
        detail = "" if ok else "  failed: " + "; ".join(out.failed)
        SUMMARY[k] = (ok, f"criterion {k} [{TITLES[k]}]: {'PASS' if ok else 'FAIL'} "
                          f"({out.seconds:.2f} s){detail}")
    return _DONE[k]


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    failed = run_criterion(k).failed
    print(SUMMARY[k][1])
    assert not failed, "; ".join(failed)
