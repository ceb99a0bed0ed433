"""Reproducible random instances for exercising the checks.

``default``: a monomial ideal in at most four variables and a small random
homogeneous presentation.  ``hypersurface``: a single random form.
``fixtures``: the four built-in instances.  Candidates whose Betti numbers
grow past ``betti_limit`` within the window are redrawn, so a whole corpus
stays cheap to check; the draw sequence depends only on the seed.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement

from .checks import Instance
from .config import ResourceLimitExceeded, limits
from .resolution import ModulePresentation, betti_sequence, resolve
from .ring import QuotientRing

__all__ = ["generate_corpus", "PROFILES", "BUILTIN_FIXTURES"]

PROFILES = ("default", "hypersurface", "fixtures")
BUILTIN_FIXTURES = ("fibonacci", "matfac", "finite_length", "shrink")
VARIABLES = "xyzw"


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def _mono_str(e, names) -> str:
    parts = [n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a]
    return "*".join(parts) or "1"


def _random_form(rng: random.Random, names, degree: int, p: int, terms: int) -> str:
    if degree == 0:
        return str(rng.randrange(1, 5))
    monos = _monomials(len(names), degree)
    chosen = rng.sample(monos, min(terms, len(monos)))
    return " + ".join(f"{rng.randrange(1, min(p, 10)) if p else rng.randrange(1, 10)}*{_mono_str(e, names)}"
                      for e in chosen)


def _monomial_ideal(rng: random.Random, names) -> list[str]:
    n = len(names)
    gens = set()
    for _ in range(rng.randint(1, 3)):
        gens.add(rng.choice(_monomials(n, rng.randint(2, 3))))
    # drop generators divisible by others
    keep = [g for g in gens if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in gens)]
    return [_mono_str(e, names) for e in sorted(keep)]


def _presentation(rng: random.Random, names, p: int):
    r = rng.randint(1, 3)
    c = rng.randint(1, 3)
    twists = [rng.randint(0, 1) for _ in range(r)]
    rows = [[""] * c for _ in range(r)]
    for j in range(c):
        deg = max(twists) + rng.randint(1, 2)
        for i in range(r):
            if rng.random() < 0.3:
                rows[i][j] = "0"
            else:
                rows[i][j] = _random_form(rng, names, deg - twists[i], p, rng.randint(1, 2))
    return rows, twists


def _draw(rng: random.Random, profile: str, p: int):
    n = rng.randint(2, 4)
    names = VARIABLES[:n]
    if profile == "default":
        ideal = _monomial_ideal(rng, names)
    else:
        ideal = [_random_form(rng, names, rng.randint(2, 3), p, rng.randint(1, 3))]
    rows, twists = _presentation(rng, names, p)
    R = QuotientRing.from_strings(names, ideal, characteristic=p)
    M = ModulePresentation.from_rows(R, rows, twists)
    return R, M


def generate_corpus(seed: int, count: int, profile: str = "default", *, window: int = 6,
                    characteristic: int = 32003, betti_limit: int = 200, max_draws: int = 10_000):
    """``count`` instances labelled ``<profile>-<seed>-<k>``, identical for equal arguments."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {', '.join(PROFILES)}")
    if profile == "fixtures":
        from .instance import fixture

        return [fixture(name).to_instance() for name in BUILTIN_FIXTURES][:count]
    rng = random.Random(seed)
    out = []
    draws = 0
    while len(out) < count:
        draws += 1
        if draws > max_draws:
            raise RuntimeError(f"could not draw {count} instances within {max_draws} attempts")
        R, M = _draw(rng, profile, characteristic)
        if M.nrows == 0 or all(not any(col) for col in M.columns):
            continue
        try:
            with limits(pair_cap=50_000):
                b = betti_sequence(resolve(M, window + 1))
        except ResourceLimitExceeded:
            continue
        if max(b) > betti_limit:
            continue
        out.append(Instance(R, M, window, f"{profile}-{seed}-{len(out)}"))
    return out
