"""Resource caps and the optional Gröbner-basis audit.

Caps are read from the environment once (``SYZDIM_PAIR_CAP``,
``SYZDIM_DEGREE_CAP``, ``SYZDIM_MINOR_CAP``) and can be overridden for a
block of code with :func:`limits`.  Exceeding a cap raises
:class:`ResourceLimitExceeded`; nothing is ever truncated silently.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field, replace


class ResourceLimitExceeded(RuntimeError):
    """A configured cap was hit.  ``cap`` names it, ``limit`` is its value."""

    def __init__(self, cap: str, limit: int, detail: str = ""):
        self.cap = cap
        self.limit = limit
        self.homological_degree: int | None = None
        msg = f"{cap} exceeded (limit {limit})"
        super().__init__(f"{msg}: {detail}" if detail else msg)


@dataclass(frozen=True)
class Limits:
    pair_cap: int = 500_000
    degree_cap: int = 64
    minor_cap: int = 5000

    @classmethod
    def from_env(cls) -> Limits:
        kw = {}
        for name in ("pair_cap", "degree_cap", "minor_cap"):
            raw = os.environ.get(f"SYZDIM_{name.upper()}")
            if raw:
                kw[name] = int(raw)
        return cls(**kw)


_limits: ContextVar[Limits] = ContextVar("syzdim_limits", default=Limits.from_env())


def current_limits() -> Limits:
    return _limits.get()


@contextmanager
def limits(**overrides):
    """Temporarily override caps, e.g. ``with limits(pair_cap=1000): ...``."""
    token = _limits.set(replace(_limits.get(), **{k: v for k, v in overrides.items() if v is not None}))
    try:
        yield _limits.get()
    finally:
        _limits.reset(token)


@dataclass
class AuditLog:
    """Counts of Gröbner bases checked by exhaustive S-pair reduction."""

    bases_checked: int = 0
    pairs_checked: int = 0
    failures: list[str] = field(default_factory=list)


_audit: ContextVar[AuditLog | None] = ContextVar("syzdim_audit", default=None)


def current_audit() -> AuditLog | None:
    return _audit.get()


@contextmanager
def audit():
    """Inside this block every finished Gröbner basis is re-checked pair by pair."""
    log = AuditLog()
    token = _audit.set(log)
    try:
        yield log
    finally:
        _audit.reset(token)
