"""JSON instance files and the built-in fixtures.

An instance file looks like::

    {
      "label": "fibonacci",
      "field": 32003,                  # 0 for the rationals
      "variables": ["x", "y"],
      "ideal": ["x^2", "x*y"],
      "matrix": [["y"]],               # rows of the presentation matrix
      "row_twists": [0],               # optional, inferred when absent
      "options": {"window": 8, "declared_min_primes": [["x"]]}
    }

Recognised options: ``window``, ``degree_bound``, ``hom_bound``,
``declared_min_primes``, ``minor_cap``, ``pair_cap``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

from .checks import Instance
from .resolution import ModulePresentation
from .ring import QuotientRing

__all__ = ["InstanceFile", "InstanceError", "fixture", "fixture_names", "load_instance", "parse_field"]

OPTION_KEYS = ("window", "degree_bound", "hom_bound", "declared_min_primes", "minor_cap", "pair_cap")


class InstanceError(ValueError):
    """Malformed instance file."""


def parse_field(text: str) -> int:
    """``q``/``QQ``/``0`` for the rationals, ``pN`` or ``N`` for the prime field of size ``N``."""
    t = str(text).strip().lower()
    if t in ("q", "qq", "0"):
        return 0
    if t.startswith("p"):
        t = t[1:]
    try:
        return int(t)
    except ValueError:
        raise InstanceError(f"unrecognised field {text!r}") from None


@dataclass
class InstanceFile:
    variables: list[str]
    ideal: list[str]
    matrix: list[list[str]]
    field: int = 32003
    label: str = ""
    row_twists: list[int] | None = None
    options: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        unknown = set(self.options) - set(OPTION_KEYS)
        if unknown:
            raise InstanceError(f"unknown options: {', '.join(sorted(unknown))}")
        if any(len(r) != len(self.matrix[0]) for r in self.matrix):
            raise InstanceError("matrix rows have different lengths")

    @classmethod
    def from_dict(cls, d: dict) -> InstanceFile:
        if not isinstance(d, dict):
            raise InstanceError("instance must be a JSON object")
        missing = {"variables", "ideal", "matrix"} - set(d)
        if missing:
            raise InstanceError(f"missing keys: {', '.join(sorted(missing))}")
        extra = set(d) - {"variables", "ideal", "matrix", "field", "label", "row_twists", "options"}
        if extra:
            raise InstanceError(f"unknown keys: {', '.join(sorted(extra))}")
        return cls(
            variables=[str(v) for v in d["variables"]],
            ideal=[str(g) for g in d["ideal"]],
            matrix=[[str(e) for e in row] for row in d["matrix"]],
            field=parse_field(d.get("field", 32003)),
            label=str(d.get("label", "")),
            row_twists=list(d["row_twists"]) if d.get("row_twists") is not None else None,
            options=dict(d.get("options", {})),
        )

    @classmethod
    def loads(cls, text: str) -> InstanceFile:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path) -> InstanceFile:
        path = Path(path)
        inst = cls.loads(path.read_text())
        if not inst.label:
            inst.label = path.stem
        return inst

    def to_dict(self) -> dict:
        d = {"label": self.label, "field": self.field, "variables": self.variables,
             "ideal": self.ideal, "matrix": self.matrix}
        if self.row_twists is not None:
            d["row_twists"] = self.row_twists
        if self.options:
            d["options"] = self.options
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def ring(self, characteristic: int | None = None) -> QuotientRing:
        char = self.field if characteristic is None else characteristic
        return QuotientRing.from_strings(self.variables, self.ideal, characteristic=char,
                                         min_primes=self.options.get("declared_min_primes"))

    def module(self, ring: QuotientRing) -> ModulePresentation:
        ncols = len(self.matrix[0]) if self.matrix else 0
        return ModulePresentation.from_rows(ring, self.matrix, self.row_twists, ncols=ncols)

    def to_instance(self, *, characteristic: int | None = None, window: int | None = None) -> Instance:
        """Parse into an :class:`Instance`; parse failures raise :class:`InstanceError`."""
        try:
            R = self.ring(characteristic)
            M = self.module(R)
        except InstanceError:
            raise
        except (ValueError, ArithmeticError) as exc:
            raise InstanceError(str(exc)) from exc
        N = window if window is not None else int(self.options.get("window", 8))
        return Instance(R, M, N, self.label)

    @classmethod
    def from_instance(cls, inst: Instance) -> InstanceFile:
        R, M = inst.ring, inst.module
        opts: dict = {"window": inst.window}
        if R.declared_min_primes is not None:
            opts["declared_min_primes"] = [[str(g) for g in p] for p in R.declared_min_primes]
        return cls(
            variables=list(R.variables),
            ideal=[str(g) for g in R.ideal_gens],
            matrix=[[str(f) for f in row] for row in M.matrix] if M.ncols else [[] for _ in range(M.nrows)],
            field=R.field.characteristic,
            label=inst.label,
            row_twists=list(M.row_twists),
            options=opts,
        )


def fixture_names() -> list[str]:
    root = resources.files("syzdim.fixtures")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".inst"))


def fixture(name: str) -> InstanceFile:
    """A built-in instance: ``fibonacci``, ``matfac``, ``finite_length``, ``shrink``, ..."""
    res = resources.files("syzdim.fixtures") / f"{name}.inst"
    if not res.is_file():
        raise InstanceError(f"no fixture named {name!r}; available: {', '.join(fixture_names())}")
    inst = InstanceFile.loads(res.read_text())
    inst.label = inst.label or name
    return inst


def load_instance(source: str) -> InstanceFile:
    """A path to an instance file, or the name of a built-in fixture."""
    p = Path(source)
    if p.is_file():
        return InstanceFile.load(p)
    if p.suffix == "" and "/" not in source:
        return fixture(source)
    raise InstanceError(f"no such instance file: {source}")
