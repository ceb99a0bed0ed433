"""Exact coefficient fields, polynomials and graded quotient rings.

A polynomial stores its terms as a dict mapping exponent tuples to nonzero
coefficients.  Coefficients are ``int`` reduced into ``[0, p)`` for a prime
field and :class:`fractions.Fraction` over the rationals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Field",
    "QQ",
    "GF",
    "MonomialOrder",
    "PolynomialRing",
    "Polynomial",
    "QuotientRing",
    "MIXED",
    "ParseError",
    "parse_poly",
    "poly_arith",
    "homogeneous_degree",
]


class ParseError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``characteristic == 0``) or the prime field of that size."""

    characteristic: int = 32003

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"field characteristic {self.characteristic} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, value):
        """Coerce an int or Fraction into this field."""
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} is not representable modulo {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return 1 / a if p == 0 else pow(a, -1, p)

    def signed(self, a):
        """Readable representative: rationals as-is, residues in (-p/2, p/2]."""
        p = self.characteristic
        if p and a > p // 2:
            return a - p
        return a

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def GF(p: int = 32003) -> Field:
    return Field(p)


@dataclass(frozen=True)
class MonomialOrder:
    """Global monomial order on exponent vectors.

    ``kind`` is ``"grevlex"`` or ``"lex"``.  ``eliminate`` > 0 puts the first
    that many variables in a block that dominates the rest (grevlex inside
    each block); it is used for elimination of tag variables.
    """

    kind: str = "grevlex"
    eliminate: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exps: Sequence[int]) -> tuple:
        if self.kind == "lex":
            return tuple(exps)
        k = self.eliminate
        if k:
            head, tail = exps[:k], exps[k:]
            return (sum(head), *(-e for e in reversed(head)), sum(tail), *(-e for e in reversed(tail)))
        return (sum(exps), *(-e for e in reversed(exps)))


GREVLEX = MonomialOrder()


@dataclass(frozen=True)
class PolynomialRing:
    """``k[x_1, ..., x_n]`` with a fixed monomial order."""

    variables: tuple[str, ...]
    field: Field = field(default_factory=Field)
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        for v in self.variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                raise ValueError(f"bad variable name {v!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def single_letter(self) -> bool:
        return all(len(v) == 1 for v in self.variables)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, name_or_index) -> Polynomial:
        i = name_or_index if isinstance(name_or_index, int) else self.variables.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff=1) -> Polynomial:
        c = self.field(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def __call__(self, text) -> Polynomial:
        if isinstance(text, Polynomial):
            return text
        if isinstance(text, (int, Fraction)):
            return self.constant(text)
        return parse_poly(text, self)

    def extend(self, names: Sequence[str], *, front: bool = False, order: MonomialOrder | None = None):
        """Ring with extra variables appended (or prepended) to this one."""
        names = tuple(names)
        variables = names + self.variables if front else self.variables + names
        return PolynomialRing(variables, self.field, order or self.order)

    def with_field(self, fld: Field) -> PolynomialRing:
        return PolynomialRing(self.variables, fld, self.order)

    def __str__(self):
        return f"{self.field}[{', '.join(self.variables)}]"


class Polynomial:
    """Immutable sparse polynomial over a :class:`PolynomialRing`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Mapping[tuple, object]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_terms(cls, ring, terms: Iterable[tuple[tuple, object]]) -> Polynomial:
        acc: dict = {}
        fld = ring.field
        for e, c in terms:
            v = acc.get(e, 0) + fld(c)
            if fld.characteristic:
                v %= fld.characteristic
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return cls(ring, acc)

    # -- queries -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def lead_exps(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=self.ring.order.key)

    def lead_coeff(self):
        return self.terms[self.lead_exps()]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, 0)

    def support(self) -> set[int]:
        """Indices of variables that occur."""
        return {i for e in self.terms for i, a in enumerate(e) if a}

    # -- arithmetic --------------------------------------------------------
    def _check(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring.nvars != self.ring.nvars:
            raise ValueError("variable-count mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, _add(self.terms, other.terms, 1, self.ring.field.characteristic))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, _add(self.terms, other.terms, -1, self.ring.field.characteristic))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.ring.field.characteristic
        return Polynomial(self.ring, {e: (-c % p if p else -c) for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, _mul(self.terms, other.terms, self.ring.field.characteristic))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> Polynomial:
        c = self.ring.field(c)
        p = self.ring.field.characteristic
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: (v * c % p if p else v * c) for e, v in self.terms.items()})

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def mul_monomial(self, exps: tuple) -> Polynomial:
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def divide_exact(self, divisor: Polynomial) -> Polynomial:
        """Quotient ``self / divisor``; raises if the division leaves a remainder."""
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        fld = self.ring.field
        p = fld.characteristic
        key = self.ring.order.key
        lead = divisor.lead_exps()
        inv = fld.inv(divisor.terms[lead])
        rest = dict(self.terms)
        quotient: dict = {}
        while rest:
            m = max(rest, key=key)
            if any(a < b for a, b in zip(m, lead)):
                raise ArithmeticError("inexact polynomial division")
            q = tuple(a - b for a, b in zip(m, lead))
            c = rest[m] * inv
            if p:
                c %= p
            quotient[q] = c
            rest = _add(rest, {tuple(a + b for a, b in zip(e, q)): v for e, v in divisor.terms.items()}, -c, p)
        return Polynomial(self.ring, quotient)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.nvars == other.ring.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- printing ----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        fld = self.ring.field
        out = []
        for e, c in self.sorted_terms():
            c = fld.signed(c)
            neg = c < 0
            c = -c if neg else c
            mono = "*".join(n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def _add(a: Mapping, b: Mapping, scale, p: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if p:
            v %= p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(a: Mapping, b: Mapping, p: int) -> dict:
    out: dict = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = get(e, 0) + ca * cb
            if p:
                v %= p
            out[e] = v
    return {e: c for e, c in out.items() if c}


MIXED = "mixed"


def homogeneous_degree(p: Polynomial):
    """Common total degree of all terms; ``None`` for zero, ``MIXED`` otherwise."""
    degrees = {sum(e) for e in p.terms}
    if not degrees:
        return None
    if len(degrees) > 1:
        return MIXED
    return degrees.pop()


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if a.ring.nvars != b.ring.nvars:
        raise ValueError("variable-count mismatch")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at position {pos}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing):
        self.ring = ring
        self.tokens = _tokenize(text)
        if ring.single_letter:
            # ``xy^2`` is ``x*y^2``: split juxtaposed letters into separate names
            split = []
            for kind, val in self.tokens:
                if kind == "name" and val not in ring.variables and val.isalpha():
                    split.extend(("name", ch) for ch in val)
                else:
                    split.append((kind, val))
            self.tokens = split
        self.i = 0
        if not self.tokens:
            raise ParseError("empty polynomial")

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}")

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.power()
            elif kind == "op" and val == "/":
                self.take()
                d = self.power()
                if not d.is_constant() or d.is_zero():
                    raise ParseError("division only by nonzero constants")
                acc = acc.scale(self.ring.field.inv(d.constant_term()))
            elif self.ring.single_letter and (kind == "name" or (kind == "op" and val == "(")):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k, n = self.take()
            if k != "num":
                raise ParseError("exponent must be a non-negative integer")
            return base ** n
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            try:
                return self.ring.constant(val)
            except ZeroDivisionError as exc:
                raise ParseError(str(exc)) from exc
        if kind == "name":
            return self.name(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "op" and val == "-":
            return -self.power()
        raise ParseError("unexpected end of input" if kind is None else f"unexpected token {val!r}")

    def name(self, val: str) -> Polynomial:
        ring = self.ring
        if val in ring.variables:
            return ring.gen(val)
        raise ParseError(f"unknown variable {val!r}")


def parse_poly(text: str, ring) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring`` (a polynomial or quotient ring).

    Juxtaposed single-letter variables (``ade``) are read as a product when
    every variable name of the ring is a single letter.
    """
    if isinstance(ring, QuotientRing):
        ring = ring.base
    try:
        return _Parser(text, ring).parse()
    except ZeroDivisionError as exc:
        raise ParseError(str(exc)) from exc


# -- quotient rings --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QuotientRing:
    """``R = S/I`` for a homogeneous ideal ``I`` of positive-degree generators.

    ``declared_min_primes`` optionally lists generator lists of the minimal
    primes of ``R``; they are checked by
    :func:`syzdim.geometry.verify_declared_min_primes` before use.
    """

    base: PolynomialRing
    ideal_gens: tuple[Polynomial, ...] = ()
    declared_min_primes: tuple[tuple[Polynomial, ...], ...] | None = None

    def __post_init__(self):
        gens = tuple(g for g in (self.base(g) for g in self.ideal_gens) if g)
        object.__setattr__(self, "ideal_gens", gens)
        for g in gens:
            d = homogeneous_degree(g)
            if d is MIXED or not d:
                raise ValueError(f"ideal generator {g} is not homogeneous of positive degree")
        if self.declared_min_primes is not None:
            primes = tuple(tuple(self.base(g) for g in p) for p in self.declared_min_primes)
            object.__setattr__(self, "declared_min_primes", primes)

    @classmethod
    def from_strings(cls, variables, ideal=(), characteristic=32003, min_primes=None, order="grevlex"):
        base = PolynomialRing(tuple(variables), Field(characteristic), MonomialOrder(order))
        primes = None
        if min_primes is not None:
            primes = tuple(tuple(parse_poly(g, base) for g in p) for p in min_primes)
        return cls(base, tuple(parse_poly(g, base) for g in ideal), primes)

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def variables(self) -> tuple[str, ...]:
        return self.base.variables

    @property
    def nvars(self) -> int:
        return self.base.nvars

    def __call__(self, text) -> Polynomial:
        return self.base(text)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.ideal_gens)

    @cached_property
    def ideal(self):
        from .groebner import Ideal

        return Ideal(self.base, self.ideal_gens)

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of ``f`` modulo ``I``."""
        return self.ideal.reduce(f)

    def with_field(self, fld: Field) -> QuotientRing:
        base = self.base.with_field(fld)
        conv = lambda p: Polynomial.from_terms(base, p.terms.items())  # noqa: E731
        primes = None
        if self.declared_min_primes is not None:
            primes = tuple(tuple(conv(g) for g in p) for p in self.declared_min_primes)
        return QuotientRing(base, tuple(conv(g) for g in self.ideal_gens), primes)

    def __str__(self):
        if not self.ideal_gens:
            return str(self.base)
        return f"{self.base}/({', '.join(map(str, self.ideal_gens))})"
