"""Exact sparse multivariate polynomials over the rationals, ideals, and
the text grammar used for input and output.

Coefficients are :class:`fractions.Fraction` (arbitrary precision). Extended
rationals are a ``Fraction`` or the float ``math.inf``; Python compares the
two exactly, so ``min``/``max``/sorting behave as expected.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

INF = math.inf
ExtRational = Union[Fraction, float]

Exponent = tuple  # tuple[int, ...]


class DimensionMismatchError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownVariableError(ParseError):
    pass


def is_infinite(value) -> bool:
    return isinstance(value, float) and math.isinf(value)


def ext(value) -> ExtRational:
    """Coerce an int, Fraction, string or inf into an extended rational."""
    if is_infinite(value):
        if value < 0:
            raise ValueError("only +infinity is representable")
        return INF
    if isinstance(value, float):
        raise TypeError("finite floats are not exact; pass a Fraction or string")
    return Fraction(value)


def grevlex_key(exponent: Sequence[int]) -> tuple:
    """Sort key realising graded reverse lexicographic order with x0 > x1 > ..."""
    return (sum(exponent), tuple(-e for e in reversed(exponent)))


def variable_names(n: int) -> list[str]:
    return [f"x{j}" for j in range(n)]


class Polynomial:
    """Sparse polynomial in ``n`` variables with exact rational coefficients.

    Instances are immutable; terms map exponent tuples to nonzero Fractions.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponent, object] | None = None):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise DimensionMismatchError(
                    f"exponent {exp} has length {len(exp)}, expected {n}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(coeff)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._trusted(n, {})

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        c = Fraction(c)
        return cls._trusted(n, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, n: int, j: int) -> "Polynomial":
        if not 0 <= j < n:
            raise IndexError(f"variable index {j} out of range for n={n}")
        exp = [0] * n
        exp[j] = 1
        return cls._trusted(n, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exponent), {tuple(exponent): coeff})

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending grevlex order."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def order(self) -> ExtRational:
        """Lowest total degree of a term; +inf for the zero polynomial."""
        if not self._terms:
            return INF
        return Fraction(min(sum(e) for e in self._terms))

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms.items(), key=lambda t: grevlex_key(t[0]))

    def support_variables(self) -> set[int]:
        return {j for e in self._terms for j, a in enumerate(e) if a}

    def _check(self, other: "Polynomial"):
        if self.n != other.n:
            raise DimensionMismatchError(
                f"ambient variable counts differ: {self.n} vs {other.n}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._trusted(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._trusted(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._trusted(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._trusted(self.n, {e: v * c for e, v in self._terms.items()})

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(1 / self.leading_term()[1])

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial._trusted(
            self.n, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def truncate_below(self, degree: int) -> "Polynomial":
        """Drop every term of total degree >= ``degree``."""
        return Polynomial._trusted(
            self.n, {e: c for e, c in self._terms.items() if sum(e) < degree})

    def embed(self, n: int, positions: Sequence[int] | None = None) -> "Polynomial":
        """Re-home into ``n`` variables; old variable j goes to ``positions[j]``."""
        if positions is None:
            positions = range(self.n)
        positions = list(positions)
        if len(positions) != self.n:
            raise DimensionMismatchError("positions must list every variable")
        out = {}
        for e, c in self._terms.items():
            new = [0] * n
            for j, a in zip(positions, e):
                new[j] += a
            out[tuple(new)] = c
        return Polynomial._trusted(n, out)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Send variable j to variable ``perm[j]``."""
        return self.embed(self.n, perm)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def to_string(self, names: Sequence[str] | None = None) -> str:
        return format_polynomial(self, names)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.n}, {format_polynomial(self)!r})"


def format_polynomial(p: Polynomial, names: Sequence[str] | None = None) -> str:
    """Print in the input grammar, terms in descending grevlex order."""
    names = variable_names(p.n) if names is None else list(names)
    if p.is_zero():
        return "0"
    pieces = []
    for exp, c in p.sorted_terms():
        factors = []
        for j, a in enumerate(exp):
            if a == 1:
                factors.append(names[j])
            elif a > 1:
                factors.append(f"{names[j]}^{a}")
        mag = abs(c)
        if factors:
            body = "*".join(factors if mag == 1 else [str(mag)] + factors)
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+(?:_\d+)?)|(?P<op>[-+*/^,])|(?P<bad>\S))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", start)
        yield kind, m.group(kind), start
        pos = m.end()
    yield "end", "", len(text)


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.toks = list(_tokens(text))
        self.i = 0
        self.index = {name: j for j, name in enumerate(names)}
        self.n = len(names)

    @property
    def tok(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        k, v, off = self.tok
        if (kind and k != kind) or (value and v != value):
            want = value or kind
            raise ParseError(f"expected {want}, found {v or 'end of input'!r}", off)
        self.i += 1
        return v, off

    def at(self, kind, value=None):
        k, v, _ = self.tok
        return k == kind and (value is None or v == value)

    def positive_int(self) -> int:
        v, off = self.take("int")
        if int(v) == 0:
            raise ParseError("expected a positive integer", off)
        return int(v)

    def varpow(self, exp: list[int]):
        name, off = self.take("var")
        if name not in self.index:
            raise UnknownVariableError(f"unknown variable {name!r}", off)
        power = 1
        if self.at("op", "^"):
            self.take()
            power = self.positive_int()
        exp[self.index[name]] += power

    def term(self) -> Polynomial:
        exp = [0] * self.n
        coeff = Fraction(1)
        if self.at("int"):
            num, _ = self.take("int")
            coeff = Fraction(int(num))
            if self.at("op", "/"):
                self.take()
                den, off = self.take("int")
                if int(den) == 0:
                    raise ParseError("zero denominator", off)
                coeff /= int(den)
            while self.at("op", "*"):
                self.take()
                self.varpow(exp)
        elif self.at("var"):
            self.varpow(exp)
            while self.at("op", "*"):
                self.take()
                self.varpow(exp)
        else:
            _, v, off = self.tok
            raise ParseError(f"expected a term, found {v or 'end of input'!r}", off)
        return Polynomial(self.n, {tuple(exp): coeff})

    def expr(self) -> Polynomial:
        sign = 1
        if self.at("op", "-") or self.at("op", "+"):
            sign = -1 if self.take()[0] == "-" else 1
        total = self.term().scale(sign)
        while self.at("op", "+") or self.at("op", "-"):
            op, _ = self.take()
            t = self.term()
            total = total + t if op == "+" else total - t
        return total


def parse_polynomial(text: str, n: int, names: Sequence[str] | None = None) -> Polynomial:
    """Parse ``text`` into a polynomial in ``n`` variables.

    Grammar: ``expr := term (('+'|'-') term)*``, ``term := coeff ('*' varpow)*
    | varpow ('*' varpow)*``, ``coeff := integer ('/' positive-integer)?``,
    ``varpow := name ('^' positive-integer)?``. A single leading sign is
    accepted so that printed polynomials round-trip.
    """
    names = variable_names(n) if names is None else list(names)
    if len(names) != n:
        raise DimensionMismatchError("names must match variable count")
    parser = _Parser(text, names)
    poly = parser.expr()
    parser.take("end")
    return poly


def parse_generators(text: str, n: int, names: Sequence[str] | None = None) -> list[Polynomial]:
    """Parse a comma-separated generator list."""
    out = []
    offset = 0
    for chunk in text.split(","):
        try:
            out.append(parse_polynomial(chunk, n, names))
        except ParseError as exc:
            err = type(exc)(str(exc).rsplit(" at offset", 1)[0], exc.offset + offset)
            raise err from None
        offset += len(chunk) + 1
    return out


class Ideal:
    """A finite generating set in ``k[x0..x{n-1}]``; all lcts are at the origin."""

    __slots__ = ("n", "generators", "__dict__")

    def __init__(self, n: int, generators: Iterable[Polynomial] = ()):
        gens = tuple(generators)
        for g in gens:
            if g.n != n:
                raise DimensionMismatchError(
                    f"generator lives in {g.n} variables, ideal in {n}")
        self.n = n
        self.generators = gens

    @classmethod
    def parse(cls, text: str, n: int) -> "Ideal":
        return cls(n, parse_generators(text, n))

    @classmethod
    def monomial(cls, n: int, exponents: Iterable[Sequence[int]]) -> "Ideal":
        return cls(n, [Polynomial(n, {tuple(e): 1}) for e in exponents])

    @classmethod
    def maximal_power(cls, n: int, d: int) -> "Ideal":
        """``m^d``: all monomials of total degree ``d``."""
        return cls.monomial(n, monomials_of_degree(n, d))

    def nonzero_generators(self) -> tuple[Polynomial, ...]:
        return tuple(g for g in self.generators if g)

    @cached_property
    def vanishes_at_origin(self) -> bool:
        return all(not g.constant_term() for g in self.generators)

    def is_zero(self) -> bool:
        return not self.nonzero_generators()

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.nonzero_generators())

    def exponents(self) -> list[Exponent]:
        """Exponent vectors of a monomial ideal's generators."""
        return [next(iter(g.terms)) for g in self.nonzero_generators()]

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self):
        return hash((self.n, self.generators))

    def to_string(self) -> str:
        return ", ".join(g.to_string() for g in self.generators) or "0"

    def __repr__(self):
        return f"Ideal({self.n}, [{self.to_string()}])"


def order_at_origin(a: Ideal) -> ExtRational:
    """Least total degree of a generator term; 0 off the origin, +inf for 0."""
    return min((g.order() for g in a.generators), default=INF)


def monomials_of_degree(n: int, d: int) -> list[Exponent]:
    """All exponent vectors of total degree ``d``, in descending grevlex order."""
    if n == 0:
        return [()] if d == 0 else []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for a in range(remaining, -1, -1):
            rec(prefix + [a], remaining - a, slots - 1)

    rec([], d, n)
    return sorted(out, key=grevlex_key, reverse=True)
