"""Jet equations of an ideal and their restriction to the fiber over the origin.

The order-``i`` jet ring has variables ``x{j}_{l}`` for ``0 <= j < n`` and
``0 <= l <= i``, flattened as index ``l*n + j``. Because lower orders are a
prefix of higher ones, moving a polynomial to a bigger jet ring just pads
exponent vectors with zeros.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Ideal, Polynomial


class NotVanishingAtOriginError(ValueError):
    """The ideal contains a unit near the origin, so its lct there is +inf."""


@dataclass(frozen=True)
class JetRing:
    n: int
    order: int

    @property
    def nvars(self) -> int:
        return self.n * (self.order + 1)

    def index(self, j: int, level: int) -> int:
        if not (0 <= j < self.n and 0 <= level <= self.order):
            raise IndexError(f"x{j}_{level} is not a variable of {self}")
        return level * self.n + j

    def names(self) -> list[str]:
        return [f"x{k % self.n}_{k // self.n}" for k in range(self.nvars)]

    def fiber_names(self) -> list[str]:
        """Names of the variables surviving on the fiber (levels 1..order)."""
        return self.names()[self.n:]

    def include(self, f: Polynomial) -> Polynomial:
        """Identify base variable x_j with the level-0 jet variable x{j}_0."""
        if f.n != self.n:
            raise ValueError(f"base polynomial has {f.n} variables, ring base is {self.n}")
        return f.embed(self.nvars)


def _level_of(p: Polynomial, n: int) -> int:
    top = -1
    for e in p.terms:
        for k, a in enumerate(e):
            if a and k // n > top:
                top = k // n
    return top


def derive(p: Polynomial, n: int) -> Polynomial:
    """Apply the derivation sending x{j}_{l} to x{j}_{l+1}.

    ``p`` lives in a jet ring over ``n`` base variables (``p.n`` a multiple of
    ``n``). If ``p`` involves the top level, the result is returned in the jet
    ring one order higher.
    """
    if n <= 0 or p.n % n:
        raise ValueError(f"{p.n} variables is not a jet ring over {n} base variables")
    nvars = p.n
    if _level_of(p, n) == nvars // n - 1:
        nvars += n
        p = p.embed(nvars)
    return _derive_in_place(p, n)


def _derive_in_place(p: Polynomial, n: int) -> Polynomial:
    nvars = p.n
    out: dict = {}
    for e, c in p.items():
        for k, a in enumerate(e):
            if not a:
                continue
            if k + n >= nvars:
                raise ValueError("derivative leaves the jet ring")
            new = list(e)
            new[k] -= 1
            new[k + n] += 1
            new = tuple(new)
            s = out.get(new, 0) + a * c
            if s:
                out[new] = s
            else:
                out.pop(new, None)
    return Polynomial._trusted(nvars, out)


@dataclass(frozen=True)
class JetIdeal:
    """Generators ``D^q f`` for every source generator ``f`` (outer) and
    ``0 <= q <= order`` (inner)."""

    ring: JetRing
    generators: tuple
    source: Ideal

    def as_ideal(self) -> Ideal:
        return Ideal(self.ring.nvars, self.generators)

    def truncated(self, order: int) -> "JetIdeal":
        """Drop derivatives above ``order`` (still in the current ring)."""
        per = self.ring.order + 1
        gens = tuple(g for k, g in enumerate(self.generators) if k % per <= order)
        return JetIdeal(self.ring, gens, self.source)


def jet_ideal(a: Ideal, order: int) -> JetIdeal:
    if order < 0:
        raise ValueError("jet order must be nonnegative")
    if not a.vanishes_at_origin:
        raise NotVanishingAtOriginError(
            "ideal does not vanish at the origin; its lct there is +inf")
    ring = JetRing(a.n, order)
    gens = []
    for f in a.generators:
        g = ring.include(f)
        gens.append(g)
        for _ in range(order):
            g = _derive_in_place(g, a.n)
            gens.append(g)
    return JetIdeal(ring, tuple(gens), a)


@dataclass(frozen=True)
class FiberIdeal:
    """The jet ideal restricted to arcs based at the origin.

    Lives in the ``n*order`` variables of levels ``1..order``; ``dropped``
    counts generators that vanished identically under the restriction.
    """

    ring: JetRing
    ideal: Ideal
    dropped: int = field(default=0)

    @property
    def nvars(self) -> int:
        return self.ideal.n

    @property
    def generators(self):
        return self.ideal.generators


def fiber_over_origin(J: JetIdeal) -> FiberIdeal:
    n = J.ring.n
    nvars = J.ring.nvars - n
    gens = []
    dropped = 0
    for g in J.generators:
        kept = {e[n:]: c for e, c in g.items() if not any(e[:n])}
        if kept:
            gens.append(Polynomial._trusted(nvars, kept).monic())
        else:
            dropped += 1
    return FiberIdeal(J.ring, Ideal(nvars, gens), dropped)
