"""Root data of type C3 in epsilon coordinates.

Every weight in the package is stored as an exact rational triple of
epsilon coefficients.  Other bases (alpha coordinates, Levi gamma bases)
are derived views.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

Number = Union[int, Fraction, str]


@dataclass(frozen=True, order=True)
class RationalWeight:
    """A weight c1*e1 + c2*e2 + c3*e3 with exact rational coefficients."""

    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __init__(self, c1: Number = 0, c2: Number = 0, c3: Number = 0):
        object.__setattr__(self, "c1", Fraction(c1))
        object.__setattr__(self, "c2", Fraction(c2))
        object.__setattr__(self, "c3", Fraction(c3))

    @classmethod
    def of(cls, coords: Iterable[Number]) -> "RationalWeight":
        return cls(*coords)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c1, self.c2, self.c3)

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "RationalWeight") -> "RationalWeight":
        return RationalWeight(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "RationalWeight") -> "RationalWeight":
        return RationalWeight(*(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "RationalWeight":
        return RationalWeight(*(-a for a in self))

    def scale(self, k: Number) -> "RationalWeight":
        k = Fraction(k)
        return RationalWeight(*(k * a for a in self))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self) -> str:
        return "RationalWeight(%s)" % ", ".join(_fmt(c) for c in self)

    def __str__(self) -> str:
        return "(%s)" % ", ".join(_fmt(c) for c in self)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


ZERO = RationalWeight(0, 0, 0)


@dataclass(frozen=True)
class Root:
    coords: tuple[int, int, int]
    sign_class: str  # "positive" or "negative"

    @property
    def weight(self) -> RationalWeight:
        return RationalWeight(*self.coords)


@dataclass(frozen=True)
class RootSystemC3:
    all_roots: tuple[Root, ...]
    positive: tuple[Root, ...]
    simple: tuple[Root, ...]
    fundamental: tuple[RationalWeight, ...]
    rho: RationalWeight


def _positive_coords() -> list[tuple[int, int, int]]:
    out = []
    for i, j in combinations(range(3), 2):
        v = [0, 0, 0]
        v[i], v[j] = 1, -1
        out.append(tuple(v))
    for i, j in combinations(range(3), 2):
        v = [0, 0, 0]
        v[i], v[j] = 1, 1
        out.append(tuple(v))
    for i in range(3):
        v = [0, 0, 0]
        v[i] = 2
        out.append(tuple(v))
    return out


@lru_cache(maxsize=None)
def build_root_system() -> RootSystemC3:
    pos = [Root(c, "positive") for c in _positive_coords()]
    neg = [Root(tuple(-x for x in r.coords), "negative") for r in pos]
    simple = (
        Root((1, -1, 0), "positive"),
        Root((0, 1, -1), "positive"),
        Root((0, 0, 2), "positive"),
    )
    fundamental = (
        RationalWeight(1, 0, 0),
        RationalWeight(1, 1, 0),
        RationalWeight(1, 1, 1),
    )
    half = Fraction(1, 2)
    rho = RationalWeight(*(half * sum(r.coords[k] for r in pos) for k in range(3)))
    return RootSystemC3(tuple(pos + neg), tuple(pos), simple, fundamental, rho)


@lru_cache(maxsize=None)
def _classes() -> dict[tuple[int, int, int], str]:
    return {r.coords: r.sign_class for r in build_root_system().all_roots}


def classify_root(v: RationalWeight | Iterable[Number]) -> str:
    """Return ``positive``, ``negative`` or ``not_a_root``."""
    coords = tuple(Fraction(c) for c in v)
    if any(c.denominator != 1 for c in coords):
        return "not_a_root"
    return _classes().get(tuple(int(c) for c in coords), "not_a_root")


def simple_reflection(i: int, w: RationalWeight) -> RationalWeight:
    c1, c2, c3 = w.coords
    if i == 1:
        return RationalWeight(c2, c1, c3)
    if i == 2:
        return RationalWeight(c1, c3, c2)
    if i == 3:
        return RationalWeight(c1, c2, -c3)
    raise ValueError(f"simple reflection index must be 1, 2 or 3, got {i}")


def coroot_pairing(v: RationalWeight, alpha: Root) -> Fraction:
    """<v, alpha^vee> for the standard inner product on epsilon coordinates."""
    a = alpha.coords
    norm = sum(x * x for x in a)
    return 2 * sum(x * y for x, y in zip(v, a)) / Fraction(norm)


# alpha1 = e1 - e2, alpha2 = e2 - e3, alpha3 = 2 e3
def to_alpha_coords(v: RationalWeight) -> tuple[Fraction, Fraction, Fraction]:
    c1, c2, c3 = v.coords
    return (c1, c1 + c2, (c1 + c2 + c3) / 2)


def from_alpha_coords(a: Iterable[Number]) -> RationalWeight:
    a1, a2, a3 = (Fraction(x) for x in a)
    return RationalWeight(a1, a2 - a1, 2 * a3 - a2)
