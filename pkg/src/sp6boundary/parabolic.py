"""Standard parabolics P_I, their Levi data and Kostant representatives."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from . import data
from .rootsys import Root, build_root_system, classify_root
from .weyl import IDENTITY, SIMPLE, WeylElement, act, enumerate_weyl, inverse, length, multiply, sort_key


@dataclass(frozen=True, order=True)
class ParabolicIndex:
    """The nonempty set I of simple-root indices defining P_I."""

    subset: tuple[int, ...]

    def __init__(self, subset: Iterable[int]):
        s = tuple(sorted(set(int(i) for i in subset)))
        if not s:
            raise ValueError("a standard parabolic needs a nonempty index set")
        if any(i not in (1, 2, 3) for i in s):
            raise ValueError(f"simple-root indices must lie in 1..3, got {s}")
        object.__setattr__(self, "subset", s)

    @property
    def rank(self) -> int:
        return len(self.subset)

    @property
    def name(self) -> str:
        """CLI name: a1, a2, a3, a12, a13, a23 or b."""
        if self.subset == (1, 2, 3):
            return "b"
        return "a" + "".join(str(i) for i in self.subset)

    @property
    def label(self) -> str:
        if self.subset == (1, 2, 3):
            return "pi"
        return "alpha_" + "".join(str(i) for i in self.subset)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"ParabolicIndex({self.name})"


ALL_NAMES = ("a1", "a2", "a3", "a12", "a13", "a23", "b")


def parabolic(spec: Union[str, ParabolicIndex, Iterable[int]]) -> ParabolicIndex:
    """Parse ``a13``, ``b``, ``pi`` or an index iterable into a ParabolicIndex."""
    if isinstance(spec, ParabolicIndex):
        return spec
    if isinstance(spec, str):
        s = spec.strip().lower()
        if s in ("b", "pi", "borel"):
            return ParabolicIndex((1, 2, 3))
        if s.startswith("alpha_"):
            s = "a" + s[len("alpha_"):]
        if s.startswith("a") and s[1:].isdigit():
            digits = [int(c) for c in s[1:]]
            if len(set(digits)) != len(digits):
                raise ValueError(f"repeated index in parabolic name {spec!r}")
            return ParabolicIndex(digits)
        raise ValueError(f"unknown parabolic name {spec!r}")
    return ParabolicIndex(spec)


def all_parabolics() -> tuple[ParabolicIndex, ...]:
    return tuple(parabolic(n) for n in ALL_NAMES)


def parabolics_of_rank(r: int) -> tuple[ParabolicIndex, ...]:
    return tuple(P for P in all_parabolics() if P.rank == r)


@dataclass(frozen=True)
class LeviFactor:
    tag: str
    slots: tuple[int, ...]  # which Levi coordinates m_i feed this factor (1-based)


@dataclass(frozen=True)
class LeviDescriptor:
    parabolic: ParabolicIndex
    factors: tuple[LeviFactor, ...]
    levi_simple_roots: tuple[int, ...]
    levi_positive_roots: tuple[Root, ...]
    unipotent_roots: tuple[Root, ...]

    @property
    def factor_tags(self) -> tuple[str, ...]:
        return tuple(f.tag for f in self.factors)


def _in_span(root: Root, simple_idx: tuple[int, ...]) -> bool:
    from .rootsys import to_alpha_coords

    coords = to_alpha_coords(root.weight)
    return all(coords[i - 1] == 0 for i in (1, 2, 3) if i not in simple_idx)


@lru_cache(maxsize=None)
def levi_data(I: ParabolicIndex) -> LeviDescriptor:
    I = parabolic(I)
    table = data.load("levi.json")["parabolics"][I.name]
    factors = tuple(LeviFactor(tag, tuple(slots)) for tag, slots in table["factors"])
    delta_m = tuple(i for i in (1, 2, 3) if i not in I.subset)
    pos = build_root_system().positive
    levi_pos = tuple(r for r in pos if _in_span(r, delta_m))
    unip = tuple(r for r in pos if r not in levi_pos)
    return LeviDescriptor(I, factors, delta_m, levi_pos, unip)


def _closure(gens: list[WeylElement]) -> list[WeylElement]:
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=sort_key)


@lru_cache(maxsize=None)
def weyl_levi(I: ParabolicIndex) -> tuple[WeylElement, ...]:
    """W_{M_I}, generated by s_j for j not in I."""
    I = parabolic(I)
    return tuple(_closure([SIMPLE[j] for j in levi_data(I).levi_simple_roots]))


@lru_cache(maxsize=None)
def _levi_set(I: ParabolicIndex) -> frozenset:
    return frozenset(weyl_levi(I))


@dataclass(frozen=True)
class KostantEntry:
    w: WeylElement
    length: int
    parabolic: ParabolicIndex

    @property
    def name(self) -> str:
        return self.w.name


def condition_a(I: ParabolicIndex, w: WeylElement) -> bool:
    """w^{-1}(alpha) is positive for every simple root alpha of the Levi."""
    roots = build_root_system().simple
    winv = inverse(w)
    return all(
        classify_root(act(winv, roots[j - 1].weight)) == "positive"
        for j in levi_data(I).levi_simple_roots
    )


def condition_b(I: ParabolicIndex, w: WeylElement) -> bool:
    """w(Phi^-) meets Phi^+ only inside the unipotent radical roots."""
    levi_pos = {r.coords for r in levi_data(I).levi_positive_roots}
    for r in build_root_system().positive:
        image = act(w, -r.weight)
        if classify_root(image) == "positive":
            if tuple(int(c) for c in image) in levi_pos:
                return False
    return True


@lru_cache(maxsize=None)
def kostant_reps(I: ParabolicIndex) -> tuple[KostantEntry, ...]:
    I = parabolic(I)
    return tuple(
        KostantEntry(w, length(w), I) for w in enumerate_weyl() if condition_a(I, w)
    )


def kostant_reps_condition_b(I: ParabolicIndex) -> tuple[KostantEntry, ...]:
    I = parabolic(I)
    return tuple(
        KostantEntry(w, length(w), I) for w in enumerate_weyl() if condition_b(I, w)
    )


def _check_nested(I: ParabolicIndex, J: ParabolicIndex) -> None:
    if not (set(I.subset) < set(J.subset)):
        raise ValueError(f"{I.name} is not strictly contained in {J.name}")


def kostant_match(I, w: WeylElement, J, w2: WeylElement) -> bool:
    """True iff w2 = s w for some s in W_{M_I}."""
    I, J = parabolic(I), parabolic(J)
    _check_nested(I, J)
    return multiply(w2, inverse(w)) in _levi_set(I)


def epsilon_sign(I, J) -> int:
    """(-1)^j where j is the 1-based position in J of the index added to I."""
    I, J = parabolic(I), parabolic(J)
    if J.rank != I.rank + 1 or not set(I.subset) <= set(J.subset):
        raise ValueError(f"{J.name} is not {I.name} plus one simple root")
    (added,) = set(J.subset) - set(I.subset)
    return -1 if (J.subset.index(added) + 1) % 2 else 1
