"""The Weyl group of type C3 as signed permutations of (e1, e2, e3)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence, Union

from .rootsys import RationalWeight, build_root_system, classify_root, to_alpha_coords

GeneratorWord = tuple[int, ...]


@dataclass(frozen=True)
class WeylElement:
    """Sends e_i to signs[i] * e_{perm[i]} (0-based positions)."""

    perm: tuple[int, int, int]
    signs: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2] or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"not a signed permutation: {self.perm}, {self.signs}")

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def __call__(self, v: RationalWeight) -> RationalWeight:
        return act(self, v)

    @property
    def name(self) -> str:
        """Subscript string as used in tables: ``e`` or e.g. ``12321``."""
        return word_name(canonical_word(self))

    def __repr__(self) -> str:
        return f"WeylElement(s_{self.name})" if self.name != "e" else "WeylElement(e)"

    def __lt__(self, other: "WeylElement") -> bool:
        return sort_key(self) < sort_key(other)


IDENTITY = WeylElement((0, 1, 2), (1, 1, 1))

SIMPLE = {
    1: WeylElement((1, 0, 2), (1, 1, 1)),
    2: WeylElement((0, 2, 1), (1, 1, 1)),
    3: WeylElement((0, 1, 2), (1, 1, -1)),
}


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    """The composite a o b (apply b first)."""
    perm = tuple(a.perm[b.perm[i]] for i in range(3))
    signs = tuple(b.signs[i] * a.signs[b.perm[i]] for i in range(3))
    return WeylElement(perm, signs)


def inverse(a: WeylElement) -> WeylElement:
    perm = [0, 0, 0]
    signs = [1, 1, 1]
    for i in range(3):
        perm[a.perm[i]] = i
        signs[a.perm[i]] = a.signs[i]
    return WeylElement(tuple(perm), tuple(signs))


def act(w: WeylElement, v: RationalWeight) -> RationalWeight:
    out = [Fraction(0)] * 3
    for i, c in enumerate(v.coords):
        out[w.perm[i]] += w.signs[i] * c
    return RationalWeight(*out)


def parse_word(word: Union[str, Sequence[int]]) -> GeneratorWord:
    if isinstance(word, str):
        s = word.strip()
        if s.startswith("s_"):
            s = s[2:].strip("{}")
        elif s.startswith("s"):
            s = s[1:]
        if s in ("e", ""):
            return ()
        if not s.isdigit():
            raise ValueError(f"cannot parse Weyl word {word!r}")
        return tuple(int(c) for c in s)
    return tuple(int(c) for c in word)


def from_word(word: Union[str, Sequence[int]]) -> WeylElement:
    """Left-to-right product s_i s_j ... s_k of simple reflections."""
    w = IDENTITY
    for letter in parse_word(word):
        if letter not in SIMPLE:
            raise ValueError(f"generator index must be 1, 2 or 3, got {letter}")
        w = multiply(w, SIMPLE[letter])
    return w


@lru_cache(maxsize=None)
def length(w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(
        1 for r in build_root_system().positive if classify_root(act(w, r.weight)) == "negative"
    )


@lru_cache(maxsize=None)
def canonical_word(w: WeylElement) -> GeneratorWord:
    """Lexicographically smallest reduced word.

    Greedy: the first letter of a reduced word for w is any i with
    l(s_i w) < l(w); choosing the smallest such i at each step yields the
    lexicographically smallest reduced word.
    """
    letters = []
    cur = w
    while cur != IDENTITY:
        for i in (1, 2, 3):
            nxt = multiply(SIMPLE[i], cur)
            if length(nxt) < length(cur):
                letters.append(i)
                cur = nxt
                break
    return tuple(letters)


def word_name(word: Iterable[int]) -> str:
    s = "".join(str(i) for i in word)
    return s or "e"


def sort_key(w: WeylElement) -> tuple[int, GeneratorWord]:
    return (length(w), canonical_word(w))


@lru_cache(maxsize=None)
def enumerate_weyl() -> tuple[WeylElement, ...]:
    elems = [
        WeylElement(tuple(p), tuple(s))
        for p in permutations(range(3))
        for s in product((1, -1), repeat=3)
    ]
    return tuple(sorted(elems, key=sort_key))


def dot(w: WeylElement, lam: RationalWeight) -> RationalWeight:
    """w . lambda = w(lambda + rho) - rho."""
    rho = build_root_system().rho
    return act(w, lam + rho) - rho


# Letter shorthand for positive roots in alpha coordinates.
ROOT_LABELS = {
    (1, 0, 0): "a1",
    (0, 1, 0): "a2",
    (0, 0, 1): "a3",
    (1, 1, 0): "k",
    (0, 1, 1): "f",
    (1, 1, 1): "g",
    (0, 2, 1): "h",
    (1, 2, 1): "i",
    (2, 2, 1): "j",
}


def inverse_simple_image(w: WeylElement, i: int) -> tuple[int, int, int]:
    """alpha coordinates of w^{-1}(alpha_i)."""
    alpha = build_root_system().simple[i - 1].weight
    coords = to_alpha_coords(act(inverse(w), alpha))
    return tuple(int(c) for c in coords)


def root_label(alpha_coords: Sequence[int]) -> str:
    t = tuple(alpha_coords)
    if t in ROOT_LABELS:
        return ROOT_LABELS[t]
    neg = tuple(-x for x in t)
    if neg in ROOT_LABELS:
        return "-" + ROOT_LABELS[neg]
    raise ValueError(f"{t} is not a root in alpha coordinates")


def weyl_table() -> list[dict]:
    """Rows of (w, w^{-1}, length, labels of w^{-1}(alpha_i))."""
    rows = []
    for w in enumerate_weyl():
        rows.append(
            {
                "w": w.name,
                "w_inv": inverse(w).name,
                "length": length(w),
                "inverse_images": [root_label(inverse_simple_image(w, i)) for i in (1, 2, 3)],
            }
        )
    return rows
