"""Known cohomology of the Levi factors and per-face graded cohomology.

Dimensions are kept as formal sums of modular-form symbols (``DimExpr``)
so that the pre-evaluation case lists can be compared symbol for symbol
before the dimension formulas are applied.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from . import data
from .leviweights import lambda_from_n, to_levi_coords
from .parabolic import ParabolicIndex, levi_data, parabolic
from .parity import filtered_reps
from .rootsys import RationalWeight
from .weyl import WeylElement, dot, length


class UnknownFact(LookupError):
    """The requested (factor, weight) lies outside the fact table."""

    def __init__(self, factor: str, weight: Sequence, detail: str = ""):
        self.factor = factor
        self.weight = tuple(weight)
        shown = ", ".join(_fmt(x) for x in self.weight)
        msg = f"unknown_fact: no cohomology fact for {factor} with weight ({shown})"
        if detail:
            msg += f" [{detail}]"
        super().__init__(msg)


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dim_cusp(k: int) -> int:
    """Dimension of level-one cusp forms of weight k."""
    if k < 0:
        raise ValueError("weight must be nonnegative")
    if k % 2 or k < 4:
        return 0
    l, i = divmod(k - 2, 12)
    if i == 0:
        return l - 1
    if i == 10:
        return l + 1
    return l


def dim_eis(k: int) -> int:
    """Dimension of level-one Eisenstein series of weight k (none in weight 2)."""
    if k < 0:
        raise ValueError("weight must be nonnegative")
    return 1 if k % 2 == 0 and k >= 4 else 0


Symbol = tuple[str, int]  # ("S" | "Sbar" | "E", weight)
Monomial = tuple[Symbol, ...]


def _symbol_dim(sym: Symbol) -> int:
    kind, k = sym
    if kind in ("S", "Sbar"):
        return dim_cusp(k)
    if kind == "E":
        return dim_eis(k)
    raise ValueError(f"unknown symbol {kind}")


@dataclass(frozen=True)
class DimExpr:
    """Formal nonnegative combination of products of S_k, Sbar_k, E_k and 1."""

    terms: tuple[tuple[Monomial, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[Monomial, int]) -> "DimExpr":
        items = [(tuple(sorted(m)), c) for m, c in mapping.items() if c]
        merged: dict = defaultdict(int)
        for m, c in items:
            merged[m] += c
        return cls(tuple(sorted((m, c) for m, c in merged.items() if c)))

    @classmethod
    def unit(cls) -> "DimExpr":
        return cls.of({(): 1})

    @classmethod
    def zero(cls) -> "DimExpr":
        return cls(())

    @classmethod
    def parse(cls, text: str) -> "DimExpr":
        return _Parser(text).parse()

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "DimExpr") -> "DimExpr":
        d = defaultdict(int, self.as_dict())
        for m, c in other.terms:
            d[m] += c
        return DimExpr.of(d)

    def __mul__(self, other: "DimExpr") -> "DimExpr":
        d: dict = defaultdict(int)
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                d[tuple(sorted(m1 + m2))] += c1 * c2
        return DimExpr.of(d)

    def is_formal_zero(self) -> bool:
        return not self.terms

    def evaluate(self) -> int:
        total = 0
        for mono, c in self.terms:
            v = c
            for sym in mono:
                v *= _symbol_dim(sym)
            total += v
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms:
            body = "*".join(f"{k}{w}" for k, w in mono) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


class _Parser:
    """Sums and products of 1, S4, Sbar4, E6 and parenthesised groups."""

    _tok = re.compile(r"\s*(?:(\d+)|(Sbar|S|E)(\d+)|([()+*]))")

    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = self._tok.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse {self.text!r} at {pos}")
            pos = m.end()
            if m.group(1):
                self.toks.append(("num", int(m.group(1))))
            elif m.group(2):
                self.toks.append(("sym", (m.group(2), int(m.group(3)))))
            else:
                self.toks.append(("op", m.group(4)))
        self.i = 0

    def parse(self) -> DimExpr:
        e = self._sum()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return e

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def _sum(self) -> DimExpr:
        e = self._prod()
        while self._peek() == ("op", "+"):
            self.i += 1
            e = e + self._prod()
        return e

    def _prod(self) -> DimExpr:
        e = self._atom()
        while self._peek() == ("op", "*"):
            self.i += 1
            e = e * self._atom()
        return e

    def _atom(self) -> DimExpr:
        kind, val = self._peek()
        self.i += 1
        if kind == "num":
            return DimExpr.of({(): val})
        if kind == "sym":
            return DimExpr.of({(val,): 1})
        if (kind, val) == ("op", "("):
            e = self._sum()
            if self._peek() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
            self.i += 1
            return e
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


@dataclass(frozen=True)
class CohomLine:
    parabolic: Optional[ParabolicIndex]
    w: Optional[WeylElement]
    internal_degree: int
    dim: DimExpr
    tag: str = ""

    @property
    def total_degree(self) -> int:
        return self.internal_degree + (length(self.w) if self.w is not None else 0)

    def key(self) -> str:
        return f"{self.parabolic.name}:{self.w.name}" if self.parabolic else self.tag


@dataclass
class GradedSpace:
    """Degree -> lines.  Degrees are internal for factor and Levi spaces
    and total (internal + l(w)) for face spaces."""

    lines: dict[int, list[CohomLine]] = field(default_factory=dict)

    def add(self, degree: int, line: CohomLine) -> None:
        self.lines.setdefault(degree, []).append(line)

    def degrees(self) -> list[int]:
        return sorted(d for d, ls in self.lines.items() if ls)

    def __getitem__(self, degree: int) -> list[CohomLine]:
        return self.lines.get(degree, [])

    def dims(self) -> dict[int, int]:
        return {d: sum(l.dim.evaluate() for l in self.lines[d]) for d in self.degrees()}

    def dim_vector(self, top: int) -> list[int]:
        d = self.dims()
        return [d.get(q, 0) for q in range(top + 1)]

    def formal(self) -> dict[int, DimExpr]:
        out = {}
        for d in self.degrees():
            total = DimExpr.zero()
            for l in self.lines[d]:
                total = total + l.dim
            out[d] = total
        return out


# ---- fact table ---------------------------------------------------------


@lru_cache(maxsize=None)
def _facts() -> dict[tuple[str, str], dict]:
    table = data.load("cohomology_facts.json")
    return {(f["factor"], f["case"]): f for f in table["facts"]}


def fact_table_version() -> int:
    return data.load("cohomology_facts.json")["version"]


_BRACKET = re.compile(r"\[([^\]]+)\]")


def _instantiate(template: str, env: Mapping[str, int]) -> DimExpr:
    def sub(m):
        total = 0
        for part in m.group(1).split("+"):
            part = part.strip()
            total += int(part) if part.isdigit() else env[part]
        return str(total)

    return DimExpr.parse(_BRACKET.sub(sub, template))


def _int(x) -> Optional[int]:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else None


def _classify(factor: str, weight: Sequence) -> tuple[str, dict]:
    """Pick the fact case for a factor weight and bind its variables."""
    w = [Fraction(x) for x in weight]
    ints = [_int(x) for x in w]
    if factor in ("GL1", "Torus"):
        return "any", {}
    if factor in ("Sp2", "SL2"):
        (k,) = ints
        if k is None or k < 0:
            raise UnknownFact(factor, w, "weight must be a nonnegative integer")
        return ("k=0", {}) if k == 0 else ("k>0", {"k": k})
    if factor == "GL2":
        k, l = ints
        if k is None or l is None or k < 0 or k % 2:
            raise UnknownFact(factor, w, "needs even k >= 0 and integral l")
        if k == 0:
            return ("k=0, l even", {}) if l % 2 == 0 else ("k=0, l odd", {})
        if (k // 2) % 2 != l % 2:
            return "k>0, k/2 != l mod 2", {"k": k}
        return "k>0, k/2 = l mod 2", {"k": k}
    if factor == "SL3":
        a, b = ints
        if a is None or b is None or a < 0 or b < 0:
            raise UnknownFact(factor, w, "needs a dominant integral weight")
        if (a, b) == (0, 0):
            return "(0,0)", {}
        if a == b:
            raise UnknownFact(factor, w, "self-dual weight: interior cohomology not tabulated")
        if 0 in (a, b):
            x = a + b
            if x % 2 == 0:
                return "(a,0) or (0,a), a>0 even", {"a": x}
            return "(b,0) or (0,b), b>0 odd", {"b": x}
        evens = [x for x in (a, b) if x % 2 == 0]
        odds = [x for x in (a, b) if x % 2 == 1]
        if len(evens) == 1 and len(odds) == 1:
            return "(a,b) or (b,a), a>0 even, b>0 odd", {"a": evens[0], "b": odds[0]}
        raise UnknownFact(factor, w, "no tabulated SL3 case")
    if factor == "Sp4":
        key = tuple(ints)
        if key == (0, 0):
            return "(0,0)", {}
        if key == (0, 1):
            return "(0,1)", {}
        raise UnknownFact(factor, w)
    raise UnknownFact(factor, w, "factor not in table")


def factor_cohomology(factor: str, weight: Sequence) -> GradedSpace:
    """Graded cohomology of one Levi factor, degree -> formal dimension.

    GL3 weights (a, b, c) first pass the central parity test and then
    reduce to the SL3 weight (a, b).
    """
    if factor == "GL3":
        a, b, c = (Fraction(x) for x in weight)
        total = a + 2 * b + 3 * c
        if total.denominator != 1:
            raise UnknownFact(factor, weight, "non-integral weight")
        if total % 2:
            fact = _facts()[("GL3", "a+2b+3c odd")]
            return _space_from(fact, {})
        return factor_cohomology("SL3", (a, b))
    case, env = _classify(factor, weight)
    fact = _facts().get((factor if factor != "SL2" else "Sp2", case))
    if fact is None:
        raise UnknownFact(factor, weight, f"case {case!r} missing from table")
    return _space_from(fact, env)


def _space_from(fact: dict, env: Mapping[str, int]) -> GradedSpace:
    g = GradedSpace()
    for deg, template in fact["H"].items():
        expr = _instantiate(template, env)
        if not expr.is_formal_zero():
            g.add(int(deg), CohomLine(None, None, int(deg), expr, f"{fact['factor']}:{fact['id']}"))
    return g


def levi_cohomology(I, w: WeylElement, lam: RationalWeight | None = None) -> GradedSpace:
    """Kuenneth product over the Levi factors for the weight w . lambda.

    Lines are indexed by internal degree; all Kuenneth pieces landing in
    the same degree are summed into one line whose tag lists them.
    """
    I = parabolic(I)
    lam = lam if lam is not None else lambda_from_n((0, 0, 0))
    m = to_levi_coords(I, dot(w, lam)).m
    desc = levi_data(I)
    if I.rank == 3:
        pieces = [("Torus", factor_cohomology("Torus", ()))]
    else:
        pieces = [
            (f.tag, factor_cohomology(f.tag, [m[s - 1] for s in f.slots])) for f in desc.factors
        ]
    # running product: degree -> list of (DimExpr, tag parts)
    acc: dict[int, list[tuple[DimExpr, list[str]]]] = {0: [(DimExpr.unit(), [])]}
    for tag, space in pieces:
        nxt: dict = defaultdict(list)
        for d0, items in acc.items():
            for d1 in space.degrees():
                for line in space[d1]:
                    for expr, parts in items:
                        nxt[d0 + d1].append((expr * line.dim, parts + [f"{tag}:H{d1}"]))
        acc = nxt
    out = GradedSpace()
    for deg in sorted(acc):
        total = DimExpr.zero()
        tags = []
        for expr, parts in acc[deg]:
            total = total + expr
            tags.append(" x ".join(parts))
        if not total.is_formal_zero():
            out.add(deg, CohomLine(I, w, deg, total, "Kuenneth(" + " + ".join(tags) + ")"))
    return out


def face_cohomology(I, lam: RationalWeight | None = None, evaluated: bool = True) -> GradedSpace:
    """Cohomology of the face of P_I graded by total degree q = i + l(w).

    With ``evaluated`` false the formal (pre-evaluation) lines are kept
    even when their dimension is zero.
    """
    I = parabolic(I)
    lam = lam if lam is not None else lambda_from_n((0, 0, 0))
    out = GradedSpace()
    for entry in filtered_reps(I, lam):
        levi = levi_cohomology(I, entry.w, lam)
        for i in levi.degrees():
            for line in levi[i]:
                if evaluated and line.dim.evaluate() == 0:
                    continue
                out.add(i + entry.length, line)
    return out
