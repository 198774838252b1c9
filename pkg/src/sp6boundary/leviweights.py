"""Levi fundamental-weight bases and the coefficient tables of w . lambda."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import data
from .parabolic import ParabolicIndex, kostant_reps, parabolic
from .rootsys import ZERO, RationalWeight, build_root_system
from .weyl import WeylElement, act, dot


@lru_cache(maxsize=None)
def gamma_basis(I) -> tuple[RationalWeight, RationalWeight, RationalWeight]:
    I = parabolic(I)
    rows = data.load("levi.json")["gamma_basis"][I.name]
    return tuple(RationalWeight(*row) for row in rows)


def _solve3(cols: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve sum_j x_j cols[j] = rhs by Cramer's rule (3x3, exact)."""

    def det(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    a = [[cols[j][i] for j in range(3)] for i in range(3)]
    d = det(a)
    if d == 0:
        raise ValueError("basis is singular")
    out = []
    for j in range(3):
        m = [row[:] for row in a]
        for i in range(3):
            m[i][j] = rhs[i]
        out.append(det(m) / d)
    return out


@dataclass(frozen=True)
class LeviWeightCoords:
    parabolic: ParabolicIndex
    m1: Fraction
    m2: Fraction
    m3: Fraction

    @property
    def m(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.m1, self.m2, self.m3)

    def __iter__(self):
        return iter(self.m)

    def to_weight(self) -> RationalWeight:
        g = gamma_basis(self.parabolic)
        out = ZERO
        for coeff, vec in zip(self.m, g):
            out = out + vec.scale(coeff)
        return out


def to_levi_coords(I, v: RationalWeight) -> LeviWeightCoords:
    I = parabolic(I)
    g = gamma_basis(I)
    m = _solve3([x.coords for x in g], v.coords)
    return LeviWeightCoords(I, *m)


_TERM = re.compile(r"^(?P<num>\d+)?(?:n(?P<var>[123]))?(?:/(?P<den>\d+))?$")


@dataclass(frozen=True)
class SymbolicCoeff:
    """Affine expression a0 + a1 n1 + a2 n2 + a3 n3."""

    const: Fraction
    lin: tuple[Fraction, Fraction, Fraction]

    @classmethod
    def make(cls, const, lin: Iterable) -> "SymbolicCoeff":
        return cls(Fraction(const), tuple(Fraction(x) for x in lin))

    @classmethod
    def parse(cls, text: str) -> "SymbolicCoeff":
        """Parse strings like ``n1/2 + n2 + 2n3 - 1/2`` or ``-4``."""
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise ValueError("empty expression")
        if s[0] not in "+-":
            s = "+" + s
        const = Fraction(0)
        lin = [Fraction(0)] * 3
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            m = _TERM.match(body)
            if not m or (m.group("num") is None and m.group("var") is None):
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            val = Fraction(int(m.group("num") or 1), int(m.group("den") or 1))
            if sign == "-":
                val = -val
            if m.group("var"):
                lin[int(m.group("var")) - 1] += val
            else:
                const += val
        return cls(const, tuple(lin))

    def evaluate(self, n: Sequence) -> Fraction:
        return self.const + sum(a * Fraction(x) for a, x in zip(self.lin, n))

    def __str__(self) -> str:
        parts = []
        for k, a in enumerate(self.lin):
            if a:
                parts.append((a, f"n{k + 1}"))
        if self.const or not parts:
            parts.append((self.const, ""))
        out = ""
        for idx, (a, var) in enumerate(parts):
            neg = a < 0
            mag = -a if neg else a
            if var:
                body = var if mag.numerator == 1 else f"{mag.numerator}{var}"
                if mag.denominator != 1:
                    body += f"/{mag.denominator}"
            else:
                body = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if idx == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out


def lambda_from_n(n: Sequence) -> RationalWeight:
    """lambda = n1 g1 + n2 g2 + n3 g3 with the fundamental weights of C3."""
    g = build_root_system().fundamental
    out = ZERO
    for coeff, vec in zip(n, g):
        out = out + vec.scale(coeff)
    return out


def symbolic_row(I, w: WeylElement) -> tuple[SymbolicCoeff, SymbolicCoeff, SymbolicCoeff]:
    """Levi coordinates of w . (n1 g1 + n2 g2 + n3 g3) as affine forms."""
    I = parabolic(I)
    const = to_levi_coords(I, dot(w, ZERO)).m
    fund = build_root_system().fundamental
    cols = [to_levi_coords(I, act(w, g)).m for g in fund]
    return tuple(
        SymbolicCoeff.make(const[i], (cols[0][i], cols[1][i], cols[2][i])) for i in range(3)
    )


def kostant_weight_table(I, symbolic: bool = False, n: Sequence = (0, 0, 0)) -> list[tuple[WeylElement, tuple]]:
    """One row per Kostant representative of P_I.

    Symbolic rows hold affine forms in (n1, n2, n3); otherwise the weight
    lambda = n1 g1 + n2 g2 + n3 g3 is substituted (default: trivial).
    """
    I = parabolic(I)
    lam = lambda_from_n(n)
    rows = []
    for entry in kostant_reps(I):
        if symbolic:
            rows.append((entry.w, symbolic_row(I, entry.w)))
        else:
            rows.append((entry.w, to_levi_coords(I, dot(entry.w, lam)).m))
    return rows
