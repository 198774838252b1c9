"""Parity vanishing rules for the local systems on each face."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .leviweights import LeviWeightCoords, lambda_from_n, to_levi_coords
from .parabolic import KostantEntry, kostant_reps, parabolic
from .rootsys import RationalWeight
from .weyl import dot

SURVIVES = "survives"
SHEAF_ZERO = "sheaf_zero"
COHOMOLOGY_ZERO = "cohomology_zero"


@dataclass(frozen=True)
class SurvivalVerdict:
    status: str
    reason: str

    @property
    def survives(self) -> bool:
        return self.status == SURVIVES


def _odd(x: Fraction) -> bool:
    # half-integers are treated as odd: the central character is nontrivial
    return x.denominator != 1 or x.numerator % 2 != 0


# (indices whose oddness kills the sheaf, how they combine, moreover clause)
# "any": sheaf_zero if any listed m_i is odd; "sum": if the sum is odd.
_RULES = {
    "b": ((1, 2, 3), "any", None),
    "a12": ((1, 2, 3), "any", None),
    "a13": ((1, 2), "any", (2, 3)),
    "a23": ((1, 3), "any", (1, 2)),
    "a1": ((1, 2), "any", None),
    "a2": ((1, 3), "any", (1, 2)),
    "a3": ((1, 3), "sum", None),
}


def survives(I, m: LeviWeightCoords | Sequence) -> SurvivalVerdict:
    I = parabolic(I)
    if isinstance(m, LeviWeightCoords):
        if m.parabolic != I:
            raise ValueError(f"coordinates belong to {m.parabolic.name}, not {I.name}")
        vals = m.m
    else:
        vals = tuple(Fraction(x) for x in m)
    idx, mode, moreover = _RULES[I.name]
    names = ", ".join(f"m{i}" for i in idx)
    if mode == "any":
        odd = [i for i in idx if _odd(vals[i - 1])]
        if odd:
            which = ", ".join(f"m{i}" for i in odd)
            return SurvivalVerdict(SHEAF_ZERO, f"{I.name}: {which} odd (rule: any of {names} odd)")
    else:
        if _odd(sum(vals[i - 1] for i in idx)):
            return SurvivalVerdict(SHEAF_ZERO, f"{I.name}: m1 + m3 odd")
    if moreover is not None:
        zero_i, odd_i = moreover
        if vals[zero_i - 1] == 0 and _odd(vals[odd_i - 1]):
            return SurvivalVerdict(
                COHOMOLOGY_ZERO, f"{I.name}: m{zero_i} = 0 and m{odd_i} odd"
            )
    return SurvivalVerdict(SURVIVES, f"{I.name}: parity conditions hold")


def verdicts(I, n: Sequence = (0, 0, 0)) -> list[tuple[KostantEntry, LeviWeightCoords, SurvivalVerdict]]:
    """Verdict for every Kostant representative at lambda given by n."""
    I = parabolic(I)
    lam = lambda_from_n(n)
    out = []
    for entry in kostant_reps(I):
        m = to_levi_coords(I, dot(entry.w, lam))
        out.append((entry, m, survives(I, m)))
    return out


def filtered_reps(I, lam: RationalWeight | None = None, n: Sequence | None = None) -> tuple[KostantEntry, ...]:
    """Kostant representatives whose summand survives the parity rules.

    The weight may be given in epsilon coordinates (``lam``) or as
    fundamental-weight coefficients (``n``); the default is trivial.
    """
    I = parabolic(I)
    if lam is None:
        lam = lambda_from_n(n or (0, 0, 0))
    out = []
    for entry in kostant_reps(I):
        m = to_levi_coords(I, dot(entry.w, lam))
        if survives(I, m).survives:
            out.append(entry)
    return tuple(out)
