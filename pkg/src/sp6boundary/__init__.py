"""Boundary cohomology of the Borel-Serre compactification for Sp6(Z).

The pipeline runs bottom-up: the C3 root system and its Weyl group,
Kostant representatives of the seven standard parabolics, parity
vanishing of the local systems, a closed table of Levi cohomology facts,
and finally the E1, E2 and E3 pages of the boundary spectral sequence.
"""

from .cohomdb import DimExpr, UnknownFact, face_cohomology, factor_cohomology, levi_cohomology
from .parabolic import ParabolicIndex, kostant_reps, parabolic
from .parity import filtered_reps
from .spectral import (
    FixtureMismatch,
    NoSolution,
    assemble_E1,
    boundary_cohomology,
    build_d1,
    run_pipeline,
    solve_signs,
)
from .weyl import WeylElement, enumerate_weyl, from_word

__version__ = "0.1.0"

__all__ = [
    "DimExpr",
    "FixtureMismatch",
    "NoSolution",
    "ParabolicIndex",
    "UnknownFact",
    "WeylElement",
    "assemble_E1",
    "boundary_cohomology",
    "build_d1",
    "enumerate_weyl",
    "face_cohomology",
    "factor_cohomology",
    "filtered_reps",
    "from_word",
    "kostant_reps",
    "levi_cohomology",
    "parabolic",
    "run_pipeline",
    "solve_signs",
]
