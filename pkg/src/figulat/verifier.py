"""Three independent verification routes for the identity
n^p = sum_{l=0}^{p-1} (-1)^l c_{p,l} F^{p-l}_n, plus grid sweeps.

The algebraic route uses closed forms only. The geometric route enumerates
every face and counts its lattice points one by one. The pointwise route
checks that every cube point is covered with signed multiplicity 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .combinatorics import facet_count, figurate, rhs_identity
from .errors import BudgetExceededError, DomainError
from .facets import DEFAULT_MAX_EXPRESSIONS, enumerate_facets
from .lattice import DEFAULT_MAX_POINTS, cube_points, enumerate_points, point_multiplicity

ROUTES = ("algebraic", "geometric", "pointwise")


@dataclass(frozen=True)
class LTerm:
    """One codimension's contribution to the alternating sum."""
    l: int
    facet_count: int
    per_facet_points: int
    signed_term: int


@dataclass(frozen=True)
class VerificationReport:
    p: int
    n: int
    lhs: int
    route: str
    rhs: int
    per_l_terms: tuple[LTerm, ...]
    ok: bool
    points_enumerated: int = 0
    first_failure: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class SkippedCell:
    """A sweep cell that could not run within its resource budget."""
    p: int
    n: int
    route: str
    reason: str


def _validate(p: int, n: int) -> None:
    if p < 1 or n < 1:
        raise DomainError(f"verification requires p >= 1 and n >= 1, got (p={p}, n={n})")


def verify_algebraic(p: int, n: int) -> VerificationReport:
    """Evaluate both sides in closed form."""
    _validate(p, n)
    terms = tuple(
        LTerm(
            l,
            facet_count(p, l),
            figurate(p - l, n),
            (-1) ** l * facet_count(p, l) * figurate(p - l, n),
        )
        for l in range(p)
    )
    rhs = rhs_identity(p, n)
    lhs = n ** p
    return VerificationReport(p, n, lhs, "algebraic", rhs, terms, lhs == rhs)


def verify_geometric(
    p: int,
    n: int,
    max_expressions: int = DEFAULT_MAX_EXPRESSIONS,
    max_points: int = DEFAULT_MAX_POINTS,
) -> VerificationReport:
    """Enumerate every face and its lattice points; no closed forms on the
    right-hand side."""
    _validate(p, n)
    terms = []
    rhs = 0
    points_enumerated = 0
    for l in range(p):
        faces = enumerate_facets(p, l, max_expressions)
        counts = [
            sum(1 for _ in enumerate_points(f, n, max_points)) for f in faces
        ]
        points_enumerated += sum(counts)
        signed = (-1) ** l * sum(counts)
        rhs += signed
        terms.append(LTerm(l, len(faces), counts[0], signed))
    lhs = n ** p
    return VerificationReport(
        p, n, lhs, "geometric", rhs, tuple(terms), lhs == rhs,
        points_enumerated=points_enumerated,
    )


def verify_pointwise(
    p: int,
    n: int,
    max_points: int = DEFAULT_MAX_POINTS,
) -> VerificationReport:
    """Check that every cube point has signed cover multiplicity 1."""
    _validate(p, n)
    rhs = 0
    ok = True
    first_failure: Optional[tuple[int, ...]] = None
    points_enumerated = 0
    for point in cube_points(p, n, max_points):
        points_enumerated += 1
        multiplicity = point_multiplicity(point, p)
        rhs += multiplicity
        if multiplicity != 1 and first_failure is None:
            ok = False
            first_failure = point.coords
    lhs = n ** p
    return VerificationReport(
        p, n, lhs, "pointwise", rhs, (), ok and lhs == rhs,
        points_enumerated=points_enumerated, first_failure=first_failure,
    )


SweepCell = Union[VerificationReport, SkippedCell]


def sweep(
    p_max: int,
    n_max: int,
    routes: Iterable[str] = ROUTES,
    max_expressions: int = DEFAULT_MAX_EXPRESSIONS,
    max_points: int = DEFAULT_MAX_POINTS,
) -> list[SweepCell]:
    """One cell per (p, n, route), ordered by p, then n, then route.
    Budget failures become SkippedCell entries; the sweep never aborts."""
    routes = list(routes)
    for route in routes:
        if route not in ROUTES:
            raise DomainError(f"unknown route {route!r}; expected one of {ROUTES}")
    if p_max < 1 or n_max < 1:
        raise DomainError(f"sweep requires p_max >= 1 and n_max >= 1")
    ordered_routes = [r for r in ROUTES if r in routes]
    cells: list[SweepCell] = []
    for p in range(1, p_max + 1):
        for n in range(1, n_max + 1):
            for route in ordered_routes:
                try:
                    if route == "algebraic":
                        cells.append(verify_algebraic(p, n))
                    elif route == "geometric":
                        cells.append(verify_geometric(p, n, max_expressions, max_points))
                    else:
                        cells.append(verify_pointwise(p, n, max_points))
                except BudgetExceededError as exc:
                    cells.append(SkippedCell(p, n, route, str(exc)))
    return cells
