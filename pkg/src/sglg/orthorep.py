"""Hilbert-space realizations of partition logics and their verification.

A realization assigns one real unit vector per atom; it is checked
numerically on three counts: each context must be an orthonormal set,
each context must span the full dimension, and atoms that never share a
context must be non-orthogonal (faithfulness).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations

from .errors import LogicFileError, MissingVectorError, ThetaOutOfRangeError
from .logic import PartitionLogic

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class VectorRealization:
    dimension: int
    vectors: dict[str, tuple[float, ...]]
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if not isinstance(self.dimension, int) or self.dimension <= 0:
            raise ValueError("dimension must be a positive integer")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        for atom, vector in self.vectors.items():
            if len(vector) != self.dimension:
                raise ValueError(
                    f"vector for {atom!r} has length {len(vector)}, "
                    f"expected {self.dimension}"
                )
            if all(abs(component) <= self.tolerance for component in vector):
                raise ValueError(f"vector for {atom!r} is numerically zero")

    def vector_for(self, atom: str) -> tuple[float, ...]:
        try:
            return self.vectors[atom]
        except KeyError:
            raise MissingVectorError(atom) from None


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    failures: tuple[str, ...]


@dataclass(frozen=True)
class FaithfulnessReport:
    orthonormality: CheckResult
    completeness: CheckResult
    faithfulness: CheckResult

    @property
    def passed(self) -> bool:
        return (
            self.orthonormality.passed
            and self.completeness.passed
            and self.faithfulness.passed
        )

    def checks(self) -> tuple[CheckResult, CheckResult, CheckResult]:
        return (self.orthonormality, self.completeness, self.faithfulness)


def _dot(u: tuple[float, ...], v: tuple[float, ...]) -> float:
    return math.fsum(a * b for a, b in zip(u, v))


def build_v_realization(theta: float) -> VectorRealization:
    """The two-basis three-dimensional realization with mixing angle theta.

    Contexts {a,b,c} and {c,d,e} become two orthonormal bases sharing the
    third axis; theta must lie strictly inside (0, pi/2), otherwise d or e
    collapses onto a coordinate axis and faithfulness is lost.
    """
    if not 0.0 < theta < math.pi / 2:
        raise ThetaOutOfRangeError(
            f"theta must lie strictly between 0 and pi/2, got {theta!r}"
        )
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    return VectorRealization(
        dimension=3,
        vectors={
            "a": (1.0, 0.0, 0.0),
            "b": (0.0, 1.0, 0.0),
            "c": (0.0, 0.0, 1.0),
            "d": (cos_t, sin_t, 0.0),
            "e": (-sin_t, cos_t, 0.0),
        },
    )


def verify_faithful(
    logic: PartitionLogic, realization: VectorRealization
) -> FaithfulnessReport:
    """Run the three numerical checks of a faithful orthogonal representation.

    Unit norms are required, not imposed: a non-normalized vector fails the
    orthonormality check rather than being silently rescaled.
    """
    tol = realization.tolerance
    for atom in logic.atoms:
        realization.vector_for(atom)

    ortho_worst = 0.0
    ortho_failures = []
    for ctx in logic.contexts:
        for j in ctx:
            atom = logic.atoms[j]
            deviation = abs(
                math.sqrt(_dot(realization.vectors[atom], realization.vectors[atom]))
                - 1.0
            )
            ortho_worst = max(ortho_worst, deviation)
            if deviation > tol:
                ortho_failures.append(f"|{atom}| deviates from 1 by {deviation:.3e}")
        for j, k in combinations(ctx, 2):
            u, v = logic.atoms[j], logic.atoms[k]
            deviation = abs(_dot(realization.vectors[u], realization.vectors[v]))
            ortho_worst = max(ortho_worst, deviation)
            if deviation > tol:
                ortho_failures.append(f"{u}·{v} = {deviation:.3e}")

    comp_worst = 0.0
    comp_failures = []
    for index, ctx in enumerate(logic.contexts):
        gap = abs(len(ctx) - realization.dimension)
        comp_worst = max(comp_worst, float(gap))
        if gap:
            comp_failures.append(
                f"context {index} has {len(ctx)} atoms in dimension "
                f"{realization.dimension}"
            )

    co_contextual = set()
    for ctx in logic.contexts:
        co_contextual.update(frozenset(pair) for pair in combinations(ctx, 2))
    faith_worst = math.inf
    faith_failures = []
    for j, k in combinations(range(len(logic.atoms)), 2):
        if frozenset((j, k)) in co_contextual:
            continue
        u, v = logic.atoms[j], logic.atoms[k]
        margin = abs(_dot(realization.vectors[u], realization.vectors[v]))
        faith_worst = min(faith_worst, margin)
        if margin <= tol:
            faith_failures.append(f"{u}·{v} = {margin:.3e} though they share no context")

    return FaithfulnessReport(
        CheckResult(
            "context orthonormality", not ortho_failures, ortho_worst,
            tuple(ortho_failures),
        ),
        CheckResult(
            "basis completeness", not comp_failures, comp_worst,
            tuple(comp_failures),
        ),
        CheckResult(
            "faithfulness", not faith_failures, faith_worst,
            tuple(faith_failures),
        ),
    )


def load_vector_file(text: str) -> VectorRealization:
    """Parse a JSON vector file: dimension, vectors per atom, tolerance."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LogicFileError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise LogicFileError("vector file must be a JSON object")
    unknown = set(payload) - {"dimension", "vectors", "tolerance"}
    if unknown:
        raise LogicFileError(f"unknown keys: {sorted(unknown)}")
    dimension = payload.get("dimension")
    if not isinstance(dimension, int) or isinstance(dimension, bool):
        raise LogicFileError("'dimension' must be an integer", "dimension")
    raw_vectors = payload.get("vectors")
    if not isinstance(raw_vectors, dict) or not raw_vectors:
        raise LogicFileError("'vectors' must be a non-empty object", "vectors")
    vectors = {}
    for atom, row in raw_vectors.items():
        if not isinstance(row, list) or not all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in row
        ):
            raise LogicFileError("vector must be a list of reals", f"vectors.{atom}")
        vectors[atom] = tuple(float(x) for x in row)
    tolerance = payload.get("tolerance", DEFAULT_TOLERANCE)
    if not isinstance(tolerance, (int, float)) or isinstance(tolerance, bool):
        raise LogicFileError("'tolerance' must be a number", "tolerance")
    try:
        return VectorRealization(dimension, vectors, float(tolerance))
    except ValueError as exc:
        raise LogicFileError(str(exc)) from exc
