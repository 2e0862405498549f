"""Moore matrices, independence testing, and the randomized generator build.

The build draws integer coordinates for n evaluation points, stacks their
automorphism orbit into a Moore matrix, and multiplies by a row-transform
whose entries are signed maximal minors, which forces the requested zeros
identically.  A draw succeeds when the transform is invertible and the
points are linearly independent over Q; a single draw fails with probability
at most (n + k*(k-1)) / s_size, so the retry loop below almost never runs
for adequately large sample sets.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .cyclotomic import CycloElement, GaloisContext
from .linalg import ExactMatrix, bordered_minor_row
from .supports import SupportSpec, check_condition, complete_sets


class RetriesExhausted(RuntimeError):
    """Every allowed draw produced a degenerate transform or dependent points."""


@dataclass(frozen=True)
class EvaluationPoints:
    """n field elements with their integer coordinates over the power basis.

    coords[i][j] is the coefficient of basis element j in point i; every
    coordinate lies in {0, ..., sample_set_size - 1}.
    """

    elements: tuple[CycloElement, ...]
    coords: tuple[tuple[int, ...], ...]
    sample_set_size: int
    seed: int

    def __post_init__(self) -> None:
        if any(not 0 <= v < self.sample_set_size for row in self.coords for v in row):
            raise ValueError("coordinates must lie in [0, sample_set_size)")
        if len(self.elements) != len(self.coords):
            raise ValueError("element/coordinate count mismatch")

    def to_obj(self) -> dict:
        return {
            "coords": [list(row) for row in self.coords],
            "sample_set_size": self.sample_set_size,
            "seed": self.seed,
        }

    @classmethod
    def from_obj(cls, ctx: GaloisContext, obj: dict) -> EvaluationPoints:
        coords = tuple(tuple(int(v) for v in row) for row in obj["coords"])
        elements = tuple(ctx.element(row) for row in coords)
        return cls(elements, coords, int(obj["sample_set_size"]), int(obj["seed"]))


def required_sample_size(n: int, k: int, epsilon: Union[float, str, Fraction]) -> int:
    """Smallest sample-set size with failure bound (n + k*(k-1)) / size <= epsilon.

    Floats are read with decimal semantics ("0.01" means exactly 1/100), so
    the ceiling is computed exactly.
    """
    eps = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must be in (0, 1], got {epsilon}")
    return math.ceil(Fraction(n + k * (k - 1)) / eps)


def sample_points(ctx: GaloisContext, n: int, s_size: int, seed: int) -> EvaluationPoints:
    """Draw n points with iid uniform coordinates in {0, ..., s_size - 1}.

    The stream order is row-major (point index outer, basis index inner), so
    a seed pins the draw bit-for-bit.
    """
    if s_size < 1:
        raise ValueError(f"sample set size must be >= 1, got {s_size}")
    if n > ctx.m:
        raise ValueError(f"need n <= {ctx.m} for p={ctx.p}, got n={n}")
    rng = random.Random(seed)
    coords = tuple(tuple(rng.randrange(s_size) for _ in range(ctx.m)) for _ in range(n))
    elements = tuple(ctx.element(row) for row in coords)
    return EvaluationPoints(elements, coords, s_size, seed)


def moore_matrix(points: Sequence[CycloElement], rows: int) -> ExactMatrix:
    """Matrix whose (i, j) entry is the (i-1)-th automorphism power of point j."""
    if not points:
        raise ValueError("need at least one point")
    ctx = points[0].ctx
    if any(x.ctx.p != ctx.p for x in points):
        raise ValueError("context mismatch among points")
    n = len(points)
    if not 1 <= rows <= ctx.m:
        raise ValueError(f"need 1 <= rows <= {ctx.m} for p={ctx.p}, got {rows}")
    if n > ctx.m:
        raise ValueError(f"need n <= {ctx.m} for p={ctx.p}, got n={n}")
    data = [tuple(points)]
    for _ in range(rows - 1):
        data.append(tuple(x.aut(1) for x in data[-1]))
    return ExactMatrix.from_rows(ctx, data)


def is_independent(points: Sequence[CycloElement]) -> bool:
    """True iff the points are linearly independent over Q.

    Decided exactly as non-vanishing of the top n x n minor of the Moore
    matrix, which is equivalent to rational independence of the points.
    """
    return bool(moore_matrix(points, len(points)).det())


@dataclass(frozen=True)
class ConstructionResult:
    """Outcome of a successful build: generator = transform @ moore exactly."""

    spec: SupportSpec
    completed: SupportSpec
    points: EvaluationPoints
    moore: ExactMatrix
    transform: ExactMatrix
    generator: ExactMatrix
    s_size: int
    seed: int
    max_retries: int
    retries: int

    def __post_init__(self) -> None:
        n, k = self.spec.n, self.spec.k
        if (self.moore.rows, self.moore.cols) != (k, n) \
                or (self.transform.rows, self.transform.cols) != (k, k) \
                or (self.generator.rows, self.generator.cols) != (k, n) \
                or len(self.points.elements) != n:
            raise ValueError("inconsistent shapes in construction result")
        if not (self.completed.is_completed()
                and all(a <= b for a, b in zip(self.spec.zeros, self.completed.zeros))):
            raise ValueError("completed pattern must extend the input to k-1 zeros per row")
        if self.moore != moore_matrix(self.points.elements, k):
            raise ValueError("moore matrix must be the automorphism orbit of the points")
        if self.generator != self.transform @ self.moore:
            raise ValueError("generator must equal transform @ moore exactly")

    def to_obj(self) -> dict:
        return {
            "context": self.moore.ctx.to_obj(),
            "spec": self.spec.to_obj(),
            "completed_zeros": [sorted(z) for z in self.completed.zeros],
            "s_size": self.s_size,
            "seed": self.seed,
            "max_retries": self.max_retries,
            "retries": self.retries,
            "points": self.points.to_obj(),
            "moore": self.moore.to_obj(),
            "transform": self.transform.to_obj(),
            "generator": self.generator.to_obj(),
        }

    @classmethod
    def from_obj(cls, obj: dict) -> ConstructionResult:
        ctx = GaloisContext.from_obj(obj["context"])
        spec = SupportSpec.from_obj(obj["spec"])
        completed = SupportSpec(spec.n, spec.k, obj["completed_zeros"])
        return cls(
            spec=spec,
            completed=completed,
            points=EvaluationPoints.from_obj(ctx, obj["points"]),
            moore=ExactMatrix.from_obj(ctx, obj["moore"]),
            transform=ExactMatrix.from_obj(ctx, obj["transform"]),
            generator=ExactMatrix.from_obj(ctx, obj["generator"]),
            s_size=int(obj["s_size"]),
            seed=int(obj["seed"]),
            max_retries=int(obj["max_retries"]),
            retries=int(obj["retries"]),
        )


def construct(spec: SupportSpec, ctx: GaloisContext, s_size: int, seed: int,
              max_retries: int = 64) -> ConstructionResult:
    """Build a k x n generator matrix realizing the zero pattern.

    The pattern is padded to k-1 zeros per row first (feasibility permitting).
    Draw attempt a uses sample seed ``seed + a``; the first draw with an
    invertible transform and independent points wins, and ``retries`` records
    how many redraws that took.  The retry loop is a determinization wrapper:
    each single draw already succeeds with probability at least
    1 - (n + k*(k-1)) / s_size.
    """
    if spec.n > ctx.m:
        raise ValueError(f"need n <= {ctx.m} for p={ctx.p}, got n={spec.n}")
    ok, witness = check_condition(spec)
    if not ok:
        raise ValueError(
            f"support condition violated by rows {sorted(witness or ())}; "
            "a full-distance code does not exist, build a subcode instead")
    completed = complete_sets(spec)
    col_sets = [sorted(z) for z in completed.zeros]
    for attempt in range(max_retries + 1):
        pts = sample_points(ctx, spec.n, s_size, seed + attempt)
        base = moore_matrix(pts.elements, spec.k)
        t_rows = [bordered_minor_row(base.submatrix(range(spec.k), [c - 1 for c in cols]))
                  for cols in col_sets]
        transform = ExactMatrix.from_rows(ctx, t_rows)
        if transform.det() and is_independent(pts.elements):
            return ConstructionResult(
                spec=spec,
                completed=completed,
                points=pts,
                moore=base,
                transform=transform,
                generator=transform @ base,
                s_size=s_size,
                seed=seed,
                max_retries=max_retries,
                retries=attempt,
            )
    raise RetriesExhausted(
        f"no successful draw in {max_retries + 1} attempts (s_size={s_size}); "
        "the sample set is almost certainly too small")
