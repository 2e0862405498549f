"""Polynomial oracle for zero-pattern feasibility (the GM-MDS criterion).

For a completed pattern, row i of the k x k coefficient matrix lists the
coefficients (lowest degree first) of prod over the row's constrained
columns t of (X - a_t), as polynomials in one variable a_t per column.  The
pattern is feasible exactly when the determinant of that matrix is not the
zero polynomial, which cross-validates the combinatorial subset check by an
entirely different route.

Two decision modes: full symbolic expansion (small k only), and randomized
evaluation at uniform integer points.  The randomized mode has one-sided
error: a "nonzero" verdict always carries a witness point, while a "zero"
verdict can be wrong with probability at most 1/100 per trial because the
determinant has total degree at most k*(k-1)/2.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .supports import SupportSpec, check_condition

SYMBOLIC_MAX_K = 6
RANDOM_TRIALS = 16


class SparsePoly:
    """Multivariate polynomial over Q: sparse map from exponent tuples to
    exact coefficients; zero coefficients are never stored."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None) -> None:
        self.nvars = nvars
        clean: dict[tuple[int, ...], Union[int, Fraction]] = {}
        for mono, c in (terms or {}).items():
            if c:
                if len(mono) != nvars or any(e < 0 for e in mono):
                    raise ValueError(f"bad monomial {mono} for {nvars} variables")
                clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> SparsePoly:
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: Union[int, Fraction]) -> SparsePoly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> SparsePoly:
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Largest monomial degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def _check(self, other: SparsePoly) -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other) -> SparsePoly:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return SparsePoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> SparsePoly:
        return self + (-other if isinstance(other, SparsePoly) else SparsePoly.const(self.nvars, -other))

    def __mul__(self, other) -> SparsePoly:
        if isinstance(other, (int, Fraction)):
            return SparsePoly(self.nvars, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        terms: dict[tuple[int, ...], Union[int, Fraction]] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return SparsePoly(self.nvars, terms)

    __rmul__ = __mul__

    def evaluate(self, point: Sequence[Union[int, Fraction]]) -> Union[int, Fraction]:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        total: Union[int, Fraction] = 0
        for mono, c in self.terms.items():
            val = c
            for x, e in zip(point, mono):
                if e:
                    val *= x ** e
            total += val
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"SparsePoly(nvars={self.nvars}, terms={len(self.terms)})"


def support_polynomial_matrix(spec: SupportSpec) -> list[list[SparsePoly]]:
    """The k x k coefficient matrix of a completed pattern.

    Row i holds the coefficients of prod_{t in zeros_i} (X - a_t) by
    increasing degree, so column k is identically one and column j has
    entries of degree k - j.
    """
    if not spec.is_completed():
        raise ValueError("pattern must be completed (k-1 zeros per row) first")
    n = spec.n
    rows = []
    for z in spec.zeros:
        coeffs = [SparsePoly.const(n, 1)]
        for t in sorted(z):
            var = SparsePoly.variable(n, t - 1)
            lifted = [SparsePoly.zero(n) for _ in range(len(coeffs) + 1)]
            for d, c in enumerate(coeffs):
                lifted[d + 1] = lifted[d + 1] + c
                lifted[d] = lifted[d] - c * var
            coeffs = lifted
        rows.append(coeffs)
    return rows


def symbolic_det(matrix: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """Determinant by cofactor expansion with memoized column-subset minors."""
    k = len(matrix)
    nvars = matrix[0][0].nvars
    memo: dict[tuple[int, ...], SparsePoly] = {}

    def minor(i: int, cols: tuple[int, ...]) -> SparsePoly:
        if not cols:
            return SparsePoly.const(nvars, 1)
        cached = memo.get(cols)
        if cached is not None:
            return cached
        acc = SparsePoly.zero(nvars)
        for pos, c in enumerate(cols):
            entry = matrix[i][c]
            if entry.is_zero:
                continue
            term = entry * minor(i + 1, cols[:pos] + cols[pos + 1:])
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(k)))


def _int_det(rows: list[list[int]]) -> int:
    # Integer Bareiss elimination; every division is exact.
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) // prev
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def _evaluated_det(spec: SupportSpec, point: Sequence[int]) -> int:
    rows = []
    for z in spec.zeros:
        coeffs = [1]
        for t in sorted(z):
            a = point[t - 1]
            lifted = [0] * (len(coeffs) + 1)
            for d, c in enumerate(coeffs):
                lifted[d + 1] += c
                lifted[d] -= c * a
            coeffs = lifted
        rows.append(coeffs)
    return _int_det(rows)


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one oracle run next to the combinatorial check."""

    condition: bool
    det_nonzero: bool
    mode: str
    witness_point: tuple[int, ...] | None

    def to_obj(self) -> dict:
        return {
            "condition": self.condition,
            "det_p_nonzero": self.det_nonzero,
            "mode": self.mode,
            "witness_point": list(self.witness_point) if self.witness_point is not None else None,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> OracleReport:
        w = obj["witness_point"]
        return cls(bool(obj["condition"]), bool(obj["det_p_nonzero"]), str(obj["mode"]),
                   tuple(int(v) for v in w) if w is not None else None)


def det_is_nonzero(spec: SupportSpec, mode: str = "symbolic", seed: int = 0,
                   trials: int = RANDOM_TRIALS) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether the coefficient determinant is a nonzero polynomial.

    Symbolic mode expands the determinant fully (k <= 6).  Randomized mode
    evaluates at ``trials`` uniform points with coordinates in a set of size
    max(1, 50*k*(k-1)) and answers True on the first nonzero value, returned
    as the witness.
    """
    if not spec.is_completed():
        raise ValueError("pattern must be completed (k-1 zeros per row) first")
    if mode == "symbolic":
        if spec.k > SYMBOLIC_MAX_K:
            raise ValueError(f"symbolic mode supports k <= {SYMBOLIC_MAX_K}, got k={spec.k}")
        det = symbolic_det(support_polynomial_matrix(spec))
        return not det.is_zero, None
    if mode == "randomized":
        size = max(1, 50 * spec.k * (spec.k - 1))
        rng = random.Random(seed)
        for _ in range(trials):
            point = tuple(rng.randrange(size) for _ in range(spec.n))
            if _evaluated_det(spec, point) != 0:
                return True, point
        return False, None
    raise ValueError(f"unknown mode {mode!r}")


def oracle_report(spec: SupportSpec, mode: str = "symbolic", seed: int = 0,
                  trials: int = RANDOM_TRIALS) -> OracleReport:
    """Run the determinant oracle and pair it with the combinatorial check."""
    nonzero, witness = det_is_nonzero(spec, mode=mode, seed=seed, trials=trials)
    condition, _ = check_condition(spec)
    return OracleReport(condition=condition, det_nonzero=nonzero, mode=mode,
                        witness_point=witness)


def sweep_agreement(n: int = 4, k: int = 3, mode: str = "symbolic", seed: int = 0) -> dict:
    """Compare oracle and combinatorial check over every family of
    (k-1)-subsets of [n]; returns counts plus any disagreeing patterns."""
    per_row = len(list(itertools.combinations(range(1, n + 1), k - 1)))
    if per_row ** k > 100_000:
        raise ValueError(f"sweep of {per_row ** k} families is above the guard")
    families = itertools.product(itertools.combinations(range(1, n + 1), k - 1), repeat=k)
    total = 0
    agree = 0
    disagreements = []
    for zeros in families:
        spec = SupportSpec(n, k, zeros)
        report = oracle_report(spec, mode=mode, seed=seed)
        total += 1
        if report.condition == report.det_nonzero:
            agree += 1
        else:
            disagreements.append(spec.to_obj())
    return {"n": n, "k": k, "mode": mode, "families": total, "agree": agree,
            "disagreements": disagreements}
