"""Independent oracles used to cross-check the library from a second route."""

import cmath
from fractions import Fraction
from itertools import combinations, permutations

from cyclogab import ExactMatrix, SupportSpec


def embed(elem, power: int = 1) -> complex:
    """Numerical image of an element under zeta -> exp(2*pi*i*power/p)."""
    z = cmath.exp(2j * cmath.pi * power / elem.ctx.p)
    return sum(float(c) * z ** i for i, c in enumerate(elem.coeffs))


def close(a: complex, b: complex, tol: float = 1e-8) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def perm_sign(perm) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def leibniz_det(matrix: ExactMatrix):
    """Brute-force determinant as a signed sum over all permutations."""
    n = matrix.rows
    ctx = matrix.ctx
    total = ctx.zero()
    for perm in permutations(range(n)):
        prod = ctx.one()
        for i, j in enumerate(perm):
            prod = prod * matrix[i, j]
        total = total + prod if perm_sign(perm) > 0 else total - prod
    return total


def brute_condition(spec: SupportSpec) -> bool:
    """Direct enumeration of every nonempty row subset, no dedup, no memo."""
    for r in range(1, spec.k + 1):
        for omega in combinations(range(spec.k), r):
            common = set(spec.zeros[omega[0]])
            for i in omega[1:]:
                common &= spec.zeros[i]
            if len(common) + len(omega) > spec.k:
                return False
    return True


def brute_required_dimension(spec: SupportSpec) -> int:
    best = 0
    for r in range(1, spec.k + 1):
        for omega in combinations(range(spec.k), r):
            common = set(spec.zeros[omega[0]])
            for i in omega[1:]:
                common &= spec.zeros[i]
            best = max(best, len(common) + len(omega))
    return best


def coordinate_rank(points) -> int:
    """Rank over Q of the rational coordinate vectors of the points.

    Linear independence of field elements over Q is equivalent to full rank
    here, which gives a route to the independence decision that never touches
    Moore matrices or automorphisms.
    """
    rows = [list(x.coeffs) for x in points]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = Fraction(1) / rows[rank][c]
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] * inv
                for j in range(c, cols):
                    rows[i][j] -= f * rows[rank][j]
        rank += 1
    return rank


def brute_hamming_distance(matrix: ExactMatrix) -> int:
    """Distance via the largest rank-deficient column set, scanning all subsets."""
    k, n = matrix.rows, matrix.cols
    widest = k - 1  # any k-1 columns are trivially rank-deficient for k rows
    for size in range(k, n + 1):
        for cols in combinations(range(n), size):
            if matrix.column_subset(cols).rank() < k:
                widest = max(widest, size)
    return n - widest
