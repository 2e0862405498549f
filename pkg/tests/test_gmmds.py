import random
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclogab import (SparsePoly, SupportSpec, check_condition, det_is_nonzero,
                      oracle_report, support_polynomial_matrix, sweep_agreement,
                      symbolic_det)


def lift(poly, extra=1):
    """Same polynomial viewed with extra trailing variables."""
    return SparsePoly(poly.nvars + extra,
                      {mono + (0,) * extra: c for mono, c in poly.terms.items()})


def test_sparse_poly_arithmetic():
    x = SparsePoly.variable(2, 0)
    y = SparsePoly.variable(2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.total_degree() == 2
    assert p.evaluate([Fraction(3), Fraction(2)]) == 5
    assert (p - p).is_zero
    assert SparsePoly.zero(2).total_degree() == -1
    with pytest.raises(ValueError):
        x + SparsePoly.variable(3, 0)


def test_matrix_k2_entries():
    mat = support_polynomial_matrix(SupportSpec(2, 2, [(1,), (2,)]))
    a1 = SparsePoly.variable(2, 0)
    a2 = SparsePoly.variable(2, 1)
    assert mat[0][0] == -a1 and mat[1][0] == -a2
    assert mat[0][1] == SparsePoly.const(2, 1) and mat[1][1] == SparsePoly.const(2, 1)


def test_matrix_last_column_is_ones():
    spec = SupportSpec(5, 3, [(1, 2), (2, 4), (3, 5)])
    mat = support_polynomial_matrix(spec)
    assert all(row[-1] == SparsePoly.const(5, 1) for row in mat)


def test_matrix_requires_completed_pattern():
    with pytest.raises(ValueError):
        support_polynomial_matrix(SupportSpec(4, 3, [(1,), (2, 3), (1, 4)]))


def test_rows_encode_root_products_symbolically():
    # row i, read as a polynomial in an extra variable X, multiplies out to
    # the product of (X - a_t) over the row's zero columns
    spec = SupportSpec(4, 3, [(1, 2), (2, 3), (1, 4)])
    mat = support_polynomial_matrix(spec)
    big_x = SparsePoly.variable(spec.n + 1, spec.n)
    for row_poly, zeros in zip(mat, spec.zeros):
        lhs = SparsePoly.zero(spec.n + 1)
        x_power = SparsePoly.const(spec.n + 1, 1)
        for coeff in row_poly:
            lhs = lhs + lift(coeff) * x_power
            x_power = x_power * big_x
        rhs = SparsePoly.const(spec.n + 1, 1)
        for t in sorted(zeros):
            rhs = rhs * (big_x - SparsePoly.variable(spec.n + 1, t - 1))
        assert lhs == rhs


@given(st.data())
@settings(max_examples=30)
def test_rows_encode_root_products_numerically(data):
    spec = SupportSpec(5, 3, [(1, 5), (2, 3), (3, 4)])
    mat = support_polynomial_matrix(spec)
    point = [data.draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
             for _ in range(spec.n)]
    x = data.draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
    for row_poly, zeros in zip(mat, spec.zeros):
        lhs = sum(c.evaluate(point) * x ** d for d, c in enumerate(row_poly))
        rhs = 1
        for t in zeros:
            rhs *= x - point[t - 1]
        assert lhs == rhs


def test_det_symbolic_k2():
    det = symbolic_det(support_polynomial_matrix(SupportSpec(2, 2, [(1,), (2,)])))
    assert det == SparsePoly(2, {(1, 0): -1, (0, 1): 1})  # a2 - a1
    assert det_is_nonzero(SupportSpec(2, 2, [(1,), (2,)]))[0]
    assert not det_is_nonzero(SupportSpec(2, 2, [(1,), (1,)]))[0]


def test_det_guards():
    spec = SupportSpec(8, 7, [tuple(range(1, 7))] * 7)
    with pytest.raises(ValueError):
        det_is_nonzero(spec, mode="symbolic")
    with pytest.raises(ValueError):
        det_is_nonzero(SupportSpec(3, 2, [(), ()]), mode="symbolic")
    with pytest.raises(ValueError):
        det_is_nonzero(SupportSpec(2, 2, [(1,), (2,)]), mode="nonsense")


def test_sweep_all_pair_families_agree():
    table = sweep_agreement(n=4, k=3, mode="symbolic")
    assert table["families"] == 216
    assert table["agree"] == 216
    assert table["disagreements"] == []


def test_randomized_mode_matches_symbolic_on_sweep():
    sym = sweep_agreement(n=4, k=3, mode="symbolic")
    rnd = sweep_agreement(n=4, k=3, mode="randomized", seed=17)
    assert sym["agree"] == rnd["agree"] == 216


def test_randomized_witness_certifies_nonzero():
    spec = SupportSpec(4, 3, [(1, 2), (1, 3), (2, 3)])
    nonzero, witness = det_is_nonzero(spec, mode="randomized", seed=5)
    assert nonzero and witness is not None
    det = symbolic_det(support_polynomial_matrix(spec))
    assert det.evaluate(list(witness)) != 0


def test_oracle_report_round_trip():
    report = oracle_report(SupportSpec(4, 3, [(1, 2), (1, 3), (2, 3)]),
                           mode="randomized", seed=1)
    obj = report.to_obj()
    assert set(obj) == {"condition", "det_p_nonzero", "mode", "witness_point"}
    assert type(report).from_obj(obj) == report


def all_completed_specs(n, k):
    subsets = list(combinations(range(1, n + 1), k - 1))
    for zeros in product(subsets, repeat=k):
        yield SupportSpec(n, k, zeros)


@pytest.mark.parametrize("n,k", [(2, 1), (4, 1), (2, 2), (3, 2), (4, 2), (5, 2),
                                 (3, 3), (4, 3), (5, 3)])
def test_oracle_equivalence_exhaustive(n, k):
    for spec in all_completed_specs(n, k):
        nonzero, _ = det_is_nonzero(spec, mode="symbolic")
        assert nonzero == check_condition(spec)[0], spec.to_obj()


def test_oracle_equivalence_randomized_bulk():
    rng = random.Random(2024)
    agree = 0
    trials = 1000
    for _ in range(trials):
        k = rng.choice([4, 5])
        n = rng.randint(k, 8)
        zeros = [rng.sample(range(1, n + 1), k - 1) for _ in range(k)]
        spec = SupportSpec(n, k, zeros)
        nonzero, _ = det_is_nonzero(spec, mode="randomized", seed=rng.randrange(2 ** 30))
        if nonzero == check_condition(spec)[0]:
            agree += 1
    assert agree == trials


def test_determinant_degree_bound():
    rng = random.Random(99)
    for _ in range(40):
        k = rng.choice([2, 3, 4])
        n = rng.randint(k, 6)
        zeros = [rng.sample(range(1, n + 1), k - 1) for _ in range(k)]
        det = symbolic_det(support_polynomial_matrix(SupportSpec(n, k, zeros)))
        assert det.total_degree() <= k * (k - 1) // 2
