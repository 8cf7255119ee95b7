import warnings

import pytest

from wkplus.cyclo import r_set
from wkplus.genus import (
    GenusReport,
    InconsistentOrders,
    exact_sequence_order_check,
    genus_ratio_general,
    genus_ratio_quadratic,
    narrow_2rank_oracle,
    rank_quadratic,
    report_sequence,
    t_plus,
    vanishing_criterion,
    wk_plus_sequence,
)
from wkplus.quadfield import QuadraticField

SQUAREFREE_50 = [d for d in range(-50, 51) if abs(d) >= 2 and all(d % (p * p) for p in (2, 3, 5, 7))] + [-1]


def _odd_primes(n):
    n = abs(n)
    return [p for p in range(3, n + 1, 2) if n % p == 0 and all(p % q for q in range(2, p))]


def _is_2adic_square(n, k=12):
    while n % 4 == 0:
        n //= 4
    if n % 2 == 0:
        return False
    mod = 2**k
    return any((z * z - n) % mod == 0 for z in range(1, mod, 2))


def _r_oracle(d):
    # 2 is in R unless Q_2(sqrt d) is Q_2 or Q_2(sqrt 2)
    two = not (_is_2adic_square(d) or _is_2adic_square(2 * d))
    return ([2] if two else []) + _odd_primes(d)


def _t_plus_oracle(d):
    # image of 2 in the square classes at odd l in R is nonzero iff 2 is a non-residue mod some l
    return int(any(all((x * x - 2) % l for x in range(l)) for l in _odd_primes(d)))


def _rank_oracle(d):
    if d == 2:
        return 0
    return len(_r_oracle(d)) - 1 - _t_plus_oracle(d)


@pytest.mark.parametrize("d,expected", [(3, 1), (17, 0), (7, 0), (5, 1), (2, 0), (-1, 0), (105, 1)])
def test_t_plus_examples(d, expected):
    assert t_plus(QuadraticField(d), 3) == expected
    assert t_plus(QuadraticField(d), 3, [2]) == expected


def test_t_plus_square_invariance_and_errors():
    for d in (3, 5, 7, 17, 105, -3):
        for s in (9, 25, 49):
            assert t_plus(d, 5, [2 * s]) == t_plus(d, 5, [2])
    with pytest.raises(ValueError):
        t_plus(3, 4)
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        assert t_plus(3, 3, []) == 0
    assert w


@pytest.mark.parametrize("d,i,rank", [(3, 3, 0), (7, 3, 1), (5, 5, 0), (2, 3, 0), (17, 3, 0), (-7, 5, 0), (105, 7, 1)])
def test_rank_examples(d, i, rank):
    assert rank_quadratic(d, i).rank == rank


def test_codescent_report():
    rep = rank_quadratic(2, 3)
    assert rep.codescent and rep.R == [] and rep.rank == 0
    assert (rep.x_term_log2_min, rep.x_term_log2_max) == (0, 1)
    assert rep.vanishing_criterion and not rep.discrepancy
    with pytest.raises(ValueError):
        genus_ratio_quadratic(2, 3)


def test_rank_formula_dichotomy_and_oracle():
    for d in SQUAREFREE_50:
        assert r_set(QuadraticField(d)) == _r_oracle(d)
        for i in (3, 5, 7):
            rep = rank_quadratic(d, i)
            assert rep.rank >= 0
            assert rep.rank == _rank_oracle(d)
            if rep.R:
                assert rep.x_term_log2_max == 0
            if not rep.codescent:
                assert rep.rank == (rep.r - 2 if rep.t_plus == 1 else rep.r - 1)
            if rep.vanishing_criterion is not None:
                assert rep.discrepancy == ((rep.rank == 0) != rep.vanishing_criterion)


@pytest.mark.parametrize("d,expected", [(3, True), (7, False), (15, False), (13, True), (17, False), (-1, None), (-2, None)])
def test_vanishing_criterion(d, expected):
    assert vanishing_criterion(QuadraticField(d)) is expected


def test_criterion_on_single_prime_fields():
    for ell in (3, 5, 11, 13, 19, 29, 37, 43):
        rep = rank_quadratic(ell, 3)
        assert rep.rank == 0 and rep.vanishing_criterion and not rep.discrepancy
    for ell in (7, 23, 31, 47, 71):
        rep = rank_quadratic(ell, 3)
        assert rep.rank == 1 and not rep.vanishing_criterion and not rep.discrepancy
    for ell in (17, 41, 73, 89):
        rep = rank_quadratic(ell, 3)
        assert rep.rank == 0 and not rep.vanishing_criterion and rep.discrepancy


@pytest.mark.parametrize("d,expected", [(7, 1), (3, 0), (17, 0), (105, 1)])
def test_genus_ratio_quadratic(d, expected):
    assert genus_ratio_quadratic(d, 3) == expected


def test_genus_ratio_matches_rank():
    for d in SQUAREFREE_50:
        if d == 2:
            continue
        for i in (3, 5):
            assert genus_ratio_quadratic(d, i) == rank_quadratic(d, i).rank


def test_genus_ratio_general():
    assert genus_ratio_general(0, [1, 1], 1, 1) == 0
    assert genus_ratio_general(0, [1, 1], 1, 0) == 1
    assert genus_ratio_general(1, [1], 1, 0) == 1
    with pytest.raises(InconsistentOrders):
        genus_ratio_general(0, [1], 1, 1)
    with pytest.raises(InconsistentOrders):
        genus_ratio_general(-1, [1], 0, 0)


def test_exact_sequence_checks():
    assert exact_sequence_order_check([1, 2, 2, 1])
    assert not exact_sequence_order_check([1, 2, 4, 1])
    for delta in range(4):
        for w in (1, 2, 8):
            assert exact_sequence_order_check(wk_plus_sequence(delta, w))
    with pytest.raises(ValueError):
        exact_sequence_order_check([1, 0, 1])
    assert exact_sequence_order_check(report_sequence(rank_quadratic(7, 3)))


@pytest.mark.parametrize("d,expected", [(-1, 0), (3, 1), (105, 2), (-15, 1), (30, 2)])
def test_narrow_2rank_oracle(d, expected):
    assert narrow_2rank_oracle(QuadraticField(d)) == expected


def test_report_roundtrip():
    rep = rank_quadratic(105, 3)
    assert GenusReport.from_json(rep.to_json()) == rep
    with pytest.raises(ValueError):
        GenusReport.from_dict({"d": 3})


def test_custom_dplus_changes_t_plus():
    # 3 is a residue mod 11 but not mod 7
    assert t_plus(11, 3, [3]) == 0
    assert t_plus(7, 3, [3]) == 1
    assert rank_quadratic(7, 3, [3]).rank == 0
