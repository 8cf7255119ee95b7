from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wkplus.kernels import (
    CertificationError,
    Provenance,
    TateKernelPresentation,
    d_plus_basis,
    default_presentation,
    delta_i,
    norm_index,
    parse_generators,
    signature_vector,
)
from wkplus.padic import INF, hilbert
from wkplus.quadfield import QQ, QuadraticField

SQUAREFREE = [d for d in range(-40, 41) if d not in (0, 1) and all(d % (p * p) for p in (2, 3, 5))]


def test_signature_examples():
    assert signature_vector(-3, QQ) == (1,)
    assert signature_vector((1, 1), QuadraticField(2)) == (0, 1)
    assert signature_vector((5, 3), QuadraticField(3)) == (0, 1)  # 25 < 27: sign follows b
    assert signature_vector((-5, 3), QuadraticField(3)) == (0, 1)
    assert signature_vector((2, 5), QuadraticField(-7)) == ()


@pytest.mark.parametrize("a,b,d", [(1, 1, 2), (5, 3, 3), (-7, 2, 13), (3, -1, 5), (0, -2, 6), (4, 0, 7), (-1, 1, 2)])
def test_signature_matches_exact_squaring(a, b, d):
    # sign of a + s b sqrt d decided by comparing a^2 with b^2 d, checked against a high-precision isqrt bound
    from math import isqrt

    bits = []
    for s in (1, -1):
        scale = 10**12
        root = isqrt(b * b * d * scale * scale)  # floor(|b| sqrt d * scale)
        val = a * scale + (root if s * b > 0 else -root)
        bits.append(0 if val > 0 else 1)
    assert signature_vector((a, b), QuadraticField(d)) == tuple(bits)


def test_signature_rejects_zero():
    with pytest.raises(ValueError):
        signature_vector((0, 0), QuadraticField(2))
    with pytest.raises(ValueError):
        signature_vector(0, QQ)


def test_delta_and_dplus_over_q():
    P = default_presentation()
    assert P.provenance is Provenance.CONFIGURED
    assert delta_i(P) == 0
    assert d_plus_basis(P) == [2]
    only2 = TateKernelPresentation(QQ, (2,))
    assert delta_i(only2) == 1 and d_plus_basis(only2) == [2]
    only_m1 = TateKernelPresentation(QQ, (-1,))
    assert delta_i(only_m1) == 0 and d_plus_basis(only_m1) == []


def test_imaginary_field_presentation():
    P = TateKernelPresentation(QuadraticField(-5), ((1, 1), 2))
    assert delta_i(P) == 0
    assert len(d_plus_basis(P)) == 2


def test_real_quadratic_presentation():
    E = QuadraticField(2)
    P = TateKernelPresentation(E, (-1, (1, 1)))
    # signatures (1,1) and (0,1): full rank, no totally positive combination
    assert delta_i(P) == 0
    assert d_plus_basis(P) == []
    P2 = TateKernelPresentation(E, (-1, 3))
    assert delta_i(P2) == 1
    (g,) = d_plus_basis(P2)
    assert g == (3, 0)


def test_dependent_generators_rejected():
    with pytest.raises(CertificationError):
        TateKernelPresentation(QQ, (2, 8))
    with pytest.raises(CertificationError):
        TateKernelPresentation(QQ, (-1, 3, -3))
    with pytest.raises(CertificationError):
        TateKernelPresentation(QuadraticField(2), ((1, 1), (3, 2)))  # (1+sqrt2)^2 = 3+2sqrt2


@given(st.lists(st.integers(-30, 30).filter(bool), min_size=1, max_size=4))
def test_dplus_basis_is_totally_positive(gens):
    try:
        P = TateKernelPresentation(QQ, tuple(gens))
    except CertificationError:
        return
    for g in d_plus_basis(P):
        assert signature_vector(g, QQ) == (0,)
    assert len(d_plus_basis(P)) + (1 - delta_i(P)) == len(gens)


@pytest.mark.parametrize("d,expected", [(3, 2), (17, 1), (5, 2), (7, 1), (-1, 1), (105, 2)])
def test_norm_index_examples(d, expected):
    assert norm_index([2], QuadraticField(d)) == expected


def test_norm_index_square_invariance_and_local_criterion():
    for d in SQUAREFREE:
        E = QuadraticField(d)
        for g in (2, 3, -1, 6, Fraction(5, 7)):
            base = norm_index([g], E)
            for s in (4, 9, Fraction(1, 49)):
                assert norm_index([g * s], E) == base
            everywhere = all(hilbert(g, d, v) == 1 for v in [INF] + [p for p in range(2, 60) if all(p % q for q in range(2, p))])
            assert (base == 1) == everywhere


def test_parse_generators():
    assert parse_generators("2, -1 ,3/5") == [2, -1, Fraction(3, 5)]
    with pytest.raises(ValueError):
        parse_generators("2,0")
