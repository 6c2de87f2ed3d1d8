import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jackseries.combinatorics import enumerate_partitions
from jackseries.domains import make_domain
from jackseries.spherical import (
    SphericalSpec,
    lambda_of_sigma,
    odd_weight,
    poisson_quadrature_rank1,
    radial_coefficient,
    sigma_of_lambda,
    spherical_radial,
    theorem_coefficient,
)

DOMAINS = [
    make_domain("SU", l=4, r=2), make_domain("BCxBC", r=1, a=0, two_b=0), make_domain("A", r=2, a=2),
    make_domain("A", r=3, a=1), make_domain("BC", l=4, r=2), make_domain("B1", l=6, r=2),
    make_domain("B1", l=8, r=3), make_domain("D1", r=2), make_domain("D1", r=3),
]
ids = [f"{d.kind}{d.rank}" for d in DOMAINS]


@pytest.mark.parametrize("dom", DOMAINS, ids=ids)
def test_origin_is_one(dom):
    for s in (Fraction(7, 10), 2, 0.35):
        assert spherical_radial(SphericalSpec(dom, s), [0.0] * dom.rank, 10).value == pytest.approx(1.0, abs=1e-15)


def test_quadrature_examples():
    assert poisson_quadrature_rank1(1.7, 0) == pytest.approx(1.0, abs=1e-14)
    assert poisson_quadrature_rank1(1.0, 0.5) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        poisson_quadrature_rank1(1.0, 0.5, nodes=8)
    with pytest.raises(ValueError):
        poisson_quadrature_rank1(1.0, 1.0)


@pytest.mark.parametrize("sigma", [0.7, 1.3, 2.0])
def test_rank_one_matches_quadrature(sigma):
    dom = make_domain("BCxBC", r=1, a=0, two_b=0)
    for t in (0.3, 0.6):
        series = spherical_radial(SphericalSpec(dom, sigma), [t], 200).value
        assert series == pytest.approx(poisson_quadrature_rank1(sigma, t), abs=1e-8)


@pytest.mark.parametrize("dom", [d for d in DOMAINS if d.rank > 1], ids=[i for d, i in zip(DOMAINS, ids) if d.rank > 1])
def test_permutation_symmetry(dom):
    rng = random.Random(dom.rank)
    spec = SphericalSpec(dom, Fraction(3, 2))
    t = [rng.uniform(-0.5, 0.5) for _ in range(dom.rank)]
    base = spherical_radial(spec, t, 40).value
    assert spherical_radial(spec, t[::-1], 40).value == pytest.approx(base, rel=1e-12)


@pytest.mark.parametrize("dom", [make_domain("BCxBC", r=1, a=0, two_b=Fraction(3)), make_domain("SU", l=4, r=2)],
                         ids=["rank1", "SU(4,2)"])
def test_weyl_symmetry(dom):
    c = float(dom.d_over_r)
    rng = random.Random(3)
    for s in (0.7, 1.3):
        for _ in range(5):
            t = [rng.uniform(0, 0.5) for _ in range(dom.rank)]
            lhs = spherical_radial(SphericalSpec(dom, s), t, 150).value
            rhs = spherical_radial(SphericalSpec(dom, c - s), t, 150).value
            assert lhs == pytest.approx(rhs, abs=1e-8)


@pytest.mark.parametrize("r,a", [(2, 2), (3, 1), (2, 5)])
def test_type_a_closed_form(r, a):
    # 1F0(s; x) = prod (1 - x_j)^(-s), so phi = prod ((1 + t)/(1 - t))^(s/2)
    dom = make_domain("A", r=r, a=a)
    t = [0.3, -0.2, 0.1][:r]
    for s in (0.5, 1.25):
        expected = math.prod(((1 + v) / (1 - v)) ** (s / 2) for v in t)
        assert spherical_radial(SphericalSpec(dom, s), t, 60).value == pytest.approx(expected, rel=1e-10)


def test_d_odd_weight_vanishes():
    for r in (2, 3):
        dom = make_domain("D1", r=r)
        for j in range(1, r + 1):
            assert odd_weight(dom, dom.a * (j - 1)) == 0
        assert odd_weight(dom, Fraction(1, 3)) != 0


@settings(max_examples=20)
@given(st.sampled_from(DOMAINS + [make_domain("B1", l=10, r=2)]), st.fractions(-20, 20, max_denominator=30))
def test_lambda_round_trip(dom, sigma):
    assert sigma_of_lambda(dom, lambda_of_sigma(dom, sigma).i_lambda) == sigma
    assert lambda_of_sigma(dom, sigma_of_lambda(dom, sigma)).i_lambda == sigma


def test_lambda_examples():
    dom = make_domain("SU", l=7, r=2)
    assert lambda_of_sigma(dom, 2).i_lambda == 2 * 2 * 2 - 14
    for r, a in ((2, 2), (3, 4)):
        assert sigma_of_lambda(make_domain("A", r=r, a=a), 0) == Fraction(a, 2) * (r - 1)


def test_printed_lambda_reported():
    rep = lambda_of_sigma(make_domain("B1", l=10, r=2), 2)
    assert rep.i_lambda == 2 * 2 - 2 * (4 + Fraction(1, 2))
    assert rep.printed == 2 * 2 - 2 * (8 + Fraction(1, 2))
    assert rep.printed != rep.i_lambda and "printed" in rep.to_json()
    rep = lambda_of_sigma(make_domain("BC", l=6, r=2), 2)
    assert rep.printed is not None and rep.printed_alt is not None
    assert "printed" not in lambda_of_sigma(make_domain("SU", l=6, r=2), 2).to_json()


@pytest.mark.parametrize("dom", DOMAINS, ids=ids)
def test_coefficients_match_norm_formula(dom):
    spec = SphericalSpec(dom, Fraction(7, 3))
    for n in range(4):
        for m in enumerate_partitions(n, dom.rank):
            for parity in ((0, 1) if dom.family == "D" else (0,)):
                assert radial_coefficient(spec, m, parity) == theorem_coefficient(spec, m, parity)


def test_unsupported_and_bad_input():
    with pytest.raises(NotImplementedError):
        SphericalSpec(make_domain("B2", r=2), 1)
    spec = SphericalSpec(make_domain("SU", l=4, r=2), 1)
    with pytest.raises(ValueError):
        spherical_radial(spec, [0.2], 10)
    with pytest.raises(ValueError):
        spherical_radial(spec, [0.2, 1.0], 10)
