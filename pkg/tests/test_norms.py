import random
from fractions import Fraction

import pytest

from jackseries.combinatorics import enumerate_partitions, gen_pochhammer, pi_m, q_param
from jackseries.domains import make_domain
from jackseries.jack import dim_component
from jackseries.norms import (
    InvariantLabel,
    LabelError,
    bergman_norm,
    bergman_norm_split,
    fock_norm,
    induced_pochhammer,
)

DOMAINS = [
    make_domain("SU", l=4, r=2), make_domain("SU", l=5, r=3), make_domain("A", r=2, a=2),
    make_domain("A", r=3, a=1), make_domain("BC", l=4, r=2), make_domain("BC", l=5, r=3),
    make_domain("B1", l=6, r=2), make_domain("B1", l=8, r=3), make_domain("D1", r=2), make_domain("D1", r=3),
    make_domain("B2", r=2),
]


def _labels(dom, max_weight=4):
    for n in range(max_weight + 1):
        for m in enumerate_partitions(n, dom.rank):
            for parity in ((0, 1) if dom.family == "D" else (0,)):
                yield InvariantLabel.of(dom, m, parity)


def test_induced_partitions():
    assert InvariantLabel.of(make_domain("B1", l=6, r=2), (2, 1)).n == (4, 2)
    assert InvariantLabel.of(make_domain("BC", l=4, r=2), (2, 1)).n == (2, 2, 1, 1)
    assert InvariantLabel.of(make_domain("D1", r=3), (2,), 1).n == (5, 1, 1)
    assert InvariantLabel.of(make_domain("A", r=3, a=2), (2, 1)).n == (2, 1)


def test_label_errors():
    with pytest.raises(LabelError):
        InvariantLabel.of(make_domain("B1", l=6, r=2), (1, 1, 1))
    with pytest.raises(LabelError):
        InvariantLabel.of(make_domain("B1", l=6, r=2), (1,), 1)
    lab = InvariantLabel.of(make_domain("B1", l=6, r=2), (1,))
    with pytest.raises(LabelError):
        fock_norm(make_domain("BC", l=4, r=2), lab)


@pytest.mark.parametrize("dom", DOMAINS, ids=lambda d: f"{d.kind}{d.rank}")
def test_trivial_label(dom):
    lab = InvariantLabel.of(dom, ())
    assert fock_norm(dom, lab) == 1
    assert bergman_norm(dom, lab, Fraction(17, 3)) == 1


def test_type_a_example():
    dom = make_domain("A", r=2, a=2)
    assert fock_norm(dom, InvariantLabel.of(dom, (1,))) == Fraction(1, 2)


@pytest.mark.parametrize("dom", DOMAINS, ids=lambda d: f"{d.kind}{d.rank}")
def test_positive(dom):
    assert all(fock_norm(dom, lab) > 0 for lab in _labels(dom))


@pytest.mark.parametrize("dom", DOMAINS, ids=lambda d: f"{d.kind}{d.rank}")
def test_bergman_routes_agree(dom):
    rng = random.Random(hash(dom.kind) % 1000 + dom.rank)
    for _ in range(20):
        nu = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
        for lab in _labels(dom):
            if induced_pochhammer(dom, lab, nu) == 0:
                with pytest.raises(ZeroDivisionError):
                    bergman_norm(dom, lab, nu)
                continue
            assert bergman_norm(dom, lab, nu) == bergman_norm_split(dom, lab, nu)


@pytest.mark.parametrize("l,r", [(3, 2), (4, 2), (5, 3), (4, 4)])
def test_complex_case_against_dimension(l, r):
    dom = make_domain("SU", l=l, r=r)
    for lab in _labels(dom):
        m = lab.m
        k = dom.a / 2
        assert fock_norm(dom, lab) == gen_pochhammer(dom.d_over_r, m, k) * gen_pochhammer(q_param(r, dom.a), m, k) / pi_m(m, r, dom.a)
        assert fock_norm(dom, lab) == gen_pochhammer(dom.d_over_r, m, k) ** 2 / dim_component(dom, m)


def test_bergman_zero_at_singular_point():
    dom = make_domain("SU", l=5, r=3)
    lab = InvariantLabel.of(dom, (1, 1))
    assert induced_pochhammer(dom, lab, 1) == 0
    with pytest.raises(ZeroDivisionError):
        bergman_norm(dom, lab, 1)
    assert bergman_norm(dom, InvariantLabel.of(dom, (3,)), 1) > 0
