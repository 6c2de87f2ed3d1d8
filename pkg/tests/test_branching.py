from fractions import Fraction

import pytest

from jackseries.branching import (
    CertificationError,
    certify,
    classify_nu,
    make_certificate,
    printed_bound,
    scan_restriction,
    scan_tensor,
    series_params,
)
from jackseries.domains import DomainError
from jackseries.hypergeo import Verdict, convergent_at_one, partial_sums_at_one

F = Fraction


def test_tensor_example():
    certs = scan_tensor(7, 2, 2, 5)
    assert [c.k for c in certs] == [0]
    c = certs[0]
    assert c.sigma == 2 and c.i_lambda == -6
    assert c.groups["H"] == "SU(7,2)"
    done = certify(c, 120, 1e-6)
    assert done.norm_square.value > 0 and done.norm_square.verdict is Verdict.CONVERGED


def test_narrow_tensor_is_empty():
    certs = scan_tensor(4, 2, 3, 5)
    assert certs == [] and "l - r > 2" in certs.reason


def test_singular_tensor():
    certs = scan_tensor(7, 3, 1, 5)
    assert [(c.k, c.j) for c in certs] == [(0, 2)]
    assert certs[0].params.truncated
    # j = 3 needs l - r > 3
    assert scan_tensor(6, 3, 2, 5) == [] and len(scan_tensor(7, 3, 2, 5)) == 1


def test_restriction_examples():
    so = scan_restriction("SO", 10, 2, 2, 5)
    assert [c.k for c in so] == [0] and so[0].sigma == 2
    assert so[0].i_lambda_printed is not None and so[0].i_lambda_printed != so[0].i_lambda
    sp = scan_restriction("Sp", 6, 2, 2, 5)
    assert [c.k for c in sp] == [0]
    sing = scan_restriction("SO", 10, 2, 1, 5)
    assert [(c.k, c.j) for c in sing] == [(0, 2)]


def test_larger_k_ranges():
    # 2 nu + 4k < 1 + l - r with l - r = 13, nu = 3/2: k < 2.75
    assert [c.k for c in scan_tensor(15, 2, F(3, 2), 10)] == [0, 1, 2]
    # nu + 4k < (l - r)/2 with l - r = 20, nu = 2: k < 2
    assert [c.k for c in scan_restriction("SO", 22, 2, 2, 10)] == [0, 1]
    # k < (3 + 2(l - r) - 2 nu)/8 with l - r = 12, nu = 4: k < 19/8
    assert [c.k for c in scan_restriction("Sp", 14, 2, 4, 10)] == [0, 1, 2]


def test_boundary_rejected():
    # 2*3 + 0 = 1 + 5: equality in the bound
    cert = make_certificate("tensor", "SU", 7, 2, 3, 0)
    assert not convergent_at_one(cert.params) and not cert.printed_bound()
    with pytest.raises(CertificationError):
        certify(cert)
    assert scan_tensor(7, 2, 3, 4).reason == "no admissible k"


def test_violating_k_rejected():
    with pytest.raises(CertificationError):
        certify(make_certificate("tensor", "SU", 7, 2, 2, 1))
    with pytest.raises(CertificationError):
        certify(make_certificate("restriction", "SO", 10, 2, 2, 1))


@pytest.mark.parametrize("setting,hkind,l,r", [("tensor", "SU", 12, 2), ("tensor", "SU", 11, 3),
                                               ("restriction", "SO", 16, 2), ("restriction", "Sp", 12, 3)])
def test_k_sets_downward_closed(setting, hkind, l, r):
    scan = scan_tensor if setting == "tensor" else lambda *a: scan_restriction(hkind, *a)
    for nu in (F(5, 2), 3, F(7, 2), 5, F(11, 2), 6):
        try:
            if classify_nu(hkind, l, r, nu)[0] != "continuous":
                continue
        except DomainError:
            continue
        ks = [c.k for c in scan(l, r, nu, 12)]
        assert ks == list(range(len(ks)))
        # predicate and printed bound agree on every k in range, and stop at the same place
        flags = [convergent_at_one(series_params(setting, hkind, l, r, nu, k)) for k in range(13)]
        assert flags == [printed_bound(setting, hkind, l, r, nu, k) for k in range(13)]
        assert flags == [k < len(ks) for k in range(13)]


def test_wallach_gap_rejected():
    with pytest.raises(DomainError):
        scan_tensor(7, 2, F(1, 2), 3)
    with pytest.raises(DomainError):
        scan_restriction("Sp", 6, 2, F(5, 2), 3)  # ambient rank 4, threshold 3
    assert classify_nu("Sp", 6, 2, 2) == ("singular", 3)


def test_restriction_hypotheses():
    with pytest.raises(DomainError):
        scan_restriction("SO", 4, 2, 2, 3)
    with pytest.raises(DomainError):
        scan_restriction("Sp", 5, 3, 3, 3)
    with pytest.raises(ValueError):
        scan_restriction("SL", 10, 2, 2, 3)


def test_trivial_nu():
    certs = scan_tensor(7, 2, 0, 3)
    assert certs == [] and "trivial" in certs.reason


def test_norm_partial_sums_nondecreasing():
    for cert in scan_tensor(9, 2, F(3, 2), 3) + scan_restriction("SO", 14, 2, 2, 3):
        sums = partial_sums_at_one(cert.params, 40)
        assert all(b >= a for a, b in zip(sums, sums[1:]))


def test_certificate_json():
    out = certify(scan_restriction("Sp", 6, 2, 2, 3)[0], 120, 1e-6).to_json()
    assert out["groups"] == {"G": "SU(12,4)", "H": "Sp(6,2)"}
    assert out["nu_class"] == "singular j=3" and out["norm_square"]["verdict"] == "truncated-series"
    assert out["series"]["a"] == "4"
