"""The ten acceptance checks, shared by the test suite and ``jackseries selftest``.

Each check returns a :class:`CriterionResult`; none of them raises on a
mismatch.  Tolerances and ranges are fixed here and must not be relaxed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .branching import certify, scan_restriction, scan_tensor
from .combinatorics import doubled, enumerate_partitions, gen_pochhammer, scaled, weight
from .domains import make_domain
from .dunkl import invariant_norm
from .hypergeo import SeriesParams, convergent_at_one, empirically_bounded
from .jack import dim_component, jack_J, jack_norm_one, omega_eval
from .jack_oracle import jack_oracle
from .norms import InvariantLabel, fock_norm
from .spherical import SphericalSpec, poisson_quadrature_rank1, radial_coefficient, spherical_radial, theorem_coefficient

A_VALUES = (Fraction(1), Fraction(2), Fraction(4), Fraction(1, 2))
F = Fraction


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number:2d} [{status}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(number, name, fn):
    t0 = time.perf_counter()
    passed, detail = fn()
    return CriterionResult(number, name, passed, detail, time.perf_counter() - t0)


def _jack_range():
    for a in A_VALUES:
        for r in (1, 2, 3):
            for n in range(6):
                for m in enumerate_partitions(n, r):
                    yield a, r, m


def criterion_1():
    def run():
        t0 = time.perf_counter()
        bad, count = [], 0
        for a, r, m in _jack_range():
            count += 1
            if jack_J(m, 2 / a, r).coeffs != jack_oracle(m, 2 / a, r):
                bad.append((m, r, a))
        dt = time.perf_counter() - t0
        return not bad and dt < 60, f"{count - len(bad)}/{count} exact matches, {dt:.1f}s (limit 60s)"
    return _timed(1, "Jack polynomials vs eigenvector oracle", run)


def criterion_2():
    def run():
        bad, count = 0, 0
        for a, r, m in _jack_range():
            count += 1
            ones = [Fraction(1)] * r
            if omega_eval(m, a, ones) != 1:
                bad += 1
            elif jack_J(m, 2 / a, r).evaluate(ones) != jack_norm_one(m, r, a):
                bad += 1
        return bad == 0, f"{count - bad}/{count} exact"
    return _timed(2, "normalization at 1^r", run)


def criterion_3(seed: int = 3):
    def run():
        rng = random.Random(seed)
        nus = [Fraction(rng.randint(-60, 60), rng.randint(1, 12)) for _ in range(20)]
        bad, count = 0, 0
        for a in A_VALUES:
            k = a / 2
            for nu in nus:
                for n in range(6):
                    for m in enumerate_partitions(n, n or 1):
                        count += 2
                        # poch-r: a' = 2a, so a'/2 = a
                        lhs = gen_pochhammer(nu, scaled(m), a)
                        rhs = 4 ** weight(m) * gen_pochhammer(nu / 2, m, k) * gen_pochhammer((nu + 1) / 2, m, k)
                        bad += lhs != rhs
                        # poch-h: a = 2a', so a'/2 = a/4
                        lhs = gen_pochhammer(nu, doubled(m), a / 4)
                        rhs = gen_pochhammer(nu, m, k) * gen_pochhammer(nu - a / 4, m, k)
                        bad += lhs != rhs
        return bad == 0, f"{count - bad}/{count} identities exact over 20 random nu"
    return _timed(3, "Pochhammer splitting identities", run)


def dunkl_domains():
    return [
        make_domain("B1", l=4, r=2), make_domain("B1", l=7, r=3),
        make_domain("B2", r=2), make_domain("B2", r=3),
        make_domain("BC", l=3, r=2), make_domain("BC", l=5, r=3),
    ]


def criterion_4():
    def run():
        t0 = time.perf_counter()
        bad, count = [], 0
        for dom in dunkl_domains():
            for n in range(4):
                for m in enumerate_partitions(n, dom.rank):
                    count += 1
                    if invariant_norm(dom, m) != fock_norm(dom, InvariantLabel.of(dom, m)):
                        bad.append((dom.kind, m))
        dt = time.perf_counter() - t0
        return not bad and dt < 300, f"{count - len(bad)}/{count} exact, {dt:.1f}s (limit 300s)"
    return _timed(4, "Dunkl pairing vs closed-form norms", run)


def criterion_5():
    def run():
        msgs, ok = [], True
        for l, r in ((3, 2), (4, 2), (5, 3)):
            dom = make_domain("BCxBC", l=l, r=r)
            try:
                dims = [dim_component(dom, m) for n in range(5) for m in enumerate_partitions(n, r)]
            except ArithmeticError as exc:
                ok = False
                msgs.append(f"SU({l},{r}): {exc}")
                continue
            if dim_component(dom, (1,)) != l * r:
                ok = False
            msgs.append(f"SU({l},{r}) {len(dims)} dims, d(1)={dim_component(dom, (1,))}")
        return ok, "; ".join(msgs)
    return _timed(5, "dimension integrality", run)


def curated_convergence_cases() -> list:
    """20 parameter sets around the convergence boundary at 1^r.

    The excess ``sum(alpha) - sum(beta) + (a/2)(r-1)`` ranges over
    -3/2 .. 1/2 on both sides of 0.  With a = 2, r = 3 the numerator 1 cuts the
    sum to one-row partitions.
    """
    S = SeriesParams
    return [
        S((1, 1), (3,), 1, 2), S((1, 1), (2,), 1, 2), S((F(1, 2), 1), (2,), 1, 2),
        S((F(3, 2), 1), (2,), 1, 2), S((1, 1), (4,), 2, 2), S((1, 1), (F(7, 2),), 2, 2),
        S((1, 1), (3,), 2, 2), S((1, 1), (F(5, 2),), 2, 2), S((1, 1), (F(13, 4),), 2, 1),
        S((1, 1), (F(5, 2),), 2, 1), S((1, 1), (F(11, 2),), 3, 2), S((1, 1), (F(9, 2),), 3, 2),
        S((1, 1), (4,), 3, 2), S((1, 1), (F(7, 2),), 3, 1), S((1, 1), (3,), 3, 1),
        S((1, 1), (F(5, 2),), 3, 1), S((1, 1), (3,), 3, F(1, 2)), S((1, 1), (F(5, 2),), 3, F(1, 2)),
        S((2, 2, 2), (F(9, 2), 3), 2, 2), S((2, 2, 2), (4, 3), 2, 2),
    ]


def criterion_6():
    def run():
        cases = curated_convergence_cases()
        agree = sum(empirically_bounded(p, 80) == convergent_at_one(p) for p in cases)
        nconv = sum(convergent_at_one(p) for p in cases)
        return agree == len(cases) == 20, f"{agree}/{len(cases)} agree ({nconv} convergent by criterion)"
    return _timed(6, "convergence criterion vs partial sums", run)


def criterion_7():
    def run():
        t0 = time.perf_counter()
        dom = make_domain("BCxBC", r=1, a=2, two_b=0)
        worst = 0.0
        for sigma in (0.7, 1.0, 1.5, 2.0):
            for t in (0.1, 0.3, 0.5):
                series = spherical_radial(SphericalSpec(dom, sigma), [t], 200).value
                quad = poisson_quadrature_rank1(sigma, t, 512)
                worst = max(worst, abs(series - quad))
        dt = time.perf_counter() - t0
        return worst <= 1e-8 and dt < 10, f"max |series - quadrature| = {worst:.2e} (tol 1e-8), {dt:.2f}s"
    return _timed(7, "rank-one spherical function vs quadrature", run)


def coefficient_domains():
    return [
        make_domain("BCxBC", l=5, r=3), make_domain("BCxBC", l=3, r=2),
        make_domain("A", r=3, a=4), make_domain("A", r=2, a=F(3, 2)),
        make_domain("B1", l=6, r=2), make_domain("B1", l=5, r=3),
        make_domain("BC", l=5, r=2), make_domain("BC", l=4, r=3),
        make_domain("D1", r=2), make_domain("D1", r=3),
    ]


def criterion_8():
    def run():
        bad, count = 0, 0
        for dom in coefficient_domains():
            for sigma in (F(7, 3), F(-5, 2), F(1), F(11, 4), F(1, 2)):
                spec = SphericalSpec(dom, sigma)
                for n in range(5):
                    for m in enumerate_partitions(n, dom.rank):
                        for parity in ((0, 1) if dom.family == "D" else (0,)):
                            count += 1
                            bad += radial_coefficient(spec, m, parity) != theorem_coefficient(spec, m, parity)
        return bad == 0, f"{count - bad}/{count} coefficients exact"
    return _timed(8, "radial series coefficients vs inverse norms", run)


def random_branching_configs(n: int = 50, seed: int = 9) -> list:
    """``(setting, hkind, l, r, nu, k, j)`` sampled inside each theorem's hypotheses."""
    rng = random.Random(seed)
    out = []
    kinds = [("tensor", "SU"), ("restriction", "SO"), ("restriction", "Sp")]
    while len(out) < n:
        setting, hkind = kinds[len(out) % 3]
        r = rng.randint(2, 3)
        if setting == "tensor":
            l = r + rng.randint(3, 9)
        elif hkind == "SO":
            l = r + 2 * (r - 1) + rng.randint(1, 8)
        else:
            l = r + 2 * (r - 1) + rng.randint(0, 5)
        rank_c = 2 * r if hkind == "Sp" else r
        if rng.random() < 0.3:
            j = rng.randint(2, rank_c)
            out.append((setting, hkind, l, r, Fraction(j - 1), 0, j))
        else:
            nu = Fraction(rank_c - 1) + Fraction(rng.randint(1, 4 * (l - r) + 4), 4)
            out.append((setting, hkind, l, r, nu, rng.randint(0, 3), None))
    return out


def criterion_9():
    from .branching import printed_bound, series_params

    def run():
        configs = random_branching_configs()
        agree, disagreements, npos = 0, [], 0
        for setting, hkind, l, r, nu, k, j in configs:
            pred = convergent_at_one(series_params(setting, hkind, l, r, nu, k))
            printed = printed_bound(setting, hkind, l, r, nu, k, j)
            npos += pred
            if pred == printed:
                agree += 1
            else:
                disagreements.append(f"{hkind}({l},{r}) nu={nu} k={k}")
        detail = f"{agree}/{len(configs)} agree ({npos} admissible)"
        if disagreements:
            detail += "; mismatches: " + ", ".join(disagreements)
        return agree == len(configs) == 50, detail
    return _timed(9, "printed bounds vs convergence predicate", run)


CERTIFICATE_CASES = (
    ("tensor", "SU", 7, 2, F(2)),
    ("tensor", "SU", 7, 2, F(5, 2)),
    ("restriction", "SO", 10, 2, F(3, 2)),
    ("restriction", "SO", 10, 2, F(2)),
    ("restriction", "Sp", 6, 2, F(2)),
    ("tensor", "SU", 7, 3, F(1)),
    ("restriction", "SO", 10, 2, F(1)),
)


def certificate_suite(max_degree: int = 120, tail_tol: float = 1e-10) -> list:
    certs = []
    for setting, hkind, l, r, nu in CERTIFICATE_CASES:
        scan = scan_tensor(l, r, nu, 8) if setting == "tensor" else scan_restriction(hkind, l, r, nu, 8)
        certs.extend(certify(c, max_degree, tail_tol) for c in scan)
    return certs


def criterion_10():
    def run():
        t0 = time.perf_counter()
        certs = certificate_suite()
        dt = time.perf_counter() - t0
        good = [c for c in certs if float(c.norm_square.value) > 0 and c.norm_square.last_shell_magnitude < 1e-10]
        worst = max(certs, key=lambda c: c.norm_square.last_shell_magnitude)
        detail = (f"{len(good)}/{len(certs)} certificates with last shell < 1e-10 by degree 120; "
                  f"worst {worst.hkind}({worst.l},{worst.r}) nu={worst.nu} k={worst.k}: "
                  f"{worst.norm_square.last_shell_magnitude:.2e}; {dt:.1f}s (limit 300s)")
        return len(good) == len(certs) and len(certs) > 0 and dt < 300, detail
    return _timed(10, "certificate norm squares summed to tolerance", run)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10)


def run_all() -> list:
    return [c() for c in CRITERIA]
