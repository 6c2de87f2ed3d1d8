"""Spherical functions on the Shilov boundary, restricted to radial directions.

Every formula has the shape ``prefactor(t) * sum_n C_n (sigma)_{n,a'/2} Res p_n``
with ``C_n`` the inverse Fock norm, so the series part is a hypergeometric
function in the base partition ``m``.  The spectral parameter is kept as
``sigma``; ``i*lambda`` (a real number here) is derived from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from .combinatorics import as_fraction, gen_pochhammer, partition
from .domains import DomainDescriptor
from .hypergeo import SeriesParams, SeriesResult, series_coefficient, series_sum
from .norms import InvariantLabel, fock_norm

HALF = Fraction(1, 2)


def _scale(dom: DomainDescriptor) -> int:
    # i*lambda = scale * r * sigma - rho(xi)
    return 2 if dom.family in ("BCxBC", "BC") else 1


def lambda_of_sigma(dom: DomainDescriptor, sigma) -> "LambdaReport":
    sigma = as_fraction(sigma)
    r = dom.rank
    value = _scale(dom) * r * sigma - dom.rho_xi
    literal, source = None, None
    if dom.kind == "B1":
        l = dom.params["l"]
        literal = r * sigma - r * (l - r + Fraction(r - 1, 2))
        source = "restriction theorem, SO case"
    elif dom.kind == "BC":
        l = dom.params["l"]
        literal_thm = 2 * r * sigma - r * (dom.iota_minus_1 + dom.b + 2 * dom.a * (r - 1))
        literal = 2 * r * sigma - r * (3 + l - r + 8 * (r - 1))
        return LambdaReport(value, literal, "restriction theorem, Sp case",
                            literal_thm, "radial formula, type BC")
    return LambdaReport(value, literal, source)


def sigma_of_lambda(dom: DomainDescriptor, i_lambda) -> Fraction:
    """Inverse of :func:`lambda_of_sigma` (``i_lambda`` is the real number i*lambda)."""
    return (as_fraction(i_lambda) + dom.rho_xi) / (_scale(dom) * dom.rank)


@dataclass(frozen=True)
class LambdaReport:
    i_lambda: Fraction
    printed: Fraction | None = None
    printed_source: str | None = None
    printed_alt: Fraction | None = None
    printed_alt_source: str | None = None

    def to_json(self) -> dict:
        out = {"i_lambda": str(self.i_lambda)}
        if self.printed is not None:
            out["printed"] = {"value": str(self.printed), "source": self.printed_source}
        if self.printed_alt is not None:
            out["printed_alt"] = {"value": str(self.printed_alt), "source": self.printed_alt_source}
        return out


@dataclass(frozen=True)
class SphericalSpec:
    dom: DomainDescriptor
    sigma: object

    def __post_init__(self):
        if self.dom.kind in ("B2", "D2"):
            raise NotImplementedError(f"no radial formula wired for kind {self.dom.kind}")
        if isinstance(self.sigma, float) and not math.isfinite(self.sigma):
            raise ValueError("sigma must be finite")

    @classmethod
    def from_lambda(cls, dom, i_lambda) -> "SphericalSpec":
        return cls(dom, sigma_of_lambda(dom, i_lambda))

    @property
    def family(self) -> str:
        return self.dom.family

    @property
    def exact_sigma(self) -> Fraction:
        return as_fraction(self.sigma)

    def lambda_report(self) -> LambdaReport:
        return lambda_of_sigma(self.dom, self.exact_sigma)


def series_parts(spec: SphericalSpec) -> list:
    """``[(weight, params, argument kind, odd), ...]`` describing the radial formula.

    ``argument kind`` is ``"square"`` when the series consumes ``t_j^2`` and
    ``"linear"`` when it consumes ``t_j``.  ``weight`` multiplies the part.
    """
    dom, s = spec.dom, spec.exact_sigma
    r, a = dom.rank, dom.a
    k = a / 2
    fam = spec.family
    mk = lambda al, be: SeriesParams(al, be, r, a)  # noqa: E731
    if fam == "BCxBC":
        return [(Fraction(1), mk((s, s), (dom.d_over_r,)), "square", False)]
    if fam == "A":
        return [(Fraction(1), mk((s,), ()), "linear", False)]
    if fam == "B":
        c = k * (r - 1) + dom.b + HALF
        return [(Fraction(1), mk((s / 2, (s + 1) / 2), (c,)), "square", False)]
    if fam == "BC":
        c = k * (r - 1) + (dom.iota + 2 * dom.b) / 2
        return [(Fraction(1), mk((s, s - dom.a_complex / 2), (c,)), "square", False)]
    even = mk((s / 2, (s + 1) / 2), (k * (r - 1) + HALF,))
    odd = mk((s / 2 + 1, (s + 1) / 2), (k * (r - 1) + Fraction(3, 2),))
    return [(Fraction(1), even, "square", False), (odd_weight(dom, s), odd, "square", True)]


def odd_weight(dom: DomainDescriptor, sigma) -> Fraction:
    """Coefficient of the odd part in type D: ``prod_j (s/2 - k(j-1)) / (k(r-1) - k(j-1) + 1/2)``."""
    sigma = as_fraction(sigma)
    r, k = dom.rank, dom.a / 2
    out = Fraction(1)
    for j in range(r):
        out *= (sigma / 2 - k * j) / (k * (r - 1) - k * j + HALF)
    return out


def _prefactor_exponent(spec: SphericalSpec) -> float:
    s = float(spec.exact_sigma) if not isinstance(spec.sigma, float) else spec.sigma
    return s if spec.family in ("BCxBC", "BC") else s / 2


def spherical_radial(spec: SphericalSpec, t: Sequence[float], max_degree: int,
                     precision: str = "double", tail_tol: float | None = None) -> SeriesResult:
    """``phi(t_1 e_1 + ... + t_r e_r)`` as prefactor times truncated series."""
    r = spec.dom.rank
    if len(t) != r:
        raise ValueError(f"expected {r} coordinates, got {len(t)}")
    t = [float(v) for v in t]
    if any(not abs(v) < 1 for v in t):
        raise ValueError("radial coordinates must satisfy |t_j| < 1")
    expo = _prefactor_exponent(spec)
    pre = math.prod((1 - v * v) ** expo for v in t)
    value = 0.0
    degree, last = 0, 0.0
    shells = None
    verdict = None
    for weight, params, kind, odd in series_parts(spec):
        x = [v * v for v in t] if kind == "square" else t
        res = series_sum(params, x, max_degree, precision, tail_tol)
        w = float(weight) * (math.prod(t) if odd else 1.0) * pre
        value += w * float(res.value)
        degree = max(degree, res.truncation_degree)
        last = max(last, abs(w) * res.last_shell_magnitude)
        if shells is None:
            shells = tuple(w * float(v) for v in res.shell_sums)
            verdict = res.verdict
    tol_met = None if tail_tol is None else last < tail_tol
    return SeriesResult(value, degree, last, verdict, tol_met, precision, shells)


def radial_coefficient(spec: SphericalSpec, m, parity: int = 0) -> Fraction:
    """Coefficient of ``Omega_m`` in the prefactor-stripped radial series."""
    parts = series_parts(spec)
    weight, params, _, _ = parts[parity]
    return weight * series_coefficient(params, partition(m))


def theorem_coefficient(spec: SphericalSpec, m, parity: int = 0) -> Fraction:
    """``(sigma)_{n, a'/2} / <p_n, p_n>_F`` for the label induced by ``m``."""
    dom = spec.dom
    label = InvariantLabel.of(dom, m, parity)
    s = spec.exact_sigma
    if dom.family == "BCxBC":
        # K-invariant in P_m (x) conj(P_m): one Pochhammer per factor
        num = gen_pochhammer(s, label.m, dom.a_complex / 2) ** 2
    else:
        num = gen_pochhammer(s, label.n, dom.a_complex / 2)
    return num / fock_norm(dom, label)


def poisson_quadrature_rank1(sigma: float, z: complex, nodes: int = 512) -> float:
    """Trapezoid rule for the disk Poisson integral of ``h(z,z)^s / |h(z,v)|^(2s)``.

    ``h(z, w) = 1 - z conj(w)``; the measure on the circle is normalized.
    """
    if nodes < 16:
        raise ValueError("use at least 16 nodes")
    z = complex(z)
    if not abs(z) < 1:
        raise ValueError("|z| must be below 1")
    theta = 2 * np.pi * np.arange(nodes) / nodes
    kern = np.abs(1 - z * np.exp(-1j * theta)) ** (-2 * sigma)
    return float((1 - abs(z) ** 2) ** sigma * kern.mean())


def with_sigma(spec: SphericalSpec, sigma) -> SphericalSpec:
    return replace(spec, sigma=sigma)
