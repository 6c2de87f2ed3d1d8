"""Exact Jack polynomials in the monomial symmetric basis.

``J_m^{(alpha)}`` is built by a triangular recursion: the operator

    D(alpha) = (alpha/2) sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2/(x_i - x_j) d_i

acts upper-triangularly on monomial symmetric functions (dominance order), and
``J_m`` is its eigenvector with leading coefficient ``h_*(m)``.  The matrix
entries come from a closed formula for the action of the pair operator on
``x_i^a x_j^b``; :mod:`jackseries.jack_oracle` rebuilds the same matrix by
brute-force polynomial arithmetic as an independent check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Sequence

import numpy as np

from .combinatorics import (
    as_fraction,
    dominates,
    enumerate_partitions,
    gen_pochhammer,
    hook_products,
    length,
    pad,
    partition,
    pi_m,
    q_param,
    weight,
)


@dataclass(frozen=True)
class SymmetricPoly:
    """Homogeneous symmetric polynomial in ``nvars`` variables, monomial basis."""

    coeffs: dict = field(hash=False)
    nvars: int
    degree: int

    def __post_init__(self):
        for mu, c in self.coeffs.items():
            if c == 0:
                raise ValueError("zero coefficients must not be stored")
            if weight(mu) != self.degree or length(mu) > self.nvars:
                raise ValueError(f"monomial {mu} does not fit degree {self.degree}, {self.nvars} vars")

    def __getitem__(self, mu) -> Fraction:
        return self.coeffs.get(partition(mu), Fraction(0))

    def evaluate(self, x: Sequence):
        if len(x) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(x)}")
        return sum((c * monomial_symmetric(mu, x) for mu, c in self.coeffs.items()), Fraction(0))

    def expand(self) -> dict:
        """Explicit exponent-tuple -> coefficient dictionary."""
        out = {}
        for mu, c in self.coeffs.items():
            for beta in orbit(mu, self.nvars):
                out[beta] = c
        return out


@lru_cache(maxsize=None)
def orbit(mu: tuple, r: int) -> tuple:
    """Distinct permutations of ``mu`` padded to ``r`` entries."""
    return tuple(sorted(set(itertools.permutations(pad(mu, r))), reverse=True))


def monomial_symmetric(mu: tuple, x: Sequence):
    total = 0
    for beta in orbit(mu, len(x)):
        term = 1
        for xi, e in zip(x, beta):
            if e:
                term = term * xi**e
        total = total + term
    return total


def _eigenvalue(mu: tuple, alpha: Fraction, r: int) -> Fraction:
    rows = pad(mu, r)
    return alpha / 2 * sum(p * (p - 1) for p in rows) + sum((r - 1 - i) * p for i, p in enumerate(rows))


def _raisings(mu: tuple, r: int):
    """Yield ``(nu, coeff)`` with ``coeff`` the m_mu-coefficient of D m_nu, nu > mu."""
    rows = pad(mu, r)
    for i in range(r):
        for j in range(i + 1, r):
            s = rows[i] + rows[j]
            for top in range(max(rows[i], rows[j]) + 1, s + 1):
                bottom = s - top
                new = list(rows)
                new[i], new[j] = top, bottom
                yield partition(sorted(new, reverse=True)), top - bottom


@lru_cache(maxsize=None)
def _jack_coeffs(m: tuple, alpha: Fraction, r: int) -> tuple:
    n = weight(m)
    lower = [mu for mu in enumerate_partitions(n, r) if dominates(m, mu)]
    coeffs = {m: hook_products(m, alpha)[0]}
    e_top = _eigenvalue(m, alpha, r)
    for mu in lower:
        if mu == m:
            continue
        acc = Fraction(0)
        for nu, c in _raisings(mu, r):
            cn = coeffs.get(nu)
            if cn:
                acc += c * cn
        if acc:
            coeffs[mu] = acc / (e_top - _eigenvalue(mu, alpha, r))
    return tuple(coeffs.items())


def jack_J(m: Sequence[int], alpha, r: int) -> SymmetricPoly:
    """``J_m^{(alpha)}`` in ``r`` variables with Macdonald's J normalization."""
    m = partition(m)
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if length(m) > r:
        raise ValueError(f"J_{m} vanishes identically in {r} variables")
    return SymmetricPoly(dict(_jack_coeffs(m, alpha, r)), r, weight(m))


def jack_norm_one(m: Sequence[int], r: int, a) -> Fraction:
    """``J_m^{(2/a)}(1^r) = (r a/2)_m (a/2)^{-|m|}``."""
    m = partition(m)
    k = as_fraction(a) / 2
    return gen_pochhammer(r * k, m, k) / k ** weight(m)


def _is_exact(values) -> bool:
    return all(isinstance(v, (int, Rational)) and not isinstance(v, bool) for v in values)


def omega_eval(m: Sequence[int], a, t: Sequence):
    """Normalized Jack polynomial ``Omega_m(t) = J_m(t)/J_m(1^r)`` with alpha = 2/a.

    Exact for rational input, floating otherwise.
    """
    a = as_fraction(a)
    r = len(t)
    poly = jack_J(m, 2 / a, r)
    denom = jack_norm_one(m, r, a)
    if denom == 0:
        raise ZeroDivisionError(f"J_{m}(1^{r}) vanishes")
    if _is_exact(t):
        return poly.evaluate([Fraction(v) for v in t]) / denom
    return float(poly.evaluate([float(v) for v in t])) / float(denom)


def _log_f(d: int, g: int, alpha: float) -> float:
    return math.lgamma(d + g / alpha + 1) - math.lgamma(d + (g + 1) / alpha)


def strip_coefficient(lam: tuple, mu: tuple, alpha: float) -> float:
    """Branching coefficient ``psi_{lam/mu}`` of the Jack P-polynomial.

    ``lam/mu`` must be a horizontal strip with ``len(lam)`` exceeding the
    length of ``mu``.  Product over row pairs ``i <= j <= len(mu)`` of

        f(mu_i - mu_j) f(lam_i - lam_{j+1}) / (f(lam_i - mu_j) f(mu_i - lam_{j+1}))

    with ``f(d) = Gamma(d + g/alpha + 1) / Gamma(d + (g+1)/alpha)``, ``g = j - i``.
    """
    k = len(lam)
    mu = tuple(mu) + (0,) * (k - len(mu))
    L = length(partition(mu))
    out = 0.0
    for i in range(L):
        for j in range(i, L):
            g = j - i
            out += (_log_f(mu[i] - mu[j], g, alpha) + _log_f(lam[i] - lam[j + 1], g, alpha)
                    - _log_f(lam[i] - mu[j], g, alpha) - _log_f(mu[i] - lam[j + 1], g, alpha))
    return math.exp(out)


class OmegaEvaluator:
    """Floating ``Omega_m(x)`` at one fixed point via the branching rule.

    ``P_lam(x_1..x_k) = sum_mu P_mu(x_1..x_{k-1}) psi_{lam/mu} x_k^{|lam|-|mu|}``
    where ``mu`` runs over the box ``lam_{i+1} <= mu_i <= lam_i``.  Levels
    ``k < r`` are tabulated densely up to ``max_degree`` so that each strip
    sum is one vectorized reduction; the result is divided by ``P_m(1^r)``.
    Agrees with the exact monomial route to roughly machine precision.
    """

    def __init__(self, r: int, a, x: Sequence[float], max_degree: int):
        if len(x) != r:
            raise ValueError(f"expected {r} coordinates, got {len(x)}")
        self.r = r
        self.a = as_fraction(a)
        self.alpha = float(2 / self.a)
        self.x = [float(v) for v in x]
        self.max_degree = max_degree
        D = max_degree
        self._logf = np.array([[_log_f(d, g, self.alpha) for d in range(D + 1)] for g in range(max(r - 1, 1))])
        self._levels = [None, np.array([self.x[0] ** d for d in range(D + 1)])]
        for k in range(2, r):
            V = np.zeros((D + 1,) * k)
            for n in range(D + 1):
                for lam in enumerate_partitions(n, k):
                    rows = pad(lam, k)
                    V[rows] = self._branch(rows, k)
            self._levels.append(V)

    def _branch(self, rows: tuple, k: int) -> float:
        if k == 1:
            return self.x[0] ** rows[0]
        prev = self._levels[k - 1]
        block = prev[tuple(slice(rows[i + 1], rows[i] + 1) for i in range(k - 1))]
        mus = []
        for i in range(k - 1):
            shape = [1] * (k - 1)
            shape[i] = -1
            mus.append(np.arange(rows[i + 1], rows[i] + 1).reshape(shape))
        logpsi = 0.0
        for i in range(k - 1):
            for j in range(i, k - 1):
                T = self._logf[j - i]
                logpsi = (logpsi + T[mus[i] - mus[j]] + T[rows[i] - rows[j + 1]]
                          - T[rows[i] - mus[j]] - T[mus[i] - rows[j + 1]])
        deficit = sum(rows) - sum(mus)
        return float(np.sum(block * np.exp(logpsi) * self.x[k - 1] ** deficit))

    def log_p_at_ones(self, m: tuple) -> float:
        """``log P_m(1^r)`` from the product over row pairs."""
        rows = pad(m, self.r)
        th = 1 / self.alpha
        out = 0.0
        lg = math.lgamma
        for i in range(self.r):
            for j in range(i + 1, self.r):
                d, g = rows[i] - rows[j], j - i
                out += lg(d + (g + 1) * th) + lg(g * th) - lg(d + g * th) - lg((g + 1) * th)
        return out

    def omega(self, m) -> float:
        m = partition(m)
        if weight(m) > self.max_degree:
            raise ValueError(f"weight {weight(m)} exceeds the tabulated degree {self.max_degree}")
        if length(m) > self.r:
            raise ValueError(f"partition {m} longer than rank {self.r}")
        return self._branch(pad(m, self.r), self.r) * math.exp(-self.log_p_at_ones(m))

    def shell(self, n: int) -> dict:
        return {m: self.omega(m) for m in enumerate_partitions(n, self.r)}


def omega_shell(n: int, r: int, a, x: Sequence[float], evaluator: OmegaEvaluator | None = None) -> dict:
    """Floating ``Omega_m(x)`` for every partition of weight ``n`` with at most ``r`` parts."""
    if r == 1:
        return {((n,) if n else ()): float(x[0]) ** n}
    ev = evaluator or OmegaEvaluator(r, a, x, n)
    return ev.shell(n)


def dim_component(dom, m: Sequence[int]) -> int:
    """Dimension ``(d/r)_m pi_m / (q)_m`` of the K-type with highest weight ``m``.

    ``dom`` must describe a complex domain (kind ``BCxBC``); the complex
    rank and multiplicity are used.
    """
    if dom.kind != "BCxBC":
        raise ValueError("dimension formula applies to complex-domain descriptors only")
    m = partition(m)
    r, a = dom.complex_rank, dom.a_complex
    if length(m) > r:
        raise ValueError(f"partition {m} longer than rank {r}")
    k = a / 2
    value = gen_pochhammer(dom.d_over_r, m, k) * pi_m(m, r, a) / gen_pochhammer(q_param(r, a), m, k)
    if value.denominator != 1 or value <= 0:
        raise ArithmeticError(f"dimension {value} for {m} is not a positive integer")
    return int(value)


def lowest_coefficient(m: Sequence[int], alpha) -> Fraction:
    """Coefficient of ``m_{(1^n)}`` in ``J_m``; equals ``n!`` whenever it is present."""
    n = weight(partition(m))
    poly = jack_J(m, alpha, max(n, 1))
    return poly[(1,) * n]
