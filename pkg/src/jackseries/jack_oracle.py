"""Brute-force Jack oracle.

Builds the matrix of the Sekiguchi-Debiard type operator

    D(alpha) = (alpha/2) sum_i x_i^2 d_i^2 + sum_{i<j} (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j)

on the monomial symmetric basis of one weight shell by applying it to explicit
polynomials (with exact polynomial division), then extracts eigenvectors
with sympy.  Shares no code with the recursion in :mod:`jackseries.jack`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from . import polynomial as P
from .combinatorics import as_fraction, enumerate_partitions, hook_products, partition


def _monomial_symmetric_poly(mu: tuple, r: int) -> dict:
    rows = tuple(mu) + (0,) * (r - len(mu))
    return {beta: Fraction(1) for beta in set(itertools.permutations(rows))}


def apply_operator(p: dict, alpha: Fraction, r: int) -> dict:
    out: dict = {}
    for i in range(r):
        d2 = P.derivative(P.derivative(p, i), i)
        mono = tuple(2 if k == i else 0 for k in range(r))
        out = P.add(out, P.mul_monomial(d2, mono), alpha / 2)
    for i in range(r):
        for j in range(i + 1, r):
            xi2 = tuple(2 if k == i else 0 for k in range(r))
            xj2 = tuple(2 if k == j else 0 for k in range(r))
            numer = P.add(P.mul_monomial(P.derivative(p, i), xi2), P.mul_monomial(P.derivative(p, j), xj2), -1)
            out = P.add(out, P.div_linear(numer, i, j, sign=-1))
    return out


def operator_matrix(n: int, alpha, r: int):
    """Return ``(basis, M)`` where column ``c`` of ``M`` is D applied to ``m_{basis[c]}``."""
    alpha = as_fraction(alpha)
    basis = enumerate_partitions(n, r)
    index = {mu: k for k, mu in enumerate(basis)}
    M = [[Fraction(0)] * len(basis) for _ in basis]
    for col, nu in enumerate(basis):
        image = apply_operator(_monomial_symmetric_poly(nu, r), alpha, r)
        for beta, c in image.items():
            if list(beta) == sorted(beta, reverse=True):
                M[index[partition(beta)]][col] = c
    return basis, M


def jack_oracle(m, alpha, r: int) -> dict:
    """Coefficients of ``J_m^{(alpha)}`` (monomial basis) from the eigenvector of D.

    The eigenvector is scaled so that the ``m_m`` coefficient is ``h_*(m)``.
    """
    m = partition(m)
    alpha = as_fraction(alpha)
    n = sum(m)
    basis, M = operator_matrix(n, alpha, r)
    eigenvalues = [M[k][k] for k in range(len(basis))]
    target = eigenvalues[basis.index(m)]
    A = sympy.Matrix(M) - sympy.Rational(target.numerator, target.denominator) * sympy.eye(len(basis))
    null = A.nullspace()
    if len(null) != 1:
        raise ArithmeticError(f"eigenspace for {m} has dimension {len(null)}")
    vec = null[0]
    lead = vec[basis.index(m)]
    scale = sympy.Rational(*_pair(hook_products(m, alpha)[0])) / lead
    out = {}
    for k, mu in enumerate(basis):
        c = vec[k] * scale
        if c != 0:
            out[mu] = Fraction(int(c.p), int(c.q))
    return out


def shell_eigenvalues(n: int, alpha, r: int) -> dict:
    basis, M = operator_matrix(n, alpha, r)
    return {mu: M[k][k] for k, mu in enumerate(basis)}


def _pair(f: Fraction):
    return f.numerator, f.denominator
