"""Fock and Bergman norm squares of the invariant polynomials ``p_n``.

The invariant in the K-type (or L-type) indexed by ``n`` restricts to a
normalized Jack polynomial of the base partition ``m``.  ``n`` is the image
of ``m`` under the family's embedding: ``m`` itself (types A and the complex
case), ``2m`` (type B), ``(m1, m1, m2, m2, ...)`` (type BC) and ``2m + eps``
with a parity bit ``eps`` (type D).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import (
    as_fraction,
    doubled,
    gen_pochhammer,
    length,
    partition,
    pi_m,
    q_param,
    scaled,
    weight,
)
from .domains import DomainDescriptor


class LabelError(ValueError):
    """Label inconsistent with the domain family."""


@dataclass(frozen=True)
class InvariantLabel:
    family: str
    m: tuple
    n: tuple
    parity: int = 0

    @classmethod
    def of(cls, dom: DomainDescriptor, m, parity: int = 0) -> "InvariantLabel":
        m = partition(m)
        if length(m) > dom.rank:
            raise LabelError(f"partition {m} longer than rank {dom.rank}")
        fam = dom.family
        if parity and fam != "D":
            raise LabelError("odd parity exists for type D only")
        if parity not in (0, 1):
            raise LabelError("parity must be 0 or 1")
        if fam in ("BCxBC", "A"):
            n = m
        elif fam == "B":
            n = scaled(m)
        elif fam == "BC":
            n = doubled(m)
        else:
            n = scaled(m, 2, parity, dom.rank)
        return cls(fam, m, n, parity)


def _check(dom: DomainDescriptor, label: InvariantLabel):
    if label.family != dom.family:
        raise LabelError(f"label for family {label.family} used with {dom.family}")
    if label != InvariantLabel.of(dom, label.m, label.parity):
        raise LabelError(f"induced partition {label.n} does not match {label.m}")


def _d_odd_prefactor(r: int, k: Fraction) -> Fraction:
    out = Fraction(2) ** r
    for j in range(r):
        out *= k * (r - 1) + Fraction(1, 2) - k * j
    return out


def fock_norm(dom: DomainDescriptor, label: InvariantLabel) -> Fraction:
    """Exact Fock norm square ``<p_n, p_n>_F``."""
    _check(dom, label)
    m, r, a = label.m, dom.rank, dom.a
    k = a / 2
    base = gen_pochhammer(q_param(r, a), m, k) / pi_m(m, r, a)
    fam = label.family
    if fam == "BCxBC":
        return gen_pochhammer(dom.d_over_r, m, k) * base
    if fam == "A":
        return base
    if fam == "B":
        c = k * (r - 1) + dom.b + Fraction(1, 2)
        return 4 ** weight(m) * gen_pochhammer(c, m, k) * base
    if fam == "BC":
        c = k * (r - 1) + (dom.iota + 2 * dom.b) / 2
        return gen_pochhammer(c, m, k) * base
    if label.parity == 0:
        c = k * (r - 1) + Fraction(1, 2)
        return 4 ** weight(m) * gen_pochhammer(c, m, k) * base
    c = k * (r - 1) + Fraction(3, 2)
    return _d_odd_prefactor(r, k) * 4 ** weight(m) * gen_pochhammer(c, m, k) * base


def induced_pochhammer(dom: DomainDescriptor, label: InvariantLabel, nu) -> Fraction:
    """``(nu)_{n, a'/2}``; squared over ``m`` in the complex case."""
    nu = as_fraction(nu)
    if label.family == "BCxBC":
        return gen_pochhammer(nu, label.m, dom.a_complex / 2) ** 2
    return gen_pochhammer(nu, label.n, dom.a_complex / 2)


def bergman_norm(dom: DomainDescriptor, label: InvariantLabel, nu) -> Fraction:
    """``fock_norm / (nu)_{n, a'/2}`` (direct division)."""
    den = induced_pochhammer(dom, label, nu)
    if den == 0:
        raise ZeroDivisionError(f"(nu)_n vanishes at nu={nu} for n={label.n}")
    return fock_norm(dom, label) / den


def bergman_norm_split(dom: DomainDescriptor, label: InvariantLabel, nu) -> Fraction:
    """Bergman norm square in the product form with base-partition Pochhammers.

    Type B and D use ``(nu)_{2m} = 4^|m| (nu/2)_m ((nu+1)/2)_m``; type BC uses
    ``(nu)_{(m,m)} = (nu)_m (nu - a'/2)_m``.  Both with step ``a/2``.
    """
    _check(dom, label)
    nu = as_fraction(nu)
    m, r, a = label.m, dom.rank, dom.a
    k = a / 2
    P = lambda c: gen_pochhammer(c, m, k)  # noqa: E731
    q_over_pi = P(q_param(r, a)) / pi_m(m, r, a)
    fam = label.family
    if fam == "BCxBC":
        den = P(nu) ** 2
        num = P(dom.d_over_r) * q_over_pi
    elif fam == "A":
        den = P(nu)
        num = q_over_pi
    elif fam == "B" or (fam == "D" and label.parity == 0):
        c = k * (r - 1) + (dom.b if fam == "B" else 0) + Fraction(1, 2)
        den = P(nu / 2) * P((nu + 1) / 2)
        num = P(c) * q_over_pi
    elif fam == "BC":
        c = k * (r - 1) + (dom.iota + 2 * dom.b) / 2
        den = P(nu) * P(nu - dom.a_complex / 2)
        num = P(c) * q_over_pi
    else:
        # odd type D: (nu)_{2m+1} = prod_j (nu - a(j-1)) * 4^|m| ((nu+1)/2)_m (nu/2 + 1)_m
        lead = Fraction(1)
        for j in range(r):
            lead *= nu - a * j
        den = lead * P((nu + 1) / 2) * P(nu / 2 + 1)
        num = _d_odd_prefactor(r, k) * P(k * (r - 1) + Fraction(3, 2)) * q_over_pi
    if den == 0:
        raise ZeroDivisionError(f"(nu)_n vanishes at nu={nu} for n={label.n}")
    return num / den
