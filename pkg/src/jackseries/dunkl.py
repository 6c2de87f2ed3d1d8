"""Dunkl operators for the restricted root systems and the Fischer pairing.

Coordinates on the Cartan subspace are ``x_1..x_r`` with ``beta_j(x) = 2 x_j``.
The positive roots and their reflections:

* ``beta_j`` (multiplicity iota-1) and ``beta_j/2`` (multiplicity 2b) flip ``x_j``;
* ``(beta_j - beta_l)/2`` swaps ``x_j, x_l``; ``(beta_j + beta_l)/2`` swaps with signs,
  both with multiplicity ``a``.

Collecting ``1/2 * m_alpha * alpha(xi_j) / alpha(x)`` gives

    D_j p = d_j p + k1 (p - p|x_j->-x_j)/x_j
            + k sum_{l != j} [(p - p^swap)/(x_j - x_l) + (p - p^antiswap)/(x_j + x_l)]

with ``k1 = (iota - 1 + 2b)/2`` and ``k = a/2``.  This is a slow exact oracle
meant for rank <= 3 and degree <= 6 or so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polynomial as P
from .combinatorics import as_fraction, enumerate_partitions, partition
from .jack import jack_J, jack_norm_one


@dataclass(frozen=True)
class RootSystemData:
    rank: int
    iota_minus_1: Fraction
    a: Fraction
    two_b: Fraction

    def __post_init__(self):
        for name in ("iota_minus_1", "a", "two_b"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if min(self.iota_minus_1, self.a, self.two_b) < 0:
            raise ValueError("multiplicities must be nonnegative")

    @classmethod
    def from_domain(cls, dom) -> "RootSystemData":
        return cls(dom.rank, dom.iota_minus_1, dom.a, dom.two_b)

    @property
    def k1(self) -> Fraction:
        return (self.iota_minus_1 + self.two_b) / 2

    @property
    def k(self) -> Fraction:
        return self.a / 2


def dunkl_apply(rs: RootSystemData, j: int, p: dict) -> dict:
    """``D_j p`` for 0-based ``j``; ``p`` maps exponent tuples to rationals."""
    if not 0 <= j < rs.rank:
        raise IndexError(f"no coordinate {j} in rank {rs.rank}")
    out = P.derivative(p, j)
    if rs.k1:
        diff = P.add(p, P.flip(p, j), -1)
        out = P.add(out, P.div_linear(diff, j), rs.k1)
    if rs.k:
        for l in range(rs.rank):
            if l == j:
                continue
            diff = P.add(p, P.swap(p, j, l), -1)
            out = P.add(out, P.div_linear(diff, j, l, sign=-1), rs.k)
            diff = P.add(p, P.swap(p, j, l, sign=-1), -1)
            out = P.add(out, P.div_linear(diff, j, l, sign=1), rs.k)
    return out


def norm_B(rs: RootSystemData, p: dict, half: bool = False) -> Fraction:
    """Fischer pairing ``p(D) p* |_0``, or ``p(D/2) p* |_0`` with ``half``."""
    return pairing(rs, p, p, half)


def pairing(rs: RootSystemData, p: dict, q: dict, half: bool = False) -> Fraction:
    """``p(D) q |_0`` (real coefficients, so no conjugation is needed)."""
    cache = {(0,) * rs.rank: q}

    def applied(e):
        if e in cache:
            return cache[e]
        j = max(i for i, v in enumerate(e) if v)
        prev = list(e)
        prev[j] -= 1
        res = dunkl_apply(rs, j, applied(tuple(prev)))
        cache[e] = res
        return res

    total = Fraction(0)
    for e, c in sorted(p.items()):
        val = P.constant_term(applied(e), rs.rank)
        if val:
            total += c * val * (Fraction(1, 2) ** sum(e) if half else 1)
    return total


def restricted_invariant(m, r: int, a, odd: bool = False) -> dict:
    """``Omega_m(x_1^2, ..., x_r^2)`` as an explicit polynomial, times ``x_1...x_r`` if ``odd``."""
    m = partition(m)
    a = as_fraction(a)
    poly = jack_J(m, 2 / a, r)
    scale = 1 / jack_norm_one(m, r, a)
    out = {}
    for beta, c in poly.expand().items():
        e = tuple(2 * v + (1 if odd else 0) for v in beta)
        out[e] = c * scale
    return out


def invariant_norm(dom, m, parity: int = 0) -> Fraction:
    """Fock norm of the restricted invariant computed through Dunkl operators.

    Type BC uses the halved operators.
    """
    rs = RootSystemData.from_domain(dom)
    p = restricted_invariant(m, dom.rank, dom.a, odd=bool(parity))
    return norm_B(rs, p, half=dom.family == "BC")


def gram_matrix(dom, degree: int) -> dict:
    """Pairings between the restricted invariants of one weight."""
    rs = RootSystemData.from_domain(dom)
    basis = enumerate_partitions(degree, dom.rank)
    polys = {m: restricted_invariant(m, dom.rank, dom.a) for m in basis}
    half = dom.family == "BC"
    return {(m1, m2): pairing(rs, polys[m1], polys[m2], half) for m1 in basis for m2 in basis}
