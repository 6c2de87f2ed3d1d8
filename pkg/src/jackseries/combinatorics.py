"""Partitions, generalized Pochhammer symbols, hook products and the scalars q, pi_m.

Partitions are plain tuples of positive integers in weakly decreasing order
(trailing zeros stripped), so ``()`` is the empty partition.  Every scalar
here is an exact :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Sequence, Union

Scalar = Fraction
Partition = tuple

RationalLike = Union[int, Fraction, str, float]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Floats go through their shortest decimal repr, so ``0.7`` becomes
    ``7/10`` rather than the binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple (zeros stripped)."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"parts must be nonnegative: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def weight(m: Partition) -> int:
    return sum(m)


def length(m: Partition) -> int:
    return sum(1 for p in m if p)


def pad(m: Partition, r: int) -> tuple:
    if length(m) > r:
        raise ValueError(f"partition {m} has more than {r} parts")
    return tuple(m) + (0,) * (r - len(m))


def parse_partition(text: str) -> Partition:
    """Parse the text form ``"3,1,1"``; ``""`` and ``"0"`` give ``()``."""
    text = text.strip()
    if not text:
        return ()
    return partition(int(tok) for tok in text.split(","))


def format_partition(m: Partition) -> str:
    return ",".join(str(p) for p in m) if m else "0"


def conjugate(m: Partition) -> Partition:
    if not m:
        return ()
    return tuple(sum(1 for p in m if p > i) for i in range(m[0]))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True when ``lam >= mu`` in dominance order (equal weights assumed)."""
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam[i] if i < len(lam) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return s == t


def _partitions(n: int, max_part: int, max_len: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_len - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(weight: int, max_len: int) -> tuple:
    return tuple(_partitions(weight, weight, max_len))


def enumerate_partitions(weight: int, max_len: int) -> list:
    """All partitions of ``weight`` with at most ``max_len`` parts.

    Reverse-lexicographic order, e.g. ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.
    """
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    return list(_enumerate(weight, max_len))


def doubled(m: Partition) -> Partition:
    """The interlaced partition ``(m1, m1, m2, m2, ...)`` used for type BC."""
    return tuple(p for part in m for p in (part, part))


def scaled(m: Partition, factor: int = 2, shift: int = 0, r: int | None = None) -> Partition:
    """``factor*m + shift`` componentwise over ``r`` rows (type B and D images)."""
    rows = pad(m, r) if r is not None else tuple(m)
    return partition(factor * p + shift for p in rows)


def rising(c: Fraction, n: int) -> Fraction:
    """Ordinary rising factorial ``(c)_n``."""
    out = Fraction(1)
    for k in range(n):
        out *= c + k
    return out


def gen_pochhammer(c: RationalLike, m: Sequence[int], beta: RationalLike) -> Fraction:
    """Generalized Pochhammer symbol ``prod_j (c - beta*(j-1))_{m_j}``."""
    c = as_fraction(c)
    beta = as_fraction(beta)
    out = Fraction(1)
    for j, mj in enumerate(m):
        out *= rising(c - beta * j, mj)
        if not out:
            return out
    return out


def q_param(r: int, a: RationalLike) -> Fraction:
    """``q = 1 + (a/2)(r - 1)``."""
    if r < 1:
        raise ValueError("rank must be at least 1")
    return 1 + as_fraction(a) / 2 * (r - 1)


def pi_m(m: Sequence[int], r: int, a: RationalLike) -> Fraction:
    """The double product over ``1 <= i < j <= r`` normalizing the series terms.

    Each pair contributes
    ``(d + k(j-i)) / (k(j-i)) * (k(j-i+1))_d / (k(j-i-1)+1)_d`` with
    ``d = m_i - m_j`` and ``k = a/2``.
    """
    k = as_fraction(a) / 2
    rows = pad(partition(m), r)
    out = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            d = rows[i] - rows[j]
            if d == 0:
                continue
            g = j - i
            out *= (d + k * g) / (k * g)
            out *= rising(k * (g + 1), d) / rising(k * (g - 1) + 1, d)
    return out


def hook_products(m: Sequence[int], alpha: RationalLike) -> tuple:
    """Lower and upper hook-length products ``(h_*(m), h^*(m))``.

    Lower hook of a cell is ``alpha*arm + leg + 1``, upper is
    ``alpha*arm + leg + alpha``.
    """
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    m = partition(m)
    conj = conjugate(m)
    lower = upper = Fraction(1)
    for i, row in enumerate(m):
        for j in range(row):
            arm = row - j - 1
            leg = conj[j] - i - 1
            lower *= alpha * arm + leg + 1
            upper *= alpha * arm + leg + alpha
    return lower, upper
