"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a ``dict`` mapping exponent tuples (all of one length) to
nonzero :class:`~fractions.Fraction` coefficients.  Only the handful of
operations the oracles need are provided.
"""

from __future__ import annotations

from fractions import Fraction


def clean(p: dict) -> dict:
    return {e: c for e, c in p.items() if c}


def add(p: dict, q: dict, scale=1) -> dict:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + scale * c
    return clean(out)


def scale(p: dict, s) -> dict:
    return clean({e: s * c for e, c in p.items()})


def mul_monomial(p: dict, mono: tuple, c=1) -> dict:
    return {tuple(a + b for a, b in zip(e, mono)): c * v for e, v in p.items()}


def mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return clean(out)


def derivative(p: dict, j: int) -> dict:
    out = {}
    for e, c in p.items():
        if e[j]:
            new = list(e)
            new[j] -= 1
            out[tuple(new)] = c * e[j]
    return out


def flip(p: dict, j: int) -> dict:
    """Substitute ``x_j -> -x_j``."""
    return {e: (-c if e[j] % 2 else c) for e, c in p.items()}


def swap(p: dict, i: int, j: int, sign: int = 1) -> dict:
    """Substitute ``x_i -> sign*x_j, x_j -> sign*x_i``."""
    out = {}
    for e, c in p.items():
        new = list(e)
        new[i], new[j] = e[j], e[i]
        if sign < 0 and (e[i] + e[j]) % 2:
            c = -c
        out[tuple(new)] = c
    return out


def div_linear(p: dict, i: int, j: int | None = None, sign: int = 1) -> dict:
    """Exact quotient of ``p`` by ``x_i`` (``j is None``) or ``x_i + sign*x_j``.

    Raises ``ArithmeticError`` on a nonzero remainder.
    """
    if not p:
        return {}
    if j is None:
        out = {}
        for e, c in p.items():
            if e[i] == 0:
                raise ArithmeticError("polynomial not divisible by x_%d" % (i + 1))
            new = list(e)
            new[i] -= 1
            out[tuple(new)] = c
        return out
    # synthetic division in x_i: root x_i = -sign * x_j
    by_power: dict = {}
    for e, c in p.items():
        rest = list(e)
        rest[i] = 0
        by_power.setdefault(e[i], {})
        key = tuple(rest)
        by_power[e[i]][key] = by_power[e[i]].get(key, 0) + c
    top = max(by_power)
    root_shift = [0] * len(next(iter(p)))
    root_shift[j] = 1
    root_shift = tuple(root_shift)
    quotient: dict = {}
    carry: dict = {}
    for power in range(top, 0, -1):
        coef = add(by_power.get(power, {}), carry)
        # quotient coefficient of x_i^(power-1)
        for e, c in coef.items():
            new = list(e)
            new[i] = power - 1
            quotient[tuple(new)] = quotient.get(tuple(new), 0) + c
        carry = mul_monomial(coef, root_shift, -sign)
    remainder = add(by_power.get(0, {}), carry)
    if remainder:
        raise ArithmeticError("polynomial not divisible by the linear form")
    return clean(quotient)


def evaluate(p: dict, x) -> Fraction:
    total = Fraction(0)
    for e, c in p.items():
        term = c
        for xi, k in zip(x, e):
            if k:
                term *= xi**k
        total += term
    return total


def constant_term(p: dict, nvars: int) -> Fraction:
    return p.get((0,) * nvars, Fraction(0))


def degrees(p: dict) -> set:
    return {sum(e) for e in p}
