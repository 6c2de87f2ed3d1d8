"""Hypergeometric series of Jack-polynomial argument.

    kFl(alpha; beta; t) = sum_m prod (alpha_p)_m / prod (beta_p)_m * pi_m/(q)_m * Omega_m(t_1^2, ..., t_r^2)

Pochhammer symbols carry the step a/2.  Note the squares: :func:`hyper_eval`
takes geometric coordinates ``t`` and feeds ``t_i**2`` to ``Omega``;
:func:`series_sum` takes the ``Omega`` argument directly.

Sums run over complete weight shells 0, 1, 2, ...; the absolute sum of the
last shell is reported as the tail indicator.  Exact coefficients are
available from :func:`series_coefficient`; the summation loop builds each
term from its parent (one box removed) in floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .combinatorics import as_fraction, enumerate_partitions, gen_pochhammer, pi_m, q_param
from .jack import OmegaEvaluator, omega_shell

EXTENDED_DPS = 40


class Verdict(str, enum.Enum):
    CONVERGED = "converged-by-criterion"
    TRUNCATED = "truncated-series"
    DIVERGENT = "divergent-by-criterion"


class PoleError(ZeroDivisionError):
    """A denominator Pochhammer symbol vanishes on a term that is needed."""


class DivergentSeriesError(ValueError):
    """Summation at the all-ones point was requested for a divergent series."""


def _nonpositive_int(x: Fraction):
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class SeriesParams:
    alpha: tuple
    beta: tuple
    r: int
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(as_fraction(v) for v in self.alpha))
        object.__setattr__(self, "beta", tuple(as_fraction(v) for v in self.beta))
        object.__setattr__(self, "a", as_fraction(self.a))
        if self.r < 1:
            raise ValueError("rank must be at least 1")
        if self.a < 0 or (self.r > 1 and self.a == 0):
            raise ValueError("multiplicity a must be positive")
        bounds = self.row_bounds()
        for b in self.beta:
            for j in range(self.r):
                shifted = b - self.k * j
                if _nonpositive_int(shifted):
                    limit = int(-shifted)
                    if bounds[j] is None or bounds[j] > limit:
                        raise PoleError(f"denominator parameter {b} hits a pole in row {j + 1}")

    @property
    def k(self) -> Fraction:
        return self.a / 2

    @property
    def q(self) -> Fraction:
        return q_param(self.r, self.a)

    def row_bounds(self) -> list:
        """Largest admissible ``m_j`` per row before a numerator factor vanishes."""
        bounds = [None] * self.r
        for c in self.alpha:
            for i in range(self.r):
                shifted = c - self.k * i
                if _nonpositive_int(shifted):
                    n = int(-shifted)
                    for j in range(i, self.r):
                        if bounds[j] is None or bounds[j] > n:
                            bounds[j] = n
        return bounds

    @property
    def terminating(self) -> bool:
        """Finite sum: the first row is bounded, hence every row."""
        return self.row_bounds()[0] is not None

    @property
    def truncated(self) -> bool:
        """Some row is bounded, so the index set is restricted."""
        return any(b is not None for b in self.row_bounds())

    @property
    def excess(self) -> Fraction:
        """``sum(alpha) - sum(beta) + (a/2)(r-1)``; negative means convergent at 1^r."""
        return sum(self.alpha, Fraction(0)) - sum(self.beta, Fraction(0)) + self.k * (self.r - 1)


@dataclass(frozen=True)
class SeriesResult:
    value: object
    truncation_degree: int
    last_shell_magnitude: float
    verdict: Verdict
    tol_met: bool | None = None
    precision: str = "double"
    shell_sums: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.truncation_degree < 0 or self.last_shell_magnitude < 0:
            raise ValueError("negative degree or shell magnitude")

    def partial_sums(self) -> list:
        out, acc = [], 0
        for s in self.shell_sums:
            acc = acc + s
            out.append(acc)
        return out

    def to_json(self) -> dict:
        return {
            "value": None if self.value is None else _num_str(self.value),
            "truncation_degree": self.truncation_degree,
            "last_shell_magnitude": _num_str(self.last_shell_magnitude),
            "verdict": self.verdict.value,
            "tol_met": self.tol_met,
            "precision": self.precision,
            "dps": EXTENDED_DPS if self.precision == "extended" else 15,
        }


def _num_str(x) -> str:
    if hasattr(x, "_mpf_"):
        return mpmath.nstr(mpmath.mpf(x), EXTENDED_DPS)
    return repr(float(x))


def convergent_at_one(p: SeriesParams) -> bool:
    """Convergence of the series at ``1^r``.

    Terminating series always converge.  For the balanced shape
    ``(l+1)Fl`` the test is ``sum(alpha) - sum(beta) < -(a/2)(r-1)``; this also
    covers numerators that only bound rows 2..r, since the one-row face
    ``m = (n, 0, ..., 0)`` decides.  Fewer numerators always converge, more
    never do.
    """
    if p.terminating:
        return True
    nk, nl = len(p.alpha), len(p.beta)
    if nk <= nl:
        return True
    if nk > nl + 1:
        return False
    return p.excess < 0


def _verdict(p: SeriesParams) -> Verdict:
    if not convergent_at_one(p):
        return Verdict.DIVERGENT
    return Verdict.TRUNCATED if p.truncated else Verdict.CONVERGED


def series_coefficient(p: SeriesParams, m: Sequence[int]) -> Fraction:
    """Exact coefficient of ``Omega_m`` in the series."""
    m = tuple(m)
    num = Fraction(1)
    for c in p.alpha:
        num *= gen_pochhammer(c, m, p.k)
        if not num:
            return Fraction(0)
    den = Fraction(1)
    for c in p.beta:
        den *= gen_pochhammer(c, m, p.k)
    if not den:
        raise PoleError(f"denominator vanishes at {m}")
    return num / den * pi_m(m, p.r, p.a) / gen_pochhammer(p.q, m, p.k)


class _Context:
    def __init__(self, precision: str):
        if precision not in ("double", "extended"):
            raise ValueError("precision must be 'double' or 'extended'")
        self.precision = precision
        self.ctx = mpmath.mp.clone() if precision == "extended" else None
        if self.ctx is not None:
            self.ctx.dps = EXTENDED_DPS

    def num(self, x):
        if self.ctx is None:
            return float(x)
        if isinstance(x, Fraction):
            return self.ctx.mpf(x.numerator) / x.denominator
        return self.ctx.mpf(x)

    def zero(self):
        return self.num(0)


def _shells(p: SeriesParams, max_degree: int, ctx: _Context):
    """Yield ``(n, {m: coefficient})`` for n = 0..max_degree (zero terms omitted)."""
    r = p.r
    k = ctx.num(p.k)
    one = ctx.num(1)
    alphas = [ctx.num(c) for c in p.alpha]
    betas = [ctx.num(c) for c in p.beta]
    q = ctx.num(p.q)
    bounds = p.row_bounds()
    prev = {(): one}
    yield 0, prev
    for n in range(1, max_degree + 1):
        cur = {}
        for m in enumerate_partitions(n, r):
            i = len(m) - 1
            if bounds[i] is not None and m[i] > bounds[i]:
                continue
            parent = m[:-1] if m[i] == 1 else m[:i] + (m[i] - 1,)
            pv = prev.get(parent)
            if pv is None:
                continue
            step = ctx.num(m[i] - 1) - k * i
            ratio = one
            for c in alphas:
                ratio *= c + step
            for c in betas:
                ratio /= c + step
            ratio /= q + step
            rows = m + (0,) * (r - len(m))
            for j in range(i):
                g = i - j
                d = rows[j] - rows[i]
                kg = k * g
                ratio *= (d + kg) / (d + 1 + kg) * (k * (g - 1) + 1 + d) / (k * (g + 1) + d)
            for j in range(i + 1, r):
                g = j - i
                d = rows[i] - 1 - rows[j]
                kg = k * g
                ratio *= (d + 1 + kg) / (d + kg) * (k * (g + 1) + d) / (k * (g - 1) + 1 + d)
            term = pv * ratio
            if term:
                cur[m] = term
        prev = cur
        yield n, cur


def series_sum(p: SeriesParams, x: Sequence, max_degree: int, precision: str = "double",
               tail_tol: float | None = None) -> SeriesResult:
    """Sum the series with ``Omega`` evaluated at ``x`` itself (no squaring).

    With ``tail_tol`` the loop stops once two consecutive shells have
    absolute sum below the tolerance.
    """
    if len(x) != p.r:
        raise ValueError(f"expected {p.r} coordinates, got {len(x)}")
    if any(not abs(float(v)) < 1 for v in x):
        raise ValueError("series argument must lie in (-1, 1)^r")
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    ctx = _Context(precision)
    xs = [float(v) for v in x]
    ev = OmegaEvaluator(p.r, p.a, xs, max_degree) if p.r > 1 else None
    total = ctx.zero()
    shells = []
    last = 0.0
    quiet = 0
    degree = 0
    for n, terms in _shells(p, max_degree, ctx):
        if n == 0:
            omegas = {(): 1.0}
        elif terms:
            omegas = omega_shell(n, p.r, p.a, xs, ev)
        shell = ctx.zero()
        mag = ctx.zero()
        for m, coef in terms.items():
            t = coef * ctx.num(omegas[m])
            shell += t
            mag += abs(t)
        total += shell
        shells.append(shell)
        last = float(mag)
        degree = n
        if tail_tol is not None and n > 0:
            quiet = quiet + 1 if last < tail_tol else 0
            if quiet >= 2:
                break
    verdict = _verdict(p)
    tol_met = None if tail_tol is None else last < tail_tol
    return SeriesResult(total, degree, last, verdict, tol_met, precision, tuple(shells))


def hyper_eval(p: SeriesParams, t: Sequence, max_degree: int, precision: str = "double",
               tail_tol: float | None = None) -> SeriesResult:
    """Truncated series at geometric coordinates ``t`` in ``[0, 1)^r``."""
    if len(t) != p.r:
        raise ValueError(f"expected {p.r} coordinates, got {len(t)}")
    if any(not (0 <= float(v) < 1) for v in t):
        raise ValueError("t must lie in [0, 1)^r")
    return series_sum(p, [float(v) ** 2 for v in t], max_degree, precision, tail_tol)


def shell_magnitudes_at_one(p: SeriesParams, max_degree: int, precision: str = "double") -> list:
    """Absolute shell sums at ``1^r`` for n = 0..max_degree, without any convergence check."""
    ctx = _Context(precision)
    out = []
    for _, terms in _shells(p, max_degree, ctx):
        out.append(sum((abs(v) for v in terms.values()), ctx.zero()))
    return out


def partial_sums_at_one(p: SeriesParams, max_degree: int, precision: str = "double") -> list:
    ctx = _Context(precision)
    out, acc = [], ctx.zero()
    for _, terms in _shells(p, max_degree, ctx):
        acc += sum(terms.values(), ctx.zero())
        out.append(acc)
    return out


def hyper_at_one(p: SeriesParams, max_degree: int, tail_tol: float, precision: str = "double") -> SeriesResult:
    """Series at ``1^r`` (every ``Omega_m(1^r) = 1``), stopping at the first shell below ``tail_tol``.

    Raises :class:`DivergentSeriesError` when :func:`convergent_at_one` fails.
    """
    if not convergent_at_one(p):
        raise DivergentSeriesError(
            f"series diverges at 1^{p.r}: excess {p.excess} >= 0" if len(p.alpha) == len(p.beta) + 1
            else "series has more numerator than denominator parameters plus one"
        )
    ctx = _Context(precision)
    total = ctx.zero()
    shells = []
    last = 0.0
    degree = 0
    for n, terms in _shells(p, max_degree, ctx):
        shell = sum(terms.values(), ctx.zero())
        total += shell
        shells.append(shell)
        last = float(sum((abs(v) for v in terms.values()), ctx.zero()))
        degree = n
        if last < tail_tol:
            break
    return SeriesResult(total, degree, last, _verdict(p), last < tail_tol, precision, tuple(shells))


def growth_exponent(p: SeriesParams, max_degree: int = 80) -> float:
    """Least-squares slope of ``log(shell magnitude)`` against ``log n`` over the upper half.

    Shells behave like ``n^(e-1)`` where ``e`` is :attr:`SeriesParams.excess`;
    returns ``-inf`` when the tail shells vanish.
    """
    mags = shell_magnitudes_at_one(p, max_degree)
    lo = max(2, max_degree // 2)
    pts = [(math.log(n), math.log(float(mags[n]))) for n in range(lo, max_degree + 1) if mags[n] > 0]
    if len(pts) < 2:
        return -math.inf
    mx = sum(u for u, _ in pts) / len(pts)
    my = sum(v for _, v in pts) / len(pts)
    sxx = sum((u - mx) ** 2 for u, _ in pts)
    sxy = sum((u - mx) * (v - my) for u, v in pts)
    return sxy / sxx


def empirically_bounded(p: SeriesParams, max_degree: int = 80, margin: float = 0.25) -> bool:
    """Bounded partial sums judged from the shell growth exponent.

    Shell exponent below ``-1 - margin`` counts as summable; the margin keeps
    the logarithmic boundary case (exponent exactly -1) on the growing side.
    """
    return growth_exponent(p, max_degree) < -1 - margin
