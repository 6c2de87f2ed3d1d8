"""Discrete complementary-series components in branching problems.

Tensor setting: ``H_nu (x) conj(H_nu)`` under SU(l, r); the component with
parameter ``sigma = nu + k`` is discrete iff the norm-square series

    4F3(sigma, sigma, sigma, sigma; nu, nu, l; 1^r)      (a = 2)

converges.  Restriction setting: ``H_nu`` of SU(l, r) (resp. SU(2l, 2r))
restricted to SO0(l, r) (resp. Sp(l, r)), with ``sigma = nu + 2k`` and the
series of the type B (resp. BC) real form.

Scans decide admissibility with :func:`convergent_at_one` and keep the
printed closed-form bounds only as cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .combinatorics import as_fraction
from .domains import DomainError, make_domain
from .hypergeo import DivergentSeriesError, SeriesParams, SeriesResult, convergent_at_one, hyper_at_one
from .spherical import lambda_of_sigma

HALF = Fraction(1, 2)


class CertificationError(AssertionError):
    """Printed bound and convergence predicate disagree, or the series diverges."""


@dataclass(frozen=True)
class BranchingCertificate:
    setting: str            # "tensor" | "restriction"
    hkind: str              # "SU" | "SO" | "Sp"
    l: int
    r: int
    nu: Fraction
    nu_class: str           # "continuous" | "singular"
    j: int | None           # index of the singular Wallach point nu = j - 1
    k: int
    sigma: Fraction
    params: SeriesParams
    i_lambda: Fraction
    i_lambda_printed: Fraction | None
    theorem: str
    norm_square: SeriesResult | None = field(default=None, compare=False)

    @property
    def groups(self) -> dict:
        if self.hkind == "SU":
            return {"G": f"SU({self.l},{self.r})xSU({self.l},{self.r})", "H": f"SU({self.l},{self.r})"}
        if self.hkind == "SO":
            return {"G": f"SU({self.l},{self.r})", "H": f"SO0({self.l},{self.r})"}
        return {"G": f"SU({2 * self.l},{2 * self.r})", "H": f"Sp({self.l},{self.r})"}

    def printed_bound(self) -> bool:
        return printed_bound(self.setting, self.hkind, self.l, self.r, self.nu, self.k, self.j)

    def to_json(self) -> dict:
        out = {
            "setting": self.setting,
            "groups": self.groups,
            "l": self.l,
            "r": self.r,
            "nu": str(self.nu),
            "nu_class": self.nu_class if self.j is None else f"singular j={self.j}",
            "k": self.k,
            "sigma": str(self.sigma),
            "series": {"alpha": [str(v) for v in self.params.alpha], "beta": [str(v) for v in self.params.beta],
                       "rank": self.params.r, "a": str(self.params.a)},
            "i_lambda": str(self.i_lambda),
            "theorem": self.theorem,
        }
        if self.i_lambda_printed is not None:
            out["i_lambda_printed"] = str(self.i_lambda_printed)
        out["norm_square"] = None if self.norm_square is None else self.norm_square.to_json()
        return out


class CertificateList(list):
    """A list of certificates that remembers why it may be empty."""

    def __init__(self, items=(), reason: str | None = None):
        super().__init__(items)
        self.reason = reason


def _ambient(hkind: str, l: int, r: int):
    """``(rank', a')`` of the ambient complex domain."""
    if hkind == "Sp":
        return 2 * r, Fraction(2)
    return r, Fraction(2)


def classify_nu(hkind: str, l: int, r: int, nu) -> tuple:
    """``("continuous", None)`` or ``("singular", j)``; raises for nu outside the Wallach set."""
    nu = as_fraction(nu)
    rc, ac = _ambient(hkind, l, r)
    if nu > ac / 2 * (rc - 1):
        return "continuous", None
    for j in range(1, rc + 1):
        if nu == ac / 2 * (j - 1):
            return "singular", j
    raise DomainError(f"nu={nu} is not in the Wallach set (threshold {ac / 2 * (rc - 1)})")


def series_params(setting: str, hkind: str, l: int, r: int, nu, k: int) -> SeriesParams:
    """Parameters of the norm-square series at ``1^r`` for the component ``(nu, k)``."""
    nu = as_fraction(nu)
    if setting == "tensor":
        s = nu + k
        return SeriesParams((s, s, s, s), (nu, nu, Fraction(l)), r, 2)
    if hkind == "SO":
        s = nu + 2 * k
        b = Fraction(l - r, 2)
        c = HALF * (r - 1) + b + HALF
        return SeriesParams((s / 2, s / 2, (s + 1) / 2, (s + 1) / 2), (nu / 2, (nu + 1) / 2, c), r, 1)
    if hkind == "Sp":
        s = nu + 2 * k
        c = 2 * (r - 1) + 2 * (l - r) + 2
        return SeriesParams((s, s, s - 1, s - 1), (c, nu, nu - 1), r, 4)
    raise ValueError(f"unknown restriction kind {hkind!r}")


def printed_bound(setting: str, hkind: str, l: int, r: int, nu, k: int, j: int | None = None) -> bool:
    """The closed-form admissibility inequality as printed for each case."""
    nu = as_fraction(nu)
    if setting == "tensor":
        if j is not None:
            return k == 0 and l - r > 2 * j - 3
        return 2 * nu + 4 * k < 1 + l - r
    if hkind == "SO":
        if j is not None:
            return k == 0 and l - r > j - 1
        return nu + 4 * k < Fraction(l - r, 2)
    if j is not None:
        return k == 0 and l - r >= j - 2
    return k < (3 + 2 * (l - r) - 2 * nu) / 8


def _check_hypotheses(setting: str, hkind: str, l: int, r: int):
    if not l >= r >= 2:
        raise DomainError(f"need l >= r >= 2, got l={l}, r={r}")
    if setting == "tensor":
        if l - r <= 2:
            return "no discrete components: need l - r > 2"
        return None
    if hkind == "SO" and not l - r > 2 * (r - 1):
        raise DomainError("SO restriction needs l - r > 2(r - 1)")
    if hkind == "Sp" and not l - r >= 2 * (r - 1):
        raise DomainError("Sp restriction needs l - r >= 2(r - 1)")
    return None


def _lambda(setting: str, hkind: str, l: int, r: int, sigma: Fraction):
    if setting == "tensor":
        dom = make_domain("BCxBC", l=l, r=r)
    elif hkind == "SO":
        dom = make_domain("B1", l=l, r=r)
    else:
        dom = make_domain("BC", l=l, r=r)
    rep = lambda_of_sigma(dom, sigma)
    return rep.i_lambda, rep.printed


def _scan(setting: str, hkind: str, l: int, r: int, nu, k_max: int) -> CertificateList:
    l, r = int(l), int(r)
    reason = _check_hypotheses(setting, hkind, l, r)
    nu = as_fraction(nu)
    cls, j = classify_nu(hkind, l, r, nu)
    if reason:
        return CertificateList(reason=reason)
    if nu == 0:
        return CertificateList(reason="nu = 0 is the trivial representation")
    if setting == "tensor":
        theorem = "tensor-continuous" if j is None else "tensor-singular"
    else:
        theorem = f"restriction-{hkind}-" + ("continuous" if j is None else "singular")
    ks = range(0, (k_max if j is None else 0) + 1)
    out = CertificateList()
    for k in ks:
        p = series_params(setting, hkind, l, r, nu, k)
        if not convergent_at_one(p):
            break
        sigma = nu + (k if setting == "tensor" else 2 * k)
        lam, lam_printed = _lambda(setting, hkind, l, r, sigma)
        out.append(BranchingCertificate(setting, hkind, l, r, nu, cls, j, k, sigma, p, lam, lam_printed, theorem))
    if not out:
        out.reason = "no admissible k"
    return out


def scan_tensor(l: int, r: int, nu, k_max: int) -> CertificateList:
    """Admissible ``k`` for ``SU(l, r)`` acting on ``H_nu (x) conj(H_nu)``."""
    return _scan("tensor", "SU", l, r, nu, k_max)


def scan_restriction(hkind: str, l: int, r: int, nu, k_max: int) -> CertificateList:
    """Admissible ``k`` for ``H_nu`` restricted to SO0(l, r) (``hkind="SO"``) or Sp(l, r)."""
    hkind = {"so": "SO", "sp": "Sp"}.get(str(hkind).lower())
    if hkind is None:
        raise ValueError("hkind must be SO or Sp")
    return _scan("restriction", hkind, l, r, nu, k_max)


def certify(cert: BranchingCertificate, max_degree: int = 120, tail_tol: float = 1e-10,
            precision: str = "double") -> BranchingCertificate:
    """Sum the norm square and confirm printed bound <=> convergence predicate."""
    pred = convergent_at_one(cert.params)
    printed = cert.printed_bound()
    if pred != printed:
        raise CertificationError(
            f"printed bound ({printed}) and convergence predicate ({pred}) disagree for "
            f"{cert.hkind}({cert.l},{cert.r}) nu={cert.nu} k={cert.k}"
        )
    try:
        res = hyper_at_one(cert.params, max_degree, tail_tol, precision)
    except DivergentSeriesError as exc:
        raise CertificationError(str(exc)) from exc
    if not float(res.value) > 0:
        raise CertificationError(f"norm square {res.value} is not positive")
    return replace(cert, norm_square=res)


def make_certificate(setting: str, hkind: str, l: int, r: int, nu, k: int) -> BranchingCertificate:
    """Unchecked certificate for an arbitrary ``(nu, k)``; mostly for testing :func:`certify`."""
    nu = as_fraction(nu)
    cls, j = classify_nu(hkind, l, r, nu)
    sigma = nu + (k if setting == "tensor" else 2 * k)
    lam, lam_printed = _lambda(setting, hkind, l, r, sigma)
    p = series_params(setting, hkind, l, r, nu, k)
    tag = "tensor" if setting == "tensor" else f"restriction-{hkind}"
    return BranchingCertificate(setting, hkind, l, r, nu, cls, j, k, sigma, p, lam, lam_printed,
                                tag + ("-continuous" if j is None else "-singular"))
