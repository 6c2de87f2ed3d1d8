"""Classification data for real bounded symmetric domains inside complex ones.

Each descriptor carries the real quadruple ``(r, iota-1, a, 2b)``, the complex
triple ``(r', a', 2b')`` and the derived constants (genus, ``d/r'``, ``q``,
``rho(xi)``, Wallach set).  All values are exact rationals.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .combinatorics import as_fraction, q_param

KINDS = ("BCxBC", "A", "BC", "B1", "B2", "D1", "D2")
ALIASES = {"B": "B1", "D": "D1", "SU": "BCxBC", "SO": "B1", "SP": "BC"}
FAMILY = {"BCxBC": "BCxBC", "A": "A", "BC": "BC", "B1": "B", "B2": "B", "D1": "D", "D2": "D"}


class DomainError(ValueError):
    """Parameters outside the family."""


@dataclass(frozen=True)
class DomainDescriptor:
    kind: str
    params: dict = field(hash=False)
    rank: int
    iota_minus_1: Fraction
    a: Fraction
    two_b: Fraction
    complex_rank: int
    a_complex: Fraction
    two_b_complex: Fraction
    genus: Fraction
    d_over_r: Fraction
    rho_xi: Fraction
    wallach_singular: tuple
    wallach_threshold: Fraction
    groups: dict = field(hash=False, default_factory=dict)
    literal_quadruple: tuple | None = None

    @property
    def family(self) -> str:
        return FAMILY[self.kind]

    @property
    def b(self) -> Fraction:
        return self.two_b / 2

    @property
    def b_complex(self) -> Fraction:
        return self.two_b_complex / 2

    @property
    def iota(self) -> Fraction:
        return self.iota_minus_1 + 1

    @property
    def q(self) -> Fraction:
        return q_param(self.rank, self.a)

    @property
    def quadruple(self) -> tuple:
        return (self.rank, self.iota_minus_1, self.a, self.two_b)

    @property
    def complex_triple(self) -> tuple:
        return (self.complex_rank, self.a_complex, self.two_b_complex)

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return str(v)
            if isinstance(v, (tuple, list)):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            return v

        out = {k: enc(v) for k, v in asdict(self).items()}
        out["family"] = self.family
        out["quadruple"] = enc(self.quadruple)
        out["complex_triple"] = enc(self.complex_triple)
        out["q"] = str(self.q)
        return out


def _build(kind, params, real, complex_, groups, literal=None) -> DomainDescriptor:
    r, iota_m1, a, two_b = (real[0], *(as_fraction(v) for v in real[1:]))
    rc, ac, two_bc = (complex_[0], *(as_fraction(v) for v in complex_[1:]))
    bc = two_bc / 2
    genus = ac * (rc - 1) + 2 + bc
    d_over_r = 1 + bc + ac / 2 * (rc - 1)
    # d = r' + (a'/2) r'(r'-1) + b' r' independently gives p = 2d/r' - b'
    dim = rc + ac / 2 * rc * (rc - 1) + bc * rc
    if 2 * dim / rc - bc != genus or dim / rc != d_over_r:
        raise AssertionError("inconsistent derived constants")
    rho = r * iota_m1 + a / 2 * r * (r - 1) + two_b / 2 * r
    singular = tuple(ac / 2 * j for j in range(rc))
    return DomainDescriptor(
        kind=kind,
        params=dict(params),
        rank=r,
        iota_minus_1=iota_m1,
        a=a,
        two_b=two_b,
        complex_rank=rc,
        a_complex=ac,
        two_b_complex=two_bc,
        genus=genus,
        d_over_r=d_over_r,
        rho_xi=rho,
        wallach_singular=singular,
        wallach_threshold=ac / 2 * (rc - 1),
        groups=groups,
        literal_quadruple=literal,
    )


def _need(params, *names):
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise DomainError(f"missing parameter(s): {', '.join(missing)}")
    return [params[n] for n in names]


def make_domain(kind: str, **params) -> DomainDescriptor:
    """Descriptor for a family member.

    ``BCxBC`` takes ``l, r`` (the group SU(l, r)) or a generic ``r, a, two_b``;
    rank one is admitted there only.  ``A`` takes ``r, a``; ``BC`` and ``B1``
    take ``l > r >= 2``; ``B2`` and ``D1`` take ``r``; ``D2`` has rank 3.
    """
    kind = ALIASES.get(kind.upper() if kind.upper() in ALIASES else kind, kind)
    if kind not in KINDS:
        raise DomainError(f"unknown kind {kind!r}; expected one of {KINDS}")
    params = {k: v for k, v in params.items() if v is not None}

    if kind == "BCxBC":
        if "l" in params:
            l, r = (int(v) for v in _need(params, "l", "r"))
            if not l >= r >= 1:
                raise DomainError("SU(l, r) needs l >= r >= 1")
            a, two_b = Fraction(2), Fraction(2 * (l - r))
            groups = {"G": f"SU({l},{r})", "H": f"SU({l},{r})", "D": f"SU({l},{r})/S(U({l})xU({r}))"}
        else:
            r, a, two_b = _need(params, "r", "a", "two_b")
            r, a, two_b = int(r), as_fraction(a), as_fraction(two_b)
            if r < 1 or a < 0 or two_b < 0 or (r > 1 and a <= 0):
                raise DomainError("invalid generic complex domain parameters")
            groups = {}
        return _build(kind, params, (r, 1, a, two_b), (r, a, two_b), groups)

    if kind == "A":
        r, a = _need(params, "r", "a")
        r, a = int(r), as_fraction(a)
        allowed = (r >= 2 and a in (1, 2, 4)) or (r == 2 and a > 0) or (r, a) == (3, 8)
        if not allowed:
            raise DomainError(f"(r, a) = ({r}, {a}) is not a type A pair")
        return _build(kind, params, (r, 0, a, 0), (r, a, 0), {})

    if kind in ("BC", "B1"):
        l, r = (int(v) for v in _need(params, "l", "r"))
        if r < 2:
            raise DomainError("rank one is excluded")
        if l <= r:
            raise DomainError(f"need l > r, got l={l}, r={r}")
        if kind == "BC":
            groups = {"H": f"Sp({l},{r})", "G": f"SU({2 * l},{2 * r})"}
            return _build(kind, params, (r, 3, 4, 4 * (l - r)), (2 * r, 2, 4 * (l - r)), groups)
        groups = {"H": f"SO0({l},{r})", "G": f"SU({l},{r})"}
        return _build(kind, params, (r, 0, 1, l - r), (r, 2, 2 * (l - r)), groups, literal=(r, 1, 1, 1 - r))

    if kind == "B2":
        (r,) = (int(v) for v in _need(params, "r"))
        if r < 2:
            raise DomainError("rank one is excluded")
        groups = {"H": f"SO({2 * r + 1},C)", "G": f"SO*({2 * (2 * r + 1)})"}
        return _build(kind, params, (r, 0, 2, 2), (r, 4, 4), groups, literal=(r, 1, 2, 2))

    if kind == "D1":
        (r,) = (int(v) for v in _need(params, "r"))
        if r < 2:
            raise DomainError("rank one is excluded")
        return _build(kind, params, (r, 0, 1, 0), (r, 2, 0), {"H": f"SO({r},{r})", "G": f"SU({r},{r})"})

    r = int(params.get("r", 3))
    if r != 3:
        raise DomainError("D2 has rank 3")
    return _build(kind, {"r": 3}, (3, 0, 4, 0), (3, 8, 0), {"H": "SU*(8)", "G": "E7(-25)"})


def wallach_set(dom: DomainDescriptor) -> tuple:
    """``(singular points, threshold)``; the continuous part is ``(threshold, inf)``."""
    return dom.wallach_singular, dom.wallach_threshold


def in_wallach_set(dom: DomainDescriptor, nu) -> bool:
    nu = as_fraction(nu)
    return nu in dom.wallach_singular or nu > dom.wallach_threshold
