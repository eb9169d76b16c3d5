"""Principal sl(2) spectral data and k-type multiplicity series.

The semisimple generator h of a principal sl(2) pairs with every root as
twice its height, so all spectral data reduces to the positive-root height
distribution: the exponents are its dual partition, and the h-spectrum of
the big nilradical is the multiset {2*height}.  Multiplicities of the
sl(2)-types in the first derived-functor module come from a difference of
two restricted partition counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from .errors import InputError, InternalError
from .exact import Vector, dot, format_rational, nullspace, solve_linear, vadd, vscale, vzero
from .rootsys import RootSystem, height_distribution, is_integral


def principal_h(rs: RootSystem) -> Vector:
    """The h-element of a principal sl(2): the unique vector in the root
    span pairing to 2 with every simple root (identified with a Cartan
    element through the invariant form)."""
    rank = rs.rank
    rows = [[dot(a, b) for b in rs.simple_roots] for a in rs.simple_roots]
    sol = solve_linear(rows, [Fraction(2)] * rank)
    if sol is None:
        raise InternalError("simple roots are linearly dependent")
    h = vzero(rs.ambient_dim)
    for c, a in zip(sol, rs.simple_roots):
        h = vadd(h, vscale(c, a))
    for a in rs.all_roots:
        if dot(a, h) != 2 * rs.height(a):
            raise InternalError("h does not pair with roots by twice the height")
    return h


def exponents(rs: RootSystem) -> list[int]:
    """Dual partition of the positive-root height distribution, ascending."""
    dist = height_distribution(rs)
    counts = [dist.get(hh, 0) for hh in range(1, max(dist) + 1)]
    out = [sum(1 for c in counts if c >= j) for j in range(1, counts[0] + 1)]
    return sorted(out)


@dataclass(frozen=True)
class PrincipalData:
    rs: RootSystem
    h_element: Vector
    exponents: tuple[int, ...]
    nbar_multiset: dict
    nbar_kperp_multiset: dict

    @classmethod
    def build(cls, rs: RootSystem) -> "PrincipalData":
        if rs.rank < 2:
            raise InputError("principal sl(2) machinery needs rank >= 2")
        h = principal_h(rs)
        nbar = dict(sorted(Counter(2 * rs.height(a) for a in rs.positive_roots).items()))
        if nbar.get(2, 0) < 1:
            raise InternalError("no eigenvalue-2 line to carve the sl(2) raising vector from")
        kperp = dict(nbar)
        kperp[2] -= 1
        if kperp[2] == 0:
            del kperp[2]
        exps = tuple(exponents(rs))
        if sum(2 * e + 1 for e in exps) != len(rs.all_roots) + rs.rank:
            raise InternalError("exponents do not add up to dim g")
        return cls(
            rs=rs,
            h_element=h,
            exponents=exps,
            nbar_multiset=nbar,
            nbar_kperp_multiset=kperp,
        )

    def lambda_h(self, lam: Vector) -> Fraction:
        return dot(lam, self.h_element)


def partition_P(multiset: dict, target) -> int:
    """Coefficient of q^target in prod (1 - q^part)^(-mult).

    Negative, non-integral or otherwise unreachable targets give 0: no
    monomial of the symmetric algebra has such an h-weight.
    """
    for part in multiset:
        if part <= 0:
            raise InputError(f"parts must be positive, got {part}")
    t = Fraction(target)
    if t < 0 or t.denominator != 1:
        return 0
    t = int(t)
    dp = [0] * (t + 1)
    dp[0] = 1
    for part, mult in sorted(multiset.items()):
        for _ in range(mult):
            for i in range(part, t + 1):
                dp[i] += dp[i - part]
    return dp[t]


def a1_multiplicity(pd: PrincipalData, m: int, lam: Vector) -> int:
    """Multiplicity of the (m+1)-dimensional sl(2)-type in the first
    derived-functor module attached to a non-integral weight."""
    if m < 0 or int(m) != m:
        raise InputError("m must be a nonnegative integer")
    if is_integral(pd.rs, lam):
        raise InputError("lambda must be non-integral")
    lh = pd.lambda_h(lam)
    val = partition_P(pd.nbar_kperp_multiset, m - lh + 2) - partition_P(
        pd.nbar_kperp_multiset, -m - lh
    )
    if val < 0:
        raise InternalError(f"negative multiplicity {val} for m={m}")
    return val


def minimal_ktype(pd: PrincipalData, lam: Vector) -> int:
    """Smallest m with nonzero multiplicity; the series bottoms out at
    lambda(h) - 2 with multiplicity exactly 1."""
    lh = pd.lambda_h(lam)
    n = lh - 2
    if n < 0 or n.denominator != 1:
        raise InputError("lambda(h) - 2 must be a nonnegative integer")
    m = 0
    while a1_multiplicity(pd, m, lam) == 0:
        m += 1
    return m


def euler_rhs(pd: PrincipalData, m: int, lam: Vector) -> int:
    """Independent Euler-characteristic evaluation of the same multiplicity.

    Alternating sum over the exterior powers of k/t (t-weights {0}, {2,-2},
    {0}) tensored with the (m+1)-dimensional type (t-weights m, m-2, ..,
    -m), counted against the full nilradical partition function shifted by
    lambda(h).
    """
    if m < 0:
        raise InputError("m must be a nonnegative integer")
    lh = pd.lambda_h(lam)
    full = pd.nbar_multiset
    total = 0
    for w in range(-m, m + 1, 2):
        total += 2 * partition_P(full, w - lh)
        total -= partition_P(full, w + 2 - lh)
        total -= partition_P(full, w - 2 - lh)
    return total


def vanishing_degree(pd: PrincipalData) -> int:
    """Only cohomological degrees 0, 1, 2 can survive: dim k - dim t = 2."""
    return 2


@dataclass(frozen=True)
class KTypeSeries:
    lambda_h: Fraction
    entries: dict
    truncation: int

    def to_json(self) -> dict:
        return {
            "lambda_h": format_rational(self.lambda_h),
            "series": {str(m): mult for m, mult in sorted(self.entries.items())},
            "truncation": self.truncation,
        }


def ktype_series(pd: PrincipalData, lam: Vector, max_m: int) -> KTypeSeries:
    if max_m < 0:
        raise InputError("max_m must be nonnegative")
    entries = {m: a1_multiplicity(pd, m, lam) for m in range(max_m + 1)}
    return KTypeSeries(lambda_h=pd.lambda_h(lam), entries=entries, truncation=max_m)


def find_nonintegral_weight(pd: PrincipalData, target) -> Vector:
    """Deterministically pick a non-integral weight with the given value on h.

    Starts from the multiple of h realizing the target and, if that happens
    to be integral, perturbs along a direction of the root span orthogonal
    to h by small odd-denominator steps.
    """
    rs = pd.rs
    h = pd.h_element
    t = Fraction(target)
    base = vscale(t / dot(h, h), h)
    if not is_integral(rs, base):
        return base
    # directions inside the simple-root span, orthogonal to h
    coeff_rows = [tuple(dot(h, a) for a in rs.simple_roots)]
    sol_basis = []
    for c in nullspace(coeff_rows):
        v = vzero(rs.ambient_dim)
        for ci, ai in zip(c, rs.simple_roots):
            v = vadd(v, vscale(ci, ai))
        sol_basis.append(v)
    for w in sol_basis:
        for den in (3, 5, 7, 11, 13):
            lam = vadd(base, vscale(Fraction(1, den), w))
            if not is_integral(rs, lam):
                return lam
    raise InternalError("could not find a non-integral weight with the requested h-value")
