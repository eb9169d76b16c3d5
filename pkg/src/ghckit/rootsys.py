"""Finite root systems in exact epsilon-coordinates.

Classical series are realized in the usual coordinate ambients (A_n inside
an (n+1)-dimensional space with sum-zero roots, C_n with simple roots
e1-e2, ..., e_{n-1}-e_n, 2e_n); exceptional types use the standard
coordinate simple roots and everything is generated by reflection closure.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import InputError, InternalError
from .exact import (
    Vector,
    dot,
    format_vector,
    solve_linear,
    vadd,
    vneg,
    vscale,
    vsub,
    vzero,
)

DEFAULT_MAX_RANK = 8

# classical root counts, used as a construction-time sanity check
_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": {6: 72, 7: 126, 8: 240},
    "F": {4: 48},
    "G": {2: 12},
}

_F = Fraction
_H = Fraction(1, 2)


def _e(i: int, dim: int) -> Vector:
    return tuple(_F(1) if j == i else _F(0) for j in range(dim))


def max_rank() -> int:
    env = os.environ.get("GHC_MAX_RANK")
    if env is not None:
        try:
            return int(env)
        except ValueError as e:
            raise InputError(f"GHC_MAX_RANK must be an integer, got {env!r}") from e
    return DEFAULT_MAX_RANK


def _simple_roots(series: str, rank: int) -> tuple[list[Vector], int]:
    n = rank
    if series == "A":
        dim = n + 1
        return [vsub(_e(i, dim), _e(i + 1, dim)) for i in range(n)], dim
    if series == "B":
        sr = [vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)]
        sr.append(_e(n - 1, n))
        return sr, n
    if series == "C":
        sr = [vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)]
        sr.append(vscale(2, _e(n - 1, n)))
        return sr, n
    if series == "D":
        sr = [vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)]
        sr.append(vadd(_e(n - 2, n), _e(n - 1, n)))
        return sr, n
    if series == "G":
        return [(_F(1), _F(-1), _F(0)), (_F(-2), _F(1), _F(1))], 3
    if series == "F":
        return [
            (_F(0), _F(1), _F(-1), _F(0)),
            (_F(0), _F(0), _F(1), _F(-1)),
            (_F(0), _F(0), _F(0), _F(1)),
            (_H, -_H, -_H, -_H),
        ], 4
    if series == "E":
        a1 = (_H, -_H, -_H, -_H, -_H, -_H, -_H, _H)
        a2 = vadd(_e(0, 8), _e(1, 8))
        chain = [vsub(_e(i + 1, 8), _e(i, 8)) for i in range(6)]  # e_{i+2}-e_{i+1}
        return ([a1, a2] + chain)[:rank], 8
    raise InputError(f"unknown series {series!r}")


def _validate(series: str, rank: int) -> None:
    ok = (
        (series == "A" and rank >= 1)
        or (series == "B" and rank >= 1)
        or (series == "C" and rank >= 1)
        or (series == "D" and rank >= 2)
        or (series == "E" and rank in (6, 7, 8))
        or (series == "F" and rank == 4)
        or (series == "G" and rank == 2)
    )
    if not ok:
        raise InputError(f"invalid simple type ({series},{rank})")
    cap = max_rank()
    if rank > cap:
        raise InputError(f"rank {rank} exceeds the configured bound {cap}")


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    all_roots: tuple[Vector, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    fundamental_weights: tuple[Vector, ...]
    _index: dict = field(repr=False, hash=False, compare=False, default_factory=dict)
    _simple_coords: dict = field(repr=False, hash=False, compare=False, default_factory=dict)

    # -- pairings ---------------------------------------------------------

    def form(self, a: Vector, b: Vector) -> Fraction:
        return dot(a, b)

    def pairing(self, lam: Vector, alpha: Vector) -> Fraction:
        """<lam, alpha^vee> = 2(lam,alpha)/(alpha,alpha)."""
        return 2 * dot(lam, alpha) / dot(alpha, alpha)

    def coroot(self, alpha: Vector) -> Vector:
        return vscale(_F(2) / dot(alpha, alpha), alpha)

    # -- root bookkeeping -------------------------------------------------

    def root_index(self, alpha: Vector) -> int:
        try:
            return self._index[alpha]
        except KeyError:
            raise InputError(f"{alpha} is not a root of {self.series}{self.rank}") from None

    def is_root(self, alpha: Vector) -> bool:
        return alpha in self._index

    def roots_from_indices(self, indices) -> list[Vector]:
        out = []
        for i in indices:
            if not 0 <= int(i) < len(self.all_roots):
                raise InputError(f"root index {i} out of range")
            out.append(self.all_roots[int(i)])
        return out

    def simple_coordinates(self, alpha: Vector) -> tuple[Fraction, ...]:
        """Coefficients of alpha over the simple roots."""
        try:
            return self._simple_coords[alpha]
        except KeyError:
            raise InputError(f"{alpha} is not a root of {self.series}{self.rank}") from None

    def height(self, alpha: Vector) -> int:
        s = sum(self.simple_coordinates(alpha))
        if s.denominator != 1:
            raise InternalError(f"non-integral height for {alpha}")
        return int(s)

    def rho(self) -> Vector:
        half = reduce(vadd, self.positive_roots, vzero(self.ambient_dim))
        return vscale(_H, half)

    def to_json(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "roots": [format_vector(r) for r in self.all_roots],
            "simple_roots": [format_vector(r) for r in self.simple_roots],
            "positive_roots": [format_vector(r) for r in self.positive_roots],
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
        }


def build(series: str, rank: int) -> RootSystem:
    """Construct the root system by reflection closure from the simple roots.

    Root ordering is canonical: positive roots sorted by (height, coords),
    then the negatives in the matching order; this ordering backs the root
    indices used on all JSON surfaces.
    """
    _validate(series, rank)
    return _construct(series, rank)


@lru_cache(maxsize=None)
def _construct(series: str, rank: int) -> RootSystem:
    simple, dim = _simple_roots(series, rank)
    norms = [dot(a, a) for a in simple]
    # reflection closure, tracking simple-root coordinates as we go:
    # s_a(b) = b - <b, a^vee> a only changes the coordinate on a
    coords: dict[Vector, tuple[Fraction, ...]] = {
        a: tuple(_F(1) if j == i else _F(0) for j in range(rank))
        for i, a in enumerate(simple)
    }
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            cb = coords[beta]
            for i, alpha in enumerate(simple):
                p = 2 * dot(beta, alpha) / norms[i]
                if p == 0:
                    continue
                refl = vsub(beta, vscale(p, alpha))
                if refl not in coords:
                    coords[refl] = tuple(
                        c - p if j == i else c for j, c in enumerate(cb)
                    )
                    nxt.append(refl)
        frontier = nxt

    positive = [r for r in coords if all(c >= 0 for c in coords[r])]
    positive.sort(key=lambda r: (sum(coords[r]), r))
    all_roots = tuple(positive) + tuple(vneg(r) for r in positive)

    expected = _COUNTS[series]
    count = expected(rank) if callable(expected) else expected[rank]
    if len(all_roots) != count:
        raise InternalError(
            f"{series}{rank}: generated {len(all_roots)} roots, expected {count}"
        )

    cartan = tuple(
        tuple(int(2 * dot(a, b) / dot(b, b)) for b in simple) for a in simple
    )
    # fundamental weights: <w_i, a_j^vee> = delta_ij, within the simple span
    fw = []
    crows = [[_F(cartan[i][j]) for i in range(rank)] for j in range(rank)]
    for i in range(rank):
        rhs = [_F(1) if j == i else _F(0) for j in range(rank)]
        c = solve_linear(crows, rhs)
        assert c is not None
        w = vzero(dim)
        for cj, aj in zip(c, simple):
            w = vadd(w, vscale(cj, aj))
        fw.append(w)

    rs = RootSystem(
        series=series,
        rank=rank,
        ambient_dim=dim,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        all_roots=all_roots,
        cartan_matrix=cartan,
        fundamental_weights=tuple(fw),
        _index={r: i for i, r in enumerate(all_roots)},
        _simple_coords=coords | {vneg(r): tuple(-c for c in coords[r]) for r in coords},
    )
    return rs


# ---------------------------------------------------------------------------
# weight predicates


def is_integral(rs: RootSystem, lam: Vector) -> bool:
    return all(rs.pairing(lam, a).denominator == 1 for a in rs.simple_roots)


def is_dominant(rs: RootSystem, lam: Vector) -> bool:
    return all(rs.pairing(lam, a) >= 0 for a in rs.simple_roots)


def is_regular_integral(rs: RootSystem, lam: Vector) -> bool:
    """True iff <lam+rho, alpha^vee> is a nonzero integer for every positive root."""
    shifted = vadd(lam, rs.rho())
    for a in rs.positive_roots:
        p = rs.pairing(shifted, a)
        if p == 0 or p.denominator != 1:
            return False
    return True


def weyl_dim(rs: RootSystem, lam: Vector) -> int:
    """Dimension of the irreducible module with highest weight lam.

    Half-integer epsilon-coordinates are fine as long as every coroot
    pairing is a nonnegative integer.
    """
    if len(lam) != rs.ambient_dim:
        raise InputError("weight dimension does not match the ambient space")
    for a in rs.simple_roots:
        p = rs.pairing(lam, a)
        if p < 0 or p.denominator != 1:
            raise InputError(f"weight is not dominant integral: pairing {p} on {a}")
    rho = rs.rho()
    num = _F(1)
    for a in rs.positive_roots:
        num *= dot(vadd(lam, rho), a) / dot(rho, a)
    if num.denominator != 1 or num <= 0:
        raise InternalError(f"Weyl product gave a non-positive-integer value {num}")
    return int(num)


def height_distribution(rs: RootSystem) -> dict[int, int]:
    return dict(sorted(Counter(rs.height(a) for a in rs.positive_roots).items()))
