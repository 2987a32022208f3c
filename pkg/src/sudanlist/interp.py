"""Vanishing-polynomial construction by exact linear algebra over GF(p).

The unknown polynomial ``P(x1..xk, y) = sum_j P_j(x) y^j`` with
``deg P_j <= m + (l-j)d`` is parametrized by its coefficients; requiring
``P`` to vanish at every data point gives a homogeneous system whose nonzero
solutions are exactly the admissible ``P``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .field import FieldCtx, FieldElement
from .poly import MultiPoly, monomials_up_to


def count_monomials(m: int, l: int, d: int, k: int = 1) -> int:
    """Number of monomials x^i y^j with ``j <= l`` and ``|i| <= m + (l-j)d`` in k x-variables."""
    if min(m, l, d) < 0 or k < 1:
        raise ValueError(f"invalid parameters m={m} l={l} d={d} k={k}")
    return sum(comb(m + (l - j) * d + k, k) for j in range(l + 1))


@dataclass(frozen=True)
class MonomialBasis:
    entries: tuple[tuple[int, ...], ...]
    m: int
    l: int
    d: int
    k: int

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def weights(self) -> tuple[int, ...]:
        return (1,) * self.k + (self.d,)

    @property
    def wdeg(self) -> int:
        return self.m + self.l * self.d


def monomial_basis(m: int, l: int, d: int, k: int = 1) -> MonomialBasis:
    """Basis ordered by y-degree, then by graded x-order within each y-degree."""
    count_monomials(m, l, d, k)  # validates
    entries = []
    for j in range(l + 1):
        for xs in monomials_up_to(k, m + (l - j) * d):
            entries.append(xs + (j,))
    return MonomialBasis(tuple(entries), m, l, d, k)


@dataclass
class ConstraintMatrix:
    rows: list[list[int]]
    ncols: int
    ctx: FieldCtx

    def __post_init__(self):
        p = self.ctx.p
        self.rows = [[self.ctx.residue(v) % p for v in row] for row in self.rows]
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError(f"row of length {len(row)} in a {self.ncols}-column matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def apply(self, v: Sequence[int]) -> list[int]:
        p = self.ctx.p
        return [sum(a * b for a, b in zip(row, v)) % p for row in self.rows]


def _normalize_point(point, k: int, ctx: FieldCtx) -> tuple[int, ...]:
    xs, y = point
    if not isinstance(xs, (tuple, list)):
        xs = (xs,)
    if len(xs) != k:
        raise ValueError(f"point {point!r} has {len(xs)} x-coordinates, expected {k}")
    return tuple(ctx.residue(a) for a in xs) + (ctx.residue(y),)


def infer_ctx(points, ctx: FieldCtx | None) -> FieldCtx:
    if ctx is not None:
        return ctx
    for xs, y in points:
        for v in (*(xs if isinstance(xs, (tuple, list)) else (xs,)), y):
            if isinstance(v, FieldElement):
                return v.ctx
    raise ValueError("cannot infer the field: pass ctx= or use FieldElement coordinates")


def build_matrix(points, basis: MonomialBasis, ctx: FieldCtx | None = None) -> ConstraintMatrix:
    """Row r holds every basis monomial evaluated at point r."""
    ctx = infer_ctx(points, ctx)
    p = ctx.p
    top = [max((e[i] for e in basis.entries), default=0) for i in range(basis.k + 1)]
    rows = []
    for pt in points:
        coords = _normalize_point(pt, basis.k, ctx)
        powers = []
        for a, t in zip(coords, top):
            pw = [1] * (t + 1)
            for e in range(1, t + 1):
                pw[e] = pw[e - 1] * a % p
            powers.append(pw)
        row = []
        for exps in basis.entries:
            v = 1
            for pw, e in zip(powers, exps):
                v = v * pw[e] % p
            row.append(v)
        rows.append(row)
    return ConstraintMatrix(rows, len(basis), ctx)


def rref(rows: list[list[int]], ncols: int, ctx: FieldCtx) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over ``ctx``; returns (nonzero rows, pivot columns)."""
    p = ctx.p
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        pr = next((i for i in range(r, len(a)) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = ctx.inv_int(a[r][c])
        a[r] = [v * inv % p for v in a[r]]
        pivot_row = a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(v - f * w) % p for v, w in zip(a[i], pivot_row)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace_vector(A: ConstraintMatrix) -> list[int] | None:
    """A nonzero ``v`` with ``A v = 0``, or None if ``A`` has full column rank.

    Deterministic: the first free column is set to 1, all other free columns
    to 0, and pivot variables are read off the reduced echelon form.
    """
    p = A.ctx.p
    red, pivots = rref(A.rows, A.ncols, A.ctx)
    pivot_set = set(pivots)
    free = next((c for c in range(A.ncols) if c not in pivot_set), None)
    if free is None:
        return None
    v = [0] * A.ncols
    v[free] = 1
    for row, c in zip(red, pivots):
        v[c] = -row[free] % p
    return v


def find_vanishing_poly(points, m: int, l: int, d: int, k: int = 1,
                        ctx: FieldCtx | None = None) -> MultiPoly | None:
    """Nonzero P of (1,...,1,d)-weighted degree <= m+ld vanishing at every point.

    ``points`` are ``(x, y)`` pairs where ``x`` is a scalar (k = 1) or a
    length-k vector. Returns None when only the zero polynomial fits.
    """
    ctx = infer_ctx(points, ctx)
    basis = monomial_basis(m, l, d, k)
    A = build_matrix(points, basis, ctx)
    v = nullspace_vector(A)
    if v is None:
        return None
    return MultiPoly(dict(zip(basis.entries, v)), k + 1, ctx)
