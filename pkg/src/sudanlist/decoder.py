"""Polynomial reconstruction from noisy data, plane and grid versions.

:func:`list_decode` finds every ``f`` with ``deg f <= d`` agreeing with at
least ``t`` of the points ``(x_i, y_i)``. :func:`grid_reconstruct` does the
same for a table ``g: H^k -> F`` and k-variate ``f`` of total degree ``<= d``.
Both interpolate a nonzero ``P`` of weighted degree ``m + l*d`` through the
data and then read the answers off the factors ``y - f`` of ``P``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import isqrt
from typing import Sequence

from .errors import GridInfeasible, InterpolationFailure, ParameterError
from .field import FieldCtx, FieldElement
from .interp import count_monomials, find_vanishing_poly, infer_ctx
from .poly import MultiPoly, UniPoly
from .rootfind import DEFAULT_BUDGET, multivariate_y_roots, univariate_y_roots


@dataclass(frozen=True)
class DecoderParams:
    n: int
    d: int
    t: int
    m: int
    l: int
    k: int = 1

    @property
    def wdeg(self) -> int:
        return self.m + self.l * self.d

    @property
    def eta(self) -> int:
        return count_monomials(self.m, self.l, self.d, self.k)


@dataclass(frozen=True)
class Candidate:
    poly: UniPoly | MultiPoly
    agreements: int

    def to_json(self) -> dict:
        if isinstance(self.poly, UniPoly):
            return {"poly": self.poly.to_json(), "agreements": self.agreements}
        return {"poly": self.poly.to_text(), "agreements": self.agreements}


@dataclass
class DecodeOutput:
    candidates: list[Candidate]
    params: DecoderParams
    interpolant: MultiPoly | None = field(default=None, repr=False)

    def polys(self) -> list:
        return [c.poly for c in self.candidates]

    def __len__(self):
        return len(self.candidates)

    def __iter__(self):
        return iter(self.candidates)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.candidates]


def _ceil_sqrt_ratio(a: int, b: int) -> int:
    """Exact ``ceil(sqrt(a / b))`` for positive ints."""
    s = isqrt(a // b)
    while s * s * b < a:
        s += 1
    while s > 0 and (s - 1) * (s - 1) * b >= a:
        s -= 1
    return s


def choose_parameters(n: int, d: int) -> DecoderParams:
    """Weighted-degree split (m, l) and the smallest threshold it supports.

    ``l = ceil(sqrt(2(n+1)/d)) - 1`` and ``m = floor(d/2) - 1`` (clamped at
    0), with ``m`` raised until the monomial count exceeds ``n``. The
    returned ``t`` is ``m + l*d + 1``.
    """
    if n < 1 or d < 1:
        raise ParameterError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    l = _ceil_sqrt_ratio(2 * (n + 1), d) - 1
    m = max(0, d // 2 - 1)
    while count_monomials(m, l, d, 1) < n + 1:
        m += 1
    return DecoderParams(n=n, d=d, t=m + l * d + 1, m=m, l=l)


def agreement(f: UniPoly, points: Sequence[tuple[int, int]]) -> int:
    return sum(f.eval_int(x) == y for x, y in points)


def _sort_key(f: UniPoly, d: int):
    return f.padded(d + 1)


def list_decode(points, d: int, t: int, ctx: FieldCtx | None = None) -> DecodeOutput:
    """All ``f`` with ``deg f <= d`` and ``#{i : f(x_i) = y_i} >= t``.

    Raises ParameterError if ``t`` is below the threshold returned by
    :func:`choose_parameters`, since completeness is not guaranteed there.
    """
    ctx = infer_ctx(points, ctx)
    pts = [(ctx.residue(x), ctx.residue(y)) for x, y in points]
    n = len(pts)
    base = choose_parameters(max(n, 1), d)
    if t < base.t:
        raise ParameterError(f"t={t} is below the minimum admissible threshold t_min={base.t} "
                             f"for n={n}, d={d}")
    params = DecoderParams(n=n, d=d, t=t, m=base.m, l=base.l)
    P = find_vanishing_poly(pts, base.m, base.l, d, 1, ctx)
    if P is None:
        raise InterpolationFailure(f"trivial nullspace with eta={params.eta} > n={n}")
    cands = []
    for f in univariate_y_roots(P, d):
        a = agreement(f, pts)
        if a >= t:
            cands.append(Candidate(f, a))
    cands.sort(key=lambda c: _sort_key(c.poly, d))
    return DecodeOutput(cands, params, P)


@dataclass(frozen=True)
class GridInstance:
    """A table ``g`` on ``H^k`` (row-major over ``itertools.product(H, repeat=k)``)."""

    ctx: FieldCtx
    H: tuple[int, ...]
    k: int
    g: tuple[int, ...]
    d: int
    t: int

    def __post_init__(self):
        H = tuple(self.ctx.residue(h) for h in self.H)
        if len(set(H)) != len(H):
            raise ValueError(f"H has duplicate elements: {H}")
        if not H:
            raise ValueError("H must be nonempty")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        g = tuple(self.ctx.residue(v) for v in self.g)
        if len(g) != len(H) ** self.k:
            raise ValueError(f"table has {len(g)} entries, expected h^k = {len(H) ** self.k}")
        if self.d < 0:
            raise ValueError("degree bound must be nonnegative")
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "g", g)

    @classmethod
    def from_function(cls, ctx, H, k, func, d, t) -> GridInstance:
        H = tuple(ctx.residue(h) for h in H)
        g = [ctx.residue(func(pt)) for pt in product(H, repeat=k)]
        return cls(ctx, H, k, tuple(g), d, t)

    @property
    def h(self) -> int:
        return len(self.H)

    def grid(self) -> list[tuple[int, ...]]:
        return list(product(self.H, repeat=self.k))

    def points(self) -> list[tuple[tuple[int, ...], int]]:
        return list(zip(self.grid(), self.g))

    def agreement(self, f: MultiPoly) -> int:
        return sum(f.eval_int(x) == y for x, y in self.points())


def grid_feasibility(inst: GridInstance) -> tuple[int, int] | None:
    """(m, l) minimizing ``m + l*d`` with more monomials than grid points and
    ``t > (m + l*d) * h**(k-1)``; ties go to the smaller ``m``. None if no
    such pair exists with ``m, l <= t``.
    """
    h, k, d, t = inst.h, inst.k, inst.d, inst.t
    size = h ** k
    scale = h ** (k - 1)
    best = None
    for m in range(t + 1):
        for l in range(t + 1):
            w = m + l * d
            if w * scale >= t:
                break
            if count_monomials(m, l, d, k) > size:
                if best is None or (w, m) < (best[0], best[1]):
                    best = (w, m, l)
                break
    return None if best is None else (best[1], best[2])


def grid_reconstruct(inst: GridInstance, budget: int = DEFAULT_BUDGET) -> DecodeOutput:
    """All k-variate ``f`` of total degree ``<= d`` agreeing with ``g`` on ``>= t`` grid points."""
    ml = grid_feasibility(inst)
    h, k = inst.h, inst.k
    if ml is None:
        raise GridInfeasible(
            f"no (m, l) with count_monomials(m, l, d={inst.d}, k={k}) > h^k = {h ** k} "
            f"and (m + l*d) * h^(k-1) < t = {inst.t}")
    m, l = ml
    params = DecoderParams(n=h ** k, d=inst.d, t=inst.t, m=m, l=l, k=k)
    P = find_vanishing_poly(inst.points(), m, l, inst.d, k, inst.ctx)
    if P is None:
        raise InterpolationFailure(f"trivial nullspace with eta={params.eta} > n={params.n}")
    cands = []
    for f in multivariate_y_roots(P, inst.d, k, budget=budget):
        a = inst.agreement(f)
        if a >= inst.t:
            cands.append(Candidate(f, a))
    return DecodeOutput(cands, params, P)


def schwartz_zippel_test(p: MultiPoly, S: Sequence, trials: int, seed=None) -> bool:
    """Randomized zero test: False once a sampled point of ``S^arity`` is nonzero.

    True means ``p`` vanished at ``trials`` random points; for nonzero ``p``
    that happens with probability at most ``(total_degree/|S|)**trials``.
    """
    if not S:
        raise ValueError("sample set S must be nonempty")
    if trials < 1:
        raise ValueError("trials must be positive")
    pool = [p.ctx.residue(s) for s in S]
    rng = random.Random(seed)
    for _ in range(trials):
        point = [rng.choice(pool) for _ in range(p.arity)]
        if p.eval_int(point):
            return False
    return True
