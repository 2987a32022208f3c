"""Extraction of the factors ``y - f`` of an interpolation polynomial.

Only linear-in-y factors matter for decoding, so instead of a full
factorization into irreducibles we search directly for the polynomials ``f``
with ``P(x, f(x)) == 0``.
"""

from __future__ import annotations

from itertools import product
from math import comb

import numpy as np

from .errors import BudgetExceeded
from .poly import NEG_INF, MultiPoly, UniPoly, as_multi, monomials_up_to, substitute_y

DEFAULT_BUDGET = 1_000_000


def is_y_root(P: MultiPoly, f, d: int) -> bool:
    """True iff ``P(x, f(x))`` is identically zero, i.e. ``(y - f) | P``."""
    if P.is_zero():
        raise ValueError("the zero polynomial has every f as a root")
    f = as_multi(f, P.arity - 1, P.ctx)
    if f.total_degree() > d:
        raise ValueError(f"candidate of degree {f.total_degree()} exceeds bound {d}")
    return substitute_y(P, f).is_zero()


def _strip_x(Q: dict) -> dict:
    s = min(i for i, _ in Q)
    if s == 0:
        return Q
    return {(i - s, j): c for (i, j), c in Q.items()}


def _shift(Q: dict, r: int, p: int) -> dict:
    """Q(x, x*y + r)."""
    out: dict = {}
    rpow = [1]
    top = max(j for _, j in Q)
    for _ in range(top):
        rpow.append(rpow[-1] * r % p)
    for (i, j), c in Q.items():
        for s in range(j + 1):
            v = c * comb(j, s) * rpow[j - s] % p
            if v:
                key = (i + s, s)
                out[key] = (out.get(key, 0) + v) % p
    return {k: v for k, v in out.items() if v}


def _recursive_roots(P: MultiPoly, d: int) -> set[tuple[int, ...]]:
    ctx = P.ctx
    p = ctx.p
    found: set[tuple[int, ...]] = set()

    def walk(Q: dict, prefix: list[int]):
        Q = _strip_x(Q)
        if all(j > 0 for _, j in Q):
            found.add(tuple(prefix) + (0,) * (d + 1 - len(prefix)))
        if len(prefix) == d + 1:
            return
        at_zero = {j: c for (i, j), c in Q.items() if i == 0}
        q0 = UniPoly([at_zero.get(j, 0) for j in range(max(at_zero) + 1)], ctx)
        for r in q0.roots():
            walk(_shift(Q, r, p), prefix + [r])

    walk(dict(P.terms), [])
    return found


def _bruteforce_roots(P: MultiPoly, d: int) -> set[tuple[int, ...]]:
    ctx = P.ctx
    found = set()
    xs = list(range(ctx.p))
    for coeffs in product(range(ctx.p), repeat=d + 1):
        f = UniPoly(coeffs, ctx)
        # cheap necessary condition before the exact test
        if any(P.eval_int((a, f.eval_int(a))) for a in xs):
            continue
        if is_y_root(P, f, d):
            found.add(coeffs)
    return found


def univariate_y_roots(P: MultiPoly, d: int, method: str = "recursive") -> list[UniPoly]:
    """Every ``f`` with ``deg f <= d`` and ``(y - f) | P(x, y)``.

    ``method="recursive"`` peels off one coefficient of ``f`` at a time:
    candidate constant terms are the roots of ``P(0, y)``, and each choice
    ``r`` recurses on ``P(x, x*y + r)`` with powers of ``x`` divided out.
    ``method="bruteforce"`` tries all ``p**(d+1)`` candidates and is kept as
    an oracle. Results are sorted by coefficient vector.
    """
    if P.arity != 2:
        raise ValueError(f"expected a bivariate polynomial, got arity {P.arity}")
    if P.is_zero():
        raise ValueError("the zero polynomial has every f as a root")
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    if method == "recursive":
        found = _recursive_roots(P, d)
    elif method == "bruteforce":
        found = _bruteforce_roots(P, d)
    else:
        raise ValueError(f"unknown method {method!r}")
    roots = [UniPoly(c, P.ctx) for c in sorted(found)]
    assert all(is_y_root(P, f, d) for f in roots)
    return roots


def multivariate_y_roots(P: MultiPoly, d: int, k: int, budget: int = DEFAULT_BUDGET) -> list[MultiPoly]:
    """Every k-variate ``f`` of total degree ``<= d`` with ``P(x, f(x)) == 0``.

    Enumerates all ``p**C(k+d, d)`` candidates, so ``budget`` caps that count.
    Candidates are ordered by their coefficient vector over the graded
    monomial list.
    """
    if P.arity != k + 1:
        raise ValueError(f"expected arity {k + 1}, got {P.arity}")
    if P.is_zero():
        raise ValueError("the zero polynomial has every f as a root")
    ctx = P.ctx
    p = ctx.p
    monos = monomials_up_to(k, d)
    total = p ** len(monos)
    if total > budget:
        raise BudgetExceeded(f"{total} candidates ({p}^{len(monos)}) exceed budget {budget}")
    if P.degree_in(k) == 0:
        return []
    cands = _all_vectors(p, len(monos))
    # necessary condition, vectorized: P(a, f(a)) == 0 at a few probe points
    for a in product(range(min(p, 4)), repeat=k):
        mono_vals = np.array([_mono_eval(a, e, p) for e in monos], dtype=np.int64)
        fa = (cands * mono_vals).sum(axis=1) % p
        at_a = UniPoly([c.eval_int(a) for c in P.y_coefficients()], ctx)
        cands = cands[at_a.eval_many(fa) == 0]
        if not len(cands):
            return []
    roots = []
    for coeffs in cands.tolist():
        f = MultiPoly(dict(zip(monos, coeffs)), k, ctx)
        if substitute_y(P, f).is_zero():
            roots.append(f)
    return roots


def _mono_eval(point, exps, p: int) -> int:
    v = 1
    for a, e in zip(point, exps):
        v = v * pow(a, e, p) % p
    return v


def _all_vectors(p: int, length: int) -> np.ndarray:
    """All of GF(p)^length, lexicographic with the first entry most significant."""
    idx = np.arange(p ** length, dtype=np.int64)
    return np.stack([(idx // p ** (length - 1 - j)) % p for j in range(length)], axis=1)


def y_degree(P: MultiPoly):
    return P.degree_in(P.arity - 1) if not P.is_zero() else NEG_INF
