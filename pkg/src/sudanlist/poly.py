"""Dense univariate and sparse multivariate polynomials over GF(p).

Coefficients are stored as canonical int residues. Results are normalized
eagerly: trailing zeros are stripped from :class:`UniPoly`, zero terms are
dropped from :class:`MultiPoly`, so the zero test is emptiness.
"""

from __future__ import annotations

import re
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import FieldMismatchError
from .field import FieldCtx, FieldElement

# degree of the zero polynomial; compares below every int
NEG_INF = float("-inf")


def _check_ctx(a, b):
    if a.ctx != b.ctx:
        raise FieldMismatchError(f"{a.ctx} vs {b.ctx}")


class UniPoly:
    """Polynomial in one variable; ``coeffs[i]`` is the coefficient of x^i."""

    __slots__ = ("coeffs", "ctx")

    def __init__(self, coeffs: Iterable = (), ctx: FieldCtx | None = None):
        coeffs = list(coeffs)
        if ctx is None:
            ctx = next((c.ctx for c in coeffs if isinstance(c, FieldElement)), None)
            if ctx is None:
                raise ValueError("field context required")
        cs = [ctx.residue(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)
        self.ctx = ctx

    @classmethod
    def zero(cls, ctx: FieldCtx) -> UniPoly:
        return cls((), ctx)

    @classmethod
    def constant(cls, c, ctx: FieldCtx) -> UniPoly:
        return cls((c,), ctx)

    @classmethod
    def x(cls, ctx: FieldCtx) -> UniPoly:
        return cls((0, 1), ctx)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def coefficients(self) -> list[FieldElement]:
        return [FieldElement(c, self.ctx) for c in self.coeffs]

    def __call__(self, a) -> FieldElement:
        return FieldElement(self.eval_int(self.ctx.residue(a)), self.ctx)

    def eval_int(self, a: int) -> int:
        p = self.ctx.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % p
        return acc

    def eval_many(self, xs) -> np.ndarray:
        """Horner evaluation at an int array of points, vectorized."""
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for c in reversed(self.coeffs):
            acc = (acc * xs + c) % self.ctx.p
        return acc

    def roots(self) -> list[int]:
        """All roots in GF(p), ascending. The zero polynomial has none by convention."""
        if self.degree in (NEG_INF, 0):
            return []
        xs = np.arange(self.ctx.p, dtype=np.int64)
        return [int(r) for r in np.flatnonzero(self.eval_many(xs) == 0)]

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            _check_ctx(self, other)
            return other
        if isinstance(other, (int, FieldElement)):
            return UniPoly((other,), self.ctx)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.ctx.p
        return UniPoly(out, self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.ctx)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.ctx)
        p = self.ctx.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly([c % p for c in out], self.ctx)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly.constant(1, self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        return uni_divmod(self, self._coerce(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self == UniPoly((other,), self.ctx)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.ctx.p))

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)}, {self.ctx!r})"

    def __str__(self):
        return self.to_multi().to_text(names=("x",))

    def to_multi(self) -> MultiPoly:
        return MultiPoly({(i,): c for i, c in enumerate(self.coeffs)}, 1, self.ctx)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def uni_eval(f: UniPoly, a) -> FieldElement:
    return f(a)


def uni_divmod(num: UniPoly, den: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Long division: ``num = q*den + r`` with ``deg r < deg den``."""
    _check_ctx(num, den)
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    p = num.ctx.p
    rem = list(num.coeffs)
    dd = len(den.coeffs) - 1
    lead_inv = num.ctx.inv_int(den.lead())
    quot = [0] * max(len(rem) - dd, 0)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i] * lead_inv % p
        if c == 0:
            continue
        quot[i - dd] = c
        for j, b in enumerate(den.coeffs):
            rem[i - dd + j] = (rem[i - dd + j] - c * b) % p
    return UniPoly(quot, num.ctx), UniPoly(rem[:dd], num.ctx)


_TERM_RE = re.compile(r"^(?:(\d+)\*?)?((?:x\d+(?:\^\d+)?\*?)*)$")
_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


class MultiPoly:
    """Sparse polynomial in ``arity`` variables, stored as ``{exponents: coeff}``.

    By convention the last variable plays the role of ``y`` in the
    interpolation polynomial ``P(x1, ..., xk, y)``.
    """

    __slots__ = ("terms", "arity", "ctx")

    def __init__(self, terms: Mapping[tuple[int, ...], object], arity: int, ctx: FieldCtx):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        p = ctx.p
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise ValueError(f"exponent tuple {exps} has length {len(exps)}, expected {arity}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            v = ctx.residue(c)
            if v:
                clean[exps] = (clean.get(exps, 0) + v) % p
        self.terms = {e: c for e, c in clean.items() if c}
        self.arity = arity
        self.ctx = ctx

    @classmethod
    def zero(cls, arity: int, ctx: FieldCtx) -> MultiPoly:
        return cls({}, arity, ctx)

    @classmethod
    def constant(cls, c, arity: int, ctx: FieldCtx) -> MultiPoly:
        return cls({(0,) * arity: c}, arity, ctx)

    @classmethod
    def variable(cls, i: int, arity: int, ctx: FieldCtx) -> MultiPoly:
        """The ``i``-th variable (0-based) as a polynomial."""
        exps = [0] * arity
        exps[i] = 1
        return cls({tuple(exps): 1}, arity, ctx)

    @classmethod
    def generators(cls, arity: int, ctx: FieldCtx) -> list[MultiPoly]:
        return [cls.variable(i, arity, ctx) for i in range(arity)]

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=NEG_INF)

    def weighted_degree(self, weights: Sequence[int]):
        return weighted_degree(self, weights)

    def degree_in(self, var: int):
        return max((e[var] for e in self.terms), default=NEG_INF)

    def __call__(self, *point) -> FieldElement:
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return multi_eval(self, point)

    def eval_int(self, point: Sequence[int]) -> int:
        p = self.ctx.p
        acc = 0
        for exps, c in self.terms.items():
            term = c
            for a, e in zip(point, exps):
                if e:
                    term = term * pow(a, e, p) % p
            acc += term
        return acc % p

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            _check_ctx(self, other)
            if other.arity != self.arity:
                raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, FieldElement)):
            return MultiPoly.constant(other, self.arity, self.ctx)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out, self.arity, self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.arity, self.ctx)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return MultiPoly(out, self.arity, self.ctx)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(1, self.arity, self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ctx == other.ctx and self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, FieldElement)):
            return self == MultiPoly.constant(other, self.arity, self.ctx)
        return NotImplemented

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.arity, self.ctx.p))

    def y_coefficients(self) -> list[MultiPoly]:
        """Split ``q = sum_j q_j(x) y^j`` on the last variable; returns ``[q_0, ..., q_deg]``."""
        if self.arity < 2:
            raise ValueError("need at least two variables to split off y")
        if self.is_zero():
            return []
        parts: list[dict] = [{} for _ in range(self.degree_in(self.arity - 1) + 1)]
        for e, c in self.terms.items():
            parts[e[-1]][e[:-1]] = c
        return [MultiPoly(t, self.arity - 1, self.ctx) for t in parts]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded order: total degree ascending, earlier variables first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.arity)]
        if self.is_zero():
            return "0"
        out = []
        for exps, c in self.sorted_terms():
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
            if c != 1 or not factors:
                factors.insert(0, str(c))
            out.append("*".join(factors))
        return "+".join(out)

    @classmethod
    def from_text(cls, text: str, arity: int, ctx: FieldCtx) -> MultiPoly:
        """Parse ``c*x1^e1*...*xv^ev`` terms joined by ``+`` (or ``-``)."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ValueError("empty polynomial text")
        s = s.replace("-", "+-")
        terms: dict[tuple[int, ...], int] = {}
        for chunk in s.split("+"):
            if not chunk:
                continue
            sign = 1
            if chunk.startswith("-"):
                sign, chunk = -1, chunk[1:]
            m = _TERM_RE.match(chunk)
            if not m or not chunk:
                raise ValueError(f"cannot parse term {chunk!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            exps = [0] * arity
            for vm in _VAR_RE.finditer(m.group(2)):
                idx = int(vm.group(1)) - 1
                if not 0 <= idx < arity:
                    raise ValueError(f"variable x{idx + 1} out of range for arity {arity}")
                exps[idx] += int(vm.group(2) or 1)
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + sign * coeff
        return cls(terms, arity, ctx)

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r}, arity={self.arity}, {self.ctx!r})"

    def __str__(self):
        return self.to_text()

    def to_unipoly(self) -> UniPoly:
        if self.arity != 1:
            raise ValueError(f"arity {self.arity} polynomial is not univariate")
        deg = self.total_degree()
        if deg == NEG_INF:
            return UniPoly.zero(self.ctx)
        cs = [0] * (deg + 1)
        for (i,), c in self.terms.items():
            cs[i] = c
        return UniPoly(cs, self.ctx)


def weighted_degree(q: MultiPoly, weights: Sequence[int]):
    """Maximum of ``dot(exponents, weights)`` over the monomials of ``q``."""
    if len(weights) != q.arity:
        raise ValueError(f"{len(weights)} weights for arity {q.arity}")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    return max((sum(e * w for e, w in zip(exps, weights)) for exps in q.terms), default=NEG_INF)


def total_degree(q: MultiPoly):
    return q.total_degree()


def multi_eval(q: MultiPoly, point: Sequence) -> FieldElement:
    if len(point) != q.arity:
        raise ValueError(f"point of length {len(point)} for arity {q.arity}")
    return FieldElement(q.eval_int([q.ctx.residue(a) for a in point]), q.ctx)


def as_multi(f, arity: int, ctx: FieldCtx | None = None) -> MultiPoly:
    """Accept a UniPoly (arity 1), an int/FieldElement constant, or a MultiPoly."""
    if isinstance(f, MultiPoly):
        return f
    if isinstance(f, UniPoly):
        if arity != 1:
            raise ValueError(f"univariate polynomial given where arity {arity} expected")
        return f.to_multi()
    if ctx is None:
        raise ValueError("field context required for a constant")
    return MultiPoly.constant(f, arity, ctx)


def substitute_y(q: MultiPoly, f) -> MultiPoly:
    """Exact expansion of ``q(x1, ..., x_{v-1}, f(x1, ..., x_{v-1}))``."""
    if q.arity < 2:
        raise ValueError("substitution needs a polynomial in at least two variables")
    f = as_multi(f, q.arity - 1, q.ctx)
    _check_ctx(q, f)
    if f.arity != q.arity - 1:
        raise ValueError(f"substituting arity-{f.arity} f into arity-{q.arity} q")
    parts = q.y_coefficients()
    result = MultiPoly.zero(f.arity, q.ctx)
    # Horner in y
    for part in reversed(parts):
        result = result * f + part
    return result


def monomials_up_to(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples of total degree <= ``degree``, in graded order."""
    if degree < 0:
        return []
    out = [e for e in product(range(degree + 1), repeat=nvars) if sum(e) <= degree]
    out.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return out
