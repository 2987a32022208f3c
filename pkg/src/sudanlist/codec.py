"""Full-length Reed-Solomon codes over GF(p) and a symbol-substitution channel."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, ParameterError
from .field import FieldCtx
from .poly import UniPoly
from .decoder import choose_parameters, list_decode
from .rootfind import DEFAULT_BUDGET


@dataclass(frozen=True)
class Codeword:
    symbols: tuple[int, ...]
    ctx: FieldCtx

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.ctx.residue(s) for s in self.symbols))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def to_text(self) -> str:
        return ",".join(map(str, self.symbols))

    @classmethod
    def from_text(cls, text: str, ctx: FieldCtx) -> Codeword:
        return cls(tuple(int(s) for s in text.split(",") if s.strip()), ctx)


@dataclass(frozen=True)
class RSCode:
    """Evaluations of all polynomials of degree <= d at every element of GF(p).

    ``order="generator"`` evaluates at ``0, w, w^2, ..., w^(p-1) = 1`` for the
    smallest generator ``w``; ``order="natural"`` at ``0, 1, ..., p-1``.
    """

    ctx: FieldCtx
    d: int
    order: str = "generator"
    eval_points: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        p = self.ctx.p
        if not 0 <= self.d < p:
            raise ValueError(f"degree bound {self.d} must lie in [0, {p - 1}]")
        if self.order == "natural":
            pts = tuple(range(p))
        elif self.order == "generator":
            w = self.ctx.generator.value
            pts = (0,) + tuple(pow(w, i, p) for i in range(1, p))
        else:
            raise ValueError(f"unknown evaluation order {self.order!r}")
        object.__setattr__(self, "eval_points", pts)

    @property
    def n(self) -> int:
        return self.ctx.p

    @property
    def k(self) -> int:
        return self.d + 1

    @property
    def delta(self) -> int:
        return self.n - self.d

    @property
    def generator(self) -> int:
        return self.ctx.generator.value

    def descriptor(self) -> str:
        return json.dumps({"p": self.ctx.p, "d": self.d, "generator": self.generator})

    def message(self, coeffs) -> UniPoly:
        return UniPoly(coeffs, self.ctx)


def hamming_distance(x: Sequence, y: Sequence) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def tau_capability(code: RSCode) -> int:
    """Largest tau with ``2*tau + 1 <= n - d``."""
    return max((code.delta - 1) // 2, 0)


def encode(code: RSCode, msg: UniPoly) -> Codeword:
    if msg.ctx != code.ctx:
        raise ValueError(f"message over {msg.ctx}, code over {code.ctx}")
    if msg.degree > code.d:
        raise ValueError(f"message degree {msg.degree} exceeds d={code.d}")
    return Codeword(tuple(msg.eval_int(a) for a in code.eval_points), code.ctx)


def corrupt(cw: Codeword, e: int, seed=None) -> tuple[Codeword, frozenset[int]]:
    """Replace ``e`` distinct random positions by random *different* symbols."""
    n = len(cw)
    if not 0 <= e <= n:
        raise ValueError(f"cannot corrupt {e} of {n} symbols")
    p = cw.ctx.p
    rng = random.Random(seed)
    positions = rng.sample(range(n), e)
    out = list(cw.symbols)
    for i in positions:
        out[i] = (out[i] + rng.randrange(1, p)) % p
    return Codeword(tuple(out), cw.ctx), frozenset(positions)


def _all_messages(p: int, d: int) -> np.ndarray:
    """Every coefficient vector (c0, ..., cd), lexicographic with c0 most significant."""
    idx = np.arange(p ** (d + 1), dtype=np.int64)
    cols = [(idx // p ** (d - j)) % p for j in range(d + 1)]
    return np.stack(cols, axis=1)


def ml_decode_bruteforce(code: RSCode, received: Codeword, budget: int = DEFAULT_BUDGET) -> Codeword:
    """Nearest codeword by exhaustive scan; ties go to the lexicographically smallest message."""
    p, d = code.ctx.p, code.d
    if len(received) != code.n:
        raise ValueError(f"received word of length {len(received)}, code length {code.n}")
    if p ** (d + 1) > budget:
        raise BudgetExceeded(f"{p ** (d + 1)} codewords exceed budget {budget}")
    msgs = _all_messages(p, d)
    xs = np.asarray(code.eval_points, dtype=np.int64)
    vals = np.zeros((len(msgs), len(xs)), dtype=np.int64)
    for j in range(d, -1, -1):
        vals = (vals * xs + msgs[:, j:j + 1]) % p
    dist = (vals != np.asarray(received.symbols, dtype=np.int64)).sum(axis=1)
    best = int(np.argmin(dist))
    return Codeword(tuple(int(v) for v in vals[best]), code.ctx)


def max_list_radius(code: RSCode) -> int:
    """Largest tau for which list decoding is guaranteed complete."""
    return code.n - choose_parameters(code.n, code.d).t


def list_decode_code(code: RSCode, received: Codeword, tau: int) -> list[Codeword]:
    """All codewords within Hamming distance ``tau`` of ``received``."""
    if len(received) != code.n:
        raise ValueError(f"received word of length {len(received)}, code length {code.n}")
    if tau < 0:
        raise ParameterError("tau must be nonnegative")
    if code.d < 1:
        raise ParameterError("list decoding needs d >= 1")
    limit = max_list_radius(code)
    if tau > limit:
        raise ParameterError(f"tau={tau} exceeds the largest admissible radius {limit}")
    points = list(zip(code.eval_points, received.symbols))
    out = list_decode(points, code.d, code.n - tau, code.ctx)
    return [encode(code, c.poly) for c in out.candidates]
