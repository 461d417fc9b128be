"""The parabolic module M^J (induced from the trivial q^-1 character of H_J).

Standard basis ``M_w`` for ``w`` in the minimal coset representatives
``D_J`` of ``W_J \\ W``.  Generators act on the right::

    M_w H_i = M_{w s_i}                     if w s_i in D_J and longer
            = M_{w s_i} + (q^-1 - q) M_w    if w s_i in D_J and shorter
            = q^-1 M_w                      if w s_i not in D_J

Kazhdan-Lusztig bases come in two flavours (``side``): ``"positive"`` has
off-diagonal coefficients in qZ[q] and is built with the bar-invariant
element ``H_s + q``; ``"negative"`` has them in q^-1 Z[q^-1] and uses
``H_s - q^-1``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .laurent import ONE, Q, QINV, ZERO, LaurentPoly
from .weyl import CapExceeded, SignedPerm, WeylGroup, WeylType, weyl_group

SIDES = ("positive", "negative")
DEFAULT_COSET_CAP = 2_000
# M_w H_i case tags
LONGER, SHORTER, FIXED = "longer", "shorter", "fixed"


class KLError(RuntimeError):
    """The correction algorithm left a coefficient outside the required degree range."""


def coset_cap() -> int:
    return int(os.environ.get("CAP_COSETS", DEFAULT_COSET_CAP))


@dataclass(eq=False)
class ParabolicContext:
    type: WeylType
    J: tuple[int, ...]
    group: WeylGroup = field(repr=False)
    reps: list[SignedPerm] = field(repr=False)
    index: dict[SignedPerm, int] = field(repr=False)
    # action[k][i] = (case, target index)
    action: dict[int, dict[int, tuple[str, int]]] = field(repr=False)
    _bar: list[ModuleVector] | None = field(default=None, repr=False)

    @classmethod
    def build(cls, t: WeylType, J: Iterable[int], cap: int | None = None) -> ParabolicContext:
        group = weyl_group(t)
        reps = group.minimal_coset_reps(J)
        cap = coset_cap() if cap is None else cap
        if len(reps) > cap:
            raise CapExceeded(f"|D_J| = {len(reps)} exceeds cap {cap}")
        index = {w: k for k, w in enumerate(reps)}
        action: dict[int, dict[int, tuple[str, int]]] = {}
        for k, w in enumerate(reps):
            action[k] = {}
            for i in t.generators:
                ws = w.right_mul_generator(i)
                if ws not in index:
                    action[k][i] = (FIXED, k)
                elif group.length(ws) > group.length(w):
                    action[k][i] = (LONGER, index[ws])
                else:
                    action[k][i] = (SHORTER, index[ws])
        return cls(t, tuple(sorted(set(J))), group, reps, index, action)

    def __len__(self) -> int:
        return len(self.reps)

    def length(self, k: int) -> int:
        return self.group.length(self.reps[k])

    def leq(self, a: int, b: int) -> bool:
        """Bruhat order between representatives given by index."""
        return self.group.leq(self.reps[a], self.reps[b])

    def basis(self, w: SignedPerm | int) -> ModuleVector:
        k = w if isinstance(w, int) else self.index[w]
        return ModuleVector(self, {k: ONE})

    def zero(self) -> ModuleVector:
        return ModuleVector(self, {})

    def reduced_word(self, k: int) -> list[int]:
        # every prefix of a reduced word of a minimal representative is again minimal
        return self.group.reduced_word(self.reps[k])


@lru_cache(maxsize=None)
def _cached_context(t: WeylType, J: tuple[int, ...]) -> ParabolicContext:
    return ParabolicContext.build(t, J)


def _within_cap(ctx: ParabolicContext) -> ParabolicContext:
    # cached contexts were built under whatever cap was current then
    cap = coset_cap()
    if len(ctx) > cap:
        raise CapExceeded(f"|D_J| = {len(ctx)} exceeds cap {cap}")
    return ctx


def parabolic_context(t: WeylType, J: Iterable[int]) -> ParabolicContext:
    return _within_cap(_cached_context(t, tuple(sorted(set(J)))))


class ModuleVector:
    """Finitely supported element of M^J, keyed by representative index."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: ParabolicContext, coeffs: Mapping[int, LaurentPoly | int]):
        self.ctx = ctx
        clean = {}
        for k, c in coeffs.items():
            c = LaurentPoly.coerce(c)
            if c:
                clean[k] = c
        self.coeffs: dict[int, LaurentPoly] = dict(sorted(clean.items()))

    def __getitem__(self, w: SignedPerm | int) -> LaurentPoly:
        k = w if isinstance(w, int) else self.ctx.index[w]
        return self.coeffs.get(k, ZERO)

    def items(self) -> Iterator[tuple[int, LaurentPoly]]:
        return iter(self.coeffs.items())

    def _check(self, other: ModuleVector) -> None:
        if other.ctx is not self.ctx:
            raise ValueError("vectors live in different modules")

    def __add__(self, other: ModuleVector) -> ModuleVector:
        self._check(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, ZERO) + c
        return ModuleVector(self.ctx, acc)

    def __neg__(self) -> ModuleVector:
        return ModuleVector(self.ctx, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: ModuleVector) -> ModuleVector:
        return self + (-other)

    def scale(self, f: LaurentPoly | int) -> ModuleVector:
        f = LaurentPoly.coerce(f)
        return ModuleVector(self.ctx, {k: f * c for k, c in self.coeffs.items()})

    __rmul__ = scale

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def eval_at_one(self) -> dict[int, int]:
        return {k: c.eval_at_one() for k, c in self.coeffs.items() if c.eval_at_one()}

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = [f"({c})*M{self.ctx.reps[k]}" for k, c in self.coeffs.items()]
        return " + ".join(terms)


def act_generator(v: ModuleVector, i: int) -> ModuleVector:
    ctx = v.ctx
    if i not in ctx.type.generators:
        raise ValueError(f"generator index {i} not valid for type {ctx.type}")
    acc: dict[int, LaurentPoly] = {}
    for k, c in v.coeffs.items():
        case, target = ctx.action[k][i]
        if case == LONGER:
            acc[target] = acc.get(target, ZERO) + c
        elif case == SHORTER:
            acc[target] = acc.get(target, ZERO) + c
            acc[k] = acc.get(k, ZERO) + c * (QINV - Q)
        else:
            acc[k] = acc.get(k, ZERO) + c * QINV
    return ModuleVector(ctx, acc)


def act_inverse_generator(v: ModuleVector, i: int) -> ModuleVector:
    """``v H_i^-1`` using ``H_i^-1 = H_i - (q^-1 - q)``."""
    return act_generator(v, i) - v.scale(QINV - Q)


def act_word(v: ModuleVector, word: Iterable[int], inverse: bool = False) -> ModuleVector:
    step = act_inverse_generator if inverse else act_generator
    for i in word:
        v = step(v, i)
    return v


def bar_standard(ctx: ParabolicContext, k: int, word: Iterable[int] | None = None) -> ModuleVector:
    """``bar(M_w)`` from a reduced word ``w = s_{i_1}...s_{i_m}``: ``M_e H_{i_1}^-1 ... H_{i_m}^-1``."""
    if word is None:
        return _bar_table(ctx)[k]
    return act_word(ctx.basis(0), word, inverse=True)


def _bar_table(ctx: ParabolicContext) -> list[ModuleVector]:
    if ctx._bar is None:
        table: list[ModuleVector] = []
        for k in range(len(ctx)):  # ascending length: the prefix ws is already done
            if k == 0:
                table.append(ctx.basis(0))
                continue
            word = ctx.reduced_word(k)
            prefix = ctx.index[ctx.group.word_to_element(word[:-1])]
            table.append(act_inverse_generator(table[prefix], word[-1]))
        ctx._bar = table
    return ctx._bar


def bar_vector(v: ModuleVector) -> ModuleVector:
    table = _bar_table(v.ctx)
    out = v.ctx.zero()
    for k, c in v.coeffs.items():
        out = out + table[k].scale(c.bar())
    return out


Matrix = list[list[LaurentPoly]]


@dataclass
class KLTable:
    """``m[x][w]``: coefficient of ``M_x`` in the KL element at ``w``.

    ``p`` has the same layout and is the matrix inverse of ``m``:
    ``p[x][w]`` is the coefficient of the KL element at ``x`` in ``M_w``,
    so ``m @ p == I``.
    """

    ctx: ParabolicContext = field(repr=False)
    side: str
    m: Matrix
    p: Matrix | None = None

    @property
    def size(self) -> int:
        return len(self.m)

    def kl_vector(self, w: int) -> ModuleVector:
        return ModuleVector(self.ctx, {x: self.m[x][w] for x in range(self.size)})

    def p_entry(self, w: int, x: int) -> LaurentPoly:
        """Coefficient of the KL element at ``x`` in ``M_w``."""
        return self.p[x][w]

    def m_at_one(self) -> list[list[int]]:
        return [[f.eval_at_one() for f in row] for row in self.m]

    def p_at_one(self) -> list[list[int]]:
        return [[f.eval_at_one() for f in row] for row in self.p]

    def to_json(self) -> dict:
        return {
            "type": self.ctx.type.tag,
            "d": self.ctx.type.d,
            "J": list(self.ctx.J),
            "side": self.side,
            "reps": [w.to_json() for w in self.ctx.reps],
            "m": [[f.to_json() for f in row] for row in self.m],
            "p": [[f.to_json() for f in row] for row in self.p] if self.p is not None else None,
        }

    def csv_rows(self) -> list[list[str]]:
        rows = [["x", "w", "m", "p"]]
        for x in range(self.size):
            for w in range(self.size):
                pm = self.p[x][w] if self.p is not None else ZERO
                if self.m[x][w] or pm:
                    rows.append([str(self.ctx.reps[x]), str(self.ctx.reps[w]), str(self.m[x][w]), str(pm)])
        return rows


def _local_factor(v: ModuleVector, s: int, side: str) -> ModuleVector:
    hv = act_generator(v, s)
    if side == "positive":
        return hv + v.scale(Q)
    return hv - v.scale(QINV)


def kl_basis(ctx: ParabolicContext, side: str = "positive") -> KLTable:
    """Build the KL basis by ascending length, clearing symmetric parts top-down."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    split = LaurentPoly.split_symmetric if side == "positive" else LaurentPoly.split_symmetric_negative
    n = len(ctx)
    by_length_desc = sorted(range(n), key=lambda k: -ctx.length(k))
    kl: list[ModuleVector] = []
    for w in range(n):
        if w == 0:
            kl.append(ctx.basis(0))
            continue
        word = ctx.reduced_word(w)
        ws = ctx.index[ctx.group.word_to_element(word[:-1])]
        c = _local_factor(kl[ws], word[-1], side)
        for x in by_length_desc:
            if x == w or x not in c.coeffs:
                continue
            gamma, _ = split(c.coeffs[x])
            if gamma:
                c = c - kl[x].scale(gamma)
        _check_kl_element(c, w, side)
        kl.append(c)
    m = [[kl[w][x] for w in range(n)] for x in range(n)]
    return KLTable(ctx, side, m)


def _check_kl_element(c: ModuleVector, w: int, side: str) -> None:
    if c[w] != ONE:
        raise KLError(f"leading coefficient at {c.ctx.reps[w]} is {c[w]}, expected 1")
    for x, f in c.coeffs.items():
        if x == w:
            continue
        lo, hi = f.min_degree(), f.max_degree()
        if (side == "positive" and lo < 1) or (side == "negative" and hi > -1):
            raise KLError(f"coefficient {f} at {c.ctx.reps[x]} not strictly {side}")


def invert_unitriangular(m: Matrix) -> Matrix:
    """Inverse of an upper unitriangular matrix by back-substitution."""
    n = len(m)
    for k in range(n):
        if m[k][k] != ONE or any(m[i][k] for i in range(k + 1, n)):
            raise ValueError("matrix is not upper unitriangular")
    inv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            acc = ZERO
            for k in range(i + 1, j + 1):
                if m[i][k] and inv[k][j]:
                    acc = acc + m[i][k] * inv[k][j]
            inv[i][j] = -acc
    return inv


def p_table(kl: KLTable) -> KLTable:
    return KLTable(kl.ctx, kl.side, kl.m, invert_unitriangular(kl.m))


@lru_cache(maxsize=None)
def _cached_kl(t: WeylType, J: tuple[int, ...], side: str) -> KLTable:
    return p_table(kl_basis(parabolic_context(t, J), side))


def kl_table(t: WeylType, J: Iterable[int], side: str = "positive") -> KLTable:
    """KL table with both ``m`` and ``p`` filled; cached per ``(type, J, side)``."""
    table = _cached_kl(t, tuple(sorted(set(J))), side)
    _within_cap(table.ctx)
    return table


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        for j in range(k):
            if not a[i][j]:
                continue
            for l in range(m):
                if b[j][l]:
                    out[i][l] = out[i][l] + a[i][j] * b[j][l]
    return out


def is_identity(a: Matrix) -> bool:
    return all(a[i][j] == (ONE if i == j else ZERO) for i in range(len(a)) for j in range(len(a)))
