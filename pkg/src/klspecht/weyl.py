"""Signed permutations realizing the Weyl groups of types A and B.

Elements of type B with ``d`` positive points are centro-symmetric
permutations of ``{-d, ..., d}``, stored by their one-line window
``(w(1), ..., w(d))``.  Type A with ``d`` points is the subgroup with no
sign changes (the symmetric group on ``d`` letters, generators ``1..d-1``).

Composition is ``(u * v)(i) == u(v(i))``: ``v`` is applied first.
"""
from __future__ import annotations

import itertools
import math
import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

DEFAULT_GROUP_CAP = 10_000


class CapExceeded(RuntimeError):
    """A requested enumeration is larger than the configured cap."""


def group_cap() -> int:
    return int(os.environ.get("CAP_GROUP_ORDER", DEFAULT_GROUP_CAP))


@dataclass(frozen=True, order=True)
class WeylType:
    tag: str
    d: int

    def __post_init__(self):
        if self.tag not in ("A", "B"):
            raise ValueError(f"unknown type {self.tag!r}; expected 'A' or 'B'")
        if self.d < 1:
            raise ValueError(f"rank parameter must be >= 1, got {self.d}")

    @property
    def generators(self) -> tuple[int, ...]:
        """The index set of simple generators."""
        if self.tag == "A":
            return tuple(range(1, self.d))
        return tuple(range(0, self.d))

    @property
    def order(self) -> int:
        if self.tag == "A":
            return math.factorial(self.d)
        return 2**self.d * math.factorial(self.d)

    def coxeter_m(self, i: int, j: int) -> int:
        """Order of ``s_i s_j`` read off the Dynkin diagram."""
        if i == j:
            return 1
        if abs(i - j) > 1:
            return 2
        if {i, j} == {0, 1}:
            return 4
        return 3

    def __str__(self) -> str:
        return f"{self.tag}{self.d}"


@dataclass(frozen=True, order=True)
class SignedPerm:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", w)
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a signed permutation window")

    @property
    def d(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, d: int) -> SignedPerm:
        return cls(tuple(range(1, d + 1)))

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        v = self.window[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        if other.d != self.d:
            raise ValueError(f"rank mismatch: {self.d} vs {other.d}")
        return SignedPerm(tuple(self(other(i)) for i in range(1, self.d + 1)))

    def inverse(self) -> SignedPerm:
        inv = [0] * self.d
        for i, v in enumerate(self.window, start=1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPerm(tuple(inv))

    def neg(self) -> int:
        return sum(1 for v in self.window if v < 0)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.d + 1))

    def right_mul_generator(self, i: int) -> SignedPerm:
        """``w * s_i``: swap positions ``i, i+1``; ``s_0`` negates position 1."""
        w = list(self.window)
        if i == 0:
            w[0] = -w[0]
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return SignedPerm(tuple(w))

    def left_mul_generator(self, i: int) -> SignedPerm:
        """``s_i * w``: exchange values ``i, i+1`` (with signs); ``s_0`` flips value 1."""

        def f(v: int) -> int:
            a, s = abs(v), (1 if v > 0 else -1)
            if i == 0:
                return -v if a == 1 else v
            if a == i:
                return s * (i + 1)
            if a == i + 1:
                return s * i
            return v

        return SignedPerm(tuple(f(v) for v in self.window))

    def __str__(self) -> str:
        return "|" + ",".join(str(v) for v in self.window) + "|"

    @classmethod
    def parse(cls, text: str) -> SignedPerm:
        body = text.strip().strip("|").strip()
        return cls(tuple(int(x) for x in body.split(",")))

    def to_json(self) -> list[int]:
        return list(self.window)


def generator(t: WeylType, i: int) -> SignedPerm:
    if i not in t.generators:
        raise ValueError(f"generator index {i} not valid for type {t}")
    return SignedPerm.identity(t.d).right_mul_generator(i)


def product(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    return u * v


def neg(w: SignedPerm) -> int:
    return w.neg()


def inversions(w: SignedPerm) -> int:
    win = w.window
    return sum(1 for a, b in itertools.combinations(win, 2) if a > b)


def length(t: WeylType, w: SignedPerm) -> int:
    """Coxeter length: inversions, plus the sum of ``|w(i)|`` over negative entries in type B."""
    if w.d != t.d:
        raise ValueError(f"rank mismatch: element has d={w.d}, type is {t}")
    if t.tag == "A":
        if w.neg():
            raise ValueError(f"{w} has sign changes; not in type A")
        return inversions(w)
    return inversions(w) + sum(-v for v in w.window if v < 0)


def in_group(t: WeylType, w: SignedPerm) -> bool:
    return w.d == t.d and (t.tag == "B" or w.neg() == 0)


def _raw_elements(t: WeylType) -> Iterator[SignedPerm]:
    for perm in itertools.permutations(range(1, t.d + 1)):
        if t.tag == "A":
            yield SignedPerm(perm)
            continue
        for signs in itertools.product((1, -1), repeat=t.d):
            yield SignedPerm(tuple(s * p for s, p in zip(signs, perm)))


def cayley_distances(t: WeylType) -> dict[SignedPerm, int]:
    """Breadth-first distances from the identity in the Cayley graph on simple generators."""
    e = SignedPerm.identity(t.d)
    dist = {e: 0}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for i in t.generators:
            x = w.right_mul_generator(i)
            if x not in dist:
                dist[x] = dist[w] + 1
                queue.append(x)
    return dist


def _sort_key(t: WeylType, w: SignedPerm):
    return (length(t, w), w.window)


@dataclass(eq=False)
class WeylGroup:
    """Materialized group table: elements, lengths and the Bruhat order."""

    type: WeylType
    elements: list[SignedPerm]
    lengths: dict[SignedPerm, int]
    index: dict[SignedPerm, int] = field(repr=False)
    _below: list[int] | None = field(default=None, repr=False)
    _reflections: list[SignedPerm] | None = field(default=None, repr=False)

    @classmethod
    def build(cls, t: WeylType, cap: int | None = None) -> WeylGroup:
        cap = group_cap() if cap is None else cap
        if t.order > cap:
            raise CapExceeded(f"|W({t})| = {t.order} exceeds cap {cap}")
        elems = sorted(_raw_elements(t), key=lambda w: _sort_key(t, w))
        lengths = {w: length(t, w) for w in elems}
        return cls(t, elems, lengths, {w: k for k, w in enumerate(elems)})

    def __len__(self) -> int:
        return len(self.elements)

    def length(self, w: SignedPerm) -> int:
        return self.lengths[w]

    @property
    def identity(self) -> SignedPerm:
        return self.elements[0]

    @property
    def reflections(self) -> list[SignedPerm]:
        """All conjugates of simple generators."""
        if self._reflections is None:
            gens = [generator(self.type, i) for i in self.type.generators]
            refl = {w * s * w.inverse() for w in self.elements for s in gens}
            self._reflections = sorted(refl, key=lambda r: r.window)
        return self._reflections

    def covers(self, x: SignedPerm) -> list[SignedPerm]:
        """Elements ``y = x t`` with ``t`` a reflection and ``l(y) = l(x) + 1``."""
        lx = self.lengths[x]
        return [y for y in (x * t for t in self.reflections) if self.lengths[y] == lx + 1]

    def _bruhat_table(self) -> list[int]:
        # bitset per element: bit k set iff elements[k] <= element
        if self._below is None:
            below = [0] * len(self.elements)
            lower_covers: list[list[int]] = [[] for _ in self.elements]
            for x in self.elements:
                kx = self.index[x]
                for y in self.covers(x):
                    lower_covers[self.index[y]].append(kx)
            for k in range(len(self.elements)):  # ascending length
                bits = 1 << k
                for j in lower_covers[k]:
                    bits |= below[j]
                below[k] = bits
            self._below = below
        return self._below

    def leq(self, x: SignedPerm, w: SignedPerm) -> bool:
        table = self._bruhat_table()
        return bool(table[self.index[w]] >> self.index[x] & 1)

    def reduced_word(self, w: SignedPerm) -> list[int]:
        """Greedy reduced word ``[i_1, ..., i_k]`` with ``w = s_{i_1} ... s_{i_k}``."""
        word: list[int] = []
        while not w.is_identity():
            lw = self.lengths[w]
            for i in self.type.generators:
                ws = w.right_mul_generator(i)
                if self.lengths[ws] < lw:
                    word.append(i)
                    w = ws
                    break
        return word[::-1]

    def all_reduced_words(self, w: SignedPerm) -> list[tuple[int, ...]]:
        if w.is_identity():
            return [()]
        lw = self.lengths[w]
        out = []
        for i in self.type.generators:
            ws = w.right_mul_generator(i)
            if self.lengths[ws] < lw:
                out.extend(word + (i,) for word in self.all_reduced_words(ws))
        return sorted(out)

    def word_to_element(self, word: Iterable[int]) -> SignedPerm:
        w = self.identity
        for i in word:
            w = w.right_mul_generator(i)
        return w

    def parabolic_subgroup(self, J: Iterable[int]) -> list[SignedPerm]:
        J = sorted(set(J))
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            w = queue.popleft()
            for j in J:
                x = w.right_mul_generator(j)
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        return sorted(seen, key=lambda w: _sort_key(self.type, w))

    def minimal_coset_reps(self, J: Iterable[int]) -> list[SignedPerm]:
        J = _check_subset(self.type, J)
        return [
            w
            for w in self.elements
            if all(self.lengths[w.left_mul_generator(j)] > self.lengths[w] for j in J)
        ]


def _check_subset(t: WeylType, J: Iterable[int]) -> tuple[int, ...]:
    J = tuple(sorted(set(J)))
    bad = [j for j in J if j not in t.generators]
    if bad:
        raise ValueError(f"generator indices {bad} not valid for type {t}")
    return J


@lru_cache(maxsize=None)
def _cached_group(t: WeylType, cap: int) -> WeylGroup:
    return WeylGroup.build(t, cap)


def weyl_group(t: WeylType, cap: int | None = None) -> WeylGroup:
    return _cached_group(t, group_cap() if cap is None else cap)


def enumerate_group(t: WeylType, cap: int | None = None) -> list[SignedPerm]:
    return list(weyl_group(t, cap).elements)


def bruhat_leq(t: WeylType, x: SignedPerm, w: SignedPerm) -> bool:
    if not (in_group(t, x) and in_group(t, w)):
        raise ValueError(f"{x} or {w} not in W({t})")
    return weyl_group(t).leq(x, w)


def minimal_coset_reps(t: WeylType, J: Iterable[int]) -> list[SignedPerm]:
    return weyl_group(t).minimal_coset_reps(J)


def subword_products(t: WeylType, word: Sequence[int]) -> set[SignedPerm]:
    """Every product of a subword of ``word``; the Bruhat ideal below a reduced word."""
    e = SignedPerm.identity(t.d)
    reached = {e}
    for i in word:
        reached |= {x.right_mul_generator(i) for x in reached}
    return reached
