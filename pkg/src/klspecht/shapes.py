"""Compositions, Young diagrams, tableaux and tabloids of types A and B.

A type B composition is stored in full, ``(l_{-r}, ..., l_0, ..., l_r)``,
with ``l_0`` odd and ``l_{-i} == l_i``.  Its diagram has a centred middle
row of width ``l_0`` (columns ``-l_0//2 .. l_0//2``), rows ``i >= 1`` with
columns ``0 .. l_i - 1``, and the 180-degree rotated copies of those.  A
type B tableau fills the ``2d+1`` cells with ``-d..d`` so that the center
holds 0 and ``T(-c) == -T(c)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .weyl import SignedPerm, WeylType, weyl_group

Cell = tuple[int, int]
# the four plain readings: row order, with or without inverting the reading word
READING_VARIANTS = ("inverse-top", "inverse-bottom", "top", "bottom")
# "opposite-*": the inverse reading of the tabloid whose letters are taken in
# opposite order (i -> d+1-i in type A, i -> -i in type B); on D_J this is
# the Bruhat-order-reversing involution x -> w_{0,J} x w_0
MAP_VARIANTS = READING_VARIANTS + ("opposite-top", "opposite-bottom")
REFERENCE_VARIANT = "inverse-top"


@dataclass(frozen=True, order=True)
class Composition:
    kind: str
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.kind not in ("A", "B"):
            raise ValueError(f"unknown type {self.kind!r}")
        if not parts or min(parts) < 1:
            raise ValueError(f"parts must be positive, got {parts}")
        if self.kind == "B":
            if len(parts) % 2 == 0:
                raise ValueError(f"type B compositions have an odd number of parts, got {parts}")
            if parts != parts[::-1]:
                raise ValueError(f"type B composition {parts} is not symmetric")
            if self.center % 2 == 0:
                raise ValueError(f"middle part of {parts} must be odd")

    @classmethod
    def from_half(cls, center: int, half: Iterable[int]) -> Composition:
        """Type B composition from the middle part and the parts ``l_1, ..., l_r``."""
        half = tuple(half)
        return cls("B", half[::-1] + (center,) + half)

    @property
    def center(self) -> int:
        return self.parts[len(self.parts) // 2]

    @property
    def half(self) -> tuple[int, ...]:
        """``(l_1, ..., l_r)`` for type B; all parts for type A."""
        if self.kind == "A":
            return self.parts
        return self.parts[len(self.parts) // 2 + 1 :]

    @property
    def d(self) -> int:
        if self.kind == "A":
            return sum(self.parts)
        return (sum(self.parts) - 1) // 2

    @property
    def type(self) -> WeylType:
        return WeylType(self.kind, self.d)

    @property
    def is_partition(self) -> bool:
        h = self.half
        return all(a >= b for a, b in zip(h, h[1:]))

    @cached_property
    def rows(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """``(row index, column coordinates)`` for each row, top to bottom."""
        if self.kind == "A":
            return tuple((i, tuple(range(1, p + 1))) for i, p in enumerate(self.parts, start=1))
        h = self.center // 2
        r = len(self.half)
        out = []
        for i in range(r, 0, -1):
            out.append((-i, tuple(range(-(self.half[i - 1] - 1), 1))))
        out.append((0, tuple(range(-h, h + 1))))
        for i in range(1, r + 1):
            out.append((i, tuple(range(0, self.half[i - 1]))))
        return tuple(out)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple((i, j) for i, cols in self.rows for j in cols)

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.parts))})"


def composition_to_J(c: Composition) -> tuple[int, ...]:
    """Generators of the parabolic (Young) subgroup attached to ``c``."""
    t = c.type
    if c.kind == "A":
        removed = set(itertools.accumulate(c.parts[:-1]))
    else:
        removed = set(itertools.accumulate(c.half[:-1], initial=c.center // 2)) if c.half else set()
    return tuple(i for i in t.generators if i not in removed)


def young_subgroup_label(c: Composition) -> str:
    factors = []
    if c.kind == "B":
        h = c.center // 2
        if h == 1:
            factors.append("S2")
        elif h > 1:
            factors.append(f"B{h}")
    factors += [f"S{p}" for p in c.half if p > 1]
    return " x ".join(factors) or "e"


def _compositions_A(n: int, d: int) -> Iterator[tuple[int, ...]]:
    # stars and bars: choose n-1 cut points in 1..d-1
    for cuts in itertools.combinations(range(1, d), n - 1):
        bounds = (0,) + cuts + (d,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def compositions(kind: str, n: int, d: int) -> list[Composition]:
    """All compositions with ``n`` parts.

    Type B with even ``n = 2r`` follows the convention that these are the
    ``(2r+1)``-part compositions with middle part 1.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    if kind == "A":
        return [Composition("A", p) for p in _compositions_A(n, d)]
    r = n // 2
    out = []
    for center in range(1, 2 * d + 2, 2):
        if n % 2 == 0 and center != 1:
            continue
        rest = d - center // 2
        if r == 0:
            if rest == 0:
                out.append(Composition.from_half(center, ()))
            continue
        if rest >= r:
            out.extend(Composition.from_half(center, h) for h in _compositions_A(r, rest))
    return sorted(out)


def all_compositions(kind: str, d: int) -> list[Composition]:
    """Every composition of ``d``; type B runs over the odd part counts only."""
    ns = range(1, d + 1) if kind == "A" else range(1, 2 * d + 2, 2)
    return [c for n in ns for c in compositions(kind, n, d)]


def partitions(kind: str, d: int) -> list[Composition]:
    return [c for c in all_compositions(kind, d) if c.is_partition]


@dataclass(frozen=True, order=True)
class Tableau:
    shape: Composition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = self.shape
        if [len(r) for r in rows] != [len(cols) for _, cols in shape.rows]:
            raise ValueError(f"rows {rows} do not fit shape {shape}")
        letters = sorted(x for row in rows for x in row)
        if shape.kind == "A":
            if letters != list(range(1, shape.d + 1)):
                raise ValueError(f"{rows} is not a bijection onto 1..{shape.d}")
        else:
            if letters != list(range(-shape.d, shape.d + 1)):
                raise ValueError(f"{rows} is not a bijection onto -{shape.d}..{shape.d}")
            filling = self.filling
            if any(filling[(-i, -j)] != -x for (i, j), x in filling.items()):
                raise ValueError(f"{rows} is not centro-symmetric")

    @classmethod
    def from_filling(cls, shape: Composition, filling: dict[Cell, int]) -> Tableau:
        return cls(shape, tuple(tuple(filling[(i, j)] for j in cols) for i, cols in shape.rows))

    @classmethod
    def from_half(cls, shape: Composition, middle: Iterable[int], half_rows: Iterable[Iterable[int]]) -> Tableau:
        """Type B tableau from the positive side of the middle row and rows ``1..r``."""
        filling: dict[Cell, int] = {(0, 0): 0}
        for j, x in enumerate(middle, start=1):
            filling[(0, j)] = x
            filling[(0, -j)] = -x
        for i, row in enumerate(half_rows, start=1):
            for j, x in enumerate(row):
                filling[(i, j)] = x
                filling[(-i, -j)] = -x
        return cls.from_filling(shape, filling)

    @cached_property
    def filling(self) -> dict[Cell, int]:
        return {
            (i, j): x for (i, cols), row in zip(self.shape.rows, self.rows) for j, x in zip(cols, row)
        }

    @cached_property
    def position(self) -> dict[int, Cell]:
        return {x: c for c, x in self.filling.items()}

    def columns(self) -> dict[int, list[int]]:
        """Column coordinate -> letters, read with increasing row coordinate."""
        cols: dict[int, list[tuple[int, int]]] = {}
        for (i, j), x in self.filling.items():
            cols.setdefault(j, []).append((i, x))
        return {j: [x for _, x in sorted(v)] for j, v in sorted(cols.items())}

    def is_row_standard(self) -> bool:
        return all(a < b for row in self.rows for a, b in zip(row, row[1:]))

    def is_standard(self) -> bool:
        return self.is_row_standard() and all(
            a < b for col in self.columns().values() for a, b in zip(col, col[1:])
        )

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict, kind: str = "A") -> Tableau:
        return cls(Composition(kind, tuple(obj["shape"])), tuple(tuple(r) for r in obj["rows"]))


# Canonical row-standard representative of a row-equivalence class.
Tabloid = Tableau


def render(T: Tableau) -> str:
    """ASCII grid; type B rows are placed by their column coordinates."""
    width = max(len(str(x)) for row in T.rows for x in row) + 1
    lo = min(j for _, cols in T.shape.rows for j in cols)
    lines = []
    for (i, cols), row in zip(T.shape.rows, T.rows):
        line = " " * (width * (cols[0] - lo)) + "".join(str(x).rjust(width) for x in row)
        lines.append(line.rstrip())
    return "\n".join(lines)


def positive_cells(shape: Composition, order: str = "top") -> list[Cell]:
    """The cells read to produce letters ``1..d`` of the reference filling."""
    if shape.kind == "A":
        rows = list(shape.rows)
        if order == "bottom":
            rows.reverse()
        return [(i, j) for i, cols in rows for j in cols]
    h = shape.center // 2
    middle = [(0, j) for j in range(1, h + 1)]
    body = [[(i, j) for j in cols] for i, cols in shape.rows if i > 0]
    if order == "bottom":
        return [c for row in reversed(body) for c in row] + middle
    return middle + [c for row in body for c in row]


def reference_tableau(shape: Composition, order: str = "top") -> Tableau:
    """The filling with ``1..d`` in reading order (and mirrored negatives in type B)."""
    filling = {c: k for k, c in enumerate(positive_cells(shape, order), start=1)}
    if shape.kind == "B":
        filling.update({(-i, -j): -k for (i, j), k in list(filling.items())})
        filling[(0, 0)] = 0
    return Tableau.from_filling(shape, filling)


def act_on_letters(T: Tableau, w: SignedPerm) -> Tableau:
    """Relabel every letter ``x`` of ``T`` by ``w(x)``."""
    if w.d != T.shape.d:
        raise ValueError(f"size mismatch: permutation on {w.d} letters, tableau with d={T.shape.d}")
    return Tableau(T.shape, tuple(tuple(w(x) for x in row) for row in T.rows))


def to_tabloid(T: Tableau) -> Tabloid:
    return Tableau(T.shape, tuple(tuple(sorted(row)) for row in T.rows))


def longest_element(t: WeylType) -> SignedPerm:
    if t.tag == "A":
        return SignedPerm(tuple(range(t.d, 0, -1)))
    return SignedPerm(tuple(-i for i in range(1, t.d + 1)))


def reading_word(T: Tableau, order: str = "top") -> SignedPerm:
    return SignedPerm(tuple(T.filling[c] for c in positive_cells(T.shape, order)))


def tableau_to_coset_rep(T: Tableau, variant: str = REFERENCE_VARIANT) -> SignedPerm:
    """Row-reading map ``rStd -> D_J``.

    ``inverse-top`` is the reference: ``w(T(c)) == T0(c)`` with ``T0`` the
    top-to-bottom reference filling.  The other plain variants change the
    row order and/or drop the inverse; see ``MAP_VARIANTS`` for ``opposite-*``.
    """
    if variant not in MAP_VARIANTS:
        raise ValueError(f"unknown map variant {variant!r}")
    if not T.is_row_standard():
        raise ValueError("tableau is not row standard")
    if variant.startswith("opposite-"):
        T = to_tabloid(act_on_letters(T, longest_element(T.shape.type)))
        variant = "inverse-" + variant.partition("-")[2]
    inverse, _, order = variant.rpartition("-")
    u = reading_word(T, order)
    return u.inverse() if inverse else u


def _row_sets_A(letters: frozenset[int], sizes: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not sizes:
        yield ()
        return
    for first in itertools.combinations(sorted(letters), sizes[0]):
        for rest in _row_sets_A(letters - set(first), sizes[1:]):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_row_standard(shape: Composition) -> tuple[Tableau, ...]:
    d = shape.d
    if shape.kind == "A":
        return tuple(Tableau(shape, rows) for rows in _row_sets_A(frozenset(range(1, d + 1)), shape.parts))
    h = shape.center // 2
    out = []
    for middle in itertools.combinations(range(1, d + 1), h):
        rest = frozenset(range(1, d + 1)) - set(middle)
        for abs_rows in _row_sets_A(rest, shape.half):
            flat = [x for row in abs_rows for x in row]
            for signs in itertools.product((1, -1), repeat=len(flat)):
                it = iter(s * x for s, x in zip(signs, flat))
                rows = [sorted(next(it) for _ in row) for row in abs_rows]
                out.append(Tableau.from_half(shape, middle, rows))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def enumerate_standard(shape: Composition) -> tuple[Tableau, ...]:
    return tuple(T for T in enumerate_row_standard(shape) if T.is_standard())


def all_tableaux(shape: Composition) -> list[Tableau]:
    """Every filling, as ``w`` applied to the reference tableau, ``w`` over the whole group."""
    T0 = reference_tableau(shape)
    return [act_on_letters(T0, w) for w in weyl_group(shape.type).elements]


def check_bijection(shape: Composition, variant: str) -> tuple[bool, dict[Tableau, SignedPerm]]:
    """Whether ``variant`` maps ``rStd(shape)`` bijectively onto ``D_J``."""
    reps = set(weyl_group(shape.type).minimal_coset_reps(composition_to_J(shape)))
    image = {T: tableau_to_coset_rep(T, variant) for T in enumerate_row_standard(shape)}
    values = set(image.values())
    ok = values == reps and len(values) == len(image)
    return ok, image


def hook_count(shape: Composition) -> int:
    """Hook length formula for a type A partition."""
    parts = shape.parts
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])]
    hooks = 1
    for i, p in enumerate(parts):
        for j in range(p):
            hooks *= (p - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(sum(parts)) // hooks
