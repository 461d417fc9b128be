"""Specht vectors as signed sums of tabloids, and their coordinate matrices."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import sympy

from .shapes import (
    REFERENCE_VARIANT,
    Composition,
    Tableau,
    act_on_letters,
    enumerate_row_standard,
    enumerate_standard,
    tableau_to_coset_rep,
    to_tabloid,
)
from .weyl import SignedPerm, WeylType, generator, length, weyl_group

# canonical tabloid -> integer coefficient, zeros pruned
TabloidCombo = dict[Tableau, int]
ORIENTATIONS = ("as_printed", "reversed")


def _prune(combo: dict[Tableau, int]) -> TabloidCombo:
    return {T: c for T, c in sorted(combo.items()) if c}


def column_group(T: Tableau) -> list[SignedPerm]:
    """Letter permutations (signed, in type B) preserving every column's letter set."""
    d = T.shape.d
    factors: list[list[dict[int, int]]] = []
    for j, letters in T.columns().items():
        if T.shape.kind == "B" and j < 0:
            continue  # determined by the mirrored column
        if T.shape.kind == "B" and j == 0:
            pos = sorted(x for x in letters if x > 0)
            choices = []
            for perm in itertools.permutations(pos):
                for signs in itertools.product((1, -1), repeat=len(pos)):
                    choices.append({a: s * b for a, b, s in zip(pos, perm, signs)})
            factors.append(choices)
            continue
        factors.append([dict(zip(letters, perm)) for perm in itertools.permutations(letters)])
    group = []
    for parts in itertools.product(*factors):
        images: dict[int, int] = {}
        for p in parts:
            images.update(p)
        window = []
        for k in range(1, d + 1):
            if k in images:
                window.append(images[k])
            else:  # k sits in a negative column: mirror of -k
                window.append(-images[-k])
        group.append(SignedPerm(tuple(window)))
    return sorted(group)


def sign(t: WeylType, w: SignedPerm) -> int:
    return -1 if length(t, w) % 2 else 1


def specht_vector(T: Tableau) -> TabloidCombo:
    t = T.shape.type
    acc: dict[Tableau, int] = {}
    for w in column_group(T):
        R = to_tabloid(act_on_letters(T, w))
        acc[R] = acc.get(R, 0) + sign(t, w)
    return _prune(acc)


def specht_action(v: TabloidCombo, i: int) -> TabloidCombo:
    """Act by the simple generator ``s_i`` on the letters of every tabloid."""
    acc: dict[Tableau, int] = {}
    for R, c in v.items():
        s = generator(R.shape.type, i)
        S = to_tabloid(act_on_letters(R, s))
        acc[S] = acc.get(S, 0) + c
    return _prune(acc)


def combo_add(a: TabloidCombo, b: TabloidCombo, scale: int = 1) -> TabloidCombo:
    acc = dict(a)
    for R, c in b.items():
        acc[R] = acc.get(R, 0) + scale * c
    return _prune(acc)


def _rep_key(shape: Composition):
    group = weyl_group(shape.type)

    def key(T: Tableau):
        w = tableau_to_coset_rep(to_tabloid(T), REFERENCE_VARIANT)
        return (group.length(w), w.window)

    return key


@dataclass
class CMatrix:
    """``entries[r][t]`` is the coefficient of tabloid ``rows[r]`` in the Specht vector of ``cols[t]``."""

    shape: Composition
    rows: list[Tableau]
    cols: list[Tableau]
    entries: list[list[int]]

    def entry(self, R: Tableau, T: Tableau) -> int:
        return self.entries[self.rows.index(R)][self.cols.index(T)]

    def column(self, t: int) -> TabloidCombo:
        return _prune({R: self.entries[r][t] for r, R in enumerate(self.rows)})

    def permute_columns(self, order: Iterable[int]) -> CMatrix:
        """Keep the column labels but reorder the data under them (used as a negative control)."""
        order = list(order)
        return CMatrix(self.shape, self.rows, self.cols, [[row[k] for k in order] for row in self.entries])

    def to_json(self, variant: str = REFERENCE_VARIANT) -> dict:
        return {
            "shape": {"type": self.shape.kind, "parts": list(self.shape.parts)},
            "rows": [
                {"tableau": R.to_json(), "coset_rep": tableau_to_coset_rep(R, variant).to_json()} for R in self.rows
            ],
            "cols": [
                {"tableau": T.to_json(), "coset_rep": tableau_to_coset_rep(T, variant).to_json()} for T in self.cols
            ],
            "entries": self.entries,
        }

    def csv_rows(self, variant: str = REFERENCE_VARIANT) -> list[list[str]]:
        head = ["R"] + [str(tableau_to_coset_rep(T, variant)) for T in self.cols]
        return [head] + [
            [str(tableau_to_coset_rep(R, variant))] + [str(x) for x in row] for R, row in zip(self.rows, self.entries)
        ]


@lru_cache(maxsize=None)
def c_matrix(shape: Composition) -> CMatrix:
    """Rows: row-standard tableaux; columns: standard ones; both ordered by reference coset rep."""
    key = _rep_key(shape)
    rows = sorted(enumerate_row_standard(shape), key=key)
    cols = sorted(enumerate_standard(shape), key=key)
    index = {R: k for k, R in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for t, T in enumerate(cols):
        for R, c in specht_vector(T).items():
            entries[index[R]][t] = c
    return CMatrix(shape, rows, cols, entries)


def specht_rank(shape: Composition) -> int:
    cm = c_matrix(shape)
    if not cm.cols:
        return 0
    return sympy.Matrix(cm.entries).rank()


def support_violations(cm: CMatrix, variant: str, orientation: str) -> list[dict]:
    """Entries breaking "c_{R,T} != 0 implies w_R <= w_T" (or ``>=`` when reversed),
    plus any standard ``T`` with ``c_{T,T} != 1``."""
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    group = weyl_group(cm.shape.type)
    out = []
    for t, T in enumerate(cm.cols):
        wT = tableau_to_coset_rep(T, variant)
        for r, R in enumerate(cm.rows):
            c = cm.entries[r][t]
            if R == T and c != 1:
                out.append({"kind": "diagonal", "R": str(wT), "T": str(wT), "value": c})
            if not c:
                continue
            wR = tableau_to_coset_rep(R, variant)
            ok = group.leq(wR, wT) if orientation == "as_printed" else group.leq(wT, wR)
            if not ok:
                out.append({"kind": "orientation", "R": str(wR), "T": str(wT), "value": c})
    return out
