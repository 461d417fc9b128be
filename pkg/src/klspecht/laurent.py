"""Exact Laurent polynomials in one variable ``q`` with integer coefficients."""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An element of Z[q, q^-1], stored as ``{exponent: coefficient}``.

    Instances are immutable and always kept in canonical form (no zero
    coefficients), so ``==`` and ``hash`` are structural.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, x: Scalar) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def __getitem__(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def min_degree(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    def max_degree(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Scalar) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        other = LaurentPoly.coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers only exist for monomials; use monomial()")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    # -- involution and decomposition -------------------------------------
    def bar(self) -> LaurentPoly:
        """Substitute ``q -> q^-1``."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def split_symmetric(self) -> tuple[LaurentPoly, LaurentPoly]:
        """Return ``(gamma, strict)`` with ``self == gamma + strict``.

        ``gamma`` is bar-invariant and built from the coefficients at
        exponents ``<= 0``; ``strict`` only has exponents ``>= 1``.
        """
        gamma: dict[int, int] = {}
        for e, c in self._coeffs.items():
            if e == 0:
                gamma[0] = c
            elif e < 0:
                gamma[e] = c
                gamma[-e] = c
        gamma_poly = LaurentPoly(gamma)
        return gamma_poly, self - gamma_poly

    def split_symmetric_negative(self) -> tuple[LaurentPoly, LaurentPoly]:
        """Mirror of :meth:`split_symmetric`: ``strict`` only has exponents ``<= -1``."""
        gamma, strict = self.bar().split_symmetric()
        return gamma, strict.bar()

    def eval_at_one(self) -> int:
        return sum(self._coeffs.values())

    def __call__(self, q):
        """Evaluate at a number; exact when ``q`` is a ``Fraction`` or int."""
        from fractions import Fraction

        q = Fraction(q)
        return sum((c * q**e for e, c in self._coeffs.items()), Fraction(0))

    # -- (de)serialization ------------------------------------------------
    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._coeffs.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> LaurentPoly:
        return cls({int(e): int(c) for e, c in obj.items()})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += sign + mono
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: accepts terms like ``2*q^-3``, ``-q``, ``5``."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return ZERO
        acc: dict[int, int] = {}
        for term in re.split(r"(?<!\^)(?=[+-])", text):
            if not term:
                continue
            sign = -1 if term.startswith("-") else 1
            term = term.lstrip("+-")
            if "q" not in term:
                coeff, exp = int(term), 0
            else:
                head, _, tail = term.partition("q")
                coeff = int(head.rstrip("*")) if head else 1
                exp = int(tail[1:]) if tail.startswith("^") else 1
            acc[exp] = acc.get(exp, 0) + sign * coeff
        return cls(acc)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)
QINV = LaurentPoly.monomial(-1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def split_symmetric(a: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    return a.split_symmetric()


def eval_at_one(a: LaurentPoly) -> int:
    return a.eval_at_one()
