"""Exact arithmetic helpers: rationals, modular inverses, Hirzebruch-Jung fractions.

``Rational`` is :class:`fractions.Fraction`, which already keeps itself reduced
with a positive denominator.  Everything else in the package builds on it, so
there is no floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Rational = Fraction


class DomainError(ValueError):
    """An input violated a mathematical precondition (coprimality, range, ...)."""


def to_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction into a Rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or "." in text or "e" in text.lower():
            raise DomainError(f"not an exact rational string: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational: {value!r}") from exc
    raise DomainError(f"not a rational: {value!r}")


def rational_str(q) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def mod_inverse(a: int, r: int) -> int:
    if r < 2:
        raise DomainError(f"modulus must be >= 2, got {r}")
    if gcd(a, r) != 1:
        raise DomainError(f"{a} is not invertible modulo {r}")
    return pow(a, -1, r)


def hj_expand(r: int, a: int) -> list[int]:
    """Hirzebruch-Jung ("minus") continued fraction of r/a.

    Returns ``[b1, ..., bk]`` with every ``bi >= 2`` and
    ``r/a = b1 - 1/(b2 - 1/(... - 1/bk))``.  ``r = a = 1`` gives the empty list.
    """
    if r == 1 and a == 1:
        return []
    if not (1 <= a < r) or gcd(a, r) != 1:
        raise DomainError(f"need 1 <= a < r with gcd(a, r) = 1, got r={r}, a={a}")
    coeffs = []
    num, den = r, a
    while den:
        b = -(-num // den)  # ceiling
        coeffs.append(b)
        num, den = den, b * den - num
    return coeffs


def hj_eval(coeffs: Sequence[int]) -> tuple[int, int]:
    """Inverse of :func:`hj_expand`: ``[b1..bk] -> (r, a)`` coprime."""
    if not coeffs:
        raise DomainError("empty continued fraction")
    if any(b < 2 for b in coeffs):
        raise DomainError(f"entries must be >= 2: {list(coeffs)}")
    # r/a as p/q, evaluated from the tail
    p, q = coeffs[-1], 1
    for b in reversed(coeffs[:-1]):
        p, q = b * p - q, p
    return p, q


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` over Q by Gauss-Jordan elimination.

    Raises DomainError if the matrix is singular.
    """
    n = len(matrix)
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if len(rows) != n or any(len(row) != n + 1 for row in rows):
        raise DomainError("matrix must be square and match the right-hand side")
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if pivot is None:
            raise DomainError("singular matrix")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        piv = rows[col][col]
        rows[col] = [v / piv for v in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[col])]
    return [row[n] for row in rows]


def is_negative_definite(matrix: Sequence[Sequence]) -> bool:
    """Exact test via symmetric elimination: every pivot of ``-matrix`` must be > 0."""
    n = len(matrix)
    work = [[-Fraction(v) for v in row] for row in matrix]
    for k in range(n):
        pivot = work[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            factor = work[i][k] / pivot
            if factor:
                for j in range(k, n):
                    work[i][j] -= factor * work[k][j]
    return True


def quadratic_form(matrix: Sequence[Sequence], x: Sequence) -> Fraction:
    n = len(x)
    return sum(
        (Fraction(matrix[i][j]) * x[i] * x[j] for i in range(n) for j in range(n)),
        Fraction(0),
    )
