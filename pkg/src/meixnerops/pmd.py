"""Position-momentum decompositions T = sum_n A_n(X) D^n.

Here X is multiplication by the variable and D is differentiation, acting on
polynomials.  An operator that raises degree by at most k admits at most one
such expansion with deg A_n <= n + k; ``extract_pmd`` recovers it from the
operator's matrix on the monomial basis by peeling the triangular system

    T x^m = sum_{n <= m} A_n(X) * m!/(m-n)! * x^{m-n}.

``normal_order`` rewrites a word in the letters X and D into this canonical
form using D X = X D + I.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, perm
from typing import Iterable, Sequence

from .exact import Poly, format_rat


class NotFaithful(ValueError):
    """Matrix raises degree beyond the declared bound; no expansion exists."""


def _trim(coeffs: Iterable[Poly]) -> tuple[Poly, ...]:
    out = list(coeffs)
    while out and out[-1].is_zero:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class PMDecomp:
    """Coefficients A_0, A_1, ... of a degree-(+k) operator, zeros trimmed."""

    k: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))
        for n, a in enumerate(self.coeffs):
            if not a.is_zero and a.degree > n + self.k:
                raise ValueError(
                    f"deg A_{n} = {a.degree} exceeds the faithfulness bound {n + self.k}"
                )

    def coeff(self, n: int) -> Poly:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Poly.zero()

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def apply(self, f: Poly) -> Poly:
        return apply_pmd(self, f)

    def to_json_dict(self) -> dict:
        return {"k": self.k, "coeffs": [a.to_json() for a in self.coeffs]}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            head = f"({a})"
            if n == 1:
                parts.append(f"{head}*D")
            elif n > 1:
                parts.append(f"{head}*D^{n}")
            else:
                parts.append(head)
        return " + ".join(parts)


def apply_pmd(decomp: PMDecomp, f: Poly) -> Poly:
    """Evaluate sum_n A_n(X) f^(n) exactly."""
    out = Poly.zero()
    df = f
    for n, a in enumerate(decomp.coeffs):
        if n > 0:
            df = df.derivative()
            if df.is_zero:
                break
        if not a.is_zero:
            out = out + a * df
    return out


def extract_pmd(matrix: Sequence[Sequence[Fraction]], k: int, order: int) -> PMDecomp:
    """Recover A_0 .. A_order from a monomial-basis matrix.

    ``matrix[i][m]`` must hold the X^i coefficient of the image of X^m; only
    columns 0 .. order are read, so a truncated matrix may be passed as long
    as those columns are reliable.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order >= len(matrix[0]):
        raise ValueError(f"matrix has {len(matrix[0])} columns, need {order + 1}")
    columns = [
        Poly.from_coeffs([matrix[i][m] for i in range(len(matrix))]) for m in range(order + 1)
    ]
    coeffs: list[Poly] = []
    for m, col in enumerate(columns):
        if not col.is_zero and col.degree > m + k:
            raise NotFaithful(
                f"image of X^{m} has degree {col.degree}, exceeding {m} + k with k = {k}"
            )
        rem = col
        for n, a in enumerate(coeffs):
            if not a.is_zero:
                rem = rem - perm(m, n) * (a * Poly.monomial(m - n))
        a_m = rem * Fraction(1, factorial(m))
        if not a_m.is_zero and a_m.degree > m + k:
            raise NotFaithful(f"coefficient A_{m} has degree {a_m.degree} > {m + k}")
        coeffs.append(a_m)
    return PMDecomp(k, tuple(coeffs))


@dataclass(frozen=True)
class XDWord:
    """A word in the letters X and D, read as an operator product."""

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        if any(ch not in ("X", "D") for ch in letters):
            raise ValueError(f"letters must be 'X' or 'D', got {letters!r}")
        object.__setattr__(self, "letters", letters)

    @staticmethod
    def parse(text: str) -> "XDWord":
        return XDWord(tuple(text.strip().upper()))

    @property
    def grade(self) -> int:
        return sum(1 if ch == "X" else -1 for ch in self.letters)

    def __str__(self) -> str:
        return "".join(self.letters) or "I"


def normal_order(word: XDWord) -> PMDecomp:
    """Canonical form of the word: the rightmost letter acts first.

    Left-composing X keeps the expansion normally ordered; left-composing D
    uses D * A_n(X) = A_n(X) * D + A_n'(X).
    """
    coeffs: list[Poly] = [Poly.one()]
    x = Poly.of(0, 1)
    for letter in reversed(word.letters):
        if letter == "X":
            coeffs = [x * a for a in coeffs]
        else:
            bumped = [Poly.zero()] + coeffs
            for n in range(len(coeffs)):
                bumped[n] = bumped[n] + coeffs[n].derivative()
            coeffs = bumped
    return PMDecomp(word.grade, tuple(coeffs))
