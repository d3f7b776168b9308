"""Truncated operators on the monic orthogonal-polynomial basis.

A ``GradedOp`` stores the matrix of an operator on span{f_0 .. f_N} with
``entries[m][n]`` the f_m-component of the image of f_n.  ``band = (lo, hi)``
bounds the grade shifts the operator performs, and ``margin`` counts how many
top input degrees are unreliable because the truncation discarded components
beyond f_N.  Every comparison is restricted to the reliable degrees, so an
identity reported as holding is exact, never approximate.

The quantum decomposition of multiplication by X is

    a+ f_n = f_{n+1},   a0 f_n = alpha_n f_n,   a- f_n = omega_n f_{n-1},

with semigroup halves U = a- + a0/2 and V = a+ + a0/2, so X = U + V.
When a system has finite support n0 and is truncated at exactly N = n0 - 1
nothing is discarded (f_{n0} = 0 almost surely), and all margins are zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Poly, RatLike, format_rat
from .orthopoly import SzegoJacobi, TruncationBeyondSupport, monic_polys

Matrix = tuple[tuple[Fraction, ...], ...]


def _zeros(size: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * size for _ in range(size)]


def _freeze(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(tuple(v for v in row) for row in rows)


@dataclass(frozen=True)
class GradedOp:
    """Exact truncated operator in the f-basis with grade-band bookkeeping."""

    trunc: int
    band: tuple[int, int]
    margin: int
    entries: Matrix

    def __post_init__(self) -> None:
        size = self.trunc + 1
        if len(self.entries) != size or any(len(r) != size for r in self.entries):
            raise ValueError("entries must be a (trunc+1) x (trunc+1) matrix")
        lo, hi = self.band
        if lo > hi:
            raise ValueError("band lower bound exceeds upper bound")
        for m in range(size):
            for n in range(size):
                if self.entries[m][n] != 0 and not (lo <= m - n <= hi):
                    raise ValueError(f"entry ({m},{n}) falls outside band {self.band}")
        if self.margin < 0:
            raise ValueError("margin must be nonnegative")

    @property
    def valid_degree(self) -> int:
        """Largest input degree whose column is exact under the truncation."""
        return self.trunc - self.margin

    def column(self, n: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[m][n] for m in range(self.trunc + 1))

    def _require_same_trunc(self, other: "GradedOp") -> None:
        if self.trunc != other.trunc:
            raise ValueError("operators have different truncation degrees")

    def __add__(self, other: "GradedOp") -> "GradedOp":
        self._require_same_trunc(other)
        size = self.trunc + 1
        rows = [
            [self.entries[m][n] + other.entries[m][n] for n in range(size)]
            for m in range(size)
        ]
        band = (min(self.band[0], other.band[0]), max(self.band[1], other.band[1]))
        return GradedOp(self.trunc, band, max(self.margin, other.margin), _freeze(rows))

    def __neg__(self) -> "GradedOp":
        rows = [[-v for v in row] for row in self.entries]
        return GradedOp(self.trunc, self.band, self.margin, _freeze(rows))

    def __sub__(self, other: "GradedOp") -> "GradedOp":
        return self + (-other)

    def scale(self, c: RatLike) -> "GradedOp":
        c = Fraction(c)
        rows = [[c * v for v in row] for row in self.entries]
        return GradedOp(self.trunc, self.band, self.margin, _freeze(rows))

    def __mul__(self, other: object) -> "GradedOp":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def compose(self, other: "GradedOp") -> "GradedOp":
        """Operator product self o other (apply ``other`` first)."""
        self._require_same_trunc(other)
        size = self.trunc + 1
        rows = _zeros(size)
        for l in range(size):
            col_inner = [other.entries[l][n] for n in range(size)]
            row_outer = self.entries
            for m in range(size):
                a = row_outer[m][l]
                if a == 0:
                    continue
                target = rows[m]
                for n in range(size):
                    b = col_inner[n]
                    if b != 0:
                        target[n] += a * b
        band = (self.band[0] + other.band[0], self.band[1] + other.band[1])
        # A column n of the product is reliable when other's column n is
        # reliable and every level it feeds lies in self's reliable range.
        margin = max(0, other.margin)
        if self.margin > 0:
            margin = max(margin, self.margin + other.band[1])
        return GradedOp(self.trunc, band, margin, _freeze(rows))

    def to_json_dict(self) -> dict:
        return {
            "N": self.trunc,
            "band": list(self.band),
            "margin": self.margin,
            "entries": [format_rat(v) for row in self.entries for v in row],
        }


def zero_op(trunc: int) -> GradedOp:
    return GradedOp(trunc, (0, 0), 0, _freeze(_zeros(trunc + 1)))


def identity_op(trunc: int) -> GradedOp:
    rows = _zeros(trunc + 1)
    for n in range(trunc + 1):
        rows[n][n] = Fraction(1)
    return GradedOp(trunc, (0, 0), 0, _freeze(rows))


def number_op(trunc: int) -> GradedOp:
    """Diagonal grade counter: N f_n = n f_n."""
    rows = _zeros(trunc + 1)
    for n in range(trunc + 1):
        rows[n][n] = Fraction(n)
    return GradedOp(trunc, (0, 0), 0, _freeze(rows))


def quantum_ops(sj: SzegoJacobi, trunc: int) -> tuple[GradedOp, GradedOp, GradedOp]:
    """The creation, preservation, and annihilation parts (a+, a0, a-)."""
    if trunc < 0:
        raise ValueError("trunc must be nonnegative")
    bound = sj.support_bound
    if bound is not None and trunc >= bound:
        raise TruncationBeyondSupport(
            f"truncation degree {trunc} reaches past the {bound}-dimensional space"
        )
    size = trunc + 1
    full = bound is not None and trunc == bound - 1
    up = _zeros(size)
    diag = _zeros(size)
    down = _zeros(size)
    for n in range(size):
        if n + 1 < size:
            up[n + 1][n] = Fraction(1)
        diag[n][n] = Fraction(sj.alpha(n))
        if n >= 1:
            w = Fraction(sj.omega(n))
            if w <= 0:
                raise ValueError(f"omega_{n} = {w} is not positive inside the support")
            down[n - 1][n] = w
    aplus = GradedOp(trunc, (1, 1), 0 if full else 1, _freeze(up))
    azero = GradedOp(trunc, (0, 0), 0, _freeze(diag))
    aminus = GradedOp(trunc, (-1, -1), 0, _freeze(down))
    return aplus, azero, aminus


def semi_ops(aplus: GradedOp, azero: GradedOp, aminus: GradedOp) -> tuple[GradedOp, GradedOp]:
    """The halves U = a- + a0/2 and V = a+ + a0/2 of multiplication by X."""
    half = Fraction(1, 2)
    return aminus + azero.scale(half), aplus + azero.scale(half)


def position_op(sj: SzegoJacobi, trunc: int) -> GradedOp:
    """Multiplication by X in the f-basis: a- + a0 + a+."""
    aplus, azero, aminus = quantum_ops(sj, trunc)
    return aminus + azero + aplus


def commutator(a: GradedOp, b: GradedOp) -> GradedOp:
    return a.compose(b) - b.compose(a)


def first_mismatch(
    a: GradedOp, b: GradedOp, up_to: int | None = None
) -> tuple[int, tuple[Fraction, ...]] | None:
    """First reliable input degree where the two operators differ, if any."""
    a._require_same_trunc(b)
    top = min(a.valid_degree, b.valid_degree)
    if up_to is not None:
        top = min(top, up_to)
    for n in range(top + 1):
        col_a = a.column(n)
        col_b = b.column(n)
        if col_a != col_b:
            residual = tuple(x - y for x, y in zip(col_a, col_b))
            return n, residual
    return None


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one exact identity check."""

    name: str
    passed: bool
    max_degree: int
    fail_index: int | None = None
    residual: Poly | None = None

    def to_json_dict(self) -> dict:
        return {
            "identity": self.name,
            "pass": self.passed,
            "max_degree": self.max_degree,
            "fail_index": self.fail_index,
            "residual": None if self.residual is None else self.residual.to_json(),
        }


def _report(
    name: str, lhs: GradedOp, rhs: GradedOp, basis: list[Poly], up_to: int | None = None
) -> VerifyReport:
    top = min(lhs.valid_degree, rhs.valid_degree)
    if up_to is not None:
        top = min(top, up_to)
    miss = first_mismatch(lhs, rhs, up_to=top)
    if miss is None:
        return VerifyReport(name, True, top)
    index, residual = miss
    poly = Poly.zero()
    for m, coef in enumerate(residual):
        poly = poly + coef * basis[m]
    return VerifyReport(name, False, top, index, poly)


def verify_universal(sj: SzegoJacobi, trunc: int) -> list[VerifyReport]:
    """Check the six commutation identities that hold for every system.

    [N, a+] = a+, [N, a0] = 0, [a-, N] = a-, [N, V] = a+, [U, N] = a-,
    and [N, X] = V - U = a+ - a-.  Each check is exact on every reliable
    degree of the truncation.
    """
    aplus, azero, aminus = quantum_ops(sj, trunc)
    u, v = semi_ops(aplus, azero, aminus)
    x = aminus + azero + aplus
    num = number_op(trunc)
    basis = monic_polys(sj, trunc)
    reports = [
        _report("[N,a+] = a+", commutator(num, aplus), aplus, basis),
        _report("[N,a0] = 0", commutator(num, azero), zero_op(trunc), basis),
        _report("[a-,N] = a-", commutator(aminus, num), aminus, basis),
        _report("[N,V] = a+", commutator(num, v), aplus, basis),
        _report("[U,N] = a-", commutator(u, num), aminus, basis),
    ]
    left = _report("[N,X] = V - U", commutator(num, x), v - u, basis)
    right = _report("V - U = a+ - a-", v - u, aplus - aminus, basis)
    if left.passed and right.passed:
        reports.append(
            VerifyReport("[N,X] = V - U = a+ - a-", True, min(left.max_degree, right.max_degree))
        )
    else:
        bad = left if not left.passed else right
        reports.append(
            VerifyReport(
                "[N,X] = V - U = a+ - a-", False, bad.max_degree, bad.fail_index, bad.residual
            )
        )
    return reports


def change_of_basis(sj: SzegoJacobi, trunc: int) -> Matrix:
    """Matrix C with column n holding the monomial coefficients of f_n."""
    polys = monic_polys(sj, trunc)
    size = trunc + 1
    rows = _zeros(size)
    for n, f in enumerate(polys):
        for i, coef in enumerate(f.coeffs):
            rows[i][n] = coef
    return _freeze(rows)


def _invert_unit_upper(c: Matrix) -> Matrix:
    size = len(c)
    inv = _zeros(size)
    for j in range(size):
        col = [Fraction(0)] * size
        col[j] = Fraction(1)
        for i in range(j, -1, -1):
            acc = col[i]
            for k in range(i + 1, j + 1):
                acc -= c[i][k] * inv[k][j]
            inv[i][j] = acc
    return _freeze(inv)


def to_monomial_basis(op: GradedOp, sj: SzegoJacobi) -> Matrix:
    """Rewrite the operator to act on coordinates in {1, X, .., X^N}.

    Column m of the result expands the image of X^m; columns with
    m > op.valid_degree inherit the truncation unreliability.
    """
    c = change_of_basis(sj, op.trunc)
    c_inv = _invert_unit_upper(c)
    size = op.trunc + 1
    tmp = _zeros(size)
    for m in range(size):
        for l in range(size):
            a = op.entries[m][l]
            if a == 0:
                continue
            for n in range(size):
                b = c_inv[l][n]
                if b != 0:
                    tmp[m][n] += a * b
    out = _zeros(size)
    for m in range(size):
        for l in range(size):
            a = c[m][l]
            if a == 0:
                continue
            for n in range(size):
                b = tmp[l][n]
                if b != 0:
                    out[m][n] += a * b
    return _freeze(out)
