"""The two-parameter family of recurrences with closed-form decompositions.

Parameters (alpha, alpha0, beta, t) define the recurrence coefficients

    alpha_n = alpha*n + alpha0  (n >= 0),
    omega_n = beta*n^2 + (t - beta)*n  (n >= 1),

valid when t > 0, alpha >= 0, and either beta >= 0 or t/(-beta) is a positive
integer (the finite-support case, with omega vanishing at 1 + t/(-beta)).
Two derived constants recur throughout: Delta = alpha^2 - 4*beta and
tau = 2*t - alpha*alpha0.

For this family the semigroup half U = a- + a0/2 satisfies

    [U, X] = (alpha/2) X - (Delta/2) N + (tau/2) I,

which forces every canonical operator to have a position-momentum expansion
whose coefficients follow the two-step recursion

    A_{n+2} = Delta / ((n+2)(n+1)) * (A_n - X/2 * [n == 0]).

The closed forms below are stated in powers of Delta, so they are exact for
every parameter choice, including Delta < 0.  When Delta = delta^2 has a
rational square root the same operators collapse to finite combinations of
the translations f(X) -> f(X + delta), f(X - delta); ``translation_form``
produces and verifies that presentation.

The raising decomposition is derived from the identity a+ = X - a- - a0
rather than from an independent closed form; see ``pmd_aplus``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, sqrt
from typing import Mapping

from .exact import Poly, RatLike, format_rat, parse_rat, rational_sqrt
from .operators import GradedOp, VerifyReport, identity_op, number_op, position_op
from .orthopoly import SzegoJacobi
from .pmd import PMDecomp


class InvalidParams(ValueError):
    """Parameter quadruple violates the admissibility conditions."""


class NotASquare(ValueError):
    """Delta has no rational square root, so no exact translation form exists."""


@dataclass(frozen=True)
class MeixnerParams:
    """Admissible (alpha, alpha0, beta, t) quadruple."""

    alpha: Fraction
    alpha0: Fraction
    beta: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "alpha0", "beta", "t"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.t <= 0:
            raise InvalidParams(f"t must be positive, got {self.t}")
        if self.alpha < 0:
            raise InvalidParams(f"alpha must be nonnegative, got {self.alpha}")
        if self.beta < 0:
            ratio = self.t / (-self.beta)
            if ratio.denominator != 1:
                raise InvalidParams(
                    f"beta < 0 requires t/(-beta) to be a positive integer, got {ratio}"
                )

    @staticmethod
    def from_strings(alpha: str, alpha0: str, beta: str, t: str) -> "MeixnerParams":
        return MeixnerParams(parse_rat(alpha), parse_rat(alpha0), parse_rat(beta), parse_rat(t))

    def derived(self) -> "MeixnerDerived":
        support = None
        if self.beta < 0:
            support = 1 + int(self.t / (-self.beta))
        return MeixnerDerived(
            delta=self.alpha**2 - 4 * self.beta,
            tau=2 * self.t - self.alpha * self.alpha0,
            support_bound=support,
        )

    def to_json_dict(self) -> dict:
        return {
            "alpha": format_rat(self.alpha),
            "alpha0": format_rat(self.alpha0),
            "beta": format_rat(self.beta),
            "t": format_rat(self.t),
        }


@dataclass(frozen=True)
class MeixnerDerived:
    """Constants derived from the parameters; recomputed, never stored."""

    delta: Fraction
    tau: Fraction
    support_bound: int | None

    @property
    def delta_squared(self) -> Fraction:
        """Alias emphasizing that delta here is the square of the shift step."""
        return self.delta


def szego_jacobi(p: MeixnerParams) -> SzegoJacobi:
    alpha, beta, t = p.alpha, p.beta, p.t
    alpha0 = p.alpha0

    def alpha_fn(n: int) -> Fraction:
        return alpha * n + alpha0

    def omega_fn(n: int) -> Fraction:
        return beta * n * n + (t - beta) * n

    return SzegoJacobi(alpha_fn, omega_fn, p.derived().support_bound)


def comm_ux_closed_form(p: MeixnerParams, trunc: int) -> GradedOp:
    """[U, X] = (alpha/2) X - (Delta/2) N + (tau/2) I as a truncated operator."""
    d = p.derived()
    sj = szego_jacobi(p)
    x = position_op(sj, trunc)
    return (
        x.scale(p.alpha / 2)
        - number_op(trunc).scale(d.delta / 2)
        + identity_op(trunc).scale(d.tau / 2)
    )


def _x_minus(c: Fraction) -> Poly:
    return Poly.of(-c, 1)


def pmd_u(p: MeixnerParams, order: int) -> PMDecomp:
    """U = a- + a0/2 expanded in powers of D, truncated at the given order.

    A_0 = alpha0/2, odd coefficients Delta^n/(2n+1)! ((alpha/2)(X-alpha0)+t),
    even coefficients (n >= 1) -(1/2) Delta^n/(2n)! (X - alpha0).
    """
    d = p.derived()
    base_odd = (p.alpha / 2) * _x_minus(p.alpha0) + p.t
    coeffs: list[Poly] = []
    for n in range(order + 1):
        if n == 0:
            coeffs.append(Poly.of(p.alpha0 / 2))
        elif n % 2 == 1:
            half = (n - 1) // 2
            coeffs.append(Fraction(d.delta**half, factorial(n)) * base_odd)
        else:
            half = n // 2
            coeffs.append(Fraction(-(d.delta**half), 2 * factorial(n)) * _x_minus(p.alpha0))
    return PMDecomp(0, tuple(coeffs))


def pmd_v(p: MeixnerParams, order: int) -> PMDecomp:
    """V = X - U: A_0 = X - alpha0/2 and negated tail coefficients."""
    u = pmd_u(p, order)
    coeffs = [Poly.of(0, 1) - u.coeff(0)]
    coeffs += [-u.coeff(n) for n in range(1, order + 1)]
    return PMDecomp(1, tuple(coeffs))


def pmd_number(p: MeixnerParams, order: int) -> PMDecomp:
    """Grade counter N: odd terms Delta^n/(2n+1)! (X - alpha0), even terms
    (n >= 1) -Delta^(n-1)/(2n)! (alpha X + tau), and A_0 = 0."""
    d = p.derived()
    lin = Poly.of(d.tau, p.alpha)
    coeffs: list[Poly] = [Poly.zero()]
    for n in range(1, order + 1):
        if n % 2 == 1:
            half = (n - 1) // 2
            coeffs.append(Fraction(d.delta**half, factorial(n)) * _x_minus(p.alpha0))
        else:
            half = n // 2
            coeffs.append(Fraction(-(d.delta ** (half - 1)), factorial(n)) * lin)
    return PMDecomp(0, tuple(coeffs))


def pmd_a0(p: MeixnerParams, order: int) -> PMDecomp:
    """a0 = alpha N + alpha0 I, coefficientwise."""
    num = pmd_number(p, order)
    coeffs = [p.alpha * num.coeff(n) for n in range(order + 1)]
    coeffs[0] = coeffs[0] + p.alpha0
    return PMDecomp(0, tuple(coeffs))


def pmd_aminus(p: MeixnerParams, order: int) -> PMDecomp:
    """a- = U - a0/2, coefficientwise; constants are annihilated (A_0 = 0)."""
    u = pmd_u(p, order)
    a0 = pmd_a0(p, order)
    half = Fraction(1, 2)
    coeffs = [u.coeff(n) - half * a0.coeff(n) for n in range(order + 1)]
    return PMDecomp(-1, tuple(coeffs))


def pmd_aplus(p: MeixnerParams, order: int) -> PMDecomp:
    """a+ = X - a- - a0.

    Derived route: the raising part is eliminated through the position
    decomposition instead of expanded on its own, and the result is checked
    against the operator matrix elsewhere.  A_0 = X - alpha0.
    """
    am = pmd_aminus(p, order)
    a0 = pmd_a0(p, order)
    coeffs = [Poly.of(0, 1) - am.coeff(0) - a0.coeff(0)]
    coeffs += [-am.coeff(n) - a0.coeff(n) for n in range(1, order + 1)]
    return PMDecomp(1, tuple(coeffs))


def pmd_x() -> PMDecomp:
    """Multiplication by X is its own expansion: A_0 = X."""
    return PMDecomp(1, (Poly.of(0, 1),))


_SERIES = {
    "U": pmd_u,
    "V": pmd_v,
    "N": pmd_number,
    "a0": pmd_a0,
    "a-": pmd_aminus,
    "a+": pmd_aplus,
}


def series_decomposition(p: MeixnerParams, op: str, order: int) -> PMDecomp:
    """Closed-form expansion of one of U, V, N, a0, a-, a+."""
    try:
        fn = _SERIES[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}; choose from {sorted(_SERIES)}") from None
    return fn(p, order)


@dataclass(frozen=True)
class TranslationExpr:
    """Finite sum p_1(X) T_{c_1} + ... acting by f -> sum p_i * f(X + c_i)."""

    terms: tuple[tuple[Poly, Fraction], ...]

    def apply(self, f: Poly) -> Poly:
        out = Poly.zero()
        for coeff_poly, shift in self.terms:
            out = out + coeff_poly * f.shift(shift)
        return out

    def to_json_dict(self) -> list[dict]:
        return [
            {"coeff": poly.to_json(), "shift": format_rat(shift)} for poly, shift in self.terms
        ]

    def __str__(self) -> str:
        parts = []
        for poly, shift in self.terms:
            if shift == 0:
                parts.append(f"({poly}) I")
            else:
                parts.append(f"({poly}) T[{format_rat(shift)}]")
        return " + ".join(parts) if parts else "0"


def _translation_exprs(p: MeixnerParams, delta: Fraction) -> dict[str, TranslationExpr]:
    d = p.derived()
    alpha, alpha0, t = p.alpha, p.alpha0, p.t
    delta_sq = d.delta
    xm = _x_minus(alpha0)
    lin = Poly.of(d.tau, alpha)

    quarter = Fraction(1, 4)
    u_plus = -quarter * xm + Fraction(1, 4 * delta) * lin
    u_minus = -quarter * xm - Fraction(1, 4 * delta) * lin
    u_zero = Poly.of(alpha0 / 2) + Fraction(1, 2) * xm

    n_plus = Fraction(1, 2 * delta) * xm - Fraction(1, 2 * delta_sq) * lin
    n_minus = -Fraction(1, 2 * delta) * xm - Fraction(1, 2 * delta_sq) * lin
    n_zero = Fraction(1, delta_sq) * lin

    even_half = Fraction(alpha0 * delta_sq + alpha * d.tau, 4 * delta_sq) + Fraction(
        p.beta, delta_sq
    ) * Poly.of(0, 1)
    m_plus = Poly.of(t / (2 * delta)) + even_half
    m_minus = Poly.of(-t / (2 * delta)) + even_half
    m_zero = -2 * even_half

    def expr(plus: Poly, minus: Poly, zero: Poly) -> TranslationExpr:
        terms = []
        if not plus.is_zero:
            terms.append((plus, delta))
        if not minus.is_zero:
            terms.append((minus, -delta))
        if not zero.is_zero:
            terms.append((zero, Fraction(0)))
        return TranslationExpr(tuple(terms))

    forms = {
        "U": expr(u_plus, u_minus, u_zero),
        "N": expr(n_plus, n_minus, n_zero),
        "a-": expr(m_plus, m_minus, m_zero),
    }
    a0_terms = []
    for poly, shift in forms["N"].terms:
        a0_terms.append((alpha * poly, shift))
    a0_expr_terms = list(a0_terms)
    merged = False
    for i, (poly, shift) in enumerate(a0_expr_terms):
        if shift == 0:
            a0_expr_terms[i] = (poly + alpha0, shift)
            merged = True
    if not merged:
        a0_expr_terms.append((Poly.of(alpha0), Fraction(0)))
    forms["a0"] = TranslationExpr(tuple(a0_expr_terms))
    return forms


@dataclass(frozen=True)
class TranslationFormReport:
    """Translation presentation of U, N, a0, a- when Delta is a square."""

    mode: str
    delta_squared: Fraction
    delta: Fraction | None
    forms: Mapping[str, TranslationExpr]
    limit_forms: Mapping[str, PMDecomp]
    checks: tuple[VerifyReport, ...]
    rendered: Mapping[str, list[dict]]
    passed: bool | None

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "delta_squared": format_rat(self.delta_squared),
            "delta": None if self.delta is None else format_rat(self.delta),
            "forms": {name: expr.to_json_dict() for name, expr in self.forms.items()},
            "limit_forms": {name: d.to_json_dict() for name, d in self.limit_forms.items()},
            "checks": [c.to_json_dict() for c in self.checks],
            "rendered": dict(self.rendered),
            "pass": self.passed,
        }


def translation_form(
    p: MeixnerParams, mode: str = "exact_if_square", max_degree: int = 12
) -> TranslationFormReport:
    """Present U, N, a0, a- through finite translations by +/- delta.

    In ``exact_if_square`` mode Delta must have a rational square root delta;
    each presentation is verified against the series expansion by applying
    both to X^m for m <= max_degree (a formal polynomial identity, so no
    truncation is involved).  When delta = 0 the translations collapse and
    the two-term momentum forms are reported instead.  ``numeric`` mode
    renders decimal coefficients for Delta > 0 without any exactness claim.
    """
    d = p.derived()
    if mode == "numeric":
        if d.delta <= 0:
            raise NotASquare(
                f"Delta = {d.delta} has no positive real square root; "
                "use the series decomposition"
            )
        delta_f = sqrt(float(d.delta))
        rendered: dict[str, list[dict]] = {}
        symbolic = _symbolic_translation_terms(p)
        for name, terms in symbolic.items():
            rows = []
            for poly_of_delta, shift_sign in terms:
                coeff = [f"{c:.12g}" for c in poly_of_delta(delta_f)]
                rows.append({"coeff": coeff, "shift": f"{shift_sign * delta_f:.12g}"})
            rendered[name] = rows
        return TranslationFormReport(
            mode, d.delta, None, {}, {}, (), rendered, None
        )
    if mode != "exact_if_square":
        raise ValueError(f"unknown mode {mode!r}")
    delta = rational_sqrt(d.delta)
    if delta is None:
        raise NotASquare(f"Delta = {d.delta} is not the square of a rational")
    if delta == 0:
        limit_forms = {
            "U": pmd_u(p, 1),
            "N": pmd_number(p, 2),
            "a0": pmd_a0(p, 2),
            "a-": pmd_aminus(p, 2),
        }
        checks = tuple(
            _check_against_series(p, name, limit_forms[name].apply, max_degree)
            for name in ("U", "N", "a0", "a-")
        )
        return TranslationFormReport(
            mode,
            d.delta,
            delta,
            {},
            limit_forms,
            checks,
            {},
            all(c.passed for c in checks),
        )
    forms = _translation_exprs(p, delta)
    checks = tuple(
        _check_against_series(p, name, forms[name].apply, max_degree)
        for name in ("U", "N", "a0", "a-")
    )
    return TranslationFormReport(
        mode, d.delta, delta, forms, {}, checks, {}, all(c.passed for c in checks)
    )


def _symbolic_translation_terms(p: MeixnerParams):
    """Term builders used for decimal rendering: delta -> coefficient list."""
    d = p.derived()
    alpha, alpha0, t = float(p.alpha), float(p.alpha0), float(p.t)
    tau, delta_sq, beta = float(d.tau), float(d.delta), float(p.beta)

    def u_side(sign: int):
        def build(dl: float) -> list[float]:
            const = alpha0 / 4 + sign * (tau / (4 * dl))
            slope = -0.25 + sign * (alpha / (4 * dl))
            return [const, slope]

        return build

    def u_zero(dl: float) -> list[float]:
        return [0.0, 0.5]

    def n_side(sign: int):
        def build(dl: float) -> list[float]:
            const = sign * (-alpha0 / (2 * dl)) - tau / (2 * delta_sq)
            slope = sign * (1 / (2 * dl)) - alpha / (2 * delta_sq)
            return [const, slope]

        return build

    def n_zero(dl: float) -> list[float]:
        return [tau / delta_sq, alpha / delta_sq]

    def m_side(sign: int):
        def build(dl: float) -> list[float]:
            const = sign * (t / (2 * dl)) + (alpha0 * delta_sq + alpha * tau) / (4 * delta_sq)
            slope = beta / delta_sq
            return [const, slope]

        return build

    def m_zero(dl: float) -> list[float]:
        return [
            -(alpha0 * delta_sq + alpha * tau) / (2 * delta_sq),
            -2 * beta / delta_sq,
        ]

    def a0_side(sign: int):
        inner = n_side(sign)

        def build(dl: float) -> list[float]:
            return [alpha * v for v in inner(dl)]

        return build

    def a0_zero(dl: float) -> list[float]:
        base = n_zero(dl)
        return [alpha * base[0] + alpha0, alpha * base[1]]

    return {
        "U": [(u_side(1), 1), (u_side(-1), -1), (u_zero, 0)],
        "N": [(n_side(1), 1), (n_side(-1), -1), (n_zero, 0)],
        "a0": [(a0_side(1), 1), (a0_side(-1), -1), (a0_zero, 0)],
        "a-": [(m_side(1), 1), (m_side(-1), -1), (m_zero, 0)],
    }


def _check_against_series(p: MeixnerParams, name: str, action, max_degree: int) -> VerifyReport:
    series_fn = _SERIES[name]
    for m in range(max_degree + 1):
        xm = Poly.monomial(m)
        lhs = action(xm)
        rhs = series_fn(p, m).apply(xm)
        if lhs != rhs:
            return VerifyReport(
                f"{name} translation form", False, max_degree, m, lhs - rhs
            )
    return VerifyReport(f"{name} translation form", True, max_degree)


def one_meixner_limit_check(p: MeixnerParams, order: int = 10) -> VerifyReport:
    """At Delta = 0 the U expansion collapses to (alpha0/2) I + (1/2)(alpha X + tau) D.

    Verifies that every Delta-power coefficient beyond D^1 vanishes
    identically and that the two surviving coefficients take that form.
    """
    d = p.derived()
    if d.delta != 0:
        raise InvalidParams(f"limit check requires Delta = 0, got {d.delta}")
    u = pmd_u(p, order)
    name = "Delta=0 limit of U"
    expected0 = Poly.of(p.alpha0 / 2)
    expected1 = Fraction(1, 2) * Poly.of(d.tau, p.alpha)
    if u.coeff(0) != expected0:
        return VerifyReport(name, False, order, 0, u.coeff(0) - expected0)
    if u.coeff(1) != expected1:
        return VerifyReport(name, False, order, 1, u.coeff(1) - expected1)
    for n in range(2, order + 1):
        if not u.coeff(n).is_zero:
            return VerifyReport(name, False, order, n, u.coeff(n))
    return VerifyReport(name, True, order)


@dataclass(frozen=True)
class TranslationCombo:
    """Finite combination sum_i c_i T_{d_i} given by (coefficient, shift) pairs."""

    terms: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "terms",
            tuple((Fraction(c), Fraction(s)) for c, s in self.terms),
        )

    @staticmethod
    def parse(text: str) -> "TranslationCombo":
        """Parse "c1:d1,c2:d2,..." with rational components."""
        terms = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            left, sep, right = chunk.partition(":")
            if not sep:
                raise ValueError(f"term {chunk!r} is not of the form c:d")
            terms.append((parse_rat(left), parse_rat(right)))
        if not terms:
            raise ValueError("empty combination")
        return TranslationCombo(tuple(terms))

    def format(self) -> str:
        return ",".join(f"{format_rat(c)}:{format_rat(s)}" for c, s in self.terms)

    def apply(self, f: Poly) -> Poly:
        out = Poly.zero()
        for c, s in self.terms:
            out = out + c * f.shift(s)
        return out

    def to_json_dict(self) -> list[dict]:
        return [{"coeff": format_rat(c), "shift": format_rat(s)} for c, s in self.terms]
