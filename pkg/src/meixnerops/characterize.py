"""Which translation combinations can serve as a lowering operator.

A finite combination a = sum_i c_i T_{d_i} (T_d f(X) = f(X + d)) acts as the
lowering operator of a centered random variable X exactly when the
coefficients sum to zero, the shifts are pairwise distinct, and c_i/d_i > 0
for every nonzero shift (at most one zero shift may appear, with a free
coefficient).  The moments of X are then pinned down by

    E[X^m] = sum_i c_i E[(X + d_i)^{m-1}],   E[X^0] = 1,

and X is distributed as sum_i d_i Y_i over the nonzero shifts with
independent Y_i ~ Poisson(c_i/d_i).  Three independent routes to the moments
are provided (the recursion above, classical cumulants, and a formal Laplace
transform), plus an exact factorial growth certificate |E[X^m]| <= k^m m!.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact import format_rat
from .meixner import InvalidParams, MeixnerParams, TranslationCombo
from .orthopoly import MomentSeq


class InvalidCombo(ValueError):
    """Combination cannot be a lowering operator."""


class SumNotZero(InvalidCombo):
    pass


class NegativeMean(InvalidCombo):
    pass


class DuplicateShift(InvalidCombo):
    pass


class ZeroCoefficient(InvalidCombo):
    pass


@dataclass(frozen=True)
class ComboValidity:
    """Validation verdict with the implied Poisson components when valid."""

    ok: bool
    violations: tuple[str, ...]
    poisson_terms: tuple[tuple[Fraction, Fraction], ...]  # (mean, scale) per shift

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": list(self.violations),
            "poisson_terms": [
                {"mean": format_rat(lam), "scale": format_rat(d)} for lam, d in self.poisson_terms
            ],
        }


def validate_combo(combo: TranslationCombo) -> ComboValidity:
    violations: list[str] = []
    total = sum((c for c, _ in combo.terms), Fraction(0))
    if total != 0:
        violations.append(f"coefficients sum to {format_rat(total)}, not 0")
    shifts = [d for _, d in combo.terms]
    if len(set(shifts)) != len(shifts):
        violations.append("shifts are not pairwise distinct")
    for c, d in combo.terms:
        if d != 0:
            if c / d <= 0:
                violations.append(
                    f"term {format_rat(c)}:{format_rat(d)} has c/d <= 0"
                    " (a Poisson mean must be positive)"
                )
        elif c == 0:
            violations.append("useless zero term at shift 0")
    poisson = tuple((c / d, d) for c, d in combo.terms if d != 0 and c / d > 0)
    return ComboValidity(not violations, tuple(violations), poisson if not violations else ())


def ensure_valid(combo: TranslationCombo) -> ComboValidity:
    """Validate and raise the specific violation as a typed error."""
    total = sum((c for c, _ in combo.terms), Fraction(0))
    if total != 0:
        raise SumNotZero(f"coefficients sum to {format_rat(total)}, not 0")
    shifts = [d for _, d in combo.terms]
    if len(set(shifts)) != len(shifts):
        raise DuplicateShift("shifts must be pairwise distinct")
    for c, d in combo.terms:
        if d != 0:
            if c / d <= 0:
                raise NegativeMean(
                    f"term {format_rat(c)}:{format_rat(d)} would give a nonpositive Poisson mean"
                )
        elif c == 0:
            raise ZeroCoefficient("useless zero term at shift 0")
    return validate_combo(combo)


def moments_via_recursion(combo: TranslationCombo, m_max: int) -> MomentSeq:
    """E[X^m] = sum_i c_i sum_{j<m} C(m-1,j) d_i^{m-1-j} E[X^j]."""
    ensure_valid(combo)
    mu = [Fraction(1)]
    for m in range(1, m_max + 1):
        total = Fraction(0)
        for c, d in combo.terms:
            inner = Fraction(0)
            for j in range(m):
                inner += comb(m - 1, j) * d ** (m - 1 - j) * mu[j]
            total += c * inner
        mu.append(total)
    return MomentSeq(tuple(mu))


@dataclass(frozen=True)
class CumulantSeq:
    """kappa_1 .. kappa_M of a centered variable; kappa_1 = 0 always."""

    kappas: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        vals = tuple(Fraction(v) for v in self.kappas)
        if vals and vals[0] != 0:
            raise ValueError("a centered variable must have kappa_1 = 0")
        object.__setattr__(self, "kappas", vals)

    def kappa(self, m: int) -> Fraction:
        if m < 1 or m > len(self.kappas):
            raise IndexError(f"kappa_{m} not computed")
        return self.kappas[m - 1]

    def to_json(self) -> list[str]:
        return [format_rat(v) for v in self.kappas]


def combo_cumulants(combo: TranslationCombo, m_max: int) -> CumulantSeq:
    """kappa_m = sum_i c_i d_i^(m-1) for m >= 2: summed scaled Poisson cumulants."""
    ensure_valid(combo)
    kappas = [Fraction(0)]
    for m in range(2, m_max + 1):
        kappas.append(sum((c * d ** (m - 1) for c, d in combo.terms), Fraction(0)))
    return CumulantSeq(tuple(kappas[: max(m_max, 0)]))


def moments_via_cumulants(combo: TranslationCombo, m_max: int) -> MomentSeq:
    """Standard cumulant-to-moment recursion m_n = sum C(n-1,j-1) kappa_j m_{n-j}."""
    kappas = combo_cumulants(combo, m_max)
    mu = [Fraction(1)]
    for m in range(1, m_max + 1):
        total = Fraction(0)
        for j in range(1, m + 1):
            total += comb(m - 1, j - 1) * kappas.kappa(j) * mu[m - j]
        mu.append(total)
    return MomentSeq(tuple(mu))


def laplace_series(combo: TranslationCombo, m_max: int) -> MomentSeq:
    """Moments read off the formal series of prod_i exp((c_i/d_i)(e^{d_i s} - d_i s - 1)).

    The product's logarithm has coefficient sum_i c_i d_i^{j-1}/j! at s^j for
    j >= 2, the series is exponentiated formally, and E[X^m] = m! times the
    s^m coefficient.  The defining differential identity
    phi'(s) = phi(s) * sum_i c_i e^{d_i s} is verified to order m_max - 1.
    """
    ensure_valid(combo)
    log_coeffs = [Fraction(0), Fraction(0)]
    for j in range(2, m_max + 1):
        log_coeffs.append(
            sum((c * d ** (j - 1) for c, d in combo.terms), Fraction(0)) / factorial(j)
        )
    phi = [Fraction(1)]
    for m in range(1, m_max + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            if j < len(log_coeffs):
                acc += j * log_coeffs[j] * phi[m - j]
        phi.append(acc / m)
    source = [
        sum((c * d**j for c, d in combo.terms), Fraction(0)) / factorial(j)
        for j in range(m_max)
    ]
    for m in range(m_max):
        derivative_coeff = (m + 1) * phi[m + 1]
        product_coeff = sum(phi[m - j] * source[j] for j in range(m + 1))
        if derivative_coeff != product_coeff:
            raise ArithmeticError(
                f"formal transform identity failed at order {m}; series is inconsistent"
            )
    return MomentSeq(tuple(factorial(m) * phi[m] for m in range(m_max + 1)))


@dataclass(frozen=True)
class BoundCert:
    """Certificate |E[X^m]| <= k^m m! checked exactly through checked_up_to."""

    a_const: Fraction
    k: Fraction
    checked_up_to: int
    passed: bool
    even_passed: bool

    def to_json_dict(self) -> dict:
        return {
            "A": format_rat(self.a_const),
            "k": format_rat(self.k),
            "checked_up_to": self.checked_up_to,
            "pass": self.passed,
            "even_pass": self.even_passed,
        }


def _max_power_over_factorial(r: Fraction) -> Fraction:
    """max over integer p >= 0 of r^p / p!, attained at p near r."""
    if r < 0:
        raise ValueError("expected a nonnegative value")
    ceiling = -((-r.numerator) // r.denominator)
    best = Fraction(1)
    for p in range(ceiling + 2):
        value = r**p / factorial(p)
        if value > best:
            best = value
    return best


def bound_cert(combo: TranslationCombo, m_max: int) -> BoundCert:
    """Exact factorial growth certificate for the recursion moments.

    A = max(1, max_i max_p |d_i|^p/p!) and k = max(A sum_i |c_i|, 1) give
    |E[X^m]| <= k^m m! for m <= m_max, and the even moments also satisfy
    E[X^{2m}] <= (2k)^{2m} (2m)!.
    """
    ensure_valid(combo)
    a_const = Fraction(1)
    for _, d in combo.terms:
        a_const = max(a_const, _max_power_over_factorial(abs(d)))
    k = max(a_const * sum((abs(c) for c, _ in combo.terms), Fraction(0)), Fraction(1))
    mu = moments_via_recursion(combo, m_max)
    passed = all(abs(mu[m]) <= k**m * factorial(m) for m in range(m_max + 1))
    even_passed = all(
        mu[2 * m] <= (2 * k) ** (2 * m) * factorial(2 * m) for m in range(m_max // 2 + 1)
    )
    return BoundCert(a_const, k, m_max, passed, even_passed)


def beta0_combo(p: MeixnerParams) -> TranslationCombo:
    """Expand the lowering operator of a beta = 0 system into translations.

    With delta = alpha the difference-quotient presentation of a- collapses
    to rational coefficients on T_alpha, T_{-alpha}, and I; zero coefficients
    are dropped and the remainder must sum to zero.
    """
    if p.beta != 0:
        raise InvalidParams(f"requires beta = 0, got beta = {p.beta}")
    if p.alpha <= 0:
        raise InvalidParams(f"requires alpha > 0, got alpha = {p.alpha}")
    d = p.derived()
    delta = p.alpha
    c_plus = p.t / (2 * delta) + (p.alpha0 * d.delta + p.alpha * d.tau) / (4 * d.delta)
    c_minus = -p.t / (2 * delta) + (p.alpha0 * d.delta + p.alpha * d.tau) / (4 * d.delta)
    c_zero = -(p.alpha0 * d.delta + p.alpha * d.tau) / (2 * d.delta)
    terms = [
        (c, s)
        for c, s in ((c_plus, delta), (c_minus, -delta), (c_zero, Fraction(0)))
        if c != 0
    ]
    combo = TranslationCombo(tuple(terms))
    total = sum((c for c, _ in combo.terms), Fraction(0))
    if total != 0:
        raise ArithmeticError(f"expansion lost mass: coefficients sum to {total}")
    return combo
