"""Seeded random draws of valid parameters and translation combinations.

Draws are rationals with small denominators inside alpha in [0, 3],
alpha0 in [-2, 2], beta in [-2, 2], t in (0, 3].  Each draw first picks one
of the six distribution classes so that every class appears with nontrivial
probability; a uniform box sample would almost never land on the
codimension-one Gamma locus or produce a valid finite-support system, since
beta < 0 requires t to be an integer multiple of -beta (the draw snaps t
accordingly).
"""

from __future__ import annotations

import math
from fractions import Fraction
from random import Random

from .exact import Rat
from .meixner import MeixnerParams, TranslationCombo

KINDS = ("Gaussian", "Poisson", "Pascal", "Gamma", "HyperbolicSecant", "Binomial")


def sample_rat(
    rng: Random,
    lo: Rat,
    hi: Rat,
    max_den: int = 6,
    strict_lo: bool = False,
) -> Fraction:
    """Uniform-ish rational in [lo, hi] (or (lo, hi]) with denominator <= max_den."""
    lo = Fraction(lo)
    hi = Fraction(hi)
    den = rng.randint(1, max_den)
    lo_num = math.floor(lo * den) + 1 if strict_lo else math.ceil(lo * den)
    hi_num = math.floor(hi * den)
    if hi_num < lo_num:
        lo_num = hi_num = math.ceil(hi * den)
    return Fraction(rng.randint(lo_num, hi_num), den)


def sample_params(rng: Random, min_dim: int = 1, kind: str | None = None) -> MeixnerParams:
    """One valid parameter set; `min_dim` forces at least that many support points.

    Only the Binomial kind has finite support, so min_dim constrains just the
    snapped beta < 0 draws; the other kinds always satisfy it.
    """
    if kind is None:
        kind = rng.choice(KINDS)
    alpha0 = sample_rat(rng, -2, 2)
    if kind == "Gaussian":
        return MeixnerParams(0, alpha0, 0, sample_rat(rng, 0, 3, strict_lo=True))
    if kind == "Poisson":
        alpha = sample_rat(rng, 0, 3, strict_lo=True)
        return MeixnerParams(alpha, alpha0, 0, sample_rat(rng, 0, 3, strict_lo=True))
    if kind == "Pascal":
        alpha = sample_rat(rng, 0, Fraction(14, 5), strict_lo=True)
        if rng.random() < 0.5:
            # ratio < 1 keeps delta = (ratio * alpha)^2 a rational square
            ratio = Fraction(rng.randint(1, 4), 5)
            beta = alpha**2 * (1 - ratio**2) / 4
        else:
            q = sample_rat(rng, 0, 1, strict_lo=True)
            if q == 1:
                q = Fraction(1, 2)
            beta = alpha**2 * q / 4
        return MeixnerParams(alpha, alpha0, beta, sample_rat(rng, 0, 3, strict_lo=True))
    if kind == "Gamma":
        alpha = sample_rat(rng, 0, Fraction(14, 5), strict_lo=True)
        return MeixnerParams(alpha, alpha0, alpha**2 / 4, sample_rat(rng, 0, 3, strict_lo=True))
    if kind == "HyperbolicSecant":
        alpha = sample_rat(rng, 0, 2)
        beta = sample_rat(rng, alpha**2 / 4, 2, max_den=8, strict_lo=True)
        return MeixnerParams(alpha, alpha0, beta, sample_rat(rng, 0, 3, strict_lo=True))
    if kind == "Binomial":
        n = rng.randint(max(min_dim - 1, 1), max(min_dim - 1, 1) + 8)
        t = sample_rat(rng, 0, min(3, 2 * n), strict_lo=True)
        alpha = sample_rat(rng, 0, 3)
        return MeixnerParams(alpha, alpha0, -t / n, t)
    raise ValueError(f"unknown kind {kind!r}")


def sample_params_delta0(rng: Random) -> MeixnerParams:
    """Valid parameters on the alpha^2 = 4*beta locus (Gaussian or Gamma kind)."""
    alpha = sample_rat(rng, 0, Fraction(14, 5))
    return MeixnerParams(
        alpha,
        sample_rat(rng, -2, 2),
        alpha**2 / 4,
        sample_rat(rng, 0, 3, strict_lo=True),
    )


def sample_combo(rng: Random, max_terms: int = 3) -> TranslationCombo:
    """Valid translation combination: Poisson rates on distinct nonzero shifts.

    Each term is c_i = rate_i * d_i with rate_i > 0, plus a zero-shift
    balancer that brings the coefficient total to zero.
    """
    count = rng.randint(1, max_terms)
    shifts: list[Fraction] = []
    while len(shifts) < count:
        d = sample_rat(rng, -3, 3, max_den=4)
        if d != 0 and d not in shifts:
            shifts.append(d)
    terms = []
    for d in shifts:
        rate = sample_rat(rng, 0, 3, max_den=4, strict_lo=True)
        terms.append((rate * d, d))
    balance = -sum(c for c, _ in terms)
    if balance != 0 or not terms:
        terms.append((balance, Fraction(0)))
    return TranslationCombo(tuple(terms))
