"""Arbitrary-precision special functions.

Everything here takes an explicit PrecisionContext and works inside gmpy2's
thread-local MPFR context, so results are deterministic and thread-safe.
Shared memo tables (Bernoulli, Stieltjes, the von Mangoldt sieve) are guarded
by locks with initialize-once semantics.

Algorithms:
  log_gamma   argument-raising recurrence + Stirling series with Bernoulli terms
  digamma     recurrence + asymptotic expansion
  hurwitz_zeta  Euler-Maclaurin with adaptive correction order
  harmonic    exact rational accumulation (binary splitting), rounded once
  bernoulli   exact rationals from integer tangent numbers
  stieltjes   Euler-Maclaurin applied to sum (log j)^k / j - (log N)^{k+1}/(k+1)
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr, mpc, mpq, mpz

from .errors import (CapacityError, DomainError, EscalationExhaustedError,
                     PoleError)
from .precision import PrecisionContext, bits

__all__ = [
    "log_gamma", "digamma", "hurwitz_zeta", "hurwitz_zeta_int_ladder",
    "harmonic", "bernoulli", "bernoulli_over_factorial", "stieltjes",
    "stieltjes_batch", "von_mangoldt_sieve", "VonMangoldtTable",
]


# ---------------------------------------------------------------------------
# Bernoulli numbers (exact rationals, memoized)
# ---------------------------------------------------------------------------

_bern_lock = threading.Lock()
_tangent: list = [mpz(0), mpz(1)]  # T_1 = 1; index 0 unused


def _extend_tangent(m: int) -> None:
    """Grow the tangent-number table to T_m (integer triangle recurrence)."""
    global _tangent
    cur = len(_tangent) - 1
    if cur >= m:
        return
    t = list(_tangent) + [mpz(0)] * (m - cur)
    for k in range(cur + 1, m + 1):
        t[k] = (k - 1) * t[k - 1]
    # re-run the in-place triangle from scratch: cheap relative to usage and
    # avoids bookkeeping of partially applied passes
    t = [mpz(0)] * (m + 1)
    t[1] = mpz(1)
    for k in range(2, m + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, m + 1):
        for j in range(k, m + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    _tangent = t


def bernoulli(k: int) -> mpq:
    """Exact Bernoulli number B_k for even k >= 2 (also accepts 0 and 1)."""
    if k == 0:
        return mpq(1)
    if k == 1:
        return mpq(-1, 2)
    if k < 0 or k % 2 == 1:
        return mpq(0)
    m = k // 2
    with _bern_lock:
        _extend_tangent(m)
        t = _tangent[m]
    sign = 1 if m % 2 == 1 else -1
    four_k = mpz(4) ** m
    return mpq(sign * 2 * m * t, four_k * (four_k - 1))


_bf_lock = threading.Lock()
_bf_cache: list = []  # _bf_cache[m] = B_{2m}/(2m)! as mpq, m >= 1 at index m-1


def bernoulli_over_factorial(m: int) -> mpq:
    """B_{2m}/(2m)! as an exact rational (Euler-Maclaurin coefficient)."""
    with _bf_lock:
        while len(_bf_cache) < m:
            j = len(_bf_cache) + 1
            _bf_cache.append(bernoulli(2 * j) / math.factorial(2 * j))
        return _bf_cache[m - 1]


# ---------------------------------------------------------------------------
# Harmonic numbers (exact rational accumulation, rounded once)
# ---------------------------------------------------------------------------

def _harmonic_split(a: int, b: int):
    """Unreduced (num, den) for sum_{j=a}^{b} 1/j by binary splitting."""
    if a == b:
        return mpz(1), mpz(a)
    mid = (a + b) // 2
    n1, d1 = _harmonic_split(a, mid)
    n2, d2 = _harmonic_split(mid + 1, b)
    return n1 * d2 + n2 * d1, d1 * d2


def harmonic(n: int, ctx: PrecisionContext) -> mpfr:
    """h_n = 1 + 1/2 + ... + 1/n, h_0 = 0, correctly rounded at working bits."""
    if n < 0:
        raise DomainError("harmonic: n must be >= 0")
    with ctx.working():
        if n == 0:
            return mpfr(0)
        num, den = _harmonic_split(1, n)
        return mpfr(mpq(num, den))


def harmonic_exact(n: int) -> mpq:
    """Exact rational h_n (test/oracle helper)."""
    if n == 0:
        return mpq(0)
    num, den = _harmonic_split(1, n)
    return mpq(num, den)


# ---------------------------------------------------------------------------
# log Gamma and digamma
# ---------------------------------------------------------------------------

def _stirling_threshold(working_bits: int) -> int:
    # Stirling series bottoms out near exp(-2 pi |z|); require that floor
    # below 2^-(working+8).
    return int(math.ceil(0.1151 * (working_bits + 8))) + 12


def _stirling_log_gamma(w, working_bits: int, strict: bool):
    """Stirling series at w (|w| past threshold); truncates at the minimum term."""
    half = mpfr(1) / 2
    acc = (w - half) * gmpy2.log(w) - w + gmpy2.log(2 * gmpy2.const_pi()) / 2
    winv2 = 1 / (w * w)
    pow_w = 1 / w  # w^{-(2j-1)}
    stop = mpfr(2) ** (-(working_bits + 8))
    prev_mag = None
    j = 1
    while True:
        coeff = bernoulli(2 * j) / (2 * j * (2 * j - 1))
        term = mpfr(coeff.numerator) / mpfr(coeff.denominator) * pow_w
        mag = abs(term)
        if prev_mag is not None and mag >= prev_mag:
            # divergence onset: asymptotic series truncated at its minimum term
            if strict and prev_mag > stop:
                raise EscalationExhaustedError(
                    "Stirling series cannot reach the requested precision "
                    f"at |z| = {abs(w)}")
            break
        acc += term
        if mag < stop:
            break
        prev_mag = mag
        pow_w *= winv2
        j += 1
        if j > 4 * working_bits:
            raise EscalationExhaustedError("Stirling series failed to terminate")
    return acc


def log_gamma(z, ctx: PrecisionContext, stirling_threshold: int | None = None):
    """Principal-branch log Gamma(z) for Re z > 0 (real or complex).

    Recurrence raises the argument past a Stirling threshold, then sums the
    Stirling series with Bernoulli coefficients. Raises PoleError at
    non-positive integers; arguments with Re z <= 0 are outside the supported
    domain (nothing downstream needs them).
    """
    with ctx.working():
        is_complex = isinstance(z, (complex, mpc))
        z = mpc(z) if is_complex else mpfr(z)
        re = z.real if is_complex else z
        if re <= 0:
            if (not is_complex or z.imag == 0) and gmpy2.floor(re) == re:
                raise PoleError(f"log_gamma pole at z = {re}")
            raise DomainError("log_gamma: Re z > 0 required")
        strict = stirling_threshold is None
        thr = stirling_threshold if stirling_threshold is not None \
            else _stirling_threshold(ctx.working_bits)
        m = int(max(0, math.ceil(thr - float(re))))
        w = z + m
        acc = _stirling_log_gamma(w, ctx.working_bits, strict)
        for j in range(m):
            acc -= gmpy2.log(z + j)
        return acc


def digamma(x, ctx: PrecisionContext, threshold: int | None = None) -> mpfr:
    """psi(x) for real x > 0: recurrence plus asymptotic expansion.

    Agrees with the series psi(x) = -euler - 1/x + sum_l x/(l(l+x)) within
    the tail bound x/L when that series is truncated at L terms (tested).
    """
    with ctx.working():
        x = mpfr(x)
        if x <= 0:
            raise DomainError("digamma: x > 0 required")
        thr = threshold if threshold is not None \
            else _stirling_threshold(ctx.working_bits)
        m = int(max(0, math.ceil(thr - float(x))))
        w = x + m
        acc = gmpy2.log(w) - 1 / (2 * w)
        winv2 = 1 / (w * w)
        pw = winv2  # w^{-2j}
        stop = mpfr(2) ** (-(ctx.working_bits + 8))
        prev_mag = None
        j = 1
        while True:
            coeff = bernoulli(2 * j) / (2 * j)
            term = mpfr(coeff.numerator) / mpfr(coeff.denominator) * pw
            mag = abs(term)
            if prev_mag is not None and mag >= prev_mag:
                break
            acc -= term
            if mag < stop:
                break
            prev_mag = mag
            pw *= winv2
            j += 1
            if j > 4 * ctx.working_bits:
                raise EscalationExhaustedError("digamma expansion failed to terminate")
        for i in range(m):
            acc -= 1 / (x + i)
        return acc


# ---------------------------------------------------------------------------
# Hurwitz zeta
# ---------------------------------------------------------------------------

def _em_shift_count(target_bits: int, im_s: float) -> int:
    return max(int(math.ceil(0.7 * target_bits)), int(math.ceil(abs(im_s))), 8)


def hurwitz_zeta(s, q, ctx: PrecisionContext):
    """zeta(s, q) = sum_{j>=0} (j+q)^{-s} continued to s != 1, q > 0.

    Euler-Maclaurin: N shifted terms, then (N+q)^{1-s}/(s-1) + (N+q)^{-s}/2
    plus Bernoulli corrections of adaptively grown order; N doubles (up to the
    escalation budget) if the correction series stalls before reaching
    2^-working_bits.
    """
    with ctx.working():
        is_complex = isinstance(s, (complex, mpc))
        s = mpc(s) if is_complex else mpfr(s)
        q = mpfr(q)
        if q <= 0:
            raise DomainError("hurwitz_zeta: q > 0 required")
        if s == 1:
            raise PoleError("hurwitz_zeta pole at s = 1")
        im = float(s.imag) if is_complex else 0.0
        n_shift = _em_shift_count(ctx.target_bits, im)
        for attempt in range(ctx.max_escalations + 1):
            val, ok = _hurwitz_em(s, q, n_shift, ctx.working_bits)
            if ok:
                return val
            n_shift *= 2
        raise EscalationExhaustedError(
            f"hurwitz_zeta({s}, {q}): correction series stalled")


def _hurwitz_em(s, q, n_shift: int, working_bits: int):
    a = n_shift + q
    acc = gmpy2.zero()
    for j in range(n_shift):
        acc += (j + q) ** (-s)
    acc += a ** (1 - s) / (s - 1)
    apow = a ** (-s)
    acc += apow / 2
    # corrections: B_{2m}/(2m)! * (s)_{2m-1} * a^{-s-2m+1}
    ainv2 = 1 / * (a * a) if False else 1 / (a * a)
    poch = s  # (s)_{2m-1} running product
    apow = apow / a * (a * a) if False else apow  # keep a^{-s}; multiply ainv2 per step
    cur = apow / a * a  # a^{-s}
    cur = apow
    stop = mpfr(2) ** (-(working_bits + 8))
    scale = max(abs(acc), mpfr(1))
    prev_mag = None
    m = 1
    while True:
        term = _mpq_to_cur(bernoulli_over_factorial(m)) * poch * cur * (1 / a) * a * a / (a * a) if False else _mpq_to_cur(bernoulli_over_factorial(m)) * poch * cur / a * a / a
        # term = B/(2m)! * (s)_{2m-1} * a^{-s-2m+1}
        mag = abs(term)
        if prev_mag is not None and mag > prev_mag and mag > stop * scale:
            return acc, False
        acc += term
        if mag < stop * scale:
            return acc, True
        prev_mag = mag
        poch = poch * (s + 2 * m - 1) * (s + 2 * m)
        cur = cur * ainv2
        m += 1
        if m > 8 * working_bits:
            return acc, False


def _mpq_to_cur(x: mpq):
    return mpfr(x.numerator) / mpfr(x.denominator)
