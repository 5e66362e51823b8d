"""Precision plumbing: explicit contexts over MPFR/MPC (via gmpy2).

Every numeric operation in the library takes a PrecisionContext; there is no
hidden global precision. Internally gmpy2's thread-local context stack is used
through the `bits(...)` context manager, so concurrent callers with their own
contexts do not interfere.

Arithmetic at a fixed precision is correctly rounded (MPFR), hence
deterministic: identical inputs and context give bit-identical results.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr, mpc, mpq, mpz

from .errors import DomainError

__all__ = [
    "PrecisionContext", "bits", "to_mpfr", "const_pi", "const_euler",
    "decimal_digits_for_bits", "format_mpfr",
]


@dataclass(frozen=True)
class PrecisionContext:
    """Working/target binary precision plus the escalation budget.

    working_bits: precision at which intermediates are carried.
    target_bits: accuracy requested of results.
    max_escalations: retries allowed to adaptive loops before they give up;
        0 disables escalation entirely (used to demonstrate cancellation
        failures deliberately).
    """

    working_bits: int
    target_bits: int
    max_escalations: int = 4

    def __post_init__(self):
        if self.target_bits < 1:
            raise DomainError("target_bits must be positive")
        if self.working_bits < self.target_bits + 64:
            raise DomainError("working_bits must be at least target_bits + 64")
        if self.max_escalations < 0:
            raise DomainError("max_escalations must be >= 0")

    @classmethod
    def of(cls, target_bits: int, guard: int = 64, max_escalations: int = 4):
        return cls(working_bits=target_bits + guard, target_bits=target_bits,
                   max_escalations=max_escalations)

    def working(self):
        """Context manager entering the working precision."""
        return bits(self.working_bits)

    def escalated(self, extra_bits: int) -> "PrecisionContext":
        """Derived context whose working precision grows by extra_bits."""
        return PrecisionContext(self.working_bits + extra_bits,
                                self.target_bits, self.max_escalations)


@contextmanager
def bits(prec: int):
    """Thread-local gmpy2 context at the given binary precision."""
    ctx = gmpy2.context(precision=prec, allow_complex=False)
    token = gmpy2.get_context()
    gmpy2.set_context(ctx)
    try:
        yield ctx
    finally:
        gmpy2.set_context(token)


def to_mpfr(x, prec=None):
    """Convert int/str/float/Fraction-like/mpq/mpfr at the current (or given) precision."""
    if prec is None:
        return mpfr(x)
    with bits(prec):
        return mpfr(x)


def const_pi():
    return gmpy2.const_pi()


def const_euler():
    return gmpy2.const_euler()


def decimal_digits_for_bits(target_bits: int) -> int:
    """Significant decimal digits rendered for a given target precision."""
    return max(3, math.ceil(target_bits * 0.301))


def format_mpfr(x, target_bits: int) -> str:
    """Deterministic scientific rendering at ceil(target_bits * 0.301) digits.

    MPFR's base-10 conversion rounds to nearest, so the output is a pure
    function of (value, target_bits): byte-identical across runs.
    """
    d = decimal_digits_for_bits(target_bits)
    if gmpy2.is_nan(x):
        return "nan"
    if gmpy2.is_infinite(x):
        return "-inf" if x < 0 else "inf"
    if x == 0:
        return "0." + "0" * (d - 1) + "e+00"
    digits, exp, _ = x.digits(10, d)
    sign = ""
    if digits.startswith("-"):
        sign, digits = "-", digits[1:]
    mantissa = digits[0] + "." + digits[1:]
    return f"{sign}{mantissa}e{exp - 1:+03d}"


def exact_decimal(x) -> str:
    """Exact decimal representation of an mpfr (binary floats are finite decimals).

    Round-trips bit-exactly through mpq at the original precision.
    """
    if x == 0:
        return "0"
    q = mpq(x)
    num, den = q.numerator, q.denominator
    # den is a power of two; scale to a power of ten
    f = den.bit_length() - 1
    scaled = num * mpz(5) ** f  # num/2^f = scaled / 10^f
    s = str(scaled)
    neg = s.startswith("-")
    if neg:
        s = s[1:]
    if f == 0:
        body = s
    else:
        s = s.rjust(f + 1, "0")
        body = s[:-f] + "." + s[-f:]
        body = body.rstrip("0").rstrip(".")
    return ("-" if neg else "") + body
