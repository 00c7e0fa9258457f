"""
Truncated p-adic integer arithmetic for the polyadic ring toolkit.

A p-adic integer is kept as a little-endian vector of N digits, i.e. its
value modulo p^N. All ring operations are carried out digit by digit with
carries, the way the positional expansion is written by hand.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple, Union

from sympy import isprime

logger = logging.getLogger(__name__)

_POSITIONAL_RE = re.compile(r"^\.([0-9.]+) \((\d+)-adic\)$")
_DIGIT_STRING_RE = re.compile(r"^(\d+):(\d+):([0-9,\s]*)$")


class PAdicError(ValueError):
    """Raised for invalid p-adic parameters or incompatible operands."""


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    """
    Validate that p is a prime.

    Args:
        p: Candidate prime

    Returns:
        p itself

    Raises:
        PAdicError: if p is not a prime >= 2
    """
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise PAdicError(f"p must be a prime, got {p!r}")
    return p


@dataclass(frozen=True)
class AtLeast:
    """Valuation sentinel for the zero truncation: the true valuation is >= bound."""
    bound: int

    def __str__(self) -> str:
        return f"≥{self.bound}"


@dataclass(frozen=True)
class PAdicInt:
    """A p-adic integer truncated to `precision` digits (little-endian)."""
    p: int
    precision: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if self.precision < 1:
            raise PAdicError(f"precision must be positive, got {self.precision}")
        if len(self.digits) != self.precision:
            raise PAdicError(
                f"expected {self.precision} digits, got {len(self.digits)}"
            )
        for digit in self.digits:
            if not 0 <= digit < self.p:
                raise PAdicError(f"digit {digit} out of range for p={self.p}")

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    def __str__(self) -> str:
        return to_positional_string(self)

    def _coerce(self, other: Union["PAdicInt", int]) -> "PAdicInt":
        if isinstance(other, PAdicInt):
            return other
        if isinstance(other, int):
            return from_integer(self.p, self.precision, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return neg(self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return power(self, exponent)


@dataclass(frozen=True)
class PartialSums:
    """Reduced coherent representation y_1, ..., y_N of a p-adic integer."""
    p: int
    values: Tuple[int, ...]

    def is_coherent(self) -> bool:
        """Check y_{i+1} = y_i (mod p^i) and 0 <= y_i < p^i for every level."""
        for i, y in enumerate(self.values, start=1):
            if not 0 <= y < self.p ** i:
                return False
        for i in range(1, len(self.values)):
            if (self.values[i] - self.values[i - 1]) % self.p ** i:
                return False
        return True


def _same_ring(x: PAdicInt, y: PAdicInt) -> None:
    if x.p != y.p or x.precision != y.precision:
        raise PAdicError(
            f"operands disagree: p={x.p}, N={x.precision} vs p={y.p}, N={y.precision}"
        )


def from_integer(p: int, precision: int, x: int) -> PAdicInt:
    """
    Embed an ordinary integer into Z_p truncated to `precision` digits.

    Negative integers are embedded through their canonical residue mod p^N,
    which is the usual expansion of a negative integer (-1 -> ...1111 in Z_2).

    Args:
        p: Prime base
        precision: Number of digits N
        x: Any integer

    Returns:
        The truncated p-adic integer
    """
    check_prime(p)
    if precision < 1:
        raise PAdicError(f"precision must be positive, got {precision}")
    rest = x % p ** precision
    digits = []
    for _ in range(precision):
        rest, digit = divmod(rest, p)
        digits.append(digit)
    return PAdicInt(p, precision, tuple(digits))


def zero(p: int, precision: int) -> PAdicInt:
    return PAdicInt(p, precision, (0,) * precision)


def to_integer(x: PAdicInt) -> int:
    """Canonical value of x in [0, p^N)."""
    value = 0
    for digit in reversed(x.digits):
        value = value * x.p + digit
    return value


def to_signed_integer(x: PAdicInt) -> int:
    """Balanced value of x in (-p^N/2, p^N/2]; recovers small negative embeddings."""
    value = to_integer(x)
    if 2 * value > x.modulus:
        value -= x.modulus
    return value


def add(x: PAdicInt, y: PAdicInt) -> PAdicInt:
    """Digit-wise sum with carries, mod p^N."""
    _same_ring(x, y)
    digits: List[int] = []
    carry = 0
    for alpha, beta in zip(x.digits, y.digits):
        carry, digit = divmod(alpha + beta + carry, x.p)
        digits.append(digit)
    return PAdicInt(x.p, x.precision, tuple(digits))


def neg(x: PAdicInt) -> PAdicInt:
    """Additive inverse: complement every digit to p-1, then add one."""
    digits: List[int] = []
    carry = 1
    for alpha in x.digits:
        carry, digit = divmod(x.p - 1 - alpha + carry, x.p)
        digits.append(digit)
    return PAdicInt(x.p, x.precision, tuple(digits))


def sub(x: PAdicInt, y: PAdicInt) -> PAdicInt:
    _same_ring(x, y)
    return add(x, neg(y))


def mul(x: PAdicInt, y: PAdicInt) -> PAdicInt:
    """Digit product: column sums first, then one carry pass; digits beyond N are discarded."""
    _same_ring(x, y)
    p, precision = x.p, x.precision
    columns = [0] * precision
    for i, alpha in enumerate(x.digits):
        if alpha == 0:
            continue
        for j, beta in enumerate(y.digits[:precision - i]):
            columns[i + j] += alpha * beta
    digits: List[int] = []
    carry = 0
    for column in columns:
        carry, digit = divmod(column + carry, p)
        digits.append(digit)
    return PAdicInt(p, precision, tuple(digits))


def power(x: PAdicInt, exponent: int) -> PAdicInt:
    """x ** exponent by repeated squaring."""
    if exponent < 0:
        raise PAdicError("negative exponents are not defined in Z_p truncations")
    result = from_integer(x.p, x.precision, 1)
    base = x
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result


def is_zero(x: PAdicInt) -> bool:
    return not any(x.digits)


def valuation(x: PAdicInt) -> Union[int, AtLeast]:
    """
    p-adic valuation of x: the index of its first nonzero digit.

    Returns:
        An int, or AtLeast(N) when all N digits are zero
    """
    for i, digit in enumerate(x.digits):
        if digit:
            return i
    return AtLeast(x.precision)


def valuation_floor(x: PAdicInt) -> int:
    """Valuation with the zero sentinel replaced by the precision N."""
    v = valuation(x)
    return v.bound if isinstance(v, AtLeast) else v


def truncate(x: PAdicInt, precision: int) -> PAdicInt:
    """Keep the first `precision` digits (reduction mod p^precision)."""
    if not 1 <= precision <= x.precision:
        raise PAdicError(f"cannot truncate N={x.precision} to {precision}")
    return PAdicInt(x.p, precision, x.digits[:precision])


def extend(x: PAdicInt, precision: int) -> PAdicInt:
    """Zero-pad x to `precision` digits."""
    if precision < x.precision:
        raise PAdicError(f"cannot extend N={x.precision} to {precision}")
    return PAdicInt(x.p, precision, x.digits + (0,) * (precision - x.precision))


def shift_right(x: PAdicInt, places: int) -> PAdicInt:
    """
    Exact division by p^places; the result carries N - places digits.

    Raises:
        PAdicError: if x is not divisible by p^places or no digits would remain
    """
    if not 0 <= places < x.precision:
        raise PAdicError(f"cannot shift N={x.precision} digits by {places}")
    if any(x.digits[:places]):
        raise PAdicError(f"{to_digit_string(x)} is not divisible by {x.p}^{places}")
    return PAdicInt(x.p, x.precision - places, x.digits[places:])


def inverse(x: PAdicInt) -> PAdicInt:
    """
    Multiplicative inverse of a unit, lifted one digit at a time.

    Raises:
        PAdicError: if the first digit is zero (x is not a unit)
    """
    if x.digits[0] == 0:
        raise PAdicError(f"{to_digit_string(x)} is not a unit")
    p = x.p
    value = to_integer(x)
    c = pow(x.digits[0], -1, p)
    b = c
    for i in range(2, x.precision + 1):
        b = (b - (value * b - 1) * c) % p ** i
    return from_integer(p, x.precision, b)


def partial_sums(x: PAdicInt) -> PartialSums:
    """Partial sums y_i = a_0 + a_1 p + ... + a_{i-1} p^{i-1}, i = 1..N."""
    values = []
    y = 0
    weight = 1
    for digit in x.digits:
        y += digit * weight
        weight *= x.p
        values.append(y)
    return PartialSums(x.p, tuple(values))


def comp_less(x: PAdicInt, y: PAdicInt, strict: bool = True) -> bool:
    """
    Componentwise order over the available digits.

    Args:
        x: Left operand
        y: Right operand
        strict: Compare digits with < instead of <=

    Returns:
        True if every digit of x is below (or at most) the matching digit of y
    """
    _same_ring(x, y)
    if strict:
        return all(alpha < beta for alpha, beta in zip(x.digits, y.digits))
    return all(alpha <= beta for alpha, beta in zip(x.digits, y.digits))


def to_positional_string(x: PAdicInt) -> str:
    """Render digits right to left, e.g. '.0011 (2-adic)'; p > 10 separates digits with dots."""
    separator = "." if x.p > 10 else ""
    body = separator.join(str(digit) for digit in reversed(x.digits))
    return f".{body} ({x.p}-adic)"


def parse_positional_string(text: str) -> PAdicInt:
    """Inverse of to_positional_string."""
    match = _POSITIONAL_RE.match(text.strip())
    if not match:
        raise PAdicError(f"not a positional p-adic string: {text!r}")
    body, p = match.group(1), int(match.group(2))
    check_prime(p)
    if p > 10:
        parts = body.split(".")
    else:
        parts = list(body)
    if not parts or any(not part.isdigit() for part in parts):
        raise PAdicError(f"malformed digits in {text!r}")
    digits = tuple(int(part) for part in reversed(parts))
    return PAdicInt(p, len(digits), digits)


def to_digit_string(x: PAdicInt) -> str:
    """Render as 'p:N:a_0,a_1,...,a_{N-1}'."""
    return f"{x.p}:{x.precision}:" + ",".join(str(digit) for digit in x.digits)


def parse_digit_string(text: str) -> PAdicInt:
    """Inverse of to_digit_string."""
    match = _DIGIT_STRING_RE.match(text.strip())
    if not match:
        raise PAdicError(f"not a digit string 'p:N:digits': {text!r}")
    p, precision = int(match.group(1)), int(match.group(2))
    entries = [entry.strip() for entry in match.group(3).split(",")]
    if not all(entries):
        raise PAdicError(f"empty digit entry in {text!r}")
    digits = tuple(int(entry) for entry in entries)
    logger.debug("parsed digit string p=%d N=%d digits=%s", p, precision, digits)
    return PAdicInt(p, precision, digits)
