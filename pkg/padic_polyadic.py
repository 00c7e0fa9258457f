"""
Polyadic (m,n)-rings over p-adic analogs of residue classes.

The class [a]_b is the set of representatives a + b*k with a, b, k in Z_p
(truncated to N digits). Closure of the m-ary sum and n-ary product reduces
to p-adic divisibility of (m-1)a and a^n - a by b, which in turn only depends
on a mod p^v with v the valuation of b.
"""
import logging
import random
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, List, Optional, Sequence, Tuple, Union

from models import CheckResult, VerificationReport
from padic_core import (
    AtLeast,
    PAdicError,
    PAdicInt,
    add,
    check_prime,
    extend,
    from_integer,
    inverse,
    is_zero,
    mul,
    shift_right,
    to_digit_string,
    to_integer,
    to_signed_integer,
    truncate,
    valuation,
    valuation_floor,
)
from residue_core import ArityNotClosedError, PolyadicError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PAdicClass:
    """p-adic analog [a]_b of a residue class; b must not be the zero truncation."""
    a: PAdicInt
    b: PAdicInt
    v: int = field(init=False)

    def __post_init__(self):
        if self.a.p != self.b.p or self.a.precision != self.b.precision:
            raise PAdicError("a and b must share p and precision")
        v = valuation(self.b)
        if isinstance(v, AtLeast):
            raise PAdicError("b is the zero truncation; divisibility by b is undecidable")
        object.__setattr__(self, "v", v)

    @property
    def p(self) -> int:
        return self.a.p

    @property
    def precision(self) -> int:
        return self.a.precision

    @property
    def is_degenerate(self) -> bool:
        return is_zero(self.a)

    def __str__(self) -> str:
        return (
            f"[{to_signed_integer(self.a)}]_{to_signed_integer(self.b)}"
            f" in Z_{self.p} (N={self.precision})"
        )


@dataclass(frozen=True)
class PAdicRepresentative:
    """Representative r_k = a + b*k together with its coordinate k."""
    k: PAdicInt
    value: PAdicInt


@dataclass(frozen=True)
class LiftSolution:
    """Residues of a mod p^v for which both closure conditions hold."""
    p: int
    m: int
    n: int
    v: int
    precision: int
    admissible: Tuple[int, ...]
    levels: Tuple[Tuple[int, ...], ...] = ()  # admissible prefixes mod p^(i+1)

    @property
    def modulus(self) -> int:
        return self.p ** self.v

    @property
    def free_from(self) -> int:
        return self.v

    def admits(self, a: PAdicInt) -> bool:
        """Whether a p-adic a (any digits past index v) is admissible."""
        if self.v == 0:
            return True
        return to_integer(truncate(a, self.v)) in self.admissible

    def to_dict(self):
        return {
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "v": self.v,
            "modulus": self.modulus,
            "admissible": list(self.admissible),
            "free_from": self.free_from,
        }


def padic_class(p: int, precision: int, a: Union[int, PAdicInt], b: Union[int, PAdicInt]) -> PAdicClass:
    """Build a class from integers (embedded) or ready-made p-adic integers."""
    if isinstance(a, int):
        a = from_integer(p, precision, a)
    if isinstance(b, int):
        b = from_integer(p, precision, b)
    return PAdicClass(a, b)


def p_divide(c: PAdicInt, b: PAdicInt) -> Optional[PAdicInt]:
    """
    Exact p-adic division c / b.

    Shifts p^v out of both operands and multiplies by the inverse of the
    unit part of b. Only N - v digits of the quotient are determined, so the
    result carries precision N - v; extend() it to multiply back.

    Args:
        c: Dividend
        b: Divisor, not the zero truncation

    Returns:
        The quotient, or None when valuation(c) < valuation(b)
    """
    if c.p != b.p or c.precision != b.precision:
        raise PAdicError("dividend and divisor must share p and precision")
    v = valuation(b)
    if isinstance(v, AtLeast):
        raise PAdicError("division by the zero truncation")
    if valuation_floor(c) < v:
        return None
    return mul(shift_right(c, v), inverse(shift_right(b, v)))


def in_class(cls: PAdicClass, x: PAdicInt) -> bool:
    """x = a (Mod_p b): x - a is divisible by b at the working precision."""
    return valuation_floor(x - cls.a) >= cls.v


def representative_p(cls: PAdicClass, k: Union[int, PAdicInt]) -> PAdicRepresentative:
    """Generic representative a + b*k."""
    if isinstance(k, int):
        k = from_integer(cls.p, cls.precision, k)
    return PAdicRepresentative(k=k, value=cls.a + cls.b * k)


def as_representative(cls: PAdicClass, x: Union[int, PAdicInt, PAdicRepresentative]) -> PAdicRepresentative:
    """
    Recover the coordinate of a class member.

    Raises:
        PolyadicError: if x is not in the class
    """
    if isinstance(x, PAdicRepresentative):
        if not in_class(cls, x.value):
            raise PolyadicError(f"{to_digit_string(x.value)} is not in {cls}")
        return x
    if isinstance(x, int):
        x = from_integer(cls.p, cls.precision, x)
    k = p_divide(x - cls.a, cls.b)
    if k is None:
        raise PolyadicError(f"{to_digit_string(x)} is not in {cls}")
    return PAdicRepresentative(k=extend(k, cls.precision), value=x)


def is_add_closed_p(cls: PAdicClass, m: int) -> bool:
    return valuation_floor((m - 1) * cls.a) >= cls.v


def is_mul_closed_p(cls: PAdicClass, n: int) -> bool:
    return valuation_floor(cls.a ** n - cls.a) >= cls.v


def m_closure_invariant(cls: PAdicClass, m: int) -> Optional[PAdicInt]:
    """Addition shape invariant I with (m-1)a = b*I, or None if m-ary addition is not closed."""
    if m < 2:
        raise PolyadicError(f"arity must be at least 2, got {m}")
    return p_divide((m - 1) * cls.a, cls.b)


def n_closure_invariant(cls: PAdicClass, n: int) -> Optional[PAdicInt]:
    """Multiplication shape invariant J with a^n - a = b*J, or None if not closed."""
    if n < 2:
        raise PolyadicError(f"arity must be at least 2, got {n}")
    return p_divide(cls.a ** n - cls.a, cls.b)


def min_add_arity_p(cls: PAdicClass, m_cap: int) -> Optional[int]:
    for m in range(2, m_cap + 1):
        if is_add_closed_p(cls, m):
            return m
    return None


def min_mul_arity_p(cls: PAdicClass, n_cap: int) -> Optional[int]:
    for n in range(2, n_cap + 1):
        if is_mul_closed_p(cls, n):
            return n
    return None


def _representatives(cls: PAdicClass, arity: int, reps: Sequence) -> List[PAdicRepresentative]:
    if len(reps) != arity:
        raise PolyadicError(f"expected {arity} operands, got {len(reps)}")
    return [as_representative(cls, r) for r in reps]


def nu_p(cls: PAdicClass, m: int, reps: Sequence[Union[PAdicRepresentative, PAdicInt, int]]) -> PAdicRepresentative:
    """
    m-ary addition of representatives.

    The coordinate of the sum is k_1 + ... + k_m + I.

    Raises:
        ArityNotClosedError: if (m-1)a is not divisible by b
    """
    invariant = m_closure_invariant(cls, m)
    if invariant is None:
        raise ArityNotClosedError("addition", m, str(cls))
    reps = _representatives(cls, m, reps)
    value = reduce(add, (r.value for r in reps))
    k = reduce(add, (r.k for r in reps)) + extend(invariant, cls.precision)
    return PAdicRepresentative(k=k, value=value)


def mu_p(cls: PAdicClass, n: int, reps: Sequence[Union[PAdicRepresentative, PAdicInt, int]]) -> PAdicRepresentative:
    """
    n-ary multiplication of representatives.

    Raises:
        ArityNotClosedError: if a^n - a is not divisible by b
    """
    if not is_mul_closed_p(cls, n):
        raise ArityNotClosedError("multiplication", n, str(cls))
    reps = _representatives(cls, n, reps)
    return as_representative(cls, reduce(mul, (r.value for r in reps)))


def quer_k(k: PAdicInt, m: int, invariant: PAdicInt) -> PAdicInt:
    """Coordinate (2-m)k - I of the additive querelement of r_k."""
    return (2 - m) * k - extend(invariant, k.precision)


def p_querelement(cls: PAdicClass, m: int, rep: Union[PAdicRepresentative, PAdicInt, int]) -> PAdicRepresentative:
    """The representative r_kbar with nu_m[r_k, ..., r_k, r_kbar] = r_k."""
    invariant = m_closure_invariant(cls, m)
    if invariant is None:
        raise ArityNotClosedError("addition", m, str(cls))
    rep = as_representative(cls, rep)
    return representative_p(cls, quer_k(rep.k, m, invariant))


def _closure_holds(p: int, level: int, candidate: int, m: int, n: int) -> bool:
    a = from_integer(p, level, candidate)
    return valuation_floor((m - 1) * a) >= level and valuation_floor(a ** n - a) >= level


def lift_digits(p: int, m: int, n: int, v: int, precision: int) -> LiftSolution:
    """
    Find the digits of a, one at a time, for which [a]_b is an (m,n)-ring.

    Level i extends every admissible prefix mod p^i by each digit
    0..p-1 and keeps the candidates whose truncation mod p^(i+1) satisfies
    both closure conditions. After level v every further digit is free.

    Args:
        p: Prime
        m: Addition arity
        n: Multiplication arity
        v: Valuation of b (b = p^v * unit)
        precision: Working precision N, at least v

    Returns:
        LiftSolution with the admissible residues of a mod p^v, ascending
    """
    check_prime(p)
    if m < 2 or n < 2:
        raise PolyadicError(f"arities must be at least 2, got m={m}, n={n}")
    if not 1 <= v <= precision:
        raise PolyadicError(f"need 1 <= v <= N, got v={v}, N={precision}")
    prefixes = [0]
    levels = []
    for i in range(v):
        weight = p ** i
        prefixes = sorted(
            prefix + alpha * weight
            for prefix in prefixes
            for alpha in range(p)
            if _closure_holds(p, i + 1, prefix + alpha * weight, m, n)
        )
        levels.append(tuple(prefixes))
        logger.debug("lift p=%d m=%d n=%d level %d: %d prefixes", p, m, n, i, len(prefixes))
    return LiftSolution(p, m, n, v, precision, tuple(prefixes), tuple(levels))


def lift_for_modulus(p: int, m: int, n: int, b: PAdicInt) -> LiftSolution:
    """lift_digits for an explicit b; a unit b admits every a."""
    if b.p != p:
        raise PAdicError(f"b is {b.p}-adic, expected {p}-adic")
    v = valuation(b)
    if isinstance(v, AtLeast):
        raise PAdicError("b is the zero truncation")
    if v == 0:
        if m < 2 or n < 2:
            raise PolyadicError(f"arities must be at least 2, got m={m}, n={n}")
        return LiftSolution(p, m, n, 0, b.precision, (0,), ())
    return lift_digits(p, m, n, v, b.precision)


def _random_representative(cls: PAdicClass, rng: random.Random) -> PAdicRepresentative:
    return representative_p(cls, from_integer(cls.p, cls.precision, rng.randrange(cls.a.modulus)))


def _show(values: Sequence[PAdicInt]) -> str:
    return "[" + ", ".join(str(to_signed_integer(value)) for value in values) + "]"


def _closure_check(cls: PAdicClass, name: str, arity: int, combine: Callable,
                   samples: int, rng: random.Random) -> CheckResult:
    check = CheckResult(name=name, samples=samples + 1)
    canonical = [cls.a] * arity
    trials = [canonical] + [
        [_random_representative(cls, rng).value for _ in range(arity)] for _ in range(samples)
    ]
    for values in trials:
        result = combine(values)
        if not in_class(cls, result):
            check.passed = False
            check.witness = f"{name} of {_show(values)} = {to_signed_integer(result)} is not in {cls}"
            break
    return check


def _associativity_check(cls: PAdicClass, name: str, arity: int, combine: Callable,
                         spots: int, rng: random.Random) -> CheckResult:
    check = CheckResult(name=name, samples=spots)
    for _ in range(spots):
        xs = [_random_representative(cls, rng).value for _ in range(2 * arity - 1)]
        outcomes = []
        for j in range(arity):
            inner = combine(xs[j:j + arity])
            outcomes.append(combine(xs[:j] + [inner] + xs[j + arity:]))
        if any(outcome != outcomes[0] for outcome in outcomes):
            check.passed = False
            check.witness = f"bracketings of {_show(xs)} give {_show(outcomes)}"
            break
    return check


def _sum(values):
    return reduce(add, values)


def _product(values):
    return reduce(mul, values)


def verify_ring(cls: PAdicClass, m: int, n: int, samples: int = 100,
                seed: Optional[int] = None) -> VerificationReport:
    """
    Check that [a]_b is an (m,n)-ring at the working precision.

    Closure of both operations and the querelement law are checked on
    `samples` random representative tuples; associativity and distributivity
    on samples // 10 spot checks (distributivity at a random position each
    time). Refutations carry a witness.

    Args:
        cls: The p-adic class
        m: Addition arity
        n: Multiplication arity
        samples: Number of random tuples per check
        seed: Seed for the sampler

    Returns:
        VerificationReport listing every check
    """
    if m < 2 or n < 2:
        raise PolyadicError(f"arities must be at least 2, got m={m}, n={n}")
    rng = random.Random(seed)
    spots = max(1, samples // 10)
    add_closed = is_add_closed_p(cls, m)
    mul_closed = is_mul_closed_p(cls, n)
    report = VerificationReport(
        p=cls.p,
        precision=cls.precision,
        a=to_digit_string(cls.a),
        b=to_digit_string(cls.b),
        m=m,
        n=n,
        degenerate=cls.is_degenerate,
    )
    logger.debug("verifying %s as a (%d,%d)-ring with %d samples", cls, m, n, samples)

    report.checks.append(_closure_check(cls, f"{m}-ary addition closure", m, _sum, samples, rng))
    report.checks.append(_closure_check(cls, f"{n}-ary multiplication closure", n, _product, samples, rng))

    if add_closed:
        check = CheckResult(name="querelement law", samples=samples)
        for _ in range(samples):
            rep = _random_representative(cls, rng)
            quer = p_querelement(cls, m, rep)
            total = _sum([rep.value] * (m - 1) + [quer.value])
            if total != rep.value or not in_class(cls, quer.value):
                check.passed = False
                check.witness = (
                    f"r = {to_signed_integer(rep.value)}, querelement "
                    f"{to_signed_integer(quer.value)} sums to {to_signed_integer(total)}"
                )
                break
        report.checks.append(check)
        report.checks.append(_associativity_check(cls, "addition associativity", m, _sum, spots, rng))
    else:
        report.checks.append(CheckResult(name="querelement law", skipped="addition not closed"))
        report.checks.append(CheckResult(name="addition associativity", skipped="addition not closed"))

    if mul_closed:
        report.checks.append(_associativity_check(cls, "multiplication associativity", n, _product, spots, rng))
    else:
        report.checks.append(CheckResult(name="multiplication associativity", skipped="multiplication not closed"))

    if add_closed and mul_closed:
        check = CheckResult(name="distributivity", samples=spots)
        for _ in range(spots):
            rs = [_random_representative(cls, rng).value for _ in range(m)]
            ss = [_random_representative(cls, rng).value for _ in range(n - 1)]
            position = rng.randrange(n)
            left = _product(ss[:position] + [_sum(rs)] + ss[position:])
            right = _sum([_product(ss[:position] + [r] + ss[position:]) for r in rs])
            if left != right:
                check.passed = False
                check.witness = f"sums {_show(rs)} and factors {_show(ss)} at position {position}"
                break
        report.checks.append(check)
    else:
        report.checks.append(CheckResult(name="distributivity", skipped="an operation is not closed"))

    logger.debug("verification of %s finished: passed=%s", cls, report.passed)
    return report
