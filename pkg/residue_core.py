"""
Polyadic (m,n)-rings built from residue classes of ordinary integers.

The representatives a + b*k of a fixed class [a]_b are closed under the
m-ary sum and the n-ary product only for special arities; this module finds
those arities, the shape invariants I and J, and evaluates the operations.
"""
import logging
from dataclasses import asdict, dataclass, field
from math import gcd, prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

# Printed reference table values that disagree with the exact invariants.
KNOWN_MISPRINTS: Dict[Tuple[int, int], Dict[str, int]] = {
    (5, 7): {"I": 11},
}


class PolyadicError(ValueError):
    """Base error for polyadic ring construction."""


class ArityNotClosedError(PolyadicError):
    """Raised when an operation of the requested arity leaves the class."""

    def __init__(self, operation: str, arity: int, detail: str = ""):
        self.operation = operation
        self.arity = arity
        message = f"{arity}-ary {operation} is not closed"
        if detail:
            message += f" on {detail}"
        super().__init__(message)


@dataclass(frozen=True)
class ResidueClass:
    """The residue class [a]_b = {a + b*k : k in Z} with 0 <= a < b."""
    a: int
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise PolyadicError(f"modulus b must be positive, got {self.b}")
        if not 0 <= self.a <= self.b - 1:
            raise PolyadicError(
                f"representative a must satisfy 0 <= a <= b-1, got a={self.a}, b={self.b}"
            )

    @property
    def is_degenerate(self) -> bool:
        """True for a = 0, where the class is the binary ring bZ (Z itself when b = 1)."""
        return self.a == 0

    def __str__(self) -> str:
        return f"[{self.a}]_{self.b}"


@dataclass(frozen=True)
class ClassElement:
    """A representative r_k = a + b*k, carrying both its value and coordinate k."""
    value: int
    k: int


@dataclass(frozen=True)
class ArityShape:
    """Minimal closed arities (m, n) with their invariants I and J."""
    m: int
    n: int
    I: int
    J: int

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class ShapeCell:
    a: int
    b: int
    shape: Optional[ArityShape]
    misprint: Dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class ShapeTable:
    """Arity shapes over 1 <= a < b, 2 <= b <= b_max, a <= a_max."""
    a_max: int
    b_max: int
    cells: Tuple[ShapeCell, ...]

    def get(self, a: int, b: int) -> Optional[ArityShape]:
        for cell in self.cells:
            if cell.a == a and cell.b == b:
                return cell.shape
        raise KeyError((a, b))


def representative(cls: ResidueClass, k: int) -> ClassElement:
    """Generic representative r_k(a, b) = a + b*k."""
    return ClassElement(cls.a + cls.b * k, k)


def contains(cls: ResidueClass, x: int) -> bool:
    """Congruence x = a (mod b) with the non-negative remainder convention."""
    return x % cls.b == cls.a


def element(cls: ResidueClass, value: int) -> ClassElement:
    """
    Wrap an integer as a class element.

    Raises:
        PolyadicError: if value is not in the class
    """
    if not contains(cls, value):
        raise PolyadicError(f"{value} is not in {cls}")
    return ClassElement(value, (value - cls.a) // cls.b)


def is_add_closed(cls: ResidueClass, m: int) -> bool:
    """m*a = a (mod b): the sum of any m representatives stays in the class."""
    return ((m - 1) * cls.a) % cls.b == 0


def is_mul_closed(cls: ResidueClass, n: int) -> bool:
    """a^n = a (mod b): the product of any n representatives stays in the class."""
    return pow(cls.a, n, cls.b) == cls.a % cls.b


def min_add_arity(cls: ResidueClass, m_cap: Optional[int] = None) -> Optional[int]:
    """
    Smallest m in [2, m_cap] for which m-ary addition is closed.

    Args:
        cls: The residue class
        m_cap: Upper end of the scan (default b + 1, always enough)

    Returns:
        The minimal arity, or None if none exists up to m_cap
    """
    if m_cap is None:
        m_cap = cls.b + 1
    if m_cap < 2:
        raise PolyadicError(f"m_cap must be at least 2, got {m_cap}")
    for m in range(2, m_cap + 1):
        if is_add_closed(cls, m):
            return m
    return None


def add_arity_closed_form(cls: ResidueClass) -> int:
    """Minimal addition arity 1 + b/gcd(a, b), valid for a >= 1."""
    if cls.a < 1:
        raise PolyadicError("closed form needs a >= 1")
    return 1 + cls.b // gcd(cls.a, cls.b)


def min_mul_arity(cls: ResidueClass, n_cap: Optional[int] = None) -> Optional[int]:
    """
    Smallest n in [2, n_cap] for which n-ary multiplication is closed.

    The powers a^n mod b are eventually periodic with period at most b, so
    if a ever recurs it does so by n = b + 1; that is the default cap.
    """
    if n_cap is None:
        n_cap = cls.b + 1
    if n_cap < 2:
        raise PolyadicError(f"n_cap must be at least 2, got {n_cap}")
    target = cls.a % cls.b
    power = target
    for n in range(2, n_cap + 1):
        power = power * cls.a % cls.b
        if power == target:
            return n
    logger.debug("no closed multiplication arity for %s up to %d", cls, n_cap)
    return None


def closed_add_arities(cls: ResidueClass, count: int) -> List[int]:
    """The first `count` closed addition arities, m = 1 + l*b/gcd(a, b)."""
    if cls.a == 0:
        return list(range(2, 2 + count))
    step = cls.b // gcd(cls.a, cls.b)
    return [1 + step * level for level in range(1, count + 1)]


def closed_mul_arities(cls: ResidueClass, limit: int) -> List[int]:
    """Every n in [2, limit] for which n-ary multiplication is closed."""
    return [n for n in range(2, limit + 1) if is_mul_closed(cls, n)]


def _exact_quotient(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise PolyadicError(f"{numerator} is not divisible by {denominator}")
    return quotient


def arity_shape(cls: ResidueClass, n_cap: Optional[int] = None) -> Optional[ArityShape]:
    """
    Arity shape (a, b) => (m, n) with invariants I = (m-1)a/b and J = (a^n - a)/b.

    Returns:
        The shape for the minimal arities, or None when no closed
        multiplication arity exists up to the cap
    """
    if cls.a < 1:
        raise PolyadicError(f"arity shape needs a >= 1; {cls} is the degenerate class")
    m = min_add_arity(cls)
    n = min_mul_arity(cls, n_cap)
    if m is None or n is None:
        return None
    return ArityShape(
        m=m,
        n=n,
        I=_exact_quotient((m - 1) * cls.a, cls.b),
        J=_exact_quotient(cls.a ** n - cls.a, cls.b),
    )


def _as_elements(cls: ResidueClass, elems: Sequence[Union[ClassElement, int]]) -> List[ClassElement]:
    result = []
    for elem in elems:
        value = elem.value if isinstance(elem, ClassElement) else elem
        result.append(element(cls, value))
    return result


def _check_count(arity: int, elems: Sequence) -> None:
    if len(elems) != arity:
        raise PolyadicError(f"expected {arity} operands, got {len(elems)}")


def nu(cls: ResidueClass, m: int, elems: Sequence[Union[ClassElement, int]]) -> ClassElement:
    """
    m-ary addition of representatives.

    The coordinate of the result is k_1 + ... + k_m + I with I = (m-1)a/b.

    Raises:
        ArityNotClosedError: if m*a != a (mod b)
    """
    if not is_add_closed(cls, m):
        raise ArityNotClosedError("addition", m, str(cls))
    _check_count(m, elems)
    return element(cls, sum(e.value for e in _as_elements(cls, elems)))


def mu(cls: ResidueClass, n: int, elems: Sequence[Union[ClassElement, int]]) -> ClassElement:
    """
    n-ary multiplication of representatives.

    Raises:
        ArityNotClosedError: if a^n != a (mod b)
    """
    if not is_mul_closed(cls, n):
        raise ArityNotClosedError("multiplication", n, str(cls))
    _check_count(n, elems)
    return element(cls, prod(e.value for e in _as_elements(cls, elems)))


def add_querelement(cls: ResidueClass, m: int, r: Union[ClassElement, int]) -> ClassElement:
    """Querelement (2-m)*r, the unique solution of nu_m[r, ..., r, q] = r."""
    if not is_add_closed(cls, m):
        raise ArityNotClosedError("addition", m, str(cls))
    (r,) = _as_elements(cls, [r])
    return element(cls, (2 - m) * r.value)


def additive_zero(cls: ResidueClass, m: int) -> Optional[ClassElement]:
    """Neutral z with nu_m[z, ..., z, r] = r; (m-1)z = 0 forces z = 0."""
    if not is_add_closed(cls, m):
        raise ArityNotClosedError("addition", m, str(cls))
    return element(cls, 0) if contains(cls, 0) else None


def is_zeroless(cls: ResidueClass, m: int) -> bool:
    return additive_zero(cls, m) is None


def mul_identity(cls: ResidueClass, n: int) -> Optional[ClassElement]:
    """
    Polyadic identity e with mu_n[e, ..., e, r] = r for every r.

    This forces e^(n-1) = 1 over Z, so only 1 and -1 are candidates.
    """
    if not is_mul_closed(cls, n):
        raise ArityNotClosedError("multiplication", n, str(cls))
    for candidate in (1, -1):
        if contains(cls, candidate) and candidate ** (n - 1) == 1:
            return element(cls, candidate)
    return None


def shape_table(a_max: int, b_max: int, n_cap: Optional[int] = None) -> ShapeTable:
    """
    Arity shapes for every class 1 <= a <= min(a_max, b-1), 2 <= b <= b_max.

    Args:
        a_max: Largest representative
        b_max: Largest modulus
        n_cap: Optional override of the b + 1 multiplication scan cap

    Returns:
        ShapeTable with cells ordered by a, then b; None marks an empty cell
    """
    if a_max < 1:
        raise PolyadicError(f"a_max must be at least 1, got {a_max}")
    if b_max < 2:
        raise PolyadicError(f"b_max must be at least 2, got {b_max}")
    cells = []
    for a in range(1, min(a_max, b_max - 1) + 1):
        for b in range(a + 1, b_max + 1):
            shape = arity_shape(ResidueClass(a, b), n_cap)
            cells.append(ShapeCell(a, b, shape, dict(KNOWN_MISPRINTS.get((a, b), {}))))
    logger.debug("shape table %dx%d: %d cells", a_max, b_max, len(cells))
    return ShapeTable(a_max, b_max, tuple(cells))
