"""Exact arithmetic for odd prime fields and Laurent polynomial rings.

The coefficient rings used throughout the library are F_p for an odd prime p
and the Laurent polynomial rings F_p[x1^+-, ..., xd^+-], optionally extended
by a loop parameter T with non-negative exponents.  The spatial variables
carry the inversion involution x_i -> x_i^-1; the involution fixes T and the
coefficients.

Polynomials are sparse maps from exponent tuples to nonzero residues, kept
normalized so that equality is map equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, DomainError, RingMismatch


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldElement:
    """A residue in F_p for an odd prime p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        if not _is_prime(p) or p == 2:
            raise DomainError(f"modulus must be an odd prime, got {p}")
        self.p = p
        self.value = value % p

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise RingMismatch(f"moduli differ: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return FieldElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.value - other.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse mod {self.p}")
        return FieldElement(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        return (
            isinstance(other, FieldElement)
            and self.p == other.p
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"FieldElement({self.value}, p={self.p})"


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch exact residue arithmetic: op in {'add', 'mul', 'inv', 'neg'}."""
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if not isinstance(b, FieldElement):
        raise DomainError(f"binary op {op!r} needs two field elements")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown field operation {op!r}")


def is_square(a: FieldElement) -> bool:
    """Euler criterion: a^((p-1)/2) == 1 for nonzero a."""
    if a.value == 0:
        raise DomainError("square class of zero is undefined")
    return pow(a.value, (a.p - 1) // 2, a.p) == 1


def least_non_residue(p: int) -> FieldElement:
    """Smallest positive quadratic non-residue mod p; the canonical theta."""
    if not _is_prime(p) or p == 2:
        raise DomainError(f"modulus must be an odd prime, got {p}")
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) != 1:
            return FieldElement(a, p)
    raise DomainError(f"no non-residue mod {p}; is {p} prime?")  # pragma: no cover


@dataclass(frozen=True)
class RingDescriptor:
    """F_p[x1^+-,...,xd^+-], optionally extended by the loop variable T.

    The involution inverts every x_i and fixes T.  p = 2 is rejected: the
    machinery built on top requires 2 to be invertible.
    """

    p: int
    spatial_vars: int = 0
    has_T: bool = False

    def __post_init__(self):
        if not _is_prime(self.p) or self.p == 2:
            raise DomainError(f"p must be an odd prime, got {self.p}")
        if self.spatial_vars < 0:
            raise DomainError("spatial variable count must be >= 0")

    @property
    def nexponents(self) -> int:
        return self.spatial_vars + (1 if self.has_T else 0)

    def with_T(self) -> "RingDescriptor":
        return RingDescriptor(self.p, self.spatial_vars, True)

    def drop_T(self) -> "RingDescriptor":
        return RingDescriptor(self.p, self.spatial_vars, False)

    def zero(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self, {})

    def one(self) -> "LaurentPolynomial":
        return self.constant(1)

    def constant(self, c: int | FieldElement) -> "LaurentPolynomial":
        if isinstance(c, FieldElement):
            if c.p != self.p:
                raise RingMismatch(f"constant mod {c.p} in ring mod {self.p}")
            c = c.value
        return LaurentPolynomial(self, {(0,) * self.nexponents: c % self.p})

    def x(self, i: int, power: int = 1) -> "LaurentPolynomial":
        """The monomial x_{i+1}^power (i is zero-based)."""
        if not 0 <= i < self.spatial_vars:
            raise DomainError(f"variable index {i} out of range")
        exps = [0] * self.nexponents
        exps[i] = power
        return LaurentPolynomial(self, {tuple(exps): 1})

    def T(self, power: int = 1) -> "LaurentPolynomial":
        if not self.has_T:
            raise DomainError("ring has no T variable")
        if power < 0:
            raise DomainError("T only carries non-negative exponents")
        exps = [0] * self.nexponents
        exps[-1] = power
        return LaurentPolynomial(self, {tuple(exps): 1})

    def monomial(self, exponents, c: int = 1) -> "LaurentPolynomial":
        return LaurentPolynomial(self, {tuple(exponents): c % self.p})


class LaurentPolynomial:
    """Sparse Laurent polynomial with residue coefficients.

    Terms map exponent tuples (spatial exponents first, T exponent last when
    present) to nonzero residues mod p.  Instances are treated as immutable.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingDescriptor, terms: dict):
        cleaned = {}
        width = ring.nexponents
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != width:
                raise DomainError(
                    f"exponent tuple {exps} has length {len(exps)}, expected {width}"
                )
            if ring.has_T and exps[-1] < 0:
                raise DomainError("T exponent must be non-negative")
            c = (c.value if isinstance(c, FieldElement) else c) % ring.p
            if c:
                cleaned[exps] = c
        self.ring = ring
        self.terms = cleaned

    # -- ring plumbing -------------------------------------------------

    def _check(self, other: "LaurentPolynomial"):
        if self.ring != other.ring:
            raise RingMismatch(f"rings differ: {self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return LaurentPolynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPolynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        p = self.ring.p
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return LaurentPolynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers only exist for units; invert first")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.ring.constant(other)
        return (
            isinstance(other, LaurentPolynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """Units are single monomials with no T content."""
        if len(self.terms) != 1:
            return False
        (exps,) = self.terms
        return not (self.ring.has_T and exps[-1] != 0)

    def unit_inverse(self) -> "LaurentPolynomial":
        if not self.is_unit():
            raise DivisionByZero(f"{self} is not a unit")
        ((exps, c),) = self.terms.items()
        inv = pow(c, -1, self.ring.p)
        return LaurentPolynomial(self.ring, {tuple(-e for e in exps): inv})

    def involute(self) -> "LaurentPolynomial":
        """Invert every spatial exponent; T and coefficients stay fixed."""
        d = self.ring.spatial_vars
        out = {}
        for exps, c in self.terms.items():
            flipped = tuple(-e for e in exps[:d]) + exps[d:]
            out[flipped] = c
        return LaurentPolynomial(self.ring, out)

    def augment(self) -> FieldElement:
        """Coefficient of the zero exponent tuple (the degree-zero part)."""
        if self.ring.has_T:
            raise DomainError("evaluate T before augmenting")
        zero = (0,) * self.ring.nexponents
        return FieldElement(self.terms.get(zero, 0), self.ring.p)

    def eval_T(self, t: int | FieldElement) -> "LaurentPolynomial":
        """Substitute a scalar for T; the result lives in the ring without T."""
        if not self.ring.has_T:
            raise DomainError("ring has no T variable to evaluate")
        t = (t.value if isinstance(t, FieldElement) else t) % self.ring.p
        target = self.ring.drop_T()
        out: dict = {}
        for exps, c in self.terms.items():
            e, k = exps[:-1], exps[-1]
            out[e] = (out.get(e, 0) + c * pow(t, k, self.ring.p)) % self.ring.p
        return LaurentPolynomial(target, out)

    def lift_T(self) -> "LaurentPolynomial":
        """View a T-free polynomial inside the ring extended by T."""
        if self.ring.has_T:
            raise DomainError("polynomial already lives in a ring with T")
        target = self.ring.with_T()
        return LaurentPolynomial(target, {e + (0,): c for e, c in self.terms.items()})

    # -- display -------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        names = [f"x{i + 1}" for i in range(self.ring.spatial_vars)]
        if self.ring.spatial_vars == 1:
            names = ["x"]
        if self.ring.has_T:
            names.append("T")
        pieces = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            factors = [
                f"{n}^{e}" if e != 1 else n for n, e in zip(names, exps) if e != 0
            ]
            if not factors:
                pieces.append(str(c))
            elif c == 1:
                pieces.append("*".join(factors))
            else:
                pieces.append(f"{c}*" + "*".join(factors))
        return " + ".join(pieces)


def poly_arith(
    f: LaurentPolynomial, g: LaurentPolynomial | None, op: str
) -> LaurentPolynomial:
    """Dispatch sparse polynomial arithmetic: op in {'add', 'mul', 'neg'}."""
    if op == "neg":
        return -f
    if not isinstance(g, LaurentPolynomial):
        raise DomainError(f"binary op {op!r} needs two polynomials")
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise DomainError(f"unknown polynomial operation {op!r}")


def involute(f: LaurentPolynomial) -> LaurentPolynomial:
    return f.involute()


def augment(f: LaurentPolynomial) -> FieldElement:
    return f.augment()


def eval_T(f: LaurentPolynomial, t: int | FieldElement) -> LaurentPolynomial:
    return f.eval_T(t)
