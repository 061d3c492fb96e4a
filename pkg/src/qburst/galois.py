"""Characteristic-2 Galois field arithmetic.

Elements of GF(2^m) are represented as integers in [0, 2^m): the binary
digits of the integer are the coefficients of the element written in the
polynomial basis {1, x, ..., x^(m-1)} modulo an irreducible polynomial.
Addition is therefore XOR.  For GF(4) this gives the fixed encoding

    0 -> 0,   1 -> 1,   2 -> w,   3 -> w^2 = w + 1

(w denotes a root of x^2 + x + 1), which is the encoding used throughout
the tables and the generator-polynomial notation.

Default moduli are the Conway polynomials for m in [1, 8]; larger fields
(used internally as splitting fields) fall back to the lexicographically
smallest irreducible polynomial of that degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

# Conway polynomials (the representation used by most computer algebra
# systems), keyed by extension degree.  Bit i is the coefficient of x^i.
DEFAULT_MODULI: dict[int, int] = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1011011,
    7: 0b10000011,
    8: 0b100011101,
}

# Lexicographically smallest irreducible polynomial of each degree, used
# for splitting fields beyond the table-backed range.
_SMALLEST_IRREDUCIBLE: dict[int, int] = {
    1: 0x3, 2: 0x7, 3: 0xb, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83,
    8: 0x11b, 9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201b,
    14: 0x4021, 15: 0x8003, 16: 0x1002b, 17: 0x20009, 18: 0x40009,
    19: 0x80027, 20: 0x100009, 21: 0x200005, 22: 0x400003, 23: 0x800021,
    24: 0x100001b, 25: 0x2000009, 26: 0x400001b, 27: 0x8000027,
    28: 0x10000003, 29: 0x20000005, 30: 0x40000003, 31: 0x80000009,
    32: 0x10000008d, 33: 0x20000004b, 34: 0x40000001b, 35: 0x800000005,
    36: 0x1000000035, 37: 0x200000003f, 38: 0x4000000063, 39: 0x8000000011,
    40: 0x10000000039, 41: 0x20000000009, 42: 0x40000000027,
    43: 0x80000000059, 44: 0x100000000021, 45: 0x20000000001b,
    46: 0x400000000003, 47: 0x800000000021, 48: 0x100000000002d,
}

# Fields up to this degree get exp/log tables; larger ones multiply by
# shift-and-reduce.
_TABLE_DEGREE_LIMIT = 16


def gf2_poly_degree(p: int) -> int:
    """Degree of a GF(2)[x] polynomial packed into an int (-1 for zero)."""
    return p.bit_length() - 1


def gf2_poly_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def gf2_poly_mod(a: int, mod: int) -> int:
    """Remainder of a GF(2)[x] polynomial modulo another."""
    mb = mod.bit_length()
    ab = a.bit_length()
    while ab >= mb:
        a ^= mod << (ab - mb)
        ab = a.bit_length()
    return a


def gf2_poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_poly_mod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def find_reducible_factor(modulus: int) -> int | None:
    """Trial-divide by every polynomial of degree <= deg/2; return a factor.

    Returns None when the modulus is irreducible.  Intended for the public
    field range (degree <= 16) where the scan is instant.
    """
    d = gf2_poly_degree(modulus)
    if d < 1:
        return modulus
    for p in range(2, 1 << (d // 2 + 1)):
        if gf2_poly_degree(p) < 1:
            continue
        if gf2_poly_mod(modulus, p) == 0:
            return p
    return None


def _is_irreducible_fast(modulus: int) -> bool:
    """Rabin irreducibility test, used for large internal splitting fields."""
    d = gf2_poly_degree(modulus)
    if d < 1:
        return False

    def x_pow_2e(e: int) -> int:
        r = gf2_poly_mod(2, modulus)
        for _ in range(e):
            r = gf2_poly_mod(gf2_poly_mul(r, r), modulus)
        return r

    if x_pow_2e(d) != gf2_poly_mod(2, modulus):
        return False
    for p in _prime_factors(d):
        if gf2_poly_gcd(x_pow_2e(d // p) ^ 2, modulus) != 1:
            return False
    return True


class FieldSpec:
    """GF(2^m) with a fixed irreducible modulus.

    Immutable after construction; every operation is a pure function of
    integer-encoded elements, so instances are safe to share freely.
    """

    def __init__(self, m: int, modulus: int | None = None, _trusted: bool = False):
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if modulus is None:
            modulus = DEFAULT_MODULI.get(m) or _SMALLEST_IRREDUCIBLE.get(m)
            if modulus is None:
                raise ValueError(f"no default modulus shipped for m={m}")
        if gf2_poly_degree(modulus) != m:
            raise ValueError(
                f"modulus degree {gf2_poly_degree(modulus)} does not match m={m}"
            )
        if not _trusted:
            if m <= _TABLE_DEGREE_LIMIT:
                factor = find_reducible_factor(modulus)
                if factor is not None:
                    raise ValueError(
                        f"modulus {modulus:#x} is reducible: divisible by {factor:#x}"
                    )
            elif not _is_irreducible_fast(modulus):
                raise ValueError(f"modulus {modulus:#x} is reducible")
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.alpha = 1 if m == 1 else 2  # replaced below if x is not primitive
        if m > 1 and m <= _TABLE_DEGREE_LIMIT:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _mul_shift(self, a: int, b: int) -> int:
        r = 0
        mod = self.modulus
        top = self.q
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return r

    def _element_order(self, a: int) -> int:
        n = self.q - 1
        order = n
        for p in _prime_factors(n):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    def _build_tables(self) -> None:
        # Find a generator of the multiplicative group; x itself works for
        # every shipped Conway modulus.
        n = self.q - 1
        alpha = 2
        while True:
            order = 1
            v = alpha
            while v != 1:
                v = self._mul_shift(v, alpha)
                order += 1
                if order > n:
                    raise AssertionError("element order exceeded group order")
            if order == n:
                break
            alpha += 1
            if alpha >= self.q:
                raise AssertionError("no primitive element found")
        self.alpha = alpha
        exp = [1] * (2 * n)
        log = [0] * self.q
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = self._mul_shift(v, alpha)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log

    # -- arithmetic -----------------------------------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"element {a} out of range for GF(2^{self.m})")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_shift(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._exp is not None:
            return self._exp[(self.q - 1) - self._log[a]] if a != 1 else 1
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by 0")
        if a == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] - self._log[b] + (self.q - 1)]
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def conj(self, a: int) -> int:
        """Conjugation x -> x^2 of GF(4) over GF(2) (identity on GF(2))."""
        if self.m == 1:
            return a
        if self.m == 2:
            return self.mul(a, a)
        raise ValueError("conjugation is defined here for GF(2) and GF(4) only")

    def trace(self, a: int, base_m: int = 1) -> int:
        """Trace into the subfield GF(2^base_m)."""
        if self.m % base_m != 0:
            raise ValueError(f"base degree {base_m} does not divide {self.m}")
        step = 1 << base_m
        t = 0
        v = a
        for _ in range(self.m // base_m):
            t ^= v
            v = self.pow(v, step)
        return t

    def elements(self) -> range:
        return range(self.q)

    # -- identity -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(m={self.m}, modulus={self.modulus:#x})"


@lru_cache(maxsize=None)
def field_make(m: int, modulus: int | None = None) -> FieldSpec:
    """Construct (and cache) GF(2^m) with a verified irreducible modulus."""
    if not 1 <= m <= 16:
        raise ValueError(f"supported extension degrees are 1..16, got {m}")
    return FieldSpec(m, modulus)


GF2 = field_make(1)
GF4 = field_make(2)

OMEGA = 2
OMEGA_BAR = 3


@dataclass(frozen=True)
class FieldElement:
    """A field element bound to its field, with operator arithmetic."""

    value: int
    field: FieldSpec

    def __post_init__(self) -> None:
        self.field.check(self.value)

    def _coerce(self, other: FieldElement) -> int:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ValueError("operands belong to different fields")
        return other.value

    def __add__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.value ^ self._coerce(other), self.field)

    __sub__ = __add__

    def __mul__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field.mul(self.value, self._coerce(other)), self.field)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field.div(self.value, self._coerce(other)), self.field)

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field.pow(self.value, e), self.field)

    def conj(self) -> FieldElement:
        return FieldElement(self.field.conj(self.value), self.field)

    def trace(self, base_m: int = 1) -> FieldElement:
        return FieldElement(self.field.trace(self.value, base_m), self.field)

    def __bool__(self) -> bool:
        return self.value != 0


def arith(a: FieldElement, b: FieldElement, kind: str) -> FieldElement:
    """Binary field operation dispatch: kind in {'add', 'mul', 'div'}."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


@dataclass(frozen=True)
class SelfDualBasis:
    """A basis a_1..a_m of GF(2^m) over GF(2) with Tr(a_i a_j) = delta_ij."""

    field: FieldSpec
    elements: tuple[int, ...]

    @property
    def m(self) -> int:
        return self.field.m

    def gram(self) -> list[list[int]]:
        return [
            [self.field.trace(self.field.mul(a, b)) for b in self.elements]
            for a in self.elements
        ]

    def coordinates(self, value: int) -> tuple[int, ...]:
        """GF(2) coordinates of a field element in this basis.

        Self-duality makes the coordinate map a trace inner product:
        value = sum_j Tr(value * a_j) a_j.
        """
        f = self.field
        return tuple(f.trace(f.mul(value, a)) for a in self.elements)


def self_dual_basis(field: FieldSpec) -> SelfDualBasis:
    """Build a self-dual basis of GF(2^m) over GF(2).

    Diagonalizes the trace bilinear form B(a, b) = Tr(ab) to the identity
    by a Gram-Schmidt pass over the polynomial basis; when the residual
    form turns alternating (no vector with B(v, v) = 1 remains), three new
    orthonormal vectors are formed from the last accepted vector and a
    hyperbolic pair.  Deterministic; the result is verified before return.
    """
    f = field
    m = f.m

    def b(u: int, v: int) -> int:
        return f.trace(f.mul(u, v))

    rest = [1 << i for i in range(m)]
    chosen: list[int] = []
    while rest:
        pivot = next((u for u in rest if b(u, u) == 1), None)
        if pivot is not None:
            rest.remove(pivot)
            rest = [u ^ pivot if b(u, pivot) else u for u in rest]
            rest = [u for u in rest if u]
            chosen.append(pivot)
            continue
        # Residual form is alternating: fix up with a hyperbolic pair.
        if not chosen:
            raise AssertionError("trace form cannot be alternating on the full space")
        u = rest[0]
        w = next(x for x in rest[1:] if b(u, x) == 1)
        t = chosen.pop()
        rest.remove(u)
        rest.remove(w)
        trio = (t ^ u, t ^ w, t ^ u ^ w)
        fixed = []
        for x in rest:
            for y in trio:
                if b(x, y):
                    x ^= y
            fixed.append(x)
        rest = [x for x in fixed if x]
        chosen.extend(trio)

    basis = SelfDualBasis(f, tuple(chosen))
    gram = basis.gram()
    for i in range(m):
        for j in range(m):
            if gram[i][j] != (1 if i == j else 0):
                raise AssertionError("self-dual basis construction failed verification")
    return basis
