"""Polynomials over GF(2^m), cyclotomic cosets, and divisors of x^n - 1.

The factorization of x^n - 1 is built constructively: each cyclotomic
coset of q modulo n yields one irreducible factor, computed as the
minimal polynomial of beta^j over the base field, where beta is an n-th
root of unity in the splitting field.  Every candidate generator
polynomial of a cyclic code of length n is then a subset product of
these factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterator

from .galois import FieldSpec, _SMALLEST_IRREDUCIBLE, _prime_factors


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; coeffs[i] is the (integer-encoded) coefficient of x^i.

    Kept in canonical trimmed form: the leading coefficient is nonzero
    unless the polynomial is zero (empty coefficient tuple, degree -1).
    """

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficients not in trimmed canonical form")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def make(field: FieldSpec, coeffs) -> Polynomial:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            field.check(c)
        return Polynomial(field, tuple(cs))

    @staticmethod
    def zero(field: FieldSpec) -> Polynomial:
        return Polynomial(field, ())

    @staticmethod
    def one(field: FieldSpec) -> Polynomial:
        return Polynomial(field, (1,))

    @staticmethod
    def x_pow(field: FieldSpec, e: int, c: int = 1) -> Polynomial:
        if c == 0:
            return Polynomial.zero(field)
        return Polynomial(field, (0,) * e + (c,))

    @staticmethod
    def xn_minus_1(field: FieldSpec, n: int) -> Polynomial:
        # characteristic 2: x^n - 1 = x^n + 1
        return Polynomial(field, (1,) + (0,) * (n - 1) + (1,))

    # -- queries --------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def evaluate(self, point: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.mul(acc, point) ^ c
        return acc

    # -- arithmetic -----------------------------------------------------------

    def _same_field(self, other: Polynomial) -> None:
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._same_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return Polynomial.make(self.field, out)

    __sub__ = __add__

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._same_field(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.field)
        f = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] ^= f.mul(a, b)
        return Polynomial.make(f, out)

    def scale(self, c: int) -> Polynomial:
        f = self.field
        return Polynomial.make(f, [f.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        self._same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = f.inv(other.coeffs[-1])
        if self.degree < db:
            return Polynomial.zero(f), self
        quot = [0] * (self.degree - db + 1)
        for i in range(self.degree - db, -1, -1):
            c = rem[i + db]
            if c == 0:
                continue
            factor = f.mul(c, lead_inv)
            quot[i] = factor
            for j, b in enumerate(other.coeffs):
                rem[i + j] ^= f.mul(factor, b)
        return Polynomial.make(f, quot), Polynomial.make(f, rem)

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def monic(self) -> Polynomial:
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def reciprocal(self) -> Polynomial:
        """x^deg * p(1/x), trimmed (assumes nonzero constant term use-cases)."""
        return Polynomial.make(self.field, tuple(reversed(self.coeffs)))

    def conjugate(self) -> Polynomial:
        """Coefficient-wise conjugation (GF(4): x -> x^2)."""
        f = self.field
        return Polynomial.make(f, [f.conj(c) for c in self.coeffs])

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = [
            f"{c}*x^{i}" if i else f"{c}"
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return "Poly(" + " + ".join(terms) + ")"


def poly_arith(a: Polynomial, b: Polynomial, kind: str):
    """Dispatch helper: kind in {'add', 'mul', 'divmod'}."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "divmod":
        return divmod(a, b)
    raise ValueError(f"unknown operation {kind!r}")


def multiplicative_order(q: int, n: int) -> int:
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    order, v = 1, q % n
    while v != 1:
        v = (v * q) % n
        order += 1
    return order


def cyclotomic_cosets(n: int, q: int) -> list[list[int]]:
    """q-cyclotomic cosets {i, iq, iq^2, ...} mod n, sorted by minimum."""
    if gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) must be 1")
    seen = [False] * n
    cosets = []
    for i in range(n):
        if seen[i]:
            continue
        coset = []
        j = i
        while not seen[j]:
            seen[j] = True
            coset.append(j)
            j = (j * q) % n
        cosets.append(sorted(coset))
    return cosets


class _SplittingField:
    """An n-th root of unity together with projection onto the base field."""

    def __init__(self, field: FieldSpec, n: int):
        q = field.q
        order = multiplicative_order(q, n)
        if order == 1:
            big = field
            embed = {b: b for b in range(q)}
        else:
            degree = field.m * order
            if degree <= 16:
                big = FieldSpec(degree)
            else:
                big = FieldSpec(degree, _SMALLEST_IRREDUCIBLE[degree], _trusted=True)
            embed = self._subfield_embedding(field, big)
        self.field = field
        self.big = big
        self.project = {v: k for k, v in embed.items()}
        self.beta = self._root_of_unity(big, n)

    @staticmethod
    def _subfield_embedding(field: FieldSpec, big: FieldSpec) -> dict[int, int]:
        """Map base-field ints to big-field ints via a root of the base modulus."""
        if field.m == 1:
            return {0: 0, 1: 1}
        Q = big.q
        q = field.q
        # Elements of order dividing q-1 form the embedded subfield's units;
        # scan them for a root of the base modulus.
        gen = None
        for y in range(2, Q):
            c = big.pow(y, (Q - 1) // (q - 1))
            if c == 1:
                continue
            order = q - 1
            ok = True
            for p in _prime_factors(q - 1):
                if big.pow(c, (q - 1) // p) == 1:
                    ok = False
                    break
            if ok:
                gen = c
                break
        if gen is None:
            raise AssertionError("subfield generator not found")
        bits = [(field.modulus >> i) & 1 for i in range(field.m + 1)]
        root = None
        v = 1
        candidates = []
        for _ in range(q - 1):
            v = big.mul(v, gen) if candidates else gen
            candidates.append(v)
        for s in sorted(set(candidates)):
            acc = 0
            p = 1
            for bit in bits:
                if bit:
                    acc ^= p
                p = big.mul(p, s)
            if acc == 0:
                root = s
                break
        if root is None:
            raise AssertionError("base modulus has no root in the splitting field")
        embed = {}
        for b in range(q):
            acc = 0
            p = 1
            for i in range(field.m):
                if (b >> i) & 1:
                    acc ^= p
                p = big.mul(p, root)
            embed[b] = acc
        return embed

    @staticmethod
    def _root_of_unity(big: FieldSpec, n: int) -> int:
        Q = big.q
        if (Q - 1) % n != 0:
            raise AssertionError("splitting field does not contain n-th roots")
        primes = _prime_factors(n)
        for y in range(2, Q):
            b = big.pow(y, (Q - 1) // n)
            if b == 1:
                continue
            if all(big.pow(b, n // p) != 1 for p in primes):
                return b
        raise AssertionError(f"no element of order {n} found")


@lru_cache(maxsize=None)
def _factorization(n: int, field: FieldSpec) -> tuple[Polynomial, ...]:
    if gcd(n, field.q) != 1:
        raise ValueError(f"gcd(n={n}, q={field.q}) must be 1")
    if n == 1:
        return (Polynomial.make(field, (1, 1)),)
    split = _SplittingField(field, n)
    big, beta, project = split.big, split.beta, split.project
    factors = []
    for coset in cyclotomic_cosets(n, field.q):
        poly = Polynomial.one(big)
        for j in coset:
            root = big.pow(beta, j)
            poly = poly * Polynomial.make(big, (root, 1))
        try:
            coeffs = tuple(project[c] for c in poly.coeffs)
        except KeyError as exc:  # pragma: no cover - would indicate a bug
            raise AssertionError("minimal polynomial did not project down") from exc
        factors.append(Polynomial.make(field, coeffs))
    factors.sort(key=lambda p: (p.degree, p.coeffs))
    return tuple(factors)


def factor_xn_minus_1(n: int, field: FieldSpec) -> list[Polynomial]:
    """Distinct irreducible factors of x^n - 1 over the field, sorted."""
    return list(_factorization(n, field))


def divisor_generators(
    n: int,
    field: FieldSpec,
    degree_range: tuple[int, int] | None = None,
) -> Iterator[Polynomial]:
    """Yield every monic divisor of x^n - 1 with degree in the given range.

    Divisors are subset products of the irreducible factors; subsets are
    enumerated in ascending bitmask order over the sorted factor list, so
    the stream order is deterministic.
    """
    factors = _factorization(n, field)
    lo, hi = degree_range if degree_range is not None else (0, n)
    degrees = [p.degree for p in factors]
    for mask in range(1 << len(factors)):
        total = sum(d for i, d in enumerate(degrees) if (mask >> i) & 1)
        if not lo <= total <= hi:
            continue
        poly = Polynomial.one(field)
        for i, p in enumerate(factors):
            if (mask >> i) & 1:
                poly = poly * p
        yield poly
