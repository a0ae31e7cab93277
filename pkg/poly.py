#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
poly.py

Sparse multivariate polynomials over exact rationals.

- Coefficients are fractions.Fraction, never floats.
- Monomials are sorted tuples of (var index, exponent) pairs; () is the constant.
- Canonical order is graded lexicographic: total degree first, then the
  ascending sequence of variable indices with repetition (x1^2 < x1*x2 < x2^2).
- Polynomial values are immutable; every operation returns a fresh value.
- Exposes the Polynomial class plus module-level helpers:
    add(p, q), mul(p, q), boolean_reduce(p, vars), monomials_up_to(n, d),
    evaluate(p, point), substitute(p, mapping)

Text form (logs, files): terms joined by " + " in canonical order, coefficients
as "p/q" (or "p"), variables by table name with "^e" for e > 1, e.g.
  -1/2 + -1/2*x1 + -1/2*x2
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, groupby
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from errors import StructuralError

Monomial = Tuple[Tuple[int, int], ...]
Scalar = Union[int, Fraction]

ONE: Monomial = ()

INDICATOR = "indicator"
AUXILIARY = "auxiliary"
ROLES = (INDICATOR, AUXILIARY)


# ---- rationals ----

def as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    return value if isinstance(value, Fraction) else Fraction(value)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---- monomials ----

def mono_degree(mono: Monomial) -> int:
    return sum(exp for _, exp in mono)


def mono_sequence(mono: Monomial) -> Tuple[int, ...]:
    """Variable indices repeated by exponent, ascending."""
    seq: List[int] = []
    for var, exp in mono:
        seq.extend([var] * exp)
    return tuple(seq)


def mono_key(mono: Monomial) -> Tuple[int, Tuple[int, ...]]:
    seq = mono_sequence(mono)
    return (len(seq), seq)


def mono_from_sequence(seq: Iterable[int]) -> Monomial:
    return tuple((var, len(list(group))) for var, group in groupby(sorted(seq)))


def mono_from_vars(var_ids: Iterable[int]) -> Monomial:
    """Squarefree monomial over the given variables."""
    return tuple((var, 1) for var in sorted(set(var_ids)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged: Dict[int, int] = dict(a)
    for var, exp in b:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


def mono_text(mono: Monomial, names: Tuple[str, ...]) -> str:
    parts = []
    for var, exp in mono:
        parts.append(names[var] if exp == 1 else f"{names[var]}^{exp}")
    return "*".join(parts)


# ---- variable tables ----

@dataclass(frozen=True)
class VariableTable:
    """Ordered (name, role) entries; a VarId is a position in this table."""

    entries: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        names = [name for name, _ in self.entries]
        if len(set(names)) != len(names):
            raise StructuralError("variable names must be unique")
        for name, role in self.entries:
            if role not in ROLES:
                raise StructuralError(f"unknown role {role!r} for variable {name}")

    @classmethod
    def build(cls, names: Iterable[str], role: str = INDICATOR) -> "VariableTable":
        return cls(tuple((name, role) for name in names))

    def extended(self, names: Iterable[str], role: str) -> "VariableTable":
        return VariableTable(self.entries + tuple((name, role) for name in names))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    def name(self, var: int) -> str:
        return self.entries[var][0]

    def role(self, var: int) -> str:
        return self.entries[var][1]

    def index(self, name: str) -> int:
        for i, (entry_name, _) in enumerate(self.entries):
            if entry_name == name:
                return i
        raise StructuralError(f"unknown variable {name!r}")

    def indicator_ids(self) -> Tuple[int, ...]:
        return tuple(i for i, (_, role) in enumerate(self.entries) if role == INDICATOR)

    def var(self, var: int) -> "Polynomial":
        if not 0 <= var < self.size:
            raise StructuralError(f"variable index {var} outside table of size {self.size}")
        return Polynomial(self, {((var, 1),): Fraction(1)})

    def const(self, value: Scalar) -> "Polynomial":
        return Polynomial(self, {ONE: as_fraction(value)})

    def zero(self) -> "Polynomial":
        return Polynomial(self)


# ---- polynomials ----

class Polynomial:
    """Immutable sparse polynomial over a VariableTable."""

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: VariableTable, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.table = table
        cleaned = {}
        for mono, coeff in (terms or {}).items():
            coeff = as_fraction(coeff)
            if coeff:
                cleaned[mono] = coeff
        self._terms: Tuple[Tuple[Monomial, Fraction], ...] = tuple(
            sorted(cleaned.items(), key=lambda item: mono_key(item[0]))
        )
        self._hash = None

    # ---- views ----

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms)

    def monomials(self) -> List[Monomial]:
        return [mono for mono, _ in self._terms]

    def coefficient(self, mono: Monomial) -> Fraction:
        for candidate, coeff in self._terms:
            if candidate == mono:
                return coeff
        return Fraction(0)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return mono_degree(self._terms[-1][0])

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(mono == ONE for mono, _ in self._terms)

    def constant_term(self) -> Fraction:
        return self.coefficient(ONE)

    def __len__(self) -> int:
        return len(self._terms)

    # ---- arithmetic ----

    def _check(self, other: "Polynomial") -> None:
        if other.table is not self.table and other.table != self.table:
            raise StructuralError("polynomials live over different variable tables")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.table.const(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for mono, coeff in other._terms:
            merged[mono] = merged.get(mono, 0) + coeff
        return Polynomial(self.table, merged)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.table, {mono: -coeff for mono, coeff in self._terms})

    def __sub__(self, other) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = as_fraction(factor)
        return Polynomial(self.table, {mono: coeff * factor for mono, coeff in self._terms})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        product: Dict[Monomial, Fraction] = {}
        for mono_a, coeff_a in self._terms:
            for mono_b, coeff_b in other._terms:
                mono = mono_mul(mono_a, mono_b)
                product[mono] = product.get(mono, 0) + coeff_a * coeff_b
        return Polynomial(self.table, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = self.table.const(1)
        for _ in range(exponent):
            result = result * self
        return result

    # ---- comparison ----

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._terms == self.table.const(other)._terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table == other.table and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, self._terms))
        return self._hash

    # ---- text ----

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        names = self.table.names
        parts = []
        for mono, coeff in self._terms:
            if mono == ONE:
                parts.append(format_rational(coeff))
            elif coeff == 1:
                parts.append(mono_text(mono, names))
            else:
                parts.append(f"{format_rational(coeff)}*{mono_text(mono, names)}")
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


# ---- module-level operations ----

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def product(polys: Iterable[Polynomial], table: VariableTable) -> Polynomial:
    """Product with the empty-product convention (an empty list gives 1)."""
    result = table.const(1)
    for p in polys:
        result = result * p
    return result


def boolean_reduce(p: Polynomial, var_ids: Iterable[int]) -> Polynomial:
    """Replace every positive exponent on the listed variables by 1."""
    listed = set(var_ids)
    if not listed:
        return p
    reduced: Dict[Monomial, Fraction] = {}
    for mono, coeff in p.items():
        mono = tuple((var, 1 if var in listed else exp) for var, exp in mono)
        reduced[mono] = reduced.get(mono, 0) + coeff
    return Polynomial(p.table, reduced)


def monomials_up_to(n: int, d: int) -> List[Monomial]:
    """All monomials of total degree <= d in n variables, canonical order."""
    if n < 0 or d < 0:
        raise ValueError("variable count and degree must be nonnegative")
    monos: List[Monomial] = []
    for degree in range(d + 1):
        for seq in combinations_with_replacement(range(n), degree):
            monos.append(mono_from_sequence(seq))
    return monos


def evaluate(p: Polynomial, point: Mapping[int, Scalar]) -> Fraction:
    total = Fraction(0)
    for mono, coeff in p.items():
        value = coeff
        for var, exp in mono:
            if var not in point:
                raise StructuralError(f"no value assigned to {p.table.name(var)}")
            value *= as_fraction(point[var]) ** exp
        total += value
    return total


def substitute(p: Polynomial, mapping: Mapping[int, Polynomial]) -> Polynomial:
    """Compose p with a variable map.

    The result lives over the table of the substituted polynomials. Variables
    missing from the map are carried over unchanged, which requires that table
    to be p's own.
    """
    tables = {id(q.table): q.table for q in mapping.values()}
    target = next(iter(tables.values())) if tables else p.table
    if any(t != target for t in tables.values()):
        raise StructuralError("substitution polynomials live over different tables")

    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power(var: int, exp: int) -> Polynomial:
        key = (var, exp)
        if key not in powers:
            if var in mapping:
                base = mapping[var]
            elif target == p.table:
                base = target.var(var)
            else:
                raise StructuralError(f"variable {p.table.name(var)} has no image")
            powers[key] = base ** exp
        return powers[key]

    result = target.zero()
    for mono, coeff in p.items():
        term = target.const(coeff)
        for var, exp in mono:
            term = term * power(var, exp)
        result = result + term
    return result
