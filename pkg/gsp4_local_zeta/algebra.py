"""
Exact Laurent polynomials and rational functions over the rationals.

Every quantity of the local computation is written in the eight fixed
indeterminates

    c = chi_0        a = chi_1^(1/2)    b = chi_2^(1/2)    r = q^(1/2)
    u = nu(Pi_1)     t = q^(-s)         x, y = arguments of C_v(x, y)

so that half-integral powers such as q^(-3/2) = r^-3 or omega^(1/2) = a*b*c
stay integral.  Monomials are ordered graded-lexicographically along the
enumeration above.

A RationalFunction keeps its denominator as a multiset of canonical factors
(monomial-content free, monic under the monomial order).  Units of the Laurent
ring (a rational times a monomial) always live in the numerator, so two
associated denominators always produce the same factor.  There is no
multivariate gcd: equality is decided by cross-multiplication.
"""
import logging
import operator
from enum import IntEnum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from gsp4_local_zeta import config
from gsp4_local_zeta.errors import ResourceLimit, ZeroSubstitutionIntoNegativePower


logger = logging.getLogger(__name__)


class VarId(IntEnum):
    C = 0
    A = 1
    B = 2
    R = 3
    U = 4
    T = 5
    X = 6
    Y = 7

    @property
    def symbol(self) -> str:
        return self.name.lower()

    @classmethod
    def from_symbol(cls, symbol: str) -> "VarId":
        try:
            return cls[symbol.strip().upper()]
        except KeyError:
            raise ValueError("unknown variable: '{}'".format(symbol))


NVARS = len(VarId)
Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]

ONE_EXPONENTS: Exponents = (0,) * NVARS


def _add_exponents(e1: Exponents, e2: Exponents) -> Exponents:
    return tuple(map(operator.add, e1, e2))


def _grlex_key(exps: Exponents):
    return (sum(exps), exps)


def _format_monomial(exps: Exponents) -> str:
    parts = []
    for v, e in zip(VarId, exps):
        if e == 1:
            parts.append(v.symbol)
        elif e != 0:
            parts.append("{}^{}".format(v.symbol, e))
    return "*".join(parts)


class LaurentPoly:
    """Sparse Laurent polynomial: exponent vector -> nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponents, Scalar]] = None):
        clean: Dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != NVARS:
                    raise ValueError("exponent vector must have {} entries: {}".format(NVARS, exps))
                coeff = clean.get(exps, 0) + Fraction(coeff)
                if coeff:
                    clean[exps] = coeff
                else:
                    clean.pop(exps, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Exponents, Fraction]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._wrap({})

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        value = Fraction(value)
        return cls._wrap({ONE_EXPONENTS: value} if value else {})

    @classmethod
    def from_exponents(cls, coeff: Scalar, exps: Exponents) -> "LaurentPoly":
        coeff = Fraction(coeff)
        return cls._wrap({tuple(exps): coeff} if coeff else {})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, powers: Optional[Mapping[VarId, int]] = None) -> "LaurentPoly":
        exps = [0] * NVARS
        for v, e in (powers or {}).items():
            exps[VarId(v)] += int(e)
        return cls.from_exponents(coeff, tuple(exps))

    @classmethod
    def var(cls, v: VarId, power: int = 1) -> "LaurentPoly":
        return cls.monomial(1, {v: power})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        poly = _as_poly(value)
        if poly is None:
            raise TypeError("cannot interpret {!r} as a Laurent polynomial".format(value))
        return poly

    # -- inspection ------------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[Tuple[Exponents, Fraction]]:
        """Terms in decreasing monomial order."""
        return iter(sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True))

    def coefficient(self, exps: Exponents) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_EXPONENTS in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_EXPONENTS, Fraction(0))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant: {}".format(self))
        return self.constant_term()

    def variables(self) -> frozenset:
        seen = set()
        for exps in self._terms:
            seen.update(VarId(i) for i, e in enumerate(exps) if e)
        return frozenset(seen)

    def degree(self, v: VarId) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(exps[v] for exps in self._terms)

    def min_degree(self, v: VarId) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return min(exps[v] for exps in self._terms)

    def leading_term(self) -> Tuple[Exponents, Fraction]:
        if not self._terms:
            raise ValueError("leading term of the zero polynomial")
        exps = max(self._terms, key=_grlex_key)
        return exps, self._terms[exps]

    def content_exponents(self) -> Exponents:
        if not self._terms:
            return ONE_EXPONENTS
        return tuple(min(col) for col in zip(*self._terms))

    def sort_key(self):
        return tuple((_grlex_key(exps), coeff) for exps, coeff in self.items())

    # -- arithmetic ------------------------------------------------------

    def shift(self, exps: Exponents) -> "LaurentPoly":
        return LaurentPoly._wrap({_add_exponents(e, exps): c for e, c in self._terms.items()})

    def inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise ValueError("only monomials are invertible in the Laurent ring: {}".format(self))
        (exps, coeff), = self._terms.items()
        return LaurentPoly._wrap({tuple(-e for e in exps): 1 / coeff})

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "LaurentPoly":
        return self

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        big, small = (self, other) if len(self._terms) >= len(other._terms) else (other, self)
        out = dict(big._terms)
        for exps, coeff in small._terms.items():
            total = out.get(exps)
            if total is None:
                out[exps] = coeff
            else:
                total += coeff
                if total:
                    out[exps] = total
                else:
                    del out[exps]
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return _poly_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            inv = 1 / Fraction(other)
            return LaurentPoly._wrap({e: c * inv for e, c in self._terms.items()})
        if isinstance(other, LaurentPoly):
            if other.is_monomial():
                return self * other.inverse()
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "LaurentPoly":
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation ------------------------------------------------------

    def specialize(self, values: Mapping[VarId, Scalar]) -> "LaurentPoly":
        """Bind some variables to exact rationals; the others stay symbolic."""
        fixed = [(VarId(v), Fraction(x)) for v, x in values.items()]
        out: Dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            free = list(exps)
            for v, x in fixed:
                k = free[v]
                if k:
                    if k < 0 and x == 0:
                        raise ZeroSubstitutionIntoNegativePower("{}^{} with {} = 0".format(v.symbol, k, v.symbol))
                    coeff = coeff * x ** k
                    free[v] = 0
            if coeff:
                key = tuple(free)
                total = out.get(key, 0) + coeff
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return LaurentPoly._wrap(out)

    def evaluate(self, values: Mapping[VarId, Scalar]) -> Fraction:
        result = self.specialize(values)
        if not result.is_constant():
            missing = sorted(v.symbol for v in result.variables())
            raise ValueError("unbound variables: {}".format(", ".join(missing)))
        return result.constant_term()

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (exps, coeff) in enumerate(self.items()):
            magnitude = abs(coeff)
            mono = _format_monomial(exps)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = "{}*{}".format(magnitude, mono)
            if i == 0:
                pieces.append("-" + body if coeff < 0 else body)
            else:
                pieces.append(" {} {}".format("-" if coeff < 0 else "+", body))
        return "".join(pieces)

    def __repr__(self) -> str:
        return "LaurentPoly('{}')".format(self)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.constant(1)


def _as_poly(value) -> Optional[LaurentPoly]:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    return None


def _poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if not p._terms or not q._terms:
        return ZERO
    if len(p._terms) < len(q._terms):
        p, q = q, p

    if len(q._terms) == 1:
        (e2, c2), = q._terms.items()
        if e2 == ONE_EXPONENTS:
            return LaurentPoly._wrap({e: c * c2 for e, c in p._terms.items()})
        return LaurentPoly._wrap({_add_exponents(e, e2): c * c2 for e, c in p._terms.items()})

    limit = config.term_limit()
    add = operator.add
    out: Dict[Exponents, Fraction] = {}
    get = out.get
    for e2, c2 in q._terms.items():
        for e1, c1 in p._terms.items():
            exps = tuple(map(add, e1, e2))
            out[exps] = get(exps, 0) + c1 * c2
        if len(out) > limit:
            raise ResourceLimit(len(out), limit)

    return LaurentPoly._wrap({e: c for e, c in out.items() if c})


def poly_arith(op: str, p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    ops = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}
    if op not in ops:
        raise ValueError("unknown polynomial operation: '{}'".format(op))
    return ops[op](LaurentPoly.coerce(p), LaurentPoly.coerce(q))


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of str(LaurentPoly), e.g. '2*a^2*t - 1/3*r^-2 + 1'."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial text")

    chunks = []
    start = 0
    for i, ch in enumerate(compact):
        if ch in "+-" and i > 0 and compact[i - 1] != "^":
            chunks.append(compact[start:i])
            start = i
    chunks.append(compact[start:])

    terms: Dict[Exponents, Fraction] = {}
    for chunk in chunks:
        sign = 1
        if chunk and chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        if not chunk:
            raise ValueError("dangling sign in '{}'".format(text))

        coeff = Fraction(sign)
        exps = [0] * NVARS
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError("empty factor in '{}'".format(text))
            if factor[0].isdigit():
                coeff *= Fraction(factor)
            else:
                name, _, power = factor.partition("^")
                exps[VarId.from_symbol(name)] += int(power) if power else 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff

    return LaurentPoly(terms)


def canonical_factor(poly: LaurentPoly) -> Tuple[LaurentPoly, Optional[LaurentPoly]]:
    """Split poly into unit * factor with factor content-free and monic.

    Returns (poly, None) when poly is itself a unit."""
    if poly.is_zero():
        raise ZeroDivisionError("the zero polynomial has no canonical factor")
    if poly.is_monomial():
        return poly, None

    content = poly.content_exponents()
    shifted = poly.shift(tuple(-e for e in content))
    _, lead = shifted.leading_term()
    return LaurentPoly.from_exponents(lead, content), shifted / lead


FactorMap = Dict[LaurentPoly, int]


def _lcm(a: FactorMap, b: FactorMap) -> FactorMap:
    common = dict(a)
    for factor, mult in b.items():
        if mult > common.get(factor, 0):
            common[factor] = mult
    return common


def _times_cofactor(num: LaurentPoly, common: FactorMap, mine: FactorMap) -> LaurentPoly:
    for factor, mult in common.items():
        for _ in range(mult - mine.get(factor, 0)):
            num = num * factor
    return num


def _cancel(num: LaurentPoly, factors: FactorMap) -> LaurentPoly:
    """Strike num against an equal denominator factor (mutates factors)."""
    if not factors or num.is_monomial() or num.is_zero():
        return num
    if len(num) > max(len(f) for f in factors):
        return num
    unit, factor = canonical_factor(num)
    if factor in factors:
        factors[factor] -= 1
        if factors[factor] == 0:
            del factors[factor]
        return unit
    return num


class RationalFunction:
    """num / prod(factor^mult) with canonical factors."""

    __slots__ = ("num", "_factors")

    def __init__(self, num=1, den=None):
        num = LaurentPoly.coerce(num)
        factors: FactorMap = {}
        if den is not None:
            den = LaurentPoly.coerce(den)
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            unit, factor = canonical_factor(den)
            num = num * unit.inverse()
            if factor is not None:
                factors[factor] = 1
        self.num = num
        self._factors = factors if not num.is_zero() else {}

    @classmethod
    def _wrap(cls, num: LaurentPoly, factors: FactorMap) -> "RationalFunction":
        rf = cls.__new__(cls)
        rf.num = num
        rf._factors = {} if num.is_zero() else {f: m for f, m in factors.items() if m}
        return rf

    @classmethod
    def from_factored(cls, num, den_factors: Iterable[LaurentPoly]) -> "RationalFunction":
        num = LaurentPoly.coerce(num)
        factors: FactorMap = {}
        for poly in den_factors:
            unit, factor = canonical_factor(LaurentPoly.coerce(poly))
            num = num * unit.inverse()
            if factor is not None:
                factors[factor] = factors.get(factor, 0) + 1
        return cls._wrap(num, factors)

    @classmethod
    def coerce(cls, value) -> "RationalFunction":
        rf = _as_rf(value)
        if rf is None:
            raise TypeError("cannot interpret {!r} as a rational function".format(value))
        return rf

    # -- inspection ------------------------------------------------------

    @property
    def factors(self) -> Tuple[Tuple[LaurentPoly, int], ...]:
        return tuple(sorted(self._factors.items(), key=lambda fm: fm[0].sort_key()))

    @property
    def den(self) -> LaurentPoly:
        den = ONE
        for factor, mult in self.factors:
            den = den * factor ** mult
        return den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self._factors

    def is_constant(self) -> bool:
        return not self._factors and self.num.is_constant()

    def as_poly(self) -> LaurentPoly:
        if self._factors:
            raise ValueError("not a Laurent polynomial: {}".format(self))
        return self.num

    def constant_value(self) -> Fraction:
        return self.as_poly().constant_value()

    def variables(self) -> frozenset:
        seen = set(self.num.variables())
        for factor in self._factors:
            seen.update(factor.variables())
        return frozenset(seen)

    # -- arithmetic ------------------------------------------------------

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._wrap(-self.num, self._factors)

    def __pos__(self) -> "RationalFunction":
        return self

    def __add__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if not self._factors and not other._factors:
            return RationalFunction._wrap(self.num + other.num, {})
        common = _lcm(self._factors, other._factors)
        num = _times_cofactor(self.num, common, self._factors) + _times_cofactor(other.num, common, other._factors)
        return RationalFunction._wrap(num, common)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO_RF
        factors = dict(self._factors)
        for factor, mult in other._factors.items():
            factors[factor] = factors.get(factor, 0) + mult
        num = _cancel(self.num, factors) * _cancel(other.num, factors)
        return RationalFunction._wrap(num, factors)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        unit, factor = canonical_factor(self.num)
        num = _times_cofactor(unit.inverse(), self._factors, {})
        return RationalFunction._wrap(num, {factor: 1} if factor is not None else {})

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, exponent: int) -> "RationalFunction":
        exponent = int(exponent)
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        if exponent == 0:
            return ONE_RF
        return RationalFunction._wrap(self.num ** exponent, {f: m * exponent for f, m in self._factors.items()})

    def __eq__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return rf_equal(self, other)

    __hash__ = None

    # -- evaluation ------------------------------------------------------

    def substitute(self, bindings: Mapping[VarId, object]) -> "RationalFunction":
        result = substitute(self.num, bindings)
        for factor, mult in self._factors.items():
            image = substitute(factor, bindings)
            if image.is_zero():
                raise ZeroDivisionError("substitution sends the factor {} to zero".format(factor))
            result = result * image.reciprocal() ** mult
        return result

    def specialize(self, values: Mapping[VarId, Scalar]) -> "RationalFunction":
        num = self.num.specialize(values)
        dens = []
        for factor, mult in self._factors.items():
            image = factor.specialize(values)
            if image.is_zero():
                raise ZeroDivisionError("pole: the factor {} vanishes".format(factor))
            dens.extend([image] * mult)
        return RationalFunction.from_factored(num, dens)

    def evaluate(self, values: Mapping[VarId, Scalar]) -> Fraction:
        result = self.specialize(values)
        if not result.is_constant():
            missing = sorted(v.symbol for v in result.variables())
            raise ValueError("unbound variables: {}".format(", ".join(missing)))
        return result.num.constant_term()

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._factors:
            return str(self.num)
        den = " * ".join("({})".format(f) if m == 1 else "({})^{}".format(f, m) for f, m in self.factors)
        return "({}) / {}".format(self.num, den)

    def __repr__(self) -> str:
        return "RationalFunction('{}')".format(self)


def _as_rf(value) -> Optional[RationalFunction]:
    if isinstance(value, RationalFunction):
        return value
    poly = _as_poly(value)
    if poly is None:
        return None
    return RationalFunction._wrap(poly, {})


ZERO_RF = RationalFunction(0)
ONE_RF = RationalFunction(1)


def rf_equal(f, g) -> bool:
    """Cross-multiplication test, f.num * g.den == g.num * f.den.

    Shared factors are divided out first; the ring has no zero divisors, so
    this is the same test on smaller polynomials."""
    f = RationalFunction.coerce(f)
    g = RationalFunction.coerce(g)
    common = _lcm(f._factors, g._factors)
    lhs = _times_cofactor(f.num, common, f._factors)
    rhs = _times_cofactor(g.num, common, g._factors)
    return lhs == rhs


def substitute(poly, bindings: Mapping[VarId, object]) -> RationalFunction:
    """Simultaneous substitution of rational functions for variables."""
    poly = LaurentPoly.coerce(poly)
    bound = {VarId(v): RationalFunction.coerce(b) for v, b in bindings.items()}
    if not bound:
        return RationalFunction._wrap(poly, {})

    powers: Dict[Tuple[VarId, int], RationalFunction] = {}

    def power(v: VarId, k: int) -> RationalFunction:
        value = powers.get((v, k))
        if value is None:
            base = bound[v]
            if k < 0 and base.is_zero():
                raise ZeroSubstitutionIntoNegativePower("{}^{} with {} = 0".format(v.symbol, k, v.symbol))
            value = base ** k
            powers[(v, k)] = value
        return value

    # terms are grouped by their denominator so that most of the work is
    # plain polynomial accumulation
    groups: Dict[frozenset, Tuple[FactorMap, Dict[Exponents, Fraction]]] = {}
    for exps, coeff in poly._terms.items():
        free = list(exps)
        image = None
        for v in bound:
            k = exps[v]
            if k:
                free[v] = 0
                image = power(v, k) if image is None else image * power(v, k)
        mono = LaurentPoly._wrap({tuple(free): coeff})
        if image is None:
            num, factors = mono, {}
        else:
            num, factors = image.num * mono, image._factors
        if num.is_zero():
            continue

        key = frozenset(factors.items())
        if key not in groups:
            groups[key] = (factors, {})
        acc = groups[key][1]
        for e, c in num._terms.items():
            acc[e] = acc.get(e, 0) + c

    result = ZERO_RF
    for factors, acc in groups.values():
        num = LaurentPoly._wrap({e: c for e, c in acc.items() if c})
        result = result + RationalFunction._wrap(num, factors)
    return result


def specialize(f, values: Mapping[VarId, Scalar]) -> RationalFunction:
    return RationalFunction.coerce(f).specialize(values)


def var(v: VarId) -> LaurentPoly:
    return LaurentPoly.var(v)
