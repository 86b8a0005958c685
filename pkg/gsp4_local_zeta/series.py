"""
Truncated power series in one or more of the fixed variables.

Coefficients are RationalFunctions free of the expansion variables.  The
truncation box is rectangular: a series in (x, y) with orders (M, L) keeps
x^i y^j for i <= M and j <= L, which is closed under truncated products.
"""
import itertools
import logging
import operator
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from gsp4_local_zeta.algebra import LaurentPoly, RationalFunction, VarId, ZERO_RF, rf_equal
from gsp4_local_zeta.errors import NonUnitDenominator


logger = logging.getLogger(__name__)

Index = Tuple[int, ...]


def graded_indices(orders: Sequence[int]) -> List[Index]:
    """All indices of the box, by total degree first."""
    box = itertools.product(*(range(o + 1) for o in orders))
    return sorted(box, key=lambda idx: (sum(idx), idx))


def _fits(idx: Index, orders: Sequence[int]) -> bool:
    return all(i <= o for i, o in zip(idx, orders))


def _grid_mul(a: Dict[Index, object], b: Dict[Index, object], orders: Sequence[int]) -> Dict[Index, object]:
    out: Dict[Index, object] = {}
    for i, x in a.items():
        for j, y in b.items():
            k = tuple(map(operator.add, i, j))
            if not _fits(k, orders):
                continue
            p = x * y
            out[k] = out[k] + p if k in out else p
    return {k: v for k, v in out.items() if not v.is_zero()}


class TruncSeries:
    __slots__ = ("variables", "orders", "_coeffs")

    def __init__(self, variables: Union[VarId, Sequence[VarId]], orders: Union[int, Sequence[int]],
                 coeffs: Optional[Dict[Index, object]] = None):
        if isinstance(variables, (int, VarId)):
            variables = (variables,)
        if isinstance(orders, int):
            orders = (orders,)
        self.variables = tuple(VarId(v) for v in variables)
        self.orders = tuple(int(o) for o in orders)
        if len(self.variables) != len(self.orders):
            raise ValueError("one order per variable is required")
        if any(o < 0 for o in self.orders):
            raise ValueError("series order must be nonnegative: {}".format(self.orders))

        clean = {}
        for idx, coeff in (coeffs or {}).items():
            idx = (idx,) if isinstance(idx, int) else tuple(idx)
            if not _fits(idx, self.orders):
                continue
            coeff = RationalFunction.coerce(coeff)
            if not coeff.is_zero():
                clean[idx] = coeff
        self._coeffs = clean

    @property
    def order(self) -> int:
        return self.orders[0] if len(self.orders) == 1 else max(self.orders)

    def coefficient(self, *index: int) -> RationalFunction:
        if len(index) != len(self.variables):
            raise ValueError("expected {} indices, got {}".format(len(self.variables), len(index)))
        if not _fits(index, self.orders):
            raise ValueError("index {} beyond the truncation order {}".format(index, self.orders))
        return self._coeffs.get(tuple(index), ZERO_RF)

    def coefficients(self) -> List[RationalFunction]:
        """Dense coefficient list of a univariate series."""
        if len(self.variables) != 1:
            raise ValueError("coefficients() needs a univariate series")
        return [self._coeffs.get((k,), ZERO_RF) for k in range(self.orders[0] + 1)]

    def indices(self) -> List[Index]:
        return graded_indices(self.orders)

    def _check_compatible(self, other: "TruncSeries"):
        if self.variables != other.variables or self.orders != other.orders:
            raise ValueError("series over {} / {} and {} / {} do not combine".format(
                self.variables, self.orders, other.variables, other.orders))

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_compatible(other)
        out = dict(self._coeffs)
        for idx, c in other._coeffs.items():
            out[idx] = out[idx] + c if idx in out else c
        return TruncSeries(self.variables, self.orders, out)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.variables, self.orders, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check_compatible(other)
            return TruncSeries(self.variables, self.orders, _grid_mul(self._coeffs, other._coeffs, self.orders))
        scalar = RationalFunction.coerce(other)
        return TruncSeries(self.variables, self.orders, {k: v * scalar for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def first_difference(self, other: "TruncSeries") -> Optional[Index]:
        """Lowest index (by total degree) where the coefficients differ."""
        self._check_compatible(other)
        for idx in self.indices():
            if not rf_equal(self._coeffs.get(idx, ZERO_RF), other._coeffs.get(idx, ZERO_RF)):
                return idx
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.variables != other.variables or self.orders != other.orders:
            return False
        return self.first_difference(other) is None

    __hash__ = None

    def __str__(self) -> str:
        names = [v.symbol for v in self.variables]
        parts = []
        for idx in self.indices():
            coeff = self._coeffs.get(idx)
            if coeff is None:
                continue
            mono = "*".join(n if e == 1 else "{}^{}".format(n, e) for n, e in zip(names, idx) if e)
            parts.append("({})".format(coeff) + ("*" + mono if mono else ""))
        tail = " + ".join("O({}^{})".format(n, o + 1) for n, o in zip(names, self.orders))
        return " + ".join(parts + [tail])

    def __repr__(self) -> str:
        return "TruncSeries({})".format(self)


def _poly_grid(poly: LaurentPoly, variables: Tuple[VarId, ...], orders: Tuple[int, ...]) -> Dict[Index, LaurentPoly]:
    grid: Dict[Index, Dict[Tuple[int, ...], object]] = {}
    for exps, coeff in poly._terms.items():
        idx = tuple(exps[v] for v in variables)
        if any(i < 0 for i in idx):
            raise NonUnitDenominator("negative power of {} in {}".format(
                "/".join(v.symbol for v in variables), poly))
        if not _fits(idx, orders):
            continue
        rest = list(exps)
        for v in variables:
            rest[v] = 0
        cell = grid.setdefault(idx, {})
        key = tuple(rest)
        cell[key] = cell.get(key, 0) + coeff
    return {idx: LaurentPoly(cell) for idx, cell in grid.items() if any(cell.values())}


def _reciprocal_grid(factor: LaurentPoly, variables: Tuple[VarId, ...], orders: Tuple[int, ...]) -> Dict[Index, LaurentPoly]:
    d = _poly_grid(factor, variables, orders)
    origin = (0,) * len(variables)
    d0 = d.get(origin)
    if d0 is None or not d0.is_monomial():
        raise NonUnitDenominator("order-zero coefficient {} of {} is not a unit".format(d0, factor))

    r0 = d0.inverse()
    rest = [(j, c) for j, c in d.items() if j != origin]
    r: Dict[Index, LaurentPoly] = {}
    for idx in graded_indices(orders):
        if idx == origin:
            r[idx] = r0
            continue
        acc = None
        for j, c in rest:
            if not all(a <= b for a, b in zip(j, idx)):
                continue
            prev = r.get(tuple(b - a for a, b in zip(j, idx)))
            if prev is not None:
                term = c * prev
                acc = term if acc is None else acc + term
        if acc is not None and not acc.is_zero():
            r[idx] = -(r0 * acc)
    return r


def series_expand_multi(f, variables: Iterable[VarId], orders: Iterable[int]) -> TruncSeries:
    f = RationalFunction.coerce(f)
    variables = tuple(VarId(v) for v in variables)
    orders = tuple(int(o) for o in orders)
    if any(o < 0 for o in orders):
        raise ValueError("series order must be nonnegative: {}".format(orders))

    grid = _poly_grid(f.num, variables, orders)
    free_factors = []
    wanted = set(variables)
    for factor, mult in f.factors:
        if wanted.isdisjoint(factor.variables()):
            free_factors.extend([factor] * mult)
            continue
        recip = _reciprocal_grid(factor, variables, orders)
        for _ in range(mult):
            grid = _grid_mul(grid, recip, orders)

    logger.debug("expanded in %s to %s: %d nonzero cells", variables, orders, len(grid))
    coeffs = {idx: RationalFunction.from_factored(c, free_factors) for idx, c in grid.items()}
    return TruncSeries(variables, orders, coeffs)


def series_expand(f, var: VarId, order: int) -> TruncSeries:
    """Taylor coefficients of f in var up to var^order.

    Each denominator factor involving var is inverted by the recursion
    r_0 = 1/d_0, r_k = -r_0 * sum_{j>=1} d_j r_{k-j}; d_0 must be a unit."""
    return series_expand_multi(f, (var,), (order,))
