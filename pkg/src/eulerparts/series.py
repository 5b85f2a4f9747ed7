"""Sparse truncated power series over exact integers.

Terms are exponent tuples mapped to ``int`` coefficients.  A series carries
its variable names, a truncation degree and a truncation metric: by default
the total degree, or the exponent of one designated variable (used for
``(x, q)`` series truncated in ``q`` only, where the ``x`` exponent may be
any integer).

The module also provides the partition weights that tie series to
enumeration, and factor-family machinery for assembling infinite products
such as Boulet's four-parameter identity truncated to a given degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .enumeration import UNBOUNDED, BoundSequence, CongruenceFilter, bounded_partitions
from .partition import Partition

ABCD = ("a", "b", "c", "d")
AB = ("a", "b")
XQ = ("x", "q")


class Series:
    """A truncated formal power series with integer coefficients.

    ``degree_index`` selects the truncation metric: ``None`` truncates by
    total degree, an index truncates by that variable's exponent alone (all
    other exponents are then allowed to be negative).
    """

    __slots__ = ("names", "trunc", "degree_index", "terms")

    def __init__(self, names: Sequence[str], trunc: int,
                 terms: dict | None = None, degree_index: int | None = None):
        self.names = tuple(names)
        if trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        self.trunc = trunc
        if degree_index is not None and not 0 <= degree_index < len(self.names):
            raise ValueError("degree_index out of range")
        self.degree_index = degree_index
        kept: dict[tuple, int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != len(self.names):
                    raise ValueError("expected %d exponents, got %r" % (len(self.names), exps))
                d = self.degree(exps)
                if d < 0:
                    raise ValueError("negative truncation degree in %r" % (exps,))
                if d > trunc:
                    continue
                kept[exps] = coeff
        self.terms = kept

    def degree(self, exps: tuple) -> int:
        if self.degree_index is None:
            return sum(exps)
        return exps[self.degree_index]

    @classmethod
    def zero(cls, names: Sequence[str], trunc: int, degree_index: int | None = None) -> "Series":
        return cls(names, trunc, None, degree_index)

    @classmethod
    def one(cls, names: Sequence[str], trunc: int, degree_index: int | None = None) -> "Series":
        return cls(names, trunc, {(0,) * len(tuple(names)): 1}, degree_index)

    def _blank(self) -> "Series":
        return Series(self.names, self.trunc, None, self.degree_index)

    def _compatible(self, other: "Series"):
        if (self.names, self.trunc, self.degree_index) != (other.names, other.trunc, other.degree_index):
            raise ValueError("series mismatch: %r/%d vs %r/%d"
                             % (self.names, self.trunc, other.names, other.trunc))

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def items(self) -> list[tuple[tuple, int]]:
        """Terms sorted by total degree, then lexicographically by exponents."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Series)
                and (self.names, self.trunc, self.degree_index) ==
                    (other.names, other.trunc, other.degree_index)
                and self.terms == other.terms)

    def __neg__(self) -> "Series":
        out = self._blank()
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __add__(self, other) -> "Series":
        if isinstance(other, int):
            other = Series(self.names, self.trunc,
                           {(0,) * len(self.names): other}, self.degree_index)
        self._compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = self._blank()
        res.terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        return self + (-other)

    def __mul__(self, other) -> "Series":
        if isinstance(other, int):
            out = self._blank()
            if other:
                out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        self._compatible(other)
        res = self._blank()
        if not self.terms or not other.terms:
            return res
        left = sorted(self.terms.items(), key=lambda kv: self.degree(kv[0]))
        right = sorted(other.terms.items(), key=lambda kv: self.degree(kv[0]))
        rmin = self.degree(right[0][0])
        trunc = self.trunc
        out: dict[tuple, int] = {}
        for e1, c1 in left:
            d1 = self.degree(e1)
            if d1 + rmin > trunc:
                break  # left factors only grow from here
            for e2, c2 in right:
                if d1 + self.degree(e2) > trunc:
                    break
                key = tuple(map(sum, zip(e1, e2)))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "Series(%d terms, vars=%s, trunc=%d)" % (len(self.terms), self.names, self.trunc)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in self.items()[:14]:
            mono = "*".join("%s^%d" % (n, e) for n, e in zip(self.names, exps) if e)
            if not mono:
                chunks.append(str(coeff))
            elif coeff == 1:
                chunks.append(mono)
            else:
                chunks.append("%d*%s" % (coeff, mono))
        tail = " + ..." if len(self.terms) > 14 else ""
        return " + ".join(chunks) + tail


@dataclass(frozen=True)
class SeriesComparison:
    """Outcome of comparing two series; falsy when they differ."""

    equal: bool
    exponents: tuple | None = None
    left: int = 0
    right: int = 0

    def __bool__(self) -> bool:
        return self.equal


def series_equal(s1: Series, s2: Series) -> SeriesComparison:
    """Compare coefficientwise; on mismatch report the first differing
    monomial in (total degree, exponents) order."""
    s1._compatible(s2)
    keys = set(s1.terms) | set(s2.terms)
    for exps in sorted(keys, key=lambda e: (sum(e), e)):
        a = s1.terms.get(exps, 0)
        b = s2.terms.get(exps, 0)
        if a != b:
            return SeriesComparison(False, exps, a, b)
    return SeriesComparison(True)


def substitute(series: Series, images: dict[str, Sequence[int]],
               names: Sequence[str], degree_index: int | None = None) -> Series:
    """Map every variable to a monomial in new variables.

    Each image must have degree exactly 1 under the *target* metric, so the
    truncation degree of every term is preserved and the result is exact.
    """
    names = tuple(names)
    target = Series.zero(names, series.trunc, degree_index)
    vecs = []
    for v in series.names:
        if v not in images:
            raise ValueError("no image for variable %r" % v)
        img = tuple(images[v])
        if len(img) != len(names):
            raise ValueError("image for %r has wrong arity" % v)
        if target.degree(img) != 1:
            raise ValueError("image for %r must have truncation degree 1" % v)
        vecs.append(img)
    out: dict[tuple, int] = {}
    width = len(names)
    for exps, coeff in series.terms.items():
        new = tuple(sum(e * vec[t] for e, vec in zip(exps, vecs)) for t in range(width))
        s = out.get(new, 0) + coeff
        if s:
            out[new] = s
        else:
            out.pop(new, None)
    target.terms = out
    return target


# -- partition weights ------------------------------------------------------

def four_param_weight(p: Partition) -> tuple[int, int, int, int]:
    """Exponents of the four-parameter weight a^.. b^.. c^.. d^..

    Odd-indexed rows contribute their cells to (a, b) — ceilings to a,
    floors to b — and even-indexed rows likewise to (c, d).
    """
    ea = eb = ec = ed = 0
    for i, part in enumerate(p.parts):
        if i % 2 == 0:
            ea += (part + 1) // 2
            eb += part // 2
        else:
            ec += (part + 1) // 2
            ed += part // 2
    return (ea, eb, ec, ed)


def row_totals_weight(p: Partition) -> tuple[int, int]:
    """Collapse a=b, c=d: (sum of odd-indexed rows, sum of even-indexed rows)."""
    ea = eb = 0
    for i, part in enumerate(p.parts):
        if i % 2 == 0:
            ea += part
        else:
            eb += part
    return (ea, eb)


def half_cells_weight(p: Partition) -> tuple[int, int]:
    """Collapse a=c, b=d: (sum of ceil(part/2), sum of floor(part/2))."""
    ea = eb = 0
    for part in p.parts:
        ea += (part + 1) // 2
        eb += part // 2
    return (ea, eb)


def alt_weight(p: Partition) -> tuple[int, int]:
    """(alternating sum, weight) — the (x, q) exponents for the a=b=xq,
    c=d=q/x specialisation."""
    return (p.alt_sum(), p.weight())


def odd_weight(p: Partition) -> tuple[int, int]:
    """(odd-part count, weight) — the (x, q) exponents for the a=c=xq,
    b=d=q/x specialisation."""
    return (p.odd_count(), p.weight())


@dataclass(frozen=True)
class WeightVariant:
    """A named partition weight together with its variables and metric."""

    name: str
    names: tuple[str, ...]
    degree_index: int | None
    fn: Callable[[Partition], tuple[int, ...]]


FOUR_PARAM = WeightVariant("abcd", ABCD, None, four_param_weight)
ROW_TOTALS = WeightVariant("rows", AB, None, row_totals_weight)
HALF_CELLS = WeightVariant("halves", AB, None, half_cells_weight)
ALT_BY_WEIGHT = WeightVariant("la", XQ, 1, alt_weight)
ODD_BY_WEIGHT = WeightVariant("lo", XQ, 1, odd_weight)

WEIGHTS = {w.name: w for w in
           (FOUR_PARAM, ROW_TOTALS, HALF_CELLS, ALT_BY_WEIGHT, ODD_BY_WEIGHT)}

# The two degree-1 specialisations of the four-parameter weight.
TO_ALT = {"a": (1, 1), "b": (1, 1), "c": (-1, 1), "d": (-1, 1)}
TO_ODD = {"a": (1, 1), "b": (-1, 1), "c": (1, 1), "d": (-1, 1)}


def enumerated_series(trunc: int, weight: WeightVariant = FOUR_PARAM,
                      bounds: BoundSequence | None = None,
                      filt: CongruenceFilter | None = None,
                      include_empty: bool = True) -> Series:
    """Sum the weight monomials of every admissible partition of 0..trunc.

    Because each weight's truncation degree equals the partition's weight,
    the result is the exact truncation of the full generating function.
    """
    out = Series.zero(weight.names, trunc, weight.degree_index)
    for n in range(0, trunc + 1):
        if n == 0 and not include_empty:
            continue
        for p in bounded_partitions(n, bounds, filt):
            e = weight.fn(p)
            out.terms[e] = out.terms.get(e, 0) + 1
    return out


# -- factor families and products -------------------------------------------

@dataclass(frozen=True)
class FactorSpec:
    """One product family: factors ``(1 + sign * X^exps(j))`` for j = 1, 2, ...

    ``exps`` returns the exponent tuple of the j-th factor, or ``None`` when
    the family is exhausted.  Families must have non-decreasing truncation
    degree in j; assembly stops at the first factor beyond the truncation.
    Factors with ``denominator=True`` are divided out (expanded as geometric
    series), and must therefore have unit constant term, which the positive
    degree requirement guarantees.
    """

    sign: int
    exps: Callable[[int], tuple[int, ...] | None]
    denominator: bool = False


def finite_factors(sign: int, exps_list: Iterable[Sequence[int]],
                   denominator: bool = False) -> FactorSpec:
    """Wrap an explicit factor list (already ordered by degree)."""
    table = [tuple(e) for e in exps_list]

    def fn(j: int):
        return table[j - 1] if j <= len(table) else None

    return FactorSpec(sign, fn, denominator)


def _single_factor(names, trunc, degree_index, sign, exps, denominator) -> Series:
    base = Series.zero(names, trunc, degree_index)
    d = base.degree(exps)
    terms: dict[tuple, int] = {(0,) * len(base.names): 1}
    if not denominator:
        terms[exps] = terms.get(exps, 0) + sign
    else:
        # geometric expansion of 1 / (1 + sign * X^exps)
        t = 1
        while t * d <= trunc:
            key = tuple(e * t for e in exps)
            terms[key] = (-sign) ** t
            t += 1
    base.terms = {e: c for e, c in terms.items() if c}
    return base


def product_series(specs: Iterable[FactorSpec], names: Sequence[str], trunc: int,
                   degree_index: int | None = None) -> Series:
    """Multiply out factor families, truncating exactly."""
    acc = Series.one(names, trunc, degree_index)
    for spec in specs:
        if spec.sign not in (1, -1):
            raise ValueError("factor sign must be +1 or -1")
        j = 1
        prev = 0
        while True:
            exps = spec.exps(j)
            if exps is None:
                break
            exps = tuple(exps)
            d = acc.degree(exps)
            if d < 1:
                raise ValueError("factor monomial must have positive degree: %r" % (exps,))
            if d < prev:
                raise ValueError("factor degrees decreased at j=%d" % j)
            prev = d
            if d > trunc:
                break
            acc = acc * _single_factor(names, trunc, degree_index, spec.sign,
                                       exps, spec.denominator)
            j += 1
    return acc


def _half_up(x: int) -> int:
    return (x + 1) // 2


def _bound_factor_list(bounds: BoundSequence, trunc: int, exps_of,
                       require_even_strict: bool, progression=None) -> list[tuple]:
    """Exponent tuples for the capped sizes, sorted by total degree.

    ``exps_of(size, strict)`` builds the tuple from the size and its strict
    cap (= inclusive cap + 1).  With ``require_even_strict`` an odd strict
    cap raises, since those product formulas need blocks of even size.
    """
    out = []
    for size in range(1, trunc + 1):
        if progression is not None and not progression(size):
            b = bounds.bound(size)
            if b is not UNBOUNDED:
                raise ValueError("cap on part %d, which lies outside the progression" % size)
            continue
        b = bounds.bound(size)
        if b is UNBOUNDED:
            continue
        strict = b + 1
        if require_even_strict and strict % 2 == 1:
            raise ValueError("part %d has strict cap %d; this identity needs even caps"
                             % (size, strict))
        exps = exps_of(size, strict)
        if sum(exps) <= trunc:
            out.append(exps)
    return sorted(out, key=sum)


def boulet_product(trunc: int) -> Series:
    """Boulet's four-parameter product over all partitions.

    prod_j (1 + a^j b^(j-1) c^(j-1) d^(j-1)) (1 + a^j b^j c^j d^(j-1))
         / [(1 - (abcd)^j) (1 - a^j b^j c^(j-1) d^(j-1)) (1 - a^j b^(j-1) c^j d^(j-1))]
    """
    specs = [
        FactorSpec(1, lambda j: (j, j - 1, j - 1, j - 1)),
        FactorSpec(1, lambda j: (j, j, j, j - 1)),
        FactorSpec(-1, lambda j: (j, j, j, j), True),
        FactorSpec(-1, lambda j: (j, j, j - 1, j - 1), True),
        FactorSpec(-1, lambda j: (j, j - 1, j, j - 1), True),
    ]
    return product_series(specs, ABCD, trunc)


def restricted_boulet_product(i: int, k: int, bounds: BoundSequence, trunc: int) -> Series:
    """The four-parameter product for partitions with parts = i (mod k) and
    capped multiplicities on the sizes ``bounds`` restricts.

    For i != 0 the matching enumeration carries the side conditions "even
    length" and "the part i appears at most once".  Caps must sit on sizes
    inside the progression and their strict versions must be even.
    """
    if k < 1 or not 0 <= i < k:
        raise ValueError("need 0 <= i < k and k >= 1")

    def num(j):
        hi = j * k + i
        lo = (j - 1) * k + i
        return (_half_up(hi), hi // 2, _half_up(lo), lo // 2)

    def den_pair(j):
        hi = j * k + i
        return (_half_up(hi), hi // 2, _half_up(hi), hi // 2)

    def den_shift(j):
        return (j * k, j * k, (j - 1) * k, (j - 1) * k)

    cap_exps = _bound_factor_list(
        bounds, trunc,
        lambda size, strict: (_half_up(size) * strict // 2, (size // 2) * strict // 2,
                              _half_up(size) * strict // 2, (size // 2) * strict // 2),
        require_even_strict=True,
        progression=lambda size: size % k == i)
    specs = [
        FactorSpec(1, num),
        FactorSpec(-1, den_pair, True),
        FactorSpec(-1, den_shift, True),
        finite_factors(-1, cap_exps),
    ]
    return product_series(specs, ABCD, trunc)


def row_totals_product(bounds: BoundSequence, trunc: int) -> Series:
    """Two-parameter product matching the row-totals weight (a=b, c=d).

    prod_j (1 + a^j b^(j-1)) / [(1 - a^j b^j) (1 - a^(2j) b^(2j-2))]
    times prod (1 - (ab)^(size*strict/2)) over the capped sizes; every
    strict cap must be even.
    """
    cap_exps = _bound_factor_list(
        bounds, trunc,
        lambda size, strict: (size * strict // 2, size * strict // 2),
        require_even_strict=True)
    specs = [
        FactorSpec(1, lambda j: (j, j - 1)),
        FactorSpec(-1, lambda j: (j, j), True),
        FactorSpec(-1, lambda j: (2 * j, 2 * j - 2), True),
        finite_factors(-1, cap_exps),
    ]
    return product_series(specs, AB, trunc)


def half_cells_product(bounds: BoundSequence, trunc: int) -> Series:
    """Two-parameter product matching the half-cells weight (a=c, b=d).

    prod_j (1 + a^j b^(j-1)) / [(1 - a^(2 ceil(j/2)) b^(2 floor(j/2))) (1 - (ab)^(2j-1))]
    times prod (1 - a^(ceil(size/2) strict) b^(floor(size/2) strict)) over the
    capped sizes; here any cap >= 0 is legal.
    """
    cap_exps = _bound_factor_list(
        bounds, trunc,
        lambda size, strict: (_half_up(size) * strict, (size // 2) * strict),
        require_even_strict=False)
    specs = [
        FactorSpec(1, lambda j: (j, j - 1)),
        FactorSpec(-1, lambda j: (2 * _half_up(j), 2 * (j // 2)), True),
        FactorSpec(-1, lambda j: (2 * j - 1, 2 * j - 1), True),
        finite_factors(-1, cap_exps),
    ]
    return product_series(specs, AB, trunc)


def pairing_gf(m: int, trunc: int) -> Series:
    """Closed form for partitions with every part at most ``2m+1`` times,
    counted by x^(alternating sum) q^weight:

    (-xq; q^2)_inf (q^(2m+2); q^(2m+2))_inf / [(q^2; q^2)_inf (x^2 q^2; q^4)_inf]
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    specs = [
        FactorSpec(1, lambda j: (1, 2 * j - 1)),
        FactorSpec(-1, lambda j: (0, (2 * m + 2) * j)),
        FactorSpec(-1, lambda j: (0, 2 * j), True),
        FactorSpec(-1, lambda j: (2, 4 * j - 2), True),
    ]
    return product_series(specs, XQ, trunc, degree_index=1)


def binary_gf(m: int, trunc: int) -> Series:
    """Closed form for partitions whose even parts appear at most ``2m+1``
    times, counted by either statistic:

    (-xq; q^2)_inf (q^(4m+4); q^(4m+4))_inf / [(q^2; q^2)_inf (x^2 q^2; q^4)_inf]
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    specs = [
        FactorSpec(1, lambda j: (1, 2 * j - 1)),
        FactorSpec(-1, lambda j: (0, (4 * m + 4) * j)),
        FactorSpec(-1, lambda j: (0, 2 * j), True),
        FactorSpec(-1, lambda j: (2, 4 * j - 2), True),
    ]
    return product_series(specs, XQ, trunc, degree_index=1)


def partition_gf(trunc: int) -> Series:
    """1 / (q; q)_inf as an (x, q) series: the coefficient of q^n counts all
    partitions of n."""
    specs = [FactorSpec(-1, lambda j: (0, j), True)]
    return product_series(specs, XQ, trunc, degree_index=1)
