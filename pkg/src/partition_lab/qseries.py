"""Exact truncated formal power series in q over Z[x, y].

MultiSeries is the working ring: coefficients are Python ints (arbitrary
precision), q-exponents are truncated at an inclusive order N, and x/y
exponents may optionally carry their own truncation (needed only when an
infinite product fails to stabilise in q alone).  LaurentPoly quarantines
the negative q-powers required by the terminating hypergeometric checks;
MultiSeries never holds a negative exponent.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .report import VerificationReport

Key = tuple[int, int, int]  # (q-exponent, x-exponent, y-exponent)


@dataclass(frozen=True)
class Monomial:
    """An integer multiple of x^x_exp * y^y_exp * q^q_exp."""

    coeff: int
    x: int = 0
    y: int = 0
    q: int = 0


class MultiSeries:
    """Formal power series in q, truncated at ``order``, coefficients in Z[x, y].

    ``xorder``/``yorder`` optionally truncate the x/y exponents as well; all
    ring operations require identical truncation settings.
    """

    __slots__ = ("order", "xorder", "yorder", "terms")

    def __init__(
        self,
        order: int,
        terms: dict[Key, int] | None = None,
        *,
        xorder: int | None = None,
        yorder: int | None = None,
    ) -> None:
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        self.xorder = xorder
        self.yorder = yorder
        kept: dict[Key, int] = {}
        if terms:
            for (q, x, y), coeff in terms.items():
                if q < 0 or x < 0 or y < 0:
                    raise ValueError(f"negative exponent in term {(q, x, y)}")
                if coeff == 0 or q > order:
                    continue
                if xorder is not None and x > xorder:
                    continue
                if yorder is not None and y > yorder:
                    continue
                kept[(q, x, y)] = coeff
        self.terms = kept

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int, **trunc) -> "MultiSeries":
        return cls(order, {}, **trunc)

    @classmethod
    def one(cls, order: int, **trunc) -> "MultiSeries":
        return cls(order, {(0, 0, 0): 1}, **trunc)

    @classmethod
    def term(
        cls, coeff: int, order: int, *, q: int = 0, x: int = 0, y: int = 0, **trunc
    ) -> "MultiSeries":
        return cls(order, {(q, x, y): coeff}, **trunc)

    @classmethod
    def from_monomial(cls, m: Monomial, order: int, **trunc) -> "MultiSeries":
        return cls(order, {(m.q, m.x, m.y): m.coeff}, **trunc)

    # -- ring operations ----------------------------------------------------

    def _trunc(self) -> dict:
        return {"xorder": self.xorder, "yorder": self.yorder}

    def _require_compatible(self, other: "MultiSeries") -> None:
        if (self.order, self.xorder, self.yorder) != (
            other.order,
            other.xorder,
            other.yorder,
        ):
            raise ValueError("series truncation orders differ")

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        self._require_compatible(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return MultiSeries(self.order, merged, **self._trunc())

    def __sub__(self, other: "MultiSeries") -> "MultiSeries":
        return self + (-other)

    def __neg__(self) -> "MultiSeries":
        return MultiSeries(
            self.order, {k: -c for k, c in self.terms.items()}, **self._trunc()
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiSeries(
                self.order, {k: other * c for k, c in self.terms.items()}, **self._trunc()
            )
        self._require_compatible(other)
        out: dict[Key, int] = {}
        order, xo, yo = self.order, self.xorder, self.yorder
        for (q1, x1, y1), c1 in self.terms.items():
            for (q2, x2, y2), c2 in other.terms.items():
                q = q1 + q2
                if q > order:
                    continue
                x = x1 + x2
                if xo is not None and x > xo:
                    continue
                y = y1 + y2
                if yo is not None and y > yo:
                    continue
                key = (q, x, y)
                out[key] = out.get(key, 0) + c1 * c2
        return MultiSeries(order, out, **self._trunc())

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiSeries":
        if exponent < 0:
            raise ValueError("negative powers are not defined; use invert()")
        result = MultiSeries.one(self.order, **self._trunc())
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiSeries):
            return (
                (self.order, self.xorder, self.yorder)
                == (other.order, other.xorder, other.yorder)
                and self.terms == other.terms
            )
        return NotImplemented

    __hash__ = None  # mutable dict inside

    def invert(self) -> "MultiSeries":
        """Multiplicative inverse; the constant term must be +1 or -1.

        Every non-constant term must carry a positive exponent in a
        truncated dimension, otherwise the geometric expansion would not
        terminate.
        """
        c = self.terms.get((0, 0, 0), 0)
        if c not in (1, -1):
            raise ValueError("cannot invert a series whose constant term is not +1/-1")
        u = MultiSeries.one(self.order, **self._trunc()) - self * c
        bound = self.order
        for (q, x, y) in u.terms:
            grade = q
            if self.xorder is not None:
                grade += x
            if self.yorder is not None:
                grade += y
            if grade < 1:
                raise ValueError("series is not invertible under this truncation")
        if self.xorder is not None:
            bound += self.xorder
        if self.yorder is not None:
            bound += self.yorder
        result = MultiSeries.one(self.order, **self._trunc())
        power = u
        steps = 0
        while power.terms:
            result = result + power
            power = power * u
            steps += 1
            assert steps <= bound + 1
        return result * c

    # -- inspection ----------------------------------------------------------

    def coefficient(self, q: int, x: int = 0, y: int = 0) -> int:
        return self.terms.get((q, x, y), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_of_q(self, q: int) -> dict[tuple[int, int], int]:
        """The coefficient of q^q as a map (x-exponent, y-exponent) -> int."""
        return {(x, y): c for (qq, x, y), c in self.terms.items() if qq == q}

    def map_exponents(self, fn) -> "MultiSeries":
        """Rebuild the series sending each exponent triple through ``fn``."""
        out: dict[Key, int] = {}
        for key, coeff in self.terms.items():
            new = fn(*key)
            out[new] = out.get(new, 0) + coeff
        return MultiSeries(self.order, out, **self._trunc())

    def first_discrepancy(self, other: "MultiSeries"):
        """Smallest (q, x, y) where coefficients differ, or None if equal."""
        self._require_compatible(other)
        keys = set(self.terms) | set(other.terms)
        for key in sorted(keys):
            a = self.terms.get(key, 0)
            b = other.terms.get(key, 0)
            if a != b:
                return key, a, b
        return None

    def serialize(self) -> str:
        """One term per line ``q^c x^a y^b : coeff``, sorted by (c, a, b)."""
        lines = []
        for (q, x, y) in sorted(self.terms):
            lines.append(f"q^{q} x^{x} y^{y} : {self.terms[(q, x, y)]}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"<MultiSeries order={self.order} terms={len(self.terms)}>"


INFINITY = None  # alias for pochhammer's unbounded factor count


def pochhammer(
    a: Monomial,
    step: int,
    n: int | None,
    order: int,
    *,
    xorder: int | None = None,
    yorder: int | None = None,
) -> MultiSeries:
    """The q-shifted factorial (a; q^step)_n as a truncated series.

    ``n is None`` means the infinite product, which stabilises modulo
    q^(order+1) once the shifted monomial's q-exponent exceeds the order.
    A constant monomial (no q, x or y exponent in a truncated dimension)
    makes the infinite product divergent and is rejected.
    """
    if step < 1:
        raise ValueError("step must be a positive q-power")
    trunc = {"xorder": xorder, "yorder": yorder}
    if n is None:
        anchored = (
            a.q >= 1
            or (xorder is not None and a.x >= 1)
            or (yorder is not None and a.y >= 1)
        )
        if not anchored:
            raise ValueError("infinite product diverges for this monomial")
    result = MultiSeries.one(order, **trunc)
    k = 0
    while True:
        if n is not None and k >= n:
            break
        shift = a.q + step * k
        if shift > order:
            if n is None:
                break
            # remaining factors are 1 modulo the truncation
            k += 1
            continue
        factor = MultiSeries.one(order, **trunc) - MultiSeries.term(
            a.coeff, order, q=shift, x=a.x, y=a.y, **trunc
        )
        result = result * factor
        k += 1
    return result


def _gauss_coeffs(a: int, b: int) -> dict[int, int]:
    """Coefficients {exponent: value} of the Gaussian binomial via q-Pascal."""
    if b < 0 or b > a:
        return {}
    prev: list[dict[int, int]] = [{0: 1}]
    for i in range(1, a + 1):
        cur: list[dict[int, int]] = []
        for j in range(0, min(i, b) + 1):
            if j == 0 or j == i:
                cur.append({0: 1})
                continue
            merged = dict(prev[j - 1])
            for exp, coeff in prev[j].items():
                merged[exp + j] = merged.get(exp + j, 0) + coeff
            cur.append(merged)
        prev = cur
    return prev[b]


def gauss_binomial(
    a: int,
    b: int,
    step: int = 1,
    *,
    order: int,
    xorder: int | None = None,
    yorder: int | None = None,
) -> MultiSeries:
    """Gaussian binomial [a, b] in the variable q^step, truncated at ``order``.

    Counts partitions inside the b-by-(a-b) box; b > a gives the zero series.
    """
    if a < 0 or b < 0:
        raise ValueError("arguments must be nonnegative")
    terms = {
        (exp * step, 0, 0): coeff
        for exp, coeff in _gauss_coeffs(a, b).items()
    }
    return MultiSeries(order, terms, xorder=xorder, yorder=yorder)


def _inverse_factorials(count: int, step: int, order: int) -> list[MultiSeries]:
    """[1/(q^step; q^step)_n for n in 0..count] as truncated series."""
    inverses = [MultiSeries.one(order)]
    product = MultiSeries.one(order)
    for n in range(1, count + 1):
        shift = step * n
        if shift <= order:
            product = product * (
                MultiSeries.one(order) - MultiSeries.term(1, order, q=shift)
            )
        inverses.append(product.invert())
    return inverses


# -- named series builders ---------------------------------------------------


def _assert_y_bounded(series: MultiSeries) -> MultiSeries:
    # every series built here weights y by a partition length, so y <= q
    assert all(y <= q for (q, _x, y) in series.terms)
    return series


def build_sol_length_gf(order: int) -> MultiSeries:
    """Strict partitions weighted x^(odd-run count) y^length q^size, as the
    double sum over run data (i odd runs, j even-run pairs)."""
    total = MultiSeries.zero(order)
    inv1 = _inverse_factorials(order, 1, order)
    inv2 = _inverse_factorials(order, 2, order)
    i = 0
    while i * i <= order:
        j = 0
        while True:
            exponent = i * i + 2 * i * j + 2 * j * j + j
            if exponent > order:
                break
            head = MultiSeries.term(1, order, q=exponent, x=i, y=i + 2 * j)
            total = total + head * inv1[i] * inv2[j]
            j += 1
        i += 1
    return _assert_y_bounded(total)


def build_double_sum_gf(order: int) -> MultiSeries:
    """Same double sum with x weighting i + j: strict partitions counted by
    x^(2-measure) y^length q^size."""
    total = MultiSeries.zero(order)
    inv1 = _inverse_factorials(order, 1, order)
    inv2 = _inverse_factorials(order, 2, order)
    i = 0
    while i * i <= order:
        j = 0
        while True:
            exponent = i * i + 2 * i * j + 2 * j * j + j
            if exponent > order:
                break
            head = MultiSeries.term(1, order, q=exponent, x=i + j, y=i + 2 * j)
            total = total + head * inv1[i] * inv2[j]
            j += 1
        i += 1
    return _assert_y_bounded(total)


def build_k_measure_gf(k: int, order: int) -> MultiSeries:
    """(-yq; q)_inf times the alternating Pochhammer sum with (x; q^k)_n:
    strict partitions counted by x^(k-measure) y^length q^size."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    inv1 = _inverse_factorials(order, 1, order)
    total = MultiSeries.zero(order)
    for n in range(order + 1):
        sign = -1 if n % 2 else 1
        head = MultiSeries.term(sign, order, q=n, y=n)
        xpoch = pochhammer(Monomial(1, x=1), k, n, order)
        total = total + head * xpoch * inv1[n]
    envelope = pochhammer(Monomial(-1, y=1, q=1), 1, None, order)
    return _assert_y_bounded(envelope * total)


def build_all_partitions_2measure_gf(order: int) -> MultiSeries:
    """All partitions counted by x^(2-measure) y^length q^size:
    1/(yq; q)_inf times the q^(n(n+1)/2) alternating sum."""
    inv1 = _inverse_factorials(order, 1, order)
    total = MultiSeries.zero(order)
    n = 0
    while n * (n + 1) // 2 <= order:
        sign = -1 if n % 2 else 1
        head = MultiSeries.term(sign, order, q=n * (n + 1) // 2, y=n)
        xpoch = pochhammer(Monomial(1, x=1), 1, n, order)
        total = total + head * xpoch * inv1[n]
        n += 1
    envelope = pochhammer(Monomial(1, y=1, q=1), 1, None, order).invert()
    return _assert_y_bounded(envelope * total)


def build_durfee_type_gf(order: int) -> MultiSeries:
    """Odd partitions counted by x^(2-modular sub-Durfee side)
    y^(2-modular Durfee side) q^size, assembled from the type I / type II
    splits around the 2-modular Durfee square."""
    inv1 = _inverse_factorials(order, 1, order)
    inv2 = _inverse_factorials(order, 2, order)
    total = MultiSeries.one(order)
    k = 1
    while k * (2 * k - 1) <= order:
        for m in range(0, k + 1):  # type I rows exceed the square
            exponent = m * (2 * m - 1) + k * (2 * k + 1)
            if exponent > order:
                break
            head = MultiSeries.term(1, order, q=exponent, x=m, y=k)
            total = total + head * inv1[2 * m] * inv2[k - m]
        for m in range(1, k + 1):  # type II row k equals 2k-1
            exponent = (m - 1) * (2 * m - 1) + k * (2 * k - 1)
            if exponent > order:
                break
            head = MultiSeries.term(1, order, q=exponent, x=m - 1, y=k)
            total = total + head * inv1[2 * m - 1] * inv2[k - m]
        k += 1
    return _assert_y_bounded(total)


def build_parity_index_gf(m: int, order: int) -> MultiSeries:
    """Partitions with largest part exactly ``m`` counted by
    x^(parity index) q^size."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    inv1 = _inverse_factorials(order, 1, order)
    inv2 = _inverse_factorials(order, 2, order)
    total = MultiSeries.zero(order)
    k = (m + 1) // 2
    if m % 2 == 0:
        for j in range(0, k + 1):
            exponent = m + (2 * j) * (2 * j - 1) // 2
            if exponent > order:
                break
            head = MultiSeries.term(1, order, q=exponent, x=2 * j)
            total = total + head * inv1[2 * j] * inv2[k - j]
    else:
        for j in range(1, k + 1):
            exponent = m + (2 * j - 1) * (2 * j - 2) // 2
            if exponent > order:
                break
            head = MultiSeries.term(1, order, q=exponent, x=2 * j - 1)
            total = total + head * inv1[2 * j - 1] * inv2[k - j]
    return total


def build_alt_durfee_gf(order: int) -> MultiSeries:
    """Odd partitions counted by x^(alternating index)
    y^(2-modular Durfee side) q^size.

    Type I contributes the parity-index series over largest part 2k shifted
    by the square weight k(2k-1); type II the series over largest part 2k-1
    shifted by (k-1)(2k-1), because there the appended part 2k-1 is not part
    of the partition being built.
    """
    total = MultiSeries.one(order)
    k = 1
    while k * (2 * k - 1) <= order:
        type_two = MultiSeries.term(1, order, q=(k - 1) * (2 * k - 1), y=k)
        total = total + type_two * build_parity_index_gf(2 * k - 1, order)
        if k * (2 * k - 1) + 2 * k <= order:
            type_one = MultiSeries.term(1, order, q=k * (2 * k - 1), y=k)
            total = total + type_one * build_parity_index_gf(2 * k, order)
        k += 1
    return _assert_y_bounded(total)


_BUILDERS = {
    "LHS_THM11": (build_double_sum_gf, ()),
    "RHS_THM11": (lambda order: build_k_measure_gf(2, order), ()),
    "GF_SOL_LEN": (build_sol_length_gf, ()),
    "GF_KMEASURE": (build_k_measure_gf, ("k",)),
    "GF_2MEASURE_P": (build_all_partitions_2measure_gf, ()),
    "GF_A_TYPES": (build_durfee_type_gf, ()),
    "GF_B": (build_alt_durfee_gf, ()),
    "GF_PARITY": (build_parity_index_gf, ("m",)),
}

SERIES_NAMES = tuple(_BUILDERS)


def build(name: str, order: int, **params) -> MultiSeries:
    """Construct a named series at the given truncation order."""
    try:
        builder, wanted = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown series {name!r}; choose from {SERIES_NAMES}") from None
    missing = [p for p in wanted if p not in params]
    if missing:
        raise ValueError(f"series {name} needs parameter(s) {missing}")
    extra = [p for p in params if p not in wanted]
    if extra:
        raise ValueError(f"series {name} does not take parameter(s) {extra}")
    args = [params[p] for p in wanted]
    return builder(*args, order)


# -- Laurent polynomials ------------------------------------------------------


class LaurentPoly:
    """Exact Laurent polynomial in q (any-sign exponents) with an optional
    x dimension.  Used only by the finite hypergeometric checks."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | None = None) -> None:
        self.terms = {}
        if terms:
            for (q, x), coeff in terms.items():
                if x < 0:
                    raise ValueError("x-exponents are nonnegative")
                if coeff:
                    self.terms[(q, x)] = coeff

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, q: int = 0, x: int = 0) -> "LaurentPoly":
        return cls({(q, x): coeff})

    @classmethod
    def poch(cls, coeff: int, q_start: int, step: int, n: int, x: int = 0) -> "LaurentPoly":
        """Finite product of (1 - coeff * x^x * q^(q_start + step*t)), t < n."""
        result = cls.one()
        for t in range(n):
            result = result * (cls.one() - cls.term(coeff, q=q_start + step * t, x=x))
        return result

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return LaurentPoly(merged)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: other * c for k, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (q1, x1), c1 in self.terms.items():
            for (q2, x2), c2 in other.terms.items():
                key = (q1 + q2, x1 + x2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        return f"<LaurentPoly terms={len(self.terms)}>"


# -- finite identity checks ----------------------------------------------------


def _series_report(name, params, lhs, rhs) -> VerificationReport:
    gap = lhs.first_discrepancy(rhs)
    if gap is None:
        return VerificationReport(name, params, True, counts={"terms": len(lhs.terms)})
    (q, x, y), a, b = gap
    return VerificationReport(
        name, params, False, witness=f"q^{q} x^{x} y^{y}: {a} != {b}"
    )


def check_qbinom(a: Monomial, order: int) -> VerificationReport:
    """Cauchy's q-binomial theorem for a monomial parameter, compared as
    series truncated in q and in x (x alone does not bound the q-order)."""
    trunc = {"xorder": order}
    inv = MultiSeries.one(order, **trunc)
    product = MultiSeries.one(order, **trunc)
    lhs = MultiSeries.zero(order, **trunc)
    for m in range(order + 1):
        apoch = pochhammer(a, 1, m, order, **trunc)
        lhs = lhs + MultiSeries.term(1, order, x=m, **trunc) * apoch * inv
        shift = m + 1
        if shift <= order:
            product = product * (
                MultiSeries.one(order, **trunc)
                - MultiSeries.term(1, order, q=shift, **trunc)
            )
            inv = product.invert()
    numerator = pochhammer(Monomial(a.coeff, x=a.x + 1, y=a.y, q=a.q), 1, None, order, **trunc)
    denominator = pochhammer(Monomial(1, x=1), 1, None, order, **trunc)
    rhs = numerator * denominator.invert()
    label = {"a": f"{a.coeff}*q^{a.q}" if (a.x, a.y) == (0, 0) else repr(a), "order": order}
    return _series_report("QBINOM", label, lhs, rhs)


def check_xq2_expansion(n: int) -> VerificationReport:
    """(x; q^2)_n as a Gaussian-binomial sum, in exact (q, x) polynomials."""
    lhs = LaurentPoly.poch(1, 0, 2, n, x=1)
    rhs = LaurentPoly.zero()
    for i in range(n + 1):
        sign = -1 if i % 2 else 1
        head = LaurentPoly.term(sign, q=i * i - i, x=i)
        binom = LaurentPoly(
            {(2 * exp, 0): coeff for exp, coeff in _gauss_coeffs(n, i).items()}
        )
        rhs = rhs + head * binom
    if lhs == rhs:
        return VerificationReport("XQ2_EXPANSION", {"n": n}, True)
    return VerificationReport(
        "XQ2_EXPANSION", {"n": n}, False, witness="sides differ as polynomials"
    )


def check_qchu(i: int, j: int) -> VerificationReport:
    """Terminating q-Chu-Vandermonde instance in Laurent-polynomial arithmetic.

    Both sides are multiplied by (q^2; q^2)_j = (q; q)_j (-q; q)_j so the
    n-th summand's denominator cancels into the genuine polynomial
    (q^(2n+2); q^2)_(j-n); the comparison then stays in Z[q, q^-1].
    """
    lhs = LaurentPoly.zero()
    for n in range(j + 1):
        summand = (
            LaurentPoly.poch(-1, i + 1, 1, n)
            * LaurentPoly.poch(1, -j, 1, n)
            * LaurentPoly.term(1, q=n)
            * LaurentPoly.poch(1, 2 * n + 2, 2, j - n)
        )
        lhs = lhs + summand
    sign = -1 if j % 2 else 1
    rhs = (
        LaurentPoly.term(sign, q=j * (i + 1))
        * LaurentPoly.poch(1, -i, 1, j)
        * LaurentPoly.poch(1, 1, 1, j)
    )
    if lhs == rhs:
        vanished = lhs.is_zero()
        return VerificationReport(
            "QCHU", {"i": i, "j": j}, True, counts={"vanishes": int(vanished)}
        )
    return VerificationReport(
        "QCHU", {"i": i, "j": j}, False, witness="sides differ as Laurent polynomials"
    )


def check_finite_identity(name: str, **params) -> VerificationReport:
    """Dispatch for the exact finite-identity checkers."""
    if name == "QBINOM":
        return check_qbinom(params["a"], params["order"])
    if name == "XQ2_EXPANSION":
        return check_xq2_expansion(params["n"])
    if name == "QCHU":
        return check_qchu(params["i"], params["j"])
    raise ValueError(f"unknown finite identity {name!r}")
