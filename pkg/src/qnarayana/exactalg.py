"""Exact arithmetic kernel: sparse polynomials in q, t, x and their quotients.

A :class:`Poly` maps exponent triples ``(eq, et, ex)`` to rational
coefficients.  Integral coefficients are stored as plain ``int`` and only
promoted to :class:`fractions.Fraction` when needed, which keeps the common
integer case fast.

A :class:`RatFunc` is a pair ``num/den`` reduced only by monomial content,
rational content, exact divisibility and (for single-variable pairs) a
univariate gcd.  Equality is decided by cross-multiplication.

Monomials are ordered graded-lexicographically with q > t > x; the
canonical term order used for printing and serialization is ascending in
that order.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "VARS",
    "Poly",
    "RatFunc",
    "NotExactError",
    "ZeroDenominatorError",
    "arith",
    "substitute",
    "rf_equal",
    "as_poly",
    "coeff_of",
    "det_exact",
    "poly_to_json",
    "poly_from_json",
    "ratfunc_to_json",
    "ratfunc_from_json",
    "q",
    "t",
    "x",
    "ONE",
    "ZERO",
]

VARS = ("q", "t", "x")
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}

Monomial = tuple  # (eq, et, ex)
Coeff = Union[int, Fraction]


class ZeroDenominatorError(ZeroDivisionError):
    """Raised when a rational function would get an identically zero denominator."""


class NotExactError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""

    def __init__(self, message: str, remainder: "Poly | None" = None):
        super().__init__(message)
        self.remainder = remainder


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _grlex(m: Monomial) -> tuple:
    return (m[0] + m[1] + m[2], m[0], m[1], m[2])


def _var_index(var) -> int:
    if isinstance(var, int):
        return var
    try:
        return _VAR_INDEX[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}; expected one of {VARS}") from None


class Poly:
    """Immutable sparse polynomial in q, t, x with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if len(m) != 3 or min(m) < 0:
                        raise ValueError(f"bad monomial {m!r}")
                    clean[tuple(m)] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        c = _norm(c)
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def monomial(cls, c=1, eq: int = 0, et: int = 0, ex: int = 0) -> "Poly":
        if eq < 0 or et < 0 or ex < 0:
            raise ValueError("exponents must be nonnegative")
        c = _norm(c)
        return cls._raw({(eq, et, ex): c} if c else {})

    @classmethod
    def var(cls, name: str) -> "Poly":
        m = [0, 0, 0]
        m[_var_index(name)] = 1
        return cls._raw({tuple(m): 1})

    @classmethod
    def coerce(cls, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        raise TypeError(f"cannot convert {type(other).__name__} to Poly")

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Coeff]]:
        """Terms in canonical (ascending graded-lex) order."""
        for m in sorted(self._terms, key=_grlex):
            yield m, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0, 0) in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_term(self) -> Coeff:
        return self._terms.get((0, 0, 0), 0)

    def degree(self, var=None) -> int:
        """Degree in ``var`` (total degree if omitted); -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(m) for m in self._terms)
        i = _var_index(var)
        return max(m[i] for m in self._terms)

    def variables(self) -> set:
        used = set()
        for m in self._terms:
            for i in range(3):
                if m[i]:
                    used.add(VARS[i])
        return used

    def leading(self) -> tuple[Monomial, Coeff]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=_grlex)
        return m, self._terms[m]

    def coeff_of(self, var, k: int) -> "Poly":
        i = _var_index(var)
        out = {}
        for m, c in self._terms.items():
            if m[i] == k:
                mm = list(m)
                mm[i] = 0
                out[tuple(mm)] = c
        return Poly._raw(out)

    def coefficients(self, var) -> dict[int, "Poly"]:
        """Split into ``{k: coefficient of var**k}``."""
        i = _var_index(var)
        buckets: dict[int, dict] = {}
        for m, c in self._terms.items():
            mm = list(m)
            mm[i] = 0
            buckets.setdefault(m[i], {})[tuple(mm)] = c
        return {k: Poly._raw(v) for k, v in buckets.items()}

    def content_monomial(self) -> Monomial:
        """Componentwise minimum exponent over all terms."""
        ms = list(self._terms)
        return (min(m[0] for m in ms), min(m[1] for m in ms), min(m[2] for m in ms))

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "Poly":
        return self

    def __add__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        other = Poly.coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) + (-self)

    def mul_term(self, mono: Monomial, c) -> "Poly":
        if not c:
            return ZERO
        a, b, d = mono
        return Poly._raw(
            {(m[0] + a, m[1] + b, m[2] + d): _norm(v * c) for m, v in self._terms.items()}
        )

    def __mul__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Poly._raw({m: _norm(c * other) for m, c in self._terms.items()})
        other = Poly.coerce(other)
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            (m, c), = other._terms.items()
            return self.mul_term(m, c)
        if len(self._terms) == 1:
            (m, c), = self._terms.items()
            return other.mul_term(m, c)
        out: dict = {}
        get = out.get
        for (a0, a1, a2), ca in self._terms.items():
            for (b0, b1, b2), cb in other._terms.items():
                m = (a0 + b0, a1 + b1, a2 + b2)
                out[m] = get(m, 0) + ca * cb
        return Poly._raw({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly powers must be nonnegative integers")
        if len(self._terms) == 1:
            (m, c), = self._terms.items()
            return Poly._raw({(m[0] * n, m[1] * n, m[2] * n): _norm(c ** n)})
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        return RatFunc(self) / other

    def __rtruediv__(self, other):
        return RatFunc(Poly.coerce(other)) / self

    def twist(self, a: int) -> "Poly":
        """Substitute ``t -> q**a * t`` (``a >= 0``) by exponent bookkeeping."""
        if a < 0:
            raise ValueError("twist needs a >= 0; use substitute for t/q")
        if a == 0:
            return self
        return Poly._raw({(m[0] + a * m[1], m[1], m[2]): c for m, c in self._terms.items()})

    def div_monomial(self, mono: Monomial) -> "Poly":
        a, b, d = mono
        out = {}
        for m, c in self._terms.items():
            mm = (m[0] - a, m[1] - b, m[2] - d)
            if min(mm) < 0:
                raise NotExactError(f"monomial {mono} does not divide {self}")
            out[mm] = c
        return Poly._raw(out)

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Multivariate division by a single divisor in graded-lex order.

        Returns ``(quotient, remainder)`` with ``self = quotient*divisor +
        remainder`` and no term of the remainder divisible by the divisor's
        leading monomial.  The remainder is zero whenever the divisor divides
        ``self`` exactly.
        """
        quot, rem = _divide(self, divisor, stop_early=False)
        return quot, rem

    def exquo(self, divisor: "Poly") -> "Poly":
        quot, rem = _divide(self, divisor, stop_early=False)
        if rem:
            raise NotExactError(f"division by {divisor} is not exact; remainder {rem}", rem)
        return quot

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.const(other)._terms
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def substitute(self, var, value) -> "RatFunc":
        return substitute(RatFunc(self), var, value)


def _divide(a: Poly, b: Poly, stop_early: bool):
    if not b._terms:
        raise ZeroDenominatorError("division by the zero polynomial")
    (lm, lc) = b.leading()
    rest = [(m, c) for m, c in b._terms.items() if m != lm]
    r = dict(a._terms)
    heap = [(tuple(-v for v in _grlex(m)), m) for m in r]
    heapq.heapify(heap)
    quot: dict = {}
    rem: dict = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = r.pop(m, 0)
        if not c:
            continue
        e = (m[0] - lm[0], m[1] - lm[1], m[2] - lm[2])
        if e[0] < 0 or e[1] < 0 or e[2] < 0:
            if stop_early:
                return None, None
            rem[m] = c
            continue
        if isinstance(c, int) and isinstance(lc, int) and c % lc == 0:
            f = c // lc
        else:
            f = _norm(Fraction(c) / lc)
        quot[e] = f
        for bm, bc in rest:
            mm = (bm[0] + e[0], bm[1] + e[1], bm[2] + e[2])
            old = r.get(mm)
            v = (old or 0) - f * bc
            if v:
                r[mm] = _norm(v)
                if old is None:
                    heapq.heappush(heap, (tuple(-w for w in _grlex(mm)), mm))
            elif old is not None:
                del r[mm]
    return Poly._raw(quot), Poly._raw(rem)


def _try_exquo(a: Poly, b: Poly) -> Poly | None:
    quot, _ = _divide(a, b, stop_early=True)
    return quot


# -- univariate gcd (single shared variable only) ----------------------------


def _univariate_var(p: Poly) -> int | None:
    """Index of the single variable ``p`` depends on, -1 if constant, None if several."""
    idx = -1
    for m in p._terms:
        for i in range(3):
            if m[i]:
                if idx == -1:
                    idx = i
                elif idx != i:
                    return None
    return idx


def _to_dense(p: Poly, i: int) -> list:
    deg = p.degree(VARS[i])
    coeffs = [Fraction(0)] * (deg + 1)
    for m, c in p._terms.items():
        coeffs[m[i]] = Fraction(c)
    return coeffs


def _from_dense(coeffs: Sequence, i: int) -> Poly:
    out = {}
    for k, c in enumerate(coeffs):
        if c:
            m = [0, 0, 0]
            m[i] = k
            out[tuple(m)] = _norm(c)
    return Poly._raw(out)


def _dense_rem(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and any(a):
        if not a[-1]:
            a.pop()
            continue
        f = a[-1] / lead
        shift = len(a) - 1 - db
        for k in range(db + 1):
            a[shift + k] -= f * b[k]
        a.pop()
    while a and not a[-1]:
        a.pop()
    return a


def _univariate_gcd(a: Poly, b: Poly, i: int) -> Poly:
    u, v = _to_dense(a, i), _to_dense(b, i)
    while v and any(v):
        u, v = v, _dense_rem(u, v)
    lead = u[-1]
    return _from_dense([c / lead for c in u], i)


# -- rational functions -----------------------------------------------------


def _rational_content(p: Poly) -> Fraction:
    nums = []
    dens = []
    for c in p._terms.values():
        if isinstance(c, int):
            nums.append(abs(c))
        else:
            nums.append(abs(c.numerator))
            dens.append(c.denominator)
    g = math.gcd(*nums)
    lcm = math.lcm(*dens) if dens else 1
    return Fraction(g, lcm)


class RatFunc:
    """Quotient of two polynomials in q, t, x.

    Reduction is deliberately partial: monomial content, rational content,
    exact divisibility of the numerator by the denominator, and a gcd when
    both parts are polynomials in the same single variable.  Use
    :func:`rf_equal` (or ``==``) for equality; it cross-multiplies.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, _reduce: bool = True):
        num = Poly.coerce(num)
        den = Poly.coerce(den)
        if not den._terms:
            raise ZeroDenominatorError("rational function with zero denominator")
        if _reduce:
            num, den = _reduce_pair(num, den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        return cls(Poly.coerce(other))

    def is_poly(self) -> bool:
        return self.den.is_constant()

    def is_zero(self) -> bool:
        return not self.num._terms

    def __bool__(self) -> bool:
        return bool(self.num._terms)

    def as_poly(self) -> Poly:
        return as_poly(self)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduce=False)

    def __add__(self, other) -> "RatFunc":
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if o.den.is_constant():
            return RatFunc(self.num + o.num * self.den * _inv(_const(o.den)), self.den)
        if self.den.is_constant():
            return RatFunc(self.num * o.den * _inv(_const(self.den)) + o.num, o.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other) -> "RatFunc":
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not o.num:
            return RatFunc(ZERO)
        if self.den == o.num:
            return RatFunc(self.num, o.den)
        if o.den == self.num:
            return RatFunc(o.num, self.den)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            raise ZeroDenominatorError(f"division of {self} by zero")
        return self * RatFunc(o.den, o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n >= 0:
            return RatFunc(self.num ** n, self.den ** n)
        if not self.num:
            raise ZeroDenominatorError("zero to a negative power")
        return RatFunc(self.den ** -n, self.num ** -n)

    def __eq__(self, other) -> bool:
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return rf_equal(self, o)

    __hash__ = None  # equality is not canonical

    def substitute(self, var, value) -> "RatFunc":
        return substitute(self, var, value)

    def twist(self, a: int) -> "RatFunc":
        return RatFunc(self.num.twist(a), self.den.twist(a))

    def __str__(self) -> str:
        if self.den == ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _const(p: Poly) -> Coeff:
    return p.constant_term()


def _reduce_pair(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not num._terms:
        return ZERO, ONE
    if den.is_constant():
        c = den.constant_term()
        if c == 1:
            return num, ONE
        return num * _inv(c), ONE
    # monomial content
    cn, cd = num.content_monomial(), den.content_monomial()
    g = (min(cn[0], cd[0]), min(cn[1], cd[1]), min(cn[2], cd[2]))
    if any(g):
        num, den = num.div_monomial(g), den.div_monomial(g)
    if den.is_monomial():
        (m, c), = den._terms.items()
        if c != 1:
            num, den = num * _inv(c), Poly._raw({m: 1})
        if den.is_constant():
            return num, ONE
        return num, den
    # exact divisibility
    quot = _try_exquo(num, den)
    if quot is not None:
        return quot, ONE
    # single shared variable: cancel the gcd
    i = _univariate_var(den)
    if i is not None and i >= 0:
        j = _univariate_var(num)
        if j == i or j == -1:
            g = _univariate_gcd(num, den, i)
            if not g.is_constant():
                num, den = num.exquo(g), den.exquo(g)
                if den.is_constant():
                    return num * _inv(den.constant_term()), ONE
    # rational content and sign of the denominator
    scale = _rational_content(den)
    _, lc = den.leading()
    if lc < 0:
        scale = -scale
    if scale != 1:
        inv = _inv(scale)
        num, den = num * inv, den * inv
    return num, den


def _inv(c) -> Coeff:
    return _norm(Fraction(1) / Fraction(c))


q = Poly.var("q")
t = Poly.var("t")
x = Poly.var("x")
ONE = Poly._raw({(0, 0, 0): 1})
ZERO = Poly._raw({})


# -- operations on the public surface ----------------------------------------


def arith(a, b, op: str) -> RatFunc:
    """Field arithmetic on two rational functions; ``op`` in add/sub/mul/div."""
    a, b = RatFunc.coerce(a), RatFunc.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def _sub_poly(p: Poly, i: int, vn: Poly, vd: Poly) -> tuple[Poly, int]:
    """Return ``(N, E)`` with ``p|_{var_i = vn/vd} = N / vd**E``."""
    parts = p.coefficients(VARS[i])
    if not parts:
        return ZERO, 0
    E = max(parts)
    if vd == ONE:
        acc = parts[E]
        for e in range(E - 1, -1, -1):
            acc = acc * vn
            c = parts.get(e)
            if c is not None:
                acc = acc + c
        return acc, 0
    dpow = [ONE]
    for _ in range(E):
        dpow.append(dpow[-1] * vd)
    acc = parts[E]
    for e in range(E - 1, -1, -1):
        acc = acc * vn
        c = parts.get(e)
        if c is not None:
            acc = acc + c * dpow[E - e]
    return acc, E


def substitute(f, var, value) -> RatFunc:
    """Replace every occurrence of ``var`` in ``f`` by ``value`` (Horner per variable)."""
    f = RatFunc.coerce(f)
    value = RatFunc.coerce(value)
    i = _var_index(var)
    vn, vd = value.num, value.den
    n, en = _sub_poly(f.num, i, vn, vd)
    d, ed = _sub_poly(f.den, i, vn, vd)
    if not d:
        raise ZeroDenominatorError(
            f"substituting {VARS[i]} = {value} makes the denominator {f.den} vanish"
        )
    if en >= ed:
        d = d * vd ** (en - ed)
    else:
        n = n * vd ** (ed - en)
    return RatFunc(n, d)


def rf_equal(a, b) -> bool:
    """``a == b`` decided by cross-multiplication of canonical polynomials."""
    a, b = RatFunc.coerce(a), RatFunc.coerce(b)
    if a.den == b.den:
        return a.num == b.num
    return a.num * b.den == b.num * a.den


def as_poly(f) -> Poly:
    """Exact quotient ``num/den``; raises :class:`NotExactError` naming the remainder."""
    if isinstance(f, Poly):
        return f
    f = RatFunc.coerce(f)
    if f.den == ONE:
        return f.num
    if f.den.is_constant():
        return f.num * _inv(f.den.constant_term())
    quot, rem = _divide(f.num, f.den, stop_early=False)
    if rem:
        raise NotExactError(
            f"{f} is not a polynomial: remainder {format_poly(rem)} modulo {format_poly(f.den)}",
            rem,
        )
    return quot


def coeff_of(p, var, k: int) -> Poly:
    return as_poly(p).coeff_of(var, k)


def _bareiss(rows: list[list[Poly]]) -> Poly:
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]).exquo(prev)
            m[i][k] = ZERO
        prev = pivot
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def det_exact(matrix: Sequence[Sequence]) -> RatFunc:
    """Exact determinant of a square matrix of rational functions.

    Each row is scaled to a common denominator and the resulting polynomial
    matrix is reduced by fraction-free (Bareiss) elimination with row
    pivoting on nonzero entries; singular matrices give 0.
    """
    n = len(matrix)
    if n == 0:
        return RatFunc(ONE)
    if any(len(r) != n for r in matrix):
        raise ValueError("det_exact needs a square matrix")
    rows = []
    den = ONE
    for r in matrix:
        entries = [RatFunc.coerce(e) for e in r]
        rd = ONE
        for e in entries:
            if e.den != ONE and e.den != rd:
                if rd == ONE:
                    rd = e.den
                else:
                    quot = _try_exquo(rd, e.den)
                    if quot is None:
                        rd = rd * e.den
        rows.append([as_poly(e * rd) for e in entries])
        den = den * rd
    return RatFunc(_bareiss(rows), den)


# -- formatting and JSON -----------------------------------------------------


def _fmt_coeff(c: Coeff) -> str:
    return str(c)


def format_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARS, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def format_poly(p: Poly, sep: str = " ") -> str:
    """Flat rendering, ascending canonical order: ``1 + q^2 t``."""
    if not p._terms:
        return "0"
    out = []
    for m, c in p.items():
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m)
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)} {mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"{sep}{'-' if neg else '+'}{sep}{body}")
    return "".join(out)


def poly_to_json(p: Poly) -> list:
    out = []
    for m, c in p.items():
        c = Fraction(c)
        out.append([[str(c.numerator), str(c.denominator)], m[0], m[1], m[2]])
    return out


def poly_from_json(data: Iterable) -> Poly:
    terms = {}
    for (num, den), eq, et, ex in data:
        m = (int(eq), int(et), int(ex))
        if m in terms:
            raise ValueError(f"duplicate monomial {m} in JSON polynomial")
        terms[m] = Fraction(int(num), int(den))
    return Poly(terms)


def ratfunc_to_json(f) -> dict:
    f = RatFunc.coerce(f)
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfunc_from_json(data: Mapping) -> RatFunc:
    return RatFunc(poly_from_json(data["num"]), poly_from_json(data["den"]))
