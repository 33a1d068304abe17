"""Exact arithmetic in cyclic Galois number fields over the rationals.

A field is given by a monic defining polynomial ``f`` and the image of the
generator ``t`` under a chosen Galois generator ``sigma``, written as a
polynomial in ``t``.  Elements are residues of degree ``< deg f``.
"""

from __future__ import annotations

import enum
import itertools
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Any, Iterable, Sequence

import numpy as np

from . import _arith

Rational = Fraction


class FieldError(ValueError):
    """Raised for invalid field data or operands from different fields."""


def _is_zero(c: Any) -> bool:
    return c == 0


def rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"num/den"`` (or an integer string) into an exact rational."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = text.strip()
    if not s or any(ch in s for ch in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class UniPoly:
    """Dense univariate polynomial, coefficients in ascending degree.

    Coefficients may be any exact field elements (``Fraction`` or ``NFElement``).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, coeffs: Iterable[int | Fraction | str]) -> UniPoly:
        return cls(rational(c) for c in coeffs)

    @classmethod
    def monomial(cls, n: int, c: Any = Fraction(1)) -> UniPoly:
        return cls([c * 0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Any:
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Any:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([Fraction(other)]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other: Any) -> UniPoly:
        return other if isinstance(other, UniPoly) else UniPoly([other])

    def __add__(self, other: Any) -> UniPoly:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> UniPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> UniPoly:
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> UniPoly:
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [self.coeffs[0] * 0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        out = UniPoly([self.coeffs[0] * 0 + 1]) if self.coeffs else UniPoly([Fraction(1)])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = 1 / other.lead()
        if len(rem) - 1 < dq:
            return UniPoly(), UniPoly(rem)
        quo = [other.lead() * 0] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv_lead
            quo[k] = c
            if _is_zero(c):
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UniPoly(quo), UniPoly(rem[:dq])

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[1]

    def monic(self) -> UniPoly:
        return self * (1 / self.lead())

    def __call__(self, x: Any) -> Any:
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if _is_zero(c):
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if i and c == 1:
                terms.append(mono)
            elif i and c == -1:
                terms.append("-" + mono)
            else:
                cs = str(c)
                if i and (" " in cs or "+" in cs[1:] or "-" in cs[1:]):
                    cs = f"({cs})"
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


def poly_xgcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly([Fraction(1)]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([Fraction(1)])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lead()
    return r0 * inv, s0 * inv, t0 * inv


class NumberField:
    """A cyclic Galois extension ``K = Q[t]/(f)`` with generator ``sigma``."""

    def __init__(self, defining_poly: UniPoly, sigma_image: UniPoly, *, name: str = "",
                 quadratic_m: int | None = None, check_irreducible: bool = True):
        f = UniPoly(Fraction(c) for c in defining_poly.coeffs)
        if f.degree < 1 or f.lead() != 1:
            raise FieldError("defining polynomial must be monic of positive degree")
        self.defining_poly = f
        self.degree = d = f.degree
        self.name = name
        self.sigma_image = UniPoly(Fraction(c) for c in sigma_image.coeffs) % f
        # t^k mod f for d <= k <= 2d-2, used by multiplication
        self._reductions: list[tuple[Fraction, ...]] = []
        power = UniPoly.monomial(d - 1) % f if d > 1 else UniPoly([Fraction(1)])
        t = UniPoly.monomial(1)
        for _ in range(d - 1):
            power = (power * t) % f
            self._reductions.append(self._pad(power))
        self._sigma_cols: dict[int, list[tuple[Fraction, ...]]] = {}
        if check_irreducible and d > 1 and not _irreducible(f):
            raise FieldError(f"{f} is not irreducible over Q")
        if not (f.compose(self.sigma_image) % f).is_zero():
            raise FieldError("sigma image is not a root of the defining polynomial")
        gen = self.gen()
        img = gen
        for k in range(1, d + 1):
            img = self._apply_sigma_once(img)
            if (img == gen) != (k == d):
                raise FieldError(f"sigma does not have exact order {d}")
        if quadratic_m is None and d == 2:
            disc = f[1] ** 2 - 4 * f[0]
            quadratic_m = _arith.squarefree_part(disc)
        self.quadratic_m = quadratic_m

    def _pad(self, p: UniPoly) -> tuple[Fraction, ...]:
        cs = list(p.coeffs) + [Fraction(0)] * (self.degree - len(p.coeffs))
        return tuple(cs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumberField):
            return NotImplemented
        return self is other or (self.defining_poly == other.defining_poly
                                 and self.sigma_image == other.sigma_image)

    def __hash__(self) -> int:
        return hash((self.defining_poly, self.sigma_image))

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"NumberField({label}f={self.defining_poly}, sigma(t)={self.sigma_image})"

    def __call__(self, value: Any) -> NFElement:
        if isinstance(value, NFElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, UniPoly):
            return NFElement(self, self._pad(value % self.defining_poly))
        if isinstance(value, (list, tuple)):
            if len(value) > self.degree:
                return self(UniPoly.from_ints(value))
            cs = [rational(c) for c in value]
            return NFElement(self, tuple(cs) + (Fraction(0),) * (self.degree - len(cs)))
        q = rational(value)
        return NFElement(self, (q,) + (Fraction(0),) * (self.degree - 1))

    def zero(self) -> NFElement:
        return self(0)

    def one(self) -> NFElement:
        return self(1)

    def gen(self) -> NFElement:
        if self.degree == 1:
            return self(-self.defining_poly[0])
        return self([0, 1])

    def _apply_sigma_once(self, a: NFElement) -> NFElement:
        return self(UniPoly(a.coeffs).compose(self.sigma_image))

    def sigma_matrix(self, k: int) -> list[tuple[Fraction, ...]]:
        """Columns of sigma^k on the power basis, built by k-fold composition."""
        k %= self.degree
        cols = self._sigma_cols.get(k)
        if cols is None:
            images = []
            for j in range(self.degree):
                b = self([0] * j + [1])
                for _ in range(k):
                    b = self._apply_sigma_once(b)
                images.append(b.coeffs)
            cols = self._sigma_cols[k] = images
        return cols

    def elements_of_height(self, h: int) -> Iterable[NFElement]:
        """All elements whose coefficients have height exactly ``h``."""
        vals = _arith.rationals_of_height(h)
        for cs in itertools.product(vals, repeat=self.degree):
            if max(_arith.height(c) for c in cs) == h:
                yield NFElement(self, cs)


def _irreducible(f: UniPoly) -> bool:
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(f.coeffs))
    return sympy.Poly(expr, t, domain="QQ").is_irreducible


@dataclass(frozen=True, eq=False)
class NFElement:
    field: NumberField
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.degree:
            raise FieldError("coefficient vector has the wrong length")

    def _other(self, other: Any) -> NFElement:
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("operands belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        raise TypeError(f"cannot combine NFElement with {type(other).__name__}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, NFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return self.coeffs[0]

    def __add__(self, other: Any) -> NFElement:
        o = self._other(other)
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> NFElement:
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Any) -> NFElement:
        o = self._other(other)
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: Any) -> NFElement:
        return self._other(other) - self

    def __mul__(self, other: Any) -> NFElement:
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._other(other)
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = prod[:d]
        for k, c in enumerate(prod[d:]):
            if c:
                red = self.field._reductions[k]
                for j in range(d):
                    out[j] += c * red[j]
        return NFElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> NFElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        g, s, _ = poly_xgcd(UniPoly(self.coeffs), self.field.defining_poly)
        if g.degree != 0:
            raise FieldError("defining polynomial is reducible")
        return self.field(s)

    def __truediv__(self, other: Any) -> NFElement:
        return self * self._other(other).inverse()

    def __rtruediv__(self, other: Any) -> NFElement:
        return self._other(other) * self.inverse()

    def __pow__(self, n: int) -> NFElement:
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.field.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sigma(self, k: int = 1) -> NFElement:
        return apply_automorphism(self.field, k, self)

    def height(self) -> int:
        return max(_arith.height(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"NFElement({self})"

    def __str__(self) -> str:
        s = str(UniPoly(self.coeffs))
        return s


def is_inert(field: NumberField, p: int) -> bool:
    """Whether the prime ``p`` stays prime in ``field``.

    Decided by Dedekind's criterion: when ``f`` has integer coefficients and ``p``
    does not divide its discriminant, ``p`` is inert exactly when ``f`` is
    irreducible modulo ``p``.  Anything outside that case returns False.
    """
    import sympy

    f = field.defining_poly
    if any(c.denominator != 1 for c in f.coeffs) or not _arith.is_prime(p):
        return False
    t = sympy.Symbol("t")
    expr = sum(int(c) * t**i for i, c in enumerate(f.coeffs))
    if sympy.discriminant(expr, t) % p == 0:
        return False
    return sympy.Poly(expr, t, modulus=p).is_irreducible


# ---------------------------------------------------------------- constructors


def quadratic_field(m: int) -> NumberField:
    """``Q(sqrt m)`` with ``f = t^2 - m`` and ``sigma(t) = -t``."""
    if m in (0, 1) or not _arith.is_squarefree(m):
        raise FieldError(f"m = {m} is not a squarefree integer other than 0, 1")
    return NumberField(UniPoly.from_ints([-m, 0, 1]), UniPoly.from_ints([0, -1]),
                       name=f"Q(sqrt({m}))", quadratic_m=m, check_irreducible=False)


def cyclotomic_field(p: int) -> NumberField:
    """``Q(zeta_p)`` for an odd prime ``p``; ``sigma(zeta) = zeta^r`` with ``r`` the least primitive root."""
    if p % 2 == 0 or not _arith.is_prime(p):
        raise FieldError(f"{p} is not an odd prime")
    r = _arith.smallest_primitive_root(p)
    return NumberField(UniPoly.from_ints([1] * p), UniPoly.monomial(r),
                       name=f"Q(zeta_{p})", check_irreducible=False)


def custom_field(defining_poly: Sequence[int | Fraction | str],
                 sigma_image: Sequence[int | Fraction | str], name: str = "") -> NumberField:
    return NumberField(UniPoly.from_ints(defining_poly), UniPoly.from_ints(sigma_image), name=name)


def gaussian_period_field(p: int, d: int) -> NumberField:
    """The degree-``d`` subfield of ``Q(zeta_p)``, generated by a Gaussian period.

    Returns custom cyclic data: the minimal polynomial of the period and the
    image of the period under the generator induced by a primitive root.
    """
    if not _arith.is_prime(p) or p == 2 or (p - 1) % d:
        raise FieldError(f"need an odd prime p with d | p - 1, got p={p}, d={d}")
    if d == p - 1:
        return cyclotomic_field(p)
    big = cyclotomic_field(p)
    r = _arith.smallest_primitive_root(p)
    f = (p - 1) // d

    def period(shift: int) -> NFElement:
        acc = big.zero()
        for j in range(f):
            e = pow(r, shift + d * j, p)
            acc = acc + big(UniPoly.monomial(e))
        return acc

    eta, eta1 = period(0), period(1)
    powers = [big.one()]
    for _ in range(d):
        powers.append(powers[-1] * eta)
    minpoly = _solve_in_span(powers[:d], powers[d])
    defining = UniPoly([-c for c in minpoly] + [Fraction(1)])
    sigma = UniPoly(_solve_in_span(powers[:d], eta1))
    return NumberField(defining, sigma, name=f"degree-{d} subfield of Q(zeta_{p})",
                       check_irreducible=False)


def _solve_in_span(basis: list[NFElement], target: NFElement) -> list[Fraction]:
    """Rational ``c`` with ``sum c_i basis_i == target``; the basis must be independent."""
    n = len(basis)
    rows = [[b.coeffs[r] for b in basis] + [target.coeffs[r]] for r in range(len(target.coeffs))]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, len(rows)) if rows[i][col]), None)
        if piv is None:
            raise FieldError("basis is linearly dependent")
        rows[row], rows[piv] = rows[piv], rows[row]
        inv = 1 / rows[row][col]
        rows[row] = [x * inv for x in rows[row]]
        for i in range(len(rows)):
            if i != row and rows[i][col]:
                c = rows[i][col]
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[row])]
        pivots.append(col)
        row += 1
    if any(r[-1] for r in rows[row:]):
        raise FieldError("target is not in the span")
    return [rows[i][-1] for i in range(n)]


# ---------------------------------------------------------------- operations


def apply_automorphism(field: NumberField, k: int, a: NFElement) -> NFElement:
    """``sigma^k(a)``, with ``k`` reduced modulo the degree."""
    a = field(a)
    k %= field.degree
    if k == 0:
        return a
    cols = field.sigma_matrix(k)
    d = field.degree
    out = [Fraction(0)] * d
    for j, c in enumerate(a.coeffs):
        if c:
            col = cols[j]
            for i in range(d):
                out[i] += c * col[i]
    return NFElement(field, tuple(out))


def field_norm_trace(field: NumberField, a: NFElement) -> tuple[Fraction, Fraction]:
    a = field(a)
    norm = field.one()
    trace = field.zero()
    for k in range(field.degree):
        conj = apply_automorphism(field, k, a)
        norm = norm * conj
        trace = trace + conj
    if not (norm.is_rational() and trace.is_rational()):
        raise FieldError("norm or trace is not rational; Galois data is inconsistent")
    return norm.to_rational(), trace.to_rational()


def field_norm(field: NumberField, a: NFElement) -> Fraction:
    return field_norm_trace(field, a)[0]


class NormStatus(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class NormVerdict:
    status: NormStatus
    witness: NFElement | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.status is NormStatus.YES


#: cap on norm evaluations in the degree > 2 search
DEFAULT_MAX_CANDIDATES = 1_000_000


def is_galois_norm(field: NumberField, c: Fraction | int, height_bound: int = 4,
                   max_candidates: int = DEFAULT_MAX_CANDIDATES) -> NormVerdict:
    """Decide whether ``c`` is a norm from ``field``.

    Quadratic fields are decided exactly with Hilbert symbols.  In higher degree
    only a bounded witness search is run, so the answer is YES or UNKNOWN.
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("0 is not a norm of a nonzero element")
    if c == 1:
        return NormVerdict(NormStatus.YES, field.one())
    if field.degree == 1:
        return NormVerdict(NormStatus.YES, field(c))
    if field.degree == 2:
        return _quadratic_norm(field, c, height_bound)
    witness, exhausted = _search(field, c, height_bound, max_candidates)
    if witness is not None:
        return NormVerdict(NormStatus.YES, witness)
    reach = f"height <= {height_bound}" if exhausted else f"the first {max_candidates} candidates"
    return NormVerdict(NormStatus.UNKNOWN, None, f"no witness among {reach}")


def _quadratic_norm(field: NumberField, c: Fraction, height_bound: int) -> NormVerdict:
    from .brauer import hilbert_symbol, oo

    m = field.quadratic_m
    places = {2, *_arith.prime_divisors(c.numerator), *_arith.prime_divisors(c.denominator),
              *_arith.prime_divisors(m)}
    bad = [v for v in [oo, *sorted(places)] if hilbert_symbol(c, m, v) == -1]
    if bad:
        return NormVerdict(NormStatus.NO, None, "Hilbert symbol (c, m) is -1 at " +
                           ", ".join(str(v) for v in bad))
    witness = quadratic_norm_witness(field, c, 64 * max(height_bound, 1))
    return NormVerdict(NormStatus.YES, witness,
                       "" if witness is not None else "local conditions hold; witness search exhausted")


def quadratic_norm_witness(field: NumberField, c: Fraction, bound: int) -> NFElement | None:
    """Search ``X^2 - m Y^2 = c Z^2`` with ``0 < Z, |Y| <= bound`` in order of ``max(Z, |Y|)``.

    A solution gives the witness ``(X + Y sqrt m) / Z`` written in the field's own
    power basis.
    """
    m = field.quadratic_m
    # sqrt(m) as an element: for t^2 + b t + e, (2t + b)^2 = disc = m * s^2
    b, e = field.defining_poly[1], field.defining_poly[0]
    disc = b * b - 4 * e
    s2 = disc / m
    s = Fraction(_isqrt_exact(s2.numerator), _isqrt_exact(s2.denominator))
    root = (field([b, 2])) * (1 / s)
    num, den = c.numerator, c.denominator
    for level in range(1, bound + 1):
        for z in range(1, level + 1):
            for y in range(0, level + 1):
                if max(z, y) != level:
                    continue
                # scale Z by den so the right side is an integer
                zz = z * den
                rhs = num * den * z * z + m * y * y
                if rhs >= 0 and _arith.is_square(rhs):
                    return (field(isqrt(rhs)) + root * y) * Fraction(1, zz)
    return None


def _isqrt_exact(n: int) -> int:
    r = isqrt(n)
    if r * r != n:
        raise FieldError("discriminant data is not consistent with m")
    return r


def bounded_norm_search(field: NumberField, c: Fraction, height_bound: int,
                        max_candidates: int = DEFAULT_MAX_CANDIDATES) -> NFElement | None:
    """Enumerate elements by coefficient height ``1..height_bound`` looking for norm ``c``."""
    return _search(field, Fraction(c), height_bound, max_candidates)[0]


_BLOCK = 1 << 15


@lru_cache(maxsize=256)
def _search(field: NumberField, c: Fraction, height_bound: int,
            max_candidates: int) -> tuple[NFElement | None, bool]:
    """Witness (or None) and whether the whole height range was covered.

    Norms of a block of candidates are estimated in floating point from the
    complex roots of the defining polynomial; only near hits are checked with
    exact arithmetic, so the result does not depend on rounding.
    """
    d = field.degree
    roots = np.roots([float(x) for x in reversed(field.defining_poly.coeffs)])
    powers = roots[None, :] ** np.arange(d)[:, None]          # powers[i, k] = root_k ** i
    abs_powers = np.abs(powers)
    vals = _arith.rationals_of_height(height_bound)
    floats = np.array([float(v) for v in vals])
    layer_end = [len(_arith.rationals_of_height(h)) for h in range(height_bound + 1)]
    layer_end[0] = 0
    target = float(c)
    radix = None
    seen = 0
    for h in range(1, height_bound + 1):
        n, lo = layer_end[h], layer_end[h - 1]
        radix = n ** np.arange(d, dtype=np.int64)
        total = n**d
        for start in range(0, total, _BLOCK):
            idx = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
            digits = (idx[:, None] // radix[None, :]) % n
            digits = digits[digits.max(axis=1) >= lo]
            if seen + len(digits) > max_candidates:
                digits = digits[:max_candidates - seen]
            seen += len(digits)
            coeffs = floats[digits]
            factors = coeffs @ powers
            norms = np.prod(factors, axis=1).real
            # each factor carries absolute error ~ eps * (|coeffs| @ |powers|), so the
            # product has relative error ~ eps * sum_k scale_k / |factor_k|
            with np.errstate(divide="ignore", invalid="ignore"):
                rel = np.sum((np.abs(coeffs) @ abs_powers) / np.abs(factors), axis=1)
            tol = 1e-10 * (np.abs(norms) * rel + abs(target) + 1.0)
            near = np.nonzero(~(np.abs(norms - target) > tol))[0]
            for row in near:
                cand = NFElement(field, tuple(vals[j] for j in digits[row]))
                if field_norm(field, cand) == c:
                    return cand, True
            if seen >= max_candidates:
                return None, False
    return None, True
