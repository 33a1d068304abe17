"""Exact square matrices over a number field."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .numberfield import NFElement, NumberField, UniPoly
from .permcycle import Permutation


class MatrixNF:
    """Immutable ``n x n`` matrix with entries in one number field."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: NumberField, rows: Sequence[Sequence[Any]]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.field = field
        self.n = n
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)

    @classmethod
    def identity(cls, field: NumberField, n: int) -> MatrixNF:
        return cls.scalar(field, n, field.one())

    @classmethod
    def scalar(cls, field: NumberField, n: int, c: Any) -> MatrixNF:
        z = field.zero()
        c = field(c)
        return cls(field, [[c if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, field: NumberField, diag: Sequence[Any]) -> MatrixNF:
        z = field.zero()
        n = len(diag)
        return cls(field, [[diag[i] if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> NFElement:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixNF):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: MatrixNF) -> MatrixNF:
        return MatrixNF(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: MatrixNF) -> MatrixNF:
        return MatrixNF(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other: Any) -> MatrixNF:
        if not isinstance(other, MatrixNF):
            c = self.field(other)
            return MatrixNF(self.field, [[a * c for a in r] for r in self.rows])
        cols = list(zip(*other.rows))
        z = self.field.zero()
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = z
                for a, b in zip(r, col):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatrixNF(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MatrixNF:
        out, base = MatrixNF.identity(self.field, self.n), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def trace(self) -> NFElement:
        acc = self.field.zero()
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def __repr__(self) -> str:
        return "MatrixNF([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"


def block_diag(*blocks: MatrixNF) -> MatrixNF:
    field = blocks[0].field
    n = sum(b.n for b in blocks)
    z = field.zero()
    rows = [[z] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[off + i][off + j] = b.rows[i][j]
        off += b.n
    return MatrixNF(field, rows)


def determinant(m: MatrixNF) -> NFElement:
    """Gaussian elimination, exact."""
    a = [list(r) for r in m.rows]
    n = m.n
    det = m.field.one()
    for col in range(n):
        piv = next((i for i in range(col, n) if not a[i][col].is_zero()), None)
        if piv is None:
            return m.field.zero()
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = p.inverse()
        for i in range(col + 1, n):
            if a[i][col].is_zero():
                continue
            f = a[i][col] * inv
            a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


def hessenberg(m: MatrixNF) -> list[list[NFElement]]:
    """Upper Hessenberg form similar to ``m``."""
    h = [list(r) for r in m.rows]
    n = m.n
    for col in range(n - 2):
        piv = next((i for i in range(col + 1, n) if not h[i][col].is_zero()), None)
        if piv is None:
            continue
        if piv != col + 1:
            h[piv], h[col + 1] = h[col + 1], h[piv]
            for r in h:
                r[piv], r[col + 1] = r[col + 1], r[piv]
        inv = h[col + 1][col].inverse()
        for i in range(col + 2, n):
            if h[i][col].is_zero():
                continue
            u = h[i][col] * inv
            # row_i -= u row_{col+1}; column_{col+1} += u column_i keeps similarity
            h[i] = [x - u * y for x, y in zip(h[i], h[col + 1])]
            for r in h:
                r[col + 1] = r[col + 1] + u * r[i]
    return h


def char_poly(m: MatrixNF) -> UniPoly:
    """``det(tI - m)``, monic of degree ``n``, with coefficients in the field."""
    h = hessenberg(m)
    n = m.n
    field = m.field
    one = field.one()
    t = UniPoly([field.zero(), one])
    polys = [UniPoly([one])]
    for k in range(1, n + 1):
        p = (t - h[k - 1][k - 1]) * polys[k - 1]
        prod = one
        for i in range(k - 1, 0, -1):
            prod = prod * h[i][i - 1]
            c = h[i - 1][k - 1] * prod
            if not c.is_zero():
                p = p - polys[i - 1] * c
        polys.append(p)
    return polys[n]


def min_poly(m: MatrixNF) -> UniPoly:
    """Monic annihilating polynomial of least degree, by a dependency search on ``I, m, m^2, ...``."""
    field = m.field
    n = m.n
    basis: list[tuple[int, list[NFElement], list[NFElement]]] = []  # (pivot, vector, combo)
    power = MatrixNF.identity(field, n)
    for k in range(n + 1):
        vec = [x for r in power.rows for x in r]
        combo = [field.zero()] * (n + 1)
        combo[k] = field.one()
        for piv, bvec, bcombo in basis:
            c = vec[piv]
            if not c.is_zero():
                vec = [x - c * y for x, y in zip(vec, bvec)]
                combo = [x - c * y for x, y in zip(combo, bcombo)]
        piv = next((i for i, x in enumerate(vec) if not x.is_zero()), None)
        if piv is None:
            # combo annihilates m with leading term at degree k
            return UniPoly(combo[:k + 1]).monic()
        inv = vec[piv].inverse()
        vec = [x * inv for x in vec]
        combo = [x * inv for x in combo]
        # keep the basis fully reduced at the new pivot
        new_basis = []
        for bp, bv, bc in basis:
            c = bv[piv]
            if not c.is_zero():
                bv = [x - c * y for x, y in zip(bv, vec)]
                bc = [x - c * y for x, y in zip(bc, combo)]
            new_basis.append((bp, bv, bc))
        basis = new_basis + [(piv, vec, combo)]
        power = power * m
    raise AssertionError("no dependency found among n+1 powers")


@dataclass(frozen=True)
class MonomialData:
    """``m[perm(j)][j] == scalars[perm(j)]`` for every column ``j`` (1-based perm, 0-based rows)."""

    perm: Permutation
    scalars: tuple[NFElement, ...]

    def to_matrix(self, field: NumberField) -> MatrixNF:
        n = len(self.scalars)
        z = field.zero()
        rows = [[z] * n for _ in range(n)]
        for j in range(n):
            i = self.perm(j + 1) - 1
            rows[i][j] = self.scalars[i]
        return MatrixNF(field, rows)


def monomial_structure(m: MatrixNF) -> MonomialData | None:
    """Permutation and row scalars if ``m`` has one nonzero entry per row and column."""
    images = []
    scalars: list[NFElement | None] = [None] * m.n
    for j in range(m.n):
        nz = [i for i in range(m.n) if not m.rows[i][j].is_zero()]
        if len(nz) != 1:
            return None
        images.append(nz[0] + 1)
        scalars[nz[0]] = m.rows[nz[0]][j]
    if any(s is None for s in scalars):
        return None
    return MonomialData(Permutation(tuple(images)), tuple(scalars))


def build_cycle_matrix(field: NumberField, entries: Sequence[Any]) -> MatrixNF:
    """``a_1..a_{k-1}`` on the superdiagonal and ``a_k`` in the lower-left corner."""
    k = len(entries)
    vals = [field(e) for e in entries]
    if k == 0 or any(v.is_zero() for v in vals):
        raise ValueError("cycle matrix entries must be nonzero")
    if k == 1:
        return MatrixNF(field, [[vals[0]]])
    z = field.zero()
    rows = [[z] * k for _ in range(k)]
    for i in range(k - 1):
        rows[i][i + 1] = vals[i]
    rows[k - 1][0] = vals[k - 1]
    return MatrixNF(field, rows)
