"""Exact linear algebra over Z, Q, Z/m and the cyclotomic field Q(zeta_12).

Nothing here touches floating point. Matrices are small (at most 6x6), so
plain tuples of Python integers are used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rows = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    entries: Rows

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> IntMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> IntMatrix:
        return cls(tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def diag(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def block_diag(cls, *blocks: IntMatrix) -> IntMatrix:
        n = sum(b.rows for b in blocks)
        out = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[off + i][off + j] = b.entries[i][j]
            off += b.rows
        return cls.of(out)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries))
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries)
        )

    def __add__(self, other: IntMatrix) -> IntMatrix:
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(tuple(tuple(k * a for a in r) for r in self.entries))

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.entries)))

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector; works for ints and Fractions alike."""
        return tuple(sum(a * x for a, x in zip(r, v)) for r in self.entries)

    def det(self) -> int:
        return det(self)

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.det()) == 1

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.entries for x in r)

    def power(self, k: int) -> IntMatrix:
        out = IntMatrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def order(self, bound: int = 60) -> int:
        """Multiplicative order, or raise if it exceeds ``bound``."""
        ident = IntMatrix.identity(self.rows)
        acc = self
        for k in range(1, bound + 1):
            if acc == ident:
                return k
            acc = acc @ self
        raise ValueError("matrix has infinite or very large order")

    def inverse_unimodular(self) -> IntMatrix:
        inv = rational_inverse(self)
        if any(x.denominator != 1 for r in inv for x in r):
            raise ValueError("matrix is not unimodular")
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in inv))

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in self.entries) + "]"


def det(m: IntMatrix) -> int:
    """Bareiss fraction-free determinant."""
    n = m.rows
    if n != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(m: IntMatrix) -> list[list[Fraction]]:
    n = m.rows
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.entries)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [r[n:] for r in aug]


def rank_q(rows: Sequence[Sequence]) -> int:
    """Rank over Q of a list of rows (ints or Fractions)."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    rank, ncols = 0, len(a[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(rank + 1, len(a)):
            if a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Return U, D, V with U*M*V = D diagonal, d1 | d2 | ..., U and V unimodular.

    Pivot choice is the entry of least absolute value in the remaining block.
    Diagonal entries come out non-negative.
    """
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src: int, dst: int, k: int) -> None:
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src: int, dst: int, k: int) -> None:
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        block = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j] != 0]
        if not block:
            break
        _, pi, pj = min(block)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, pi, pj = min(cand)
            swap_rows(t, pi)
            swap_cols(t, pj)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return SmithForm(IntMatrix.of(u), IntMatrix.of(a), IntMatrix.of(v))


# ---------------------------------------------------------------------------
# torsion data on (Q/Z)^k


def _frac_mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, order=True)
class TorusPoint:
    """Point of (Q/Z)^k with canonical coordinates in [0, 1)."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(_frac_mod1(Fraction(c)) for c in self.coords))

    @classmethod
    def zero(cls, k: int = 4) -> TorusPoint:
        return cls((Fraction(0),) * k)

    @classmethod
    def parse(cls, items: Sequence[str | int | Fraction]) -> TorusPoint:
        return cls(tuple(Fraction(x) for x in items))

    def __add__(self, other: TorusPoint) -> TorusPoint:
        return TorusPoint(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: TorusPoint) -> TorusPoint:
        return TorusPoint(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> TorusPoint:
        return TorusPoint(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> TorusPoint:
        return TorusPoint(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def denominator(self) -> int:
        return reduce(lcm, (c.denominator for c in self.coords), 1)

    def torsion_order(self) -> int:
        return self.denominator

    def transform(self, m: IntMatrix, shift: TorusPoint | None = None) -> TorusPoint:
        image = TorusPoint(m.apply(self.coords))
        return image + shift if shift is not None else image

    def __str__(self) -> str:
        return "(" + ",".join(format_rational(c) for c in self.coords) + ")"


@dataclass(frozen=True, order=True)
class TorsionVector:
    """Element of (Z/m)^k, stored with residues in [0, m)."""

    modulus: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) % self.modulus for c in self.coords))

    @classmethod
    def zero(cls, modulus: int, k: int = 4) -> TorsionVector:
        return cls(modulus, (0,) * k)

    @classmethod
    def from_rationals(cls, modulus: int, items: Sequence[str | int | Fraction]) -> TorsionVector:
        out = []
        for x in items:
            q = Fraction(x) * modulus
            if q.denominator != 1:
                raise ValueError(f"translation coordinate {x} does not have denominator dividing {modulus}")
            out.append(int(q))
        return cls(modulus, tuple(out))

    def __add__(self, other: TorsionVector) -> TorsionVector:
        return TorsionVector(self.modulus, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: TorsionVector) -> TorsionVector:
        return TorsionVector(self.modulus, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> TorsionVector:
        return TorsionVector(self.modulus, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> TorsionVector:
        return TorsionVector(self.modulus, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def transform(self, m: IntMatrix) -> TorsionVector:
        return TorsionVector(self.modulus, m.apply(self.coords))

    def as_point(self) -> TorusPoint:
        return TorusPoint(tuple(Fraction(c, self.modulus) for c in self.coords))

    def index(self) -> int:
        """Lexicographic index in [0, m^k)."""
        out = 0
        for c in self.coords:
            out = out * self.modulus + c
        return out

    @classmethod
    def from_index(cls, modulus: int, idx: int, k: int = 4) -> TorsionVector:
        coords = []
        for _ in range(k):
            coords.append(idx % modulus)
            idx //= modulus
        return cls(modulus, tuple(reversed(coords)))

    def __str__(self) -> str:
        return "(" + ",".join(format_rational(Fraction(c, self.modulus)) for c in self.coords) + ")"


class _Continuum:
    """Marker for a positive-dimensional solution set."""

    _instance: _Continuum | None = None

    def __new__(cls) -> _Continuum:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "CONTINUUM"

    def __reduce__(self):
        return (_Continuum, ())


CONTINUUM = _Continuum()
SolutionSet = Union[frozenset, _Continuum]


def solve_congruence(m: IntMatrix, b: Sequence[Fraction | int] | TorusPoint) -> SolutionSet:
    """All x in (Q/Z)^k with M x = b mod Z^k.

    Returns a frozenset of TorusPoint, or CONTINUUM when the solution set is
    positive-dimensional.
    """
    rhs = b.coords if isinstance(b, TorusPoint) else tuple(Fraction(x) for x in b)
    snf = smith_normal_form(m)
    c = snf.U.apply(rhs)
    diag = [snf.D[i, i] if i < snf.D.rows else 0 for i in range(m.cols)]
    free = False
    choices: list[list[Fraction]] = []
    for i in range(m.cols):
        d = diag[i]
        ci = c[i] if i < len(c) else Fraction(0)
        if d == 0:
            if _frac_mod1(Fraction(ci)) != 0:
                return frozenset()
            free = True
            choices.append([Fraction(0)])
        else:
            choices.append([(Fraction(ci) + k) / d for k in range(abs(d))])
    # rows beyond the column count must also be satisfied
    for i in range(m.cols, m.rows):
        if _frac_mod1(Fraction(c[i])) != 0:
            return frozenset()
    if free:
        return CONTINUUM
    return frozenset(TorusPoint(snf.V.apply(y)) for y in product(*choices))


# ---------------------------------------------------------------------------
# exterior square


PAIRS4 = tuple((i, j) for i in range(4) for j in range(i + 1, 4))


def exterior_square(m: IntMatrix) -> IntMatrix:
    """Matrix of the induced map on the second exterior power, basis e_i^e_j with i<j."""
    n = m.rows
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return IntMatrix.of(
        [
            [m[k, i] * m[l, j] - m[l, i] * m[k, j] for (i, j) in pairs]
            for (k, l) in pairs
        ]
    )


def fixed_subspace_rank(ms: Sequence[IntMatrix], dim: int | None = None) -> int:
    """Dimension over Q of the common fixed space of the given square matrices."""
    if not ms:
        if dim is None:
            raise ValueError("dimension required for an empty list")
        return dim
    n = ms[0].rows
    if dim is not None and dim != n:
        raise ValueError("dimension mismatch")
    ident = IntMatrix.identity(n)
    rows = [r for m in ms for r in (m - ident).entries]
    return n - rank_q(rows)


# ---------------------------------------------------------------------------
# cyclotomic field Q(zeta_12) = Q[x]/(x^4 - x^2 + 1)


def _reduce_poly(c: list[Fraction]) -> tuple[Fraction, ...]:
    # x^4 = x^2 - 1
    c = list(c) + [Fraction(0)] * max(0, 4 - len(c))
    for k in range(len(c) - 1, 3, -1):
        t = c[k]
        if t:
            c[k] = Fraction(0)
            c[k - 2] += t
            c[k - 4] -= t
    return tuple(c[:4])


@dataclass(frozen=True)
class Cyc:
    """Element c0 + c1 z + c2 z^2 + c3 z^3 of Q(z), z a primitive 12th root of unity."""

    c: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        if len(self.c) != 4:
            raise ValueError("need four coefficients")
        object.__setattr__(self, "c", tuple(Fraction(x) for x in self.c))

    @classmethod
    def of(cls, *coeffs: int | Fraction | str) -> Cyc:
        vals = [Fraction(x) for x in coeffs] + [Fraction(0)] * (4 - len(coeffs))
        return cls(tuple(vals))

    @classmethod
    def rational(cls, q: int | Fraction) -> Cyc:
        return cls.of(q)

    @classmethod
    def zeta(cls, k: int = 1) -> Cyc:
        """zeta_12 ** k."""
        base = [Fraction(0)] * 12
        base[k % 12] = Fraction(1)
        return cls(_reduce_poly(base))

    @classmethod
    def coerce(cls, x: Cyc | int | Fraction) -> Cyc:
        return x if isinstance(x, Cyc) else cls.of(x)

    def __add__(self, other: Cyc | int | Fraction) -> Cyc:
        o = Cyc.coerce(other)
        return Cyc(tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self) -> Cyc:
        return Cyc(tuple(-a for a in self.c))

    def __sub__(self, other: Cyc | int | Fraction) -> Cyc:
        return self + (-Cyc.coerce(other))

    def __rsub__(self, other: Cyc | int | Fraction) -> Cyc:
        return Cyc.coerce(other) - self

    def __mul__(self, other: Cyc | int | Fraction) -> Cyc:
        o = Cyc.coerce(other)
        prod_ = [Fraction(0)] * 7
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod_[i + j] += a * b
        return Cyc(_reduce_poly(prod_))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Cyc:
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyc.of(1)
        for _ in range(k):
            out = out * self
        return out

    def _mult_matrix(self) -> list[list[Fraction]]:
        cols = [(self * Cyc.zeta(j)).c for j in range(4)]
        return [[cols[j][i] for j in range(4)] for i in range(4)]

    def inverse(self) -> Cyc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        a = self._mult_matrix()
        aug = [row + [Fraction(int(i == 0))] for i, row in enumerate(a)]
        n = 4
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Cyc(tuple(aug[i][n] for i in range(n)))

    def __truediv__(self, other: Cyc | int | Fraction) -> Cyc:
        return self * Cyc.coerce(other).inverse()

    def __rtruediv__(self, other: Cyc | int | Fraction) -> Cyc:
        return Cyc.coerce(other) * self.inverse()

    def conjugate(self) -> Cyc:
        """Complex conjugation, z -> z^11."""
        out = Cyc.of(0)
        for k, a in enumerate(self.c):
            if a:
                out = out + Cyc.zeta(-k) * a
        return out

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc.of(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return f"Cyc({', '.join(format_rational(x) for x in self.c)})"


ZETA12 = Cyc.zeta(1)
ZETA6 = Cyc.zeta(2)
ZETA4 = Cyc.zeta(3)
ZETA3 = Cyc.zeta(4)
I_UNIT = ZETA4


@dataclass(frozen=True)
class CycMatrix2:
    """2x2 matrix over Q(zeta_12), rows ((a, b), (c, d))."""

    a: Cyc
    b: Cyc
    c: Cyc
    d: Cyc

    @classmethod
    def of(cls, rows: Sequence[Sequence[Cyc | int | Fraction]]) -> CycMatrix2:
        (a, b), (c, d) = rows
        return cls(Cyc.coerce(a), Cyc.coerce(b), Cyc.coerce(c), Cyc.coerce(d))

    @classmethod
    def identity(cls) -> CycMatrix2:
        return cls.of([[1, 0], [0, 1]])

    @classmethod
    def diag(cls, x: Cyc, y: Cyc) -> CycMatrix2:
        return cls.of([[x, 0], [0, y]])

    def __matmul__(self, o: CycMatrix2) -> CycMatrix2:
        return CycMatrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self) -> CycMatrix2:
        return CycMatrix2(-self.a, -self.b, -self.c, -self.d)

    def apply(self, v: tuple[Cyc, Cyc]) -> tuple[Cyc, Cyc]:
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def det(self) -> Cyc:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Cyc:
        return self.a + self.d

    def inverse(self) -> CycMatrix2:
        dinv = self.det().inverse()
        return CycMatrix2(self.d * dinv, -self.b * dinv, -self.c * dinv, self.a * dinv)

    def is_scalar(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == self.d

    def order(self, bound: int = 24) -> int:
        ident = CycMatrix2.identity()
        acc = self
        for k in range(1, bound + 1):
            if acc == ident:
                return k
            acc = acc @ self
        raise ValueError("matrix has no finite order below the bound")


Line = tuple[Cyc, Cyc]


class _AllLines:
    def __repr__(self) -> str:
        return "ALL_LINES"

    def __reduce__(self):
        return (_all_lines, ())


_ALL = _AllLines()


def _all_lines() -> _AllLines:
    return _ALL


ALL_LINES = _ALL


def normalize_line(v: tuple[Cyc, Cyc]) -> Line:
    """Canonical projective representative: first nonzero coordinate equal to 1."""
    x, y = v
    if not x.is_zero():
        return (Cyc.of(1), y / x)
    if not y.is_zero():
        return (Cyc.of(0), Cyc.of(1))
    raise ValueError("zero vector has no projective class")


def eigen_lines(m: CycMatrix2) -> list[tuple[Cyc, Line]] | _AllLines:
    """Invariant lines of a finite-order 2x2 matrix over Q(zeta_12).

    Scalar matrices return ALL_LINES. Otherwise the two eigenlines, sorted by
    the exponent k of the eigenvalue zeta_12**k.
    """
    if m.is_scalar():
        return ALL_LINES
    tr, dt = m.trace(), m.det()
    roots = [k for k in range(12) if (Cyc.zeta(k) * Cyc.zeta(k) - tr * Cyc.zeta(k) + dt).is_zero()]
    if not roots:
        raise ValueError("characteristic polynomial does not split over Q(zeta_12)")
    if len(roots) == 1:
        raise ValueError("repeated eigenvalue on a non-scalar matrix (not of finite order)")
    out = []
    for k in roots:
        lam = Cyc.zeta(k)
        if not ((m.a - lam).is_zero() and m.b.is_zero()):
            vec = (m.b, lam - m.a)
        else:
            vec = (lam - m.d, m.c)
        out.append((lam, normalize_line(vec)))
    return out


def apply_to_line(m: CycMatrix2, line: Line) -> Line:
    return normalize_line(m.apply(line))


# ---------------------------------------------------------------------------
# formatting


def format_rational(q: Fraction | int) -> str:
    """Canonical 'p/q' string; integers print without denominator."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_cyc(x: Cyc) -> str:
    terms = []
    names = ["", "z", "z^2", "z^3"]
    for k, a in enumerate(x.c):
        if a:
            coef = format_rational(a)
            terms.append(coef if k == 0 else (f"{coef}*{names[k]}" if a != 1 else names[k]))
    return "+".join(terms) if terms else "0"


def lcm_all(values: Iterable[int]) -> int:
    return reduce(lcm, values, 1)


def gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)
