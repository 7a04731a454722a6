"""The canonical pairs (A, G0) of abelian surfaces with symplectic linear groups.

Every linear generator is stored twice: as a 2x2 matrix over Q(zeta_12)
acting on C^2, and as the 4x4 integer matrix it induces on the period
lattice. The integer matrix is derived from the complex one and the lattice
embedding, then checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .algebra import (
    I_UNIT,
    ZETA3,
    ZETA6,
    Cyc,
    CycMatrix2,
    IntMatrix,
    rank_q,
)


@dataclass(frozen=True)
class LinearPart:
    """A symplectic linear automorphism carried on Z^4 and on C^2."""

    int_matrix: IntMatrix
    cx_matrix: CycMatrix2

    @classmethod
    def identity(cls) -> LinearPart:
        return cls(IntMatrix.identity(4), CycMatrix2.identity())

    def __matmul__(self, other: LinearPart) -> LinearPart:
        return LinearPart(self.int_matrix @ other.int_matrix, self.cx_matrix @ other.cx_matrix)

    def inverse(self) -> LinearPart:
        return LinearPart(self.int_matrix.inverse_unimodular(), self.cx_matrix.inverse())

    def is_identity(self) -> bool:
        return self.int_matrix == IntMatrix.identity(4)

    def is_minus_identity(self) -> bool:
        return self.int_matrix == -IntMatrix.identity(4)

    def order(self) -> int:
        return self.int_matrix.order()

    def sort_key(self) -> tuple[int, ...]:
        return self.int_matrix.flat()

    def __lt__(self, other: LinearPart) -> bool:
        return self.sort_key() < other.sort_key()


Embedding = tuple[tuple[Cyc, Cyc], ...]

GENERATOR_SYMBOLS = ("g2", "g3", "g4", "g6", "h", "k", "l", "r", "t")

# generators of each linear group, by model-independent symbol
G0_GENERATORS: dict[str, tuple[str, ...]] = {
    "1": (),
    "C2": ("g2",),
    "C3": ("g3",),
    "C4": ("g4",),
    "C6": ("g6",),
    "Q8": ("h", "k"),
    "BD12": ("h", "l"),
    "BT24": ("r", "t"),
}

G0_ORDERS = {"1": 1, "C2": 2, "C3": 3, "C4": 4, "C6": 6, "Q8": 8, "BD12": 12, "BT24": 24}


def _coords(v: tuple[Cyc, Cyc]) -> list[Fraction]:
    return list(v[0].c) + list(v[1].c)


def integer_matrix_from_complex(cx: CycMatrix2, embedding: Embedding) -> IntMatrix:
    """Matrix of ``cx`` on the lattice spanned by ``embedding`` (columns are images).

    Raises ValueError if the lattice is not preserved.
    """
    basis = [_coords(v) for v in embedding]
    cols = []
    for v in embedding:
        target = _coords(cx.apply(v))
        # solve sum_k c_k basis_k = target over Q (8 equations, 4 unknowns)
        aug = [[basis[k][row] for k in range(4)] + [target[row]] for row in range(8)]
        piv_cols = []
        r = 0
        for c in range(4):
            p = next((i for i in range(r, 8) if aug[i][c] != 0), None)
            if p is None:
                continue
            aug[r], aug[p] = aug[p], aug[r]
            pv = aug[r][c]
            aug[r] = [x / pv for x in aug[r]]
            for i in range(8):
                if i != r and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
            piv_cols.append(c)
            r += 1
        if len(piv_cols) != 4 or any(aug[i][4] != 0 for i in range(4, 8)):
            raise ValueError("image not in the span of the lattice")
        sol = [aug[i][4] for i in range(4)]
        if any(x.denominator != 1 for x in sol):
            raise ValueError("complex matrix does not preserve the lattice")
        cols.append([int(x) for x in sol])
    return IntMatrix.of([[cols[j][i] for j in range(4)] for i in range(4)])


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    display: str
    embedding: Embedding
    generators: dict[str, LinearPart] = field(hash=False, compare=False)

    def generator(self, symbol: str) -> LinearPart:
        try:
            return self.generators[symbol]
        except KeyError:
            raise KeyError(f"generator {symbol!r} is not defined on model {self.name}") from None

    def embed(self, v: tuple[int, ...]) -> tuple[Cyc, Cyc]:
        x, y = Cyc.of(0), Cyc.of(0)
        for c, (ex, ey) in zip(v, self.embedding):
            x = x + ex * c
            y = y + ey * c
        return x, y

    def supports(self, g0_name: str) -> bool:
        return g0_name in G0_GENERATORS and all(s in self.generators for s in G0_GENERATORS[g0_name])

    def g0_names(self) -> list[str]:
        return [g for g in G0_GENERATORS if self.supports(g)]

    def check(self) -> None:
        """Validate compatibility squares, determinants and orders."""
        for sym, lp in self.generators.items():
            for j in range(4):
                e = tuple(int(i == j) for i in range(4))
                lhs = self.embed(lp.int_matrix.apply(e))
                rhs = lp.cx_matrix.apply(self.embed(e))
                if lhs != rhs:
                    raise AssertionError(f"{self.name}:{sym} compatibility square fails")
            if lp.cx_matrix.det() != Cyc.of(1):
                raise AssertionError(f"{self.name}:{sym} is not symplectic")
            if lp.int_matrix.order() != lp.cx_matrix.order():
                raise AssertionError(f"{self.name}:{sym} order mismatch")


def _make(name: str, display: str, embedding: Embedding, cx: dict[str, CycMatrix2]) -> SurfaceModel:
    lattice = [_coords(v) for v in embedding]
    if rank_q(lattice) != 4:
        raise AssertionError("embedding is not a lattice of rank 4")
    gens = {s: LinearPart(integer_matrix_from_complex(m, embedding), m) for s, m in cx.items()}
    model = SurfaceModel(name, display, embedding, gens)
    model.check()
    return model


def _pair(x, y) -> tuple[Cyc, Cyc]:
    return (Cyc.coerce(x), Cyc.coerce(y))


def _product_embedding(tau: Cyc) -> Embedding:
    return (_pair(1, 0), _pair(tau, 0), _pair(0, 1), _pair(0, tau))


def _left_mult(a: Cyc, b: Cyc) -> CycMatrix2:
    """Left multiplication by a + j*b on H = C + jC, in coordinates q = z1 + j*z2."""
    return CycMatrix2.of([[a, -b.conjugate()], [b, a.conjugate()]])


MINUS_ONE = CycMatrix2.of([[-1, 0], [0, -1]])
HALF = Fraction(1, 2)


@cache
def build_model(name: str) -> SurfaceModel:
    """Return the named model with validated generators."""
    z3, z6, i = ZETA3, ZETA6, I_UNIT
    if name == "generic":
        return _make("generic", "A", _product_embedding(i), {"g2": MINUS_ONE})
    if name == "e2-i":
        g4 = CycMatrix2.diag(i, -i)
        h = CycMatrix2.of([[0, -1], [1, 0]])
        return _make("e2-i", "E_i^2", _product_embedding(i), {"g2": MINUS_ONE, "g4": g4, "h": h, "k": g4})
    if name == "e2-zeta3":
        g3 = CycMatrix2.diag(z3, z3.inverse())
        return _make("e2-zeta3", "E_zeta3^2", _product_embedding(z3), {"g2": MINUS_ONE, "g3": g3})
    if name == "e2-zeta6":
        g3 = CycMatrix2.diag(z3, z3.inverse())
        g6 = CycMatrix2.diag(z6, z6.inverse())
        h = CycMatrix2.of([[0, -1], [1, 0]])
        return _make(
            "e2-zeta6",
            "E_zeta6^2",
            _product_embedding(z3),
            {"g2": MINUS_ONE, "g3": g3, "g6": g6, "h": h, "l": g6},
        )
    if name == "quaternionic":
        one = Cyc.of(1)
        half_1pi = (one + i) * HALF
        half_1mi = (one - i) * HALF
        # basis (1, i, j, t) with t = (1+i+j+k)/2 = (1+i)/2 + j(1-i)/2
        emb = (_pair(1, 0), _pair(i, 0), _pair(0, 1), (half_1pi, half_1mi))
        qi = _left_mult(i, Cyc.of(0))
        qj = _left_mult(Cyc.of(0), one)
        t = _left_mult(half_1pi, half_1mi)
        # r = (1+i+j-k)/2 = (1+i)/2 + j(1+i)/2
        r = _left_mult(half_1pi, half_1pi)
        t2 = t @ t
        return _make(
            "quaternionic",
            "H/Gamma",
            emb,
            {"g2": MINUS_ONE, "g3": t2, "g4": qi, "g6": t, "h": qj, "k": qi, "r": r, "t": t},
        )
    raise KeyError(f"unknown model {name!r}")


MODEL_NAMES = ("generic", "e2-i", "e2-zeta3", "e2-zeta6", "quaternionic")


def all_models() -> list[SurfaceModel]:
    return [build_model(n) for n in MODEL_NAMES]


def linear_closure(gens: list[LinearPart], bound: int = 200) -> list[LinearPart]:
    """Finite group generated by linear parts, sorted by integer-matrix entries."""
    ident = LinearPart.identity()
    seen = {ident.int_matrix: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x @ g
                if y.int_matrix not in seen:
                    seen[y.int_matrix] = y
                    nxt.append(y)
                    if len(seen) > bound:
                        raise ValueError("linear group is too large (not finite?)")
        frontier = nxt
    return sorted(seen.values(), key=LinearPart.sort_key)
