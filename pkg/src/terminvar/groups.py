"""Finite groups of affine symplectic maps of an abelian surface.

Elements of A[m] x| G0 are encoded as integers ``t * nL + l`` where ``t`` is
the lexicographic index of the translation in (Z/m)^4 and ``l`` indexes the
sorted linear parts. Sorting codes therefore sorts elements by
(translation, integer matrix). All group-theoretic work happens on Cayley
tables held as numpy arrays.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Sequence

import numpy as np
from sympy import factorint

from . import kernels
from .algebra import IntMatrix, TorsionVector, TorusPoint, fixed_subspace_rank, exterior_square
from .models import G0_GENERATORS, LinearPart, SurfaceModel, build_model, linear_closure

DEFAULT_SIZE_CAP = 100_000


class SizeCapExceeded(RuntimeError):
    """Raised when a group computation would exceed the configured size cap."""


def size_cap() -> int:
    raw = os.environ.get("TERMINVAR_SIZE_CAP", "")
    try:
        return int(float(raw)) if raw else DEFAULT_SIZE_CAP
    except ValueError:
        return DEFAULT_SIZE_CAP


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class AffineSymplectomorphism:
    """x -> M x + alpha/m on A, with alpha a torsion vector mod m."""

    translation: TorsionVector
    linear: LinearPart

    @classmethod
    def identity(cls, modulus: int) -> AffineSymplectomorphism:
        return cls(TorsionVector.zero(modulus), LinearPart.identity())

    @property
    def modulus(self) -> int:
        return self.translation.modulus

    def __matmul__(self, other: AffineSymplectomorphism) -> AffineSymplectomorphism:
        t = self.translation + other.translation.transform(self.linear.int_matrix)
        return AffineSymplectomorphism(t, self.linear @ other.linear)

    def inverse(self) -> AffineSymplectomorphism:
        minv = self.linear.inverse()
        return AffineSymplectomorphism(-self.translation.transform(minv.int_matrix), minv)

    def apply(self, x: TorusPoint) -> TorusPoint:
        return x.transform(self.linear.int_matrix, self.translation.as_point())

    def is_identity(self) -> bool:
        return self.translation.is_zero() and self.linear.is_identity()

    def is_translation(self) -> bool:
        return self.linear.is_identity()

    def sort_key(self) -> tuple:
        return (self.translation.coords, self.linear.sort_key())

    def __str__(self) -> str:
        return f"({self.translation}, {list(self.linear.int_matrix.entries)})"


# ---------------------------------------------------------------------------
# encoding of A[m] x| L


class AffineContext:
    """Multiplication tables for the group A[m] x| L, L a finite linear group."""

    def __init__(self, modulus: int, linears: Sequence[LinearPart]):
        self.modulus = m = modulus
        self.linears: tuple[LinearPart, ...] = tuple(sorted(linears, key=LinearPart.sort_key))
        self.nL = nL = len(self.linears)
        self.nT = nT = m**4
        self.size = nT * nL
        self.tcoords = np.array(list(product(range(m), repeat=4)), dtype=np.int64)
        self._weights = np.array([m**3, m**2, m, 1], dtype=np.int64)
        tc = self.tcoords
        self.tadd = self._tindex(tc[:, None, :] + tc[None, :, :])
        mats = np.array([lp.int_matrix.entries for lp in self.linears], dtype=np.int64)
        self.mats = mats
        self.tact = self._tindex(np.einsum("lij,tj->lti", mats, tc))
        self.tneg = self._tindex(-tc)
        index = {lp.int_matrix: i for i, lp in enumerate(self.linears)}
        self.lindex = index
        self.lmul = np.array(
            [[index[a.int_matrix @ b.int_matrix] for b in self.linears] for a in self.linears],
            dtype=np.int64,
        )
        self.lid = index[IntMatrix.identity(4)]
        self.linv = np.array([int(np.nonzero(self.lmul[i] == self.lid)[0][0]) for i in range(nL)], dtype=np.int64)
        self.identity_code = self.lid

    def _tindex(self, coords: np.ndarray) -> np.ndarray:
        return (np.mod(coords, self.modulus) * self._weights).sum(axis=-1)

    # codes

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        ta, la = np.divmod(a, self.nL)
        tb, lb = np.divmod(b, self.nL)
        return self.tadd[ta, self.tact[la, tb]] * self.nL + self.lmul[la, lb]

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        ta, la = np.divmod(a, self.nL)
        li = self.linv[la]
        return self.tact[li, self.tneg[ta]] * self.nL + li

    def conj(self, g, x):
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    @cached_property
    def table(self) -> np.ndarray:
        codes = np.arange(self.size, dtype=np.int64)
        return self.mul(codes[:, None], codes[None, :])

    def encode(self, g: AffineSymplectomorphism) -> int:
        if g.modulus != self.modulus:
            raise ValueError("modulus mismatch")
        try:
            li = self.lindex[g.linear.int_matrix]
        except KeyError:
            raise ValueError("linear part is not in this context") from None
        return g.translation.index() * self.nL + li

    def decode(self, code: int) -> AffineSymplectomorphism:
        t, l = divmod(int(code), self.nL)
        return AffineSymplectomorphism(TorsionVector.from_index(self.modulus, t), self.linears[l])

    def translation_code(self, coords: Sequence[int]) -> int:
        return int(self._tindex(np.asarray(coords, dtype=np.int64))) * self.nL + self.lid

    def linear_code(self, lp: LinearPart) -> int:
        return self.lindex[lp.int_matrix]


_CONTEXTS: dict[tuple, AffineContext] = {}


def context_for(modulus: int, linears: Iterable[LinearPart]) -> AffineContext:
    lin = tuple(sorted(linears, key=LinearPart.sort_key))
    key = (modulus, tuple(lp.sort_key() for lp in lin))
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        ctx = _CONTEXTS[key] = AffineContext(modulus, lin)
    return ctx


# ---------------------------------------------------------------------------
# abstract finite groups on Cayley tables


def _log(p: int, x: int) -> int:
    k = 0
    while x > 1:
        x //= p
        k += 1
    return k


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    exponent: int
    order_stats: tuple[tuple[int, int], ...]
    class_sizes: tuple[tuple[int, int], ...]
    abelian_invariants: tuple[int, ...]
    derived_length: int
    catalogue_name: str | None = field(default=None, compare=False)
    catalogue_id: str | None = field(default=None, compare=False)

    def key(self) -> tuple:
        return (
            self.order,
            self.exponent,
            self.order_stats,
            self.class_sizes,
            self.abelian_invariants,
            self.derived_length,
        )

    @property
    def name(self) -> str:
        return self.catalogue_name if self.catalogue_name is not None else f"<order {self.order}>"

    def with_name(self, name: str | None, gid: str | None = None) -> GroupFingerprint:
        return GroupFingerprint(*self.key(), catalogue_name=name, catalogue_id=gid)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "exponent": self.exponent,
            "order_stats": [list(x) for x in self.order_stats],
            "class_sizes": [list(x) for x in self.class_sizes],
            "abelian_invariants": list(self.abelian_invariants),
            "derived_length": self.derived_length,
            "name": self.catalogue_name,
            "id": self.catalogue_id,
        }


class TableGroup:
    """A finite group given by its Cayley table ``T[a, b] = a*b``."""

    def __init__(self, table: np.ndarray, identity: int = 0):
        self.T = np.ascontiguousarray(table, dtype=np.int64)
        self.n = self.T.shape[0]
        self.e = int(identity)

    @cached_property
    def inv(self) -> np.ndarray:
        rows, cols = np.nonzero(self.T == self.e)
        out = np.empty(self.n, dtype=np.int64)
        out[rows] = cols
        return out

    @cached_property
    def orders(self) -> np.ndarray:
        idx = np.arange(self.n)
        out = np.zeros(self.n, dtype=np.int64)
        cur = idx.copy()
        k = 1
        while (out == 0).any():
            hit = (cur == self.e) & (out == 0)
            out[hit] = k
            cur = self.T[cur, idx]
            k += 1
        return out

    def power(self, xs, k: int) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        k %= int(self.exponent) if self.n else 1
        out = np.full(xs.shape, self.e, dtype=np.int64)
        base = xs.copy()
        while k:
            if k & 1:
                out = self.T[out, base]
            base = self.T[base, base]
            k >>= 1
        return out

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.orders)) if self.n else 1

    @cached_property
    def conj(self) -> np.ndarray:
        """conj[g, x] = g x g^-1."""
        return self.T[self.T, self.inv[:, None]]

    @cached_property
    def class_labels(self) -> np.ndarray:
        return kernels.class_labels(self.conj)

    @cached_property
    def classes(self) -> list[np.ndarray]:
        labels = self.class_labels
        reps = np.unique(labels)
        return [np.nonzero(labels == r)[0] for r in reps]

    def class_size(self, x: int) -> int:
        return int(np.count_nonzero(self.class_labels == self.class_labels[x]))

    @cached_property
    def class_size_array(self) -> np.ndarray:
        labels = self.class_labels
        counts = np.bincount(labels, minlength=self.n)
        return counts[labels]

    def is_abelian(self) -> bool:
        return bool((self.T == self.T.T).all())

    # subgroups as boolean masks

    def mask(self, elements: Iterable[int]) -> np.ndarray:
        m = np.zeros(self.n, dtype=bool)
        m[np.fromiter((int(x) for x in elements), dtype=np.int64)] = True
        return m

    def closure(self, gens: Iterable[int]) -> np.ndarray:
        return kernels.closure_bfs(self.T, np.fromiter((int(g) for g in gens), dtype=np.int64), self.e)

    def is_subgroup(self, mask: np.ndarray) -> bool:
        idx = np.nonzero(mask)[0]
        return bool(mask[self.e]) and bool(mask[self.T[np.ix_(idx, idx)]].all())

    def is_normal(self, mask: np.ndarray) -> bool:
        idx = np.nonzero(mask)[0]
        return bool(mask[self.conj[:, idx]].all())

    def normal_closure(self, elements: Iterable[int]) -> np.ndarray:
        els = np.fromiter((int(x) for x in elements), dtype=np.int64)
        if els.size == 0:
            return self.mask([self.e])
        gens = np.unique(self.conj[:, els])
        return self.closure(gens)

    def normalizer(self, mask: np.ndarray) -> np.ndarray:
        idx = np.nonzero(mask)[0]
        return mask[self.conj[:, idx]].all(axis=1)

    def subgroup(self, mask_or_indices) -> TableGroup:
        idx = np.asarray(mask_or_indices)
        if idx.dtype == bool:
            idx = np.nonzero(idx)[0]
        idx = np.sort(idx.astype(np.int64))
        sub = np.searchsorted(idx, self.T[np.ix_(idx, idx)])
        return TableGroup(sub, int(np.searchsorted(idx, self.e)))

    def coset_labels(self, mask: np.ndarray) -> np.ndarray:
        """Label x by the least element of its left coset xN."""
        idx = np.nonzero(mask)[0]
        return self.T[:, idx].min(axis=1)

    def quotient(self, mask: np.ndarray) -> TableGroup:
        if not (self.is_subgroup(mask) and self.is_normal(mask)):
            raise ValueError("not a normal subgroup")
        labels = self.coset_labels(mask)
        reps = np.unique(labels)
        q = np.searchsorted(reps, labels[self.T[np.ix_(reps, reps)]])
        return TableGroup(q, int(np.searchsorted(reps, labels[self.e])))

    def derived_subgroup(self) -> np.ndarray:
        t, inv = self.T, self.inv
        comm = t[t, t[inv[:, None], inv[None, :]]]
        return self.closure(np.unique(comm))

    @cached_property
    def derived_length(self) -> int:
        """Length of the derived series, or -1 for non-solvable groups."""
        g: TableGroup = self
        k = 0
        while g.n > 1:
            d = g.derived_subgroup()
            if d.all():
                return -1
            g = g.subgroup(d)
            k += 1
        return k

    @cached_property
    def abelian_invariants(self) -> tuple[int, ...]:
        """Elementary divisors (prime powers) of G/[G,G], sorted."""
        ab = self.quotient(self.derived_subgroup())
        orders = ab.orders
        out: list[int] = []
        for p, emax in sorted(factorint(ab.n).items()):
            # c[k] = log_p #{x : x^(p^k) = 1} = sum_i min(e_i, k)
            c = [_log(p, int(np.count_nonzero(p**k % orders == 0))) for k in range(emax + 1)]
            at_least = [c[k] - c[k - 1] for k in range(1, emax + 1)] + [0]
            for k in range(emax):
                out.extend([p ** (k + 1)] * (at_least[k] - at_least[k + 1]))
        return tuple(sorted(out))

    @cached_property
    def fingerprint(self) -> GroupFingerprint:
        stats = tuple(sorted(Counter(self.orders.tolist()).items()))
        sizes = tuple(sorted(Counter(len(c) for c in self.classes).items()))
        return GroupFingerprint(
            self.n, self.exponent, stats, sizes, self.abelian_invariants, self.derived_length
        )

    def element_signature(self) -> np.ndarray:
        """Isomorphism-invariant element labels used to prune the iso search."""
        sig = np.stack(
            [self.orders, self.class_size_array]
            + [self.class_size_array[self.power(np.arange(self.n), k)] for k in (2, 3)]
            + [self.orders[self.power(np.arange(self.n), k)] for k in (2, 3)],
            axis=1,
        )
        return sig

    def small_generating_set(self) -> list[int]:
        gens: list[int] = []
        cur = self.mask([self.e])
        while not cur.all():
            best, best_size = -1, -1
            for x in np.nonzero(~cur)[0]:
                size = int(np.count_nonzero(self.closure(gens + [int(x)])))
                if size > best_size:
                    best, best_size = int(x), size
            gens.append(best)
            cur = self.closure(gens)
        return gens


def _extend_map(a: TableGroup, b: TableGroup, gens: list[int], images: list[int]) -> np.ndarray | None:
    """Extend generator images to a homomorphism on <gens>; None on conflict."""
    phi = np.full(a.n, -1, dtype=np.int64)
    used = np.zeros(b.n, dtype=bool)
    phi[a.e] = b.e
    used[b.e] = True
    queue = [a.e]
    while queue:
        x = queue.pop()
        px = phi[x]
        for g, h in zip(gens, images):
            y = a.T[x, g]
            img = b.T[px, h]
            if phi[y] < 0:
                if used[img]:
                    return None
                phi[y] = img
                used[img] = True
                queue.append(int(y))
            elif phi[y] != img:
                return None
    return phi


def find_isomorphism(a: TableGroup, b: TableGroup) -> np.ndarray | None:
    """Backtracking generator-image search. Returns the map as an array."""
    if a.fingerprint.key() != b.fingerprint.key():
        return None
    gens = a.small_generating_set()
    sa, sb = a.element_signature(), b.element_signature()
    cands = [
        [int(y) for y in np.nonzero((sb == sa[g]).all(axis=1))[0]] for g in gens
    ]

    def search(depth: int, images: list[int]) -> np.ndarray | None:
        if depth == len(gens):
            phi = _extend_map(a, b, gens, images)
            return phi if phi is not None and (phi >= 0).all() else None
        for c in cands[depth]:
            trial = images + [c]
            if _extend_map(a, b, gens[: depth + 1], trial) is None:
                continue
            out = search(depth + 1, trial)
            if out is not None:
                return out
        return None

    return search(0, [])


ISO_TEST_LIMIT = 128


def is_isomorphic(a: TableGroup, b: TableGroup) -> bool:
    """Exact test up to order 128; fingerprint comparison beyond."""
    if a.fingerprint.key() != b.fingerprint.key():
        return False
    if a.n > ISO_TEST_LIMIT:
        return True
    if a.is_abelian():
        return True
    return find_isomorphism(a, b) is not None


def table_from_permutations(gens: Sequence[Sequence[int]], degree: int | None = None) -> TableGroup:
    """Cayley table of the permutation group generated by ``gens`` (0-based images)."""
    if degree is None:
        degree = max((len(g) for g in gens), default=1)
    ident = tuple(range(degree))
    perms = [tuple(g) + tuple(range(len(g), degree)) for g in gens]
    seen = {ident: 0}
    elems = [ident]
    i = 0
    cap = size_cap()
    while i < len(elems):
        x = elems[i]
        for g in perms:
            y = tuple(x[j] for j in g)
            if y not in seen:
                seen[y] = len(elems)
                elems.append(y)
                if len(elems) > cap:
                    raise SizeCapExceeded(f"permutation group exceeds size cap {cap}")
        i += 1
    arr = np.array(elems, dtype=np.int64)
    # (x*y)[j] = x[y[j]]: apply y first
    table = np.empty((len(elems), len(elems)), dtype=np.int64)
    for a in range(len(elems)):
        prods = arr[a][arr]
        table[a] = [seen[tuple(r)] for r in prods.tolist()]
    return TableGroup(table, 0)


def parse_cycles(text: str, degree: int) -> list[int]:
    """Parse GAP-style cycle notation (1-based) into a 0-based image list."""
    perm = list(range(degree))
    text = text.replace(" ", "")
    if text in ("", "()"):
        return perm
    for cyc in text.strip("()").split(")("):
        pts = [int(x) - 1 for x in cyc.split(",")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return perm


# ---------------------------------------------------------------------------
# groups of affine maps


G0_BY_ORDER = {1: "1", 2: "C2", 3: "C3", 4: "C4", 6: "C6", 8: "Q8", 12: "BD12", 24: "BT24"}


class ActionGroup:
    """A finite group of induced automorphisms of K_n(A), n = m - 1."""

    def __init__(self, context: AffineContext, codes: Iterable[int], n: int, model: SurfaceModel | None = None):
        self.context = context
        self.codes = np.unique(np.asarray(list(codes) if not isinstance(codes, np.ndarray) else codes, dtype=np.int64))
        self.n = n
        self.model = model
        if context.modulus != n + 1:
            raise ValueError("translation modulus must be n + 1")

    def __len__(self) -> int:
        return int(self.codes.size)

    @property
    def order(self) -> int:
        return int(self.codes.size)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ActionGroup)
            and other.context is self.context
            and np.array_equal(other.codes, self.codes)
        )

    def __hash__(self) -> int:
        return hash((id(self.context), self.codes.tobytes()))

    def __repr__(self) -> str:
        return f"ActionGroup(order={self.order}, g0={self.g0_name}, n={self.n})"

    @cached_property
    def table(self) -> TableGroup:
        t = self.context.table[np.ix_(self.codes, self.codes)]
        return TableGroup(np.searchsorted(self.codes, t), self.index_of(self.context.identity_code))

    def index_of(self, code: int) -> int:
        i = int(np.searchsorted(self.codes, code))
        if i >= self.codes.size or self.codes[i] != code:
            raise KeyError("element not in group")
        return i

    def contains_code(self, code: int) -> bool:
        i = int(np.searchsorted(self.codes, code))
        return i < self.codes.size and self.codes[i] == code

    def element(self, i: int) -> AffineSymplectomorphism:
        return self.context.decode(int(self.codes[i]))

    @cached_property
    def elements(self) -> list[AffineSymplectomorphism]:
        return [self.context.decode(int(c)) for c in self.codes]

    @cached_property
    def translation_index(self) -> np.ndarray:
        return self.codes // self.context.nL

    @cached_property
    def linear_index(self) -> np.ndarray:
        return self.codes % self.context.nL

    @cached_property
    def linear_image(self) -> list[LinearPart]:
        return [self.context.linears[int(i)] for i in np.unique(self.linear_index)]

    @cached_property
    def g0_name(self) -> str:
        return G0_BY_ORDER[len(self.linear_image)]

    @cached_property
    def translation_subgroup(self) -> np.ndarray:
        """Mask of G_tr = G intersected with the translations."""
        return self.linear_index == self.context.lid

    @property
    def order_tr(self) -> int:
        return int(np.count_nonzero(self.translation_subgroup))

    @cached_property
    def rank_h2(self) -> int:
        mats = [exterior_square(lp.int_matrix) for lp in self.linear_image if not lp.is_identity()]
        return fixed_subspace_rank(mats, 6)

    def subgroup(self, mask_or_indices) -> ActionGroup:
        idx = np.asarray(mask_or_indices)
        if idx.dtype == bool:
            idx = np.nonzero(idx)[0]
        return ActionGroup(self.context, self.codes[idx], self.n, self.model)

    def conjugate(self, code: int) -> ActionGroup:
        return ActionGroup(self.context, self.context.conj(code, self.codes), self.n, self.model)

    def is_closed(self) -> bool:
        prods = self.context.table[np.ix_(self.codes, self.codes)]
        return bool(np.isin(prods, self.codes).all())

    def fingerprint(self) -> GroupFingerprint:
        from .catalogue import name_group

        return name_group(self.table)

    def generators(self) -> list[int]:
        """Codes of a small generating set."""
        return [int(self.codes[i]) for i in self.table.small_generating_set()]


def closure(
    generators: Sequence[AffineSymplectomorphism],
    n: int,
    model: SurfaceModel | None = None,
    context: AffineContext | None = None,
) -> ActionGroup:
    """Smallest group containing the generators."""
    m = n + 1
    if any(g.modulus != m for g in generators):
        raise ValueError("generators must have translation modulus n + 1")
    if context is None:
        lin = linear_closure([g.linear for g in generators])
        context = context_for(m, lin)
    cap = size_cap()
    codes = [context.encode(g) for g in generators]
    mask = kernels.closure_bfs(context.table, np.array(codes, dtype=np.int64), context.identity_code)
    order = int(np.count_nonzero(mask))
    if order > cap:
        raise SizeCapExceeded(f"group of order {order} exceeds size cap {cap}")
    return ActionGroup(context, np.nonzero(mask)[0], n, model)


def closure_codes(context: AffineContext, codes: Sequence[int], n: int, model: SurfaceModel | None = None) -> ActionGroup:
    mask = kernels.closure_bfs(context.table, np.asarray(codes, dtype=np.int64), context.identity_code)
    order = int(np.count_nonzero(mask))
    if order > size_cap():
        raise SizeCapExceeded(f"group of order {order} exceeds size cap {size_cap()}")
    return ActionGroup(context, np.nonzero(mask)[0], n, model)


def ambient_group(model: SurfaceModel | str, g0_name: str, n: int) -> ActionGroup:
    """The full group A[n+1] x| G0."""
    if isinstance(model, str):
        model = build_model(model)
    if g0_name not in G0_GENERATORS:
        raise KeyError(f"unknown linear group {g0_name!r}")
    if not model.supports(g0_name):
        raise ValueError(f"{g0_name} is not realizable on model {model.name}")
    m = n + 1
    lin = linear_closure([model.generator(s) for s in G0_GENERATORS[g0_name]])
    ctx = context_for(m, lin)
    if ctx.size > size_cap():
        raise SizeCapExceeded(f"group of order {ctx.size} exceeds size cap {size_cap()}")
    return ActionGroup(ctx, np.arange(ctx.size), n, model)


def conjugacy_classes(g: ActionGroup) -> list[np.ndarray]:
    """Classes as arrays of codes; each class is sorted, its first entry is the representative."""
    return [g.codes[c] for c in g.table.classes]


def normal_closure(g: ActionGroup, codes: Iterable[int]) -> ActionGroup:
    idx = [g.index_of(int(c)) for c in codes]
    return g.subgroup(g.table.normal_closure(idx))


def quotient_fingerprint(g: ActionGroup, nsub: ActionGroup) -> GroupFingerprint:
    from .catalogue import name_group

    mask = np.isin(g.codes, nsub.codes)
    if int(mask.sum()) != nsub.order:
        raise ValueError("N is not a subgroup of G")
    if not g.table.is_normal(mask):
        raise ValueError("N is not normal in G")
    return name_group(g.table.quotient(mask))


def affine_split_conjugator(g: ActionGroup) -> TorsionVector | None:
    """Least beta with tau_beta G tau_-beta = G_tr x| G0, if any."""
    ctx = g.context
    # tau_beta G tau_-beta must contain (0, M) for every linear part M of G
    want = np.unique(g.linear_index)
    for t in range(ctx.nT):
        beta = t * ctx.nL + ctx.lid
        conj = ctx.conj(beta, g.codes)
        if np.isin(want, conj).all():
            return TorsionVector(ctx.modulus, tuple(int(c) for c in ctx.tcoords[t]))
    return None


# ---------------------------------------------------------------------------
# subgroup enumeration by cyclic extension


def _canonical(conj: np.ndarray, members: np.ndarray) -> bytes:
    imgs = np.sort(conj[:, members], axis=1)
    order = np.lexsort(imgs.T[::-1])
    return imgs[order[0]].tobytes()


def enumerate_subgroup_classes(ambient: ActionGroup) -> list[ActionGroup]:
    """One representative per conjugacy class of subgroups of a solvable ambient group."""
    tg = ambient.table
    conj = tg.conj
    primes = sorted(factorint(tg.n))
    pow_tables = {p: tg.power(np.arange(tg.n), p) for p in primes}
    start = np.array([tg.e], dtype=np.int64)
    found: dict[bytes, np.ndarray] = {_canonical(conj, start): start}
    layer = [start]
    while layer:
        nxt: list[np.ndarray] = []
        for members in layer:
            umask = np.zeros(tg.n, dtype=bool)
            umask[members] = True
            norm = tg.normalizer(umask)
            cand = norm & ~umask
            seen_cosets = np.zeros(tg.n, dtype=bool)
            for g in np.nonzero(cand)[0]:
                if seen_cosets[g]:
                    continue
                coset = tg.T[members, g]
                seen_cosets[coset] = True
                for p in primes:
                    if umask[pow_tables[p][g]]:
                        break
                else:
                    continue
                parts = [members]
                x = g
                while not umask[x]:
                    parts.append(tg.T[members, x])
                    x = tg.T[x, g]
                vmembers = np.unique(np.concatenate(parts))
                key = _canonical(conj, vmembers)
                if key not in found:
                    found[key] = vmembers
                    nxt.append(vmembers)
        layer = nxt
    reps = [ambient.subgroup(v) for v in found.values()]
    reps.sort(key=lambda s: (s.order, s.codes.tolist()))
    return reps


def enumerate_subgroups(
    ambient: ActionGroup,
    predicate: Callable[[ActionGroup], bool] | None = None,
    dedupe_key: Callable[[ActionGroup], object] | None = None,
) -> list[ActionGroup]:
    """Subgroups up to ambient conjugacy, filtered, then merged by ``dedupe_key``."""
    if ambient.order > size_cap():
        raise SizeCapExceeded(f"ambient order {ambient.order} exceeds size cap {size_cap()}")
    out = [s for s in enumerate_subgroup_classes(ambient) if predicate is None or predicate(s)]
    if dedupe_key is None:
        return out
    seen: dict[object, ActionGroup] = {}
    for s in out:
        seen.setdefault(dedupe_key(s), s)
    return list(seen.values())


def surjects_onto_g0(g0_name: str) -> Callable[[ActionGroup], bool]:
    def pred(s: ActionGroup) -> bool:
        return s.g0_name == g0_name

    return pred


# ---------------------------------------------------------------------------
# group specification files


def parse_spec(spec: dict) -> ActionGroup:
    """Build a group from {"model", "n", "generators": [{"t": [...], "m": sym}, ...]}."""
    try:
        model = build_model(spec["model"])
        n = int(spec["n"])
        raw = spec.get("generators", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed group specification: {exc}") from exc
    m = n + 1
    gens = []
    for item in raw:
        if not isinstance(item, dict) or not ({"t", "m"} & set(item)):
            raise ValueError(f"generator entry needs 't' and/or 'm': {item!r}")
        t = TorsionVector.from_rationals(m, item["t"]) if "t" in item else TorsionVector.zero(m)
        if len(t.coords) != 4:
            raise ValueError("translations need four coordinates")
        lp = model.generator(item["m"]) if "m" in item else LinearPart.identity()
        gens.append(AffineSymplectomorphism(t, lp))
    if "g0" in spec:
        ctx = context_for(m, linear_closure([model.generator(s) for s in G0_GENERATORS[spec["g0"]]]))
        return closure(gens, n, model, ctx)
    return closure(gens, n, model)


def element_spec(g: AffineSymplectomorphism, model: SurfaceModel) -> dict:
    """Inverse of the generator parsing for a single element (symbol lookup by matrix)."""
    out: dict = {}
    if not g.translation.is_zero():
        out["t"] = [str(TorusPoint((c,)).coords[0]) for c in g.translation.as_point().coords]
    if not g.linear.is_identity():
        sym = next((s for s, lp in model.generators.items() if lp.int_matrix == g.linear.int_matrix), None)
        if sym is None:
            raise ValueError("linear part is not a named generator")
        out["m"] = sym
    return out

