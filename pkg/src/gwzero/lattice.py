"""Exact integer symmetric bilinear forms.

A :class:`BilinearLattice` models the second homology of a closed simply
connected 4-manifold together with its intersection form.  Everything here is
exact: integers throughout, with :class:`fractions.Fraction` used only inside
diagonalization and inversion.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateFormError, DimensionError, ZeroClassError


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Class2:
    """An integral homology class, given by coordinates in a lattice basis."""

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Class2":
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, i: int) -> "Class2":
        v = [0] * rank
        v[i] = 1
        return cls(v)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Class2") -> None:
        if len(other) != len(self):
            raise DimensionError(f"rank mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: "Class2") -> "Class2":
        self._check(other)
        return Class2(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Class2") -> "Class2":
        self._check(other)
        return Class2(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Class2":
        return Class2(-a for a in self.coords)

    def __mul__(self, m: int) -> "Class2":
        return Class2(m * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def extend(self, *extra: int) -> "Class2":
        return Class2(self.coords + tuple(extra))

    def __repr__(self) -> str:
        return f"Class2({list(self.coords)})"


def is_primitive(a: Class2 | Sequence[int]) -> bool:
    """True iff the gcd of the coordinates is 1."""
    coords = tuple(a)
    if not any(coords):
        raise ZeroClassError("primitivity is undefined for the zero class")
    return math.gcd(*coords) == 1


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class BilinearLattice:
    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...]

    def __init__(self, gram: Sequence[Sequence[int]], basis_labels: Sequence[str] | None = None):
        g = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise DimensionError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j] != g[j][i]:
                    raise DimensionError(f"Gram matrix not symmetric at ({i}, {j})")
        if basis_labels is None:
            basis_labels = [f"x{i + 1}" for i in range(n)]
        labels = tuple(str(s) for s in basis_labels)
        if len(labels) != n:
            raise DimensionError(f"{len(labels)} labels for rank {n}")
        if len(set(labels)) != n:
            raise DimensionError("basis labels must be pairwise distinct")
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "basis_labels", labels)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def __repr__(self) -> str:
        return f"BilinearLattice(rank={self.rank}, labels={list(self.basis_labels)})"

    def _coords(self, a) -> tuple[int, ...]:
        coords = tuple(a)
        if len(coords) != self.rank:
            raise DimensionError(f"class of length {len(coords)} in a rank-{self.rank} lattice")
        return coords

    def pair(self, a: Class2 | Sequence[int], b: Class2 | Sequence[int]) -> int:
        x, y = self._coords(a), self._coords(b)
        return sum(xi * gij * yj for xi, row in zip(x, self.gram) if xi for gij, yj in zip(row, y))

    def functional(self, a: Class2 | Sequence[int]) -> tuple[int, ...]:
        """The row vector ``a^T G``, i.e. the functional ``pair(a, .)``."""
        x = self._coords(a)
        return tuple(sum(x[i] * self.gram[i][j] for i in range(self.rank)) for j in range(self.rank))

    def det(self) -> int:
        return bareiss_det(self.gram)

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    def parity(self) -> Parity:
        return Parity.EVEN if all(self.gram[i][i] % 2 == 0 for i in range(self.rank)) else Parity.ODD

    def signature(self) -> tuple[int, int]:
        """Inertia indices ``(b_plus, b_minus)`` of a nondegenerate form."""
        return _signature(self.gram)

    def inverse(self) -> tuple[tuple[int, ...], ...]:
        """Integer inverse of the Gram matrix; requires unimodularity."""
        return _integer_inverse(self.gram)

    def dual_class(self, phi: Sequence[int]) -> Class2:
        """The class ``v`` with ``pair(v, .) = phi``; requires unimodularity."""
        phi = self._coords(phi)
        inv = self.inverse()
        return Class2(sum(inv[i][j] * phi[j] for j in range(self.rank)) for i in range(self.rank))

    def permuted(self, perm: Sequence[int]) -> "BilinearLattice":
        """Lattice with basis reordered so that new basis i is old basis perm[i]."""
        g = [[self.gram[perm[i]][perm[j]] for j in range(self.rank)] for i in range(self.rank)]
        return BilinearLattice(g, [self.basis_labels[p] for p in perm])


@functools.lru_cache(maxsize=128)
def _signature(gram: tuple[tuple[int, ...], ...]) -> tuple[int, int]:
    diag = _diagonalize(gram)
    return sum(1 for d in diag if d > 0), sum(1 for d in diag if d < 0)


def _diagonalize(gram) -> list[Fraction]:
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    diag: list[Fraction] = []
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            # all remaining diagonal entries vanish; a congruence e_k -> e_k + e_j
            # turns an off-diagonal entry into a nonzero diagonal one
            hit = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if hit is None:
                raise DegenerateFormError("form is degenerate")
            i, j = hit
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        p = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                for r in range(k, n):
                    a[r][i] -= f * a[r][k]
        diag.append(p)
    return diag


@functools.lru_cache(maxsize=128)
def _integer_inverse(gram: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    inv = _rational_inverse(gram)
    if any(x.denominator != 1 for row in inv for x in row):
        raise DegenerateFormError("Gram matrix has no integer inverse (form not unimodular)")
    return tuple(tuple(int(x) for x in row) for row in inv)


def _rational_inverse(gram) -> list[list[Fraction]]:
    n = len(gram)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(gram)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise DegenerateFormError("form is degenerate")
        a[k], a[piv] = a[piv], a[k]
        p = a[k][k]
        a[k] = [x / p for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


def direct_sum(l1: BilinearLattice, l2: BilinearLattice) -> BilinearLattice:
    """Orthogonal direct sum; colliding labels from ``l2`` get a numeric suffix."""
    n1, n2 = l1.rank, l2.rank
    gram = [list(row) + [0] * n2 for row in l1.gram] + [[0] * n1 + list(row) for row in l2.gram]
    taken = set(l1.basis_labels)
    labels = list(l1.basis_labels)
    for lab in l2.basis_labels:
        new = lab
        n = 2
        while new in taken:
            new = f"{lab}_{n}"
            n += 1
        taken.add(new)
        labels.append(new)
    return BilinearLattice(gram, labels)


def direct_sum_all(parts: Iterable[BilinearLattice]) -> BilinearLattice:
    out = BilinearLattice([], [])
    for p in parts:
        out = direct_sum(out, p)
    return out


# Negative-definite E8: minus the Cartan matrix of the E8 Dynkin diagram
# (chain 1-2-3-4-5-6-7 with node 8 attached to node 5).
_E8_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]


def _e8_minus() -> BilinearLattice:
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for i, j in _E8_EDGES:
        g[i][j] = g[j][i] = 1
    return BilinearLattice(g, [f"e{i + 1}" for i in range(8)])


CATALOG: dict[str, BilinearLattice] = {
    "<1>": BilinearLattice([[1]], ["p"]),
    "<-1>": BilinearLattice([[-1]], ["m"]),
    "H": BilinearLattice([[0, 1], [1, 0]], ["u", "v"]),
    "E8-": _e8_minus(),
}


def named(name: str) -> BilinearLattice:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown named form {name!r}; expected one of {sorted(CATALOG)}") from None


def parse_form(expr: str) -> BilinearLattice:
    """Parse a direct-sum expression such as ``"3H+2E8-"`` or ``"<1>+8<-1>"``."""
    parts = []
    for term in expr.replace(" ", "").split("+"):
        if not term:
            raise ValueError(f"empty summand in form expression {expr!r}")
        i = 0
        while i < len(term) and term[i].isdigit():
            i += 1
        mult = int(term[:i]) if i else 1
        parts.extend([named(term[i:])] * mult)
    return direct_sum_all(parts)
