"""Finitely generated abelian groups via integer Smith normal form.

Matrices are plain nested lists/tuples of Python ints, so there is no
overflow regardless of how large intermediate entries become.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

INFINITE = None  # returned by element orders that do not exist


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("matrix dimensions inconsistent with entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer the column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                         tuple(() for _ in range(self.cols)))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def det(self) -> int:
        """Determinant via fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_lists()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D``, ``U`` and ``V`` unimodular
    and ``D`` diagonal with nonnegative entries ``d1 | d2 | ...`` (zeros last).

    Pivoting: the smallest nonzero absolute entry of the remaining block is
    moved to the corner; its row and column are cleared by division with
    remainder, repeating while remainders appear.
    """
    m, n = A.rows, A.cols
    a = A.to_lists()
    U = IntMatrix.identity(m).to_lists()
    V = IntMatrix.identity(n).to_lists()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row_dst += q * row_src
        if q:
            a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        if q:
            for row in a:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        if a[t][t] == 0:
            break
    return (IntMatrix.from_rows(U, m), IntMatrix.from_rows(a, n), IntMatrix.from_rows(V, n))


def invariant_factors(A: IntMatrix) -> list[int]:
    """Diagonal of the Smith form (including zeros, length min(rows, cols))."""
    _, D, _ = smith_normal_form(A)
    return [D[i, i] for i in range(min(D.rows, D.cols))]


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk`` with ``t1 | t2 | ... | tk``, all ``ti >= 2``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if any(x < 2 for x in t):
            raise ValueError("invariant factors must be >= 2")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not a divisibility chain")

    @classmethod
    def from_cyclic(cls, orders: Sequence[int]) -> "AbelianGroup":
        """Direct sum of cyclic groups Z/n (``n == 0`` meaning Z), normalized."""
        k = len(orders)
        if k == 0:
            return cls()
        diag = IntMatrix.from_rows([[orders[i] if i == j else 0 for j in range(k)] for i in range(k)])
        return _group_from_diagonal(invariant_factors(diag), k)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def torsion_order(self) -> int:
        out = 1
        for t in self.torsion:
            out *= t
        return out

    @property
    def min_generators(self) -> int:
        return self.free_rank + len(self.torsion)

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_cyclic([0] * (self.free_rank + other.free_rank)
                                        + list(self.torsion) + list(other.torsion))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> "AbelianGroup":
        return cls(int(data["free_rank"]), tuple(int(t) for t in data["torsion"]))


Z = AbelianGroup(1)
Z2 = AbelianGroup(0, (2,))
ZERO = AbelianGroup()


def parse_abelian_group(text: str) -> AbelianGroup:
    """Parse ``0``, ``Z``, ``Z^2``, ``Z/2 ⊕ Z/4``, ``Z + Z/3`` (any order)."""
    s = text.strip()
    if s in ("0", ""):
        return ZERO
    orders: list[int] = []
    for part in s.replace("⊕", "+").split("+"):
        part = part.strip().replace(" ", "")
        if part == "0":
            continue
        if part == "Z":
            orders.append(0)
        elif part.startswith("Z^") and part[2:].isdigit():
            orders.extend([0] * int(part[2:]))
        elif part.startswith("Z/") and part[2:].isdigit() and int(part[2:]) >= 1:
            orders.append(int(part[2:]))
        else:
            raise ValueError(f"cannot parse abelian group summand {part!r}")
    return AbelianGroup.from_cyclic(orders) if orders else ZERO


def _group_from_diagonal(diag: Sequence[int], n: int) -> AbelianGroup:
    nonzero = [d for d in diag if d]
    return AbelianGroup(n - len(nonzero), tuple(d for d in nonzero if d != 1))


@dataclass(frozen=True)
class Presentation:
    """``Z^generators / rowspan(relations)``."""

    generators: int
    relations: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rels = tuple(tuple(int(x) for x in r) for r in self.relations)
        if any(len(r) != self.generators for r in rels):
            raise ValueError(f"relation rows must have {self.generators} entries")
        object.__setattr__(self, "relations", rels)

    def _snf(self):
        cached = self.__dict__.get("_snf_cache")
        if cached is None:
            A = IntMatrix(len(self.relations), self.generators, self.relations)
            cached = smith_normal_form(A)
            object.__setattr__(self, "_snf_cache", cached)
        return cached

    def group(self) -> AbelianGroup:
        _, D, _ = self._snf()
        diag = [D[i, i] for i in range(min(D.rows, D.cols))]
        return _group_from_diagonal(diag, self.generators)

    def coordinates(self, v: Sequence[int]) -> list[tuple[int, int]]:
        """``(d_i, w_i)`` pairs: the class of ``v`` is ``w_i mod d_i`` in summand i
        (``d_i == 0`` meaning a free summand)."""
        if len(v) != self.generators:
            raise ValueError(f"vector has length {len(v)}, presentation has {self.generators} generators")
        _, D, V = self._snf()
        w = [sum(v[i] * V[i, j] for i in range(self.generators)) for j in range(self.generators)]
        return [(D[j, j] if j < D.rows else 0, w[j]) for j in range(self.generators)]

    def contains(self, v: Sequence[int]) -> bool:
        """Is ``v`` in the relation lattice (i.e. zero in the quotient)?"""
        return all((w == 0) if d == 0 else (w % d == 0) for d, w in self.coordinates(v))

    def order(self, v: Sequence[int]) -> int | None:
        """Least m >= 1 with m*v in the relation lattice, or ``INFINITE``."""
        out = 1
        for d, w in self.coordinates(v):
            if d == 0:
                if w:
                    return INFINITE
                continue
            k = d // gcd(d, w % d) if w % d else 1
            out = out * k // gcd(out, k)
        return out


def quotient_presentation(generators: int, relations: Sequence[Sequence[int]] = ()) -> AbelianGroup:
    return Presentation(generators, tuple(tuple(r) for r in relations)).group()


def element_order(presentation: Presentation, v: Sequence[int]) -> int | None:
    return presentation.order(v)


def solve_integer(A: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """An integer solution ``x`` of ``A x = b``, or ``None`` if there is none."""
    if len(b) != A.rows:
        raise ValueError("right-hand side has the wrong length")
    U, D, V = smith_normal_form(A)
    c = U.apply(b)
    y = [0] * A.cols
    for i in range(A.rows):
        d = D[i, i] if i < A.cols else 0
        if d == 0:
            if c[i]:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    return V.apply(y)
