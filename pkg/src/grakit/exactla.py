"""Exact rational linear algebra: rank, kernel, and homology of chain complexes.

No floating point anywhere.  Integer matrices go through fraction-free
Bareiss elimination so intermediate entries stay bounded; general rational
matrices use Gaussian elimination over Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class QMatrix:
    """Immutable matrix with exact rational entries (row-major tuples)."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry shape does not match declared dimensions")

    @staticmethod
    def from_rows(rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        data = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if data:
            cols = len(data[0])
        elif cols is None:
            cols = 0
        return QMatrix(len(data), cols, data)

    @staticmethod
    def zero(rows: int, cols: int) -> "QMatrix":
        return QMatrix(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix(n, n, tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
        ))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries[ij[0]][ij[1]]

    def transpose(self) -> "QMatrix":
        if not self.entries:
            return QMatrix(self.cols, self.rows, tuple(() for _ in range(self.cols)))
        return QMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        zero = Fraction(0)
        out = []
        for row in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if a:
                    brow = other.entries[k]
                    acc = [x + a * b for x, b in zip(acc, brow)]
            out.append(tuple(acc))
        return QMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def to_json(self) -> list[list[str]]:
        """Entries as "p/q" strings, for debugging dumps."""
        return [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.entries]


def _rank_bareiss(m: QMatrix) -> int:
    """Fraction-free elimination for integer matrices."""
    a = [[int(x) for x in row] for row in m.entries]
    rows, cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == rows:
            break
    return r


def _rref(m: QMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    a = [list(row) for row in m.entries]
    rows, cols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: QMatrix) -> int:
    """Exact rank."""
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.is_integral():
        return _rank_bareiss(m)
    return len(_rref(m)[1])


def kernel_basis(m: QMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel; always has cols - rank members."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(Fraction(1 if i == j else 0) for i in range(m.cols)) for j in range(m.cols)]
    a, pivots = _rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Finite chain complex over the rationals with differential of degree -1.

    ``dims[k]`` is the dimension in degree k for k in the contiguous range
    ``degrees``; ``differentials[k]`` maps degree k to degree k-1 and must
    have shape dims[k-1] x dims[k].  d∘d = 0 is verified on construction.
    """

    dims: dict
    differentials: dict

    def __post_init__(self):
        degs = sorted(self.dims)
        if degs and degs != list(range(degs[0], degs[-1] + 1)):
            raise ValueError("degrees must form a contiguous range")
        for k, d in self.differentials.items():
            lower = self.dims.get(k - 1, 0)
            if d.rows != lower or d.cols != self.dims.get(k, 0):
                raise ValueError(f"differential at degree {k} has shape "
                                 f"{d.rows}x{d.cols}, expected {lower}x{self.dims.get(k, 0)}")
        for k in degs:
            d_k = self.differentials.get(k)
            d_next = self.differentials.get(k + 1)
            if d_k is not None and d_next is not None and not (d_k @ d_next).is_zero():
                raise ValueError(f"d∘d != 0 between degrees {k + 1} and {k - 1}")

    @property
    def degrees(self) -> list[int]:
        return sorted(self.dims)

    def differential(self, k: int) -> QMatrix:
        d = self.differentials.get(k)
        if d is None:
            d = QMatrix.zero(self.dims.get(k - 1, 0), self.dims.get(k, 0))
        return d

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * dim for k, dim in self.dims.items())


def homology_dims(c: ChainComplex) -> dict[int, int]:
    """dim H_k = dim ker d_k - rank d_{k+1}, per degree of the complex."""
    ranks = {k: rank(c.differential(k)) for k in c.dims}
    return {
        k: c.dims[k] - ranks[k] - ranks.get(k + 1, 0)
        for k in c.degrees
    }
