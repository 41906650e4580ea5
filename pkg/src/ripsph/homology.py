"""Boundary maps, GF(2) rank, and Betti numbers of a fixed complex.

Matrix columns are Python ints used as bitsets (bit i = row i), so column
addition is one XOR regardless of width.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Chain, Simplex, SimplicialComplex
from .errors import NotACycle


def boundary_of_simplex(s: Simplex) -> Chain:
    """Sum of the codimension-1 faces; vertices map to the empty chain."""
    if s.dimension == 0:
        return Chain(-1)
    return Chain(s.dimension - 1, s.faces())


def boundary_of_chain(c: Chain) -> Chain:
    """GF(2) sum of member boundaries; shared faces cancel in pairs."""
    if c.dimension <= 0:
        return Chain(c.dimension - 1)
    out = Chain(c.dimension - 1)
    for s in c:
        out = out + boundary_of_simplex(s)
    return out


def is_cycle(c: Chain) -> bool:
    return boundary_of_chain(c).is_zero


@dataclass(frozen=True)
class BoundaryMatrixZ2:
    """delta_k as bit-packed columns over canonical simplex orderings."""

    rows: tuple[Simplex, ...]       # (k-1)-simplices
    cols: tuple[Simplex, ...]       # k-simplices
    columns: tuple[int, ...]        # columns[j] bitset of face row indices

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))


def build_boundary_matrix(c: SimplicialComplex, k: int) -> BoundaryMatrixZ2:
    """Matrix of delta_k; empty (0-column) matrix if no k-simplices exist."""
    if k < 1:
        raise ValueError("boundary matrices start at k = 1")
    rows = tuple(c.simplices_of_dim(k - 1))
    cols = tuple(c.simplices_of_dim(k))
    row_index = {s: i for i, s in enumerate(rows)}
    columns = []
    for s in cols:
        bits = 0
        for face in s.faces():
            bits |= 1 << row_index[face]
        columns.append(bits)
    return BoundaryMatrixZ2(rows, cols, tuple(columns))


def rank_z2(m: BoundaryMatrixZ2) -> int:
    """Rank over GF(2) by left-to-right elimination; input unmodified."""
    return rank_of_columns(list(m.columns))


def rank_of_columns(columns: list[int]) -> int:
    """Rank of a GF(2) matrix given as int-bitset columns."""
    pivots: dict[int, int] = {}  # lowest-one row -> reduced column
    rank = 0
    for col in columns:
        c = col
        while c:
            low = c.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = c
                rank += 1
                break
            c ^= other
    return rank


def betti_numbers(c: SimplicialComplex, max_k: int) -> tuple[int, ...]:
    """beta_k = (n_k - rank delta_k) - rank delta_{k+1}, with rank delta_0 = 0.

    Ordinary (non-reduced) homology: beta_0 counts connected components.
    """
    counts = c.counts()
    ranks = [0] * (max_k + 2)
    for k in range(1, max_k + 2):
        if k <= c.dimension:
            ranks[k] = rank_z2(build_boundary_matrix(c, k))
    betti = []
    for k in range(max_k + 1):
        n_k = counts[k] if k < len(counts) else 0
        betti.append(n_k - ranks[k] - ranks[k + 1])
    return tuple(betti)


def are_homologous(c1: Chain, c2: Chain, complex_: SimplicialComplex) -> bool:
    """Whether c1 + c2 bounds, i.e. lies in the column space of delta_{k+1}."""
    if not is_cycle(c1):
        raise NotACycle("first chain has nonzero boundary")
    if not is_cycle(c2):
        raise NotACycle("second chain has nonzero boundary")
    if c1.dimension != c2.dimension:
        raise ValueError("chains must share a dimension")
    diff = c1 + c2
    if diff.is_zero:
        return True
    k = c1.dimension
    rows = complex_.simplices_of_dim(k)
    row_index = {s: i for i, s in enumerate(rows)}
    target = 0
    for s in diff:
        if s not in row_index:
            raise ValueError(f"{s!r} is not a simplex of the complex")
        target |= 1 << row_index[s]
    if k + 1 > complex_.dimension:
        return False
    matrix = build_boundary_matrix(complex_, k + 1)
    base = list(matrix.columns)
    return rank_of_columns(base + [target]) == rank_of_columns(base)
