"""Persistence pairs via boundary-matrix column reduction.

Standard left-to-right reduction with int-bitset columns. The clearing
("twist") optimization processes dimensions top-down and zeroes columns
already known to be births; it is on by default and provably yields the
same pairing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable, Union

from .core import Filtration, PersistenceDiagram, PersistencePair
from .errors import InvalidFiltration, RipsphError


@dataclass(frozen=True)
class ReductionResult:
    """pairing maps death column index -> birth row index; essential holds
    filtration indices of classes that never die."""

    pairing: dict[int, int]
    essential: frozenset[int]


def _boundary_columns(f: Filtration) -> tuple[list[int], list[int]]:
    index_of = {s: i for i, (s, _) in enumerate(f.entries)}
    columns: list[int] = []
    dims: list[int] = []
    for i, (s, _) in enumerate(f.entries):
        dims.append(s.dimension)
        bits = 0
        for face in s.faces():
            j = index_of.get(face)
            if j is None or j >= i:
                raise InvalidFiltration(
                    f"face {face.vertices} of {s.vertices} does not precede it")
            bits |= 1 << j
        columns.append(bits)
    return columns, dims


def reduce_filtration(f: Filtration, clearing: bool = True) -> ReductionResult:
    """Column reduction: repeatedly cancel a column's lowest one against the
    earlier column owning that pivot; surviving lowest ones are (birth,
    death) pairs, zero columns not used as births are essential."""
    columns, dims = _boundary_columns(f)
    n = len(columns)
    pairing: dict[int, int] = {}
    pivot_owner: dict[int, int] = {}  # lowest-one row -> column index

    def reduce_column(j: int) -> None:
        c = columns[j]
        while c:
            low = c.bit_length() - 1
            owner = pivot_owner.get(low)
            if owner is None:
                pivot_owner[low] = j
                pairing[j] = low
                break
            c ^= columns[owner]
        columns[j] = c

    if clearing:
        for d in range(max(dims, default=0), 0, -1):
            for j in range(n):
                if dims[j] == d:
                    reduce_column(j)
            for j in list(pairing.values()):
                columns[j] = 0  # known birth columns need no reduction
    else:
        for j in range(n):
            reduce_column(j)

    births = set(pairing.values())
    essential = frozenset(
        j for j in range(n) if columns[j] == 0 and j not in births)
    return ReductionResult(pairing, essential)


def pairs_to_diagram(r: ReductionResult, f: Filtration,
                     drop_zero: bool = True,
                     max_dim: int | None = None) -> PersistenceDiagram:
    """Convert index pairs to (dimension, birth scale, death scale) points.

    max_dim truncates the diagram; a Rips filtration built for homology
    through k carries dimension-(k+1) simplices whose own classes are
    artifacts and must be cut off at max_dim = k.
    """
    pairs = []
    for death, birth in r.pairing.items():
        simplex, birth_scale = f.entries[birth]
        _, death_scale = f.entries[death]
        if drop_zero and death_scale == birth_scale:
            continue
        if max_dim is not None and simplex.dimension > max_dim:
            continue
        pairs.append(PersistencePair(simplex.dimension, birth_scale, death_scale))
    for i in r.essential:
        simplex, scale = f.entries[i]
        if max_dim is not None and simplex.dimension > max_dim:
            continue
        pairs.append(PersistencePair(simplex.dimension, scale, math.inf))
    return PersistenceDiagram(pairs)


def persistence_diagram(f: Filtration, drop_zero: bool = True,
                        clearing: bool = True,
                        max_dim: int | None = None) -> PersistenceDiagram:
    """One-call reduction of a filtration to its diagram."""
    return pairs_to_diagram(reduce_filtration(f, clearing=clearing), f,
                            drop_zero=drop_zero, max_dim=max_dim)


def betti_at_scale(d: PersistenceDiagram, s: float,
                   max_dim: int | None = None) -> tuple[int, ...]:
    """beta_k at scale s: pairs alive on the half-open interval
    birth <= s < death."""
    if max_dim is None:
        max_dim = max(d.max_dimension, 0)
    betti = [0] * (max_dim + 1)
    for p in d:
        if p.dimension <= max_dim and p.birth <= s < p.death:
            betti[p.dimension] += 1
    return tuple(betti)


def significant_features(d: PersistenceDiagram,
                         min_persistence: float) -> PersistenceDiagram:
    """Drop pairs of persistence below the threshold; essential classes
    always survive."""
    if min_persistence < 0:
        raise ValueError("min_persistence must be >= 0")
    return PersistenceDiagram(
        p for p in d if p.is_essential or p.persistence >= min_persistence)


def write_diagram_csv(d: PersistenceDiagram) -> str:
    """CSV with header dim,birth,death; death 'inf' for essential classes."""
    lines = ["dim,birth,death"]
    for p in d.pairs:  # already sorted by (dim, birth, death)
        death = "inf" if p.is_essential else repr(p.death)
        lines.append(f"{p.dimension},{p.birth!r},{death}")
    return "\n".join(lines) + "\n"


def read_diagram_csv(source: Union[str, IO]) -> PersistenceDiagram:
    text = source if isinstance(source, str) else source.read()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != "dim,birth,death":
        raise RipsphError("diagram CSV must start with header 'dim,birth,death'")
    pairs = []
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != 3:
            raise RipsphError(f"line {lineno}: expected 3 fields")
        try:
            dim = int(fields[0])
            birth = float(fields[1])
            death = math.inf if fields[2].strip() == "inf" else float(fields[2])
        except ValueError:
            raise RipsphError(f"line {lineno}: unparseable pair") from None
        pairs.append(PersistencePair(dim, birth, death))
    return PersistenceDiagram(pairs)
