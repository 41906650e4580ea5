"""Core domain types: simplices, complexes, chains, filtrations, diagrams.

Everything here is immutable after construction and safe to share across
threads. Vertex ids are dense non-negative integers; coefficients are GF(2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Simplex:
    """A simplex as a canonical (strictly increasing) tuple of vertex ids."""

    vertices: tuple[int, ...]

    def __init__(self, vertices: Iterable[int]):
        verts = tuple(sorted(vertices))
        if not verts:
            raise ValueError("simplex must have at least one vertex")
        for v in verts:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")
        if any(a == b for a, b in zip(verts, verts[1:])):
            raise ValueError(f"duplicate vertices in {verts}")
        object.__setattr__(self, "vertices", verts)

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def faces(self) -> list["Simplex"]:
        """All codimension-1 faces (empty list for a vertex)."""
        if self.dimension == 0:
            return []
        v = self.vertices
        return [Simplex(v[:i] + v[i + 1:]) for i in range(len(v))]

    def subfaces(self) -> Iterator["Simplex"]:
        """Every proper non-empty face, all dimensions."""
        v = self.vertices
        n = len(v)
        for mask in range(1, (1 << n) - 1):
            yield Simplex(tuple(v[i] for i in range(n) if mask >> i & 1))

    def __contains__(self, vertex: int) -> bool:
        return vertex in self.vertices

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __repr__(self) -> str:
        return f"Simplex{self.vertices}"


def simplex_sort_key(s: Simplex) -> tuple[int, tuple[int, ...]]:
    return (s.dimension, s.vertices)


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite set of simplices, expected to be closed under taking faces."""

    simplices: frozenset[Simplex]

    def __init__(self, simplices: Iterable[Simplex]):
        object.__setattr__(self, "simplices", frozenset(simplices))

    @classmethod
    def from_maximal(cls, maximal: Iterable[Simplex]) -> "SimplicialComplex":
        """Build the closure of the given simplices."""
        out: set[Simplex] = set()
        for s in maximal:
            out.add(s)
            out.update(s.subfaces())
        return cls(out)

    @property
    def dimension(self) -> int:
        return max((s.dimension for s in self.simplices), default=-1)

    def simplices_of_dim(self, k: int) -> list[Simplex]:
        """k-simplices in canonical (lexicographic) order."""
        return sorted((s for s in self.simplices if s.dimension == k),
                      key=simplex_sort_key)

    def counts(self) -> list[int]:
        """Number of simplices per dimension, index = dimension."""
        out = [0] * (self.dimension + 1)
        for s in self.simplices:
            out[s.dimension] += 1
        return out

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, s: Simplex) -> bool:
        return s in self.simplices


def validate_complex(c: SimplicialComplex) -> list[str]:
    """Diagnostic closure check; empty list means the complex is valid.

    Each violation names the offending simplex and the missing face.
    """
    violations = []
    present = c.simplices
    for s in sorted(present, key=simplex_sort_key):
        for face in s.faces():
            if face not in present:
                violations.append(f"simplex {s.vertices} missing face {face.vertices}")
        if s.dimension > 0:
            for v in s.vertices:
                if Simplex((v,)) not in present:
                    violations.append(f"simplex {s.vertices} missing vertex ({v},)")
    # dedupe, keep order
    seen: set[str] = set()
    out = []
    for v in violations:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


@dataclass(frozen=True)
class Chain:
    """A GF(2) formal sum of equal-dimension simplices (set semantics)."""

    dimension: int
    simplices: frozenset[Simplex] = field(default_factory=frozenset)

    def __init__(self, dimension: int, simplices: Iterable[Simplex] = ()):
        members = frozenset(simplices)
        for s in members:
            if s.dimension != dimension:
                raise ValueError(
                    f"chain of dimension {dimension} cannot contain {s!r}")
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "simplices", members)

    def __add__(self, other: "Chain") -> "Chain":
        if other.dimension != self.dimension:
            raise ValueError("cannot add chains of different dimensions")
        return Chain(self.dimension, self.simplices ^ other.simplices)

    def add_simplex(self, s: Simplex) -> "Chain":
        """GF(2) addition of a single simplex: adding twice removes it."""
        return self + Chain(self.dimension, (s,))

    @property
    def is_zero(self) -> bool:
        return not self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices)


def filtration_sort_key(entry: tuple[Simplex, float]) -> tuple[float, int, tuple[int, ...]]:
    s, scale = entry
    return (scale, s.dimension, s.vertices)


@dataclass(frozen=True)
class Filtration:
    """Ordered (simplex, scale) entries; faces always precede cofaces.

    Ties at equal scale break by dimension, then lexicographic vertex
    order, which makes the downstream reduction deterministic.
    """

    entries: tuple[tuple[Simplex, float], ...]

    def __init__(self, entries: Iterable[tuple[Simplex, float]]):
        ordered = tuple(sorted(entries, key=filtration_sort_key))
        object.__setattr__(self, "entries", ordered)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[Simplex, float]]:
        return iter(self.entries)

    def scales(self) -> list[float]:
        """Distinct scales in ascending order."""
        return sorted({scale for _, scale in self.entries})

    def validate(self) -> list[str]:
        """Check monotonicity: every face appears earlier at a scale <= ours."""
        violations = []
        seen: dict[Simplex, float] = {}
        for s, scale in self.entries:
            if s in seen:
                violations.append(f"duplicate entry {s.vertices}")
            for face in s.faces():
                if face not in seen:
                    violations.append(
                        f"face {face.vertices} of {s.vertices} missing or later")
                elif seen[face] > scale:
                    violations.append(
                        f"face {face.vertices} enters after {s.vertices}")
            seen[s] = scale
        return violations

    def to_text(self) -> str:
        """Debug dump: one line 'scale dim v0 v1 ... vk' per entry."""
        lines = []
        for s, scale in self.entries:
            verts = " ".join(str(v) for v in s.vertices)
            lines.append(f"{scale!r} {s.dimension} {verts}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, order=True)
class PersistencePair:
    """A (birth, death) interval for a homology class of given dimension."""

    dimension: int
    birth: float
    death: float = math.inf

    def __post_init__(self):
        if self.death < self.birth:
            raise ValueError(f"death {self.death} before birth {self.birth}")

    @property
    def persistence(self) -> float:
        return self.death - self.birth

    @property
    def is_essential(self) -> bool:
        return math.isinf(self.death)


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of persistence pairs, kept sorted by (dim, birth, death)."""

    pairs: tuple[PersistencePair, ...]

    def __init__(self, pairs: Iterable[PersistencePair]):
        object.__setattr__(self, "pairs", tuple(sorted(pairs)))

    def in_dimension(self, k: int) -> list[PersistencePair]:
        return [p for p in self.pairs if p.dimension == k]

    @property
    def max_dimension(self) -> int:
        return max((p.dimension for p in self.pairs), default=-1)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[PersistencePair]:
        return iter(self.pairs)
