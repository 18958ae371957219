"""Chain vectors in ``C_1 (x) M`` and the rewriting of relations.

A chain vector is an integer vector of length ``|X| * g`` holding the
coefficients of the symbols ``[x] (x) gamma_i``.  Coordinates are
generator-major: ``[x] (x) gamma_i`` sits at ``index(x) * g + (i - 1)``.

The rewriting uses ``h [x] (x) m = [x] (x) psi(h)^-1 m`` for prefixes
``h`` and ``[x^-1] (x) m = -[x] (x) psi(x) m`` for inverse letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coefficients import CoefficientModule
from .exact_linalg import DimensionError, IntMatrix
from .presentation import GroupPresentation, Relation, Word
from .representation import MatrixRepresentation


@dataclass(frozen=True)
class ChainVector:
    coords: tuple[int, ...]
    label: str = ""
    variant: str | None = None

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: ChainVector) -> ChainVector:
        return ChainVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.label)

    def __sub__(self, other: ChainVector) -> ChainVector:
        return ChainVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.label)


def position(p: GroupPresentation, generator: str | int, i: int, g: int) -> int:
    """Coordinate of ``[generator] (x) gamma_i`` (``i`` is 1-based)."""
    x = p.index(generator) if isinstance(generator, str) else generator
    if not 1 <= i <= g:
        raise IndexError(f"basis index {i} outside 1..{g}")
    return x * g + (i - 1)


def chain_vector(p: GroupPresentation, g: int, terms: dict[tuple[str, int], int], label: str = "",
                 variant: str | None = None) -> ChainVector:
    """Chain vector from ``{(generator, i): coefficient}``."""
    v = [0] * (len(p.generators) * g)
    for (x, i), c in terms.items():
        v[position(p, x, i, g)] += c
    return ChainVector(tuple(v), label, variant)


def _check(p: GroupPresentation, rep: MatrixRepresentation, g: int) -> MatrixRepresentation:
    if rep.dimension != g:
        raise DimensionError(f"representation dimension {rep.dimension} != module rank {g}")
    return rep.for_presentation(p)


def boundary_matrix(p: GroupPresentation, rep: MatrixRepresentation, g: int) -> IntMatrix:
    """The ``g x |X|g`` matrix of ``[x] (x) m -> (psi(x)^-1 - I) m``."""
    rep = _check(p, rep, g)
    I = IntMatrix.identity(g)
    blocks = [Mi - I for Mi in rep.inverses]
    rows = [[] for _ in range(g)]
    for B in blocks:
        for r in range(g):
            rows[r].extend(B.data[r])
    return IntMatrix(rows, len(blocks) * g)


def _side_sum(rep: MatrixRepresentation, w: Word, out: list[list[int]], g: int, sign: int) -> None:
    # out[x*g + r][i] accumulates the (x, r) coordinate of the vector for gamma_{i+1}
    Q = [[int(r == c) for c in range(g)] for r in range(g)]  # psi(prefix)^-1
    for x, e in w:
        if e > 0:
            contrib = Q
            step = rep.inverses[x].data
        else:
            Mx = rep.matrices[x].data
            contrib = [[-sum(Mx[r][k] * Q[k][c] for k in range(g) if Mx[r][k]) for c in range(g)] for r in range(g)]
            step = Mx
        base = x * g
        for r in range(g):
            row = out[base + r]
            crow = contrib[r]
            for c in range(g):
                if crow[c]:
                    row[c] += sign * crow[c]
        Q = [[sum(step[r][k] * Q[k][c] for k in range(g) if step[r][k]) for c in range(g)] for r in range(g)]


def relation_vectors(p: GroupPresentation, rep: MatrixRepresentation, r: Relation, g: int | None = None) -> list[ChainVector]:
    """Rewritten relation ``r (x) gamma_i`` for ``i = 1..g`` (LHS minus RHS)."""
    g = rep.dimension if g is None else g
    rep = _check(p, rep, g)
    n = len(p.generators) * g
    out = [[0] * g for _ in range(n)]
    _side_sum(rep, r.lhs, out, g, 1)
    _side_sum(rep, r.rhs, out, g, -1)
    label = r.label or ""
    return [ChainVector(tuple(out[k][i] for k in range(n)), f"{label}:{i + 1}") for i in range(g)]


def relation_vector(p: GroupPresentation, rep: MatrixRepresentation, r: Relation, i: int) -> ChainVector:
    g = rep.dimension
    if not 1 <= i <= g:
        raise IndexError(f"basis index {i} outside 1..{g}")
    return relation_vectors(p, rep, r, g)[i - 1]


def module_relation_vectors(p: GroupPresentation, m: CoefficientModule) -> list[ChainVector]:
    """``[x] (x) l`` for every generator ``x`` and module relation ``l``."""
    g = m.rank
    n = len(p.generators) * g
    out = []
    for x, name in enumerate(p.generators):
        for k, ell in enumerate(m.relation_vectors):
            if not any(ell):
                continue
            v = [0] * n
            v[x * g:(x + 1) * g] = ell
            out.append(ChainVector(tuple(v), f"r_{name}" if len(m.relation_vectors) == 1 else f"r_{name}[{k}]"))
    return out


def apply_boundary(D: IntMatrix, v: ChainVector | Sequence[int]) -> tuple[int, ...]:
    coords = v.coords if isinstance(v, ChainVector) else v
    return D.apply(coords)
