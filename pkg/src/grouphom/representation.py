"""Integer matrix representations of presented groups.

Vectors are coordinate columns and matrices act on the left.  A word
``x1 x2 ... xk`` is sent to the product ``psi(x1) psi(x2) ... psi(xk)``;
an inverse letter uses the stored inverse matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .exact_linalg import DimensionError, IntMatrix, LatticeBasis, inverse, is_unimodular
from .presentation import GroupPresentation, Word


class RepresentationInvalid(ValueError):
    pass


@dataclass(frozen=True)
class MatrixRepresentation:
    dimension: int
    generators: tuple[str, ...]
    matrices: tuple[IntMatrix, ...]
    inverses: tuple[IntMatrix, ...]

    def __post_init__(self):
        n = len(self.generators)
        if len(self.matrices) != n or len(self.inverses) != n:
            raise DimensionError("one matrix and one inverse per generator required")
        for name, M, Mi in zip(self.generators, self.matrices, self.inverses):
            for X in (M, Mi):
                if X.shape != (self.dimension, self.dimension):
                    raise DimensionError(f"matrix for {name!r} has shape {X.shape}, expected {self.dimension}x{self.dimension}")

    @classmethod
    def from_matrices(cls, dimension: int, matrices: Mapping[str, IntMatrix | Sequence[Sequence[int]]]) -> MatrixRepresentation:
        """Build a representation, computing and checking the inverses."""
        names, mats, invs = [], [], []
        for name, M in matrices.items():
            M = M if isinstance(M, IntMatrix) else IntMatrix(M, dimension)
            if M.shape != (dimension, dimension):
                raise RepresentationInvalid(f"matrix for {name!r} has shape {M.shape}")
            if not is_unimodular(M):
                raise RepresentationInvalid(f"matrix for {name!r} is not unimodular")
            names.append(name)
            mats.append(M)
            invs.append(inverse(M))
        return cls(dimension, tuple(names), tuple(mats), tuple(invs))

    def matrix(self, name: str) -> IntMatrix:
        return self.matrices[self.generators.index(name)]

    def inverse(self, name: str) -> IntMatrix:
        return self.inverses[self.generators.index(name)]

    def for_presentation(self, p: GroupPresentation) -> MatrixRepresentation:
        """Reorder so that generator ``k`` of ``p`` is entry ``k`` here."""
        if self.generators == p.generators:
            return self
        pos = {n: i for i, n in enumerate(self.generators)}
        missing = [n for n in p.generators if n not in pos]
        if missing:
            raise RepresentationInvalid(f"no matrix for generator(s) {', '.join(missing)}")
        order = [pos[n] for n in p.generators]
        return MatrixRepresentation(
            self.dimension,
            p.generators,
            tuple(self.matrices[i] for i in order),
            tuple(self.inverses[i] for i in order),
        )

    def conjugate(self, P: IntMatrix, Pinv: IntMatrix) -> MatrixRepresentation:
        """The representation ``x -> P psi(x) P^-1``."""
        return MatrixRepresentation(
            self.dimension,
            self.generators,
            tuple(P @ M @ Pinv for M in self.matrices),
            tuple(P @ M @ Pinv for M in self.inverses),
        )

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "generators": {n: {"matrix": M.tolist()} for n, M in zip(self.generators, self.matrices)},
        }

    @classmethod
    def from_json(cls, doc: dict) -> MatrixRepresentation:
        try:
            dim = int(doc["dimension"])
            gens = doc["generators"]
            mats = {name: entry["matrix"] for name, entry in gens.items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise RepresentationInvalid(f"malformed representation document: {exc}") from None
        try:
            return cls.from_matrices(dim, mats)
        except DimensionError as exc:
            raise RepresentationInvalid(str(exc)) from None


def trivial_representation(p: GroupPresentation, dimension: int = 1) -> MatrixRepresentation:
    I = IntMatrix.identity(dimension)
    n = len(p.generators)
    return MatrixRepresentation(dimension, p.generators, (I,) * n, (I,) * n)


def load_representation(path: str) -> MatrixRepresentation:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise RepresentationInvalid(f"{path}: {exc}") from None
    return MatrixRepresentation.from_json(doc)


def _letter_matrix(rep: MatrixRepresentation, x: int, e: int) -> IntMatrix:
    if not 0 <= x < len(rep.generators):
        raise KeyError(f"unknown generator index {x}")
    return rep.matrices[x] if e > 0 else rep.inverses[x]


def word_matrix(rep: MatrixRepresentation, w: Word) -> IntMatrix:
    M = IntMatrix.identity(rep.dimension)
    for x, e in w:
        M = M @ _letter_matrix(rep, x, e)
    return M


def act(rep: MatrixRepresentation, w: Word, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != rep.dimension:
        raise DimensionError(f"vector of length {len(v)} for dimension {rep.dimension}")
    out = tuple(v)
    for x, e in reversed(w):
        out = _letter_matrix(rep, x, e).apply(out)
    return out


@dataclass
class RelationCheck:
    label: str
    holds: bool
    exact: bool


@dataclass
class RepReport:
    relations: list[RelationCheck]
    inverse_checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.relations) and all(self.inverse_checks.values())

    @property
    def exact(self) -> bool:
        return all(c.exact for c in self.relations) and all(self.inverse_checks.values())

    def failures(self) -> list[str]:
        out = [c.label for c in self.relations if not c.holds]
        out += [f"inverse of {n}" for n, ok in self.inverse_checks.items() if not ok]
        return out


def verify_representation(p: GroupPresentation, rep: MatrixRepresentation,
                          relation_lattice: LatticeBasis | None = None) -> RepReport:
    """Check every relation of ``p`` under ``rep``.

    With ``relation_lattice`` (the submodule ``L`` of a quotient module
    ``Z^g / L``) a relation holds when both sides agree as maps of the
    quotient, i.e. every column of their difference lies in ``L``.
    ``RelationCheck.exact`` always records plain integer equality.
    """
    rep = rep.for_presentation(p)
    I = IntMatrix.identity(rep.dimension)
    inverse_checks = {
        n: (M @ Mi == I and Mi @ M == I)
        for n, M, Mi in zip(rep.generators, rep.matrices, rep.inverses)
    }
    checks = []
    for k, r in enumerate(p.relations):
        diff = word_matrix(rep, r.lhs) - word_matrix(rep, r.rhs)
        exact = diff.is_zero()
        holds = exact
        if not exact and relation_lattice is not None:
            holds = all(relation_lattice.contains(c) for c in diff.columns())
        checks.append(RelationCheck(r.label or f"#{k + 1}", holds, exact))
    return RepReport(checks, inverse_checks)
