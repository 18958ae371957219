"""Coefficient modules ``Z^rank / L`` carrying a matrix action."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exact_linalg import DimensionError, LatticeBasis
from .representation import MatrixRepresentation


class ModuleIncompatible(ValueError):
    pass


@dataclass(frozen=True)
class CoefficientModule:
    rank: int
    relation_vectors: tuple[tuple[int, ...], ...] = ()
    description: str = ""

    def __post_init__(self):
        rels = tuple(tuple(int(x) for x in v) for v in self.relation_vectors)
        for v in rels:
            if len(v) != self.rank:
                raise DimensionError(f"relation vector of length {len(v)} for rank {self.rank}")
        object.__setattr__(self, "relation_vectors", rels)

    @property
    def lattice(self) -> LatticeBasis:
        return LatticeBasis.spanned_by(self.rank, self.relation_vectors)

    @property
    def is_free(self) -> bool:
        return not any(any(v) for v in self.relation_vectors)

    def to_json(self) -> dict:
        return {"rank": self.rank, "relations": [list(v) for v in self.relation_vectors]}

    @classmethod
    def from_json(cls, doc: dict, description: str = "") -> CoefficientModule:
        try:
            return cls(int(doc["rank"]), tuple(tuple(v) for v in doc.get("relations", [])), description)
        except (KeyError, TypeError, ValueError) as exc:
            raise ModuleIncompatible(f"malformed module document: {exc}") from None


def trivial_module() -> CoefficientModule:
    return CoefficientModule(1, (), "Z (trivial action)")


def load_module(path: str) -> CoefficientModule:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModuleIncompatible(f"{path}: {exc}") from None
    return CoefficientModule.from_json(doc, description=path)


def incompatibilities(m: CoefficientModule, rep: MatrixRepresentation) -> list[str]:
    """Generators whose matrix (or inverse) does not preserve ``L``."""
    if m.rank != rep.dimension:
        raise DimensionError(f"module rank {m.rank} != representation dimension {rep.dimension}")
    L = m.lattice
    bad = []
    for name, M, Mi in zip(rep.generators, rep.matrices, rep.inverses):
        for ell in m.relation_vectors:
            if not (L.contains(M.apply(ell)) and L.contains(Mi.apply(ell))):
                bad.append(name)
                break
    return bad


def check_action_compatibility(m: CoefficientModule, rep: MatrixRepresentation) -> bool:
    return not incompatibilities(m, rep)
