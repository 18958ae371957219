"""First homology of a presented group with coefficients in ``Z^g / L``.

With ``D`` the boundary matrix, ``H_1 = K / <S>`` where ``K = {v : D v in L}``
and ``S`` holds the rewritten relations together with the vectors
``[x] (x) l`` coming from the module relations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .coefficients import CoefficientModule, ModuleIncompatible, incompatibilities
from .exact_linalg import (
    AbelianGroupStructure,
    IntMatrix,
    LatticeBasis,
    NotInLattice,
    kernel,
    lattice_equal,
    smith_invariants,
)
from .fox import ChainVector, boundary_matrix, module_relation_vectors, relation_vectors
from .presentation import GroupPresentation
from .representation import MatrixRepresentation, RepresentationInvalid, verify_representation


class CycleViolation(ValueError):
    pass


@dataclass
class H1Result:
    invariants: AbelianGroupStructure
    kernel_rank: int
    num_relation_vectors: int
    diagnostics: dict = field(default_factory=dict)

    def __str__(self) -> str:
        return str(self.invariants)


def _prepare(p: GroupPresentation, rep: MatrixRepresentation, m: CoefficientModule) -> MatrixRepresentation:
    rep = rep.for_presentation(p)
    if rep.dimension != m.rank:
        raise ModuleIncompatible(f"module rank {m.rank} != representation dimension {rep.dimension}")
    report = verify_representation(p, rep, m.lattice)
    if not report.passed:
        raise RepresentationInvalid("representation violates " + ", ".join(report.failures()))
    bad = incompatibilities(m, rep)
    if bad:
        raise ModuleIncompatible("action does not preserve the module relations for " + ", ".join(bad))
    return rep


def cycle_lattice(p: GroupPresentation, rep: MatrixRepresentation, m: CoefficientModule) -> LatticeBasis:
    """``K = {v in Z^n : D v in L}`` as a lattice in ``Z^(|X| g)``."""
    g = m.rank
    n = len(p.generators) * g
    D = boundary_matrix(p, rep, g)
    L = [v for v in m.relation_vectors if any(v)]
    if L:
        negL = IntMatrix.from_columns([tuple(-x for x in v) for v in L], g)
        big = kernel(D.hstack(negL))
        K = LatticeBasis.spanned_by(n, (v[:n] for v in big.vectors))
    else:
        K = kernel(D)
    # saturation certificate: every basis vector maps into L
    Lb = m.lattice
    for v in K.vectors:
        if not Lb.contains(D.apply(v)):
            raise ArithmeticError("projected kernel left the preimage of L")
    return K


def twisted_h1(p: GroupPresentation, rep: MatrixRepresentation, m: CoefficientModule) -> H1Result:
    """Compute ``H_1(G; M)`` for ``G = p`` acting on ``M = m`` through ``rep``."""
    t0 = time.perf_counter()
    rep = _prepare(p, rep, m)
    t1 = time.perf_counter()
    K = cycle_lattice(p, rep, m)
    t2 = time.perf_counter()
    S: list[ChainVector] = []
    for r in p.relations:
        S.extend(relation_vectors(p, rep, r, m.rank))
    S.extend(module_relation_vectors(p, m))
    t3 = time.perf_counter()
    coords = []
    for v in S:
        try:
            coords.append(K.coordinates(v.coords))
        except NotInLattice:
            raise CycleViolation(f"relation vector {v.label} does not lie in the cycle lattice") from None
    diag = smith_invariants(coords, K.rank) if coords else []
    inv = AbelianGroupStructure.from_invariants(K.rank, diag)
    t4 = time.perf_counter()
    diagnostics = {
        "generators": len(p.generators),
        "relations": len(p.relations),
        "chain_dimension": len(p.generators) * m.rank,
        "seconds": {
            "verify": t1 - t0,
            "kernel": t2 - t1,
            "rewrite": t3 - t2,
            "quotient": t4 - t3,
        },
    }
    return H1Result(inv, K.rank, len(S), diagnostics)


def abelianization(p: GroupPresentation) -> AbelianGroupStructure:
    """``Z^|X|`` modulo the exponent-sum vectors of the relations."""
    n = len(p.generators)
    rows = []
    for r in p.relations:
        v = [0] * n
        for x, e in r.lhs:
            v[x] += e
        for x, e in r.rhs:
            v[x] -= e
        rows.append(v)
    diag = smith_invariants(rows, n) if rows else []
    return AbelianGroupStructure.from_invariants(n, diag)


@dataclass
class KernelCheckReport:
    membership: bool
    generation: bool
    independence: bool | None
    variant: str | None = None
    passing_variants: list[str] = field(default_factory=list)
    outside: list[str] = field(default_factory=list)
    kernel_rank: int = 0
    candidate_count: int = 0

    @property
    def passed(self) -> bool:
        return self.membership and self.generation and self.independence is not False


def _check_variant(K: LatticeBasis, n: int, vectors: Sequence[ChainVector], extra: Sequence[ChainVector],
                   free: bool) -> tuple[bool, bool, bool | None, list[str]]:
    outside = [v.label for v in vectors if not K.contains(v.coords)]
    membership = not outside
    span = LatticeBasis.spanned_by(n, [v.coords for v in vectors] + [v.coords for v in extra])
    generation = membership and lattice_equal(span, K)
    independence = None
    if free:
        independence = len(vectors) == K.rank and span.rank == len(vectors)
    return membership, generation, independence, outside


def verify_kernel_generators(p: GroupPresentation, rep: MatrixRepresentation, m: CoefficientModule,
                             candidates: Sequence[ChainVector]) -> KernelCheckReport:
    """Check that ``candidates`` (plus module relations) generate ``K``.

    Candidates tagged with a ``variant`` are alternatives: every untagged
    vector is combined with each variant family in turn, and the report
    lists which families pass.
    """
    rep = _prepare(p, rep, m)
    n = len(p.generators) * m.rank
    K = cycle_lattice(p, rep, m)
    extra = module_relation_vectors(p, m)
    free = m.is_free
    base = [c for c in candidates if c.variant is None]
    variants: list[str] = []
    for c in candidates:
        if c.variant is not None and c.variant not in variants:
            variants.append(c.variant)
    trials = [(v, base + [c for c in candidates if c.variant == v]) for v in variants] or [(None, base)]
    results = []
    for name, vecs in trials:
        results.append((name, len(vecs)) + _check_variant(K, n, vecs, extra, free))
    passing = [r for r in results if r[2] and r[3] and r[4] is not False]
    chosen = passing[0] if passing else results[0]
    name, count, membership, generation, independence, outside = chosen
    return KernelCheckReport(
        membership=membership,
        generation=generation,
        independence=independence,
        variant=name,
        passing_variants=[r[0] for r in passing if r[0] is not None],
        outside=outside,
        kernel_rank=K.rank,
        candidate_count=count,
    )
