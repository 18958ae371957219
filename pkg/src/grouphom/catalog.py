"""Mapping class groups of nonorientable surfaces N_{g,s}, s in {0, 1}.

Provides the Paris-Szepietowski presentations, the action on
``H_1(N_{g,s}; Z)`` in the basis of crosscap classes, the coefficient
module, candidate generators of the cycle lattice and the expected first
homology.

Generator order is fixed: ``a1 .. a{g-1}``, ``u1 .. u{min(5, g-1)}``, then
the b-block (``b1`` for g = 4 or odd g >= 5; ``b0 .. b{(g-2)/2}`` for
even g >= 6), then ``rho`` for closed surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import CoefficientModule
from .exact_linalg import AbelianGroupStructure, IntMatrix
from .fox import ChainVector, chain_vector
from .presentation import GroupPresentation, make_presentation
from .representation import MatrixRepresentation


class UnsupportedSurface(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceSpec:
    genus: int
    boundary: int

    def __post_init__(self):
        g, s = self.genus, self.boundary
        if s not in (0, 1):
            raise UnsupportedSurface(f"boundary count {s} not supported (only 0 or 1)")
        if s == 1 and g < 3:
            raise UnsupportedSurface(f"N_{{{g},1}} not supported: genus must be >= 3")
        if s == 0 and g < 4:
            raise UnsupportedSurface(f"N_{{{g},0}} not supported: genus must be >= 4")

    @property
    def umax(self) -> int:
        return min(5, self.genus - 1)

    @property
    def b_indices(self) -> list[int]:
        g = self.genus
        if g == 3:
            return []
        if g == 4 or g % 2:
            return [1]
        return list(range(0, (g - 2) // 2 + 1))

    @property
    def closed(self) -> bool:
        return self.boundary == 0

    def __str__(self) -> str:
        return f"N_{{{self.genus},{self.boundary}}}"


def generator_names(spec: SurfaceSpec) -> list[str]:
    g = spec.genus
    names = [f"a{j}" for j in range(1, g)]
    names += [f"u{j}" for j in range(1, spec.umax + 1)]
    names += [f"b{j}" for j in spec.b_indices]
    if spec.closed:
        names.append("rho")
    return names


def _seq(prefix: str, indices) -> str:
    return " ".join(f"{prefix}{j}" for j in indices)


def relation_strings(spec: SurfaceSpec) -> list[tuple[str, str, str]]:
    """Relations as ``(lhs, rhs, label)`` strings in the presentation DSL."""
    g, umax = spec.genus, spec.umax
    even_big = g >= 6 and g % 2 == 0
    rels = []

    def add(label, lhs, rhs):
        rels.append((lhs, rhs, label))

    if g >= 4:
        for j in range(1, g):
            for k in range(j + 2, g):
                add(f"A1[{j},{k}]", f"a{j} a{k}", f"a{k} a{j}")
    for j in range(1, g - 1):
        add(f"A2[{j}]", f"a{j} a{j + 1} a{j}", f"a{j + 1} a{j} a{j + 1}")
    if g >= 4:
        for j in range(1, g):
            if j != 4:
                add(f"A3[{j}]", f"a{j} b1", f"b1 a{j}")
    if g >= 5:
        add("A4", "b1 a4 b1", "a4 b1 a4")
        add("A5", "(a2 a3 a4 b1)^10", "(a1 a2 a3 a4 b1)^6")
    if g >= 7:
        add("A6", "(a2 a3 a4 a5 a6 b1)^12", "(a1 a2 a3 a4 a5 a6 b1)^9")
    if even_big:
        add("A7", "b0", "a1")
        for j in range(1, (g - 4) // 2 + 1):
            block = f"b{j - 1} {_seq('a', range(2 * j, 2 * j + 4))}"
            add(f"A8[{j}]", f"b{j + 1} ({block})^6", f"({block} b{j})^5")
        if g == 6:
            add("A9a", "b2 b1", "b1 b2")
        if g >= 8:
            h = (g - 2) // 2
            add("A9b", f"b{h} a{g - 5}", f"a{g - 5} b{h}")
    if g >= 4:
        add("B1", "u1 u3", "u3 u1")
    add("B2", "u1 u2 u1", "u2 u1 u2")
    if g >= 4:
        for j in range(3, g):
            add(f"C1[{j}]", f"u1 a{j}", f"a{j} u1")
    add("C2", "a1 u2 u1", "u2 u1 a2")
    add("C4", "a1 u1 a1", "u1")
    # j = umax would need u_{umax+1}, which is not a generator
    for j in range(1, umax):
        add(f"C5[{j}]", f"u{j + 1} a{j} a{j + 1} u{j}", f"a{j} a{j + 1}")
    if g >= 4:
        add("C6", "(u3 b1)^2", "(a1 a2 a3)^2 (u1 u2 u3)^2")
    if g >= 6:
        add("C7", "u5 b1", "b1 u5")
    if g >= 5:
        add("C8", "b1 a4 u4", "a4 u4 (a4 a3 a2 a1 u1 u2 u3 u4) b1")
    if spec.closed:
        add("B3", f"({_seq('a', range(1, g))})^{g}", "" if g % 2 == 0 else "rho")
        for j in range(1, g):
            add(f"D1[{j}]", f"rho a{j}", f"a{j} rho")
        add("D2", "u1 rho u1", "rho")
        add("E", "rho^2", "")
        add("F", f"(u1 {_seq('a', range(1, g))} rho)^{g - 1}", "")
    return rels


def mcg_presentation(spec: SurfaceSpec) -> GroupPresentation:
    return make_presentation(f"MCG_N{spec.genus}_{spec.boundary}", generator_names(spec), relation_strings(spec))


# ---------------------------------------------------------------------------
# action on H_1(N; Z)


def _block(g: int, j: int, block: list[list[int]]) -> IntMatrix:
    """``I_{j-1} (+) block (+) I`` with the block starting at row/column j."""
    M = [[int(r == c) for c in range(g)] for r in range(g)]
    k = len(block)
    for r in range(k):
        for c in range(k):
            M[j - 1 + r][j - 1 + c] = block[r][c]
    return IntMatrix(M, g)


def a_matrix(g: int, j: int, inverse: bool = False) -> IntMatrix:
    return _block(g, j, [[2, -1], [1, 0]] if inverse else [[0, 1], [-1, 2]])


def u_matrix(g: int, j: int) -> IntMatrix:
    return _block(g, j, [[0, 1], [1, 0]])


def b_matrix(g: int, j: int, inverse: bool = False) -> IntMatrix:
    """``I + B`` with every row of the top-left (2j+2)-block equal to (-1, 1, ..., 1)."""
    size = 2 * j + 2
    if size > g:
        raise UnsupportedSurface(f"b{j} needs genus >= {size}")
    sign = -1 if inverse else 1
    M = [[int(r == c) for c in range(g)] for r in range(g)]
    for r in range(size):
        for c in range(size):
            M[r][c] += sign * (1 if c % 2 else -1)
    return IntMatrix(M, g)


def rho_matrix(g: int) -> IntMatrix:
    return IntMatrix.identity(g).scale(-1)


def mcg_action(spec: SurfaceSpec) -> MatrixRepresentation:
    g = spec.genus
    mats, invs = [], []
    for name in generator_names(spec):
        kind, idx = name[0], name[1:]
        if name == "rho":
            M = Mi = rho_matrix(g)
        elif kind == "a":
            M, Mi = a_matrix(g, int(idx)), a_matrix(g, int(idx), inverse=True)
        elif kind == "u":
            M = Mi = u_matrix(g, int(idx))
        else:
            M, Mi = b_matrix(g, int(idx)), b_matrix(g, int(idx), inverse=True)
        mats.append(M)
        invs.append(Mi)
    return MatrixRepresentation(g, tuple(generator_names(spec)), tuple(mats), tuple(invs))


def mcg_module(spec: SurfaceSpec) -> CoefficientModule:
    g = spec.genus
    if spec.closed:
        return CoefficientModule(g, ((2,) * g,), f"H_1(N_{g}; Z)")
    return CoefficientModule(g, (), f"H_1(N_{{{g},1}}; Z)")


def expected_h1(spec: SurfaceSpec) -> AbelianGroupStructure:
    return AbelianGroupStructure(0, (2, 2, 2) if spec.genus <= 6 else (2, 2))


# ---------------------------------------------------------------------------
# candidate generators of the cycle lattice


def prop4_generators(spec: SurfaceSpec) -> list[ChainVector]:
    """Candidate generators of ``K`` in catalog coordinates.

    For closed surfaces the list is (G1)-(G12), otherwise (G1)-(G5) and
    (G8)-(G11).  The (G10) family is emitted twice: once with
    ``b_{j,2i+1} - b_{j,1}`` (variant ``"minus"``) and once with
    ``b_{j,2i+1} + b_{j,1}`` (variant ``"plus"``).
    """
    g, umax = spec.genus, spec.umax
    p = mcg_presentation(spec)
    out: list[ChainVector] = []

    def vec(label, terms, variant=None):
        out.append(chain_vector(p, g, terms, label, variant))

    for j in range(1, g):
        for i in range(1, g + 1):
            if i not in (j, j + 1):
                vec(f"G1[{j},{i}]", {(f"a{j}", i): 1})
    for j in range(1, g):
        vec(f"G2[{j}]", {(f"a{j}", j): 1, (f"a{j}", j + 1): 1})
    for j in range(1, umax + 1):
        for i in range(1, g + 1):
            if i not in (j, j + 1):
                vec(f"G3[{j},{i}]", {(f"u{j}", i): 1})
    for j in range(1, umax + 1):
        vec(f"G4[{j}]", {(f"u{j}", j): 1, (f"u{j}", j + 1): 1})
    for j in range(1, umax):
        vec(f"G5[{j}]", {(f"a{j}", j): 1, (f"a{j + 1}", j + 1): -1, (f"u{j}", j): 1, (f"u{j + 1}", j + 1): 1})
    if spec.closed:
        for j in range(1, g):
            vec(f"G6[{j}]", {(f"a{j}", j): 2, ("rho", j): 1, ("rho", j + 1): 1})
        vec("G7", {("a1", 1): 1, ("rho", 1): 1, ("u1", 1): -1})
    for j in spec.b_indices:
        b = f"b{j}"
        for i in range(2 * j + 3, g + 1):
            vec(f"G8[{j},{i}]", {(b, i): 1})
        for i in range(1, j + 2):
            vec(f"G9[{j},{i}]", {(b, 2 * i): 1, (b, 1): 1})
        for i in range(1, j + 1):
            vec(f"G10[{j},{i}]", {(b, 2 * i + 1): 1, (b, 1): -1}, "minus")
            vec(f"G10[{j},{i}]", {(b, 2 * i + 1): 1, (b, 1): 1}, "plus")
        terms = {(b, 1): 1}
        for k in range(1, 2 * j + 2, 2):
            terms[(f"a{k}", k)] = -1
        vec(f"G11[{j}]", terms)
    if spec.closed:
        if g % 2:
            terms = {("a1", 1): 1, ("u1", 1): -1}
            for k in range(2, g, 2):
                terms[(f"a{k}", k)] = 2
        else:
            terms = {(f"a{k}", k): 2 for k in range(1, g, 2)}
        vec("G12", terms)
    return out


def surface_specs(g_min: int, g_max: int, boundaries=(1, 0)) -> list[SurfaceSpec]:
    """Every supported spec in the genus range, boundary-major."""
    out = []
    for s in boundaries:
        for g in range(g_min, g_max + 1):
            try:
                out.append(SurfaceSpec(g, s))
            except UnsupportedSurface:
                continue
    return out
