import pytest

from grouphom.catalog import (
    SurfaceSpec,
    UnsupportedSurface,
    b_matrix,
    expected_h1,
    generator_names,
    mcg_action,
    mcg_module,
    mcg_presentation,
    prop4_generators,
    surface_specs,
)
from grouphom.coefficients import check_action_compatibility
from grouphom.exact_linalg import AbelianGroupStructure, IntMatrix
from grouphom.fox import position


def test_genus_three_presentation():
    p = mcg_presentation(SurfaceSpec(3, 1))
    assert p.generators == ("a1", "a2", "u1", "u2")
    assert [r.label for r in p.relations] == ["A2[1]", "B2", "C2", "C4", "C5[1]"]


def test_even_genus_six():
    p = mcg_presentation(SurfaceSpec(6, 1))
    assert p.generators == ("a1", "a2", "a3", "a4", "a5", "u1", "u2", "u3", "u4", "u5", "b0", "b1", "b2")
    labels = {r.label for r in p.relations}
    assert {"A7", "A8[1]", "A9a"} <= labels
    assert "A9b" not in labels


@pytest.mark.parametrize("g, s", [(3, 0), (2, 1), (5, 2)])
def test_unsupported(g, s):
    with pytest.raises(UnsupportedSurface):
        SurfaceSpec(g, s)


@pytest.mark.parametrize("g, count", [(3, 4), (4, 7), (5, 9), (6, 13), (7, 12), (8, 16), (12, 22)])
def test_generator_counts(g, count):
    assert len(generator_names(SurfaceSpec(g, 1))) == count
    if g >= 4:
        assert generator_names(SurfaceSpec(g, 0))[-1] == "rho"


def test_modules():
    m = mcg_module(SurfaceSpec(5, 1))
    assert m.rank == 5 and m.relation_vectors == ()
    m = mcg_module(SurfaceSpec(4, 0))
    assert m.rank == 4 and m.relation_vectors == ((2, 2, 2, 2),)
    for spec in surface_specs(3, 9):
        assert check_action_compatibility(mcg_module(spec), mcg_action(spec))


def test_expected_values():
    assert expected_h1(SurfaceSpec(4, 0)) == AbelianGroupStructure(0, (2, 2, 2))
    assert expected_h1(SurfaceSpec(8, 1)) == AbelianGroupStructure(0, (2, 2))
    assert expected_h1(SurfaceSpec(12, 0)) == AbelianGroupStructure(0, (2, 2))


def test_b_matrix_inverse():
    for g, j in [(4, 1), (8, 3), (9, 1)]:
        assert b_matrix(g, j) @ b_matrix(g, j, inverse=True) == IntMatrix.identity(g)
    with pytest.raises(UnsupportedSurface):
        b_matrix(5, 2)


def test_surface_specs_order():
    specs = surface_specs(3, 5)
    assert [(s.genus, s.boundary) for s in specs] == [(3, 1), (4, 1), (5, 1), (4, 0), (5, 0)]
    assert surface_specs(1, 2) == []


def _by_label(spec):
    return {(v.label, v.variant): v for v in prop4_generators(spec)}


def test_g7_item():
    spec = SurfaceSpec(4, 0)
    p = mcg_presentation(spec)
    v = _by_label(spec)[("G7", None)]
    want = [0] * (len(p.generators) * 4)
    want[position(p, "a1", 1, 4)] = 1
    want[position(p, "rho", 1, 4)] = 1
    want[position(p, "u1", 1, 4)] = -1
    assert list(v.coords) == want


def test_g2_item():
    spec = SurfaceSpec(5, 1)
    p = mcg_presentation(spec)
    v = _by_label(spec)[("G2[2]", None)]
    want = [0] * (len(p.generators) * 5)
    want[position(p, "a2", 2, 5)] = 1
    want[position(p, "a2", 3, 5)] = 1
    assert list(v.coords) == want


def test_no_b_family_for_genus_three():
    labels = {v.label.split("[")[0] for v in prop4_generators(SurfaceSpec(3, 1))}
    assert labels == {"G1", "G2", "G3", "G4", "G5"}


def test_closed_only_families():
    bounded = {v.label.split("[")[0] for v in prop4_generators(SurfaceSpec(6, 1))}
    closed = {v.label.split("[")[0] for v in prop4_generators(SurfaceSpec(6, 0))}
    assert closed - bounded == {"G6", "G7", "G12"}


@pytest.mark.parametrize("g", range(4, 13))
def test_hyperelliptic_product_is_minus_identity_modulo_module(g):
    from grouphom.catalog import a_matrix, u_matrix

    M = IntMatrix.identity(g)
    for j in range(1, g):
        M = M @ a_matrix(g, j)
    for j in range(g - 1, 0, -1):
        M = M @ u_matrix(g, j)
    lattice = mcg_module(SurfaceSpec(g, 0)).lattice
    assert all(lattice.contains(c) for c in (M + IntMatrix.identity(g)).columns())
