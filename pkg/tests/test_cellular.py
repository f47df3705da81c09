import pytest

from exacthom.cellular import (
    Cell,
    CellComplex,
    SurfaceVerdict,
    builtin,
    chain_complex_of,
    circle,
    classify_surface,
    genus_from_euler,
    genus_surface,
    homology_of,
    sphere,
    torus,
)
from exacthom.errors import CellComplexError, ClassificationError, FormatError


def tetrahedron_boundary():
    """Subdivided sphere: boundary of the 3-simplex with simplicial signs.

    Edge (i,j) with i<j has boundary j - i; face (i,j,k) has boundary
    (j,k) - (i,k) + (i,j).
    """
    verts = [1, 2, 3, 4]
    edges = [(i, j) for i in verts for j in verts if i < j]
    faces = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    cells = (
        [(f"v{i}", 0) for i in verts]
        + [(f"e{i}{j}", 1) for i, j in edges]
        + [(f"f{i}{j}{k}", 2) for i, j, k in faces]
    )
    incidence = []
    for i, j in edges:
        incidence.append((f"e{i}{j}", f"v{j}", 1))
        incidence.append((f"e{i}{j}", f"v{i}", -1))
    for i, j, k in faces:
        incidence.append((f"f{i}{j}{k}", f"e{j}{k}", 1))
        incidence.append((f"f{i}{j}{k}", f"e{i}{k}", -1))
        incidence.append((f"f{i}{j}{k}", f"e{i}{j}", 1))
    return CellComplex(cells, incidence)


class TestBuiltins:
    def test_circle_cells(self):
        cc = circle()
        assert len(cc.cells_of_dim(0)) == 1 and len(cc.cells_of_dim(1)) == 1

    def test_sphere_has_no_one_cells(self):
        cc = sphere()
        assert len(cc.cells) == 2
        assert not cc.cells_of_dim(1)

    def test_genus_one_is_torus(self):
        assert genus_surface(1) == torus()

    def test_genus_three_cell_count(self):
        cc = genus_surface(3)
        assert len(cc.cells_of_dim(1)) == 6
        assert len(cc.cells) == 8

    def test_builtin_names(self):
        assert builtin("circle") == circle()
        assert builtin("sphere") == sphere()
        assert builtin("genus_g:1") == torus()

    def test_unknown_builtin(self):
        with pytest.raises(FormatError):
            builtin("klein_bottle")

    def test_negative_genus(self):
        with pytest.raises(FormatError):
            genus_surface(-1)


class TestChainComplex:
    def test_circle_complex(self):
        c = chain_complex_of(circle())
        assert c.space.dims == {-1: 1, 0: 1}
        assert c.differential.is_zero()

    def test_torus_complex(self):
        c = chain_complex_of(torus())
        assert c.space.dims == {-2: 1, -1: 2, 0: 1}
        assert c.differential.is_zero()

    def test_point(self):
        c = chain_complex_of(CellComplex([("p", 0)]))
        assert c.space.dims == {0: 1}

    def test_incidence_signs_land_in_matrix(self):
        cc = CellComplex(
            [("a", 0), ("b", 0), ("e", 1)],
            [("e", "a", -1), ("e", "b", 1)],
        )
        block = chain_complex_of(cc).differential.block(-1)
        assert sorted(x for x in block.entries()) == [-1, 1]

    def test_all_builtins_validate(self):
        for name in ["circle", "sphere", "torus", "genus_g:4"]:
            assert chain_complex_of(builtin(name)).validate()

    def test_inconsistent_incidence_rejected(self):
        cc = CellComplex(
            [("p", 0), ("e", 1), ("f", 2)],
            [("e", "p", 1), ("f", "e", 1)],
        )
        with pytest.raises(CellComplexError):
            chain_complex_of(cc)


class TestHomology:
    def test_golden_surfaces(self):
        for g in range(6):
            h = homology_of(genus_surface(g))
            assert (h.dim(0), h.dim(1), h.dim(2)) == (1, 2 * g, 1)

    def test_circle(self):
        h = homology_of(circle())
        assert h.dims == {0: 1, 1: 1}

    def test_subdivided_sphere_matches_minimal(self):
        assert homology_of(tetrahedron_boundary()) == homology_of(sphere())

    def test_subdivision_preserves_euler(self):
        fine = chain_complex_of(tetrahedron_boundary())
        coarse = chain_complex_of(sphere())
        assert fine.euler_from_dims() == coarse.euler_from_dims() == 2


class TestClassify:
    def test_torus_genus_one(self):
        v = classify_surface(torus())
        assert v.genus == 1 and v.euler == 0 and v.connected

    def test_sphere_genus_zero(self):
        assert classify_surface(sphere()).genus == 0

    def test_all_small_genera(self):
        for g in range(6):
            v = classify_surface(genus_surface(g))
            assert v.genus == g
            assert v.euler == 2 - 2 * g

    def test_subdivided_sphere(self):
        assert classify_surface(tetrahedron_boundary()).genus == 0

    def test_disconnected_rejected(self):
        two_points = CellComplex([("p", 0), ("q", 0)])
        with pytest.raises(ClassificationError):
            classify_surface(two_points)

    def test_genus_from_euler(self):
        assert genus_from_euler(2) == 0
        assert genus_from_euler(0) == 1
        assert genus_from_euler(-2) == 2

    def test_odd_euler_rejected(self):
        with pytest.raises(ClassificationError):
            genus_from_euler(1)

    def test_euler_above_two_rejected(self):
        with pytest.raises(ClassificationError):
            genus_from_euler(4)

    def test_verdict_consistency_enforced(self):
        with pytest.raises(ClassificationError):
            SurfaceVerdict(genus=1, euler=2, connected=True, orientable_assumed=True)


class TestStructuralErrors:
    def test_duplicate_ids(self):
        with pytest.raises(CellComplexError):
            CellComplex([("a", 0), ("a", 1)])

    def test_dangling_reference(self):
        with pytest.raises(CellComplexError):
            CellComplex([("a", 0)], [("ghost", "a", 1)])

    def test_dimension_gap_in_incidence(self):
        with pytest.raises(CellComplexError):
            CellComplex([("a", 0), ("f", 2)], [("f", "a", 1)])

    def test_duplicate_incidence_pair(self):
        with pytest.raises(CellComplexError):
            CellComplex(
                [("a", 0), ("e", 1)],
                [("e", "a", 1), ("e", "a", 2)],
            )

    def test_negative_dimension(self):
        with pytest.raises(CellComplexError):
            CellComplex([Cell("a", -1)])
