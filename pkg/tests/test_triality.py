from fractions import Fraction

from sostar.clifford import PAIRS
from sostar.hmatrix import CMatrix
from sostar.liealg import bracket
from sostar.scalars import ExactComplex, ExactScalar
from sostar.triality import (B_FAMILIES, B_PRIME, ROW_SIGNS, VECTOR_SIGNS,
                             apply_triality, g_matrix, h_matrix,
                             is_real_matrix, respects_i26_antisymmetry,
                             triality_setup, verify_triality)


def test_quartet_partition_covers_all_planes():
    listed = set(B_PRIME)
    for row in B_FAMILIES:
        listed |= set(row)
    assert listed == set(PAIRS)
    assert len(B_PRIME) + sum(len(r) for r in B_FAMILIES) == 28


def test_h_entries():
    h = Fraction(1, 2)
    expected = [[-h, -h, h, h], [h, h, h, h], [-h, h, h, -h], [-h, h, -h, h]]
    assert h_matrix() == CMatrix([[ExactComplex(ExactScalar(v)) for v in row]
                                  for row in expected])


def test_g_entries():
    g = g_matrix()
    h = ExactScalar(Fraction(1, 2))
    assert g.entries[0][0] == ExactComplex(-h)
    assert g.entries[0][2] == ExactComplex(ExactScalar(0), h)
    assert g.entries[0][3] == ExactComplex(ExactScalar(0), -h)
    assert g.entries[2][0] == ExactComplex(ExactScalar(0), h)
    assert g.entries[3][3] == ExactComplex(h)


def test_transition_matrices_cube_to_identity():
    ident = CMatrix.identity(4)
    h = h_matrix()
    g = g_matrix()
    assert (h @ h @ h - ident).is_zero()
    assert (g @ g @ g - ident).is_zero()


def test_quartets_commute(spin_reps):
    left, _ = spin_reps
    groups = [B_PRIME] + [[B_FAMILIES[r][c] for r in range(4)] for c in range(6)]
    for group in groups:
        for i in range(4):
            for j in range(i + 1, 4):
                assert bracket(left.generators[group[i]],
                               left.generators[group[j]]).is_zero()


def test_quartet_compactness_pattern(spin_reps):
    left, _ = spin_reps

    def sign(m):
        return (m @ m).trace().re.sign()

    assert all(sign(left.generators[p]) < 0 for p in B_PRIME)
    for c in range(6):
        signs = [sign(left.generators[B_FAMILIES[r][c]]) for r in range(4)]
        assert signs == [1, 1, -1, -1]


def test_transformed_bases_respect_orthogonal_structure(spin_reps):
    left, right = spin_reps
    for rep in (left, right):
        for m in rep.generators.values():
            assert respects_i26_antisymmetry(m)


def test_vector_basis_real_and_planar(spin_reps):
    left, _ = spin_reps
    quartets = triality_setup()
    vector = apply_triality(quartets, left)
    assert vector.name == "V"
    for (i, j), m in vector.generators.items():
        assert is_real_matrix(m)
        assert respects_i26_antisymmetry(m)
        assert m.entries[i][j] == ExactComplex(VECTOR_SIGNS[(i, j)])
        for r in range(8):
            for c in range(8):
                if (r, c) not in ((i, j), (j, i)):
                    assert m.entries[r][c].is_zero()


def test_cycle_is_exact(spin_reps):
    left, right = spin_reps
    quartets = triality_setup()
    vector = apply_triality(quartets, left)
    second = apply_triality(quartets, vector)
    assert second.name == "R"
    for p in PAIRS:
        assert (second.generators[p] - right.generators[p]).is_zero()
    third = apply_triality(quartets, second)
    assert third.name == "L"
    for p in PAIRS:
        assert (third.generators[p] - left.generators[p]).is_zero()


def test_structure_tensor_shared(spin_reps):
    left, right = spin_reps
    quartets = triality_setup()
    vector = apply_triality(quartets, left)
    t_l = left.as_lie_basis().structure_constants()
    t_v = vector.as_lie_basis().structure_constants()
    t_r = right.as_lie_basis().structure_constants()
    assert t_l == t_v
    assert t_l == t_r
    assert t_l.jacobi_holds()


def test_row_sign_convention_recorded():
    quartets = triality_setup()
    assert quartets.row_signs == ROW_SIGNS == (1, -1, -1, -1)


def test_full_suite(spin):
    report = verify_triality(spin)
    assert report.passed, [d for d, _ in report.witnesses if d.startswith("FAILED")]
