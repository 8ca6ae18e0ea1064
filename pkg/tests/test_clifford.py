from fractions import Fraction

import pytest

from sostar.clifford import (PAIRS, SIGN_FLIPS, check_sostar8_structure,
                             cl7_basis, cl26_basis, dictionary_matrix,
                             sostar8_generic,
                             standard_quaternionic_structure, theta_to_a,
                             verify_sostar8)
from sostar.hmatrix import CMatrix, is_sostar_algebra
from sostar import linalg
from sostar.scalars import ExactComplex, ExactScalar


def test_cl7_shapes_and_relations():
    basis = cl7_basis()
    assert len(basis.generators) == 7
    assert all(g.rows == g.cols == 8 for g in basis.generators)
    basis.validate()  # raises on any broken relation
    g = basis.generators
    ident = CMatrix.identity(8)
    assert (g[0] @ g[0]) == ident
    assert (g[1] @ g[2] + g[2] @ g[1]).is_zero()


def test_cl26_relations_and_signature():
    basis = cl26_basis()
    assert basis.metric == [1, 1, -1, -1, -1, -1, -1, -1]
    basis.validate()
    gam = basis.generators
    ident = CMatrix.identity(16)
    assert gam[0] @ gam[0] == ident
    assert (gam[3] @ gam[3] + ident).is_zero()
    assert (gam[0] @ gam[5] + gam[5] @ gam[0]).is_zero()


def test_spin_generator_count_and_blocks(spin):
    assert len(spin.S) == 28
    assert set(spin.S) == set(PAIRS)
    for m in spin.L.values():
        assert m.rows == m.cols == 8
    # block diagonality is enforced at construction; spot-check S_03 blocks
    s03 = spin.S[(0, 3)]
    assert all(s03.entries[r][c].is_zero() for r in range(8) for c in range(8, 16))


def test_sign_flips_applied(spin):
    """S_12 is the negative of Gamma_1 Gamma_2 / 2."""
    gam = cl26_basis().generators
    half = ExactComplex(ExactScalar(Fraction(1, 2)))
    raw = (gam[1] @ gam[2]).scale(half)
    assert (spin.S[(1, 2)] + raw).is_zero()
    assert (1, 2) in SIGN_FLIPS
    # an unflipped generator matches the raw product
    raw03 = (gam[0] @ gam[3]).scale(half)
    assert (spin.S[(0, 3)] - raw03).is_zero()


def test_quaternionic_structure_square():
    j = standard_quaternionic_structure()
    assert (j @ j.conj() + CMatrix.identity(8)).is_zero()


def test_structure_checks_both_reps(spin):
    for rep in ("L", "R"):
        report = check_sostar8_structure(rep, spin)
        assert report.passed
    with pytest.raises(ValueError):
        check_sostar8_structure("V", spin)


def test_generic_element_membership():
    probe = sostar8_generic([Fraction(k * k - 5, 3) for k in range(28)])
    assert probe.rows == probe.cols == 4
    assert is_sostar_algebra(probe)


def test_dictionary_spec_examples():
    zero = ExactScalar(0)
    one = ExactScalar(1)
    # plane (0,1) populates the four diagonal j-coefficients
    a = theta_to_a({(0, 1): 1})
    expected_nonzero = {1: one, 14: one, 23: one, 28: one}
    for idx in range(1, 29):
        assert a[idx - 1] == expected_nonzero.get(idx, zero)
    # plane (4,6) populates a_2 = 1 and a_24 = -1
    a = theta_to_a({(4, 6): 1})
    for idx in range(1, 29):
        if idx == 2:
            assert a[idx - 1] == one
        elif idx == 24:
            assert a[idx - 1] == -one
        else:
            assert a[idx - 1] == zero
    # zero in, zero out
    assert all(v.is_zero() for v in theta_to_a({}))


def test_dictionary_identity_every_plane(spin):
    for pair in PAIRS:
        lhs = sostar8_generic(theta_to_a({pair: 1})).embed()
        assert (lhs - spin.L[pair]).is_zero(), f"plane {pair}"


def test_dictionary_identity_linear_combination(spin):
    theta = {(0, 1): Fraction(2), (4, 6): Fraction(-1, 2), (2, 7): Fraction(1, 3)}
    lhs = sostar8_generic(theta_to_a(theta)).embed()
    acc = None
    for pair, coeff in theta.items():
        term = spin.L[pair].scale(ExactComplex(ExactScalar(coeff)))
        acc = term if acc is None else acc + term
    assert (lhs - acc).is_zero()


def test_dictionary_matrix_rank():
    rows = [[ExactScalar(v) for v in row] for row in dictionary_matrix()]
    assert linalg.rank(rows) == 28


def test_dictionary_rejects_bad_plane():
    with pytest.raises(ValueError):
        theta_to_a({(3, 3): 1})
    with pytest.raises(ValueError):
        theta_to_a({(5, 2): 1})


def test_generic_element_requires_28_parameters():
    with pytest.raises(ValueError):
        sostar8_generic([0] * 27)


def test_full_suite_passes(spin):
    report = verify_sostar8(spin)
    assert report.passed, [d for d, _ in report.witnesses if d.startswith("FAILED")]
