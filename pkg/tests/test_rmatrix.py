from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galoisazu.errors import ConstructionError, DimensionCap, NotEquivariant, NotInvertible
from galoisazu.exactfield import prime_field, rationals
from galoisazu.findimalg import quaternion_algebra, symbol_algebra
from galoisazu.galois import certify_galois, ground_extension, identity_morphism, trivial_extension
from galoisazu.groupaction import GroupSpec, quaternion_v_action, symbol_action
from galoisazu.linalg import Matrix
from galoisazu.rmatrix import (
    TensorElement,
    braid_representation,
    check_fs_equation,
    check_rep_morphism,
    check_yang_baxter,
    embed,
    left_mult_operator,
    quaternion_blocks,
)

Q = rationals()
F7 = prime_field(7)


def hamilton(a=-1, b=-1):
    H = quaternion_algebra(Q, a, b)
    return certify_galois(ground_extension(H), quaternion_v_action(H))


def symbol():
    S = symbol_algebra(F7, 3, 5, 2, 3)
    return certify_galois(ground_extension(S), symbol_action(S))


def trivial():
    return certify_galois(*trivial_extension(prime_field(5), GroupSpec.parse("Z2xZ3")))


@pytest.mark.parametrize("build", [hamilton, symbol, trivial])
def test_fs_and_yang_baxter_hold(build):
    cert = build()
    assert check_fs_equation(cert.algebra, cert.galois_element) == (True, True, True)
    assert check_yang_baxter(cert.algebra, cert.galois_element)


def test_non_solution_fails_equations():
    H = quaternion_algebra(Q, -1, -1)
    X = TensorElement.pure(H, H.basis_vector(1), H.basis_vector(2))  # i (x) j
    X = X + TensorElement.pure(H, H.unit, H.unit)
    assert not all(check_fs_equation(H, X))


def test_two_eta_squares_to_identity_on_hamilton():
    cert = hamilton()
    two_eta = [2 * c for c in cert.galois_element]
    L = left_mult_operator(cert.algebra, two_eta).matrix
    assert (L @ L).is_identity()


def test_eta_square_is_quarter_unit():
    cert = hamilton()
    H = cert.algebra
    X = TensorElement(H, 2, cert.galois_element)
    assert X * X == TensorElement.pure(H, H.unit, H.unit).scale(Q.coerce("1/4"))


def test_embed_unit_positions():
    H = quaternion_algebra(Q, -1, -1)
    one = TensorElement.pure(H, H.unit, H.unit)
    for slot in ("12", "23", "13"):
        assert embed(one, slot) == TensorElement.pure(H, H.unit, H.unit, H.unit)
    ij = TensorElement.pure(H, H.basis_vector(1), H.basis_vector(2))
    assert embed(ij, "13") == TensorElement.pure(H, H.basis_vector(1), H.unit, H.basis_vector(2))


def test_blocks_are_invariant_and_reassemble():
    blocks = quaternion_blocks(quaternion_algebra(Q, 2, 3))
    assert blocks.passed, blocks.checks


def test_blocks_hamilton_frozen_values():
    # computed blocks at a = b = -1, scaled by 4, frozen after the invariance checks above
    blocks = quaternion_blocks(quaternion_algebra(Q, -1, -1))
    one = [[1, -1, -1, -1], [-1, 1, -1, -1], [-1, -1, 1, -1], [-1, -1, -1, 1]]
    rest = [[1, 1, 1, -1], [1, 1, -1, 1], [1, -1, 1, 1], [-1, 1, 1, 1]]
    scaled = {u: [[4 * c for c in row] for row in M.to_dense()] for u, M in blocks.blocks.items()}
    assert scaled["1"] == one
    assert scaled["i"] == scaled["j"] == scaled["k"] == rest


def test_blocks_need_quaternion():
    with pytest.raises(ConstructionError):
        quaternion_blocks(symbol_algebra(F7, 3, 5, 2, 3))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_braid_representation_on_hamilton(n):
    cert = hamilton()
    rep = braid_representation(cert.algebra, cert.galois_element, n)
    assert rep.passed
    assert rep.generators[0].shape == (4 ** n, 4 ** n)


def test_braid_dimension_cap_and_singular_operator():
    cert = symbol()
    with pytest.raises(DimensionCap):
        braid_representation(cert.algebra, cert.galois_element, 3)
    t = trivial()
    assert not left_mult_operator(t.algebra, t.galois_element).invertible()
    with pytest.raises(NotInvertible):
        braid_representation(t.algebra, t.galois_element, 2)


def test_rep_morphism_identity():
    cert = hamilton()
    assert check_rep_morphism(cert, cert, identity_morphism(cert.algebra))


def test_rep_morphism_rejects_non_equivariant_map():
    cert = hamilton()
    swap = Matrix.from_dense(Q, [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]])
    with pytest.raises(NotEquivariant):
        check_rep_morphism(cert, cert, swap)


coef = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@settings(max_examples=20, deadline=None)
@given(coef, coef)
def test_operator_invertible_on_random_quaternion_parameters(a, b):
    if a == 0 or b == 0:
        return
    cert = hamilton(a, b)
    op = left_mult_operator(cert.algebra, cert.galois_element)
    assert op.invertible()
    assert check_yang_baxter(cert.algebra, cert.galois_element)


def test_printed_xi_tables_violate_involution():
    # l_(2 eta)^2 = id forces M^2 = 4 I on every 4x-scaled block; the printed tables at (2, 3) break it
    from fractions import Fraction

    a, b = Fraction(2), Fraction(3)
    ab = a * b
    printed = [
        [[1, a, b, -ab], [1 / a, 1, -1 / ab, 1 / b], [1 / b, -1 / ab, 1, 1 / a], [-1 / ab, 1 / b, 1 / a, 1]],
        [[1, 1, 1, -1 / ab], [1, 1, -1 / ab, 1], [-1 / b, -1 / ab, 1, -1 / a], [-1 / ab, -1 / b, -1 / a, 1]],
        [[1, 1, 1, -1], [1, 1, -1, 1 / ab], [1 / ab, 1 / a, 1, -1 / b], [1 / a, 1 / ab, -1 / b, 1]],
        [[1, 1, 1, -1], [1, 1, -1, 1], [-1 / a, 1 / b, 1, 1 / ab], [1 / b, -1 / a, 1 / ab, 1]],
    ]
    four = Matrix.identity(Q, 4).scale(Q.coerce(4))
    for rows in printed:
        M = Matrix.from_dense(Q, [[Q.coerce(str(c)) for c in row] for row in rows])
        assert M @ M != four
    for M in quaternion_blocks(quaternion_algebra(Q, 2, 3)).blocks.values():
        scaled = M.scale(Q.coerce(4))
        assert scaled @ scaled == four
