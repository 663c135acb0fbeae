from fractions import Fraction

import pytest

from rootfield.exact import Mat, QuadForm, enumerate_ball, enumerate_level_set, vec


def test_identity_is_neutral():
    m = Mat([[1, 2], [3, 4]])
    assert Mat.identity(2) @ m == m
    assert m @ Mat.identity(2) == m


def test_swap_matrix_is_an_involution():
    s = Mat([[0, 1], [1, 0]])
    assert (s @ s).is_identity()


def test_mat_mul_matches_field_multiplication():
    # multiplication operators on x^2 - x + 1: oracle is the field product
    #   (x + y*w)(u + v*w) with w^2 = w - 1
    def mult_matrix(x, y):
        return Mat([[x, -y], [y, x + y]])

    def field_mul(a, b):
        x, y = a
        u, v = b
        return (x * u - y * v, x * v + y * u + y * v)

    w = (0, 1)
    w2 = field_mul(w, w)
    prod = field_mul(w, w2)
    assert mult_matrix(*w) @ mult_matrix(*w2) == mult_matrix(*prod)
    # w has order 6, so w * w^5 = 1 and the matrices invert each other
    w5 = field_mul(w2, field_mul(w2, w))
    assert field_mul(w, w5) == (1, 0)
    assert (mult_matrix(*w) @ mult_matrix(*w5)).is_identity()


def test_mat_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        Mat([[1, 2]]) @ Mat([[1, 2]])


def test_mat_mul_associative_on_random_triples():
    import random

    rng = random.Random(7)
    for _ in range(50):
        ms = [
            Mat([[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)] for _ in range(3)])
            for _ in range(3)
        ]
        a, b, c = ms
        assert (a @ b) @ c == a @ (b @ c)


def test_solve_identity_and_inconsistent():
    i = Mat.identity(3)
    v = vec([1, Fraction(1, 2), -3])
    assert i.solve(v) == v
    zero = Mat([[0, 0], [0, 0]])
    assert zero.solve(vec([1, 0])) is None
    assert zero.solve(vec([0, 0])) == vec([0, 0])


def test_kernel_of_multiplication_minus_identity_is_trivial():
    # multiplication by w on x^2 - x + 1 fixes only 0
    m = Mat([[0, -1], [1, 1]]) - Mat.identity(2)
    assert m.kernel() == []


def test_kernel_basis_solves():
    m = Mat([[1, 2, 3], [2, 4, 6]])
    basis = m.kernel()
    assert len(basis) == 2
    for v in basis:
        assert m.apply(v) == vec([0, 0])


def test_inverse_round_trip():
    m = Mat([[1, 2], [3, Fraction(7, 2)]])
    assert (m @ m.inverse()).is_identity()
    with pytest.raises(ValueError):
        Mat([[1, 1], [1, 1]]).inverse()


def test_quadform_requires_symmetry():
    with pytest.raises(ValueError):
        QuadForm(Mat([[1, 1], [0, 1]]))


def test_positive_definiteness_by_minors():
    assert QuadForm(Mat([[2, 1], [1, 2]])).is_positive_definite()
    assert not QuadForm(Mat([[1, 2], [2, 1]])).is_positive_definite()
    assert not QuadForm(Mat([[0, 0], [0, 1]])).is_positive_definite()


EISENSTEIN_NORM = QuadForm(Mat([[1, Fraction(1, 2)], [Fraction(1, 2), 1]]))
GAUSSIAN_NORM = QuadForm(Mat([[1, 0], [0, 1]]))


def brute_force_level(form: QuadForm, level, box: int):
    out = []
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            if form.value(vec([x, y])) == level:
                out.append((x, y))
    return sorted(out)


def test_level_set_six_units():
    # x^2 + x*y + y^2 = 1 has six solutions
    assert len(enumerate_level_set(EISENSTEIN_NORM, 1)) == 6


def test_level_set_matches_brute_force():
    for level in (0, 1, 2, 3, 4, 7):
        got = enumerate_level_set(EISENSTEIN_NORM, level)
        assert got == brute_force_level(EISENSTEIN_NORM, level, box=2 * level + 2)


def test_level_two_is_empty():
    assert enumerate_level_set(EISENSTEIN_NORM, 2) == []


def test_level_set_four_units():
    # x^2 + y^2 = 1 has four solutions
    assert len(enumerate_level_set(GAUSSIAN_NORM, 1)) == 4


def test_level_set_symmetric_and_exact():
    for level in (1, 2, 4, 5):
        pts = enumerate_level_set(GAUSSIAN_NORM, level)
        assert set(pts) == {tuple(-c for c in p) for p in pts}
        for p in pts:
            assert GAUSSIAN_NORM.value(vec(p)) == level


def test_level_set_rejects_indefinite_form():
    with pytest.raises(ValueError):
        enumerate_level_set(QuadForm(Mat([[1, 0], [0, -1]])), 1)


def test_ball_matches_union_of_levels():
    ball = enumerate_ball(GAUSSIAN_NORM, 4)
    union = sorted(p for lvl in range(5) for p in enumerate_level_set(GAUSSIAN_NORM, lvl))
    assert ball == union


def test_level_set_rank_three_brute_force():
    form = QuadForm(Mat([[2, 0, 1], [0, 3, 0], [1, 0, 2]]))
    got = enumerate_level_set(form, 3)
    brute = sorted(
        (x, y, z)
        for x in range(-3, 4)
        for y in range(-3, 4)
        for z in range(-3, 4)
        if form.value(vec([x, y, z])) == 3
    )
    assert got == brute and brute != []
