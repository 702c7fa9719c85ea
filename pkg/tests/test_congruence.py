import random
from fractions import Fraction

import pytest

from conftest import (
    float_rotation,
    random_nonsingular_tuple,
    rational_reflection,
    rational_rotation,
    rational_translation,
)
from oracles import naive_congruence_census
from rigidcensus.geometry import ConfigTuple, PointSet, lattice_point_set
from rigidcensus.congruence import (
    apply_isometry,
    canonical_form,
    congruence_census,
    congruent_exact,
    exact_congruence_key,
    moving_frame_coords,
    pin_to_origin,
)

RIGHT = ConfigTuple([(0, 0), (1, 0), (0, 1)])
SWAPPED = ConfigTuple([(0, 0), (0, 1), (1, 0)])


def test_pin_to_origin_examples():
    assert pin_to_origin(ConfigTuple([(5, 5), (6, 5), (5, 6)])) == ((1, 0), (0, 1))
    assert pin_to_origin(RIGHT) == ((1, 0), (0, 1))
    assert pin_to_origin(ConfigTuple([(3, 3), (3, 3), (3, 3)])) == ((0, 0), (0, 0))


def test_moving_frame_examples():
    a, cs = moving_frame_coords(ConfigTuple([(0, 0), (1, 0), (0, 1), (2, 3)]))
    assert a == ((1, 0), (0, 1))
    assert cs == ((2, 3),)
    a, cs = moving_frame_coords(SWAPPED)
    assert a == ((0, 1), (1, 0))
    assert cs == ()
    a, cs = moving_frame_coords(ConfigTuple([(0, 0), (2, 0), (0, 2), (2, 2)]))
    assert a == ((2, 0), (0, 2))
    assert cs == ((1, 1),)


def test_moving_frame_rejects_singular():
    with pytest.raises(ValueError):
        moving_frame_coords(ConfigTuple([(0, 0), (1, 0), (2, 0)]))


def test_canonical_form_examples():
    cf = canonical_form(RIGHT)
    assert cf.matrix == ((1.0, 0.0), (0.0, 1.0))
    assert cf.orientation == 1
    cf = canonical_form(SWAPPED)
    assert cf.matrix == ((1.0, 0.0), (0.0, 1.0))
    assert cf.orientation == -1


def test_canonical_form_upper_triangular_positive_diagonal():
    rng = random.Random(17)
    for _ in range(100):
        k = rng.choice([2, 3, 4])
        t = random_nonsingular_tuple(rng, k)
        cf = canonical_form(t)
        d = t.dim
        for i in range(d):
            assert cf.matrix[i][i] > 0
            for j in range(i):
                assert cf.matrix[i][j] == 0.0


def test_canonical_form_reconstructs_frame():
    # A = B C with B orthogonal: check B = A C^-1 is orthogonal to 1e-9
    rng = random.Random(23)
    for _ in range(50):
        t = random_nonsingular_tuple(rng, 3)
        a_rows, _ = moving_frame_coords(t)
        cf = canonical_form(t)
        d = t.dim
        a = [[float(a_rows[i][j]) for j in range(d)] for i in range(d)]
        c = [list(row) for row in cf.matrix]
        # solve B C = A for B: C upper triangular, so columns resolve left to right
        b = [[0.0] * d for _ in range(d)]
        for i in range(d):
            for j in range(d):
                s = a[i][j] - sum(b[i][l] * c[l][j] for l in range(j))
                b[i][j] = s / c[j][j]
        for i in range(d):
            for j in range(d):
                dot = sum(b[l][i] * b[l][j] for l in range(d))
                assert abs(dot - (1.0 if i == j else 0.0)) <= 1e-9


def test_canonical_form_invariance_under_float_isometries():
    rng = random.Random(29)
    trials = 0
    for _ in range(40):
        k = rng.choice([2, 3])
        t = random_nonsingular_tuple(rng, k)
        base = canonical_form(t, "O")
        for _ in range(25):
            rot = float_rotation(rng, 2)
            tau = [rng.uniform(-10, 10), rng.uniform(-10, 10)]
            image = apply_isometry(t, rot, tau)
            assert canonical_form(image, "O").matches(base, tol=1e-9)
            trials += 1
    assert trials == 1000


def test_canonical_form_invariance_under_exact_reflection_for_O():
    rng = random.Random(31)
    for _ in range(50):
        t = random_nonsingular_tuple(rng, 3)
        refl = rational_reflection(rng)
        image = apply_isometry(t, refl, rational_translation(rng))
        assert canonical_form(image, "O").matches(canonical_form(t, "O"), tol=1e-9)
        # orientation flips under a reflection
        assert canonical_form(image, "O").orientation == -canonical_form(t, "O").orientation


def test_congruent_exact_examples():
    translated = apply_isometry(RIGHT, [[1, 0], [0, 1]], [7, -3])
    assert congruent_exact(RIGHT, translated, "O")
    assert congruent_exact(RIGHT, translated, "SO")
    assert congruent_exact(RIGHT, SWAPPED, "O")
    assert not congruent_exact(RIGHT, SWAPPED, "SO")
    scaled = ConfigTuple([(0, 0), (2, 0), (0, 2)])
    assert not congruent_exact(RIGHT, scaled, "O")


def test_congruent_exact_requires_nonsingular():
    collinear = ConfigTuple([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(ValueError):
        congruent_exact(collinear, RIGHT, "O")


def test_congruent_exact_equivalence_relation():
    rng = random.Random(37)
    for _ in range(30):
        t = random_nonsingular_tuple(rng, 2)
        rot = rational_rotation(rng)
        u = apply_isometry(t, rot, rational_translation(rng))
        v = apply_isometry(u, rational_rotation(rng), rational_translation(rng))
        for group in ("O", "SO"):
            assert congruent_exact(t, t, group)  # reflexive
            assert congruent_exact(t, u, group) == congruent_exact(u, t, group)  # symmetric
            if congruent_exact(t, u, group) and congruent_exact(u, v, group):
                assert congruent_exact(t, v, group)  # transitive


def test_exact_key_orientation_flip():
    rng = random.Random(41)
    for _ in range(30):
        t = random_nonsingular_tuple(rng, 3)
        image = apply_isometry(t, rational_reflection(rng), rational_translation(rng))
        assert exact_congruence_key(t, "SO").orientation == -exact_congruence_key(image, "SO").orientation
        assert exact_congruence_key(t, "O") == exact_congruence_key(image, "O")


def test_canonical_form_completeness_against_exact_key():
    # congruent_exact <=> canonical forms match, over random pairs
    rng = random.Random(43)
    for _ in range(60):
        t1 = random_nonsingular_tuple(rng, 2, bound=6)
        if rng.random() < 0.5:
            matrix = rational_rotation(rng) if rng.random() < 0.5 else rational_reflection(rng)
            t2 = apply_isometry(t1, matrix, rational_translation(rng))
        else:
            t2 = random_nonsingular_tuple(rng, 2, bound=6)
        for group in ("O", "SO"):
            same_exact = congruent_exact(t1, t2, group)
            same_form = canonical_form(t1, group).matches(canonical_form(t2, group), tol=1e-9)
            assert same_exact == same_form


def test_congruence_census_triangle_corners(right_triangle):
    report = congruence_census(right_triangle, 2, "O")
    assert report.class_count == 3
    assert report.nonsingular_count == 6
    assert report.class_sizes == (2, 2, 2)
    report = congruence_census(right_triangle, 2, "SO")
    assert report.class_count == 6


def test_congruence_census_square(unit_square):
    report = congruence_census(unit_square, 2, "O")
    assert report.class_count == 3
    assert report.nonsingular_count == 24


def test_congruence_census_matches_naive_oracle():
    rng = random.Random(47)
    for trial in range(6):
        n = rng.randint(4, 7)
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-5, 5), rng.randint(-5, 5)))
        pts = sorted(pts)
        E = PointSet(pts)
        k = rng.choice([2, 3])
        group = rng.choice(["O", "SO"])
        report = congruence_census(E, k, group)
        nonsingular, classes = naive_congruence_census(pts, k, 2, group)
        assert report.nonsingular_count == nonsingular
        assert report.class_count == len(classes)
        assert report.class_sizes == tuple(sorted(classes.values(), reverse=True))


def test_congruence_census_group_bounds_and_cs():
    rng = random.Random(53)
    for trial in range(5):
        n = rng.randint(4, 8)
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-6, 6), rng.randint(-6, 6)))
        E = PointSet(sorted(pts))
        o_report = congruence_census(E, 2, "O")
        so_report = congruence_census(E, 2, "SO")
        assert o_report.class_count <= so_report.class_count <= 2 * o_report.class_count
        for report in (o_report, so_report):
            assert report.cs_lhs <= report.cs_rhs
            assert sum(report.class_sizes) == report.classified_count


def test_congruence_census_requires_k_at_least_d():
    with pytest.raises(ValueError):
        congruence_census(lattice_point_set(1), 1, "O")


def test_congruence_census_any_order_admits_reordered_tuples():
    # (0,1)-collinear start but a reordering is non-singular
    E = PointSet([(0, 0), (1, 0), (2, 0), (0, 1)])
    strict = congruence_census(E, 3, "O")
    loose = congruence_census(E, 3, "O", any_order=True)
    assert loose.classified_count > strict.classified_count
    assert loose.nonsingular_count == strict.nonsingular_count
    assert loose.class_count >= strict.class_count


def test_moving_frame_coefficients_isometry_invariant_exactly():
    rng = random.Random(59)
    for _ in range(20):
        t = random_nonsingular_tuple(rng, 4)
        image = apply_isometry(t, rational_rotation(rng), rational_translation(rng))
        _, cs = moving_frame_coords(t)
        _, cs_image = moving_frame_coords(image)
        assert cs == cs_image
