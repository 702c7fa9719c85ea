"""Shared fixtures and exact-isometry helpers for the test suite."""

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rigidcensus.geometry import ConfigTuple, Point, PointSet


@pytest.fixture
def unit_square() -> PointSet:
    return PointSet([(0, 0), (0, 1), (1, 0), (1, 1)])


@pytest.fixture
def right_triangle() -> PointSet:
    return PointSet([(0, 0), (1, 0), (0, 1)])


def rational_rotation(rng: random.Random):
    """A random exact rotation matrix from a Pythagorean parameterization."""
    while True:
        m = rng.randint(1, 60)
        n = rng.randint(1, 60)
        if m != n:
            break
    h = Fraction(m * m + n * n)
    c = Fraction(m * m - n * n) / h
    s = Fraction(2 * m * n) / h
    return [[c, -s], [s, c]]


def rational_reflection(rng: random.Random):
    """An exact reflection: a rotation composed with the x-axis flip."""
    rot = rational_rotation(rng)
    return [[rot[0][0], rot[0][1]], [-rot[1][0], -rot[1][1]]]


def rational_translation(rng: random.Random, d: int = 2):
    return [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(d)]


def _float_det(mat):
    size = len(mat)
    if size == 1:
        return mat[0][0]
    total = 0.0
    for col in range(size):
        minor = [row[:col] + row[col + 1 :] for row in mat[1:]]
        term = mat[0][col] * _float_det(minor)
        total += term if col % 2 == 0 else -term
    return total


def float_rotation(rng: random.Random, d: int):
    """Haar-ish random rotation via Gram-Schmidt on a random Gaussian matrix."""
    import math

    while True:
        cols = [[rng.gauss(0, 1) for _ in range(d)] for _ in range(d)]
        q = []
        ok = True
        for col in cols:
            v = list(col)
            for u in q:
                c = sum(a * b for a, b in zip(u, v))
                v = [a - c * b for a, b in zip(v, u)]
            norm = math.sqrt(sum(a * a for a in v))
            if norm < 1e-8:
                ok = False
                break
            q.append([a / norm for a in v])
        if ok:
            break
    matrix = [[q[j][i] for j in range(d)] for i in range(d)]  # columns are q
    if _float_det(matrix) < 0:
        for i in range(d):
            matrix[i][d - 1] = -matrix[i][d - 1]
    return matrix


def random_nonsingular_tuple(rng: random.Random, k: int, d: int = 2, bound: int = 50) -> ConfigTuple:
    """Random integer tuple whose first d+1 points are affinely independent."""
    from rigidcensus.geometry import is_nonsingular

    while True:
        t = ConfigTuple(
            Point(tuple(rng.randint(-bound, bound) for _ in range(d)))
            for _ in range(k + 1)
        )
        if is_nonsingular(t):
            return t
