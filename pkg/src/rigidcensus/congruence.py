"""Congruence of labeled point tuples: moving frames, canonical forms, and
exact censuses.

The construction pins the tuple at its first point, reads the next d pinned
differences as an invertible frame matrix A, expresses the remaining
differences in that frame (coefficients invariant under orthogonal maps),
and factors A = B C with B orthogonal and C upper triangular with positive
diagonal. (C, coefficients) classifies tuples up to translation and O(d);
the sign of det A refines the class under SO(d).

Counting never touches the float canonical form: censuses key on the exact
labeled squared-distance vector (plus the exact orientation sign for SO),
which characterizes congruence for labeled tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels, linalg
from ._kernels_pure import normalize_value
from .geometry import (
    ConfigTuple,
    Point,
    PointSet,
    as_rational,
    difference,
    is_nonsingular,
    squared_distance,
)

__all__ = [
    "CanonicalForm",
    "ExactCongruenceKey",
    "CongruenceCensusReport",
    "pin_to_origin",
    "moving_frame_coords",
    "canonical_form",
    "exact_congruence_key",
    "congruent_exact",
    "apply_isometry",
    "congruence_census",
]


def _check_group(group: str) -> str:
    if group not in ("O", "SO"):
        raise ValueError("group must be 'O' or 'SO'")
    return group


@dataclass(frozen=True)
class CanonicalForm:
    """Float congruence-class representative: upper-triangular frame factor,
    frame coefficients of the trailing points, and the orientation sign."""

    matrix: tuple  # d x d rows, upper triangular, positive diagonal
    frame_coeffs: tuple  # k - d coefficient vectors
    orientation: int  # sign of det A; informational when group is "O"
    group: str

    def matches(self, other: "CanonicalForm", tol: float = 1e-9) -> bool:
        """Equality up to tolerance; orientation must agree under SO only."""
        if self.group != other.group:
            raise ValueError("cannot compare canonical forms for different groups")
        if len(self.matrix) != len(other.matrix) or len(self.frame_coeffs) != len(
            other.frame_coeffs
        ):
            return False
        if self.group == "SO" and self.orientation != other.orientation:
            return False
        for ra, rb in zip(self.matrix, other.matrix):
            for a, b in zip(ra, rb):
                if abs(a - b) > tol * max(1.0, abs(a), abs(b)):
                    return False
        for va, vb in zip(self.frame_coeffs, other.frame_coeffs):
            for a, b in zip(va, vb):
                if abs(a - b) > tol * max(1.0, abs(a), abs(b)):
                    return False
        return True


@dataclass(frozen=True)
class ExactCongruenceKey:
    """Exact congruence invariant of a labeled non-singular tuple: all pairwise
    squared distances in lexicographic edge order, plus the orientation sign
    when the group is SO."""

    distances: tuple
    orientation: Optional[int]


def pin_to_origin(t: ConfigTuple) -> tuple:
    """Differences v_j - v_0 for j = 1..k, exactly."""
    base = t.points[0]
    return tuple(difference(p, base) for p in t.points[1:])


def _frame_matrix(t: ConfigTuple):
    """(A, pinned) where A's columns are the first d pinned differences."""
    d = t.dim
    if not is_nonsingular(t):
        raise ValueError("tuple is singular: first d+1 points are affinely dependent")
    pinned = pin_to_origin(t)
    rows = tuple(tuple(pinned[j][i] for j in range(d)) for i in range(d))
    return rows, pinned


def moving_frame_coords(t: ConfigTuple):
    """Exact frame data (A, coefficients): A's columns are the first d pinned
    differences and A c_j = u_j for each remaining difference u_j."""
    rows, pinned = _frame_matrix(t)
    coeffs = tuple(
        tuple(linalg.solve_exact(rows, pinned[j])) for j in range(t.dim, len(pinned))
    )
    return rows, coeffs


def canonical_form(t: ConfigTuple, group: str = "O") -> CanonicalForm:
    """Canonical congruence-class representative of a non-singular tuple."""
    _check_group(group)
    rows, coeffs = moving_frame_coords(t)
    d = t.dim
    columns = [[float(rows[i][j]) for i in range(d)] for j in range(d)]
    _, r = linalg.qr_positive_diagonal(columns)
    det = linalg.exact_det(rows)
    return CanonicalForm(
        matrix=tuple(tuple(row) for row in r),
        frame_coeffs=tuple(tuple(float(c) for c in v) for v in coeffs),
        orientation=1 if det > 0 else -1,
        group=group,
    )


def exact_congruence_key(t: ConfigTuple, group: str = "O") -> ExactCongruenceKey:
    """Exact class key; raises on singular tuples."""
    _check_group(group)
    k1 = len(t.points)
    if group == "SO":
        rows, _ = _frame_matrix(t)
        sign = 1 if linalg.exact_det(rows) > 0 else -1
    else:
        if not is_nonsingular(t):
            raise ValueError("tuple is singular: first d+1 points are affinely dependent")
        sign = None
    distances = tuple(
        normalize_value(squared_distance(t.points[i], t.points[j]))
        for i in range(k1)
        for j in range(i + 1, k1)
    )
    return ExactCongruenceKey(distances, sign)


def congruent_exact(t1: ConfigTuple, t2: ConfigTuple, group: str = "O") -> bool:
    """Exact congruence test for labeled non-singular tuples.

    Under O(d) plus translations, congruence is equivalent to equality of all
    labeled pairwise distances; under SO the orientation signs must agree too.
    """
    _check_group(group)
    if t1.dim != t2.dim or len(t1.points) != len(t2.points):
        raise ValueError("tuples must share dimension and length")
    return exact_congruence_key(t1, group) == exact_congruence_key(t2, group)


def apply_isometry(t: ConfigTuple, matrix: Sequence[Sequence], translation: Sequence) -> ConfigTuple:
    """Apply x -> M x + tau to every point. Rational inputs stay exact; float
    inputs are captured exactly as binary rationals."""
    d = t.dim
    m = [[as_rational(matrix[i][j]) for j in range(d)] for i in range(d)]
    tau = [as_rational(v) for v in translation]
    points = []
    for p in t.points:
        coords = [
            sum((m[i][j] * p.coords[j] for j in range(d)), tau[i]) for i in range(d)
        ]
        points.append(Point(coords))
    return ConfigTuple(points)


@dataclass(frozen=True)
class CongruenceCensusReport:
    """Census of congruence classes of non-singular (k+1)-tuples from a set."""

    group: str
    dim: int
    k: int
    n: int
    nonsingular_count: int
    classified_count: int
    class_sizes: tuple
    any_order: bool

    @property
    def class_count(self) -> int:
        return len(self.class_sizes)

    @property
    def sum_lambda_sq(self) -> int:
        return sum(s * s for s in self.class_sizes)

    @property
    def cs_lhs(self) -> int:
        """Squared number of classified tuples (Cauchy-Schwarz left side)."""
        return self.classified_count**2

    @property
    def cs_rhs(self) -> int:
        """class count times the sum of squared class sizes."""
        return self.class_count * self.sum_lambda_sq

    @property
    def class_size_histogram(self) -> dict:
        hist: dict[int, int] = {}
        for s in self.class_sizes:
            hist[s] = hist.get(s, 0) + 1
        return dict(sorted(hist.items()))

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "d": self.dim,
            "k": self.k,
            "n": self.n,
            "nonsingular_count": self.nonsingular_count,
            "classified_count": self.classified_count,
            "class_count": self.class_count,
            "class_size_histogram": {
                str(size): num for size, num in self.class_size_histogram.items()
            },
            "sum_lambda_sq": self.sum_lambda_sq,
            "cs_inequality_lhs": self.cs_lhs,
            "cs_inequality_rhs": self.cs_rhs,
            "cs_inequality_holds": self.cs_lhs <= self.cs_rhs,
            "any_order": self.any_order,
        }


def congruence_census(
    E: PointSet,
    k: int,
    group: str = "O",
    any_order: bool = False,
    budget=None,
    threads: int = 1,
    backend=None,
) -> CongruenceCensusReport:
    """Enumerate E^(k+1), keep non-singular tuples, and group them by exact
    congruence key; class sizes are reported largest first.

    With any_order, tuples that are singular as ordered but have some
    reordering with an affinely independent leading d+1 are classified under
    the first such permutation (off by default).
    """
    _check_group(group)
    d = E.dim
    if k < d:
        raise ValueError(f"congruence census needs k >= d (got k={k}, d={d})")
    strict, classified, counts = kernels.congruence_counts(
        E, k, group=group, any_order=any_order, budget=budget, threads=threads,
        backend=backend,
    )
    sizes = tuple(sorted(counts.values(), reverse=True))
    return CongruenceCensusReport(
        group=group,
        dim=d,
        k=k,
        n=len(E),
        nonsingular_count=strict,
        classified_count=classified,
        class_sizes=sizes,
        any_order=any_order,
    )
