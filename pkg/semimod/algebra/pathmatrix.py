"""
Lattice paths below the diagonal and their two-row matrices.

A class of <alpha, beta>-semimodules corresponds to a lattice path from
(0, alpha) to (beta, 0) staying weakly below the line alpha*x + beta*y =
alpha*beta. The path is encoded by the run lengths of its Down steps (top
row, summing to alpha) and its Right steps (bottom row, summing to beta).
Every cyclic rotation of the columns gives the same class, and exactly one
rotation is the matrix of a path below the diagonal.
"""

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from semimod.exceptions import (
    InvalidMatrixError,
    InvalidPathError,
    InvalidSemigroupError,
    NonCanonicalLeanSetError,
    RotationUniquenessError,
)

from .semigroup import GapCoord, NumericalSemigroup, decode
from .semimodule import LeanSet


class Step(str, Enum):
    DOWN = "D"
    RIGHT = "R"


@dataclass(frozen=True)
class LatticePath:
    """Staircase path from (0, alpha) to (beta, 0)."""

    gamma: NumericalSemigroup
    steps: Tuple[Step, ...]

    def __post_init__(self):
        steps = tuple(Step(step) for step in self.steps)
        object.__setattr__(self, "steps", steps)

        downs = sum(1 for step in steps if step is Step.DOWN)
        rights = len(steps) - downs
        if downs != self.gamma.alpha or rights != self.gamma.beta:
            raise InvalidPathError(
                f"A path for {self.gamma} needs {self.gamma.alpha} Down and "
                f"{self.gamma.beta} Right steps, got {downs} and {rights}"
            )
        for x, y in self.vertices():
            if self.gamma.alpha * x + self.gamma.beta * y > self.gamma.product:
                raise InvalidPathError(
                    f"Vertex ({x},{y}) lies above the diagonal of {self.gamma}"
                )

    @classmethod
    def from_string(cls, gamma: NumericalSemigroup, word: str) -> "LatticePath":
        try:
            return cls(gamma, tuple(Step(letter) for letter in word.upper()))
        except ValueError as e:
            raise InvalidPathError(f"'{word}' is not a word over D and R") from e

    def vertices(self) -> List[Tuple[int, int]]:
        x, y = 0, self.gamma.alpha
        points = [(x, y)]
        for step in self.steps:
            if step is Step.DOWN:
                y -= 1
            else:
                x += 1
            points.append((x, y))
        return points

    def _corners(self, first: Step, second: Step) -> List[Tuple[int, int]]:
        points = self.vertices()
        return [
            points[k + 1]
            for k in range(len(self.steps) - 1)
            if self.steps[k] is first and self.steps[k + 1] is second
        ]

    def turning_points(self) -> List[Tuple[int, int]]:
        """
        Corners where a Right step is followed by a Down step, in path order.
        Their coordinates (x, y) are the gap coordinates (a, b) of the lean set.
        """
        return self._corners(Step.RIGHT, Step.DOWN)

    def syzygy_points(self) -> List[Tuple[int, int]]:
        """
        Corners where a Down step is followed by a Right step, in path order.
        alpha*beta - x*alpha - y*beta over these corners gives the syzygy
        generators.
        """
        return self._corners(Step.DOWN, Step.RIGHT)

    def to_matrix(self) -> "PathMatrix":
        return _runs(self.steps)

    def __str__(self) -> str:
        return "".join(step.value for step in self.steps)


@dataclass(frozen=True)
class PathMatrix:
    """
    Two-row matrix of positive integers; column k is the k-th Down run
    followed by the k-th Right run.
    """

    top: Tuple[int, ...]
    bottom: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if not self.top or len(self.top) != len(self.bottom):
            raise InvalidMatrixError(
                f"Rows must be nonempty and of equal length, got {self.top} and "
                f"{self.bottom}"
            )
        if any(
            not isinstance(entry, int) or entry < 1 for entry in self.top + self.bottom
        ):
            raise InvalidMatrixError(
                f"Matrix entries must be positive integers, got {self.top} and "
                f"{self.bottom}"
            )

    @property
    def columns(self) -> int:
        return len(self.top)

    @property
    def alpha(self) -> int:
        return sum(self.top)

    @property
    def beta(self) -> int:
        return sum(self.bottom)

    @property
    def semigroup(self) -> NumericalSemigroup:
        try:
            return NumericalSemigroup(self.alpha, self.beta)
        except InvalidSemigroupError as e:
            raise InvalidMatrixError(
                f"Row sums of {self} do not define a semigroup: {e.reason}"
            ) from e

    def rotate(self, k: int) -> "PathMatrix":
        """Cyclic left rotation of the columns by k."""
        k %= self.columns
        return PathMatrix(
            self.top[k:] + self.top[:k], self.bottom[k:] + self.bottom[:k]
        )

    def as_lists(self) -> List[List[int]]:
        return [list(self.top), list(self.bottom)]

    def __str__(self) -> str:
        def row(values):
            return "(" + ",".join(str(value) for value in values) + ")"

        return f"({row(self.top)},{row(self.bottom)})"


def _lean_from_corners(
    gamma: NumericalSemigroup, corners: List[Tuple[int, int]]
) -> LeanSet:
    # path order is increasing in a, lean sets are decreasing in a
    coords = tuple(GapCoord(x, y) for x, y in reversed(corners))
    return LeanSet(
        gamma, (0,) + tuple(decode(gamma, coord) for coord in coords), coords
    )


def _decode_rotation(gamma: NumericalSemigroup, m: PathMatrix) -> Optional[LeanSet]:
    """Lean set of `m` read as it stands, or None if its path crosses the diagonal."""
    x, y = 0, gamma.alpha
    corners = []
    for k, (down, right) in enumerate(zip(m.top, m.bottom)):
        y -= down
        x += right
        if k < m.columns - 1:
            if gamma.alpha * x + gamma.beta * y >= gamma.product:
                return None
            corners.append((x, y))
    return _lean_from_corners(gamma, corners)


def lean_to_matrix(lean: LeanSet) -> PathMatrix:
    """
    top = (alpha - b_n, b_n - b_{n-1}, ..., b_2 - b_1, b_1) and
    bottom = (a_n, a_{n-1} - a_n, ..., a_1 - a_2, beta - a_1).
    """
    if not isinstance(lean, LeanSet):
        raise NonCanonicalLeanSetError(
            f"Expected a canonical LeanSet, got {type(lean).__name__}"
        )
    alpha, beta = lean.gamma.alpha, lean.gamma.beta
    if lean.n == 0:
        return PathMatrix((alpha,), (beta,))

    a = list(reversed(lean.a_values))
    b = list(reversed(lean.b_values))
    top = [alpha - b[0]] + [b[k] - b[k + 1] for k in range(lean.n - 1)] + [b[-1]]
    bottom = [a[0]] + [a[k + 1] - a[k] for k in range(lean.n - 1)] + [beta - a[-1]]
    return PathMatrix(tuple(top), tuple(bottom))


def matrix_to_lean(m: PathMatrix) -> Tuple[LeanSet, int]:
    """
    Decode a matrix up to rotation.

    Returns:
        (lean set, k) where `m.rotate(k)` is the rotation below the diagonal.

    Raises:
        RotationUniquenessError: if not exactly one rotation decodes.
    """
    gamma = m.semigroup
    decoded = []
    for k in range(m.columns):
        lean = _decode_rotation(gamma, m.rotate(k))
        if lean is not None:
            decoded.append((lean, k))
    if len(decoded) != 1:
        raise RotationUniquenessError(m.top, m.bottom, [k for _, k in decoded])
    return decoded[0]


def canonical_matrix(m: PathMatrix) -> PathMatrix:
    """The rotation of `m` whose path stays below the diagonal."""
    _, k = matrix_to_lean(m)
    return m.rotate(k)


def matrix_equiv(m1: PathMatrix, m2: PathMatrix) -> bool:
    if m1.columns != m2.columns:
        return False
    n = m1.columns
    doubled = tuple(zip(m1.top, m1.bottom)) * 2
    target = tuple(zip(m2.top, m2.bottom))
    return any(doubled[k : k + n] == target for k in range(n))


def matrix_to_path(m: PathMatrix) -> LatticePath:
    m = canonical_matrix(m)
    steps = []
    for down, right in zip(m.top, m.bottom):
        steps.extend([Step.DOWN] * down + [Step.RIGHT] * right)
    return LatticePath(m.semigroup, tuple(steps))


def lean_to_path(lean: LeanSet) -> LatticePath:
    return matrix_to_path(lean_to_matrix(lean))


def path_to_lean(path: LatticePath) -> LeanSet:
    return _lean_from_corners(path.gamma, path.turning_points())


def _below_diagonal_runs(gamma: NumericalSemigroup) -> Iterator[PathMatrix]:
    """
    Depth-first search over step words, Down before Right, keeping every
    vertex on or below the diagonal.
    """
    alpha, beta, product = gamma.alpha, gamma.beta, gamma.product
    steps: List[Step] = []

    # yields once per complete path; the path itself is the shared `steps`
    def walk(x: int, y: int) -> Iterator[None]:
        if x == beta and y == 0:
            yield None
            return
        if y > 0:
            steps.append(Step.DOWN)
            yield from walk(x, y - 1)
            steps.pop()
        if x < beta and alpha * (x + 1) + beta * y <= product:
            steps.append(Step.RIGHT)
            yield from walk(x + 1, y)
            steps.pop()

    for _ in walk(0, alpha):
        yield _runs(steps)


def _runs(steps: Sequence[Step]) -> PathMatrix:
    top, bottom = [], []
    previous = None
    for step in steps:
        row = top if step is Step.DOWN else bottom
        if step is not previous:
            row.append(0)
        row[-1] += 1
        previous = step
    return PathMatrix(tuple(top), tuple(bottom))


def enumerate_matrices(gamma: NumericalSemigroup) -> Iterator[PathMatrix]:
    """Matrices of all paths below the diagonal, in lexicographic step order."""
    yield from _below_diagonal_runs(gamma)


def enumerate_classes(gamma: NumericalSemigroup) -> Iterator[LeanSet]:
    """Every isomorphism class of <alpha, beta>-semimodules, exactly once."""
    for m in enumerate_matrices(gamma):
        yield _decode_rotation(gamma, m)


def rational_catalan(gamma: NumericalSemigroup) -> int:
    """Number of classes, C(alpha + beta, alpha) / (alpha + beta)."""
    return comb(gamma.alpha + gamma.beta, gamma.alpha) // (gamma.alpha + gamma.beta)
