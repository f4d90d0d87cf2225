"""Problem instances, assignments, and objective evaluation.

Every solver in this package consumes an :class:`Instance` and produces an
:class:`Assignment` (one nominated author per paper) together with a
:class:`SolveReport`.  Objective values in reports are always recomputed
through the evaluators in this module, never copied out of solver internals.

Papers and authors are numbered starting at 1, matching the on-disk JSON
format.  All types are immutable after construction and all functions here
are pure, so instances and assignments can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping


class SolveStatus(str, Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    ERROR = "Error"


class InvalidInstanceError(ValueError):
    """Raised when a solver is handed an instance that fails validation."""


class InvalidAssignmentError(ValueError):
    """Raised when an assignment does not fit its instance."""


@dataclass(frozen=True)
class Instance:
    """A reviewer-nomination problem.

    Attributes:
        n: number of papers.
        m: number of authors.
        authorship: sorted tuple of incident ``(paper, author)`` pairs,
            1-based on both sides.  Pair ``(i, j)`` means author ``j`` is on
            paper ``i``.
        p: per-author irresponsibility probabilities, each in ``[0, 1]``.
            The closed interval is allowed: 0 and 1 are valid inputs.
        b: optional nomination limit (max papers nominating one author).
        lam: optional penalty weight for the soft-limit objective.
    """

    n: int
    m: int
    authorship: tuple[tuple[int, int], ...]
    p: tuple[float, ...]
    b: int | None = None
    lam: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "authorship", tuple(sorted((int(i), int(j)) for i, j in self.authorship))
        )
        object.__setattr__(self, "p", tuple(float(v) for v in self.p))

    @classmethod
    def from_rows(
        cls,
        papers: Iterable[Iterable[int]],
        p: Iterable[float],
        b: int | None = None,
        lam: float | None = None,
        m: int | None = None,
    ) -> "Instance":
        """Build an instance from per-paper author lists.

        ``m`` defaults to ``len(p)``.
        """
        rows = [tuple(row) for row in papers]
        p = tuple(p)
        pairs = [(i + 1, j) for i, row in enumerate(rows) for j in row]
        return cls(n=len(rows), m=len(p) if m is None else m, authorship=tuple(pairs), p=p, b=b, lam=lam)

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Authors of each paper, ascending; ``rows[i - 1]`` belongs to paper ``i``."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.authorship:
            if 1 <= i <= self.n:
                out[i - 1].append(j)
        return tuple(tuple(row) for row in out)

    @property
    def nnz(self) -> int:
        return len(self.authorship)


@dataclass(frozen=True)
class Assignment:
    """One nominated reviewer per paper; ``nominee[i - 1]`` is paper ``i``'s author."""

    nominee: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nominee", tuple(int(j) for j in self.nominee))


@dataclass(frozen=True)
class FractionalSolution:
    """A relaxed solution: weights on incident pairs, optional overload slacks.

    ``x`` maps incident ``(paper, author)`` pairs to values in ``[0, 1]``;
    pairs missing from the map are zero.  ``y`` (present only for soft-limit
    relaxations) holds one nonnegative overload value per author.
    """

    x: Mapping[tuple[int, int], float]
    y: tuple[float, ...] | None = None


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solver run.

    ``objective == expected_rejections + penalty`` whenever a solution is
    present; an Infeasible report carries no solution fields.  ``lp_bound``,
    ``rounded_objective`` and ``gap`` are filled by the relax-and-round
    pipeline, ``integral`` by the relaxation-only path.
    """

    status: SolveStatus
    objective: float | None = None
    expected_rejections: float | None = None
    penalty: float | None = None
    loads: tuple[int, ...] | None = None
    solver: str = ""
    seed: int | None = None
    lp_bound: float | None = None
    rounded_objective: float | None = None
    gap: float | None = None
    integral: bool | None = None


def validate(instance: Instance) -> list[str]:
    """Check every instance invariant; return a list of violations (empty = ok).

    Violations are data, not exceptions: each entry names the offending
    paper/author index.  Duplicate authorship pairs are reported rather than
    deduplicated, to surface data errors.
    """
    violations: list[str] = []
    if instance.n < 1:
        violations.append(f"n must be a positive integer, got {instance.n}")
    if instance.m < 1:
        violations.append(f"m must be a positive integer, got {instance.m}")
    seen: set[tuple[int, int]] = set()
    covered = [False] * max(instance.n, 0)
    for i, j in instance.authorship:
        if not (1 <= i <= instance.n) or not (1 <= j <= instance.m):
            violations.append(f"authorship pair ({i}, {j}) out of range")
            continue
        if (i, j) in seen:
            violations.append(f"duplicate authorship pair ({i}, {j})")
        seen.add((i, j))
        covered[i - 1] = True
    for i, ok in enumerate(covered, start=1):
        if not ok:
            violations.append(f"paper {i} has no authors")
    if len(instance.p) != instance.m:
        violations.append(f"p has length {len(instance.p)}, expected m={instance.m}")
    for j, pj in enumerate(instance.p, start=1):
        if not (0.0 <= pj <= 1.0):
            violations.append(f"p_{j} out of [0,1]: {pj}")
    if instance.b is not None and instance.b < 1:
        violations.append(f"b must be >= 1, got {instance.b}")
    if instance.lam is not None and not instance.lam > 0.0:
        violations.append(f"lambda must be > 0, got {instance.lam}")
    return violations


def require_valid(instance: Instance) -> None:
    violations = validate(instance)
    if violations:
        raise InvalidInstanceError("; ".join(violations))


def check_assignment(instance: Instance, assignment: Assignment) -> None:
    """Raise :class:`InvalidAssignmentError` unless every nominee is incident."""
    if len(assignment.nominee) != instance.n:
        raise InvalidAssignmentError(
            f"assignment has {len(assignment.nominee)} nominees, expected n={instance.n}"
        )
    incident = set(instance.authorship)
    for i, j in enumerate(assignment.nominee, start=1):
        if (i, j) not in incident:
            raise InvalidAssignmentError(f"paper {i} nominates non-author {j}")


def author_loads(instance: Instance, assignment: Assignment) -> list[int]:
    """Count how many papers nominate each author; ``loads[j - 1]`` is author ``j``'s."""
    check_assignment(instance, assignment)
    loads = [0] * instance.m
    for j in assignment.nominee:
        loads[j - 1] += 1
    return loads


def basic_objective(instance: Instance, assignment: Assignment) -> float:
    """Expected number of desk-rejected papers under the assignment.

    Summation runs in paper order, so equal inputs give bit-identical output.
    """
    check_assignment(instance, assignment)
    total = 0.0
    for j in assignment.nominee:
        total += instance.p[j - 1]
    return total


def soft_objective(
    instance: Instance,
    assignment: Assignment,
    b: int | None = None,
    lam: float | None = None,
) -> tuple[float, float, float]:
    """Soft-limit objective as ``(objective, expected_rejections, penalty)``.

    ``penalty`` charges ``lam`` per nomination beyond ``b`` on any single
    author.  ``b`` and ``lam`` default to the instance's own values and must
    be present one way or the other.
    """
    if b is None:
        b = instance.b
    if lam is None:
        lam = instance.lam
    if b is None or lam is None:
        raise ValueError("soft objective requires both b and lambda")
    expected = basic_objective(instance, assignment)
    loads = author_loads(instance, assignment)
    over = 0
    for load in loads:
        if load > b:
            over += load - b
    penalty = lam * over
    return expected + penalty, expected, penalty


def fractional_loads(instance: Instance, solution: FractionalSolution) -> list[float]:
    """Per-author total weight of a fractional solution."""
    loads = [0.0] * instance.m
    for (_, j), value in solution.x.items():
        loads[j - 1] += value
    return loads
