"""Sequential one-pass baselines, kept deliberately naive.

All four walk the papers in order and commit to a nominee immediately, which
is exactly why the hard-limit variants can paint themselves into a corner:
an early pick can exhaust the only author a later paper has, even on
instances a proper solver handles.  That failure mode is part of the
contract here; no repair or backtracking is added.

With ``seed=None`` every "pick one of" step takes the smallest author index;
with an integer seed it draws uniformly via ``random.Random(seed)`` (the
stdlib Mersenne Twister, stable across platforms), so fixtures reproduce.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .instance import Assignment, Instance, require_valid


@dataclass(frozen=True)
class BaselineResult:
    """Assignment plus a flag marking that some paper had no under-limit author.

    When ``err`` is true the assignment still satisfies the one-nominee-per-
    paper rule but exceeds the load limit for at least one author.
    """

    assignment: Assignment
    err: bool


def _chooser(seed: int | None) -> Callable[[list[int]], int]:
    if seed is None:
        return lambda candidates: candidates[0]
    rng = random.Random(seed)
    return lambda candidates: candidates[rng.randrange(len(candidates))]


def _hard_limit(instance: Instance, b: int | None) -> int:
    if b is None:
        b = instance.b
    if b is None or b < 1:
        raise ValueError(f"baseline requires a nomination limit b >= 1, got {b}")
    return b


def rand_assign_hard(
    instance: Instance, b: int | None = None, seed: int | None = None
) -> BaselineResult:
    """Pick uniformly among each paper's under-limit authors.

    When no incident author is under the limit, picks among all of them and
    raises the error flag.
    """
    require_valid(instance)
    b = _hard_limit(instance, b)
    choose = _chooser(seed)
    loads = [0] * instance.m
    nominee: list[int] = []
    err = False
    for row in instance.rows:
        under = [j for j in row if loads[j - 1] + 1 <= b]
        if under:
            k = choose(under)
        else:
            k = choose(list(row))
            err = True
        nominee.append(k)
        loads[k - 1] += 1
    return BaselineResult(assignment=Assignment(nominee=tuple(nominee)), err=err)


def greedy_assign_hard(
    instance: Instance, b: int | None = None, seed: int | None = None
) -> BaselineResult:
    """Pick a least-irresponsible under-limit author per paper, in paper order."""
    require_valid(instance)
    b = _hard_limit(instance, b)
    choose = _chooser(seed)
    p = instance.p
    loads = [0] * instance.m
    nominee: list[int] = []
    err = False
    for row in instance.rows:
        under = [j for j in row if loads[j - 1] + 1 <= b]
        if under:
            low = min(p[j - 1] for j in under)
            k = choose([j for j in under if p[j - 1] == low])
        else:
            k = choose(list(row))
            err = True
        nominee.append(k)
        loads[k - 1] += 1
    return BaselineResult(assignment=Assignment(nominee=tuple(nominee)), err=err)


def rand_assign_soft(
    instance: Instance, b: int | None = None, seed: int | None = None
) -> Assignment:
    """Like :func:`rand_assign_hard` but over-limit picks are simply allowed.

    Always returns a valid assignment; overloads show up in the penalty term
    of the objective instead of an error flag.
    """
    require_valid(instance)
    b = _hard_limit(instance, b)
    choose = _chooser(seed)
    loads = [0] * instance.m
    nominee: list[int] = []
    for row in instance.rows:
        under = [j for j in row if loads[j - 1] + 1 <= b]
        k = choose(under) if under else choose(list(row))
        nominee.append(k)
        loads[k - 1] += 1
    return Assignment(nominee=tuple(nominee))


def greedy_assign_soft(
    instance: Instance,
    b: int | None = None,
    lam: float | None = None,
    seed: int | None = None,
) -> Assignment:
    """Pick the author with the smallest marginal cost per paper.

    The marginal cost of giving paper ``i`` to author ``j`` is
    ``p_j + lam * max(0, load_j + 1 - b)``: the nomination risk plus the
    penalty increase if the pick pushes the author past the limit.
    """
    require_valid(instance)
    b = _hard_limit(instance, b)
    if lam is None:
        lam = instance.lam
    if lam is None or not lam > 0.0:
        raise ValueError(f"soft greedy baseline requires lambda > 0, got {lam}")
    choose = _chooser(seed)
    p = instance.p
    loads = [0] * instance.m
    nominee: list[int] = []
    for row in instance.rows:
        costs = [p[j - 1] + lam * max(0, loads[j - 1] + 1 - b) for j in row]
        low = min(costs)
        k = choose([j for j, cost in zip(row, costs) if cost == low])
        nominee.append(k)
        loads[k - 1] += 1
    return Assignment(nominee=tuple(nominee))
