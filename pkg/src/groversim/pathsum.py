"""Transition amplitudes by explicit path enumeration.

A program is a list of steps; a path assigns a basis state to every point
between steps, and its amplitude is the product of per-step transition
entries. Summing over all paths from a fixed start reproduces the dense
engine's amplitudes, but this module never calls that engine, so the two
can check each other.

Enumeration is depth-first with a running product, no memoization: this is
a reference oracle for small systems, not a simulator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .state import ResourceLimitError, apply_phase_flip, basis_state
from .transforms import invert_phase_zero, walsh_hadamard_fast, wh_sign

# A mixing step branches 2**n ways; refuse programs whose branch product
# exceeds this.
MAX_PATHS = 1 << 26

STEP_KINDS = ("wh", "flip_marked", "flip_zero")


@dataclass(frozen=True)
class StepOp:
    """One program step: "wh" mixes all states, the flips are diagonal."""

    kind: str
    marked: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.kind not in STEP_KINDS:
            raise ValueError(f"unknown step kind {self.kind!r}; expected one of {STEP_KINDS}")
        object.__setattr__(self, "marked", frozenset(int(r) for r in self.marked))
        if self.kind != "flip_marked" and self.marked:
            raise ValueError(f"{self.kind} carries no marked set")

    @staticmethod
    def wh() -> "StepOp":
        return StepOp("wh")

    @staticmethod
    def flip_marked(marked) -> "StepOp":
        """marked is an iterable of indices or an oracle-like object."""
        if hasattr(marked, "marked_indices"):
            marked = marked.marked_indices()
        return StepOp("flip_marked", frozenset(int(r) for r in marked))

    @staticmethod
    def flip_zero() -> "StepOp":
        return StepOp("flip_zero")


@dataclass(frozen=True)
class Path:
    """States visited (start first, then one per step) and the product of
    transition amplitudes along the way."""

    states: tuple[int, ...]
    amplitude: float


def grover_steps(marked, iterations: int) -> list[StepOp]:
    """Step list of the full search program: the initializing transform
    plus the four-step block repeated `iterations` times."""
    if iterations < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")
    steps = [StepOp.wh()]
    flip = StepOp.flip_marked(marked)
    for _ in range(iterations):
        steps.extend((flip, StepOp.wh(), StepOp.flip_zero(), StepOp.wh()))
    return steps


def _check_enumeration(
    n: int, steps: Sequence[StepOp], start: int, end: int | None
) -> int:
    if n < 1:
        raise ValueError(f"need at least one qubit, got n={n}")
    size = 1 << n
    if not 0 <= start < size:
        raise ValueError(f"start index {start} out of range for n={n}")
    if end is not None and not 0 <= end < size:
        raise ValueError(f"end index {end} out of range for n={n}")
    branches = 1
    for i, op in enumerate(steps):
        if op.kind == "flip_marked":
            for r in sorted(op.marked):
                if not 0 <= r < size:
                    raise ValueError(f"steps[{i}] marked index {r} out of range for n={n}")
        elif op.kind == "wh":
            branches *= size
            if branches > MAX_PATHS:
                raise ResourceLimitError(
                    f"path enumeration would exceed {MAX_PATHS} branches at steps[{i}]"
                )
    return size


def _flips(op: StepOp, state: int) -> bool:
    if op.kind == "flip_zero":
        return state == 0
    return state in op.marked


def path_amplitude(n: int, steps: Sequence[StepOp], start: int, end: int) -> float:
    """Sum of all path amplitudes from start to end, in depth-first order.

    The last step never branches: its contribution is the single entry
    into `end`. An empty program is the identity.
    """
    size = _check_enumeration(n, steps, start, end)
    if not steps:
        return 1.0 if start == end else 0.0
    inv_root = 1.0 / math.sqrt(size)
    last = len(steps) - 1

    def total_from(i: int, state: int, amp: float) -> float:
        op = steps[i]
        if i == last:
            if op.kind == "wh":
                return amp * wh_sign(end, state) * inv_root
            if state != end:
                return 0.0
            return -amp if _flips(op, state) else amp
        if op.kind == "wh":
            acc = 0.0
            for nxt in range(size):
                acc += total_from(i + 1, nxt, amp * wh_sign(nxt, state) * inv_root)
            return acc
        return total_from(i + 1, state, -amp if _flips(op, state) else amp)

    return total_from(0, start, 1.0)


def enumerate_paths(
    n: int, steps: Sequence[StepOp], start: int, end: int | None = None
) -> Iterator[Path]:
    """Yield every path from start through the program, one Path at a time.

    With `end` given, only paths finishing there are yielded; with end
    None, all of them. path_amplitude(n, steps, start, end) equals the sum
    of the amplitudes yielded here.
    """
    size = _check_enumeration(n, steps, start, end)
    inv_root = 1.0 / math.sqrt(size)
    chain: list[int] = [start]

    def walk(i: int, state: int, amp: float) -> Iterator[Path]:
        if i == len(steps):
            if end is None or state == end:
                yield Path(tuple(chain), amp)
            return
        op = steps[i]
        if op.kind == "wh":
            for nxt in range(size):
                chain.append(nxt)
                yield from walk(i + 1, nxt, amp * wh_sign(nxt, state) * inv_root)
                chain.pop()
        else:
            sign = -1.0 if _flips(op, state) else 1.0
            chain.append(state)
            yield from walk(i + 1, state, amp * sign)
            chain.pop()

    return walk(0, start, 1.0)


def verify_against_matrix(n: int, steps: Sequence[StepOp]) -> float:
    """Max absolute deviation between path sums and the dense engine.

    Runs the same program through both routes starting from basis state 0
    and compares the amplitude at every end state. Limited to n <= 4 and
    10 steps to keep the enumeration tractable.
    """
    if n > 4:
        raise ValueError(f"matrix cross-check is limited to n <= 4, got n={n}")
    if len(steps) > 10:
        raise ValueError(f"matrix cross-check is limited to 10 steps, got {len(steps)}")
    state = basis_state(n, 0)
    for op in steps:
        if op.kind == "wh":
            state = walsh_hadamard_fast(state)
        elif op.kind == "flip_zero":
            state = invert_phase_zero(state)
        else:
            state = apply_phase_flip(state, sorted(op.marked))
    worst = 0.0
    for end in range(state.size):
        worst = max(worst, abs(state.amps[end] - path_amplitude(n, steps, 0, end)))
    return float(worst)
