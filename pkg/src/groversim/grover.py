"""Quantum search driver: oracle bookkeeping, the four-step iteration,
traced runs, oscillation scans, and the classical random-guess baseline.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

import numpy as np

from .state import (
    DEFAULT_MAX_QUBITS,
    AmplitudeVector,
    basis_state,
    measure,
)
from .transforms import invert_phase_marked, invert_phase_zero, walsh_hadamard_fast

IterationSpec = Union[int, str]


@dataclass
class Oracle:
    """Membership test for the searched-for states.

    Give exactly one of `marked` (explicit index set) or `predicate`
    (opaque 0/1 function of the basis index). eval_count records how many
    times the oracle was queried through invert_phase_marked; direct
    is_marked calls are bookkeeping, not queries.
    """

    n: int
    marked: frozenset[int] | None = None
    predicate: Callable[[int], bool] | None = None
    eval_count: int = 0
    _indices: np.ndarray | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        if (self.marked is None) == (self.predicate is None):
            raise ValueError("give exactly one of marked or predicate")
        if self.marked is not None:
            size = 1 << self.n
            marked = frozenset(int(r) for r in self.marked)
            for r in sorted(marked):
                if not 0 <= r < size:
                    raise ValueError(f"marked index {r} out of range for n={self.n}")
            self.marked = marked

    def marked_indices(self) -> np.ndarray:
        """Sorted array of marked indices; a predicate is tabulated once."""
        if self._indices is None:
            if self.marked is not None:
                self._indices = np.array(sorted(self.marked), dtype=np.int64)
            else:
                hits = [r for r in range(1 << self.n) if self.predicate(r)]
                self._indices = np.array(hits, dtype=np.int64)
        return self._indices

    def is_marked(self, r: int) -> bool:
        if self.marked is not None:
            return r in self.marked
        return bool(self.predicate(r))

    @property
    def marked_count(self) -> int:
        return int(self.marked_indices().size)


@dataclass
class GroverConfig:
    """Inputs for one simulation run."""

    n: int
    oracle: Oracle
    iterations: IterationSpec = "auto"
    seed: int = 0
    trace_every_step: bool = False
    max_qubits: int = DEFAULT_MAX_QUBITS

    def __post_init__(self) -> None:
        if self.oracle.n != self.n:
            raise ValueError(f"oracle covers n={self.oracle.n} qubits, config says n={self.n}")
        if isinstance(self.iterations, str):
            if self.iterations != "auto":
                raise ValueError(f"iterations must be a count or 'auto', got {self.iterations!r}")
        elif self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")


@dataclass
class SimulationTrace:
    """Everything one run produced.

    steps holds (label, snapshot) pairs, labeled with lowercase roman
    numerals in execution order starting at "i" for the post-init state;
    it is empty unless the run traced every step. final_state is the
    pre-measurement vector.
    """

    n: int
    iterations: int
    seed: int
    steps: list[tuple[str, AmplitudeVector]]
    final_state: AmplitudeVector
    outcome: int
    oracle_evals: int
    degenerate: bool = False


_ROMAN = (
    (1000, "m"), (900, "cm"), (500, "d"), (400, "cd"), (100, "c"),
    (90, "xc"), (50, "l"), (40, "xl"), (10, "x"), (9, "ix"),
    (5, "v"), (4, "iv"), (1, "i"),
)


def roman_numeral(value: int) -> str:
    """Lowercase roman numeral used for trace step labels."""
    if value < 1:
        raise ValueError(f"roman numerals start at 1, got {value}")
    parts = []
    for base, digits in _ROMAN:
        while value >= base:
            parts.append(digits)
            value -= base
    return "".join(parts)


def _iteration_states(
    state: AmplitudeVector, oracle: Oracle
) -> tuple[AmplitudeVector, AmplitudeVector, AmplitudeVector, AmplitudeVector]:
    after_flip = invert_phase_marked(state, oracle)
    after_mix = walsh_hadamard_fast(after_flip)
    after_zero = invert_phase_zero(after_mix)
    return after_flip, after_mix, after_zero, walsh_hadamard_fast(after_zero)


def grover_iteration(state: AmplitudeVector, oracle: Oracle) -> AmplitudeVector:
    """One search iteration: flip marked, transform, flip zero, transform."""
    return _iteration_states(state, oracle)[-1]


def resolve_iterations(config: GroverConfig) -> tuple[int, bool]:
    """Concrete iteration count for a config, plus a degenerate flag.

    "auto" picks optimal_iterations. The flag is True when at least half
    the space is marked; the optimum then sits below one full iteration
    and amplification cannot help, but the count returned is still the
    best available.
    """
    if config.iterations == "auto":
        k = config.oracle.marked_count
        size = 1 << config.n
        if k == 0:
            raise ValueError("cannot auto-select iterations: oracle marks no states")
        return optimal_iterations(size, k), 2 * k >= size
    return int(config.iterations), False


def run_grover(config: GroverConfig) -> SimulationTrace:
    """Run the full search and measure once at the end.

    The state starts as the transform of basis state 0, runs the four-step
    iteration the resolved number of times, then measures with a fresh
    generator seeded from config.seed. With trace_every_step on, snapshots
    cover the initialized state and every step of every iteration.
    """
    iterations, degenerate = resolve_iterations(config)
    evals_before = config.oracle.eval_count
    state = walsh_hadamard_fast(basis_state(config.n, 0, config.max_qubits))
    recorded = [state]
    for _ in range(iterations):
        quad = _iteration_states(state, config.oracle)
        state = quad[-1]
        if config.trace_every_step:
            recorded.extend(quad)
    steps: list[tuple[str, AmplitudeVector]] = []
    if config.trace_every_step:
        steps = [(roman_numeral(i + 1), s.copy()) for i, s in enumerate(recorded)]
    outcome, _ = measure(state, np.random.default_rng(config.seed))
    return SimulationTrace(
        n=config.n,
        iterations=iterations,
        seed=config.seed,
        steps=steps,
        final_state=state,
        outcome=outcome,
        oracle_evals=config.oracle.eval_count - evals_before,
        degenerate=degenerate,
    )


def success_probability(state: AmplitudeVector, oracle: Oracle) -> float:
    """Total probability mass on the oracle's marked set."""
    idx = oracle.marked_indices()
    if idx.size == 0:
        return 0.0
    amps = state.amps[idx]
    return float(np.sum(amps.real**2 + amps.imag**2))


def optimal_iterations(size: int, marked_count: int = 1) -> int:
    """Iteration count maximizing success probability (ties pick fewer).

    The success curve is sin((2t + 1) * theta)**2 with
    theta = arcsin(sqrt(marked_count / size)), so the best integer t sits
    next to pi / (4 * theta) - 1/2; both neighbors are compared.
    """
    if size < 2:
        raise ValueError(f"size must be >= 2, got {size}")
    if not 1 <= marked_count < size:
        raise ValueError(f"marked_count must be in [1, {size - 1}], got {marked_count}")
    theta = math.asin(math.sqrt(marked_count / size))
    center = math.pi / (4.0 * theta) - 0.5
    lo = max(0, math.floor(center))
    hi = max(lo, math.ceil(center))

    def curve(t: int) -> float:
        return math.sin((2 * t + 1) * theta) ** 2

    return hi if curve(hi) > curve(lo) else lo


def scan_probabilities(config: GroverConfig, t_max: int) -> list[tuple[int, float]]:
    """Success probability after t iterations for every t in 0..t_max.

    Runs incrementally, so the whole series costs one length-t_max run.
    """
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    state = walsh_hadamard_fast(basis_state(config.n, 0, config.max_qubits))
    series = [(0, success_probability(state, config.oracle))]
    for t in range(1, t_max + 1):
        state = grover_iteration(state, config.oracle)
        series.append((t, success_probability(state, config.oracle)))
    return series


@dataclass(frozen=True)
class ClassicalResult:
    """Monte Carlo estimate next to the exact closed form."""

    empirical: float
    analytic: float


def classical_baseline(
    size: int,
    marked: Iterable[int],
    iterations: int,
    trials: int,
    seed: int = 0,
) -> ClassicalResult:
    """Success rate of classical random guessing against the same oracle.

    One trial draws `iterations` indices uniformly at random (with
    replacement) and succeeds if any of them is marked. The analytic value
    is 1 - (1 - |marked|/size)**iterations.
    """
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    if iterations < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    marked_set = frozenset(int(r) for r in marked)
    for r in sorted(marked_set):
        if not 0 <= r < size:
            raise ValueError(f"marked index {r} out of range for size {size}")
    analytic = 1.0 - (1.0 - len(marked_set) / size) ** iterations
    if iterations == 0 or not marked_set:
        return ClassicalResult(0.0, analytic)
    rng = np.random.default_rng(seed)
    lookup = np.zeros(size, dtype=bool)
    lookup[sorted(marked_set)] = True
    hits = 0
    remaining = trials
    block = max(1, (1 << 22) // iterations)
    while remaining:
        rows = min(block, remaining)
        draws = rng.integers(0, size, size=(rows, iterations))
        hits += int(lookup[draws].any(axis=1).sum())
        remaining -= rows
    return ClassicalResult(hits / trials, analytic)
