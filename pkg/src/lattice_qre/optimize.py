"""Deterministic bounded derivative-free minimization.

Coarse grid scan over the box (respecting per-dimension linear or log
scaling), followed by refinement: golden-section for one dimension,
Nelder-Mead with the classical coefficients otherwise.  Constraint
violations and non-finite objective values are treated as +inf, so the
simplex contracts back into the feasible region.  No randomness anywhere:
two runs with the same configuration are bit-identical.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class NoFeasiblePointError(RuntimeError):
    """The coarse grid contained no point satisfying the constraint."""


@dataclass(frozen=True)
class Dimension:
    lower: float
    upper: float
    scale: str = "linear"  # or "log"

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError(f"need lower < upper, got [{self.lower}, {self.upper}]")
        if self.scale not in ("linear", "log"):
            raise ValueError(f"unknown scale {self.scale!r}")
        if self.scale == "log" and self.lower <= 0:
            raise ValueError("log scale needs positive bounds")

    def grid(self, n: int) -> list[float]:
        if n == 1:
            return [0.5 * (self.lower + self.upper)]
        if self.scale == "log":
            la, lb = math.log(self.lower), math.log(self.upper)
            return [math.exp(la + (lb - la) * i / (n - 1)) for i in range(n)]
        return [self.lower + (self.upper - self.lower) * i / (n - 1) for i in range(n)]

    def encode(self, x: float) -> float:
        return math.log(x) if self.scale == "log" else x

    def decode(self, u: float) -> float:
        x = math.exp(u) if self.scale == "log" else u
        return min(max(x, self.lower), self.upper)


@dataclass(frozen=True)
class SearchSpace:
    dimensions: Sequence[Dimension]
    constraint: Callable[[Sequence[float]], bool] | None = None

    def feasible(self, point) -> bool:
        return self.constraint is None or bool(self.constraint(point))


@dataclass(frozen=True)
class MinimizeConfig:
    grid_points: int = 7
    refine_iterations: int = 300
    starts: int = 3
    simplex_step: float = 0.12
    tolerance: float = 1e-10


@dataclass
class MinimizeResult:
    point: list[float]
    value: float
    evaluations: int = 0


def minimize(objective, space: SearchSpace, config: MinimizeConfig = MinimizeConfig(),
             extra_points: Sequence[Sequence[float]] = ()) -> MinimizeResult:
    """Minimize ``objective`` over ``space``.

    ``extra_points`` are additional seed points (clipped into the box) that
    join the grid candidates; callers use them to plant starts on known
    discontinuity boundaries of the objective.
    """
    dims = list(space.dimensions)
    evaluations = 0

    def guarded(point) -> float:
        nonlocal evaluations
        evaluations += 1
        if not space.feasible(point):
            return math.inf
        try:
            value = objective(point)
        except (ValueError, OverflowError, ZeroDivisionError):
            return math.inf
        return value if math.isfinite(value) else math.inf

    candidates = [list(p) for p in itertools.product(*(d.grid(config.grid_points) for d in dims))]
    for p in extra_points:
        candidates.append([min(max(x, d.lower), d.upper) for x, d in zip(p, dims)])
    scored = sorted(((guarded(p), i) for i, p in enumerate(candidates)), key=lambda t: t[0])
    if not scored or not math.isfinite(scored[0][0]):
        raise NoFeasiblePointError("no feasible point on the coarse grid")

    best_value, best_index = scored[0]
    best_point = candidates[best_index]
    starts = [candidates[i] for v, i in scored[: max(1, config.starts)] if math.isfinite(v)]

    if len(dims) == 1:
        point, value = _golden_section(guarded, dims[0], best_point[0], config)
        if value < best_value:
            best_point, best_value = point, value
    else:
        for start in starts:
            point, value = _nelder_mead(guarded, dims, start, config)
            if value < best_value:
                best_point, best_value = point, value

    return MinimizeResult(list(best_point), best_value, evaluations)


def _golden_section(f, dim: Dimension, center: float, config: MinimizeConfig):
    # bracket one grid cell either side of the best coarse point
    step = (dim.upper - dim.lower) / max(1, config.grid_points - 1)
    a = max(dim.lower, center - step)
    b = min(dim.upper, center + step)
    c, d = b - _GOLDEN * (b - a), a + _GOLDEN * (b - a)
    fc, fd = f([c]), f([d])
    for _ in range(config.refine_iterations):
        if b - a < config.tolerance * max(1.0, abs(a) + abs(b)):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f([c])
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f([d])
    x = c if fc < fd else d
    return [x], min(fc, fd)


def _nelder_mead(f, dims, start, config: MinimizeConfig):
    """Classical Nelder-Mead (reflect 1, expand 2, contract 1/2, shrink 1/2)."""
    n = len(dims)
    enc = lambda p: [d.encode(x) for d, x in zip(dims, p)]
    dec = lambda q: [d.decode(u) for d, u in zip(dims, q)]
    g = lambda q: f(dec(q))

    q0 = enc(start)
    simplex = [list(q0)]
    for i in range(n):
        q = list(q0)
        span = dims[i].encode(dims[i].upper) - dims[i].encode(dims[i].lower)
        q[i] += config.simplex_step * span
        simplex.append(q)
    values = [g(q) for q in simplex]

    for _ in range(config.refine_iterations):
        order = sorted(range(n + 1), key=lambda i: values[i])
        simplex = [simplex[i] for i in order]
        values = [values[i] for i in order]
        if math.isfinite(values[0]) and (
            values[-1] - values[0] <= config.tolerance * max(1.0, abs(values[0]))
        ):
            break
        centroid = [sum(simplex[i][j] for i in range(n)) / n for j in range(n)]
        reflected = [c + (c - w) for c, w in zip(centroid, simplex[-1])]
        fr = g(reflected)
        if fr < values[0]:
            expanded = [c + 2.0 * (c - w) for c, w in zip(centroid, simplex[-1])]
            fe = g(expanded)
            simplex[-1], values[-1] = (expanded, fe) if fe < fr else (reflected, fr)
        elif fr < values[-2]:
            simplex[-1], values[-1] = reflected, fr
        else:
            contracted = [c + 0.5 * (w - c) for c, w in zip(centroid, simplex[-1])]
            fc = g(contracted)
            if fc < values[-1]:
                simplex[-1], values[-1] = contracted, fc
            else:
                for i in range(1, n + 1):
                    simplex[i] = [a + 0.5 * (b - a) for a, b in zip(simplex[0], simplex[i])]
                    values[i] = g(simplex[i])

    best = min(range(n + 1), key=lambda i: values[i])
    return dec(simplex[best]), values[best]
