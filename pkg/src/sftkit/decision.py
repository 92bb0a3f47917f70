"""Decision and bounded semi-decision procedures for SFT presentations.

Emptiness, language membership and containment are only semi-decidable in
general, so those procedures return a three-valued :class:`Verdict` and spend
an explicit budget (a radius, a maximal period) instead of pretending to be
total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterator

from .errors import DomainError, EmptyBoxError, InputError
from .groups import Element, GroupContext, Grid
from .limits import Limits, resolve_limits
from .presentations import (
    PatternPresentation,
    ResolvedPattern,
    SftPresentation,
    SoficPresentation,
    apply_local_map,
    check_same_group,
    resolve,
)
from .search import (
    ConstraintSystem,
    box_cells,
    reduce_mod,
    torus_cells,
    torus_constraints,
    window_constraints,
)

DEFAULT_MAX_PERIOD = 4
BOUND_SLACK = 1e-12


@dataclass(frozen=True)
class BallPattern:
    """A total assignment of symbols to the ball of radius ``radius``."""

    radius: int
    cells: tuple[Element, ...]
    values: tuple[int, ...]

    def as_dict(self) -> dict[Element, int]:
        return dict(zip(self.cells, self.values))


@dataclass(frozen=True)
class PeriodicWitness:
    """An assignment on the torus (Z/nZ)^d, listed in lexicographic cell order."""

    period: int
    dimension: int
    values: tuple[int, ...]

    def at(self, g: tuple[int, ...]) -> int:
        n = self.period
        idx = 0
        for x in g:
            idx = idx * n + x % n
        return self.values[idx]

    def lift(self, side: int) -> dict[tuple[int, ...], int]:
        return {g: self.at(g) for g in box_cells(self.dimension, side)}

    def to_json(self) -> dict[str, Any]:
        cells = torus_cells(self.dimension, self.period)
        return {
            "period": self.period,
            "cells": [{"at": list(g), "value": v} for g, v in zip(cells, self.values)],
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of a bounded procedure: ``"yes"``, ``"no"`` or ``"unknown"``.

    ``radius`` is the certificate radius for a radius-based answer (or the
    exhausted radius budget for ``unknown``); ``max_period`` is the periodic
    budget that was searched.
    """

    answer: str
    radius: int | None = None
    witness: PeriodicWitness | None = None
    max_period: int | None = None
    detail: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.answer not in ("yes", "no", "unknown"):
            raise ValueError(f"bad verdict {self.answer!r}")

    @property
    def is_yes(self) -> bool:
        return self.answer == "yes"

    @property
    def is_no(self) -> bool:
        return self.answer == "no"

    @property
    def is_unknown(self) -> bool:
        return self.answer == "unknown"


def _forbidden(pres: SftPresentation) -> tuple[ResolvedPattern, ...]:
    return pres.consistent_forbidden


def ball_system(pres: SftPresentation, r: int, limits: Limits | None = None, fixed: dict | None = None):
    cells = pres.group.ball(r, limits)
    domains = [pres.alphabet] * len(cells)
    if fixed:
        index = {g: i for i, g in enumerate(cells)}
        for g, v in fixed.items():
            i = index[g]
            domains[i] = (v,) if v in domains[i] else ()
    return cells, ConstraintSystem(domains, window_constraints(pres.group, cells, _forbidden(pres)))


def iter_locally_admissible(pres: SftPresentation, r: int, limits: Limits | None = None) -> Iterator[BallPattern]:
    cells, system = ball_system(pres, r, limits)
    for values in system.solutions():
        yield BallPattern(r, cells, values)


def locally_admissible_patterns(pres: SftPresentation, r: int, limits: Limits | None = None) -> list[BallPattern]:
    """Every map ``ball(r) -> alphabet`` with no forbidden occurrence fully inside the ball."""
    lim = resolve_limits(limits)
    out = []
    for bp in iter_locally_admissible(pres, r, lim):
        out.append(bp)
        lim.check(f"admissible patterns at radius {r}", len(out), lim.max_patterns)
    return out


def count_locally_admissible(pres: SftPresentation, r: int, limits: Limits | None = None) -> int:
    """``len(locally_admissible_patterns(pres, r))`` without materializing the patterns."""
    lim = resolve_limits(limits)
    _, system = ball_system(pres, r, lim)
    return system.count(lim.max_states)


def has_fixed_point(pres: SftPresentation) -> bool:
    """Whether some constant configuration avoids every forbidden pattern.

    A pattern appears in the constant configuration of ``a`` exactly when all
    of its values equal ``a``; inconsistent patterns are never constant.
    """
    constants = {p.constant_value() for p in pres.forbidden}
    return any(a not in constants for a in pres.alphabet)


def fixed_points(pres: SftPresentation) -> list[int]:
    """Symbols whose constant configuration lies in the SFT."""
    constants = {p.constant_value() for p in pres.forbidden}
    return [a for a in pres.alphabet if a not in constants]


def check_empty(pres: SftPresentation, r_max: int, limits: Limits | None = None) -> Verdict:
    """``no`` at the first radius ``r <= r_max`` with no admissible ball pattern; else ``unknown``.

    A ``no`` certifies emptiness by compactness.  This never answers
    nonempty; see :func:`find_periodic`.
    """
    if r_max < 0:
        raise InputError(f"radius must be nonnegative, got {r_max}")
    for r in range(r_max + 1):
        _, system = ball_system(pres, r, limits)
        if system.first() is None:
            return Verdict("no", radius=r)
    return Verdict("unknown", radius=r_max)


def _require_grid(pres: SftPresentation, what: str) -> Grid:
    if not isinstance(pres.group, Grid):
        raise InputError(f"{what} needs a grid group, got {pres.group.descriptor()}")
    return pres.group


def _torus_search(pres: SftPresentation, n: int, limits: Limits, required: dict | None = None):
    d = pres.group.dimension
    limits.check(f"torus of period {n}", n**d, limits.max_cells)
    domains = [pres.alphabet] * (n**d)
    if required:
        cells = torus_cells(d, n)
        index = {g: i for i, g in enumerate(cells)}
        for g, v in required.items():
            i = index[g]
            domains[i] = (v,) if v in pres.alphabet else ()
    system = ConstraintSystem(domains, torus_constraints(d, n, _forbidden(pres)))
    return system.first()


def find_periodic(pres: SftPresentation, n_max: int, limits: Limits | None = None) -> Verdict:
    """``yes`` with the first torus assignment of period ``n <= n_max`` avoiding all forbidden patterns."""
    _require_grid(pres, "periodic search")
    if n_max < 1:
        raise InputError(f"max period must be at least 1, got {n_max}")
    lim = resolve_limits(limits)
    for n in range(1, n_max + 1):
        values = _torus_search(pres, n, lim)
        if values is not None:
            return Verdict("yes", witness=PeriodicWitness(n, pres.group.dimension, values), max_period=n_max)
    return Verdict("unknown", max_period=n_max)


def replay_witness(pres: SftPresentation, witness: PeriodicWitness, copies: int = 3) -> bool:
    """Lift the witness to a box of ``copies * period`` and check no forbidden pattern occurs inside."""
    side = copies * witness.period
    cells = box_cells(witness.dimension, side)
    config = witness.lift(side)
    for c in window_constraints(pres.group, cells, _forbidden(pres)):
        if all(config[cells[i]] == v for i, v in c):
            return False
    return True


def decide_empty(pres: SftPresentation, r_max: int, n_max: int, limits: Limits | None = None) -> Verdict:
    """Emptiness by both routes: ``no``-radius certificate means empty, periodic witness means nonempty.

    The answer is phrased as the question "is it empty?": ``yes`` (empty, with
    radius), ``no`` (nonempty, with witness) or ``unknown``.
    """
    v = check_empty(pres, r_max, limits)
    if v.is_no:
        return Verdict("yes", radius=v.radius)
    if isinstance(pres.group, Grid) and n_max >= 1:
        p = find_periodic(pres, n_max, limits)
        if p.is_yes:
            return Verdict("no", witness=p.witness, max_period=n_max)
    return Verdict("unknown", radius=r_max, max_period=n_max if isinstance(pres.group, Grid) else None)


def support_radius(ctx: GroupContext, q: ResolvedPattern) -> int:
    if q.support is None:
        return 0
    return max(ctx.word_length(h) for h, _ in q.support)


def pattern_in_language_bounded(
    pres: SftPresentation,
    p: PatternPresentation,
    r: int,
    max_period: int = DEFAULT_MAX_PERIOD,
    limits: Limits | None = None,
) -> Verdict:
    """Bounded test of whether ``p`` appears in some configuration of the SFT.

    ``no`` (certified, at radius ``r``): no admissible ball pattern extends p
    placed at the identity.  ``yes``: a periodic configuration containing p at
    the identity was found (grid groups only).  Otherwise ``unknown``.
    """
    ctx = pres.group
    lim = resolve_limits(limits)
    q = resolve(ctx, p)
    if q.support is None:
        return Verdict("no", radius=r, detail={"reason": "inconsistent pattern"})
    need = support_radius(ctx, q)
    if need > r:
        raise DomainError(f"pattern support needs radius {need}, got {r}")
    _, system = ball_system(pres, r, lim, fixed=q.as_dict())
    if system.first() is None:
        return Verdict("no", radius=r)
    if isinstance(ctx, Grid):
        for n in range(1, max_period + 1):
            required = reduce_mod(q.support, n)
            if required is None:
                continue
            values = _torus_search(pres, n, lim, required)
            if values is not None:
                return Verdict("yes", witness=PeriodicWitness(n, ctx.dimension, values), max_period=max_period)
        return Verdict("unknown", radius=r, max_period=max_period)
    return Verdict("unknown", radius=r)


def contains_bounded(
    candidate: SftPresentation,
    x: SftPresentation,
    r: int,
    periodic_budget: int = DEFAULT_MAX_PERIOD,
    limits: Limits | None = None,
) -> Verdict:
    """Bounded test of whether the SFT of ``x`` is contained in the SFT of ``candidate``.

    Contained iff no forbidden pattern of the candidate (and no single symbol
    outside the candidate's alphabet) lies in the language of ``x``.  Each
    pattern is checked at radius ``max(r, its support radius)``.
    """
    ctx = check_same_group(candidate, x)
    tests = [(f"forbidden[{i}]", q) for i, q in enumerate(candidate.forbidden)]
    tests += [(f"symbol {a}", PatternPresentation((("", a),))) for a in x.alphabet if a not in candidate.alphabet]
    worst = r
    unknown = None
    for label, q in tests:
        resolved = resolve(ctx, q)
        if any(v not in x.alphabet for v in q.values):
            continue  # uses a symbol x never produces
        rq = max(r, support_radius(ctx, resolved))
        worst = max(worst, rq)
        v = pattern_in_language_bounded(x, q, rq, periodic_budget, limits)
        if v.is_yes:
            return Verdict("no", witness=v.witness, max_period=periodic_budget, detail={"pattern": label})
        if v.is_unknown and unknown is None:
            unknown = label
    if unknown is not None:
        return Verdict("unknown", radius=worst, max_period=periodic_budget, detail={"pattern": unknown})
    return Verdict("yes", radius=worst)


def pattern_count(pres: SftPresentation, n: int, limits: Limits | None = None) -> int:
    """Number of locally admissible assignments on the box ``{0..n-1}^d``."""
    grid = _require_grid(pres, "box counting")
    if n < 1:
        raise InputError(f"box side must be at least 1, got {n}")
    lim = resolve_limits(limits)
    lim.check(f"box of side {n}", n**grid.dimension, lim.max_cells)
    cells = box_cells(grid.dimension, n)
    system = ConstraintSystem([pres.alphabet] * len(cells), window_constraints(grid, cells, _forbidden(pres)))
    return system.count(lim.max_states)


def entropy_upper_bound(pres: SftPresentation, n: int, limits: Limits | None = None) -> float:
    """``log(pattern_count(n)) / n**d``; raises :class:`EmptyBoxError` when the count is zero."""
    count = pattern_count(pres, n, limits)
    if count == 0:
        raise EmptyBoxError(n)
    return math.log(count) / n ** pres.group.dimension


def sofic_image_patterns(sp: SoficPresentation, r: int, limits: Limits | None = None) -> set[tuple[int, ...]]:
    """Images on ``ball(r)`` of the admissible base patterns on the enlarged ball.

    The base is searched on ``ball(r + m)`` where ``m`` bounds the length of the
    local map's domain words, so the map can be applied at every cell of ``ball(r)``.
    """
    ctx = sp.group
    m = max(ctx.word_length(h) for h in sp.domain_elements)
    inner = ctx.ball(r, limits)
    out = set()
    for bp in iter_locally_admissible(sp.base, r + m, limits):
        config = bp.as_dict()
        out.add(tuple(apply_local_map(sp, config, g) for g in inner))
    return out
