"""Brute-force oracles, deliberately independent of the search engine.

Nothing here uses frontier caching, constraint indexing or pruning: they
enumerate every candidate and test every translate directly.
"""

from __future__ import annotations

import itertools
import random

from sftkit import Free, Grid, PatternPresentation, SftPresentation
from sftkit.presentations import resolve


def words_up_to(ctx, r):
    for n in range(r + 1):
        for t in itertools.product(ctx.symbols, repeat=n):
            yield "".join(t)


def bfs_ball(ctx, r):
    """Every element reachable by a word of length <= r, by evaluating all such words."""
    return {ctx.evaluate_word(w) for w in words_up_to(ctx, r)}


def occurs(ctx, support, config, g):
    for h, v in support:
        c = config.get(ctx.multiply(g, h))
        if c != v:
            return False
    return True


def fully_inside(ctx, support, cells, g):
    return all(ctx.multiply(g, h) in cells for h, _ in support)


def translates(ctx, support, cells):
    """Candidate positions g: the support point ``h`` lands on some cell."""
    out = set()
    for x in cells:
        for h, _ in support:
            out.add(ctx.multiply(x, ctx.inverse(h)))
    return out


def brute_admissible(pres: SftPresentation, cells):
    """All assignments on ``cells`` with no forbidden occurrence fully inside."""
    ctx = pres.group
    cells = list(cells)
    cellset = set(cells)
    supports = []
    for p in pres.forbidden:
        q = resolve(ctx, p)
        if q.support is None:
            continue
        gs = [g for g in translates(ctx, q.support, cells) if fully_inside(ctx, q.support, cellset, g)]
        supports.append((q.support, gs))
    out = []
    for values in itertools.product(pres.alphabet, repeat=len(cells)):
        config = dict(zip(cells, values))
        if not any(occurs(ctx, s, config, g) for s, gs in supports for g in gs):
            out.append(values)
    return out


def box(d, n):
    return list(itertools.product(range(n), repeat=d))


def constant_config_has(pres: SftPresentation, a: int) -> bool:
    """Whether the constant configuration of ``a`` avoids all forbidden patterns,
    checked by laying it out on a ball big enough to hold every support."""
    ctx = pres.group
    radius = max((len(w) for p in pres.forbidden for w in p.words), default=0)
    cells = bfs_ball(ctx, radius)
    config = {g: a for g in cells}
    for p in pres.forbidden:
        q = resolve(ctx, p)
        if q.support is not None and occurs(ctx, q.support, config, ctx.identity):
            return False
    return True


def random_word(rng: random.Random, ctx, max_len: int) -> str:
    return "".join(rng.choice(ctx.symbols) for _ in range(rng.randint(0, max_len)))


def random_pattern(rng, ctx, alphabet, max_len=3, max_entries=3) -> PatternPresentation:
    words = set()
    for _ in range(rng.randint(1, max_entries)):
        words.add(random_word(rng, ctx, max_len))
    return PatternPresentation(tuple((w, rng.choice(alphabet)) for w in sorted(words)))


def random_presentation(rng, ctx, max_alphabet=4, max_forbidden=6, max_len=3, max_entries=3) -> SftPresentation:
    size = rng.randint(1, max_alphabet)
    alphabet = tuple(sorted(rng.sample(range(max(6, size)), size)))
    forbidden = tuple(
        random_pattern(rng, ctx, alphabet, max_len, max_entries) for _ in range(rng.randint(0, max_forbidden))
    )
    return SftPresentation(ctx, alphabet, forbidden)


def random_constant_heavy(rng, ctx, max_alphabet=4, max_forbidden=6, max_len=3) -> SftPresentation:
    """Random presentation where forbidden patterns are often constant, to exercise fixed points."""
    size = rng.randint(1, max_alphabet)
    alphabet = tuple(range(size))
    forbidden = []
    for _ in range(rng.randint(0, max_forbidden)):
        p = random_pattern(rng, ctx, alphabet, max_len)
        if rng.random() < 0.6:
            a = rng.choice(alphabet)
            p = p.relabel(lambda v: a)
        forbidden.append(p)
    return SftPresentation(ctx, alphabet, tuple(forbidden))


GROUPS = (Grid(2), Free(2))
