"""Presentation-level products, disjoint unions and local-map projections."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from math import isqrt

from .errors import InputError
from .groups import GroupContext
from .limits import Limits, resolve_limits
from .presentations import LocalMap, PatternPresentation, SftPresentation, check_same_group
from .serialization import digest


@dataclass(frozen=True)
class PairingScheme:
    """Cantor pairing ``(m, n) -> (m+n)(m+n+1)/2 + n`` and its two projections."""

    def pair(self, m: int, n: int) -> int:
        if m < 0 or n < 0:
            raise InputError(f"pairing is defined on naturals, got ({m}, {n})")
        s = m + n
        return s * (s + 1) // 2 + n

    def unpair(self, z: int) -> tuple[int, int]:
        if z < 0:
            raise InputError(f"unpairing is defined on naturals, got {z}")
        s = (isqrt(8 * z + 1) - 1) // 2
        n = z - s * (s + 1) // 2
        return s - n, n

    def first(self, z: int) -> int:
        return self.unpair(z)[0]

    def second(self, z: int) -> int:
        return self.unpair(z)[1]

    def project(self, component: int, z: int) -> int:
        if component not in (1, 2):
            raise InputError(f"component must be 1 or 2, got {component}")
        return self.unpair(z)[component - 1]


CANTOR = PairingScheme()


def _lift(p: PatternPresentation, others: tuple[int, ...], component: int, scheme: PairingScheme):
    """Every pattern q on the same words whose ``component`` projection is p."""
    words, values = p.words, p.values
    for choice in cartesian(others, repeat=len(words)):
        if component == 1:
            vals = (scheme.pair(v, o) for v, o in zip(values, choice))
        else:
            vals = (scheme.pair(o, v) for v, o in zip(values, choice))
        yield PatternPresentation(tuple(zip(words, vals)))


def product(
    pa: SftPresentation,
    pb: SftPresentation,
    scheme: PairingScheme = CANTOR,
    limits: Limits | None = None,
) -> SftPresentation:
    """Presentation conjugate to the direct product, over the paired alphabet.

    Each forbidden pattern of a factor is lifted to every pattern on the same
    words that projects onto it; there are ``|other alphabet| ** |W|`` lifts.
    """
    lim = resolve_limits(limits)
    group = check_same_group(pa, pb)
    lim.check("product alphabet", len(pa.alphabet) * len(pb.alphabet), lim.max_alphabet)
    n_lifted = sum(len(pb.alphabet) ** len(p.entries) for p in pa.forbidden)
    n_lifted += sum(len(pa.alphabet) ** len(p.entries) for p in pb.forbidden)
    lim.check("lifted forbidden patterns", n_lifted, lim.max_forbidden)

    alphabet = sorted(scheme.pair(a, b) for a in pa.alphabet for b in pb.alphabet)
    forbidden = []
    for p in pa.forbidden:
        forbidden.extend(_lift(p, pb.alphabet, 1, scheme))
    for p in pb.forbidden:
        forbidden.extend(_lift(p, pa.alphabet, 2, scheme))
    comment = f"product({digest(pa)}, {digest(pb)})"
    return SftPresentation(group, tuple(alphabet), tuple(forbidden), comment)


def union_offset(pa: SftPresentation) -> int:
    """Shift applied to the second alphabet of a disjoint union."""
    return max(pa.alphabet) + 1


def mixing_patterns(group: GroupContext, first: tuple[int, ...], second: tuple[int, ...]) -> list[PatternPresentation]:
    """Two-cell patterns forbidding neighbours from different symbol sets.

    Only positive generators are needed: the pair ``[(e, y), (s, x)]`` at ``g``
    is the pair ``[(e, x), (S, y)]`` at ``g*s``.
    """
    out = []
    for s in group.letters:
        for x in first:
            for y in second:
                out.append(PatternPresentation((("", x), (s, y))))
                out.append(PatternPresentation((("", y), (s, x))))
    return out


def disjoint_union(pa: SftPresentation, pb: SftPresentation) -> SftPresentation:
    """Presentation conjugate to the disjoint union.

    The second alphabet is shifted past the first; neighbouring cells drawn
    from different copies are forbidden.  The Cayley graph is connected, so
    every configuration lies entirely in one copy.
    """
    group = check_same_group(pa, pb)
    offset = union_offset(pa)
    shifted = tuple(b + offset for b in pb.alphabet)
    forbidden = list(pa.forbidden)
    forbidden.extend(p.relabel(lambda v: v + offset) for p in pb.forbidden)
    forbidden.extend(mixing_patterns(group, pa.alphabet, shifted))
    comment = f"disjoint_union({digest(pa)}, {digest(pb)})"
    return SftPresentation(group, pa.alphabet + shifted, tuple(forbidden), comment)


def project_local_map(
    product_pres: SftPresentation,
    scheme: PairingScheme,
    component: int,
    mu: LocalMap,
    limits: Limits | None = None,
) -> LocalMap:
    """Lift ``mu`` to the product alphabet by reading only the given component."""
    lim = resolve_limits(limits)
    projected = sorted({scheme.project(component, c) for c in product_pres.alphabet})
    if tuple(projected) != mu.alphabet:
        raise InputError(
            f"component {component} of the product has alphabet {projected}, "
            f"but the local map is over {list(mu.alphabet)}"
        )
    return LocalMap.from_function(
        product_pres.alphabet,
        mu.domain_words,
        mu.codomain,
        lambda inp: mu.lookup(tuple(scheme.project(component, c) for c in inp)),
        lim,
    )
