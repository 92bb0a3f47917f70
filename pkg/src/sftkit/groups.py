"""Finitely generated groups with a fixed symmetric generating set.

Generators are the letters ``a, b, c, ...``; the uppercase form of a letter is
its inverse.  Two families are supported:

* ``Grid(d)``: the free abelian group Z^d.  Letter ``i`` is the i-th standard
  basis vector and elements are integer tuples of length ``d``.
* ``Free(k)``: the free group of rank ``k``.  Elements are freely reduced words
  stored as strings.

Both have a trivially decidable word problem.  New groups can be added by
subclassing :class:`GroupContext`.
"""

from __future__ import annotations

import string
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Any, Hashable, Mapping

from .errors import InputError
from .limits import Limits, resolve_limits

Element = Hashable
MAX_GENERATORS = 26


class GroupContext(ABC):
    """A group together with its generating letters."""

    kind: str

    @property
    @abstractmethod
    def ngens(self) -> int: ...

    @property
    def letters(self) -> str:
        return string.ascii_lowercase[: self.ngens]

    @property
    def symbols(self) -> str:
        """The symmetric generating set, positive letters first."""
        return self.letters + self.letters.upper()

    @property
    @abstractmethod
    def identity(self) -> Element: ...

    @abstractmethod
    def generator(self, symbol: str) -> Element:
        """The element named by a single (possibly uppercase) letter."""

    @abstractmethod
    def multiply(self, g: Element, h: Element) -> Element: ...

    @abstractmethod
    def inverse(self, g: Element) -> Element: ...

    @abstractmethod
    def word_length(self, g: Element) -> int:
        """Length of a shortest word representing ``g``."""

    @abstractmethod
    def ball_size(self, r: int) -> int: ...

    @abstractmethod
    def descriptor(self) -> dict[str, Any]: ...

    def check_word(self, word: str) -> None:
        for pos, ch in enumerate(word):
            if ch not in self.symbols:
                raise InputError(
                    f"unknown generator symbol {ch!r} at position {pos} of word {word!r}"
                    f" (generators: {self.symbols})"
                )

    def evaluate_word(self, word: str) -> Element:
        self.check_word(word)
        g = self.identity
        for ch in word:
            g = self.multiply(g, self.generator(ch))
        return g

    def ball(self, r: int, limits: Limits | None = None) -> tuple[Element, ...]:
        """Elements of word length at most ``r``, sorted by canonical form."""
        if r < 0:
            raise InputError(f"radius must be nonnegative, got {r}")
        lim = resolve_limits(limits)
        lim.check(f"ball of radius {r}", self.ball_size(r), lim.max_cells)
        return _ball(self, r)


@lru_cache(maxsize=256)
def _ball(ctx: GroupContext, r: int) -> tuple[Element, ...]:
    seen = {ctx.identity}
    layer = [ctx.identity]
    gens = [ctx.generator(s) for s in ctx.symbols]
    for _ in range(r):
        nxt = []
        for g in layer:
            for s in gens:
                h = ctx.multiply(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        layer = nxt
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Grid(GroupContext):
    dimension: int
    kind = "grid"

    def __post_init__(self):
        if not 1 <= self.dimension <= MAX_GENERATORS:
            raise InputError(f"grid dimension must be in 1..{MAX_GENERATORS}, got {self.dimension}")

    @property
    def ngens(self) -> int:
        return self.dimension

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * self.dimension

    def generator(self, symbol: str) -> tuple[int, ...]:
        i = self.letters.find(symbol.lower())
        if i < 0 or len(symbol) != 1:
            raise InputError(f"unknown generator symbol {symbol!r}")
        v = [0] * self.dimension
        v[i] = -1 if symbol.isupper() else 1
        return tuple(v)

    def multiply(self, g, h):
        return tuple(x + y for x, y in zip(g, h))

    def inverse(self, g):
        return tuple(-x for x in g)

    def word_length(self, g) -> int:
        return sum(abs(x) for x in g)

    def ball_size(self, r: int) -> int:
        d = self.dimension
        return sum(2**i * comb(d, i) * comb(r, i) for i in range(min(d, r) + 1))

    def descriptor(self) -> dict[str, Any]:
        return {"kind": "grid", "dimension": self.dimension}


@dataclass(frozen=True)
class Free(GroupContext):
    rank: int
    kind = "free"

    def __post_init__(self):
        if not 1 <= self.rank <= MAX_GENERATORS:
            raise InputError(f"free group rank must be in 1..{MAX_GENERATORS}, got {self.rank}")

    @property
    def ngens(self) -> int:
        return self.rank

    @property
    def identity(self) -> str:
        return ""

    def generator(self, symbol: str) -> str:
        if len(symbol) != 1 or symbol not in self.symbols:
            raise InputError(f"unknown generator symbol {symbol!r}")
        return symbol

    def multiply(self, g: str, h: str) -> str:
        # cancel the longest suffix of g against the matching prefix of h
        i = 0
        n = min(len(g), len(h))
        while i < n and g[len(g) - 1 - i] == h[i].swapcase():
            i += 1
        return g[: len(g) - i] + h[i:]

    def inverse(self, g: str) -> str:
        return g[::-1].swapcase()

    def word_length(self, g: str) -> int:
        return len(g)

    def ball_size(self, r: int) -> int:
        k = self.rank
        if k == 1:
            return 2 * r + 1
        return 1 + 2 * k * ((2 * k - 1) ** r - 1) // (2 * k - 2)

    def descriptor(self) -> dict[str, Any]:
        return {"kind": "free", "rank": self.rank}


def group_from_descriptor(desc: Mapping[str, Any], location: str = "group") -> GroupContext:
    if not isinstance(desc, Mapping):
        raise InputError("group descriptor must be an object", location)
    kind = desc.get("kind")
    if kind == "grid":
        key, cls = "dimension", Grid
    elif kind == "free":
        key, cls = "rank", Free
    else:
        raise InputError(f"unknown group kind {kind!r}", f"{location}.kind")
    n = desc.get(key)
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError(f"{key} must be an integer", f"{location}.{key}")
    extra = set(desc) - {"kind", key}
    if extra:
        raise InputError(f"unexpected keys {sorted(extra)}", location)
    try:
        return cls(n)
    except InputError as exc:
        raise InputError(str(exc), f"{location}.{key}") from None


def inverse_word(word: str) -> str:
    """The formal inverse of a word: reversed with every letter's case flipped."""
    return word[::-1].swapcase()
