"""Pattern, SFT, sofic and Wang-tile presentations.

A pattern presentation maps finitely many words to symbols.  Resolving it in a
group turns the words into group elements; if two words land on the same
element with different symbols the pattern is *inconsistent* and can never
appear in any configuration.  Inconsistent forbidden patterns are kept (for
input fidelity) but every admissibility check skips them.

All values here are immutable and canonicalized on construction: alphabets are
sorted, pattern entries are sorted by word, local-map tables are sorted by
input.  Equality is therefore structural equality of canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InputError, IntegrityError
from .groups import Element, GroupContext, Grid
from .limits import Limits, resolve_limits


def _word_key(word: str) -> tuple[int, str]:
    return (len(word), word)


@dataclass(frozen=True)
class PatternPresentation:
    """A finite map from words to symbols, stored as sorted ``(word, value)`` pairs."""

    entries: tuple[tuple[str, int], ...]

    def __post_init__(self):
        entries = tuple(sorted(((str(w), int(v)) for w, v in self.entries), key=lambda e: _word_key(e[0])))
        if not entries:
            raise InputError("pattern presentation must have at least one entry")
        words = [w for w, _ in entries]
        for a, b in zip(words, words[1:]):
            if a == b:
                raise InputError(f"duplicate word {a!r} in pattern presentation")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, pairs: Mapping[str, int] | Iterable[tuple[str, int]]) -> "PatternPresentation":
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        return cls(tuple(items))

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(w for w, _ in self.entries)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)

    def constant_value(self) -> int | None:
        vals = set(self.values)
        return vals.pop() if len(vals) == 1 else None

    def relabel(self, f) -> "PatternPresentation":
        return PatternPresentation(tuple((w, f(v)) for w, v in self.entries))


@dataclass(frozen=True)
class ResolvedPattern:
    """A pattern indexed by group elements.

    ``support`` is ``None`` for an inconsistent pattern; otherwise it is a
    tuple of ``(element, symbol)`` pairs sorted by element.
    """

    support: tuple[tuple[Element, int], ...] | None

    @property
    def consistent(self) -> bool:
        return self.support is not None

    def as_dict(self) -> dict[Element, int]:
        if self.support is None:
            raise DomainError("inconsistent pattern has no support map")
        return dict(self.support)


def resolve(ctx: GroupContext, p: PatternPresentation) -> ResolvedPattern:
    support: dict[Element, int] = {}
    for w, v in p.entries:
        g = ctx.evaluate_word(w)
        if support.setdefault(g, v) != v:
            return ResolvedPattern(None)
    return ResolvedPattern(tuple(sorted(support.items())))


def appears(ctx: GroupContext, q: ResolvedPattern, config: Mapping[Element, int], at: Element) -> bool:
    """Whether ``q`` appears in the finite configuration ``config`` at ``at``.

    Inconsistent patterns never appear.  Raises :class:`DomainError` when the
    translated support leaves the configuration's domain.
    """
    if q.support is None:
        return False
    hit = True
    for h, v in q.support:
        gh = ctx.multiply(at, h)
        if gh not in config:
            raise DomainError(f"cell {gh!r} is outside the configuration's domain")
        if config[gh] != v:
            hit = False
    return hit


@dataclass(frozen=True)
class SftPresentation:
    """An alphabet of naturals plus a finite list of forbidden pattern presentations."""

    group: GroupContext
    alphabet: tuple[int, ...]
    forbidden: tuple[PatternPresentation, ...] = ()
    comment: str | None = field(default=None, compare=False)

    def __post_init__(self):
        alphabet = tuple(sorted(int(a) for a in self.alphabet))
        if not alphabet:
            raise InputError("alphabet must be nonempty", "alphabet")
        if len(set(alphabet)) != len(alphabet):
            raise InputError("alphabet elements must be distinct", "alphabet")
        if alphabet[0] < 0:
            raise InputError("alphabet symbols must be natural numbers", "alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "forbidden", tuple(self.forbidden))
        symbols = set(alphabet)
        for i, p in enumerate(self.forbidden):
            for j, (w, v) in enumerate(p.entries):
                if v not in symbols:
                    raise InputError(f"value {v} is not in the alphabet", f"forbidden[{i}].values[{j}]")
                try:
                    self.group.check_word(w)
                except InputError as exc:
                    raise InputError(str(exc), f"forbidden[{i}].words[{j}]") from None

    @cached_property
    def resolved(self) -> tuple[ResolvedPattern, ...]:
        return tuple(resolve(self.group, p) for p in self.forbidden)

    @cached_property
    def consistent_forbidden(self) -> tuple[ResolvedPattern, ...]:
        return tuple(q for q in self.resolved if q.consistent)

    def inconsistent_indices(self) -> list[int]:
        return [i for i, q in enumerate(self.resolved) if not q.consistent]

    def with_comment(self, comment: str | None) -> "SftPresentation":
        return SftPresentation(self.group, self.alphabet, self.forbidden, comment)


def full_shift(group: GroupContext, alphabet: Iterable[int]) -> SftPresentation:
    return SftPresentation(group, tuple(alphabet), ())


def check_same_group(*presentations: SftPresentation) -> GroupContext:
    group = presentations[0].group
    for p in presentations[1:]:
        if p.group != group:
            raise InputError(f"group mismatch: {group.descriptor()} vs {p.group.descriptor()}")
    return group


@dataclass(frozen=True)
class LocalMap:
    """A local function presentation: a table from assignments ``domain_words -> alphabet`` to ``codomain``.

    ``table`` maps each input tuple (aligned with ``domain_words``) to an output symbol.
    """

    alphabet: tuple[int, ...]
    domain_words: tuple[str, ...]
    codomain: tuple[int, ...]
    table: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(sorted(self.alphabet)))
        object.__setattr__(self, "domain_words", tuple(self.domain_words))
        object.__setattr__(self, "codomain", tuple(sorted(set(self.codomain))))
        table = tuple(sorted((tuple(k), int(v)) for k, v in self.table))
        object.__setattr__(self, "table", table)
        if not self.domain_words:
            raise InputError("local map needs at least one domain word", "local_map.domain_words")
        if len(set(self.domain_words)) != len(self.domain_words):
            raise InputError("duplicate domain word", "local_map.domain_words")
        if not self.codomain:
            raise InputError("codomain must be nonempty", "local_map.codomain")
        symbols, outputs, width = set(self.alphabet), set(self.codomain), len(self.domain_words)
        for i, (inp, out) in enumerate(table):
            where = f"local_map.table[{i}]"
            if len(inp) != width:
                raise InputError(f"input has {len(inp)} values, expected {width}", where)
            if any(a not in symbols for a in inp):
                raise InputError(f"input {list(inp)} uses a symbol outside the alphabet", where)
            if out not in outputs:
                raise InputError(f"output {out} is not in the codomain", where)
        for a, b in zip(table, table[1:]):
            if a[0] == b[0]:
                raise IntegrityError(f"duplicate row for input {list(a[0])}", "local_map.table")
        expected = len(self.alphabet) ** width
        if len(table) != expected:
            missing = next(
                (list(k) for k in cartesian(self.alphabet, repeat=width) if k not in self.rows), None
            )
            raise IntegrityError(
                f"table has {len(table)} rows, expected {expected}; missing input {missing}",
                "local_map.table",
            )

    @cached_property
    def rows(self) -> dict[tuple[int, ...], int]:
        return dict(self.table)

    def lookup(self, inp: tuple[int, ...]) -> int:
        try:
            return self.rows[inp]
        except KeyError:
            raise IntegrityError(f"no table row for input {list(inp)}", "local_map.table") from None

    @classmethod
    def from_function(
        cls, alphabet: Sequence[int], domain_words: Sequence[str], codomain: Iterable[int], fn,
        limits: Limits | None = None,
    ) -> "LocalMap":
        lim = resolve_limits(limits)
        alphabet = tuple(sorted(alphabet))
        lim.check("local-map table", len(alphabet) ** len(domain_words), lim.max_table_rows)
        table = tuple((k, fn(k)) for k in cartesian(alphabet, repeat=len(domain_words)))
        return cls(alphabet, tuple(domain_words), tuple(codomain), table)


@dataclass(frozen=True)
class SoficPresentation:
    """An SFT presentation together with a local map on its alphabet."""

    base: SftPresentation
    local_map: LocalMap

    def __post_init__(self):
        if self.local_map.alphabet != self.base.alphabet:
            raise InputError("local-map alphabet must equal the base alphabet", "local_map")
        for i, w in enumerate(self.local_map.domain_words):
            try:
                self.base.group.check_word(w)
            except InputError as exc:
                raise InputError(str(exc), f"local_map.domain_words[{i}]") from None

    @property
    def group(self) -> GroupContext:
        return self.base.group

    @cached_property
    def domain_elements(self) -> tuple[Element, ...]:
        return tuple(self.group.evaluate_word(w) for w in self.local_map.domain_words)


def apply_local_map(sp: SoficPresentation, config: Mapping[Element, int], at: Element) -> int:
    """Output symbol of the local map at ``at``: the row indexed by ``w -> config(at * w)``."""
    ctx = sp.group
    inp = []
    for h in sp.domain_elements:
        gh = ctx.multiply(at, h)
        if gh not in config:
            raise DomainError(f"cell {gh!r} is outside the configuration's domain")
        inp.append(config[gh])
    return sp.local_map.lookup(tuple(inp))


@dataclass(frozen=True)
class WangTile:
    n: int
    e: int
    s: int
    w: int


@dataclass(frozen=True)
class WangTileset:
    tiles: tuple[WangTile, ...]

    def __post_init__(self):
        if not self.tiles:
            raise InputError("tileset must contain at least one tile", "tiles")

    @classmethod
    def of(cls, *nesw: tuple[int, int, int, int]) -> "WangTileset":
        return cls(tuple(WangTile(*t) for t in nesw))


def wang_to_sft(tileset: WangTileset) -> SftPresentation:
    """Compile a Wang tileset to a Z^2 SFT whose configurations are exactly its tilings.

    ``a`` is the east step and ``b`` the north step.
    """
    tiles = tileset.tiles
    forbidden = []
    for i, t in enumerate(tiles):
        for j, u in enumerate(tiles):
            if t.e != u.w:
                forbidden.append(PatternPresentation((("", i), ("a", j))))
            if t.n != u.s:
                forbidden.append(PatternPresentation((("", i), ("b", j))))
    return SftPresentation(Grid(2), tuple(range(len(tiles))), tuple(forbidden))


def lint(pres: SftPresentation) -> list[str]:
    """Human-readable findings about a presentation; empty when clean."""
    findings = []
    for i in pres.inconsistent_indices():
        findings.append(f"forbidden[{i}]: inconsistent pattern (two words name the same cell with different values); it never appears")
    seen: dict[ResolvedPattern, int] = {}
    for i, q in enumerate(pres.resolved):
        if q.consistent and q in seen:
            findings.append(f"forbidden[{i}]: same pattern as forbidden[{seen[q]}] after resolution")
        seen.setdefault(q, i)
    return findings
