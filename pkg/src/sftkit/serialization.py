"""Reading and writing presentation files.

SFT file::

    {"group": {"kind": "grid", "dimension": 2},
     "alphabet": [0, 1],
     "forbidden": [{"words": ["", "a"], "values": [1, 1]}]}

A sofic file adds ``"local_map": {"domain_words": [...], "codomain": [...],
"table": [{"input": [...], "output": v}, ...]}``.  A Wang file is
``{"tiles": [{"n": c, "e": c, "s": c, "w": c}, ...]}``.  An optional
``"comment"`` string is carried through untouched.

``dumps`` writes the canonical form: one forbidden pattern or table row per
line, keys in fixed order, so output is byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Union

from .errors import InputError
from .groups import group_from_descriptor
from .presentations import (
    LocalMap,
    PatternPresentation,
    SftPresentation,
    SoficPresentation,
    WangTile,
    WangTileset,
    wang_to_sft,
)

Document = Union[SftPresentation, SoficPresentation, WangTileset]


def _expect(cond: bool, message: str, location: str) -> None:
    if not cond:
        raise InputError(message, location)


def _int_list(value: Any, location: str) -> list[int]:
    _expect(isinstance(value, list), "expected a list of integers", location)
    for i, v in enumerate(value):
        _expect(isinstance(v, int) and not isinstance(v, bool) and v >= 0,
                f"expected a natural number, got {v!r}", f"{location}[{i}]")
    return value


def _str_list(value: Any, location: str) -> list[str]:
    _expect(isinstance(value, list), "expected a list of strings", location)
    for i, v in enumerate(value):
        _expect(isinstance(v, str), f"expected a string, got {v!r}", f"{location}[{i}]")
    return value


def _check_keys(obj: dict, required: set[str], optional: set[str], location: str) -> None:
    missing = required - set(obj)
    _expect(not missing, f"missing keys {sorted(missing)}", location)
    extra = set(obj) - required - optional
    _expect(not extra, f"unexpected keys {sorted(extra)}", location)


def parse_pattern(obj: Any, location: str) -> PatternPresentation:
    _expect(isinstance(obj, dict), "expected an object", location)
    _check_keys(obj, {"words", "values"}, set(), location)
    words = _str_list(obj["words"], f"{location}.words")
    values = _int_list(obj["values"], f"{location}.values")
    _expect(len(words) == len(values), "words and values differ in length", location)
    try:
        return PatternPresentation(tuple(zip(words, values)))
    except InputError as exc:
        raise InputError(str(exc), location) from None


def _parse_sft(doc: dict) -> SftPresentation:
    group = group_from_descriptor(doc["group"])
    alphabet = _int_list(doc["alphabet"], "alphabet")
    _expect(isinstance(doc["forbidden"], list), "expected a list", "forbidden")
    forbidden = tuple(parse_pattern(p, f"forbidden[{i}]") for i, p in enumerate(doc["forbidden"]))
    comment = doc.get("comment")
    _expect(comment is None or isinstance(comment, str), "expected a string", "comment")
    return SftPresentation(group, tuple(alphabet), forbidden, comment)


def _parse_local_map(obj: Any, alphabet: tuple[int, ...]) -> LocalMap:
    loc = "local_map"
    _expect(isinstance(obj, dict), "expected an object", loc)
    _check_keys(obj, {"domain_words", "codomain", "table"}, set(), loc)
    words = _str_list(obj["domain_words"], f"{loc}.domain_words")
    codomain = _int_list(obj["codomain"], f"{loc}.codomain")
    _expect(isinstance(obj["table"], list), "expected a list", f"{loc}.table")
    rows = []
    for i, row in enumerate(obj["table"]):
        where = f"{loc}.table[{i}]"
        _expect(isinstance(row, dict), "expected an object", where)
        _check_keys(row, {"input", "output"}, set(), where)
        inp = _int_list(row["input"], f"{where}.input")
        out = row["output"]
        _expect(isinstance(out, int) and not isinstance(out, bool), "expected an integer", f"{where}.output")
        rows.append((tuple(inp), out))
    return LocalMap(alphabet, tuple(words), tuple(codomain), tuple(rows))


def parse(doc: Any) -> Document:
    """Build a presentation from a decoded JSON document."""
    _expect(isinstance(doc, dict), "document must be a JSON object", "$")
    if "tiles" in doc:
        _check_keys(doc, {"tiles"}, {"comment"}, "$")
        _expect(isinstance(doc["tiles"], list), "expected a list", "tiles")
        tiles = []
        for i, t in enumerate(doc["tiles"]):
            where = f"tiles[{i}]"
            _expect(isinstance(t, dict), "expected an object", where)
            _check_keys(t, {"n", "e", "s", "w"}, set(), where)
            for k in "nesw":
                _expect(isinstance(t[k], int) and not isinstance(t[k], bool), "color must be an integer", f"{where}.{k}")
            tiles.append(WangTile(t["n"], t["e"], t["s"], t["w"]))
        return WangTileset(tuple(tiles))
    _check_keys(doc, {"group", "alphabet", "forbidden"}, {"comment", "local_map"}, "$")
    base = _parse_sft(doc)
    if "local_map" in doc:
        return SoficPresentation(base, _parse_local_map(doc["local_map"], base.alphabet))
    return base


def loads(text: str) -> Document:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    return parse(doc)


def load(path: str | Path) -> Document:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", str(path)) from None
    try:
        return loads(text)
    except InputError as exc:
        raise InputError(str(exc), str(path)) from None


def load_sft(path: str | Path) -> SftPresentation:
    """Load an SFT presentation; Wang files are compiled on the fly."""
    doc = load(path)
    if isinstance(doc, WangTileset):
        return wang_to_sft(doc)
    if isinstance(doc, SoficPresentation):
        raise InputError("expected an SFT presentation, got a sofic presentation", str(path))
    return doc


def load_sofic(path: str | Path) -> SoficPresentation:
    doc = load(path)
    if not isinstance(doc, SoficPresentation):
        raise InputError("expected a sofic presentation (missing local_map)", str(path))
    return doc


def to_document(obj: Document) -> dict[str, Any]:
    if isinstance(obj, WangTileset):
        return {"tiles": [{"n": t.n, "e": t.e, "s": t.s, "w": t.w} for t in obj.tiles]}
    base = obj.base if isinstance(obj, SoficPresentation) else obj
    doc: dict[str, Any] = {}
    if base.comment is not None:
        doc["comment"] = base.comment
    doc["group"] = base.group.descriptor()
    doc["alphabet"] = list(base.alphabet)
    doc["forbidden"] = [{"words": list(p.words), "values": list(p.values)} for p in base.forbidden]
    if isinstance(obj, SoficPresentation):
        lm = obj.local_map
        doc["local_map"] = {
            "domain_words": list(lm.domain_words),
            "codomain": list(lm.codomain),
            "table": [{"input": list(k), "output": v} for k, v in lm.table],
        }
    return doc


def _compact(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def _dump_list(items: list, indent: str) -> str:
    if not items:
        return "[]"
    inner = ",\n".join(indent + "  " + _compact(x) for x in items)
    return "[\n" + inner + "\n" + indent + "]"


def dumps(obj: Document) -> str:
    """Canonical text of a presentation, newline terminated."""
    doc = to_document(obj)
    lines = []
    for key, value in doc.items():
        if key in ("forbidden", "tiles"):
            text = _dump_list(value, "  ")
        elif key == "local_map":
            sub = [
                f'    "domain_words": {_compact(value["domain_words"])}',
                f'    "codomain": {_compact(value["codomain"])}',
                f'    "table": {_dump_list(value["table"], "    ")}',
            ]
            text = "{\n" + ",\n".join(sub) + "\n  }"
        else:
            text = _compact(value)
        lines.append(f"  {json.dumps(key)}: {text}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def digest(obj: Document) -> str:
    """Short content hash of the canonical form (comments excluded)."""
    doc = to_document(obj)
    doc.pop("comment", None)
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()[:16]
