"""Split C-family sources into per-function units and diff them.

Units are found heuristically: a ``{`` opens a unit when the text before it
looks like a function or method signature and no unit is already open. The
scanner skips string/char literals and comments, so braces inside them do not
count. This is not a parser; it only has to agree with how a person would
cut a file into one file per method.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .errors import SourceError

log = logging.getLogger(__name__)

SOURCE_SUFFIXES = frozenset({".java", ".c", ".h", ".cc", ".cpp", ".cxx", ".hpp", ".cs", ".js", ".ts", ".go", ".php"})

_CONTROL = frozenset(
    {"if", "for", "while", "switch", "catch", "synchronized", "try", "else", "do", "return",
     "new", "sizeof", "foreach", "using", "lock", "finally"}
)
_SIGNATURE = re.compile(
    r"(?P<name>[A-Za-z_$][\w$]*)\s*\((?P<params>[^;{}]*)\)\s*"
    r"(?:const\s*)?(?:noexcept\s*)?(?:throws\s+[\w$.,\s]+)?$",
    re.S,
)
_TYPE_DECL = re.compile(r"\b(class|interface|enum|record|namespace|@interface)\b")
_ANNOTATION = re.compile(r"@\s*[\w$.]+(?:\s*\((?:[^()\"]|\"(?:\\.|[^\"\\])*\")*\))?")
_WEBMETHOD = re.compile(r"@\s*(?:javax\.jws\.)?WebMethod\s*\((?P<args>(?:[^()\"]|\"(?:\\.|[^\"\\])*\")*)\)")
_OPNAME = re.compile(r"operationName\s*=\s*\"(?P<name>(?:\\.|[^\"\\])*)\"")


@dataclass(frozen=True)
class CodeUnit:
    name: str
    body: tuple[str, ...]
    source_path: str
    line: int = 1  # first line of the unit in its file

    @property
    def text(self) -> str:
        return "\n".join(self.body)


@dataclass(frozen=True)
class UnitChangeSet:
    changed: frozenset[str]
    added: frozenset[str]
    removed: frozenset[str]
    hunks: dict[str, tuple["Hunk", ...]] = field(default_factory=dict, compare=False, hash=False)

    @property
    def empty(self) -> bool:
        return not (self.changed or self.added or self.removed)

    def to_json(self) -> dict:
        return {
            "changed": sorted(self.changed),
            "added": sorted(self.added),
            "removed": sorted(self.removed),
            "hunks": {k: [h.to_json() for h in v] for k, v in sorted(self.hunks.items())},
        }


# --------------------------------------------------------------------------
# lexical scan


def _code_mask(text: str) -> str:
    """Copy of ``text`` with comments, directives and literal contents blanked out.

    Newlines and offsets are preserved, so positions in the mask map 1:1 onto
    the source. String quotes are kept so annotations stay recognisable.
    """
    out = list(text)
    i, n = 0, len(text)
    line_start = True
    while i < n:
        ch = text[i]
        nxt = text[i + 1] if i + 1 < n else ""
        if ch == "#" and line_start:
            # preprocessor directive, with backslash continuations
            j = i
            while True:
                j = text.find("\n", j)
                if j < 0 or text[j - 1] != "\\":
                    break
                j += 1
            j = n if j < 0 else j
            for k in range(i, j):
                if out[k] != "\n":
                    out[k] = " "
            i = j
            continue
        if ch == "\n":
            line_start = True
        elif ch not in " \t\r":
            line_start = False
        if ch == "/" and nxt == "/":
            j = text.find("\n", i)
            j = n if j < 0 else j
            for k in range(i, j):
                out[k] = " "
            i = j
        elif ch == "/" and nxt == "*":
            j = text.find("*/", i + 2)
            j = n if j < 0 else j + 2
            for k in range(i, j):
                if out[k] != "\n":
                    out[k] = " "
            i = j
        elif ch in "\"'":
            j = i + 1
            while j < n and text[j] != ch and text[j] != "\n":
                j += 2 if text[j] == "\\" else 1
            for k in range(i + 1, min(j, n)):
                out[k] = "_"
            i = j + 1
        else:
            i += 1
    return "".join(out)


def _unit_name(header: str, masked_header: str) -> str | None:
    if "(" not in masked_header:
        return None
    # the mask keeps offsets but blanks literals, so strings cannot fake a signature
    stripped = _ANNOTATION.sub(" ", masked_header).strip()
    if "=" in stripped or _TYPE_DECL.search(stripped) or re.search(r"\bnew\b", stripped):
        return None
    m = _SIGNATURE.search(stripped)
    if not m or m.group("name") in _CONTROL:
        return None
    web = _WEBMETHOD.search(header)
    if web:
        alias = _OPNAME.search(web.group("args"))
        if alias and alias.group("name"):
            return alias.group("name")
    return m.group("name")


def split_source(text: str, path: str = "<string>") -> list[CodeUnit]:
    """Top-level function/method units of one source file."""
    mask = _code_mask(text)
    line_starts = [0] + [i + 1 for i, c in enumerate(text) if c == "\n"]
    lines = text.split("\n")

    def line_of(offset: int) -> int:
        lo, hi = 0, len(line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if line_starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return lo

    units: list[CodeUnit] = []
    depth = 0
    boundary = 0  # start of the text that may form the next header
    open_unit: tuple[str, int, int] | None = None  # name, start line, depth at open
    for i, ch in enumerate(mask):
        if ch == "{":
            if open_unit is None:
                name = _unit_name(text[boundary:i], mask[boundary:i])
                if name is not None:
                    seg = mask[boundary:i]
                    first = boundary + (len(seg) - len(seg.lstrip()))
                    open_unit = (name, line_of(first), depth)
            depth += 1
            boundary = i + 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise SourceError(f"{path}:{line_of(i) + 1}: unbalanced '}}'")
            if open_unit is not None and depth == open_unit[2]:
                name, start, _ = open_unit
                end = line_of(i)
                units.append(CodeUnit(name, tuple(lines[start:end + 1]), path, start + 1))
                open_unit = None
            boundary = i + 1
        elif ch == ";":
            boundary = i + 1
    if depth != 0:
        raise SourceError(f"{path}: unbalanced braces ({depth} unclosed)")
    return units


# --------------------------------------------------------------------------
# snapshots


def _qualify(found: list[tuple[str, CodeUnit]]) -> dict[str, CodeUnit]:
    """Give every unit a unique key; colliding names are qualified by path."""
    by_name: dict[str, list[tuple[str, CodeUnit]]] = {}
    for rel, unit in found:
        by_name.setdefault(unit.name, []).append((rel, unit))
    out: dict[str, CodeUnit] = {}
    for name, group in by_name.items():
        if len(group) == 1:
            out[name] = group[0][1]
            continue
        counts: dict[str, int] = {}
        for rel, unit in group:
            counts[rel] = counts.get(rel, 0) + 1
            key = f"{rel}::{name}" if counts[rel] == 1 else f"{rel}::{name}#{counts[rel]}"
            out[key] = CodeUnit(key, unit.body, unit.source_path, unit.line)
        log.warning("unit name %r defined %d times; qualified by path", name, len(group))
    return dict(sorted(out.items()))


def _files(root: Path, suffixes: Iterable[str] | None) -> list[Path]:
    if not root.is_dir():
        raise SourceError(f"{root}: not a directory")
    wanted = None if suffixes is None else {s.lower() for s in suffixes}
    return sorted(
        p for p in root.rglob("*")
        if p.is_file() and not p.name.startswith(".") and (wanted is None or p.suffix.lower() in wanted)
    )


def separate_units(
    source_tree: str | Path,
    errors: list[SourceError] | None = None,
    suffixes: Iterable[str] = SOURCE_SUFFIXES,
) -> dict[str, CodeUnit]:
    """Map unit name -> CodeUnit for every source file under ``source_tree``.

    Files that cannot be split are logged, appended to ``errors`` when given,
    and skipped.
    """
    root = Path(source_tree)
    found = []
    for path in _files(root, suffixes):
        rel = path.relative_to(root).as_posix()
        try:
            text = path.read_text(encoding="utf-8", errors="replace")
            units = split_source(text, rel)
        except SourceError as exc:
            log.warning("skipping %s", exc)
            if errors is not None:
                errors.append(exc)
            continue
        found.extend((rel, u) for u in units)
    return _qualify(found)


def load_units_dir(units_dir: str | Path) -> dict[str, CodeUnit]:
    """Pre-separated units: one file per unit, named after the file stem."""
    root = Path(units_dir)
    found = []
    for path in _files(root, None):
        rel = path.relative_to(root).as_posix()
        text = path.read_text(encoding="utf-8", errors="replace")
        body = text.split("\n")
        if body and body[-1] == "":
            body.pop()
        found.append((rel, CodeUnit(path.stem, tuple(body), rel)))
    return _qualify(found)


# --------------------------------------------------------------------------
# line diff


@dataclass(frozen=True)
class Hunk:
    """Replace ``old[old_start:old_end]`` by ``new[new_start:new_end]`` (0-based)."""

    old_start: int
    old_end: int
    new_start: int
    new_end: int

    def to_json(self) -> dict:
        return {"old": [self.old_start, self.old_end], "new": [self.new_start, self.new_end]}


def lcs_pairs(a: list[str], b: list[str]) -> list[tuple[int, int]]:
    """Index pairs of one longest common subsequence (Myers, O((N+M)D))."""
    n, m = len(a), len(b)
    # trim the common prefix/suffix first; it is the usual case for code edits
    pre = 0
    while pre < n and pre < m and a[pre] == b[pre]:
        pre += 1
    suf = 0
    while suf < n - pre and suf < m - pre and a[n - 1 - suf] == b[m - 1 - suf]:
        suf += 1
    mid = _myers(a[pre:n - suf], b[pre:m - suf])
    return (
        [(i, i) for i in range(pre)]
        + [(i + pre, j + pre) for i, j in mid]
        + [(n - suf + k, m - suf + k) for k in range(suf)]
    )


def _myers(a: list[str], b: list[str]) -> list[tuple[int, int]]:
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return []
    maxd = n + m
    offset = maxd
    v = [0] * (2 * maxd + 2)
    trace = []
    for d in range(maxd + 1):
        trace.append(v[:])
        for k in range(-d, d + 1, 2):
            if k == -d or (k != d and v[offset + k - 1] < v[offset + k + 1]):
                x = v[offset + k + 1]
            else:
                x = v[offset + k - 1] + 1
            y = x - k
            while x < n and y < m and a[x] == b[y]:
                x += 1
                y += 1
            v[offset + k] = x
            if x >= n and y >= m:
                return _backtrack(trace, d, n, m, offset)
    raise AssertionError("unreachable")


def _backtrack(trace, d, x, y, offset) -> list[tuple[int, int]]:
    pairs = []
    for dd in range(d, 0, -1):
        v = trace[dd]
        k = x - y
        if k == -dd or (k != dd and v[offset + k - 1] < v[offset + k + 1]):
            pk = k + 1
        else:
            pk = k - 1
        px = v[offset + pk]
        py = px - pk
        while x > px and y > py:
            x, y = x - 1, y - 1
            pairs.append((x, y))
        x, y = px, py
    while x > 0 and y > 0:
        x, y = x - 1, y - 1
        pairs.append((x, y))
    pairs.reverse()
    return pairs


def line_diff(old: list[str], new: list[str]) -> list[Hunk]:
    a = [s.rstrip() for s in old]
    b = [s.rstrip() for s in new]
    hunks = []
    i = j = 0
    for pi, pj in [*lcs_pairs(a, b), (len(a), len(b))]:
        if pi > i or pj > j:
            hunks.append(Hunk(i, pi, j, pj))
        i, j = pi + 1, pj + 1
    return hunks


def diff_units(old_units: Mapping[str, CodeUnit], new_units: Mapping[str, CodeUnit]) -> UnitChangeSet:
    changed, hunks = set(), {}
    for name in old_units.keys() & new_units.keys():
        h = line_diff(list(old_units[name].body), list(new_units[name].body))
        if h:
            changed.add(name)
            hunks[name] = tuple(h)
    return UnitChangeSet(
        changed=frozenset(changed),
        added=frozenset(new_units.keys() - old_units.keys()),
        removed=frozenset(old_units.keys() - new_units.keys()),
        hunks=hunks,
    )
