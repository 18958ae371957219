"""Finitely presented groups: words, relations and a small text format.

The text format is line oriented::

    # comment
    group braid3
    gen a b
    rel braid: a b a = b a b
    rel (a b)^3 =

A word is a whitespace separated sequence of atoms ``x``, ``x^k`` or
``(word)^k`` with ``k`` a nonzero integer.  An empty side is the identity.
Words are stored exactly as written (after expanding powers); nothing is
reduced behind the caller's back.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Letter = tuple[int, int]
Word = tuple[Letter, ...]

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_DIRECTIVE_RE = re.compile(r"\s*(\S+)\s*")
_LABEL_RE = re.compile(r"\s*([^\s:=()^]+)\s*:")
_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<pow>\^\s*[+-]?\d+)|(?P<open>\()|(?P<close>\))|(?P<bad>\S))")


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    label: str | None = None

    def swapped(self) -> Relation:
        return Relation(self.rhs, self.lhs, self.label)


@dataclass(frozen=True)
class GroupPresentation:
    name: str
    generators: tuple[str, ...]
    relations: tuple[Relation, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(self.relations))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.generators)})

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def word(self, text: str) -> Word:
        """Parse a word over this presentation's generators."""
        return _parse_word(text, self._index, 1, 0)

    def relation(self, label: str) -> Relation:
        for r in self.relations:
            if r.label == label:
                return r
        raise KeyError(label)


def free_reduce(w: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for x, e in w:
        if out and out[-1][0] == x and out[-1][1] == -e:
            out.pop()
        else:
            out.append((x, e))
    return tuple(out)


def word_inverse(w: Sequence[Letter]) -> Word:
    return tuple((x, -e) for x, e in reversed(w))


def word_power(w: Sequence[Letter], k: int) -> Word:
    if k < 0:
        w, k = word_inverse(w), -k
    return tuple(w) * k


def validate(p: GroupPresentation) -> list[str]:
    """Problems with ``p``; an empty list means the presentation is sound."""
    issues = []
    seen = set()
    for name in p.generators:
        if not NAME_RE.fullmatch(name):
            issues.append(f"invalid generator name {name!r}")
        if name in seen:
            issues.append(f"duplicate generator {name!r}")
        seen.add(name)
    n = len(p.generators)
    for k, r in enumerate(p.relations):
        tag = r.label or f"#{k + 1}"
        for side in (r.lhs, r.rhs):
            for x, e in side:
                if not (0 <= x < n) or e not in (1, -1):
                    issues.append(f"relation {tag}: bad letter ({x}, {e})")
                    break
        if not r.lhs and not r.rhs:
            issues.append(f"relation {tag}: both sides are empty")
    return issues


# ---------------------------------------------------------------------------
# parsing


def _parse_word(text: str, index: dict, line: int, offset: int) -> Word:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        col = offset + m.start(m.lastgroup) + 1
        if m.lastgroup == "bad":
            raise PresentationSyntaxError(f"unexpected character {m.group('bad')!r}", line, col)
        tokens.append((m.lastgroup, m.group(m.lastgroup), col))
        pos = m.end()

    def exponent(tok: str, col: int) -> int:
        k = int(tok[1:].strip())
        if k == 0:
            raise PresentationSyntaxError("zero exponent", line, col)
        return k

    stack: list[tuple[list[Letter], int]] = [([], 0)]
    i = 0
    while i < len(tokens):
        kind, val, col = tokens[i]
        if kind == "name":
            if val not in index:
                raise PresentationSyntaxError(f"undeclared generator `{val}`", line, col)
            k = 1
            if i + 1 < len(tokens) and tokens[i + 1][0] == "pow":
                k = exponent(tokens[i + 1][1], tokens[i + 1][2])
                i += 1
            stack[-1][0].extend(word_power(((index[val], 1),), k))
        elif kind == "open":
            stack.append(([], col))
        elif kind == "close":
            if len(stack) == 1:
                raise PresentationSyntaxError("unbalanced ')'", line, col)
            inner, _ = stack.pop()
            k = 1
            if i + 1 < len(tokens) and tokens[i + 1][0] == "pow":
                k = exponent(tokens[i + 1][1], tokens[i + 1][2])
                i += 1
            stack[-1][0].extend(word_power(inner, k))
        else:
            raise PresentationSyntaxError("exponent without a base", line, col)
        i += 1
    if len(stack) > 1:
        raise PresentationSyntaxError("unclosed '('", line, stack[-1][1])
    return tuple(stack[0][0])


def parse_presentation(text: str) -> GroupPresentation:
    name = "G"
    seen_group = False
    gens: list[str] = []
    index: dict[str, int] = {}
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        m = _DIRECTIVE_RE.match(line)
        head, rest, base = m.group(1), line[m.end():].rstrip(), m.end()
        if head == "group":
            if seen_group:
                raise PresentationSyntaxError("duplicate 'group' line", lineno, 1)
            if not NAME_RE.fullmatch(rest.strip()):
                raise PresentationSyntaxError(f"invalid group name {rest.strip()!r}", lineno, base + 1)
            name = rest.strip()
            seen_group = True
        elif head == "gen":
            for m in re.finditer(r"\S+", rest):
                tok = m.group()
                col = base + m.start() + 1
                if not NAME_RE.fullmatch(tok):
                    raise PresentationSyntaxError(f"invalid generator name {tok!r}", lineno, col)
                if tok in index:
                    raise PresentationSyntaxError(f"duplicate generator `{tok}`", lineno, col)
                index[tok] = len(gens)
                gens.append(tok)
        elif head == "rel":
            label = None
            m = _LABEL_RE.match(rest)
            if m:
                label = m.group(1)
                body_off = m.end()
            else:
                body_off = 0
            body = rest[body_off:]
            if body.count("=") != 1:
                raise PresentationSyntaxError("relation needs exactly one '='", lineno, base + 1)
            left, right = body.split("=")
            lhs = _parse_word(left, index, lineno, base + body_off)
            rhs = _parse_word(right, index, lineno, base + body_off + len(left) + 1)
            relations.append(Relation(lhs, rhs, label))
        else:
            raise PresentationSyntaxError(f"unknown directive {head!r}", lineno, m.start(1) + 1)
    p = GroupPresentation(name, tuple(gens), tuple(relations))
    issues = validate(p)
    if issues:
        raise PresentationError("; ".join(issues))
    return p


# ---------------------------------------------------------------------------
# formatting


def format_word(w: Sequence[Letter], generators: Sequence[str]) -> str:
    """Render a word, folding runs of one letter into powers."""
    parts = []
    i = 0
    while i < len(w):
        x, e = w[i]
        j = i
        while j < len(w) and w[j] == (x, e):
            j += 1
        k = (j - i) * e
        parts.append(generators[x] if k == 1 else f"{generators[x]}^{k}")
        i = j
    return " ".join(parts)


def format_presentation(p: GroupPresentation) -> str:
    lines = [f"group {p.name}"]
    per_line = 16
    for i in range(0, len(p.generators), per_line):
        lines.append("gen " + " ".join(p.generators[i:i + per_line]))
    for r in p.relations:
        label = f"{r.label}: " if r.label else ""
        rhs = format_word(r.rhs, p.generators)
        lines.append(f"rel {label}{format_word(r.lhs, p.generators)} = {rhs}".rstrip())
    return "\n".join(lines) + "\n"


def make_presentation(name: str, generators: Iterable[str],
                      relations: Iterable[tuple[str, str, str | None]]) -> GroupPresentation:
    """Build a presentation from ``(lhs, rhs, label)`` word strings."""
    gens = tuple(generators)
    index = {g: i for i, g in enumerate(gens)}
    rels = [Relation(_parse_word(l, index, 1, 0), _parse_word(r, index, 1, 0), lab) for l, r, lab in relations]
    p = GroupPresentation(name, gens, tuple(rels))
    issues = validate(p)
    if issues:
        raise PresentationError("; ".join(issues))
    return p


def presentation_to_json(p: GroupPresentation) -> dict:
    return {
        "name": p.name,
        "generators": list(p.generators),
        "relations": [
            {"label": r.label, "lhs": format_word(r.lhs, p.generators), "rhs": format_word(r.rhs, p.generators)}
            for r in p.relations
        ],
    }


def presentation_from_json(doc: dict) -> GroupPresentation:
    try:
        rels = [(r["lhs"], r["rhs"], r.get("label")) for r in doc["relations"]]
        return make_presentation(doc.get("name", "G"), doc["generators"], rels)
    except (KeyError, TypeError) as exc:
        raise PresentationError(f"malformed presentation document: {exc}") from None


def load_presentation(path: str) -> GroupPresentation:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        try:
            return presentation_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise PresentationError(f"{path}: {exc}") from None
    return parse_presentation(text)
