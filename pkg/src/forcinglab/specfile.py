"""Reader and writer for ``.fs`` forcing spec files.

Example::

    # binary tree of height 2
    poset {
      elements: e a b aa ab ba bb
      order: aa<a ab<a ba<b bb<b a<e b<e
    }
    name zero { }
    name s0 { zero@a }
    name t { zero@e; s0@e }
    set two = {{},{{}}}
    default t

``p<q`` declares ``p <= q`` (p stronger); the reflexive-transitive closure
is taken. A name body may only mention names defined above it. ``default``
is optional and picks the name used when none is given explicitly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .config import DEFAULT_CAPS, Caps
from .errors import DuplicateIdError, ParseError, UnknownIdError
from .hf import HfSet, format_hf, parse_hf
from .names import PName
from .order import Quasiorder, build_quasiorder

__all__ = ["ForcingSpec", "parse_spec", "format_spec", "load_spec"]

_TOKEN = re.compile(r"\s*(?:(#[^\n]*)|([A-Za-z0-9_.']+)|([{}:<@;=,]))")


@dataclass
class ForcingSpec:
    poset: Quasiorder
    names: dict[str, PName] = field(default_factory=dict)
    sets: dict[str, HfSet] = field(default_factory=dict)
    default: str | None = None

    def name(self, ident: str | None = None) -> PName:
        """Look up a name; with no argument, the designated default.

        Without a ``default`` line, ``t`` is used if defined, else the last name.
        """
        if ident is None:
            if self.default is not None:
                ident = self.default
            elif "t" in self.names:
                ident = "t"
            elif self.names:
                ident = list(self.names)[-1]
            else:
                raise UnknownIdError("the spec file defines no names")
        try:
            return self.names[ident]
        except KeyError:
            raise UnknownIdError(f"unknown name {ident!r}") from None


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                rest = text[pos:]
                if rest.strip() == "":
                    break
                bad = pos + len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad, *self.where(bad))
            if m.group(2) or m.group(3):
                start = m.start(2) if m.group(2) else m.start(3)
                self.toks.append((m.group(2) or m.group(3), start))
            pos = m.end()
        self.i = 0

    def where(self, pos):
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg, pos=None):
        if pos is None:
            pos = self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)
        return ParseError(msg, pos, *self.where(pos))

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def next(self, what="token"):
        if self.i >= len(self.toks):
            raise self.error(f"unexpected end of input, expected {what}")
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok, pos = self.next(repr(value))
        if tok != value:
            raise self.error(f"expected {value!r}, got {tok!r}", pos)
        return pos

    def ident(self, what="identifier"):
        tok, pos = self.next(what)
        if not re.fullmatch(r"[A-Za-z0-9_.']+", tok):
            raise self.error(f"expected {what}, got {tok!r}", pos)
        return tok, pos


def _braces(tokens: _Tokens) -> HfSet:
    start = tokens.pos()
    depth = 0
    parts = []
    while True:
        tok, pos = tokens.next("set literal")
        if tok not in "{},":
            raise tokens.error(f"unexpected {tok!r} in set literal", pos)
        parts.append(tok)
        depth += {"{": 1, "}": -1}.get(tok, 0)
        if depth < 0:
            raise tokens.error("unbalanced '}' in set literal", pos)
        if depth == 0:
            break
    try:
        return parse_hf("".join(parts))
    except ParseError as exc:
        raise tokens.error(f"bad set literal: {exc}", start) from None


def parse_spec(text: str, caps: Caps = DEFAULT_CAPS) -> ForcingSpec:
    tokens = _Tokens(text)
    poset = None
    names: dict[str, PName] = {}
    sets: dict[str, HfSet] = {}
    default = None
    default_pos = 0
    while tokens.peek() is not None:
        kw, kw_pos = tokens.ident("'poset', 'name', 'set' or 'default'")
        if kw == "poset":
            if poset is not None:
                raise tokens.error("poset declared twice", kw_pos)
            tokens.expect("{")
            elements, gens = [], []
            seen_elements = False
            while tokens.peek() != "}":
                section, spos = tokens.ident("'elements' or 'order'")
                tokens.expect(":")
                if section == "elements":
                    seen_elements = True
                    while tokens.peek() not in (None, "}", ":") and (
                        tokens.i + 1 >= len(tokens.toks) or tokens.toks[tokens.i + 1][0] != ":"
                    ):
                        el, epos = tokens.ident("condition id")
                        if el in elements:
                            raise DuplicateIdError(
                                f"duplicate condition id {el!r} (line {tokens.where(epos)[0]})"
                            )
                        elements.append(el)
                elif section == "order":
                    while tokens.peek() not in (None, "}") and (
                        tokens.i + 1 >= len(tokens.toks) or tokens.toks[tokens.i + 1][0] != ":"
                    ):
                        if tokens.peek() in (",", ";"):
                            tokens.next()
                            continue
                        p, ppos = tokens.ident("condition id")
                        tokens.expect("<")
                        r, rpos = tokens.ident("condition id")
                        for ident, ipos in ((p, ppos), (r, rpos)):
                            if ident not in elements:
                                line, col = tokens.where(ipos)
                                raise UnknownIdError(
                                    f"unknown condition id {ident!r} (line {line}, column {col})"
                                )
                        gens.append((p, r))
                else:
                    raise tokens.error(f"unknown poset section {section!r}", spos)
            tokens.expect("}")
            if not seen_elements or not elements:
                raise tokens.error("poset needs a nonempty 'elements:' section", kw_pos)
            poset = build_quasiorder(elements, gens, caps)
        elif kw == "name":
            if poset is None:
                raise tokens.error("'name' before 'poset'", kw_pos)
            ident, ipos = tokens.ident("name id")
            if ident in names:
                raise DuplicateIdError(f"duplicate name {ident!r} (line {tokens.where(ipos)[0]})")
            tokens.expect("{")
            entries = []
            while tokens.peek() != "}":
                child, cpos = tokens.ident("name id")
                tokens.expect("@")
                cond, dpos = tokens.ident("condition id")
                line, col = tokens.where(cpos)
                if child == ident:
                    raise ParseError(f"cyclic name reference in {ident!r}", cpos, line, col)
                if child not in names:
                    raise UnknownIdError(f"unknown name {child!r} (line {line}, column {col})")
                if cond not in poset.index:
                    line, col = tokens.where(dpos)
                    raise UnknownIdError(
                        f"unknown condition id {cond!r} (line {line}, column {col})"
                    )
                entries.append((names[child], cond))
                if tokens.peek() == ";":
                    tokens.next()
                elif tokens.peek() != "}":
                    raise tokens.error("expected ';' or '}' in name body")
            tokens.expect("}")
            names[ident] = PName(entries, label=ident)
        elif kw == "set":
            ident, ipos = tokens.ident("set id")
            if ident in sets:
                raise DuplicateIdError(f"duplicate set {ident!r} (line {tokens.where(ipos)[0]})")
            tokens.expect("=")
            sets[ident] = _braces(tokens)
        elif kw == "default":
            default, default_pos = tokens.ident("name id")
        else:
            raise tokens.error(f"unknown statement {kw!r}", kw_pos)
    if poset is None:
        raise tokens.error("missing 'poset' block", 0)
    if default is not None and default not in names:
        line, col = tokens.where(default_pos)
        raise UnknownIdError(f"unknown name {default!r} (line {line}, column {col})")
    return ForcingSpec(poset, names, sets, default)


def load_spec(path, caps: Caps = DEFAULT_CAPS) -> ForcingSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read(), caps)


def format_spec(spec: ForcingSpec) -> str:
    q = spec.poset
    lines = ["poset {", "  elements: " + " ".join(q.elements)]
    pairs = [
        f"{p}<{r}" for r in q.elements for p in sorted(q.below(r), key=q.idx) if p != r
    ]
    if pairs:
        lines.append("  order: " + " ".join(pairs))
    lines.append("}")
    label = {}
    for ident, s in spec.names.items():
        body = "; ".join(f"{label[c]}@{p}" for c, p in s.entries)
        lines.append(f"name {ident} {{ {body} }}" if body else f"name {ident} {{ }}")
        label.setdefault(s, ident)
    for ident, x in spec.sets.items():
        lines.append(f"set {ident} = {format_hf(x)}")
    if spec.default is not None:
        lines.append(f"default {spec.default}")
    return "\n".join(lines) + "\n"
