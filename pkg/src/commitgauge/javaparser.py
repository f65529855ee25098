"""Tolerant declaration-level parser for Java source text.

The parser extracts packages, imports, type declarations, fields and method
headers, plus token-level statistics for method bodies. It is not a full
grammar: bodies are scanned, not parsed into ASTs, and anything it cannot
recognize is skipped with a warning. parse_source never raises.
"""

from __future__ import annotations

import hashlib
from typing import Optional, Sequence

from .javamodel import (
    BodyStats,
    FieldDecl,
    ImportDecl,
    MethodDecl,
    SourceModel,
    TypeDecl,
)
from .javatokens import (
    IDENT,
    JAVA_KEYWORDS,
    MODIFIER_KEYWORDS,
    PUNCT,
    STRING,
    Tok,
    string_literal_value,
    tokenize,
)

_TYPE_KIND_KEYWORDS = frozenset({"class", "interface", "enum", "record"})

# decision points for the cyclomatic count; `do` is deliberately absent
# because its mandatory trailing `while` token already contributes one
_DECISION_IDENTS = frozenset({"if", "for", "while", "case", "catch"})

_NOT_CALL_NAMES = frozenset({
    "if", "for", "while", "switch", "catch", "synchronized", "new",
    "return", "throw", "throws", "assert", "this", "super", "do", "else",
    "yield", "case",
})

_NESTING_SET = frozenset({"if", "for", "while", "do", "switch", "try"})


# ---------------------------------------------------------------------------
# body-token operations
# ---------------------------------------------------------------------------

def _is_ternary(toks: Sequence[Tok], i: int) -> bool:
    # generic wildcards sit between angle brackets or before extends/super
    prev = toks[i - 1].text if i > 0 else None
    nxt = toks[i + 1].text if i + 1 < len(toks) else None
    if prev in ("<", ","):
        return False
    if nxt in ("extends", "super", ">", ",", ")"):
        return False
    return True


def method_complexity(body_tokens: Sequence[Tok]) -> int:
    """1 + decision points (if/for/while/case/catch, ternary, &&, ||)."""
    toks = body_tokens if isinstance(body_tokens, list) else list(body_tokens)
    count = 1
    for i, t in enumerate(toks):
        if t.kind == IDENT:
            if t.text in _DECISION_IDENTS:
                count += 1
        elif t.kind == PUNCT:
            if t.text in ("&&", "||"):
                count += 1
            elif t.text == "?" and _is_ternary(toks, i):
                count += 1
    return count


class _NestScanner:
    """Statement-level walk that tracks control-structure nesting depth."""

    def __init__(self, toks: Sequence[Tok]):
        self.toks = toks if isinstance(toks, list) else list(toks)
        self.n = len(self.toks)
        self.max_depth = 0

    def run(self) -> int:
        i = 0
        while i < self.n:
            i = self._statement(i, 0)
        return self.max_depth

    def _bump(self, d: int) -> None:
        if d > self.max_depth:
            self.max_depth = d

    def _text(self, i: int) -> Optional[str]:
        return self.toks[i].text if 0 <= i < self.n else None

    def _block(self, i: int, d: int) -> int:
        # i is just past '{'; consume statements until the matching '}'
        while i < self.n:
            if self._text(i) == "}":
                return i + 1
            i = self._statement(i, d)
        return i

    def _parens(self, i: int, d: int) -> int:
        if self._text(i) != "(":
            return i
        depth = 0
        while i < self.n:
            txt = self.toks[i].text
            if txt == "(":
                depth += 1
            elif txt == ")":
                depth -= 1
                if depth == 0:
                    return i + 1
            elif txt == "{":
                # lambda or anonymous class inside the parens
                i = self._block(i + 1, d)
                continue
            i += 1
        return i

    def _statement(self, i: int, d: int) -> int:
        txt = self._text(i)
        if txt is None:
            return self.n
        if txt == ";":
            return i + 1
        if txt == "}":
            return i + 1
        if txt == "{":
            return self._block(i + 1, d)
        if txt == "if":
            self._bump(d + 1)
            i = self._parens(i + 1, d + 1)
            if i < self.n:
                i = self._statement(i, d + 1)
            if self._text(i) == "else":
                i += 1
                if self._text(i) == "if":
                    i = self._statement(i, d)  # else-if chains stay level
                elif i < self.n:
                    i = self._statement(i, d + 1)
            return i
        if txt in ("for", "while"):
            self._bump(d + 1)
            i = self._parens(i + 1, d + 1)
            if i < self.n:
                i = self._statement(i, d + 1)
            return i
        if txt == "do":
            self._bump(d + 1)
            i = self._statement(i + 1, d + 1)
            if self._text(i) == "while":
                i = self._parens(i + 1, d + 1)
                if self._text(i) == ";":
                    i += 1
            return i
        if txt == "switch":
            self._bump(d + 1)
            i = self._parens(i + 1, d + 1)
            if self._text(i) == "{":
                i = self._block(i + 1, d + 1)
            return i
        if txt in ("case", "default") and self._is_label(i):
            i += 1
            while i < self.n and self.toks[i].text not in (":", "->", ";", "}"):
                if self.toks[i].text == "(":
                    i = self._parens(i, d)
                    continue
                i += 1
            if self._text(i) == "->":
                return self._statement(i + 1, d)
            return i + 1 if i < self.n else i
        if txt == "try":
            i += 1
            if self._text(i) == "(":
                i = self._parens(i, d + 1)
            self._bump(d + 1)
            if self._text(i) == "{":
                i = self._block(i + 1, d + 1)
            while self._text(i) == "catch":
                self._bump(d + 1)
                i = self._parens(i + 1, d + 1)
                if self._text(i) == "{":
                    i = self._block(i + 1, d + 1)
            if self._text(i) == "finally":
                self._bump(d + 1)
                i += 1
                if self._text(i) == "{":
                    i = self._block(i + 1, d + 1)
            return i
        tok = self.toks[i]
        if tok.kind == IDENT and tok.text not in JAVA_KEYWORDS \
                and self._text(i + 1) == ":":
            return i + 2  # label
        # expression statement / local declaration: consume to ';'
        while i < self.n:
            txt = self.toks[i].text
            if txt == ";":
                return i + 1
            if txt == "}":
                return i  # let the enclosing block see it
            if txt == "{":
                i = self._block(i + 1, d)
                continue
            if txt == "(":
                i = self._parens(i, d)
                continue
            i += 1
        return i

    def _is_label(self, i: int) -> bool:
        # `default` is also an interface-method modifier; only treat it (or
        # case) as a switch label when a ':' or '->' terminates it
        j = i + 1
        while j < self.n and self.toks[j].text not in (":", "->", ";", "{", "}"):
            j += 1
        return j < self.n and self.toks[j].text in (":", "->")


def max_nesting(body_tokens: Sequence[Tok]) -> int:
    """Deepest chain of nested control structures; plain blocks don't count."""
    return _NestScanner(body_tokens).run()


def body_hash(body_tokens: Sequence[Tok]) -> int:
    digest = hashlib.blake2b(
        "\x1f".join(t.text for t in body_tokens).encode("utf-8"),
        digest_size=8,
    ).digest()
    return int.from_bytes(digest, "big")


def _scan_references(toks: list[Tok]):
    """Collect called names, candidate type refs, bare/this-qualified names
    and `[this.]a = b;` assignment pairs from a body token stream."""
    called: set[str] = set()
    type_refs: set[str] = set()
    bare: set[str] = set()
    this_qualified: set[str] = set()
    statements = 0
    n = len(toks)
    for i, t in enumerate(toks):
        if t.kind == PUNCT and t.text == ";":
            statements += 1
            continue
        if t.kind != IDENT:
            continue
        txt = t.text
        if txt in JAVA_KEYWORDS:
            continue
        prev = toks[i - 1] if i > 0 else None
        nxt = toks[i + 1] if i + 1 < n else None
        is_call = nxt is not None and nxt.text == "("
        if prev is not None and prev.text == ".":
            # walk back across the dotted chain to find the qualifier root
            j = i - 1
            while j >= 1 and toks[j].text == "." and toks[j - 1].kind == IDENT:
                j -= 2
            root = toks[j + 1] if j + 1 < n else None
            preceded_by_new = j >= 0 and toks[j].text == "new"
            if preceded_by_new:
                if txt[0].isupper():
                    type_refs.add(txt)
            elif root is not None and root.text == "this" and i - 2 == j + 1 - 1:
                pass  # unreachable; kept for clarity
            elif i >= 2 and toks[i - 2].text == "this":
                if is_call:
                    called.add(txt)
                else:
                    this_qualified.add(txt)
            elif is_call:
                called.add(txt)
            continue
        if is_call:
            if prev is not None and prev.text == "new":
                if txt[0].isupper():
                    type_refs.add(txt)
            elif txt not in _NOT_CALL_NAMES:
                called.add(txt)
            continue
        if prev is not None and prev.text == "new" and txt[0].isupper():
            type_refs.add(txt)
            continue
        if txt[0].isupper():
            type_refs.add(txt)
        bare.add(txt)
    assignments = _scan_assignments(toks)
    return called, type_refs, bare, this_qualified, assignments, statements


def _scan_assignments(toks: list[Tok]) -> tuple[tuple[str, str], ...]:
    pairs: list[tuple[str, str]] = []
    n = len(toks)
    i = 0
    while i < n:
        if i > 0 and toks[i - 1].text not in (";", "{", "}"):
            i += 1
            continue
        j = i
        if j + 1 < n and toks[j].text == "this" and toks[j + 1].text == ".":
            j += 2
        if j >= n or toks[j].kind != IDENT or toks[j].text in JAVA_KEYWORDS:
            i += 1
            continue
        lhs = toks[j].text
        j += 1
        if j >= n or toks[j].text != "=":
            i += 1
            continue
        j += 1
        if j + 1 < n and toks[j].text == "this" and toks[j + 1].text == ".":
            j += 2
        if j < n and toks[j].kind == IDENT and toks[j].text not in JAVA_KEYWORDS \
                and j + 1 < n and toks[j + 1].text == ";":
            pairs.append((lhs, toks[j].text))
            i = j + 2
            continue
        i += 1
    return tuple(pairs)


def compute_body_stats(body_tokens: Sequence[Tok]) -> BodyStats:
    toks = body_tokens if isinstance(body_tokens, list) else list(body_tokens)
    called, type_refs, bare, this_qualified, assignments, statements = \
        _scan_references(toks)
    stats = BodyStats(
        cyclomatic=method_complexity(toks),
        max_nesting=max_nesting(toks),
        statement_count=statements,
        referenced_field_names=frozenset(),  # resolved once fields are known
        called_method_names=frozenset(called),
        body_hash=body_hash(toks),
        type_refs=frozenset(type_refs),
        simple_assignments=assignments,
    )
    stats._bare_names = frozenset(bare)              # type: ignore[attr-defined]
    stats._this_names = frozenset(this_qualified)    # type: ignore[attr-defined]
    return stats


# ---------------------------------------------------------------------------
# declaration parsing
# ---------------------------------------------------------------------------

def _join(tokens: Sequence[Tok]) -> str:
    return "".join(t.text for t in tokens)


def _raw_type_name(tokens: Sequence[Tok]) -> str:
    """Strip generic argument lists: List<String> -> List, int[] stays."""
    out: list[str] = []
    depth = 0
    for t in tokens:
        if t.text == "<":
            depth += 1
            continue
        if t.text == ">":
            depth = max(0, depth - 1)
            continue
        if depth == 0:
            out.append(t.text)
    return "".join(out)


class _Parser:
    def __init__(self, text: str, path: str):
        self.toks = tokenize(text)
        self.n = len(self.toks)
        self.path = path
        self.warnings: list[str] = []
        self.model = SourceModel(path=path)
        self.model.http_literal_count = sum(
            1 for t in self.toks
            if t.kind == STRING and string_literal_value(t.text).startswith(
                ("http://", "https://"))
        )

    # -- small helpers ------------------------------------------------------

    def _warn(self, line: int, message: str) -> None:
        self.warnings.append(f"{self.path}:{line}: {message}")

    def _text(self, i: int) -> Optional[str]:
        return self.toks[i].text if 0 <= i < self.n else None

    def _balanced(self, i: int, open_txt: str, close_txt: str) -> int:
        """Index just past the token closing the group opened at i."""
        depth = 0
        while i < self.n:
            txt = self.toks[i].text
            if txt == open_txt:
                depth += 1
            elif txt == close_txt:
                depth -= 1
                if depth == 0:
                    return i + 1
            i += 1
        return self.n

    def _collect_modifiers(self, i: int) -> tuple[set[str], int]:
        mods: set[str] = set()
        while i < self.n:
            t = self.toks[i]
            if t.kind == IDENT and t.text in MODIFIER_KEYWORDS:
                mods.add(t.text)
                i += 1
                continue
            if t.kind == IDENT and t.text == "non" and self._text(i + 1) == "-" \
                    and self._text(i + 2) == "sealed":
                mods.add("non-sealed")
                i += 3
                continue
            if t.text == "@" and i + 1 < self.n \
                    and self.toks[i + 1].kind == IDENT \
                    and self.toks[i + 1].text != "interface":
                j = i + 1
                simple = self.toks[j].text
                j += 1
                while j + 1 < self.n and self.toks[j].text == "." \
                        and self.toks[j + 1].kind == IDENT:
                    simple = self.toks[j + 1].text
                    j += 2
                mods.add("@" + simple)
                if self._text(j) == "(":
                    j = self._balanced(j, "(", ")")
                i = j
                continue
            break
        return mods, i

    def _parse_type_params(self, i: int) -> tuple[list[str], int]:
        # i sits on '<'
        names: list[str] = []
        depth = 0
        expect = True
        while i < self.n:
            txt = self.toks[i].text
            if txt == "<":
                depth += 1
                i += 1
                continue
            if txt == ">":
                depth -= 1
                i += 1
                if depth <= 0:
                    break
                continue
            if txt == "@":
                i += 2
                continue
            if depth == 1 and txt == ",":
                expect = True
                i += 1
                continue
            if depth == 1 and expect and self.toks[i].kind == IDENT \
                    and txt not in JAVA_KEYWORDS:
                names.append(txt)
                expect = False
            i += 1
        return names, i

    def _split_top_level(self, tokens: list[Tok], sep: str) -> list[list[Tok]]:
        parts: list[list[Tok]] = [[]]
        angle = paren = bracket = brace = 0
        for t in tokens:
            txt = t.text
            if txt == "<":
                angle += 1
            elif txt == ">":
                angle = max(0, angle - 1)
            elif txt == "(":
                paren += 1
            elif txt == ")":
                paren = max(0, paren - 1)
            elif txt == "[":
                bracket += 1
            elif txt == "]":
                bracket = max(0, bracket - 1)
            elif txt == "{":
                brace += 1
            elif txt == "}":
                brace = max(0, brace - 1)
            if txt == sep and angle == paren == bracket == brace == 0:
                parts.append([])
            else:
                parts[-1].append(t)
        return parts

    # -- compilation unit ----------------------------------------------------

    def parse(self) -> SourceModel:
        i = 0
        while i < self.n:
            if self._text(i) == ";":
                i += 1
                continue
            mods, j = self._collect_modifiers(i)
            txt = self._text(j)
            if txt is None:
                break
            if txt == "package" and not mods:
                i = self._parse_package(j)
            elif txt == "import" and not mods:
                i = self._parse_import(j)
            elif txt in _TYPE_KIND_KEYWORDS or (
                    txt == "@" and self._text(j + 1) == "interface"):
                decl, i = self._parse_type(j, mods)
                if decl is not None:
                    self.model.types.append(decl)
            else:
                self._warn(self.toks[j].line, "skipped unparseable tokens")
                i = self._sync_top(j)
        self.model.parse_warnings = self.warnings
        return self.model

    def _sync_top(self, i: int) -> int:
        while i < self.n:
            txt = self.toks[i].text
            if txt == ";":
                return i + 1
            if txt == "{":
                return self._balanced(i, "{", "}")
            if txt in _TYPE_KIND_KEYWORDS or txt in MODIFIER_KEYWORDS \
                    or txt in ("package", "import", "@"):
                return i
            i += 1
        return self.n

    def _parse_package(self, i: int) -> int:
        i += 1
        parts: list[str] = []
        while i < self.n and self.toks[i].text != ";":
            if self.toks[i].kind == IDENT:
                parts.append(self.toks[i].text)
            i += 1
        self.model.package_name = ".".join(parts)
        return i + 1

    def _parse_import(self, i: int) -> int:
        i += 1
        is_static = False
        if self._text(i) == "static":
            is_static = True
            i += 1
        parts: list[str] = []
        is_wildcard = False
        while i < self.n and self.toks[i].text != ";":
            t = self.toks[i]
            if t.kind == IDENT:
                parts.append(t.text)
            elif t.text == "*":
                is_wildcard = True
            i += 1
        if parts:
            self.model.imports.append(ImportDecl(
                qualified_name=".".join(parts),
                is_static=is_static,
                is_wildcard=is_wildcard,
            ))
        return i + 1

    # -- type declarations ----------------------------------------------------

    def _parse_type(self, i: int, mods: set[str]) -> tuple[Optional[TypeDecl], int]:
        start_line = self.toks[i].line
        txt = self.toks[i].text
        if txt == "@":
            kind = "annotation"
            i += 2
        else:
            kind = {"class": "class", "interface": "interface",
                    "enum": "enum", "record": "record"}[txt]
            i += 1
        if i >= self.n or self.toks[i].kind != IDENT:
            self._warn(start_line, f"{kind} declaration without a name")
            return None, self._sync_top(i)
        decl = TypeDecl(name=self.toks[i].text, kind=kind, modifiers=mods)
        i += 1
        if self._text(i) == "<":
            decl.type_params, i = self._parse_type_params(i)
        if kind == "record" and self._text(i) == "(":
            end = self._balanced(i, "(", ")")
            for name, _raw, full in self._parse_params(self.toks[i + 1:end - 1]):
                if name and all(f.name != name for f in decl.fields):
                    decl.fields.append(FieldDecl(name=name, type_name=full,
                                                 modifiers={"private", "final"}))
            i = end
        while self._text(i) in ("extends", "implements", "permits"):
            i += 1
            seg_start = i
            angle = 0
            while i < self.n:
                t = self.toks[i].text
                if t == "<":
                    angle += 1
                elif t == ">":
                    angle = max(0, angle - 1)
                elif angle == 0 and t in ("{", "extends", "implements",
                                          "permits", ";"):
                    break
                i += 1
            for part in self._split_top_level(list(self.toks[seg_start:i]), ","):
                if part:
                    decl.supertypes.append(_join(part))
        if self._text(i) != "{":
            self._warn(start_line, f"{kind} {decl.name}: body not found")
            self._finalize(decl)
            return decl, self._sync_top(i)
        end = self._balanced(i, "{", "}")
        body_lo, body_hi = i + 1, end - 1
        if kind == "enum":
            body_lo = self._parse_enum_constants(body_lo, body_hi, decl)
        self._parse_members(body_lo, body_hi, decl)
        decl.line_span = (start_line, self.toks[end - 1].line if end - 1 < self.n
                          else self.toks[-1].line if self.toks else start_line)
        self._finalize(decl)
        return decl, end

    def _parse_enum_constants(self, i: int, end: int, decl: TypeDecl) -> int:
        while i < end:
            txt = self.toks[i].text
            if txt == ";":
                return i + 1
            if txt == ",":
                i += 1
                continue
            if txt == "@":
                _, i = self._collect_modifiers(i)
                continue
            if self.toks[i].kind == IDENT and txt not in JAVA_KEYWORDS:
                name = txt
                i += 1
                if self._text(i) == "(":
                    i = self._balanced(i, "(", ")")
                if self._text(i) == "{":
                    i = self._balanced(i, "{", "}")
                if all(f.name != name for f in decl.fields):
                    decl.fields.append(FieldDecl(
                        name=name, type_name=decl.name,
                        modifiers={"public", "static", "final"}))
                continue
            # not constant-shaped: assume the constant list is over
            return i
        return end

    def _parse_members(self, i: int, end: int, decl: TypeDecl) -> None:
        while i < end:
            if self.toks[i].text == ";":
                i += 1
                continue
            mods, j = self._collect_modifiers(i)
            if j >= end:
                return
            txt = self.toks[j].text
            if txt in _TYPE_KIND_KEYWORDS or (
                    txt == "@" and self._text(j + 1) == "interface"):
                nested, i = self._parse_type(j, mods)
                if nested is not None:
                    decl.nested.append(nested)
                continue
            if txt == "{":
                i = self._balanced(j, "{", "}")  # static/instance initializer
                continue
            tparams: list[str] = []
            if txt == "<":
                tparams, j = self._parse_type_params(j)
            i = self._parse_member(j, end, decl, mods, tparams)

    def _parse_member(self, i: int, end: int, decl: TypeDecl,
                      mods: set[str], tparams: list[str]) -> int:
        start = i
        start_line = self.toks[i].line if i < self.n else 0
        angle = paren = bracket = 0
        j = i
        stop = None
        while j < end:
            txt = self.toks[j].text
            if angle == paren == bracket == 0 and txt in ("(", "=", ";", "{"):
                stop = txt
                break
            if txt == "<":
                angle += 1
            elif txt == ">":
                angle = max(0, angle - 1)
            elif txt == "(":
                paren += 1
            elif txt == ")":
                paren = max(0, paren - 1)
            elif txt == "[":
                bracket += 1
            elif txt == "]":
                bracket = max(0, bracket - 1)
            j += 1
        if stop is None:
            self._warn(start_line, "member header runs off the type body")
            return end
        if stop == "(":
            return self._parse_callable(start, j, end, decl, mods, tparams,
                                        start_line)
        if stop in ("=", ";"):
            return self._parse_fields(start, j, end, decl, mods, start_line)
        # stop == '{': compact record constructor or stray block
        header = list(self.toks[start:j])
        if not (len(header) == 1 and header[0].text == decl.name):
            self._warn(start_line, "skipped unrecognized member block")
        return self._balanced(j, "{", "}")

    def _parse_callable(self, start: int, lparen: int, end: int,
                        decl: TypeDecl, mods: set[str], tparams: list[str],
                        start_line: int) -> int:
        name_tok = self.toks[lparen - 1] if lparen - 1 >= start else None
        if name_tok is None or name_tok.kind != IDENT:
            self._warn(start_line, "skipped member with no callable name")
            return self._sync_member(lparen, end)
        name = name_tok.text
        return_tokens = list(self.toks[start:lparen - 1])
        pend = self._balanced(lparen, "(", ")")
        params = self._parse_params(self.toks[lparen + 1:pend - 1])
        i = pend
        # trailing array dims, throws clause, annotation-member defaults
        while i < end:
            txt = self.toks[i].text
            if txt in ("{", ";"):
                break
            if txt == "default":
                i += 1
                while i < end and self.toks[i].text not in (";",):
                    if self.toks[i].text == "{":
                        i = self._balanced(i, "{", "}")
                        continue
                    if self.toks[i].text == "(":
                        i = self._balanced(i, "(", ")")
                        continue
                    i += 1
                continue
            i += 1
        if return_tokens:
            return_type = _join(return_tokens)
        else:
            return_type = None if name == decl.name else ""
        method = MethodDecl(
            name=name,
            param_type_names=[raw for _n, raw, _f in params],
            return_type_name=return_type,
            modifiers=mods,
            param_names=[n for n, _raw, _f in params],
            param_type_texts=[f for _n, _raw, f in params],
            type_params=tparams,
        )
        if i < end and self.toks[i].text == "{":
            bend = self._balanced(i, "{", "}")
            body = list(self.toks[i + 1:bend - 1])
            method.body_stats = compute_body_stats(body)
            method.line_span = (start_line, self.toks[bend - 1].line)
            decl.methods.append(method)
            return bend
        method.line_span = (start_line,
                            self.toks[i].line if i < self.n else start_line)
        decl.methods.append(method)
        return i + 1 if i < end else end

    def _sync_member(self, i: int, end: int) -> int:
        while i < end:
            txt = self.toks[i].text
            if txt == ";":
                return i + 1
            if txt == "{":
                return self._balanced(i, "{", "}")
            i += 1
        return end

    def _parse_fields(self, start: int, stop: int, end: int, decl: TypeDecl,
                      mods: set[str], start_line: int) -> int:
        header = list(self.toks[start:stop])
        name_idx = None
        for k in range(len(header) - 1, -1, -1):
            if header[k].kind == IDENT and header[k].text not in JAVA_KEYWORDS:
                name_idx = k
                break
            if header[k].text not in ("[", "]"):
                break
        if name_idx is None or name_idx == 0:
            self._warn(start_line, "skipped unrecognized field declaration")
            return self._sync_member(stop, end)
        dims = sum(1 for t in header[name_idx + 1:] if t.text == "[")
        base_type = _join(header[:name_idx])
        self._add_field(decl, header[name_idx].text, base_type + "[]" * dims,
                        mods)
        i = stop
        # walk the declarator list: `= init` parts, `, name` parts
        while i < end:
            txt = self.toks[i].text
            if txt == ";":
                return i + 1
            if txt == "=":
                i += 1
                depth_paren = depth_bracket = 0
                while i < end:
                    t2 = self.toks[i].text
                    if t2 == "{":
                        i = self._balanced(i, "{", "}")
                        continue
                    if t2 == "(":
                        depth_paren += 1
                    elif t2 == ")":
                        depth_paren = max(0, depth_paren - 1)
                    elif t2 == "[":
                        depth_bracket += 1
                    elif t2 == "]":
                        depth_bracket = max(0, depth_bracket - 1)
                    elif depth_paren == depth_bracket == 0 and t2 in (",", ";"):
                        break
                    i += 1
                continue
            if txt == ",":
                i += 1
                if i < end and self.toks[i].kind == IDENT:
                    extra_name = self.toks[i].text
                    i += 1
                    dims = 0
                    while self._text(i) == "[" and i + 1 < end \
                            and self.toks[i + 1].text == "]":
                        dims += 1
                        i += 2
                    self._add_field(decl, extra_name, base_type + "[]" * dims,
                                    mods)
                continue
            i += 1
        return end

    def _add_field(self, decl: TypeDecl, name: str, type_name: str,
                   mods: set[str]) -> None:
        if any(f.name == name for f in decl.fields):
            self._warn(0, f"duplicate field {name} in {decl.name} ignored")
            return
        decl.fields.append(FieldDecl(name=name, type_name=type_name,
                                     modifiers=set(mods)))

    def _parse_params(self, tokens: Sequence[Tok]) -> list[tuple[str, str, str]]:
        """Return (name, raw_type, full_type_text) per parameter."""
        out: list[tuple[str, str, str]] = []
        toks = list(tokens)
        if not toks:
            return out
        for part in self._split_top_level(toks, ","):
            # drop annotations and `final`
            cleaned: list[Tok] = []
            k = 0
            while k < len(part):
                t = part[k]
                if t.text == "@" and k + 1 < len(part):
                    k += 2
                    while k + 1 < len(part) and part[k].text == "." \
                            and part[k + 1].kind == IDENT:
                        k += 2
                    if k < len(part) and part[k].text == "(":
                        depth = 0
                        while k < len(part):
                            if part[k].text == "(":
                                depth += 1
                            elif part[k].text == ")":
                                depth -= 1
                                if depth == 0:
                                    k += 1
                                    break
                            k += 1
                    continue
                if t.kind == IDENT and t.text == "final":
                    k += 1
                    continue
                cleaned.append(t)
                k += 1
            if not cleaned:
                continue
            vararg = any(t.text == "..." for t in cleaned)
            cleaned = [t for t in cleaned if t.text != "..."]
            if len(cleaned) == 1:
                name = ""
                type_toks = cleaned
                trail_dims = 0
            else:
                name_idx = None
                for k in range(len(cleaned) - 1, -1, -1):
                    if cleaned[k].kind == IDENT \
                            and cleaned[k].text not in JAVA_KEYWORDS:
                        name_idx = k
                        break
                    if cleaned[k].text not in ("[", "]"):
                        break
                if name_idx is None or name_idx == 0:
                    name = ""
                    type_toks = cleaned
                    trail_dims = 0
                else:
                    name = cleaned[name_idx].text
                    type_toks = cleaned[:name_idx]
                    trail_dims = sum(1 for t in cleaned[name_idx + 1:]
                                     if t.text == "[")
            suffix = "[]" * trail_dims + ("[]" if vararg else "")
            raw = _raw_type_name(type_toks) + suffix
            full = _join(type_toks) + suffix
            if name == "this":  # receiver parameter
                continue
            out.append((name, raw, full))
        return out

    def _finalize(self, decl: TypeDecl) -> None:
        field_names = {f.name for f in decl.fields}
        seen_keys: set[str] = set()
        unique_methods: list[MethodDecl] = []
        for m in decl.methods:
            key = m.signature_key
            if key in seen_keys:
                self._warn(m.line_span[0],
                           f"duplicate method signature {key} in {decl.name} ignored")
                continue
            seen_keys.add(key)
            unique_methods.append(m)
            stats = m.body_stats
            if stats is None:
                continue
            bare = getattr(stats, "_bare_names", frozenset())
            this_names = getattr(stats, "_this_names", frozenset())
            resolved = ((bare - set(m.param_names)) & field_names) \
                | (this_names & field_names)
            stats.referenced_field_names = frozenset(resolved)
        decl.methods = unique_methods


def parse_source(text: str, path: str = "<memory>") -> SourceModel:
    """Parse Java source into a SourceModel; never raises on bad input."""
    try:
        return _Parser(text, path).parse()
    except RecursionError:
        model = SourceModel(path=path)
        model.parse_warnings = [f"{path}:0: recursion limit hit, file skipped"]
        return model
