"""Lexer for Java source text.

Produces a flat token stream with comments and whitespace removed; string,
char and text-block literals are kept as single tokens (lexeme includes the
quotes). The lexer never fails: malformed input degrades to best-effort
tokens, which is what the tolerant declaration parser needs.
"""

from __future__ import annotations

from typing import NamedTuple

IDENT = "ident"
NUMBER = "number"
STRING = "string"
CHAR = "char"
PUNCT = "punct"


class Tok(NamedTuple):
    kind: str
    text: str
    line: int


JAVA_KEYWORDS = frozenset({
    "abstract", "assert", "boolean", "break", "byte", "case", "catch",
    "char", "class", "const", "continue", "default", "do", "double",
    "else", "enum", "extends", "final", "finally", "float", "for", "goto",
    "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "record",
    "return", "short", "static", "strictfp", "super", "switch",
    "synchronized", "this", "throw", "throws", "transient", "try", "var",
    "void", "volatile", "while", "yield", "permits", "sealed",
})

MODIFIER_KEYWORDS = frozenset({
    "public", "private", "protected", "static", "final", "abstract",
    "default", "synchronized", "native", "strictfp", "transient",
    "volatile", "sealed",
})

PRIMITIVE_TYPES = frozenset({
    "boolean", "byte", "char", "short", "int", "long", "float", "double",
    "void", "var",
})

# Two-char operators that are safe to merge without confusing generic
# bracket matching ('>>' and friends are intentionally left split).
_TWO_CHAR_OPS = frozenset({
    "<=", ">=", "==", "!=", "&&", "||", "++", "--", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "->", "::",
})

_IDENT_START = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$"
)
_IDENT_CONT = _IDENT_START | frozenset("0123456789")
_DIGITS = frozenset("0123456789")
_NUMBER_CONT = frozenset("0123456789abcdefABCDEFxXlLfFdD._")


def tokenize(text: str) -> list[Tok]:
    toks: list[Tok] = []
    i, n, line = 0, len(text), 1
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
            continue
        if c in " \t\r\f\x0b":
            i += 1
            continue
        if c == "/" and i + 1 < n:
            nxt = text[i + 1]
            if nxt == "/":
                j = text.find("\n", i)
                i = n if j < 0 else j
                continue
            if nxt == "*":
                j = text.find("*/", i + 2)
                if j < 0:
                    line += text.count("\n", i)
                    i = n
                else:
                    line += text.count("\n", i, j)
                    i = j + 2
                continue
        if c == '"':
            if text.startswith('"""', i):
                j = text.find('"""', i + 3)
                end = n if j < 0 else j + 3
                toks.append(Tok(STRING, text[i:end], line))
                line += text.count("\n", i, end)
                i = end
                continue
            j = i + 1
            while j < n and text[j] not in ('"', "\n"):
                if text[j] == "\\" and j + 1 < n:
                    j += 2
                else:
                    j += 1
            end = j + 1 if j < n and text[j] == '"' else j
            toks.append(Tok(STRING, text[i:end], line))
            i = end
            continue
        if c == "'":
            j = i + 1
            while j < n and text[j] not in ("'", "\n"):
                if text[j] == "\\" and j + 1 < n:
                    j += 2
                else:
                    j += 1
            end = j + 1 if j < n and text[j] == "'" else j
            toks.append(Tok(CHAR, text[i:end], line))
            i = end
            continue
        if c in _IDENT_START:
            j = i + 1
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            toks.append(Tok(IDENT, text[i:j], line))
            i = j
            continue
        if c in _DIGITS:
            j = i + 1
            while j < n and text[j] in _NUMBER_CONT:
                # keep exponent signs attached: 1.5e-3
                if text[j] in "eE" and j + 1 < n and text[j + 1] in "+-" \
                        and j + 2 < n and text[j + 2] in _DIGITS:
                    j += 2
                j += 1
            toks.append(Tok(NUMBER, text[i:j], line))
            i = j
            continue
        if text.startswith("...", i):
            toks.append(Tok(PUNCT, "...", line))
            i += 3
            continue
        two = text[i:i + 2]
        if two in _TWO_CHAR_OPS:
            toks.append(Tok(PUNCT, two, line))
            i += 2
            continue
        toks.append(Tok(PUNCT, c, line))
        i += 1
    return toks


def string_literal_value(lexeme: str) -> str:
    """Strip the quoting from a string/text-block lexeme (no unescaping)."""
    if lexeme.startswith('"""'):
        body = lexeme[3:]
        if body.endswith('"""'):
            body = body[:-3]
        return body.lstrip("\n\r ")
    body = lexeme[1:] if lexeme.startswith('"') else lexeme
    if body.endswith('"'):
        body = body[:-1]
    return body
