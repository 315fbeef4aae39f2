"""Line-oriented text formats for splicing systems and insertion bases.

System file::

    ; comment
    alphabet = a b c
    initial = ab aa bb        ; any representatives, 1 is the empty word
    rule = a#1$b#1            ; one per line
    complete = true           ; optional, generates A x A, forbids rule lines

Base file::

    alphabet = a b
    set = ab ba
"""

from __future__ import annotations

from pathlib import Path

from .errors import AlphabetError, ParseError
from .splicing import Rule, SplicingSystem
from .unitary import InsertionBase
from .words import EMPTY_SYMBOL, Alphabet, parse_word, serialize_word

COMMENT = ";"


def _tokens(text: str, offset: int):
    """Yield (token, 1-based column) for whitespace-separated tokens."""
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        yield text[i:j], offset + i + 1
        i = j


def _entries(text: str, keys, path=None):
    """Yield (key, [(token, column)], line number, key column) for each non-blank line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT, 1)[0]
        if not line.strip():
            continue
        key_part, eq, value = line.partition("=")
        key = key_part.strip()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        if not eq:
            raise ParseError("expected 'key = value'", lineno, key_col, path)
        if key not in keys:
            raise ParseError(f"unknown key {key!r}; expected one of {', '.join(keys)}", lineno, key_col, path)
        offset = len(key_part) + 1
        yield key, list(_tokens(value, offset)), lineno, key_col


def _parse_alphabet(tokens, lineno, path) -> Alphabet:
    letters = []
    for tok, col in tokens:
        if tok in letters:
            raise ParseError(f"letter {tok!r} repeated", lineno, col, path)
        try:
            Alphabet((tok,))
        except AlphabetError as exc:
            raise ParseError(str(exc), lineno, col, path) from None
        letters.append(tok)
    if not letters:
        raise ParseError("alphabet is empty", lineno, None, path)
    return Alphabet.of(letters)


def _check_word(token, col, lineno, alphabet, path, allow_empty=True) -> str:
    word = parse_word(token)
    if not word and not allow_empty:
        raise ParseError(f"the empty word {EMPTY_SYMBOL!r} is not allowed here", lineno, col, path)
    for k, c in enumerate(word):
        if c not in alphabet:
            raise ParseError(f"letter {c!r} of {token!r} is not in the alphabet", lineno, col + k, path)
    return word


def parse_system(text: str, path=None) -> SplicingSystem:
    alphabet = None
    alphabet_line = None
    initial_tokens = []
    rule_tokens = []
    complete = None
    for key, tokens, lineno, key_col in _entries(text, ("alphabet", "initial", "rule", "complete"), path):
        if key == "alphabet":
            if alphabet is not None:
                raise ParseError(f"alphabet already given on line {alphabet_line}", lineno, key_col, path)
            alphabet = _parse_alphabet(tokens, lineno, path)
            alphabet_line = lineno
        elif key == "initial":
            initial_tokens += [(tok, col, lineno) for tok, col in tokens]
        elif key == "rule":
            if len(tokens) != 1:
                col = tokens[1][1] if len(tokens) > 1 else None
                raise ParseError("expected exactly one rule u1#u2$u3#u4 per line", lineno, col, path)
            rule_tokens.append((tokens[0][0], tokens[0][1], lineno))
        else:
            if len(tokens) != 1 or tokens[0][0] not in ("true", "false"):
                col = tokens[0][1] if tokens else None
                raise ParseError("complete must be 'true' or 'false'", lineno, col, path)
            complete = tokens[0][0] == "true"
    if alphabet is None:
        raise ParseError("missing 'alphabet = ...' line", None, None, path)

    initial = [_check_word(tok, col, lineno, alphabet, path) for tok, col, lineno in initial_tokens]
    rules = []
    for tok, col, lineno in rule_tokens:
        if complete:
            raise ParseError("rule lines are not allowed when complete = true", lineno, col, path)
        try:
            rule = Rule.parse(tok)
        except ValueError as exc:
            raise ParseError(str(exc), lineno, col, path) from None
        pos = 0
        for component in tok.replace("$", "#").split("#"):
            if component != EMPTY_SYMBOL:
                for k, c in enumerate(component):
                    if c not in alphabet:
                        raise ParseError(f"letter {c!r} of rule {tok!r} is not in the alphabet", lineno, col + pos + k, path)
            pos += len(component) + 1
        rules.append(rule)
    if complete:
        return SplicingSystem.complete(alphabet, initial)
    return SplicingSystem(alphabet, initial, rules)


def parse_base(text: str, path=None) -> InsertionBase:
    alphabet = None
    words = []
    for key, tokens, lineno, key_col in _entries(text, ("alphabet", "set"), path):
        if key == "alphabet":
            if alphabet is not None:
                raise ParseError("alphabet given twice", lineno, key_col, path)
            alphabet = _parse_alphabet(tokens, lineno, path)
        else:
            words += [(tok, col, lineno) for tok, col in tokens]
    if alphabet is None:
        raise ParseError("missing 'alphabet = ...' line", None, None, path)
    checked = [_check_word(tok, col, lineno, alphabet, path, allow_empty=False) for tok, col, lineno in words]
    return InsertionBase(alphabet, frozenset(checked))


def load_system(path) -> SplicingSystem:
    path = Path(path)
    return parse_system(path.read_text(encoding="utf-8"), path)


def load_base(path) -> InsertionBase:
    path = Path(path)
    return parse_base(path.read_text(encoding="utf-8"), path)


def dump_system(system: SplicingSystem, comments=()) -> str:
    """Serialize a system; complete systems are written with ``complete = true``."""
    lines = [f"{COMMENT} {c}" for c in comments]
    lines.append(f"alphabet = {system.alphabet}")
    lines.append("initial = " + " ".join(str(w) for w in sorted(system.initial)))
    if system.is_complete:
        lines.append("complete = true")
    else:
        for r in sorted(system.rules):
            lines.append(f"rule = {r}")
    return "\n".join(lines) + "\n"


def dump_base(base: InsertionBase) -> str:
    words = " ".join(serialize_word(w) for w in base)
    return f"alphabet = {base.alphabet}\nset = {words}\n"
