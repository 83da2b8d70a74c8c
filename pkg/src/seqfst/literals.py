"""Text encodings of elements and line tokenization for the file formats.

words     "ab"  (double quoted, backslash escapes, "" is the empty word)
rational  3/2 or 3
natural   3
product   ("ab", 3/2)
"""

import re
from fractions import Fraction

from .errors import ParseError

_ESCAPES = {ord('"'): '\\"', ord("\\"): "\\\\", ord("\n"): "\\n", ord("\t"): "\\t", ord("\r"): "\\r"}
_UNESCAPES = {'"': b'"', "\\": b"\\", "n": b"\n", "t": b"\t", "r": b"\r"}

_STRING = r'"(?:\\.|[^"\\])*"'
TOKEN_RE = re.compile(r'\s*(%s|\(\s*%s\s*,\s*[^\s()]+\s*\)|[^\s"()]+)' % (_STRING, _STRING))
_PAIR_RE = re.compile(r'\(\s*(%s)\s*,\s*([^\s()]+)\s*\)$' % _STRING)


def quote_word(word):
    """Quote a bytes word; non-printable bytes become \\xHH."""
    out = []
    for byte in word:
        if byte in _ESCAPES:
            out.append(_ESCAPES[byte])
        elif 0x20 <= byte < 0x7F:
            out.append(chr(byte))
        else:
            out.append("\\x%02x" % byte)
    return '"' + "".join(out) + '"'


def unquote_word(text):
    if len(text) < 2 or text[0] != '"' or text[-1] != '"':
        raise ValueError("expected a double-quoted word, got %r" % text)
    body = text[1:-1]
    out = bytearray()
    i = 0
    while i < len(body):
        ch = body[i]
        if ch != "\\":
            out += ch.encode("utf-8")
            i += 1
            continue
        if i + 1 >= len(body):
            raise ValueError("dangling backslash in %r" % text)
        nxt = body[i + 1]
        if nxt == "x":
            hexpart = body[i + 2:i + 4]
            if len(hexpart) != 2:
                raise ValueError("bad \\x escape in %r" % text)
            out.append(int(hexpart, 16))
            i += 4
        elif nxt in _UNESCAPES:
            out += _UNESCAPES[nxt]
            i += 2
        else:
            raise ValueError("unknown escape \\%s in %r" % (nxt, text))
    return bytes(out)


def _format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def _parse_rational(text):
    if not re.fullmatch(r"\d+(/\d+)?", text):
        raise ValueError("expected a non-negative rational p/q, got %r" % text)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError("zero denominator in %r" % text) from None


def format_element(S, a):
    kind = S.kind
    if kind == "words":
        return quote_word(a)
    if kind == "rational":
        return _format_rational(a)
    if kind == "natural":
        return str(a)
    if kind == "product":
        return "(%s, %s)" % (quote_word(a[0]), _format_rational(a[1]))
    raise ValueError("no literal encoding for structure %r" % kind)


def parse_element(S, text):
    """Parse one element literal; ValueError on malformed input."""
    text = text.strip()
    kind = S.kind
    if kind == "words":
        return unquote_word(text)
    if kind == "rational":
        return _parse_rational(text)
    if kind == "natural":
        if not text.isdigit():
            raise ValueError("expected a natural number, got %r" % text)
        return int(text)
    if kind == "product":
        m = _PAIR_RE.match(text)
        if not m:
            raise ValueError("expected a (word, rational) pair, got %r" % text)
        return (unquote_word(m.group(1)), _parse_rational(m.group(2)))
    raise ValueError("no literal encoding for structure %r" % kind)


def tokenize(line, lineno=None):
    """Split a line into tokens, keeping quoted words and pairs intact."""
    tokens = []
    pos = 0
    line = line.rstrip("\r\n")
    while pos < len(line):
        if line[pos:].strip() == "":
            break
        m = TOKEN_RE.match(line, pos)
        if not m:
            raise ParseError("cannot tokenize %r" % line[pos:].strip(), lineno)
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_input_word(text):
    """An input word given on the command line or in a table: either raw
    symbols or a double-quoted string (needed for the empty word)."""
    if text.startswith('"'):
        return unquote_word(text).decode("utf-8")
    return text
