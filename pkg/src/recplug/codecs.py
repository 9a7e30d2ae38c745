"""Codecs generated from one field schema per record type.

Three wire forms share the schema registry entry: a space-separated lexeme
line (the pretty-printer's output, parsed back by an applicative chain), a
binary image, and a flat named-field JSON subset.  Encoders are chop
pipelines over the destructured record; decoders are applicative chains
of primitive parsers over a cursor.

Wire formats, bit-exact:
  bool   1 byte, 0x00/0x01
  int    8 bytes, little-endian two's complement
  str    4-byte little-endian length, then UTF-8 bytes
Floats have no binary form (averages are display-only).  The JSON subset
is a flat object, keys in schema order on output, no whitespace, string
escapes limited to backslash and double quote.
"""

from __future__ import annotations

import re
import struct
from dataclasses import dataclass
from typing import Any, Callable, Sequence, Union

from .errors import (
    CodecError,
    Error,
    ExtraKeyError,
    InvalidBoolError,
    MalformedJsonError,
    MissingKeyError,
    ParseError,
    TrailingBytesError,
    TrailingInputError,
    TruncatedError,
    WrongValueKindError,
)
from .pipelines import depure_show, showa
from .records import (
    I64_MAX,
    I64_MIN,
    Builder,
    FieldSpec,
    Kind,
    RecordSchema,
    apply_field,
    check_int_range,
    finish,
    kind_of,
)


@dataclass(frozen=True)
class ParseOk:
    value: Any
    cursor: int


@dataclass(frozen=True)
class ParseErr:
    message: str
    position: int
    error: Error


ParserResult = Union[ParseOk, ParseErr]
Parser = Callable[[Sequence, int], ParserResult]


def _fail(error: CodecError, position: int) -> ParseErr:
    return ParseErr(str(error), position, error)


def p_pure(v) -> Parser:
    return lambda src, pos: ParseOk(v, pos)


def p_ap(pf: Parser, pa: Parser) -> Parser:
    """Run pf then pa left to right; apply pf's result (a Builder or a
    function) to pa's value.  The first error short-circuits."""

    def run(src, pos):
        rf = pf(src, pos)
        if isinstance(rf, ParseErr):
            return rf
        ra = pa(src, rf.cursor)
        if isinstance(ra, ParseErr):
            return ra
        step = rf.value
        out = apply_field(step, ra.value) if isinstance(step, Builder) else step(ra.value)
        return ParseOk(out, ra.cursor)

    return run


# ---------------------------------------------------------------------------
# Lexeme track


def lexemes(line: str) -> list[str]:
    """Tokenize on single spaces, the exact inverse of the show join."""
    return line.split(" ")


_INT_RE = re.compile(r"-?(0|[1-9][0-9]*)")


def p_bool() -> Parser:
    def run(src, pos):
        if pos >= len(src):
            return _fail(ParseError("expected a boolean, stream exhausted", pos), pos)
        lex = src[pos]
        if lex == "False":
            return ParseOk(False, pos + 1)
        if lex == "True":
            return ParseOk(True, pos + 1)
        return _fail(ParseError(f"expected 'False' or 'True', got {lex!r}", pos), pos)

    return run


def p_int() -> Parser:
    def run(src, pos):
        if pos >= len(src):
            return _fail(ParseError("expected an integer, stream exhausted", pos), pos)
        lex = src[pos]
        if not _INT_RE.fullmatch(lex) or lex == "-0":
            return _fail(ParseError(f"not a canonical integer: {lex!r}", pos), pos)
        v = int(lex)
        if not I64_MIN <= v <= I64_MAX:
            return _fail(
                ParseError(f"integer out of 64-bit signed range: {lex}", pos), pos
            )
        return ParseOk(v, pos + 1)

    return run


def p_str() -> Parser:
    def run(src, pos):
        if pos >= len(src):
            return _fail(ParseError("expected a string, stream exhausted", pos), pos)
        return ParseOk(src[pos], pos + 1)

    return run


_LEXEME_PRIMITIVES = {Kind.BOOL: p_bool(), Kind.INT: p_int(), Kind.STR: p_str()}


def parse_record(stream: Sequence[str], schema: RecordSchema):
    """Strict applicative parse: the whole stream must be consumed."""
    parser = p_pure(Builder(schema))
    for f in schema.fields:
        if f.kind not in _LEXEME_PRIMITIVES:
            raise CodecError(f"no lexeme parser for {f.kind.value} field {f.name!r}")
        parser = p_ap(parser, _LEXEME_PRIMITIVES[f.kind])
    result = parser(stream, 0)
    if isinstance(result, ParseErr):
        raise result.error
    if result.cursor != len(stream):
        raise TrailingInputError(
            f"{len(stream) - result.cursor} unconsumed lexeme(s)"
            f" at position {result.cursor}"
        )
    return finish(result.value)


# ---------------------------------------------------------------------------
# Binary track


def _check_binary_schema(schema: RecordSchema) -> None:
    for f in schema.fields:
        if f.kind is Kind.REAL:
            raise CodecError(f"real field {f.name!r} has no binary encoding")


def _bin_chunk(spec: FieldSpec):
    def emit(v) -> bytes:
        got = kind_of(v)
        if got is not spec.kind:
            raise WrongValueKindError(
                f"field {spec.name!r} expects {spec.kind.value}, got {got.value}"
            )
        if spec.kind is Kind.BOOL:
            return b"\x01" if v else b"\x00"
        if spec.kind is Kind.INT:
            check_int_range(v)
            return struct.pack("<q", v)
        raw = v.encode("utf-8")
        if len(raw) > 0xFFFFFFFF:
            raise CodecError(f"field {spec.name!r} too long for a 4-byte length")
        return struct.pack("<I", len(raw)) + raw

    return emit


def encode_binary(record, schema: RecordSchema) -> bytes:
    _check_binary_schema(schema)
    pipeline = depure_show(schema.destruct)
    for f in schema.fields:
        pipeline = showa(pipeline, _bin_chunk(f))
    chunks, _ = pipeline(record)
    return b"".join(reversed(chunks))


def _b_bool(data, pos):
    if pos + 1 > len(data):
        return _fail(TruncatedError(f"need 1 byte at offset {pos}"), pos)
    b = data[pos]
    if b > 1:
        return _fail(
            InvalidBoolError(f"invalid boolean byte 0x{b:02x} at offset {pos}"), pos
        )
    return ParseOk(bool(b), pos + 1)


def _b_int(data, pos):
    if pos + 8 > len(data):
        return _fail(TruncatedError(f"need 8 bytes at offset {pos}"), pos)
    return ParseOk(struct.unpack_from("<q", data, pos)[0], pos + 8)


def _b_str(data, pos):
    if pos + 4 > len(data):
        return _fail(TruncatedError(f"need a 4-byte length at offset {pos}"), pos)
    n = struct.unpack_from("<I", data, pos)[0]
    if pos + 4 + n > len(data):
        return _fail(TruncatedError(f"need {n} string bytes at offset {pos + 4}"), pos)
    try:
        s = bytes(data[pos + 4 : pos + 4 + n]).decode("utf-8")
    except UnicodeDecodeError as exc:
        return _fail(CodecError(f"invalid UTF-8 at offset {pos + 4}: {exc}"), pos)
    return ParseOk(s, pos + 4 + n)


_BINARY_PRIMITIVES = {Kind.BOOL: _b_bool, Kind.INT: _b_int, Kind.STR: _b_str}


def decode_binary(image: bytes, schema: RecordSchema):
    """Strict inverse of encode_binary: every byte must be consumed."""
    _check_binary_schema(schema)
    parser = p_pure(Builder(schema))
    for f in schema.fields:
        parser = p_ap(parser, _BINARY_PRIMITIVES[f.kind])
    result = parser(image, 0)
    if isinstance(result, ParseErr):
        raise result.error
    if result.cursor != len(image):
        raise TrailingBytesError(
            f"{len(image) - result.cursor} unconsumed byte(s) at offset {result.cursor}"
        )
    return finish(result.value)


# ---------------------------------------------------------------------------
# Named-field track (flat JSON subset)


def _json_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _json_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return f'"{_json_escape(v)}"'
    if v != v or v in (float("inf"), float("-inf")):
        raise CodecError("non-finite reals have no JSON form")
    return repr(v)  # shortest round-trip decimal, always with '.' or exponent


def _named_pair(spec: FieldSpec):
    def emit(v) -> str:
        got = kind_of(v)
        if got is not spec.kind:
            raise WrongValueKindError(
                f"field {spec.name!r} expects {spec.kind.value}, got {got.value}"
            )
        if got is Kind.INT:
            check_int_range(v)
        return f'"{_json_escape(spec.name)}":{_json_value(v)}'

    return emit


def to_named(record, schema: RecordSchema) -> str:
    """Emit a flat object, keys in schema order, no whitespace."""
    pipeline = depure_show(schema.destruct)
    for f in schema.fields:
        pipeline = showa(pipeline, _named_pair(f))
    pairs, _ = pipeline(record)
    return "{" + ",".join(reversed(pairs)) + "}"


_NUM_RE = re.compile(r"-?(0|[1-9][0-9]*)(\.[0-9]+)?([eE][+-]?[0-9]+)?")


def _scan_string(text: str, i: int) -> tuple[str, int]:
    i += 1  # opening quote
    out = []
    while i < len(text):
        c = text[i]
        if c == '"':
            return "".join(out), i + 1
        if c == "\\":
            if i + 1 >= len(text):
                raise MalformedJsonError(f"unterminated escape at offset {i}")
            e = text[i + 1]
            if e not in ('"', "\\"):
                raise MalformedJsonError(f"unsupported escape \\{e} at offset {i}")
            out.append(e)
            i += 2
        else:
            out.append(c)
            i += 1
    raise MalformedJsonError("unterminated string")


def _scan_value(text: str, i: int):
    if i >= len(text):
        raise MalformedJsonError("value expected at end of input")
    if text[i] == '"':
        return _scan_string(text, i)
    if text.startswith("true", i):
        return True, i + 4
    if text.startswith("false", i):
        return False, i + 5
    m = _NUM_RE.match(text, i)
    if m:
        tok = m.group(0)
        if m.group(2) or m.group(3):
            v = float(tok)
            if v in (float("inf"), float("-inf")):
                raise MalformedJsonError(f"real literal overflows at offset {i}")
            return v, m.end()
        if tok == "-0":
            raise MalformedJsonError(f"non-canonical integer -0 at offset {i}")
        v = int(tok)
        if not I64_MIN <= v <= I64_MAX:
            raise MalformedJsonError(f"integer out of 64-bit signed range: {tok}")
        return v, m.end()
    raise MalformedJsonError(f"unrecognized value at offset {i}")


def _scan_named(text: str) -> dict:
    if not text or text[0] != "{":
        raise MalformedJsonError("expected a flat JSON object")
    pairs: dict = {}
    i = 1
    if i < len(text) and text[i] == "}":
        i += 1
    else:
        while True:
            if i >= len(text) or text[i] != '"':
                raise MalformedJsonError(f"expected a key string at offset {i}")
            key, i = _scan_string(text, i)
            if i >= len(text) or text[i] != ":":
                raise MalformedJsonError(f"expected ':' at offset {i}")
            if key in pairs:
                raise MalformedJsonError(f"duplicate key {key!r}")
            pairs[key], i = _scan_value(text, i + 1)
            if i < len(text) and text[i] == ",":
                i += 1
                continue
            if i < len(text) and text[i] == "}":
                i += 1
                break
            raise MalformedJsonError(f"expected ',' or '}}' at offset {i}")
    if i != len(text):
        raise MalformedJsonError(f"trailing characters after object at offset {i}")
    return pairs


def from_named(text: str, schema: RecordSchema):
    """Rebuild a record by name; key order is free, extras are rejected."""
    pairs = _scan_named(text)
    extra = set(pairs) - {f.name for f in schema.fields}
    if extra:
        raise ExtraKeyError(f"unexpected key(s): {', '.join(sorted(extra))}")
    b = Builder(schema)
    for f in schema.fields:
        if f.name not in pairs:
            raise MissingKeyError(f"missing key {f.name!r}")
        v = pairs[f.name]
        if kind_of(v) is not f.kind:
            raise WrongValueKindError(
                f"key {f.name!r} expects {f.kind.value}, got {kind_of(v).value}"
            )
        b = apply_field(b, v)
    return finish(b)
