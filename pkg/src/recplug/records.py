"""Record types, field kinds, nested-pair field lists, and staged builders.

A record's fields travel as a *field list*: nested pairs terminated by the
empty tuple, ``(b, (x, (y, ())))``.  A :class:`Builder` is the staged
counterpart of a record constructor: it accepts fields one at a time and
yields the record after exactly arity applications.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Union

from .errors import ArityError, FieldTypeError, IntOverflowError, UnknownTypeError

Value = Union[bool, int, str, float]

#: Field lists are plain nested pairs; () is the terminator.
FieldList = tuple

I64_MIN = -(2**63)
I64_MAX = 2**63 - 1


class Kind(Enum):
    BOOL = "bool"
    INT = "int"
    STR = "str"
    REAL = "real"


def kind_of(v: Value) -> Kind:
    if isinstance(v, bool):  # before int: bool is an int subclass
        return Kind.BOOL
    if isinstance(v, int):
        return Kind.INT
    if isinstance(v, str):
        return Kind.STR
    if isinstance(v, float):
        return Kind.REAL
    raise FieldTypeError(f"not a field value: {v!r}")


def check_int_range(v: int) -> int:
    if not I64_MIN <= v <= I64_MAX:
        raise IntOverflowError(f"integer out of 64-bit signed range: {v}")
    return v


# ---------------------------------------------------------------------------
# Sample record types


@dataclass(frozen=True)
class Device:
    block: bool
    major: int
    minor: int


@dataclass(frozen=True)
class Benchmark:
    """Two benchmarked runs: a measurement and a log per run.

    The app fields are polymorphic: int for raw outputs, float for
    averages, str for space-joined argv inputs.
    """

    first_app: Value
    first_log: str
    second_app: Value
    second_log: str


EXAMPLE_DEVICE = Device(block=False, major=19, minor=1)


def destructure_device(d: Device) -> FieldList:
    return (d.block, (d.major, (d.minor, ())))


def destructure_benchmark(b: Benchmark) -> FieldList:
    return (b.first_app, (b.first_log, (b.second_app, (b.second_log, ()))))


# ---------------------------------------------------------------------------
# Field-list plumbing


def cons(v: Value, rest: FieldList) -> FieldList:
    return (v, rest)


def uncons(fl: FieldList) -> tuple[Value, FieldList]:
    if fl == ():
        raise ArityError("uncons", 0, "uncons: empty field list")
    head, tail = fl
    return head, tail


def field_list(*values: Value) -> FieldList:
    """Build a field list from values in order: field_list(1, 2) == (1, (2, ()))."""
    out: FieldList = ()
    for v in reversed(values):
        out = (v, out)
    return out


def list_fields(fl: FieldList) -> list:
    """Flatten a field list back into a plain list, in field order."""
    out = []
    while fl != ():
        head, fl = fl
        out.append(head)
    return out


def field_count(fl: FieldList) -> int:
    return len(list_fields(fl))


# ---------------------------------------------------------------------------
# Schemas and the type registry


@dataclass(frozen=True)
class FieldSpec:
    name: str
    kind: Kind


@dataclass(frozen=True)
class RecordSchema:
    """The single source of truth for one record type.

    Everything schema-derived (builders, codecs, wire names) reads from
    this one entry; no type has a second field listing anywhere.
    """

    type_id: str
    ctor: Callable[..., Any]
    destruct: Callable[[Any], FieldList]
    fields: tuple[FieldSpec, ...]

    @property
    def arity(self) -> int:
        return len(self.fields)


REGISTRY: dict[str, RecordSchema] = {}


def _register(schema: RecordSchema) -> RecordSchema:
    REGISTRY[schema.type_id] = schema
    return schema


DEVICE_SCHEMA = _register(
    RecordSchema(
        "device",
        Device,
        destructure_device,
        (
            FieldSpec("block", Kind.BOOL),
            FieldSpec("major", Kind.INT),
            FieldSpec("minor", Kind.INT),
        ),
    )
)

_BENCHMARK_NAMES = ("firstApp", "firstLog", "secondApp", "secondLog")


def _benchmark_schema(type_id: str, app_kind: Kind) -> RecordSchema:
    kinds = (app_kind, Kind.STR, app_kind, Kind.STR)
    return RecordSchema(
        type_id,
        Benchmark,
        destructure_benchmark,
        tuple(FieldSpec(n, k) for n, k in zip(_BENCHMARK_NAMES, kinds)),
    )


# One entry per instantiation of the polymorphic app fields.
BENCHMARK_SCHEMA = _register(_benchmark_schema("benchmark", Kind.INT))
AVGS_SCHEMA = _register(_benchmark_schema("benchmark_avg", Kind.REAL))
ARGV_SCHEMA = _register(_benchmark_schema("benchmark_argv", Kind.STR))


def schema_for(type_id: str) -> RecordSchema:
    try:
        return REGISTRY[type_id]
    except KeyError:
        raise UnknownTypeError(f"unregistered record type: {type_id!r}") from None


# ---------------------------------------------------------------------------
# Staged builders


@dataclass(frozen=True)
class Builder:
    """A record constructor applied one field at a time."""

    schema: RecordSchema
    supplied: tuple = ()


def builder_new(type_id: str, arity: int) -> Builder:
    schema = schema_for(type_id)
    if arity != schema.arity:
        raise ArityError(
            "builder_new",
            schema.arity,
            f"builder_new: {type_id} has arity {schema.arity}, got {arity}",
        )
    return Builder(schema)


def apply_field(b: Builder, v: Value) -> Builder:
    done = len(b.supplied)
    if done >= b.schema.arity:
        raise ArityError(
            "apply_field",
            0,
            f"apply_field: {b.schema.type_id} builder already has all"
            f" {b.schema.arity} fields",
        )
    want = b.schema.fields[done]
    got = kind_of(v)
    if got is not want.kind:
        raise FieldTypeError(
            f"field {want.name!r} of {b.schema.type_id} expects"
            f" {want.kind.value}, got {got.value} ({v!r})"
        )
    if got is Kind.INT:
        check_int_range(v)
    return Builder(b.schema, b.supplied + (v,))


def finish(b: Builder) -> Any:
    missing = b.schema.arity - len(b.supplied)
    if missing:
        raise ArityError(
            "finish",
            missing,
            f"finish: {b.schema.type_id} builder still needs {missing} field(s)",
        )
    return b.schema.ctor(*b.supplied)
