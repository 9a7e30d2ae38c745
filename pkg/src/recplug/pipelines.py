"""Ready-made pipelines over field lists.

Pretty-printing (``showa``), record mapping (``mapa``), two-record zipping
(``zipa``), the stack-machine operators (``push``/``pop``/``dup``), and the
benchmark averaging application.  Every pipeline is a pure function from
input record(s) to a (accumulator, field list[s]) state; the ``run_*``
functions extract the final result.
"""

from functools import reduce
from operator import add

from .chop import and_then, chop, chop2, hom_wrap, hom_wrap0, hom_wrap2
from .errors import ArityError, EmptyInputError
from .records import (
    Benchmark,
    Builder,
    Value,
    apply_field,
    destructure_benchmark,
    destructure_device,
    field_count,
    finish,
    schema_for,
)


def identity(v):
    return v


def render_value(v: Value) -> str:
    """Canonical lexeme for a field value: True/False, minimal decimal,
    the string itself, shortest round-trip float."""
    if isinstance(v, bool):
        return "True" if v else "False"
    return str(v)


# ---------------------------------------------------------------------------
# Pretty-printing: accumulator is a stack of lexemes, most recent first.


def depure_show(destruct):
    return lambda r: ([], destruct(r))


def _show_chopper(state, render):
    return chop(state, lambda s, a: [render(a), *s])


def showa(pipeline, render):
    return hom_wrap(_show_chopper, pipeline, render)


def run_show(state) -> str:
    stack, _ = state
    return " ".join(reversed(stack))


# ---------------------------------------------------------------------------
# Mapping: accumulator is a Builder fed one transformed field per step.


def depure_map(type_id, destruct):
    schema = schema_for(type_id)
    return lambda r: (Builder(schema), destruct(r))


def _map_chopper(state, f):
    return chop(state, lambda s, a: apply_field(s, f(a)))


def mapa(pipeline, f):
    return hom_wrap(_map_chopper, pipeline, f)


def run_map(state):
    acc, rest = state
    if rest != ():
        raise ArityError(
            "run_map", field_count(rest), "run_map: unconsumed fields left"
        )
    return finish(acc)


# ---------------------------------------------------------------------------
# Zipping: one field from each of two records per step.


def depure_zip(type_id, destruct_a, destruct_b):
    schema = schema_for(type_id)
    return lambda ra, rb: (Builder(schema), destruct_a(ra), destruct_b(rb))


def _zip_chopper(state, f):
    return chop2(state, lambda s, a, c: apply_field(s, f(a, c)))


def zipa(pipeline, f):
    return hom_wrap2(_zip_chopper, pipeline, f)


def run_zip(state):
    acc, rest_a, rest_b = state
    leftover = field_count(rest_a) + field_count(rest_b)
    if leftover:
        raise ArityError("run_zip", leftover, "run_zip: unconsumed fields left")
    return finish(acc)


# ---------------------------------------------------------------------------
# Stack-machine operators on the pending field list.


def _pop_step(state):
    acc, rest = state
    if rest == ():
        raise ArityError("pop", 0)
    _, tail = rest
    return (acc, tail)


def pop(pipeline):
    return hom_wrap0(_pop_step, pipeline)


def _push_step(state, v):
    acc, rest = state
    return (acc, (v, rest))


def push(pipeline, v):
    return hom_wrap(_push_step, pipeline, v)


def _dup_step(state):
    acc, rest = state
    if rest == ():
        raise ArityError("dup", 0)
    head, tail = rest
    return (acc, (head, (head, tail)))


def dup(pipeline):
    return hom_wrap0(_dup_step, pipeline)


# ---------------------------------------------------------------------------
# Demo pipelines over the sample device record.


def show_record(type_id):
    """Pretty-printing pipeline for any registered record type."""
    schema = schema_for(type_id)
    p = depure_show(schema.destruct)
    for _ in range(schema.arity):
        p = showa(p, render_value)
    return p


def map_device_demo():
    p = depure_map("device", destructure_device)
    p = mapa(p, lambda b: not b)
    p = mapa(p, lambda x: x + 100)
    p = mapa(p, lambda y: y + 200)
    return p


def zip_device_demo():
    p = depure_zip("device", destructure_device, destructure_device)
    p = zipa(p, lambda a, b: a and b)
    p = zipa(p, add)
    p = zipa(p, add)
    return p


def remap_device_demo():
    p = depure_map("device", destructure_device)
    p = and_then(p, pop)
    p = push(p, True)
    p = mapa(p, identity)
    p = and_then(p, pop)
    p = and_then(p, dup)
    p = mapa(p, identity)
    p = mapa(p, identity)
    return p


# ---------------------------------------------------------------------------
# Benchmark averaging: fold with a zip pipeline, then divide with a map one.


def average(outputs: list) -> Benchmark:
    """Pointwise average of int-app benchmarks into a float-app benchmark.

    App fields are summed then divided by the count; log fields are
    concatenated.  The fold aborts on the first error (overflow included).
    """
    if not outputs:
        raise EmptyInputError("average: need at least one benchmark")
    n = len(outputs)

    bappend = depure_zip("benchmark", destructure_benchmark, destructure_benchmark)
    bappend = zipa(bappend, add)
    bappend = zipa(bappend, add)  # log concatenation, no separator
    bappend = zipa(bappend, add)
    bappend = zipa(bappend, add)
    folded = reduce(lambda a, b: run_zip(bappend(a, b)), outputs, Benchmark(0, "", 0, ""))

    bdivide = depure_map("benchmark_avg", destructure_benchmark)
    bdivide = mapa(bdivide, lambda v: v / n)
    bdivide = mapa(bdivide, identity)
    bdivide = mapa(bdivide, lambda v: v / n)
    bdivide = mapa(bdivide, identity)
    return run_map(bdivide(folded))
