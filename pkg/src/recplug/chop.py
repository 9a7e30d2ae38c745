"""Step-fold combinators over (accumulator, field list) pipeline states.

``chop`` consumes one field and folds it into the accumulator; the
variants consume one field from each of two or three lists.  The
``hom_wrap`` family lifts a chopper over reader pipelines (functions from
input records to states) so whole pipelines can be written without
binding a single variable.
"""

from .errors import ArityError


def chop(state, step):
    """(acc, (a, rest)) -> (step(acc, a), rest)."""
    acc, rest = state
    if rest == ():
        raise ArityError("chop", 0)
    head, tail = rest
    return (step(acc, head), tail)


def chop2(state, step):
    """(acc, (a, ra), (c, rb)) -> (step(acc, a, c), ra, rb)."""
    acc, rest_a, rest_b = state
    if rest_a == ():
        raise ArityError("chop2", 0, "chop2: first field list is empty")
    if rest_b == ():
        raise ArityError("chop2", 0, "chop2: second field list is empty")
    (a, tail_a), (c, tail_b) = rest_a, rest_b
    return (step(acc, a, c), tail_a, tail_b)


def chop2_left(state, step):
    """chop2 on the left-nested state shape ((acc, ra), rb)."""
    sab, rest_b = state
    if rest_b == ():
        raise ArityError("chop2_left", 0, "chop2_left: second field list is empty")
    c, tail_b = rest_b
    return (chop(sab, lambda s, a: step(s, a, c)), tail_b)


def chop3(state, step):
    """(acc, ra, rb, rc) -> one head consumed from each of the three lists."""
    acc, ra, rb, rc = state
    for label, rest in (("first", ra), ("second", rb), ("third", rc)):
        if rest == ():
            raise ArityError("chop3", 0, f"chop3: {label} field list is empty")
    (a, ta), (b, tb), (c, tc) = ra, rb, rc
    return (step(acc, a, b, c), ta, tb, tc)


def hom_wrap(chopper, pipeline, step):
    return lambda r: chopper(pipeline(r), step)


def hom_wrap0(chopper, pipeline):
    return lambda r: chopper(pipeline(r))


def hom_wrap2(chopper, pipeline, step):
    return lambda ra, rb: chopper(pipeline(ra, rb), step)


def and_then(x, f):
    return f(x)


# Reassociation helpers between the flat and left-nested state shapes.


def nest2(state):
    acc, ra, rb = state
    return ((acc, ra), rb)


def unnest2(state):
    (acc, ra), rb = state
    return (acc, ra, rb)


def nest3(state):
    acc, ra, rb, rc = state
    return (((acc, ra), rb), rc)


def unnest3(state):
    ((acc, ra), rb), rc = state
    return (acc, ra, rb, rc)
