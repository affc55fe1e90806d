"""
Brute-force enumeration of every structure on a finite object.
"""

import logging

from structura.equational.models import search_models
from structura.helpers import resolve_bounds
from structura.lawvere.structures import structure_from_tables

logger = logging.getLogger(__name__)


def _inputs_le(space, args, other):
    return all(space.le(a, b) for a, b in zip(args, other))


def monotone_cells(space):
    """
    A cell filter keeping every table monotone in the componentwise
    order of space^n.
    """

    def cell_ok(symbol, args, value, tables):
        for other, other_value in tables[symbol].items():
            if other == args:
                continue
            if _inputs_le(space, args, other) and not space.le(
                value, other_value
            ):
                return False
            if _inputs_le(space, other, args) and not space.le(
                other_value, value
            ):
                return False
        return True

    return cell_ok


def enumerate_structures(presentation, obj, cat, bounds=None):
    """
    All structures for `presentation` on `obj` in `cat`, in the order of
    the table search (cells by arity, then inputs, values in point
    order).

    :raises BoundExceeded: beyond the configured carrier, arity or
    identity-variable bounds
    """
    bounds = resolve_bounds(bounds)
    bounds.check_presentation(presentation)
    bounds.check_carrier(len(obj.points))
    cell_ok = monotone_cells(obj) if hasattr(obj, "le") else None
    found = []
    for model in search_models(
        presentation.signature,
        presentation.identities,
        obj.points,
        cell_ok=cell_ok,
    ):
        found.append(
            structure_from_tables(cat, obj, presentation, model.tables)
        )
    logger.debug(
        f"{len(found)} {presentation.name} structures on {obj}",
        extra={"event": "enumerate_structures", "count": len(found)},
    )
    return found
