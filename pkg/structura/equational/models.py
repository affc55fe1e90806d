"""
Backtracking search for finite models of a presentation.

Tables are filled one cell at a time (constants first, then by arity,
inputs in carrier order); a branch is cut as soon as some identity
instance is fully evaluable and fails, or `cell_ok` rejects the new
cell.
"""

import itertools
import logging

from structura.equational.algebra import FinAlgebra
from structura.equational.terms import Var

logger = logging.getLogger(__name__)

_MISSING = object()


def table_cells(signature, carrier):
    ordered = sorted(signature.symbols, key=lambda symbol: symbol[1])
    return [
        (name, args)
        for name, arity in ordered
        for args in itertools.product(carrier, repeat=arity)
    ]


def _partial_evaluate(t, tables, assignment):
    if isinstance(t, Var):
        return assignment[t.index]
    values = []
    for arg in t.args:
        value = _partial_evaluate(arg, tables, assignment)
        if value is _MISSING:
            return _MISSING
        values.append(value)
    return tables[t.symbol].get(tuple(values), _MISSING)


def search_models(
    signature, identities, carrier, cell_ok=None, limit=None, fixed=None
):
    """
    Yield every FinAlgebra on `carrier` satisfying `identities`.

    :param cell_ok: optional callable (symbol, args, value, tables) ->
    bool vetoing a cell; `tables` holds the partial tables so far
    :param limit: stop after this many models
    :param fixed: optional partial tables every model must extend
    """
    carrier = tuple(carrier)
    identities = tuple(identities)

    if not carrier and (
        signature.constants or any(eq.context == 0 for eq in identities)
    ):
        return

    instances = [
        (eq.lhs, eq.rhs, assignment)
        for eq in identities
        for assignment in itertools.product(carrier, repeat=eq.context)
    ]
    tables = {name: {} for name in signature.names}
    cells = table_cells(signature, carrier)
    found = 0

    def consistent():
        for lhs, rhs, assignment in instances:
            left = _partial_evaluate(lhs, tables, assignment)
            if left is _MISSING:
                continue
            right = _partial_evaluate(rhs, tables, assignment)
            if right is not _MISSING and left != right:
                return False
        return True

    def candidates(name, args):
        if fixed and args in fixed.get(name, {}):
            return (fixed[name][args],)
        return carrier

    def extend(position):
        nonlocal found
        if limit is not None and found >= limit:
            return
        if position == len(cells):
            found += 1
            yield FinAlgebra(
                signature,
                carrier,
                {name: dict(table) for name, table in tables.items()},
            )
            return
        name, args = cells[position]
        for value in candidates(name, args):
            tables[name][args] = value
            if (
                cell_ok is None or cell_ok(name, args, value, tables)
            ) and consistent():
                yield from extend(position + 1)
            del tables[name][args]
            if limit is not None and found >= limit:
                return

    yield from extend(0)

    logger.debug(
        f"Model search on {len(carrier)} elements found {found} models",
        extra={"event": "model_search", "models": found},
    )


def find_models(presentation, size, limit=None):
    """All models of a presentation on the carrier 0..size-1."""
    return list(
        search_models(
            presentation.signature,
            presentation.identities,
            range(size),
            limit=limit,
        )
    )
