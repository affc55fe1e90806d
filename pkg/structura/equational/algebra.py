"""
Finite set-based algebras: evaluation, satisfaction of identities and
homomorphisms.
"""

import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from structura.equational.terms import Signature, Var, symbols
from structura.exceptions import (
    InvalidAlgebra,
    SignatureMismatch,
    UnboundVariable,
    UnknownSymbol,
)


@dataclass(frozen=True)
class FinAlgebra:
    """A Sigma-algebra on a finite carrier of opaque element ids.

    Tables map argument tuples to results; a constant's table maps the
    empty tuple to its element.
    """

    signature: Signature
    carrier: Tuple[Any, ...]
    tables: Dict[str, Dict[tuple, Any]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "carrier", tuple(self.carrier))
        tables = {}
        for name, table in self.tables.items():
            if not isinstance(table, dict):
                table = {(): table}
            tables[name] = dict(table)
        object.__setattr__(self, "tables", tables)
        self.validate()

    def validate(self):
        elements = set(self.carrier)
        if len(elements) != len(self.carrier):
            raise InvalidAlgebra("carrier elements must be distinct")
        for name, arity in self.signature.symbols:
            if name not in self.tables:
                raise UnknownSymbol(name)
            table = self.tables[name]
            for args in itertools.product(self.carrier, repeat=arity):
                if args not in table:
                    raise InvalidAlgebra(
                        f"table of {name} is undefined at {args}"
                    )
                if table[args] not in elements:
                    raise InvalidAlgebra(
                        f"{name}{args} = {table[args]!r} leaves the carrier"
                    )
        extra = set(self.tables) - set(self.signature.names)
        if extra:
            raise UnknownSymbol(sorted(extra)[0])

    def apply(self, symbol, args):
        try:
            table = self.tables[symbol]
        except KeyError:
            raise UnknownSymbol(symbol)
        return table[tuple(args)]


def evaluate(t, algebra, assignment):
    """
    Evaluate a term in a finite algebra.

    :param assignment: mapping (or sequence) from variable index to
    carrier element
    """
    if isinstance(t, Var):
        try:
            return assignment[t.index]
        except (KeyError, IndexError):
            raise UnboundVariable(t.index)
    values = tuple(evaluate(arg, algebra, assignment) for arg in t.args)
    return algebra.apply(t.symbol, values)


def satisfies(algebra, identity):
    """
    True iff both sides agree under every assignment of the identity's
    variables. Vacuously true on an empty carrier when the context is
    non-empty.
    """
    for symbol in _identity_symbols(identity):
        if symbol not in algebra.tables:
            raise UnknownSymbol(symbol)

    for assignment in itertools.product(
        algebra.carrier, repeat=identity.context
    ):
        lhs = evaluate(identity.lhs, algebra, assignment)
        rhs = evaluate(identity.rhs, algebra, assignment)
        if lhs != rhs:
            return False
    return True


def failing_assignment(algebra, identity):
    """The first assignment refuting the identity, or None."""
    for assignment in itertools.product(
        algebra.carrier, repeat=identity.context
    ):
        lhs = evaluate(identity.lhs, algebra, assignment)
        rhs = evaluate(identity.rhs, algebra, assignment)
        if lhs != rhs:
            return assignment
    return None


def satisfies_all(algebra, identities):
    return all(satisfies(algebra, eq) for eq in identities)


def is_homomorphism(f, source, target):
    """
    True iff f commutes with every operation.

    :param f: mapping from source carrier to target carrier
    """
    if source.signature != target.signature:
        raise SignatureMismatch(
            "homomorphisms need algebras over the same signature"
        )
    for element in source.carrier:
        if element not in f:
            raise InvalidAlgebra(f"map is undefined at {element!r}")

    for name, arity in source.signature.symbols:
        for args in itertools.product(source.carrier, repeat=arity):
            image = f[source.apply(name, args)]
            expected = target.apply(name, tuple(f[a] for a in args))
            if image != expected:
                return False
    return True


def compose_homomorphisms(g, f):
    """The map x |-> g(f(x))."""
    return {x: g[y] for x, y in f.items()}


def _identity_symbols(identity):
    return symbols(identity.lhs) | symbols(identity.rhs)
