"""
Built-in presentations, addressable by name, and the matching of a
user presentation against them to pick a word-problem oracle.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict

from structura.equational.terms import (
    App,
    TheoryPresentation,
    Var,
    identity,
    make_signature,
    render_term,
)
from structura.exceptions import OracleUnsound, UsageError
from structura.lawvere.oracles import (
    AbelianGroupOracle,
    BoundedSemanticOracle,
    CommMonoidOracle,
    GroupOracle,
    MonoidOracle,
    RingOracle,
    SyntacticOracle,
)

logger = logging.getLogger(__name__)

x, y, z = Var(0), Var(1), Var(2)


def _op(symbol, *args):
    return App(symbol, args)


def _associative(symbol):
    return identity(
        _op(symbol, _op(symbol, x, y), z), _op(symbol, x, _op(symbol, y, z))
    )


def _commutative(symbol):
    return identity(_op(symbol, x, y), _op(symbol, y, x))


def _monoid_identities(mul, unit):
    return [
        identity(_op(mul, _op(unit), x), x),
        identity(_op(mul, x, _op(unit)), x),
        _associative(mul),
    ]


def _group_identities(mul, unit, inv):
    return _monoid_identities(mul, unit) + [
        identity(_op(mul, x, _op(inv, x)), _op(unit)),
        identity(_op(mul, _op(inv, x), x), _op(unit)),
    ]


@dataclass(frozen=True)
class Builtin:
    presentation: TheoryPresentation
    oracle: type
    renaming: Dict[str, str]


def _builtin(name, symbols, identities, oracle, renaming=None):
    presentation = TheoryPresentation(
        make_signature(symbols), tuple(identities), name=name
    )
    return Builtin(presentation, oracle, renaming or {})


BUILTINS = {
    "monoid": _builtin(
        "monoid",
        [("m", 2), ("e", 0)],
        _monoid_identities("m", "e"),
        MonoidOracle,
        {"mul": "m", "unit": "e"},
    ),
    "comm-monoid": _builtin(
        "comm-monoid",
        [("m", 2), ("e", 0)],
        _monoid_identities("m", "e") + [_commutative("m")],
        CommMonoidOracle,
        {"mul": "m", "unit": "e"},
    ),
    "group": _builtin(
        "group",
        [("m", 2), ("e", 0), ("i", 1)],
        _group_identities("m", "e", "i"),
        GroupOracle,
        {"mul": "m", "unit": "e", "inv": "i"},
    ),
    "abelian-group": _builtin(
        "abelian-group",
        [("m", 2), ("e", 0), ("i", 1)],
        _group_identities("m", "e", "i") + [_commutative("m")],
        AbelianGroupOracle,
        {"mul": "m", "unit": "e", "inv": "i"},
    ),
    "ring": _builtin(
        "ring",
        [("add", 2), ("mul", 2), ("neg", 1), ("zero", 0), ("one", 0)],
        [
            _associative("add"),
            _commutative("add"),
            identity(_op("add", _op("zero"), x), x),
            identity(_op("add", x, _op("neg", x)), _op("zero")),
            _associative("mul"),
            identity(_op("mul", _op("one"), x), x),
            identity(_op("mul", x, _op("one")), x),
            identity(
                _op("mul", x, _op("add", y, z)),
                _op("add", _op("mul", x, y), _op("mul", x, z)),
            ),
            identity(
                _op("mul", _op("add", x, y), z),
                _op("add", _op("mul", x, z), _op("mul", y, z)),
            ),
        ],
        RingOracle,
        {
            "add": "add",
            "mul": "mul",
            "neg": "neg",
            "zero": "zero",
            "one": "one",
        },
    ),
    "pointed-set": _builtin("pointed-set", [("p", 0)], [], SyntacticOracle),
    "magma": _builtin("magma", [("m", 2)], [], SyntacticOracle),
}


def builtin_presentation(name):
    try:
        return BUILTINS[name].presentation
    except KeyError:
        raise UsageError(
            f"unknown built-in theory {name!r}; "
            f"expected one of {', '.join(sorted(BUILTINS))}"
        )


def rename_symbols(t, mapping):
    if isinstance(t, Var):
        return t
    return App(
        mapping.get(t.symbol, t.symbol),
        tuple(rename_symbols(arg, mapping) for arg in t.args),
    )


def _renumber(terms):
    order = {}

    def walk(t):
        if isinstance(t, Var):
            order.setdefault(t.index, len(order))
            return
        for arg in t.args:
            walk(arg)

    for t in terms:
        walk(t)
    names = {i: f"v{k}" for i, k in order.items()}
    return tuple(render_term(t, names) for t in terms)


def canonical_identity(eq):
    """
    A text key for an identity that ignores orientation and variable
    numbering.
    """
    return min(
        " = ".join(_renumber(sides))
        for sides in ((eq.lhs, eq.rhs), (eq.rhs, eq.lhs))
    )


def _canonical_set(identities):
    return frozenset(canonical_identity(eq) for eq in identities)


def find_renaming(builtin, presentation):
    """
    A bijection from the built-in's symbols to the presentation's,
    preserving arities, under which both sets of identities agree.
    Returns None when there is none.
    """
    ours = builtin.presentation.signature
    theirs = presentation.signature
    if sorted(a for _, a in ours.symbols) != sorted(
        a for _, a in theirs.symbols
    ):
        return None
    target = _canonical_set(presentation.identities)
    for names in itertools.permutations(theirs.names):
        mapping = dict(zip(ours.names, names))
        if any(ours.arity(a) != theirs.arity(b) for a, b in mapping.items()):
            continue
        renamed = [
            identity(
                rename_symbols(eq.lhs, mapping),
                rename_symbols(eq.rhs, mapping),
                eq.context,
            )
            for eq in builtin.presentation.identities
        ]
        if _canonical_set(renamed) == target:
            return mapping
    return None


def _instantiate(builtin, presentation, mapping):
    renaming = {role: mapping[sym] for role, sym in builtin.renaming.items()}
    return builtin.oracle(presentation, renaming)


def match_builtin_oracle(presentation):
    """
    The shipped oracle deciding `presentation`, or None.

    An `oracle` hint restricts matching to that built-in and is an
    error when the identities do not agree with it.
    """
    if presentation.oracle_hint:
        hint = presentation.oracle_hint
        if hint not in BUILTINS:
            raise UsageError(f"unknown oracle {hint!r}")
        mapping = find_renaming(BUILTINS[hint], presentation)
        if mapping is None:
            raise OracleUnsound(
                f"theory {presentation.name} does not present {hint}"
            )
        return _instantiate(BUILTINS[hint], presentation, mapping)
    if not presentation.identities:
        return SyntacticOracle(presentation)
    for name, builtin in BUILTINS.items():
        if not builtin.presentation.identities:
            continue
        mapping = find_renaming(builtin, presentation)
        if mapping is not None:
            logger.debug(
                f"Theory {presentation.name} matches built-in {name}",
                extra={"event": "oracle_match", "builtin": name},
            )
            return _instantiate(builtin, presentation, mapping)
    return None


def oracle_for(presentation, allow_bounded=True):
    """A shipped oracle if one matches, else the bounded fallback."""
    oracle = match_builtin_oracle(presentation)
    if oracle is not None:
        return oracle
    if not allow_bounded:
        raise OracleUnsound(
            f"no shipped oracle decides {presentation.name}; "
            "the bounded fallback was not accepted"
        )
    logger.warning(
        f"No shipped oracle for {presentation.name}, "
        "using bounded semantic equality",
        extra={"event": "oracle_fallback", "theory": presentation.name},
    )
    return BoundedSemanticOracle(presentation)
