"""
Signatures, terms and identities.

Variables are numbered 0..m-1 inside an explicit context m; names only
exist in the document language.
"""

from dataclasses import dataclass
from typing import Mapping, Sequence, Tuple, Union

from structura.exceptions import (
    EmptyCarrierError,
    InvalidPresentation,
    UnboundVariable,
    UnknownSymbol,
)


@dataclass(frozen=True)
class Signature:
    symbols: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self,
            "symbols",
            tuple((str(name), int(arity)) for name, arity in self.symbols),
        )
        names = [name for name, _ in self.symbols]
        if len(set(names)) != len(names):
            raise InvalidPresentation(
                f"duplicate operation symbols in {names}"
            )
        for name, arity in self.symbols:
            if arity < 0:
                raise InvalidPresentation(f"{name} has negative arity")

    @property
    def names(self):
        return tuple(name for name, _ in self.symbols)

    @property
    def constants(self):
        return tuple(name for name, arity in self.symbols if arity == 0)

    @property
    def max_arity(self):
        return max((arity for _, arity in self.symbols), default=0)

    def arity(self, name):
        for symbol, arity in self.symbols:
            if symbol == name:
                return arity
        raise UnknownSymbol(name)

    def __contains__(self, name):
        return name in self.names


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class App:
    symbol: str
    args: Tuple["Term", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))

    def __str__(self):
        return render_term(self)


Term = Union[Var, App]


def variables(t):
    """The set of variable indices occurring in t."""
    if isinstance(t, Var):
        return frozenset([t.index])
    found = frozenset()
    for arg in t.args:
        found |= variables(arg)
    return found


def symbols(t):
    if isinstance(t, Var):
        return frozenset()
    found = frozenset([t.symbol])
    for arg in t.args:
        found |= symbols(arg)
    return found


def term_size(t):
    if isinstance(t, Var):
        return 1
    return 1 + sum(term_size(arg) for arg in t.args)


def render_term(t, names=None):
    """
    Render a term as text. Constants print without parentheses.

    :param names: optional mapping from variable index to a name
    """
    if isinstance(t, Var):
        if names is not None:
            return names[t.index]
        return f"x{t.index}"
    if not t.args:
        return t.symbol
    inner = ",".join(render_term(arg, names) for arg in t.args)
    return f"{t.symbol}({inner})"


def substitute(t, env):
    """
    Replace every Var(i) of t by env[i].

    :param env: mapping (or sequence) from variable index to term
    :raises UnboundVariable: if a variable of t has no image
    """
    if isinstance(t, Var):
        try:
            return env[t.index]
        except (KeyError, IndexError):
            raise UnboundVariable(t.index)
    return App(t.symbol, tuple(substitute(arg, env) for arg in t.args))


def compose_substitutions(first, second):
    """The environment i |-> substitute(first[i], second)."""
    if isinstance(first, Mapping):
        return {i: substitute(t, second) for i, t in first.items()}
    return tuple(substitute(t, second) for t in first)


def check_term(t, signature, context=None):
    """
    Check arities against the signature and variables against the
    context.
    """
    if isinstance(t, Var):
        if t.index < 0:
            raise InvalidPresentation(f"negative variable index in {t}")
        if context is not None and t.index >= context:
            raise UnboundVariable(t.index)
        return
    arity = signature.arity(t.symbol)
    if arity != len(t.args):
        raise InvalidPresentation(
            f"{t.symbol} expects {arity} arguments, got {len(t.args)}"
        )
    for arg in t.args:
        check_term(arg, signature, context)


@dataclass(frozen=True)
class Identity:
    """A universally closed equation lhs = rhs over `context` variables."""

    context: int
    lhs: Term
    rhs: Term

    def __post_init__(self):
        used = variables(self.lhs) | variables(self.rhs)
        if used and max(used) >= self.context:
            raise InvalidPresentation(
                f"identity {self} uses a variable outside its context "
                f"of {self.context}"
            )

    def __str__(self):
        return f"{render_term(self.lhs)} = {render_term(self.rhs)}"


def identity(lhs, rhs, context=None):
    """Build an identity whose context is the smallest one that fits."""
    if context is None:
        used = variables(lhs) | variables(rhs)
        context = max(used) + 1 if used else 0
    return Identity(context, lhs, rhs)


@dataclass(frozen=True)
class TheoryPresentation:
    signature: Signature
    identities: Tuple[Identity, ...] = ()
    name: str = ""
    oracle_hint: str = ""

    def __post_init__(self):
        object.__setattr__(self, "identities", tuple(self.identities))
        self.validate()

    def validate(self):
        for eq in self.identities:
            for side in (eq.lhs, eq.rhs):
                check_term(side, self.signature, eq.context)

    @property
    def has_constants(self):
        return bool(self.signature.constants)

    @property
    def has_ground_identities(self):
        return any(eq.context == 0 for eq in self.identities)

    def check_carrier_size(self, size):
        """
        Reject empty carriers when a constant or a ground identity
        needs an element.
        """
        if size:
            return
        if self.has_constants:
            raise EmptyCarrierError(
                f"theory {self.name or '<anonymous>'} declares constants "
                f"{list(self.signature.constants)}; the carrier is empty"
            )
        if self.has_ground_identities:
            raise EmptyCarrierError(
                "ground identities cannot be checked over an empty carrier"
            )


def basic_term(symbol, arity):
    """The term symbol(x0, ..., x_{arity-1})."""
    return App(symbol, tuple(Var(i) for i in range(arity)))


def make_signature(symbols: Sequence):
    return Signature(tuple(symbols))
