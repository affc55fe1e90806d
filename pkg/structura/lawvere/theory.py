"""
The one-sorted Lawvere theory of a presentation.

A morphism m -> n is an n-tuple of normal-form terms in the variables
x0..x{m-1}; composition substitutes and renormalizes. Hom-sets are
infinite in general and are only ever generated lazily, up to a weight
bound given by the oracle.
"""

import itertools
import logging
import random
import threading
from dataclasses import dataclass
from typing import Tuple

from structura import config
from structura.equational.algebra import evaluate
from structura.equational.models import find_models
from structura.equational.terms import (
    App,
    Term,
    Var,
    check_term,
    render_term,
    substitute,
    variables,
)
from structura.exceptions import CompositionError, OracleUnsound
from structura.fincat.category import EffectiveCategory, Functor, ProductCone
from structura.lawvere.presentations import oracle_for
from structura.lawvere.theory_n import build_theory_N

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TermTuple:
    source: int
    target: int
    terms: Tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __str__(self):
        if self.target == 1:
            return render_term(self.terms[0])
        return "(" + ", ".join(render_term(t) for t in self.terms) + ")"


def default_bound(presentation):
    return max(3, presentation.signature.max_arity + 1)


class LawvereTheory(EffectiveCategory):
    def __init__(self, presentation, oracle, bound, max_size=3):
        super().__init__()
        self.presentation = presentation
        self.oracle = oracle
        self.bound = bound
        self.max_size = max_size
        self.theory_n = build_theory_N(bound)
        self.theory_functor = Functor(
            self.theory_n,
            self,
            lambda n: n,
            lambda u: TermTuple(
                u.source, u.target, tuple(Var(i) for i in u.indices)
            ),
            name="T",
        )
        self._normal_forms = {}
        self._normal_forms_lock = threading.Lock()

    @property
    def name(self):
        return f"T[{self.presentation.name}]"

    def objects(self, max_points=None):
        return iter(range(self.bound + 1))

    def contains(self, obj):
        return isinstance(obj, int) and 0 <= obj <= self.bound

    def morphism(self, source, terms):
        """The morphism source -> len(terms) with normalized components."""
        terms = tuple(terms)
        for t in terms:
            check_term(t, self.presentation.signature, source)
        return TermTuple(
            source, len(terms), tuple(self.oracle.normalize(t) for t in terms)
        )

    def identity(self, obj):
        return TermTuple(obj, obj, tuple(Var(i) for i in range(obj)))

    def compose(self, g, f):
        if f.target != g.source:
            raise CompositionError(f"cannot compose {g} after {f}")
        return TermTuple(
            f.source,
            g.target,
            tuple(
                self.oracle.normalize(substitute(t, f.terms)) for t in g.terms
            ),
        )

    def is_morphism(self, f):
        if not isinstance(f, TermTuple) or len(f.terms) != f.target:
            return False
        for t in f.terms:
            used = variables(t)
            if used and max(used) >= f.source:
                return False
            if self.oracle.normalize(t) != t:
                return False
        return True

    def normal_forms(self, arity, max_size=None):
        """Memoized normal forms in `arity` variables, first use locked."""
        if max_size is None:
            max_size = self.max_size
        key = (arity, max_size)
        with self._normal_forms_lock:
            if key not in self._normal_forms:
                self._normal_forms[key] = tuple(
                    self.oracle.normal_forms(arity, max_size)
                )
            return self._normal_forms[key]

    def hom(self, source, target, max_size=None):
        forms = self.normal_forms(source, max_size)
        for terms in itertools.product(forms, repeat=target):
            yield TermTuple(source, target, terms)

    def product_cone(self, factors):
        apex = sum(factors)
        projections = []
        offset = 0
        for factor in factors:
            projections.append(
                TermTuple(
                    apex,
                    factor,
                    tuple(Var(i) for i in range(offset, offset + factor)),
                )
            )
            offset += factor

        def mediator(legs, source):
            terms = tuple(t for leg in legs for t in leg.terms)
            return TermTuple(source, apex, terms)

        return ProductCone(apex, tuple(projections), tuple(factors), mediator)

    def basic(self, symbol):
        """The morphism n -> 1 given by symbol(x0, ..., x{n-1})."""
        arity = self.presentation.signature.arity(symbol)
        return self.morphism(
            arity, [App(symbol, tuple(Var(i) for i in range(arity)))]
        )


def random_term(signature, context, depth, rng):
    leaves = [Var(i) for i in range(context)]
    leaves.extend(App(name) for name in signature.constants)
    branches = [(name, n) for name, n in signature.symbols if n > 0]
    if not leaves and not branches:
        return None
    if not branches or depth == 0 or (leaves and rng.random() < 0.3):
        if not leaves:
            return None
        return rng.choice(leaves)
    name, n = rng.choice(branches)
    args = []
    for _ in range(n):
        arg = random_term(signature, context, depth - 1, rng)
        if arg is None:
            return None
        args.append(arg)
    return App(name, tuple(args))


def _agree(s, t, model):
    used = variables(s) | variables(t)
    context = max(used) + 1 if used else 0
    for assignment in itertools.product(model.carrier, repeat=context):
        if evaluate(s, model, assignment) != evaluate(t, model, assignment):
            return assignment
    return None


def check_oracle(presentation, oracle, max_model_size=None, samples=None):
    """
    Both sides of every identity must normalize alike, and a random
    term must agree with its normal form in the small models.
    """
    for eq in presentation.identities:
        left = oracle.normalize(eq.lhs)
        right = oracle.normalize(eq.rhs)
        if left != right:
            raise OracleUnsound(
                f"{oracle.name} separates the identity {eq}: "
                f"{render_term(left)} vs {render_term(right)}"
            )

    if max_model_size is None:
        max_model_size = config.ORACLE_CHECK_MODEL_SIZE
    if samples is None:
        samples = config.ORACLE_CHECK_SAMPLES
    models = [
        model
        for size in range(1, max_model_size + 1)
        for model in find_models(presentation, size)
    ]
    rng = random.Random(config.SEED)
    for _ in range(samples):
        t = random_term(presentation.signature, 3, 3, rng)
        if t is None:
            break
        normal = oracle.normalize(t)
        for model in models:
            witness = _agree(t, normal, model)
            if witness is not None:
                raise OracleUnsound(
                    f"{oracle.name} rewrites {render_term(t)} to "
                    f"{render_term(normal)}, which differ at {witness} "
                    f"in a model on {len(model.carrier)} elements"
                )
    logger.debug(
        f"Oracle {oracle.name} checked against {len(models)} models",
        extra={"event": "check_oracle", "models": len(models)},
    )


def build_lawvere_theory(presentation, oracle=None, bound=None, max_size=3):
    """
    The theory of `presentation` with the given oracle, or the matching
    shipped one (falling back to bounded semantic equality).

    :raises OracleUnsound: if the oracle disagrees with the identities
    """
    if oracle is None:
        oracle = oracle_for(presentation)
    if bound is None:
        bound = default_bound(presentation)
    check_oracle(presentation, oracle)
    return LawvereTheory(presentation, oracle, bound, max_size)


def completeness_spot_check(theory, arity, max_size, max_model_size=None):
    """
    Pairs of distinct normal forms that no model up to `max_model_size`
    separates. Empty means the bounded completeness check passed.
    """
    if max_model_size is None:
        max_model_size = config.FALLBACK_MODEL_SIZE
    models = [
        model
        for size in range(1, max_model_size + 1)
        for model in find_models(theory.presentation, size)
    ]
    classes = {}
    for t in theory.normal_forms(arity, max_size):
        fingerprint = tuple(
            tuple(
                evaluate(t, model, assignment)
                for assignment in itertools.product(
                    model.carrier, repeat=arity
                )
            )
            for model in models
        )
        classes.setdefault(fingerprint, []).append(t)
    return [
        (s, t)
        for members in classes.values()
        for s, t in itertools.combinations(members, 2)
    ]
