"""
Effective categories: computable composition, decidable equality of
morphisms and, where possible, enumerable objects and hom-sets.
"""

import itertools
import logging
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Tuple

from structura import config
from structura.exceptions import (
    NoMediator,
    NonUniqueMediator,
    NoProduct,
    NotEnumerable,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProductCone:
    """A cone over `factors` with apex and one projection per factor.

    `mediator`, when given, builds the mediating morphism from a list of
    legs and their common domain.
    """

    apex: Any
    projections: Tuple[Any, ...]
    factors: Tuple[Any, ...]
    mediator: Optional[Callable] = field(default=None, compare=False)


class EffectiveCategory:
    name = "category"
    default_points = config.SAMPLE_POINTS

    def __init__(self):
        self._products = {}
        self._products_lock = threading.Lock()

    # Subclasses provide the structure below
    def objects(self, max_points=None):
        raise NotEnumerable(f"{self.name} cannot enumerate its objects")

    def hom(self, source, target):
        raise NotEnumerable(f"{self.name} cannot enumerate hom-sets")

    def identity(self, obj):
        raise NotImplementedError

    def compose(self, g, f):
        """g after f."""
        raise NotImplementedError

    def dom(self, f):
        return f.source

    def cod(self, f):
        return f.target

    def equal(self, f, g):
        return f == g

    def is_morphism(self, f):
        return True

    def contains(self, obj):
        return True

    def product_cone(self, factors):
        """Constructive products; None when the category has none."""
        return None

    def explain(self, f):
        return ""

    def cached_product(self, factors):
        factors = tuple(factors)
        with self._products_lock:
            cone = self._products.get(factors)
        if cone is not None:
            return cone
        cone = self.product_cone(factors)
        if cone is not None:
            with self._products_lock:
                cone = self._products.setdefault(factors, cone)
        return cone

    def terminal(self):
        return product(self, ()).apex

    def find_mediator(self, cone, legs, source):
        """Search hom(source, apex) for the unique mediating morphism."""
        found = [
            h
            for h in self.hom(source, cone.apex)
            if all(
                self.equal(self.compose(p, h), leg)
                for p, leg in zip(cone.projections, legs)
            )
        ]
        if not found:
            raise NoMediator(f"no mediator into {cone.apex} from {source}")
        if len(found) > 1:
            raise NonUniqueMediator(
                f"{len(found)} mediators into {cone.apex} from {source}"
            )
        return found[0]

    def is_isomorphism(self, f):
        source, target = self.dom(f), self.cod(f)
        if source == target and self.equal(f, self.identity(source)):
            return True
        for g in self.hom(target, source):
            if self.equal(
                self.compose(g, f), self.identity(source)
            ) and self.equal(self.compose(f, g), self.identity(target)):
                return True
        return False

    def inverse(self, f):
        for g in self.hom(self.cod(f), self.dom(f)):
            if self.equal(
                self.compose(g, f), self.identity(self.dom(f))
            ) and self.equal(self.compose(f, g), self.identity(self.cod(f))):
                return g
        return None

    def sample(self, max_points=None):
        return list(self.objects(max_points))

    def __repr__(self):
        return self.name


def product(cat, factors, sample=None):
    """
    A product cone over `factors`. The unary product is the factor
    itself with its identity; the empty product is the terminal object.
    """
    factors = tuple(factors)
    if len(factors) == 1:
        only = factors[0]
        return ProductCone(
            only,
            (cat.identity(only),),
            factors,
            mediator=lambda legs, source: legs[0],
        )
    cone = cat.cached_product(factors)
    if cone is not None:
        return cone
    return search_product(cat, factors, sample)


def power(cat, obj, n):
    return product(cat, (obj,) * n)


def search_product(cat, factors, sample=None):
    """
    Find a product by universal-property search over enumerable
    objects; the least apex in enumeration order wins.
    """
    if sample is None:
        sample = cat.sample()
    for apex in cat.objects():
        homs = [list(cat.hom(apex, factor)) for factor in factors]
        for projections in itertools.product(*homs):
            cone = ProductCone(apex, tuple(projections), factors)
            if not check_universal_property(cat, cone, sample):
                logger.debug(
                    f"Found product of {factors} at {apex}",
                    extra={"event": "product_search"},
                )
                return cone
    raise NoProduct(f"no product of {factors} in {cat.name}")


def pair(cat, cone, legs, source=None):
    """
    The unique h with projection_i . h = leg_i.

    :param source: common domain of the legs, required without legs
    """
    legs = tuple(legs)
    if len(legs) != len(cone.factors):
        raise NoMediator(
            f"{len(legs)} legs given for {len(cone.factors)} factors"
        )
    if source is None:
        if not legs:
            raise NoMediator("pairing zero legs needs an explicit source")
        source = cat.dom(legs[0])
    for leg, factor in zip(legs, cone.factors):
        if cat.dom(leg) != source or cat.cod(leg) != factor:
            raise NoMediator(f"leg {leg} does not match {factor}")
    if cone.mediator is not None:
        return cone.mediator(legs, source)
    return cat.find_mediator(cone, legs, source)


def check_universal_property(cat, cone, sample):
    """
    Failures of the universal property over test objects: a list of
    (object, legs, number of mediators) for every cone without exactly
    one mediator.
    """
    failures = []
    for obj in sample:
        homs = [list(cat.hom(obj, factor)) for factor in cone.factors]
        candidates = list(cat.hom(obj, cone.apex))
        for legs in itertools.product(*homs):
            count = sum(
                1
                for h in candidates
                if all(
                    cat.equal(cat.compose(p, h), leg)
                    for p, leg in zip(cone.projections, legs)
                )
            )
            if count != 1:
                failures.append((obj, legs, count))
    return failures


def product_preservation_failures(functor, factor_lists):
    """
    Factor tuples whose source product is not sent to a universal cone:
    the comparison map into the target product must be an isomorphism.
    """
    source, target = functor.source, functor.target
    failures = []
    for factors in factor_lists:
        factors = tuple(factors)
        cone = product(source, factors)
        image_apex = functor.obj(cone.apex)
        image_legs = [functor.mor(p) for p in cone.projections]
        target_cone = product(target, [functor.obj(f) for f in factors])
        try:
            comparison = pair(target, target_cone, image_legs, image_apex)
        except (NoMediator, NonUniqueMediator):
            failures.append(factors)
            continue
        if not target.is_isomorphism(comparison):
            failures.append(factors)
    return failures


def is_product_preserving(functor, factor_lists):
    return not product_preservation_failures(functor, factor_lists)


def factor_lists(objects, max_factors=2):
    """Every tuple of at most `max_factors` objects, the empty one first."""
    objects = list(objects)
    lists = []
    for count in range(max_factors + 1):
        lists.extend(itertools.product(objects, repeat=count))
    return lists


class Functor:
    def __init__(self, source, target, on_object, on_morphism, name="F"):
        self.source = source
        self.target = target
        self._on_object = on_object
        self._on_morphism = on_morphism
        self.name = name

    def obj(self, x):
        return self._on_object(x)

    def mor(self, f):
        return self._on_morphism(f)

    def __repr__(self):
        return f"Functor({self.name}: {self.source} -> {self.target})"


def identity_functor(cat):
    return Functor(cat, cat, lambda x: x, lambda f: f, name=f"Id_{cat}")


def compose_functors(g, f):
    """The functor g after f."""
    return Functor(
        f.source,
        g.target,
        lambda x: g.obj(f.obj(x)),
        lambda m: g.mor(f.mor(m)),
        name=f"{g.name}{f.name}",
    )


def check_functor(functor, objects):
    """Identity and composition failures over the given objects."""
    source, target = functor.source, functor.target
    objects = list(objects)
    failures = []
    for obj in objects:
        if not target.equal(
            functor.mor(source.identity(obj)),
            target.identity(functor.obj(obj)),
        ):
            failures.append(f"{functor.name} does not preserve id at {obj}")
    for a, b, c in itertools.product(objects, repeat=3):
        for f in source.hom(a, b):
            for g in source.hom(b, c):
                lhs = functor.mor(source.compose(g, f))
                rhs = target.compose(functor.mor(g), functor.mor(f))
                if not target.equal(lhs, rhs):
                    failures.append(
                        f"{functor.name} does not preserve composition "
                        f"of {f} and {g}"
                    )
    return failures


class NatTrans:
    """A natural transformation between parallel functors."""

    def __init__(self, source, target, component, name="alpha"):
        self.source = source
        self.target = target
        self._component = component
        self.name = name

    def component(self, obj):
        return self._component(obj)

    def __getitem__(self, obj):
        return self._component(obj)

    def __repr__(self):
        return (
            f"NatTrans({self.name}: {self.source.name} => "
            f"{self.target.name})"
        )


def identity_transformation(functor, name="id"):
    cat = functor.target
    return NatTrans(
        functor, functor, lambda x: cat.identity(functor.obj(x)), name=name
    )


def check_naturality(transformation, objects):
    """Morphisms f : A -> B whose naturality square fails."""
    domain = transformation.source.source
    target = transformation.source.target
    objects = list(objects)
    failures = []
    for a, b in itertools.product(objects, repeat=2):
        for f in domain.hom(a, b):
            lhs = target.compose(
                transformation.target.mor(f), transformation[a]
            )
            rhs = target.compose(
                transformation[b], transformation.source.mor(f)
            )
            if not target.equal(lhs, rhs):
                failures.append((a, b, f))
    return failures
