"""
Structured objects: an object C of a category with finite products,
one morphism C^n -> C per n-ary symbol, and the identity diagrams
commuting. Also the bridge to product-preserving functors out of the
Lawvere theory, and the N-algebras evaluated at 1.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict

from structura.equational.algebra import FinAlgebra
from structura.equational.terms import TheoryPresentation, Var
from structura.exceptions import (
    InvalidStructure,
    NotProductPreserving,
    StructuraError,
    UnboundVariable,
    UnknownSymbol,
)
from structura.fincat.category import (
    Functor,
    NatTrans,
    ProductCone,
    factor_lists,
    pair,
    power,
    product,
    product_preservation_failures,
)
from structura.fincat.finset import PointMap, render_point
from structura.lawvere.theory_n import build_theory_N
from structura.reports import Report

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=True)
class StructuredObject:
    cat: Any
    carrier: Any
    presentation: TheoryPresentation
    interpretations: Dict[str, Any]

    def interpretation(self, symbol):
        try:
            return self.interpretations[symbol]
        except KeyError:
            raise UnknownSymbol(symbol)

    def __str__(self):
        name = self.presentation.name or "structure"
        return f"{name} on {self.carrier} in {self.cat.name}"


def interpret(t, structure, context):
    """The term t as a morphism C^context -> C."""
    cat = structure.cat
    cone = power(cat, structure.carrier, context)
    if isinstance(t, Var):
        if t.index >= context:
            raise UnboundVariable(t.index)
        return cone.projections[t.index]
    legs = [interpret(arg, structure, context) for arg in t.args]
    target = power(cat, structure.carrier, len(t.args))
    tupled = pair(cat, target, legs, source=cone.apex)
    return cat.compose(structure.interpretation(t.symbol), tupled)


def _expected_shape(structure, arity):
    return power(structure.cat, structure.carrier, arity).apex


def _difference(lhs, rhs):
    """The first point where two point maps disagree."""
    for point, a, b in zip(lhs.source.points, lhs.images, rhs.images):
        if a != b:
            return (
                f"at {render_point(point)}: "
                f"{render_point(a)} vs {render_point(b)}"
            )
    return f"{lhs} vs {rhs}"


def validate_structure(structure, presentation=None):
    """
    Check every interpretation is a morphism of the right shape, then
    every identity diagram. No FAIL records means the structure is
    valid.
    """
    if presentation is None:
        presentation = structure.presentation
    cat = structure.cat
    report = Report(f"structure {presentation.name or 'anonymous'}")

    if not cat.contains(structure.carrier):
        report.fail(f"carrier {structure.carrier} is not in {cat.name}")
        return report
    try:
        presentation.check_carrier_size(len(structure.carrier))
    except StructuraError as error:
        report.fail("carrier", str(error))
        return report

    shapes_ok = True
    for symbol, arity in presentation.signature.symbols:
        f = structure.interpretations.get(symbol)
        if f is None:
            report.fail(f"{symbol} has no interpretation")
            shapes_ok = False
            continue
        source = _expected_shape(structure, arity)
        target = structure.carrier
        if cat.dom(f) != source or cat.cod(f) != target:
            report.fail(
                f"{symbol} must be a morphism {source} -> {target}", str(f)
            )
            shapes_ok = False
        elif not cat.is_morphism(f):
            report.fail(
                f"{symbol} is not a morphism of {cat.name}", cat.explain(f)
            )
            shapes_ok = False
    extra = set(structure.interpretations) - set(
        presentation.signature.names
    )
    for symbol in sorted(extra):
        report.fail(f"{symbol} is not declared by {presentation.name}")
        shapes_ok = False
    if not shapes_ok:
        return report

    for eq in presentation.identities:
        lhs = interpret(eq.lhs, structure, eq.context)
        rhs = interpret(eq.rhs, structure, eq.context)
        if cat.equal(lhs, rhs):
            report.ok(str(eq))
        elif isinstance(lhs, PointMap):
            report.fail(str(eq), _difference(lhs, rhs))
        else:
            report.fail(str(eq), f"{lhs} vs {rhs}")
    return report


def require_valid(structure):
    report = validate_structure(structure)
    if not report.verified:
        raise InvalidStructure(
            f"{structure} fails {len(report.failures)} checks", report
        )
    return structure


def _table_key(point, arity):
    return (point,) if arity == 1 else point


def structure_from_tables(cat, carrier, presentation, tables):
    """
    Build a structure from operation tables: tables[symbol] maps an
    argument tuple to a point of the carrier.
    """
    interpretations = {}
    for symbol, arity in presentation.signature.symbols:
        table = tables.get(symbol)
        if table is None:
            raise InvalidStructure(f"no table for {symbol}")
        source = power(cat, carrier, arity).apex
        images = []
        for point in source.points:
            key = _table_key(point, arity)
            if key not in table:
                raise InvalidStructure(
                    f"{symbol} has no entry for {render_point(key)}"
                )
            images.append(table[key])
        interpretations[symbol] = PointMap(source, carrier, tuple(images))
    return StructuredObject(cat, carrier, presentation, interpretations)


def structure_tables(structure):
    """Operation tables of a structure over a point-map category."""
    tables = {}
    for symbol, arity in structure.presentation.signature.symbols:
        f = structure.interpretation(symbol)
        tables[symbol] = {
            _table_key(point, arity): image
            for point, image in zip(f.source.points, f.images)
        }
    return tables


def structure_algebra(structure):
    return FinAlgebra(
        structure.presentation.signature,
        structure.carrier.points,
        structure_tables(structure),
    )


def render_tables(structure):
    """One line per symbol: `m: (a,a)->a (a,b)->b ...`."""
    lines = []
    for symbol, _ in structure.presentation.signature.symbols:
        f = structure.interpretation(symbol)
        entries = " ".join(
            f"{render_point(point)}->{render_point(image)}"
            for point, image in zip(f.source.points, f.images)
        )
        lines.append(f"{symbol}: {entries}".rstrip())
    return lines


def structure_to_functor(structure, theory):
    """The product-preserving functor T -> C picking out `structure`."""
    require_valid(structure)
    cat = structure.cat

    def on_object(n):
        return power(cat, structure.carrier, n).apex

    def on_morphism(f):
        legs = [interpret(t, structure, f.source) for t in f.terms]
        return pair(
            cat,
            power(cat, structure.carrier, f.target),
            legs,
            source=on_object(f.source),
        )

    return Functor(
        theory, cat, on_object, on_morphism, name=f"<{structure}>"
    )


def comparison(functor, n):
    """
    The canonical map A(n) -> A(1)^n out of the image of the product
    cone of n copies of 1.
    """
    source, target = functor.source, functor.target
    cone = product(source, (1,) * n)
    legs = [functor.mor(p) for p in cone.projections]
    return pair(
        target,
        power(target, functor.obj(1), n),
        legs,
        source=functor.obj(cone.apex),
    )


def functor_to_structure(functor, presentation=None):
    """
    Read a structure off a product-preserving functor out of a Lawvere
    theory: C = A(1) and sigma = A(sigma(x0..)) after the inverse of the
    comparison iso A(n) ~ C^n.

    :raises NotProductPreserving: if a comparison map is not invertible
    """
    theory = functor.source
    if presentation is None:
        presentation = theory.presentation
    cat = functor.target
    interpretations = {}
    for symbol, arity in presentation.signature.symbols:
        k = comparison(functor, arity)
        inverse = cat.inverse(k)
        if inverse is None:
            raise NotProductPreserving(
                f"{functor.name} does not preserve the power 1^{arity}"
            )
        interpretations[symbol] = cat.compose(
            functor.mor(theory.basic(symbol)), inverse
        )
    return StructuredObject(
        cat, functor.obj(1), presentation, interpretations
    )


def theory_n_algebra(cat, obj, bound):
    """The N-algebra n |-> obj^n of an object, as a functor N -> cat."""
    theory_n = build_theory_N(bound)

    def on_object(n):
        return power(cat, obj, n).apex

    def on_morphism(u):
        cone = power(cat, obj, u.source)
        legs = [cone.projections[i] for i in u.indices]
        return pair(cat, power(cat, obj, u.target), legs, source=cone.apex)

    return Functor(theory_n, cat, on_object, on_morphism, name=f"<{obj}>")


def _require_products(functor, max_factors=2):
    objects = [n for n in functor.source.objects() if n <= 2]
    failures = product_preservation_failures(
        functor, factor_lists(objects, max_factors)
    )
    if failures:
        raise NotProductPreserving(
            f"{functor.name} does not preserve the products of {failures}"
        )


def eval_at_one(algebra):
    """
    A(1) for an N-algebra, or the component at 1 of a morphism of
    N-algebras.
    """
    if isinstance(algebra, NatTrans):
        _require_products(algebra.source)
        _require_products(algebra.target)
        return algebra.component(1)
    _require_products(algebra)
    return algebra.obj(1)


def extend_component(source, target, component, n):
    """
    The component at n of the unique transformation with the given
    component at 1: sigma_n is sigma_1 x ... x sigma_1.
    """
    theory_n = source.source
    cat = source.target
    unit_cone = product(theory_n, (1,) * n)
    legs = [
        cat.compose(component, source.mor(p)) for p in unit_cone.projections
    ]
    image = ProductCone(
        target.obj(n),
        tuple(target.mor(p) for p in unit_cone.projections),
        (target.obj(1),) * n,
    )
    return pair(cat, image, legs, source=source.obj(n))


def enumerate_transformations(source, target, max_object=None):
    """
    Every natural transformation between two N-algebras, found by
    brute force over the components at 0..max_object.
    """
    theory_n = source.source
    cat = source.target
    if max_object is None:
        max_object = min(theory_n.bound, 2)
    objects = list(range(max_object + 1))
    homs = [list(cat.hom(source.obj(n), target.obj(n))) for n in objects]
    found = []
    for components in itertools.product(*homs):
        table = dict(zip(objects, components))
        natural = all(
            cat.equal(
                cat.compose(target.mor(u), table[a]),
                cat.compose(table[b], source.mor(u)),
            )
            for a in objects
            for b in objects
            for u in theory_n.hom(a, b)
        )
        if natural:
            found.append(table)
    logger.debug(
        f"Found {len(found)} transformations {source.name} => "
        f"{target.name}",
        extra={"event": "enumerate_transformations"},
    )
    return found

