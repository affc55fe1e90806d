"""
Lifting an adjunction F -| G to structured objects.

A functor that preserves finite products carries a structure on C to
one on F(C): each F(sigma) is precomposed with the inverse of the
canonical map F(C^n) -> F(C)^n. The lifted unit and counit have the
original unit and counit as underlying maps.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Any

from structura.exceptions import NotAMorphism, NotProductPreserving
from structura.fincat.category import (
    factor_lists,
    pair,
    power,
    product_preservation_failures,
)
from structura.lawvere.structures import StructuredObject
from structura.reports import Report

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LiftedMorphism:
    """A carrier morphism that commutes with every interpretation."""

    source: StructuredObject
    target: StructuredObject
    base: Any

    def __str__(self):
        return str(self.base)


def power_map(cat, h, source, target, n):
    """h^n : source^n -> target^n."""
    source_cone = power(cat, source, n)
    target_cone = power(cat, target, n)
    legs = [cat.compose(h, p) for p in source_cone.projections]
    return pair(cat, target_cone, legs, source=source_cone.apex)


def is_structure_morphism(h, source, target):
    """h . sigma_source = sigma_target . h^n for every symbol sigma."""
    cat = source.cat
    if cat.dom(h) != source.carrier or cat.cod(h) != target.carrier:
        return False
    for symbol, arity in source.presentation.signature.symbols:
        lhs = cat.compose(h, source.interpretation(symbol))
        rhs = cat.compose(
            target.interpretation(symbol),
            power_map(cat, h, source.carrier, target.carrier, arity),
        )
        if not cat.equal(lhs, rhs):
            return False
    return True


def lifted_morphism(source, target, base):
    """
    :raises NotAMorphism: if base does not commute with the
    interpretations
    """
    if not is_structure_morphism(base, source, target):
        raise NotAMorphism(
            f"{base} is not a morphism of structures {source} -> {target}"
        )
    return LiftedMorphism(source, target, base)


def forget_lifted(morphism):
    return morphism.base


def lifted_identity(structure):
    return LiftedMorphism(
        structure, structure, structure.cat.identity(structure.carrier)
    )


def compose_lifted(g, f):
    cat = f.source.cat
    return LiftedMorphism(f.source, g.target, cat.compose(g.base, f.base))


def enumerate_lifted_morphisms(source, target):
    """Every structure morphism source -> target, in hom order."""
    cat = source.cat
    for h in cat.hom(source.carrier, target.carrier):
        if is_structure_morphism(h, source, target):
            yield LiftedMorphism(source, target, h)


def invert_lifted(morphism):
    """
    The inverse structure morphism, or None if the base is no iso.

    :raises NotAMorphism: if the inverse base breaks the structure
    """
    cat = morphism.source.cat
    inverse = cat.inverse(morphism.base)
    if inverse is None:
        return None
    return lifted_morphism(morphism.target, morphism.source, inverse)


class LiftedAdjunction:
    """
    The adjunction between structures induced by F -| G.

    The comparison isos F(C^n) ~ F(C)^n are cached per (object, n).
    """

    def __init__(self, base, presentation):
        self.base = base
        self.presentation = presentation
        self._isos = {}
        self._isos_lock = threading.Lock()

    @property
    def name(self):
        return self.base.name

    @property
    def source(self):
        return self.base.source

    @property
    def target(self):
        return self.base.target

    def comparison_inverse(self, functor, obj, n):
        """Inverse of the canonical map functor(obj^n) -> functor(obj)^n."""
        key = (functor.name, obj, n)
        with self._isos_lock:
            if key in self._isos:
                return self._isos[key]
        source_cat, target_cat = functor.source, functor.target
        cone = power(source_cat, obj, n)
        legs = [functor.mor(p) for p in cone.projections]
        k = pair(
            target_cat,
            power(target_cat, functor.obj(obj), n),
            legs,
            source=functor.obj(cone.apex),
        )
        inverse = target_cat.inverse(k)
        if inverse is None:
            raise NotProductPreserving(
                f"{functor.name} does not preserve the power {obj}^{n}"
            )
        with self._isos_lock:
            return self._isos.setdefault(key, inverse)

    def _transport(self, functor, structure):
        cat = functor.target
        interpretations = {}
        for symbol, arity in self.presentation.signature.symbols:
            interpretations[symbol] = cat.compose(
                functor.mor(structure.interpretation(symbol)),
                self.comparison_inverse(functor, structure.carrier, arity),
            )
        return StructuredObject(
            cat,
            functor.obj(structure.carrier),
            self.presentation,
            interpretations,
        )

    def lift_F(self, structure):
        return self._transport(self.base.F, structure)

    def lift_G(self, structure):
        return self._transport(self.base.G, structure)

    def lift_F_morphism(self, morphism):
        return LiftedMorphism(
            self.lift_F(morphism.source),
            self.lift_F(morphism.target),
            self.base.F.mor(morphism.base),
        )

    def lift_G_morphism(self, morphism):
        return LiftedMorphism(
            self.lift_G(morphism.source),
            self.lift_G(morphism.target),
            self.base.G.mor(morphism.base),
        )

    def unit(self, structure):
        """The lifted unit C -> GF(C); its base is eta at the carrier."""
        return LiftedMorphism(
            structure,
            self.lift_G(self.lift_F(structure)),
            self.base.eta(structure.carrier),
        )

    def counit(self, structure):
        """The lifted counit FG(D) -> D; its base is eps at the carrier."""
        return LiftedMorphism(
            self.lift_F(self.lift_G(structure)),
            structure,
            self.base.epsilon(structure.carrier),
        )

    def alpha(self, structure, sigma):
        """sigma : F(C) -> D  |->  G(sigma) . eta_C : C -> G(D)."""
        base = self.source.compose(
            self.base.G.mor(sigma.base), self.base.eta(structure.carrier)
        )
        return LiftedMorphism(structure, self.lift_G(sigma.target), base)

    def beta(self, tau, structure):
        """tau : C -> G(D)  |->  eps_D . F(tau) : F(C) -> D."""
        base = self.target.compose(
            self.base.epsilon(structure.carrier), self.base.F.mor(tau.base)
        )
        return LiftedMorphism(self.lift_F(tau.source), structure, base)

    def __repr__(self):
        return f"LiftedAdjunction({self.name}, {self.presentation.name})"


def lift_adjunction(adj, presentation, sample=None):
    """
    Lift F -| G to structures. Only F has to preserve finite products;
    G does as a right adjoint.

    :raises NotProductPreserving: if F fails on the sample
    """
    if sample is None:
        sample = list(adj.source.objects(max_points=2))
    failures = product_preservation_failures(
        adj.F, factor_lists(sample, max_factors=2)
    )
    if failures:
        raise NotProductPreserving(
            f"{adj.F.name} does not preserve the products of {failures[0]}"
        )
    logger.debug(
        f"Lifted {adj.name} to {presentation.name}",
        extra={"event": "lift_adjunction", "adjunction": adj.name},
    )
    return LiftedAdjunction(adj, presentation)


def check_square(lifted, morphisms):
    """
    Forgetting commutes with lifting: the carrier of F(C) is F of the
    carrier, and the base of F(h) is F of the base, for every lifted
    morphism h.
    """
    report = Report(f"square for {lifted.name}")
    F = lifted.base.F
    for h in morphisms:
        for structure in (h.source, h.target):
            image = lifted.lift_F(structure)
            if image.carrier != F.obj(structure.carrier):
                report.fail(f"carrier of F({structure})", str(image.carrier))
        image = lifted.lift_F_morphism(h)
        if not lifted.target.equal(forget_lifted(image), F.mor(h.base)):
            report.fail(f"F of {h}", str(image.base))
        elif not is_structure_morphism(image.base, image.source, image.target):
            report.fail(f"F of {h} is not a structure morphism")
        else:
            report.ok(f"F of {h}")
    return report


def check_transposition(lifted, structure_c, structure_d):
    """
    alpha and beta are mutually inverse between the structure morphisms
    F(C) -> D and C -> G(D). Also checks that the lifted unit and
    counit lie over eta and eps.
    """
    report = Report(
        f"transposition for {lifted.name} at {structure_c.carrier}, "
        f"{structure_d.carrier}"
    )
    source, target = lifted.source, lifted.target
    F_c = lifted.lift_F(structure_c)
    G_d = lifted.lift_G(structure_d)

    unit = lifted.unit(structure_c)
    if not is_structure_morphism(unit.base, unit.source, unit.target):
        report.fail(f"lifted unit at {structure_c.carrier}", str(unit))
    counit = lifted.counit(structure_d)
    if not is_structure_morphism(counit.base, counit.source, counit.target):
        report.fail(f"lifted counit at {structure_d.carrier}", str(counit))

    right = list(enumerate_lifted_morphisms(F_c, structure_d))
    left = list(enumerate_lifted_morphisms(structure_c, G_d))
    report.count("left morphisms", len(left))
    report.count("right morphisms", len(right))
    for sigma in right:
        back = lifted.beta(lifted.alpha(structure_c, sigma), structure_d)
        if target.equal(back.base, sigma.base):
            report.ok(f"beta(alpha({sigma}))")
        else:
            report.fail(f"beta(alpha({sigma}))", str(back))
    for tau in left:
        back = lifted.alpha(structure_c, lifted.beta(tau, structure_d))
        if source.equal(back.base, tau.base):
            report.ok(f"alpha(beta({tau}))")
        else:
            report.fail(f"alpha(beta({tau}))", str(back))
    if len(left) != len(right):
        report.fail(
            "hom bijection", f"{len(left)} left vs {len(right)} right"
        )
    return report
