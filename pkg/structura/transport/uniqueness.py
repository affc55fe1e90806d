"""
Brute-force uniqueness of ascent and descent.

Every competing structure over the same base datum must be connected
to the canonical one by an isomorphism of comma-category objects: a
structure isomorphism delta whose underlying map makes the triangle
with the unit (or counit) commute. A plain structure isomorphism is not
enough. All such isomorphisms are counted.
"""

import logging

from structura.lawvere.structures import render_tables, validate_structure
from structura.reports import Report
from structura.transport.ascent import ascend, descend, on_side
from structura.transport.enumeration import enumerate_structures
from structura.transport.lifted import is_structure_morphism

logger = logging.getLogger(__name__)


def _describe(structure):
    return "; ".join(render_tables(structure)) or "bare"


def _isomorphisms(cat, source, target, triangle):
    """Structure isos source -> target whose base satisfies `triangle`."""
    found = []
    for delta in cat.hom(source.carrier, target.carrier):
        if not triangle(delta):
            continue
        if not cat.is_isomorphism(delta):
            continue
        if is_structure_morphism(delta, source, target):
            found.append(delta)
    return found


def _check_canonical(report, structure, morphism, label):
    validity = validate_structure(structure)
    for record in validity.failures:
        report.fail(f"canonical {label}: {record.subject}", record.witness)
    if not is_structure_morphism(
        morphism.base, morphism.source, morphism.target
    ):
        report.fail(
            f"canonical {label} map is not a structure morphism",
            str(morphism.base),
        )


def verify_unique_ascent(structure, lifted, canonical=None, bounds=None):
    """
    Check that every (D0, phi0) with D0 on F(C) and phi0 over eta_C is
    isomorphic to the canonical ascent (F(C), unit).

    :param canonical: the pair to test against, the computed ascent by
    default
    """
    structure = on_side(lifted.source, structure, "ascent")
    if canonical is None:
        canonical = ascend(structure, lifted)
    ascended, phi = canonical
    source, target = lifted.source, lifted.target
    G = lifted.base.G
    eta = lifted.base.eta(structure.carrier)

    report = Report(f"unique ascent of {structure} along {lifted.name}")
    _check_canonical(report, ascended, phi, "ascent")

    candidates = enumerate_structures(
        lifted.presentation, ascended.carrier, target, bounds
    )
    report.count("candidates", len(candidates))
    for index, competitor in enumerate(candidates):
        lifted_competitor = lifted.lift_G(competitor)
        if not is_structure_morphism(eta, structure, lifted_competitor):
            continue
        report.count("competitors")

        def triangle(delta):
            return source.equal(source.compose(G.mor(delta), phi.base), eta)

        isos = _isomorphisms(target, ascended, competitor, triangle)
        report.count("isomorphisms", len(isos))
        subject = f"competitor {_describe(competitor)}"
        if isos:
            report.ok(subject, f"isomorphisms={len(isos)}", index=index)
        else:
            report.fail(subject, "no comma isomorphism", index=index)

    logger.info(
        f"Unique ascent sweep: {len(report.failures)} failures",
        extra={"event": "verify_unique_ascent", **report.summary()},
    )
    return report


def verify_unique_descent(structure, lifted, canonical=None, bounds=None):
    """
    Check that every (C0, psi0) with C0 on G(D) and psi0 over eps_D is
    isomorphic to the canonical descent (G(D), counit).
    """
    structure = on_side(lifted.target, structure, "descent")
    if canonical is None:
        canonical = descend(structure, lifted)
    descended, psi = canonical
    source, target = lifted.source, lifted.target
    F = lifted.base.F
    epsilon = lifted.base.epsilon(structure.carrier)

    report = Report(f"unique descent of {structure} along {lifted.name}")
    _check_canonical(report, descended, psi, "descent")

    candidates = enumerate_structures(
        lifted.presentation, descended.carrier, source, bounds
    )
    report.count("candidates", len(candidates))
    for index, competitor in enumerate(candidates):
        lifted_competitor = lifted.lift_F(competitor)
        if not is_structure_morphism(epsilon, lifted_competitor, structure):
            continue
        report.count("competitors")

        def triangle(delta):
            return target.equal(
                target.compose(epsilon, F.mor(delta)), psi.base
            )

        isos = _isomorphisms(source, descended, competitor, triangle)
        report.count("isomorphisms", len(isos))
        subject = f"competitor {_describe(competitor)}"
        if isos:
            report.ok(subject, f"isomorphisms={len(isos)}", index=index)
        else:
            report.fail(subject, "no comma isomorphism", index=index)

    logger.info(
        f"Unique descent sweep: {len(report.failures)} failures",
        extra={"event": "verify_unique_descent", **report.summary()},
    )
    return report


def unique_ascent_sweep(lifted, max_points, bounds=None):
    """verify_unique_ascent for every structure on every small object."""
    report = Report(f"ascent sweep along {lifted.name}")
    for obj in lifted.source.objects(max_points):
        for structure in enumerate_structures(
            lifted.presentation, obj, lifted.source, bounds
        ):
            report.count("structures")
            report.extend(
                verify_unique_ascent(structure, lifted, None, bounds)
            )
    return report


def unique_descent_sweep(lifted, max_points, bounds=None):
    """verify_unique_descent for every structure on every small object."""
    report = Report(f"descent sweep along {lifted.name}")
    for obj in lifted.target.objects(max_points):
        for structure in enumerate_structures(
            lifted.presentation, obj, lifted.target, bounds
        ):
            report.count("structures")
            report.extend(
                verify_unique_descent(structure, lifted, None, bounds)
            )
    return report
