"""
Adjunctions between effective categories and the two shipped finite
instances: discrete -| forgetful between FinSet and FinTop, and the
finite Stone-Cech reflection of FinTop onto FinDisc.

Every finite space is pseudocompact and locally compact, so the
reflection needs no hypothesis on its source spaces. Finite Hausdorff
spaces are discrete, and beta X is the discrete space on the
components of X, each labelled by its least point.
"""

import itertools
import logging
from functools import lru_cache

from structura import config
from structura.exceptions import AdjunctionError, StructuraError, UsageError
from structura.fincat.category import (
    Functor,
    NatTrans,
    check_naturality,
    compose_functors,
    identity_functor,
)
from structura.fincat.finset import FinSet, FiniteSet, PointMap
from structura.fincat.fintop import (
    FinDisc,
    FinSpace,
    FinTop,
    component_representatives,
    pi0,
)
from structura.reports import Report

logger = logging.getLogger(__name__)


class Adjunction:
    """F -| G with unit eta : Id => GF and counit eps : FG => Id."""

    def __init__(self, left, right, unit, counit, name="adjunction"):
        self.F = left
        self.G = right
        self._unit = unit
        self._counit = counit
        self.name = name

    @property
    def source(self):
        return self.F.source

    @property
    def target(self):
        return self.F.target

    def eta(self, obj):
        return self._unit(obj)

    def epsilon(self, obj):
        return self._counit(obj)

    @property
    def unit(self):
        return NatTrans(
            identity_functor(self.source),
            compose_functors(self.G, self.F),
            self._unit,
            name="eta",
        )

    @property
    def counit(self):
        return NatTrans(
            compose_functors(self.F, self.G),
            identity_functor(self.target),
            self._counit,
            name="eps",
        )

    def __repr__(self):
        return f"Adjunction({self.name}: {self.F.name} -| {self.G.name})"


def _guarded(report, subject, check):
    try:
        if not check():
            report.fail(subject)
    except StructuraError as error:
        report.fail(subject, str(error))


def check_adjunction(adj, sample=None, target_sample=None, max_points=None):
    """
    Triangle identities, naturality of unit and counit, and the hom-set
    bijection over sample objects. No FAIL records means verified.
    """
    source, target = adj.source, adj.target
    if sample is None:
        sample = list(source.objects(max_points))
    if target_sample is None:
        target_sample = list(target.objects(max_points))

    report = Report(f"adjunction {adj.name}")

    for c in sample:
        report.count("objects")

        def left_triangle(c=c):
            fc = adj.F.obj(c)
            composite = target.compose(
                adj.epsilon(fc), adj.F.mor(adj.eta(c))
            )
            return target.equal(composite, target.identity(fc))

        _guarded(report, f"triangle eps_F . F(eta) at {c}", left_triangle)

    for d in target_sample:
        report.count("objects")

        def right_triangle(d=d):
            gd = adj.G.obj(d)
            composite = source.compose(
                adj.G.mor(adj.epsilon(d)), adj.eta(gd)
            )
            return source.equal(composite, source.identity(gd))

        _guarded(report, f"triangle G(eps) . eta_G at {d}", right_triangle)

    for transformation, objects in (
        (adj.unit, sample),
        (adj.counit, target_sample),
    ):
        try:
            failures = check_naturality(transformation, objects)
        except StructuraError as error:
            report.fail(f"naturality of {transformation.name}", str(error))
            continue
        for a, b, f in failures:
            report.fail(
                f"naturality of {transformation.name} at {a} -> {b}", str(f)
            )

    for c, d in itertools.product(sample, target_sample):
        report.count("hom pairs")

        def bijection(c=c, d=d):
            left = sum(1 for _ in target.hom(adj.F.obj(c), d))
            right = sum(1 for _ in source.hom(c, adj.G.obj(d)))
            return left == right

        _guarded(report, f"hom bijection at {c}, {d}", bijection)

    logger.info(
        f"Checked {adj.name}: {len(report.failures)} failures",
        extra={"event": "check_adjunction", "adjunction": adj.name},
    )
    return report


def identity_adjunction(cat):
    same = identity_functor(cat)
    return Adjunction(
        same, same, cat.identity, cat.identity, name=f"identity on {cat}"
    )


def _verified(adj, max_points):
    report = check_adjunction(adj, max_points=max_points)
    if not report.verified:
        raise AdjunctionError(f"{adj.name} fails its own checks", report)
    return adj


def discrete_space(obj):
    return FinSpace.discrete(obj.points)


def underlying_set(space):
    return FiniteSet(space.points)


def make_discrete_forgetful_adjunction(verify_points=None):
    """
    D -| U between FinSet and FinTop. Both unit and counit are the
    identity on points; the counit D(U X) -> X refines the topology.
    """
    discrete = Functor(
        FinSet,
        FinTop,
        discrete_space,
        lambda f: PointMap(
            discrete_space(f.source), discrete_space(f.target), f.images
        ),
        name="D",
    )
    forgetful = Functor(
        FinTop,
        FinSet,
        underlying_set,
        lambda f: PointMap(
            underlying_set(f.source), underlying_set(f.target), f.images
        ),
        name="U",
    )

    def unit(s):
        return PointMap(s, underlying_set(discrete_space(s)), s.points)

    def counit(x):
        return PointMap(discrete_space(x), x, x.points)

    adj = Adjunction(discrete, forgetful, unit, counit, name="discrete")
    if verify_points is None:
        verify_points = config.SAMPLE_POINTS
    return _verified(adj, verify_points)


def beta(space):
    return FinSpace.discrete(component[0] for component in pi0(space))


def beta_map(f):
    representatives = component_representatives(f.target)
    return PointMap(
        beta(f.source),
        beta(f.target),
        tuple(representatives[f(c)] for c in beta(f.source).points),
    )


def make_beta_adjunction(verify_points=None):
    """
    beta -| inclusion between FinTop and FinDisc. The unit collapses
    every point onto the least point of its component.
    """
    reflector = Functor(FinTop, FinDisc, beta, beta_map, name="beta")
    inclusion = Functor(
        FinDisc, FinTop, lambda d: d, lambda f: f, name="inclusion"
    )

    def unit(space):
        representatives = component_representatives(space)
        return PointMap.from_dict(space, beta(space), representatives)

    def counit(d):
        return PointMap(beta(d), d, beta(d).points)

    adj = Adjunction(reflector, inclusion, unit, counit, name="beta")
    if verify_points is None:
        verify_points = config.SAMPLE_POINTS
    return _verified(adj, verify_points)


def make_identity_adjunction(verify_points=None):
    """Id -| Id on FinTop, for smoke tests."""
    if verify_points is None:
        verify_points = config.SAMPLE_POINTS
    return _verified(identity_adjunction(FinTop), verify_points)


ADJUNCTIONS = {
    "beta": make_beta_adjunction,
    "discrete": make_discrete_forgetful_adjunction,
    "identity": make_identity_adjunction,
}


@lru_cache(maxsize=None)
def shipped_adjunction(name):
    """A verified shipped adjunction by name, built once."""
    try:
        factory = ADJUNCTIONS[name]
    except KeyError:
        raise UsageError(
            f"unknown adjunction {name!r}; "
            f"expected one of {', '.join(sorted(ADJUNCTIONS))}"
        )
    return factory()
