import unittest
from unittest.mock import patch

from structura.exceptions import AdjunctionError, UsageError
from structura.fincat import adjunction
from structura.fincat.adjunction import (
    Adjunction,
    beta,
    beta_map,
    check_adjunction,
    discrete_space,
    identity_adjunction,
    make_beta_adjunction,
    make_discrete_forgetful_adjunction,
    shipped_adjunction,
)
from structura.fincat.category import check_functor
from structura.fincat.finset import PointMap
from structura.fincat.fintop import FinSpace, FinTop
from structura.reports import Report
from tests.fixtures import SIERPINSKI


class ShippedAdjunctionTest(unittest.TestCase):
    def test_discrete_forgetful(self):
        adj = make_discrete_forgetful_adjunction()
        report = check_adjunction(adj, max_points=3)
        self.assertTrue(report.verified, report.render())
        # sets of 0..3 points and 1 + 1 + 4 + 29 preorders
        self.assertEqual(report.counts["objects"], 4 + 35)
        self.assertEqual(report.counts["hom pairs"], 4 * 35)

    def test_beta(self):
        report = check_adjunction(make_beta_adjunction(), max_points=3)
        self.assertTrue(report.verified, report.render())
        self.assertEqual(report.counts["hom pairs"], 35 * 4)

    def test_identity(self):
        report = check_adjunction(identity_adjunction(FinTop), max_points=2)
        self.assertTrue(report.verified)

    def test_shipped_by_name(self):
        self.assertIs(shipped_adjunction("beta"), shipped_adjunction("beta"))
        self.assertEqual(shipped_adjunction("discrete").name, "discrete")
        with self.assertRaises(UsageError):
            shipped_adjunction("completion")


class BetaTest(unittest.TestCase):
    def test_beta_of_sierpinski(self):
        self.assertEqual(beta(SIERPINSKI), FinSpace.discrete(("a",)))

    def test_beta_is_identity_on_discrete_spaces(self):
        discrete = FinSpace.discrete((0, 1, 2))
        self.assertEqual(beta(discrete), discrete)

    def test_beta_map(self):
        two = FinSpace.discrete((0, 1))
        f = PointMap(two, SIERPINSKI, ("a", "b"))
        self.assertEqual(beta_map(f).images, ("a", "a"))

    def test_components_are_functorial(self):
        reflector = shipped_adjunction("beta").F
        spaces = list(FinTop.objects(2)) + [
            FinSpace.build((0, 1, 2), [(0, 1)]),
        ]
        self.assertEqual(check_functor(reflector, spaces), [])

    def test_unit_collapses_components(self):
        adj = make_beta_adjunction()
        self.assertEqual(adj.eta(SIERPINSKI).images, ("a", "a"))


class BrokenAdjunctionTest(unittest.TestCase):
    def test_corrupted_counit_is_detected(self):
        adj = make_discrete_forgetful_adjunction()
        indiscrete = FinSpace.indiscrete((0, 1))

        def counit(space):
            if space == indiscrete:
                return PointMap(discrete_space(space), space, (0, 0))
            return adj.epsilon(space)

        broken = Adjunction(adj.F, adj.G, adj.eta, counit, name="broken")
        report = check_adjunction(broken, max_points=2)
        self.assertFalse(report.verified)
        subjects = [record.subject for record in report.failures]
        self.assertTrue(
            any(s.startswith("triangle G(eps)") for s in subjects)
        )

    def test_failed_self_check_raises(self):
        failing = Report("adjunction beta")
        failing.fail("triangle")
        with patch.object(
            adjunction, "check_adjunction", return_value=failing
        ):
            with self.assertRaises(AdjunctionError) as context:
                make_beta_adjunction()
        self.assertIs(context.exception.report, failing)


def with_counit_at(adj, obj, component):
    def counit(other):
        if other == obj:
            return component
        return adj.epsilon(other)

    return Adjunction(adj.F, adj.G, adj.eta, counit, name="corrupted")


class CorruptedCounitTest(unittest.TestCase):
    def test_swapped_components_on_beta(self):
        adj = make_beta_adjunction()
        two = FinSpace.discrete((0, 1))
        swap = PointMap(beta(two), two, (1, 0))
        report = check_adjunction(
            with_counit_at(adj, two, swap), max_points=2
        )
        self.assertFalse(report.verified)
        subjects = [record.subject for record in report.failures]
        self.assertIn(f"triangle G(eps) . eta_G at {two}", subjects)

    def test_every_wrong_component_is_detected(self):
        for name in ("beta", "discrete"):
            adj = shipped_adjunction(name)
            target = adj.target
            corrupted = 0
            for d in target.objects(2):
                fg = adj.F.obj(adj.G.obj(d))
                for component in target.hom(fg, d):
                    if target.equal(component, adj.epsilon(d)):
                        continue
                    broken = with_counit_at(adj, d, component)
                    report = check_adjunction(broken, max_points=2)
                    self.assertFalse(report.verified, (name, d, component))
                    corrupted += 1
            self.assertGreater(corrupted, 0, name)
