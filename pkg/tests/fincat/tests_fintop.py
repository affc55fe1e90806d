import itertools
import unittest

from structura.exceptions import InvalidSpace
from structura.fincat.category import power, product
from structura.fincat.finset import PointMap
from structura.fincat.fintop import (
    FinDisc,
    FinSpace,
    FinTop,
    component_representatives,
    enumerate_preorders,
    is_continuous_by_opens,
    opens,
    pi0,
)
from tests.fixtures import SIERPINSKI


class FinSpaceTest(unittest.TestCase):
    def test_build_closes_the_order(self):
        chain = FinSpace.build((0, 1, 2), [(0, 1), (1, 2)])
        self.assertTrue(chain.le(0, 2))
        self.assertFalse(chain.le(2, 0))
        self.assertEqual(str(chain), "{0 1 2 | 0<=1, 0<=2, 1<=2}")

    def test_not_transitive(self):
        with self.assertRaises(InvalidSpace):
            FinSpace(
                ("a", "b", "c"),
                {
                    ("a", "a"),
                    ("b", "b"),
                    ("c", "c"),
                    ("a", "b"),
                    ("b", "c"),
                },
            )

    def test_not_reflexive(self):
        with self.assertRaises(InvalidSpace):
            FinSpace(("a", "b"), {("a", "a")})

    def test_unknown_point(self):
        with self.assertRaises(InvalidSpace):
            FinSpace(("a",), {("a", "a"), ("a", "z")})

    def test_text(self):
        self.assertEqual(str(SIERPINSKI), "{a b | a<=b}")
        self.assertEqual(str(FinSpace.discrete("xy")), "{x y}")


class PreorderTest(unittest.TestCase):
    def test_labelled_counts(self):
        counts = [len(enumerate_preorders(n)) for n in range(5)]
        self.assertEqual(counts, [1, 1, 4, 29, 355])

    def test_objects(self):
        self.assertEqual(len(list(FinTop.objects(3))), 35)
        self.assertEqual(len(list(FinDisc.objects(3))), 4)


class TopologyTest(unittest.TestCase):
    def test_opens_of_sierpinski(self):
        self.assertEqual(
            opens(SIERPINSKI),
            (frozenset(), frozenset("b"), frozenset("ab")),
        )

    def test_monotone_maps(self):
        self.assertEqual(len(list(FinTop.hom(SIERPINSKI, SIERPINSKI))), 3)

    def test_continuity_agrees_with_monotonicity(self):
        spaces = list(FinTop.objects(2))
        for source, target in itertools.product(spaces, repeat=2):
            for images in itertools.product(
                target.points, repeat=len(source.points)
            ):
                f = PointMap(source, target, images)
                self.assertEqual(
                    FinTop.is_morphism(f), is_continuous_by_opens(f)
                )

    def test_monotonicity_diagnostic(self):
        swap = PointMap(SIERPINSKI, SIERPINSKI, ("b", "a"))
        self.assertEqual(
            FinTop.explain(swap), "not monotone: a<=b but b is not <= a"
        )

    def test_product_order(self):
        square = power(FinTop, SIERPINSKI, 2).apex
        self.assertEqual(len(square.order), 9)


class ComponentsTest(unittest.TestCase):
    def test_pi0(self):
        self.assertEqual(pi0(SIERPINSKI), (("a", "b"),))
        self.assertEqual(pi0(FinSpace.discrete("xy")), (("x",), ("y",)))
        v = FinSpace.build((0, 1, 2), [(1, 0), (1, 2)])
        self.assertEqual(len(pi0(v)), 1)

    def test_representatives_are_least_points(self):
        space = FinSpace.build((0, 1, 2, 3), [(1, 0), (3, 2)])
        self.assertEqual(
            component_representatives(space), {0: 0, 1: 0, 2: 2, 3: 2}
        )

    def test_pi0_of_products(self):
        spaces = list(FinTop.objects(3))
        for x, y in itertools.product(spaces, repeat=2):
            apex = product(FinTop, (x, y)).apex
            self.assertEqual(
                len(pi0(apex)), len(pi0(x)) * len(pi0(y)), (x, y)
            )

    def test_findisc_contains_only_discrete_spaces(self):
        self.assertTrue(FinDisc.contains(FinSpace.discrete("ab")))
        self.assertFalse(FinDisc.contains(SIERPINSKI))
