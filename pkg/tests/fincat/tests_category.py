import unittest

from structura.exceptions import NoMediator, NotEnumerable
from structura.fincat.category import (
    EffectiveCategory,
    Functor,
    NatTrans,
    check_functor,
    check_naturality,
    compose_functors,
    identity_functor,
    identity_transformation,
    factor_lists,
    is_product_preserving,
    pair,
    product,
    search_product,
)
from structura.fincat.adjunction import discrete_space, underlying_set
from structura.fincat.finset import FinSet, FiniteSet, PointMap
from structura.fincat.fintop import FinTop


def discrete():
    return Functor(
        FinSet,
        FinTop,
        discrete_space,
        lambda f: PointMap(
            discrete_space(f.source), discrete_space(f.target), f.images
        ),
        name="D",
    )


class EffectiveCategoryTest(unittest.TestCase):
    def test_abstract_category_cannot_enumerate(self):
        cat = EffectiveCategory()
        with self.assertRaises(NotEnumerable):
            list(cat.objects())
        with self.assertRaises(NotEnumerable):
            list(cat.hom(None, None))

    def test_search_product_matches_constructive_product(self):
        two = FiniteSet((0, 1))
        one = FiniteSet(("p",))
        found = search_product(FinSet, (two, one), list(FinSet.objects(2)))
        self.assertEqual(len(found.apex), 2)

    def test_pair_without_legs_needs_a_source(self):
        cone = product(FinSet, ())
        with self.assertRaises(NoMediator):
            pair(FinSet, cone, [])
        one = FiniteSet(("p",))
        h = pair(FinSet, cone, [], source=one)
        self.assertEqual(h.images, ((),))

    def test_terminal(self):
        self.assertEqual(FinSet.terminal().points, ((),))


class FunctorTest(unittest.TestCase):
    def test_discrete_functor_is_a_functor(self):
        self.assertEqual(check_functor(discrete(), FinSet.objects(2)), [])

    def test_discrete_functor_preserves_products(self):
        lists = factor_lists(FinSet.objects(2), max_factors=2)
        self.assertTrue(is_product_preserving(discrete(), lists))

    def test_composition_with_identity(self):
        composite = compose_functors(identity_functor(FinTop), discrete())
        two = FiniteSet((0, 1))
        self.assertEqual(composite.obj(two), discrete().obj(two))
        self.assertEqual(check_functor(composite, FinSet.objects(2)), [])

    def test_broken_functor(self):
        constant = Functor(
            FinSet,
            FinSet,
            lambda s: s,
            lambda f: PointMap(
                f.source, f.target, f.target.points[:1] * len(f.source)
            ),
            name="K",
        )
        failures = check_functor(constant, FinSet.objects(2))
        self.assertTrue(failures)


class NaturalityTest(unittest.TestCase):
    def test_identity_transformation(self):
        alpha = identity_transformation(discrete())
        self.assertEqual(check_naturality(alpha, FinSet.objects(2)), [])

    def test_forgetting_after_discrete(self):
        forget = Functor(
            FinTop,
            FinSet,
            underlying_set,
            lambda f: PointMap(
                underlying_set(f.source), underlying_set(f.target), f.images
            ),
            name="U",
        )
        back = NatTrans(
            identity_functor(FinSet),
            compose_functors(forget, discrete()),
            lambda s: PointMap(s, s, s.points),
            name="eta",
        )
        self.assertEqual(check_naturality(back, FinSet.objects(2)), [])

    def test_unnatural_components(self):
        def component(s):
            if len(s) == 2:
                return PointMap(s, s, (s.points[1], s.points[0]))
            return FinSet.identity(s)

        swap = NatTrans(
            identity_functor(FinSet),
            identity_functor(FinSet),
            component,
            name="swap",
        )
        self.assertTrue(check_naturality(swap, FinSet.objects(2)))
