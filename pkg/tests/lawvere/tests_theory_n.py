import itertools
import unittest

from structura.exceptions import CompositionError, UsageError
from structura.fincat.category import (
    check_universal_property,
    pair,
    product,
)
from structura.lawvere.theory_n import NMorphism, build_theory_N


class TheoryNTest(unittest.TestCase):
    def setUp(self):
        self.theory = build_theory_N(4)

    def test_hom_sizes(self):
        for m, n in itertools.product(range(5), repeat=2):
            homs = list(self.theory.hom(m, n))
            self.assertEqual(len(homs), m**n, (m, n))
            self.assertTrue(all(self.theory.is_morphism(u) for u in homs))

    def test_products_are_sums(self):
        for m, n in itertools.product(range(5), repeat=2):
            if m + n > 4:
                continue
            cone = product(self.theory, (m, n))
            self.assertEqual(cone.apex, m + n)
            failures = check_universal_property(
                self.theory, cone, list(self.theory.objects())
            )
            self.assertEqual(failures, [], (m, n))
            self.assertEqual(
                pair(self.theory, cone, cone.projections),
                self.theory.identity(m + n),
            )

    def test_composition(self):
        f = NMorphism(3, 2, (2, 0))
        g = NMorphism(2, 1, (1,))
        self.assertEqual(self.theory.compose(g, f), NMorphism(3, 1, (0,)))
        with self.assertRaises(CompositionError):
            self.theory.compose(f, g)

    def test_associative(self):
        for f in self.theory.hom(2, 2):
            for g in self.theory.hom(2, 1):
                for h in self.theory.hom(1, 2):
                    self.assertEqual(
                        self.theory.compose(
                            h, self.theory.compose(g, f)
                        ),
                        self.theory.compose(
                            self.theory.compose(h, g), f
                        ),
                    )

    def test_identity(self):
        for f in self.theory.hom(3, 2):
            self.assertEqual(
                self.theory.compose(self.theory.identity(2), f), f
            )
            self.assertEqual(
                self.theory.compose(f, self.theory.identity(3)), f
            )

    def test_text(self):
        self.assertEqual(str(NMorphism(3, 2, (2, 0))), "3->2[2,0]")

    def test_bound(self):
        self.assertEqual(list(self.theory.objects()), [0, 1, 2, 3, 4])
        with self.assertRaises(UsageError):
            build_theory_N(0)
