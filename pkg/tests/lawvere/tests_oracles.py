import unittest

from structura.equational.terms import (
    App,
    TheoryPresentation,
    Var,
    identity,
    make_signature,
)
from structura.lawvere.oracles import (
    AbelianGroupOracle,
    BoundedSemanticOracle,
    CommMonoidOracle,
    GroupOracle,
    MonoidOracle,
    RingOracle,
    SyntacticOracle,
)
from structura.lawvere.presentations import BUILTINS
from tests.fixtures import GROUP, MAGMA, MONOID, e, i, m, x0, x1, x2

ROLES = {"mul": "m", "unit": "e", "inv": "i"}


def ring_term(symbol, *args):
    return App(symbol, args)


class MonoidOracleTest(unittest.TestCase):
    def setUp(self):
        self.oracle = MonoidOracle(MONOID, ROLES)

    def test_normalize(self):
        self.assertEqual(
            self.oracle.normalize(m(m(x0, e), m(x1, x2))),
            m(x0, m(x1, x2)),
        )
        self.assertEqual(self.oracle.normalize(m(e, e)), e)

    def test_equal(self):
        self.assertTrue(
            self.oracle.equal(m(m(x0, x1), x2), m(x0, m(x1, x2)))
        )
        self.assertFalse(self.oracle.equal(m(x0, x1), m(x1, x0)))

    def test_normal_forms(self):
        forms = list(self.oracle.normal_forms(2, 3))
        self.assertEqual(len(forms), 15)
        self.assertEqual(forms[:4], [e, x0, x1, m(x0, x0)])

    def test_renamed_symbols(self):
        renamed = MonoidOracle(MONOID, {"mul": "op", "unit": "one"})
        self.assertEqual(
            renamed.normalize(App("op", (App("one"), x0))), x0
        )


class CommMonoidOracleTest(unittest.TestCase):
    def test_sorted_words(self):
        oracle = CommMonoidOracle(
            BUILTINS["comm-monoid"].presentation, ROLES
        )
        self.assertTrue(oracle.equal(m(x1, x0), m(x0, x1)))
        # multisets of size <= 2 over two letters
        self.assertEqual(len(list(oracle.normal_forms(2, 2))), 6)


class GroupOracleTest(unittest.TestCase):
    def setUp(self):
        self.oracle = GroupOracle(GROUP, ROLES)

    def test_free_reduction(self):
        self.assertEqual(self.oracle.normalize(m(x0, i(x0))), e)
        self.assertEqual(self.oracle.normalize(i(m(x0, x1))), m(i(x1), i(x0)))
        self.assertEqual(self.oracle.normalize(i(i(x0))), x0)

    def test_normal_forms(self):
        forms = list(self.oracle.normal_forms(1, 2))
        self.assertEqual(forms, [e, x0, i(x0), m(x0, x0), m(i(x0), i(x0))])


class AbelianGroupOracleTest(unittest.TestCase):
    def test_collect(self):
        oracle = AbelianGroupOracle(
            BUILTINS["abelian-group"].presentation, ROLES
        )
        self.assertTrue(oracle.equal(m(x0, m(x1, i(x0))), x1))
        self.assertTrue(oracle.equal(m(x1, x0), m(x0, x1)))
        self.assertEqual(len(list(oracle.normal_forms(2, 1))), 5)


class RingOracleTest(unittest.TestCase):
    def setUp(self):
        self.oracle = RingOracle(BUILTINS["ring"].presentation)

    def test_additive_inverse(self):
        t = ring_term("add", x0, ring_term("neg", x0))
        self.assertEqual(self.oracle.normalize(t), App("zero"))

    def test_distributivity(self):
        left = ring_term("mul", ring_term("add", x0, x1), x2)
        right = ring_term(
            "add", ring_term("mul", x0, x2), ring_term("mul", x1, x2)
        )
        self.assertTrue(self.oracle.equal(left, right))

    def test_not_commutative(self):
        self.assertFalse(
            self.oracle.equal(
                ring_term("mul", x0, x1), ring_term("mul", x1, x0)
            )
        )

    def test_normal_forms_are_distinct(self):
        forms = list(self.oracle.normal_forms(1, 2))
        self.assertEqual(len(forms), len(set(forms)))
        self.assertEqual(forms[0], App("zero"))
        for t in forms:
            self.assertEqual(self.oracle.normalize(t), t)


class SyntacticOracleTest(unittest.TestCase):
    def test_magma_terms(self):
        oracle = SyntacticOracle(MAGMA)
        self.assertEqual(
            list(oracle.normal_forms(1, 3)), [x0, m(x0, x0)]
        )
        self.assertEqual(len(list(oracle.normal_forms(2, 3))), 6)


class BoundedSemanticOracleTest(unittest.TestCase):
    def setUp(self):
        self.idempotent = TheoryPresentation(
            make_signature([("m", 2)]),
            (identity(m(x0, x0), x0),),
            name="idempotent",
        )
        self.oracle = BoundedSemanticOracle(self.idempotent, 2)

    def test_not_complete(self):
        self.assertFalse(self.oracle.complete)
        self.assertEqual(
            self.oracle.notes(),
            ["oracle bounded-semantic is UNSOUND-AS-COMPLETE"],
        )
        self.assertEqual(MonoidOracle(MONOID, ROLES).notes(), [])

    def test_model_limit_is_reported(self):
        oracle = BoundedSemanticOracle(self.idempotent, 3, model_limit=10)
        # 1 and 4 idempotent tables on one and two points, 729 on three
        self.assertEqual(len(oracle.models), 1 + 4 + 10)
        self.assertEqual(oracle.truncated_sizes, [3])
        self.assertEqual(
            oracle.notes()[1],
            "oracle bounded-semantic stopped at 10 models of size 3",
        )

    def test_identifies_provably_equal_terms(self):
        self.assertEqual(self.oracle.normalize(m(x0, x0)), Var(0))
        self.assertTrue(self.oracle.equal(m(m(x0, x0), x0), x0))

    def test_keeps_distinct_terms_apart(self):
        self.assertFalse(self.oracle.equal(m(x0, x1), m(x1, x0)))
