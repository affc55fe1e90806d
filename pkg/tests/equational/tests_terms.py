import unittest

from hypothesis import given, strategies as st

from structura.equational.terms import (
    App,
    Identity,
    TheoryPresentation,
    Var,
    basic_term,
    check_term,
    compose_substitutions,
    identity,
    make_signature,
    render_term,
    substitute,
    symbols,
    term_size,
    variables,
)
from structura.exceptions import (
    EmptyCarrierError,
    InvalidPresentation,
    UnboundVariable,
    UnknownSymbol,
)
from tests.fixtures import GROUP_SIGNATURE, e, i, m, x0, x1, x2

terms = st.recursive(
    st.one_of(st.builds(Var, st.integers(0, 2)), st.just(App("e"))),
    lambda children: st.one_of(
        st.builds(m, children, children), st.builds(i, children)
    ),
    max_leaves=8,
)
environments = st.lists(terms, min_size=3, max_size=3).map(tuple)


class TermsTest(unittest.TestCase):
    def test_render_term(self):
        self.assertEqual(render_term(m(x0, e)), "m(x0,e)")
        self.assertEqual(render_term(i(x1), ["x", "y"]), "i(y)")
        self.assertEqual(str(m(m(x0, x1), x2)), "m(m(x0,x1),x2)")

    def test_variables_symbols_and_size(self):
        t = m(i(x0), m(e, x2))
        self.assertEqual(variables(t), frozenset([0, 2]))
        self.assertEqual(symbols(t), frozenset(["m", "i", "e"]))
        self.assertEqual(term_size(t), 6)

    def test_basic_term(self):
        self.assertEqual(basic_term("m", 2), m(x0, x1))
        self.assertEqual(basic_term("e", 0), e)

    def test_substitute_unbound(self):
        with self.assertRaises(UnboundVariable) as context:
            substitute(m(x0, x2), (x1, x0))
        self.assertEqual(context.exception.index, 2)

    def test_check_term(self):
        check_term(m(x0, e), GROUP_SIGNATURE, 1)
        with self.assertRaises(InvalidPresentation):
            check_term(App("m", (x0,)), GROUP_SIGNATURE)
        with self.assertRaises(UnknownSymbol):
            check_term(App("k", ()), GROUP_SIGNATURE)
        with self.assertRaises(UnboundVariable):
            check_term(m(x0, x1), GROUP_SIGNATURE, 1)

    @given(terms)
    def test_identity_substitution(self, t):
        self.assertEqual(substitute(t, (x0, x1, x2)), t)

    @given(terms, environments, environments)
    def test_substitution_composes(self, t, first, second):
        self.assertEqual(
            substitute(substitute(t, first), second),
            substitute(t, compose_substitutions(first, second)),
        )


class SignatureTest(unittest.TestCase):
    def test_duplicates_rejected(self):
        with self.assertRaises(InvalidPresentation):
            make_signature([("m", 2), ("m", 1)])

    def test_negative_arity_rejected(self):
        with self.assertRaises(InvalidPresentation):
            make_signature([("m", -1)])

    def test_accessors(self):
        self.assertEqual(GROUP_SIGNATURE.names, ("m", "e", "i"))
        self.assertEqual(GROUP_SIGNATURE.constants, ("e",))
        self.assertEqual(GROUP_SIGNATURE.max_arity, 2)
        self.assertEqual(GROUP_SIGNATURE.arity("i"), 1)
        self.assertIn("e", GROUP_SIGNATURE)
        with self.assertRaises(UnknownSymbol):
            GROUP_SIGNATURE.arity("k")


class PresentationTest(unittest.TestCase):
    def test_identity_context(self):
        self.assertEqual(identity(m(x0, x2), x0).context, 3)
        self.assertEqual(identity(e, e).context, 0)
        with self.assertRaises(InvalidPresentation):
            Identity(1, m(x0, x1), x0)

    def test_identity_text(self):
        self.assertEqual(str(identity(m(e, x0), x0)), "m(e,x0) = x0")

    def test_undeclared_symbol(self):
        with self.assertRaises(UnknownSymbol):
            TheoryPresentation(
                make_signature([("m", 2)]), (identity(m(x0, e), x0),)
            )

    def test_empty_carrier(self):
        with_constant = TheoryPresentation(GROUP_SIGNATURE, name="G")
        with self.assertRaises(EmptyCarrierError):
            with_constant.check_carrier_size(0)
        with_constant.check_carrier_size(1)

        bare = TheoryPresentation(make_signature([("m", 2)]))
        bare.check_carrier_size(0)
