import os
import unittest

from structura.dsl import parse_spec
from structura.equational.terms import App, Identity, Var
from structura.exceptions import (
    ArityMismatch,
    DocumentError,
    DocumentErrorList,
    DocumentSyntaxError,
    UnknownName,
)
from structura.fincat.finset import FinSet, FiniteSet
from structura.fincat.fintop import FinSpace, FinTop
from structura.lawvere.structures import validate_structure
from tests.fixtures import MONOID, SIERPINSKI, or_monoid

DOCUMENTS = os.path.join(os.path.dirname(__file__), "..", "cli", "documents")


def read_document(name):
    with open(os.path.join(DOCUMENTS, name), encoding="utf-8") as handle:
        return handle.read()


class ParseDocumentTest(unittest.TestCase):
    def setUp(self):
        self.document = parse_spec(read_document("monoids.structura"))

    def test_declaration_order(self):
        self.assertEqual(
            self.document.order,
            [
                ("theory", "Monoid"),
                ("space", "S"),
                ("structure", "Or"),
                ("structure", "Xor"),
            ],
        )

    def test_theory_matches_builtin(self):
        theory = self.document.theory("Monoid")
        self.assertEqual(theory.signature, MONOID.signature)
        self.assertEqual(theory.identities, MONOID.identities)

    def test_space(self):
        obj, cat = self.document.carrier("S")
        self.assertEqual(obj, SIERPINSKI)
        self.assertIs(cat, FinTop)

    def test_structure(self):
        structure = self.document.structure("Or")
        self.assertEqual(
            structure.interpretations, or_monoid().interpretations
        )
        self.assertTrue(validate_structure(structure).verified)
        self.assertFalse(
            validate_structure(self.document.structure("Xor")).verified
        )

    def test_unknown_names(self):
        with self.assertRaises(UnknownName):
            self.document.structure("And")
        with self.assertRaises(UnknownName):
            self.document.carrier("T")
        with self.assertRaises(UnknownName):
            self.document.theory("Semigroup")

    def test_builtin_theory_by_name(self):
        document = parse_spec(
            "set P { points p q; }\n"
            "structure Left : magma on P {\n"
            "    m(p,p) = p; m(p,q) = p; m(q,p) = q; m(q,q) = q;\n"
            "}\n"
        )
        structure = document.structure("Left")
        self.assertIs(structure.cat, FinSet)
        self.assertEqual(structure.carrier, FiniteSet(("p", "q")))


class ElaborationTest(unittest.TestCase):
    def test_variables_numbered_by_first_occurrence(self):
        document = parse_spec(
            "theory Comm { op m/2; eq m(y,x) = m(x,y); }"
        )
        [identity] = document.theory("Comm").identities
        self.assertEqual(
            identity,
            Identity(
                2,
                App("m", (Var(0), Var(1))),
                App("m", (Var(1), Var(0))),
            ),
        )

    def test_constants_are_not_variables(self):
        document = parse_spec(
            "theory Pointed { op p/0; op f/1; eq f(p) = p; }"
        )
        [identity] = document.theory("Pointed").identities
        self.assertEqual(identity.context, 0)

    def test_oracle_hint(self):
        document = parse_spec(
            "theory G { op m/2; op e/0; oracle monoid; eq m(e,x) = x; }"
        )
        self.assertEqual(document.theory("G").oracle_hint, "monoid")

    def test_comments_and_empty_blocks(self):
        document = parse_spec(
            "# nothing but an empty theory\ntheory Empty {}\n"
            "set None { points; }\n"
        )
        self.assertEqual(document.theory("Empty").identities, ())
        self.assertEqual(document.sets["None"], FiniteSet(()))

    def test_preorder_cycles(self):
        document = parse_spec("space C { points a b; order a<=b, b<=a; }")
        obj, _ = document.carrier("C")
        self.assertEqual(obj, FinSpace.indiscrete(("a", "b")))


class DocumentErrorsTest(unittest.TestCase):
    def errors_of(self, text):
        with self.assertRaises(DocumentErrorList) as raised:
            parse_spec(text)
        return raised.exception.errors

    def test_every_error_is_reported(self):
        errors = self.errors_of(read_document("broken.structura"))
        self.assertEqual(
            [str(error) for error in errors],
            [
                "3:8: m expects 2 arguments, got 1",
                "6:32: c is not a point of S",
                "8:16: no theory named 'Semigroup'",
            ],
        )
        self.assertIsInstance(errors[0], ArityMismatch)
        self.assertIsInstance(errors[1], UnknownName)

    def test_unexpected_character(self):
        [error] = self.errors_of("theory T { op m/2; }\n@")
        self.assertIsInstance(error, DocumentSyntaxError)
        self.assertEqual((error.line, error.col), (2, 1))

    def test_unknown_operation(self):
        [error] = self.errors_of("theory T { op m/2; eq f(x) = x; }")
        self.assertIsInstance(error, UnknownName)
        self.assertEqual(error.message, "unknown operation f")

    def test_duplicate_declaration(self):
        [error] = self.errors_of("set A { points p; }\nset A { points q; }")
        self.assertEqual(str(error), "2:5: A is declared twice")

    def test_missing_table_entries(self):
        errors = self.errors_of(
            read_document("monoids.structura")
            + "structure Half : Monoid on S { e = a; m(a,a) = a; }\n"
        )
        self.assertEqual(
            [error.message for error in errors],
            [
                "Half leaves m(a,b) undefined",
                "Half leaves m(b,a) undefined",
                "Half leaves m(b,b) undefined",
            ],
        )

    def test_statement_errors_do_not_stop_the_block(self):
        errors = self.errors_of(
            "theory T { op m/x; op m/2; op m/2; eq m(x,y) = z; }"
        )
        self.assertEqual(len(errors), 2)
        self.assertIsInstance(errors[0], DocumentSyntaxError)
        self.assertIsInstance(errors[1], DocumentError)
        self.assertIn("declared twice", errors[1].message)

    def test_point_outside_carrier(self):
        errors = self.errors_of(
            "set P { points p; }\n"
            "structure X : magma on P { m(p,r) = p; }"
        )
        self.assertEqual(
            [error.message for error in errors],
            ["r is not a point of P", "X leaves m(p,p) undefined"],
        )
