"""
Small objects shared by the test suites.
"""

from structura.equational.terms import App, Var, make_signature
from structura.fincat.finset import FinSet, FiniteSet
from structura.fincat.fintop import FinSpace, FinTop
from structura.lawvere.presentations import BUILTINS
from structura.lawvere.structures import structure_from_tables

MONOID = BUILTINS["monoid"].presentation
GROUP = BUILTINS["group"].presentation
MAGMA = BUILTINS["magma"].presentation

GROUP_SIGNATURE = make_signature([("m", 2), ("e", 0), ("i", 1)])

x0, x1, x2 = Var(0), Var(1), Var(2)
e = App("e")


def m(a, b):
    return App("m", (a, b))


def i(a):
    return App("i", (a,))


SIERPINSKI = FinSpace.build(("a", "b"), [("a", "b")])
DISCRETE_TWO = FinSpace.discrete(("0", "1"))
TWO = FiniteSet(("0", "1"))


def or_monoid():
    """max on a <= b, with unit a."""
    table = {
        ("a", "a"): "a",
        ("a", "b"): "b",
        ("b", "a"): "b",
        ("b", "b"): "b",
    }
    return structure_from_tables(
        FinTop, SIERPINSKI, MONOID, {"m": table, "e": {(): "a"}}
    )


def xor_monoid():
    """Addition mod 2 on the Sierpinski space; not monotone."""
    table = {
        ("a", "a"): "a",
        ("a", "b"): "b",
        ("b", "a"): "b",
        ("b", "b"): "a",
    }
    return structure_from_tables(
        FinTop, SIERPINSKI, MONOID, {"m": table, "e": {(): "a"}}
    )


def z2_tables():
    return {
        "m": {
            ("0", "0"): "0",
            ("0", "1"): "1",
            ("1", "0"): "1",
            ("1", "1"): "0",
        },
        "e": {(): "0"},
        "i": {("0",): "0", ("1",): "1"},
    }


def z2_group(cat=FinSet, carrier=TWO):
    return structure_from_tables(cat, carrier, GROUP, z2_tables())


def z2_group_on_space():
    return z2_group(FinTop, DISCRETE_TWO)
