"""
Elaborated documents: theories, sets, spaces and structure
declarations, in declaration order.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from structura.equational.terms import TheoryPresentation
from structura.exceptions import UnknownName
from structura.fincat.finset import FinSet
from structura.fincat.fintop import FinTop
from structura.lawvere.presentations import BUILTINS
from structura.lawvere.structures import structure_from_tables


@dataclass(frozen=True)
class StructureDecl:
    name: str
    theory: str
    carrier: str
    tables: Dict[str, Dict[Tuple[Any, ...], Any]]


@dataclass
class SpecDocument:
    theories: Dict[str, TheoryPresentation] = field(default_factory=dict)
    sets: Dict[str, Any] = field(default_factory=dict)
    spaces: Dict[str, Any] = field(default_factory=dict)
    structures: Dict[str, StructureDecl] = field(default_factory=dict)
    order: List[Tuple[str, str]] = field(default_factory=list)

    def names(self):
        return {name for _, name in self.order}

    def theory(self, name):
        """A declared theory, or a built-in one by name."""
        if name in self.theories:
            return self.theories[name]
        if name in BUILTINS:
            return BUILTINS[name].presentation
        raise UnknownName(f"no theory named {name!r}")

    def carrier(self, name):
        """The object called `name` and the category it lives in."""
        if name in self.sets:
            return self.sets[name], FinSet
        if name in self.spaces:
            return self.spaces[name], FinTop
        raise UnknownName(f"no set or space named {name!r}")

    def structure(self, name):
        try:
            decl = self.structures[name]
        except KeyError:
            raise UnknownName(f"no structure named {name!r}")
        obj, cat = self.carrier(decl.carrier)
        return structure_from_tables(
            cat, obj, self.theory(decl.theory), decl.tables
        )
