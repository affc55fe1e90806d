"""
Word-problem oracles for Lawvere theories.

An oracle decides provable equality of terms by rewriting both to a
normal form. The shipped theories use the normal forms of their free
algebras; a theory without identities is decided syntactically, and
anything else falls back to agreement in small finite models.
"""

import itertools
import logging
import threading

from structura import config
from structura.equational.algebra import evaluate
from structura.equational.models import find_models
from structura.equational.terms import (
    App,
    Var,
    check_term,
    term_size,
    variables,
)
from structura.exceptions import UnknownSymbol

logger = logging.getLogger(__name__)


def _right_nested(symbol, pieces, empty):
    if not pieces:
        return empty
    term = pieces[-1]
    for piece in reversed(pieces[:-1]):
        term = App(symbol, (piece, term))
    return term


class TermEq:
    """
    Base oracle: terms are equal iff their normal forms are equal.

    `weight` measures a normal form for bounded enumeration and
    `normal_forms(arity, max_size)` lists every normal form in the
    variables x0..x{arity-1} with weight at most max_size, in a fixed
    order.
    """

    name = "term-eq"
    complete = True
    roles = ()

    def __init__(self, presentation, renaming=None):
        self.presentation = presentation
        self.signature = presentation.signature
        renaming = renaming or {}
        self.symbol = {role: renaming.get(role, role) for role in self.roles}

    def normalize(self, t):
        raise NotImplementedError

    def equal(self, s, t):
        return self.normalize(s) == self.normalize(t)

    def weight(self, t):
        return term_size(t)

    def normal_forms(self, arity, max_size):
        raise NotImplementedError

    def notes(self):
        """Caveats a report using this oracle should print."""
        return []

    def _unknown(self, t):
        raise UnknownSymbol(t.symbol)

    def __repr__(self):
        return f"{type(self).__name__}({self.presentation.name})"


class MonoidOracle(TermEq):
    """Normal forms are words, written as right-nested products."""

    name = "monoid"
    roles = ("mul", "unit")

    def word(self, t):
        if isinstance(t, Var):
            return (t.index,)
        if t.symbol == self.symbol["mul"]:
            return self.word(t.args[0]) + self.word(t.args[1])
        if t.symbol == self.symbol["unit"]:
            return ()
        return self._unknown(t)

    def render(self, word):
        return _right_nested(
            self.symbol["mul"],
            [Var(i) for i in word],
            App(self.symbol["unit"]),
        )

    def normalize(self, t):
        return self.render(self.word(t))

    def weight(self, t):
        return len(self.word(t))

    def words(self, arity, length):
        return itertools.product(range(arity), repeat=length)

    def normal_forms(self, arity, max_size):
        for length in range(max_size + 1):
            for word in self.words(arity, length):
                yield self.render(word)


class CommMonoidOracle(MonoidOracle):
    """Normal forms are sorted words, i.e. multisets of variables."""

    name = "comm-monoid"

    def word(self, t):
        return tuple(sorted(super().word(t)))

    def words(self, arity, length):
        return itertools.combinations_with_replacement(range(arity), length)


class GroupOracle(TermEq):
    """Freely reduced words over the letters x and i(x)."""

    name = "group"
    roles = ("mul", "unit", "inv")

    @staticmethod
    def reduce(letters):
        stack = []
        for index, sign in letters:
            if stack and stack[-1] == (index, -sign):
                stack.pop()
            else:
                stack.append((index, sign))
        return tuple(stack)

    def word(self, t):
        if isinstance(t, Var):
            return ((t.index, 1),)
        if t.symbol == self.symbol["mul"]:
            return self.reduce(self.word(t.args[0]) + self.word(t.args[1]))
        if t.symbol == self.symbol["unit"]:
            return ()
        if t.symbol == self.symbol["inv"]:
            inner = self.word(t.args[0])
            return tuple((index, -sign) for index, sign in reversed(inner))
        return self._unknown(t)

    def letter(self, index, sign):
        if sign > 0:
            return Var(index)
        return App(self.symbol["inv"], (Var(index),))

    def render(self, word):
        return _right_nested(
            self.symbol["mul"],
            [self.letter(index, sign) for index, sign in word],
            App(self.symbol["unit"]),
        )

    def normalize(self, t):
        return self.render(self.word(t))

    def weight(self, t):
        return len(self.word(t))

    def normal_forms(self, arity, max_size):
        letters = [(i, sign) for i in range(arity) for sign in (1, -1)]
        for length in range(max_size + 1):
            for word in itertools.product(letters, repeat=length):
                if self.reduce(word) == word:
                    yield self.render(word)


class AbelianGroupOracle(GroupOracle):
    """Integer coefficient vectors, one coordinate per variable."""

    name = "abelian-group"

    def word(self, t):
        if isinstance(t, Var):
            return ((t.index, 1),)
        if t.symbol == self.symbol["mul"]:
            return self.collect(self.word(t.args[0]) + self.word(t.args[1]))
        if t.symbol == self.symbol["unit"]:
            return ()
        if t.symbol == self.symbol["inv"]:
            return tuple((i, -sign) for i, sign in self.word(t.args[0]))
        return self._unknown(t)

    @staticmethod
    def collect(letters):
        counts = {}
        for index, sign in letters:
            counts[index] = counts.get(index, 0) + sign
        word = []
        for index in sorted(counts):
            sign = 1 if counts[index] > 0 else -1
            word.extend([(index, sign)] * abs(counts[index]))
        return tuple(word)

    def normal_forms(self, arity, max_size):
        for total in range(max_size + 1):
            for coefficients in itertools.product(
                range(-total, total + 1), repeat=arity
            ):
                if sum(abs(c) for c in coefficients) != total:
                    continue
                word = []
                for index, c in enumerate(coefficients):
                    word.extend([(index, 1 if c > 0 else -1)] * abs(c))
                yield self.render(tuple(word))


class RingOracle(TermEq):
    """
    Noncommutative polynomials with integer coefficients. A monomial is
    a word of variables; monomials are ordered by length, then
    lexicographically.
    """

    name = "ring"
    roles = ("add", "mul", "neg", "zero", "one")

    @staticmethod
    def _clean(poly):
        return {mono: c for mono, c in poly.items() if c}

    def polynomial(self, t):
        if isinstance(t, Var):
            return {(t.index,): 1}
        symbol = t.symbol
        if symbol == self.symbol["zero"]:
            return {}
        if symbol == self.symbol["one"]:
            return {(): 1}
        if symbol == self.symbol["neg"]:
            return {m: -c for m, c in self.polynomial(t.args[0]).items()}
        if symbol == self.symbol["add"]:
            total = dict(self.polynomial(t.args[0]))
            for mono, c in self.polynomial(t.args[1]).items():
                total[mono] = total.get(mono, 0) + c
            return self._clean(total)
        if symbol == self.symbol["mul"]:
            left = self.polynomial(t.args[0])
            right = self.polynomial(t.args[1])
            product = {}
            for (m1, c1), (m2, c2) in itertools.product(
                left.items(), right.items()
            ):
                product[m1 + m2] = product.get(m1 + m2, 0) + c1 * c2
            return self._clean(product)
        return self._unknown(t)

    def monomial(self, mono):
        return _right_nested(
            self.symbol["mul"],
            [Var(i) for i in mono],
            App(self.symbol["one"]),
        )

    def render(self, poly):
        pieces = []
        for mono in sorted(poly, key=lambda m: (len(m), m)):
            c = poly[mono]
            term = self.monomial(mono)
            if c < 0:
                term = App(self.symbol["neg"], (term,))
            pieces.extend([term] * abs(c))
        return _right_nested(
            self.symbol["add"], pieces, App(self.symbol["zero"])
        )

    def normalize(self, t):
        return self.render(self.polynomial(t))

    @staticmethod
    def _poly_weight(poly):
        return sum(abs(c) * max(1, len(m)) for m, c in poly.items())

    def weight(self, t):
        return self._poly_weight(self.polynomial(t))

    def normal_forms(self, arity, max_size):
        monomials = [
            mono
            for length in range(max_size + 1)
            for mono in itertools.product(range(arity), repeat=length)
        ]
        found = []

        def extend(position, budget, chosen):
            if position == len(monomials):
                found.append(dict(chosen))
                return
            mono = monomials[position]
            extend(position + 1, budget, chosen)
            cost = max(1, len(mono))
            c = 1
            while c * cost <= budget:
                for signed in (c, -c):
                    chosen[mono] = signed
                    extend(position + 1, budget - c * cost, chosen)
                    del chosen[mono]
                c += 1

        extend(0, max_size, {})

        def key(poly):
            ordered = sorted(poly.items(), key=lambda mc: (len(mc[0]), mc))
            return (self._poly_weight(poly), ordered)

        for poly in sorted(found, key=key):
            yield self.render(poly)


class SyntacticOracle(TermEq):
    """For presentations without identities every term is normal."""

    name = "syntactic"

    def normalize(self, t):
        check_term(t, self.signature)
        return t

    def terms_of_size(self, arity, size, memo):
        if (arity, size) in memo:
            return memo[arity, size]
        found = []
        if size == 1:
            found.extend(Var(i) for i in range(arity))
            found.extend(App(name) for name in self.signature.constants)
        for name, n in self.signature.symbols:
            if n == 0 or size - 1 < n:
                continue
            for split in _compositions(size - 1, n):
                for args in itertools.product(
                    *(self.terms_of_size(arity, s, memo) for s in split)
                ):
                    found.append(App(name, args))
        memo[arity, size] = found
        return found

    def normal_forms(self, arity, max_size):
        memo = {}
        for size in range(1, max_size + 1):
            yield from self.terms_of_size(arity, size, memo)


def _compositions(total, parts):
    """Ordered ways of writing total as a sum of `parts` positive ints."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class BoundedSemanticOracle(SyntacticOracle):
    """
    Terms are identified when they agree in every model of the
    presentation up to a small size. Sound only up to that bound and
    never complete: reports flag it UNSOUND-AS-COMPLETE.

    A term normalizes to the first term, in enumeration order and up to
    `search_size`, with the same values in every model. Once chosen, a
    representative is kept for every later term with those values.
    """

    name = "bounded-semantic"
    complete = False

    def __init__(
        self,
        presentation,
        max_model_size=None,
        model_limit=None,
        search_size=None,
    ):
        super().__init__(presentation)
        if max_model_size is None:
            max_model_size = config.FALLBACK_MODEL_SIZE
        if model_limit is None:
            model_limit = config.FALLBACK_MODEL_LIMIT
        if search_size is None:
            search_size = config.FALLBACK_SEARCH_SIZE
        self.max_model_size = max_model_size
        self.model_limit = model_limit
        self.search_size = search_size
        self._lock = threading.Lock()
        self._models = None
        # sizes whose model search stopped at model_limit
        self.truncated_sizes = []
        self._representatives = {}
        self._fingerprints = {}
        self._terms = {}

    @property
    def models(self):
        with self._lock:
            if self._models is None:
                models = []
                for size in range(1, self.max_model_size + 1):
                    found = find_models(
                        self.presentation, size, self.model_limit
                    )
                    if self.model_limit and len(found) >= self.model_limit:
                        self.truncated_sizes.append(size)
                    models.extend(found)
                logger.warning(
                    f"Bounded oracle for {self.presentation.name} uses "
                    f"{len(models)} models up to size {self.max_model_size}",
                    extra={"event": "bounded_oracle", "models": len(models)},
                )
                self._models = models
        return self._models

    def notes(self):
        notes = [f"oracle {self.name} is UNSOUND-AS-COMPLETE"]
        for size in self.truncated_sizes:
            notes.append(
                f"oracle {self.name} stopped at {self.model_limit} models "
                f"of size {size}"
            )
        return notes

    def fingerprint(self, t, arity):
        key = (t, arity)
        if key not in self._fingerprints:
            self._fingerprints[key] = self._evaluate_everywhere(t, arity)
        return self._fingerprints[key]

    def _evaluate_everywhere(self, t, arity):
        return tuple(
            tuple(
                evaluate(t, model, assignment)
                for assignment in itertools.product(
                    model.carrier, repeat=arity
                )
            )
            for model in self.models
        )

    def normalize(self, t):
        check_term(t, self.signature)
        used = variables(t)
        arity = max(used) + 1 if used else 0
        target = self.fingerprint(t, arity)
        key = (arity, target)
        if key in self._representatives:
            return self._representatives[key]
        memo = self._terms.setdefault(arity, {})
        limit = min(term_size(t), self.search_size)
        for size in range(1, limit + 1):
            for candidate in self.terms_of_size(arity, size, memo):
                if self.fingerprint(candidate, arity) == target:
                    self._representatives[key] = candidate
                    return candidate
        return self._representatives.setdefault(key, t)

    def normal_forms(self, arity, max_size):
        seen = set()
        for t in super().normal_forms(arity, max_size):
            mark = self.fingerprint(t, arity)
            if mark not in seen:
                seen.add(mark)
                yield t


ORACLES = {
    oracle.name: oracle
    for oracle in (
        MonoidOracle,
        CommMonoidOracle,
        GroupOracle,
        AbelianGroupOracle,
        RingOracle,
        SyntacticOracle,
        BoundedSemanticOracle,
    )
}
