"""
Finite topological spaces as preorders.

x <= y is the specialization preorder (x lies in the closure of y); the
open sets are exactly the up-sets, so continuity is monotonicity. The
open-set lattice is derived on demand and never stored.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, FrozenSet, Tuple

import networkx as nx

from structura.exceptions import InvalidSpace
from structura.fincat.finset import PointMapCategory, render_point


@dataclass(frozen=True)
class FinSpace:
    points: Tuple[Any, ...]
    order: FrozenSet[Tuple[Any, Any]]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "order", frozenset(self.order))
        self._check()

    def _check(self):
        if len(set(self.points)) != len(self.points):
            raise InvalidSpace(f"repeated points in {self.points}")
        known = set(self.points)
        for x, y in self.order:
            if x not in known or y not in known:
                raise InvalidSpace(f"{x} <= {y} mentions an unknown point")
        for x in self.points:
            if (x, x) not in self.order:
                raise InvalidSpace(f"order is not reflexive at {x}")
        above = self.up
        for x, y in self.order:
            if not above[y] <= above[x]:
                raise InvalidSpace(f"order is not transitive through {y}")

    @classmethod
    def build(cls, points, pairs=()):
        """The space whose order is generated by `pairs`."""
        graph = nx.DiGraph()
        graph.add_nodes_from(points)
        graph.add_edges_from(pairs)
        closure = nx.transitive_closure(graph, reflexive=True)
        return cls(tuple(points), frozenset(closure.edges))

    @classmethod
    def discrete(cls, points):
        points = tuple(points)
        return cls(points, frozenset((p, p) for p in points))

    @classmethod
    def indiscrete(cls, points):
        points = tuple(points)
        return cls(points, frozenset(itertools.product(points, repeat=2)))

    @cached_property
    def positions(self):
        return {point: i for i, point in enumerate(self.points)}

    @cached_property
    def up(self):
        above = {point: set() for point in self.points}
        for x, y in self.order:
            above[x].add(y)
        return {point: frozenset(ys) for point, ys in above.items()}

    def index(self, point):
        return self.positions[point]

    def le(self, x, y):
        return (x, y) in self.order

    @property
    def is_discrete(self):
        return len(self.order) == len(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return point in self.positions

    def strict_pairs(self):
        """The non-reflexive pairs of the order, in point order."""
        return [
            (x, y)
            for x in self.points
            for y in self.points
            if x != y and (x, y) in self.order
        ]

    def __str__(self):
        inner = " ".join(render_point(p) for p in self.points)
        pairs = ", ".join(
            f"{render_point(x)}<={render_point(y)}"
            for x, y in self.strict_pairs()
        )
        if pairs:
            return "{" + inner + " | " + pairs + "}"
        return "{" + inner + "}"


@lru_cache(maxsize=None)
def enumerate_preorders(n):
    """
    Every preorder on the labelled points 0..n-1, as frozensets of pairs,
    in the order of the bitmask over off-diagonal pairs.
    """
    diagonal = [(i, i) for i in range(n)]
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = []
    for mask in range(1 << len(off)):
        relation = set(diagonal)
        relation.update(
            pair for bit, pair in enumerate(off) if mask >> bit & 1
        )
        if _transitive(relation):
            found.append(frozenset(relation))
    return tuple(found)


def _transitive(relation):
    for x, y in relation:
        for y2, z in relation:
            if y == y2 and (x, z) not in relation:
                return False
    return True


def pi0(space):
    """
    Connected components of the comparability graph, each listed in
    point order, the components ordered by their least point.
    """
    graph = nx.Graph()
    graph.add_nodes_from(space.points)
    graph.add_edges_from((x, y) for x, y in space.order if x != y)
    components = [
        tuple(sorted(component, key=space.index))
        for component in nx.connected_components(graph)
    ]
    return tuple(sorted(components, key=lambda c: space.index(c[0])))


def component_representatives(space):
    """Map each point to the least point of its component."""
    return {
        point: component[0]
        for component in pi0(space)
        for point in component
    }


def opens(space):
    """All open sets (up-sets), as frozensets, in bitmask order."""
    points = space.points
    found = []
    for mask in range(1 << len(points)):
        subset = frozenset(p for i, p in enumerate(points) if mask >> i & 1)
        if all(space.up[p] <= subset for p in subset):
            found.append(subset)
    return tuple(found)


def is_continuous_by_opens(f):
    """Continuity checked on materialised open sets."""
    source_opens = set(opens(f.source))
    for open_set in opens(f.target):
        preimage = frozenset(
            p
            for p, image in zip(f.source.points, f.images)
            if image in open_set
        )
        if preimage not in source_opens:
            return False
    return True


class FinTopCategory(PointMapCategory):
    name = "FinTop"
    object_type = FinSpace

    def objects(self, max_points=None):
        if max_points is None:
            max_points = self.default_points
        for n in range(max_points + 1):
            for order in enumerate_preorders(n):
                yield FinSpace(tuple(range(n)), order)

    def make_object(self, points, factors):
        order = frozenset(
            (p, q)
            for p in points
            for q in points
            if all(f.le(a, b) for f, a, b in zip(factors, p, q))
        )
        return FinSpace(points, order)

    def partial_ok(self, source, target, assigned, point):
        image = assigned[point]
        for other, other_image in assigned.items():
            if source.le(point, other) and not target.le(image, other_image):
                return False
            if source.le(other, point) and not target.le(other_image, image):
                return False
        return True

    def preserves_structure(self, f):
        return all(f.target.le(f(x), f(y)) for x, y in f.source.order)

    def explain(self, f):
        reason = super().explain(f)
        if reason:
            return reason
        for x in f.source.points:
            for y in f.source.points:
                if f.source.le(x, y) and not f.target.le(f(x), f(y)):
                    return (
                        f"not monotone: {render_point(x)}<={render_point(y)}"
                        f" but {render_point(f(x))} is not <= "
                        f"{render_point(f(y))}"
                    )
        return ""


class FinDiscCategory(FinTopCategory):
    """Finite discrete spaces: the finite compact Hausdorff spaces."""

    name = "FinDisc"

    def contains(self, obj):
        return isinstance(obj, FinSpace) and obj.is_discrete

    def objects(self, max_points=None):
        if max_points is None:
            max_points = self.default_points
        for n in range(max_points + 1):
            yield FinSpace.discrete(tuple(range(n)))


FinTop = FinTopCategory()
FinDisc = FinDiscCategory()
