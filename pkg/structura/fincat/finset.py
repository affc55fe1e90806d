"""
Categories whose objects are finite collections of points and whose
morphisms are point maps. FinSet is the plain instance.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Tuple

from structura.exceptions import (
    CompositionError,
    InvalidSpace,
    NoMediator,
    NonUniqueMediator,
)
from structura.fincat.category import EffectiveCategory, ProductCone


def render_point(point):
    if isinstance(point, tuple):
        return "(" + ",".join(render_point(p) for p in point) + ")"
    return str(point)


@dataclass(frozen=True)
class FiniteSet:
    points: Tuple[Any, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if len(set(self.points)) != len(self.points):
            raise InvalidSpace(f"repeated points in {self.points}")

    @cached_property
    def positions(self):
        return {point: i for i, point in enumerate(self.points)}

    def index(self, point):
        return self.positions[point]

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return point in self.positions

    def __str__(self):
        inner = " ".join(render_point(p) for p in self.points)
        return "{" + inner + "}"


@dataclass(frozen=True)
class PointMap:
    """A map of points; images[i] is the image of source.points[i]."""

    source: Any
    target: Any
    images: Tuple[Any, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))

    def __call__(self, point):
        return self.images[self.source.index(point)]

    @classmethod
    def from_function(cls, source, target, function):
        return cls(source, target, tuple(function(p) for p in source.points))

    @classmethod
    def from_dict(cls, source, target, mapping):
        return cls(source, target, tuple(mapping[p] for p in source.points))

    def as_dict(self):
        return dict(zip(self.source.points, self.images))

    def __str__(self):
        pairs = ", ".join(
            f"{render_point(p)}->{render_point(q)}"
            for p, q in zip(self.source.points, self.images)
        )
        return "{" + pairs + "}"


class PointMapCategory(EffectiveCategory):
    """Shared machinery of FinSet, FinTop and FinDisc."""

    object_type = FiniteSet

    def contains(self, obj):
        return isinstance(obj, self.object_type)

    def make_object(self, points, factors):
        return FiniteSet(points)

    def partial_ok(self, source, target, assigned, point):
        """Whether the image just chosen for `point` can be extended."""
        return True

    def preserves_structure(self, f):
        return True

    def explain(self, f):
        """Why f is not a morphism, for diagnostics."""
        if len(f.images) != len(f.source.points):
            return f"{f} is not total on {f.source}"
        for point, image in zip(f.source.points, f.images):
            if image not in f.target:
                return (
                    f"{render_point(point)} is sent to "
                    f"{render_point(image)}, outside {f.target}"
                )
        return ""

    def identity(self, obj):
        return PointMap(obj, obj, obj.points)

    def compose(self, g, f):
        if f.target != g.source:
            raise CompositionError(
                f"cannot compose {g} after {f}: {f.target} != {g.source}"
            )
        return PointMap(f.source, g.target, tuple(g(y) for y in f.images))

    def is_morphism(self, f):
        if not isinstance(f, PointMap):
            return False
        if not (self.contains(f.source) and self.contains(f.target)):
            return False
        if len(f.images) != len(f.source.points):
            return False
        if any(image not in f.target for image in f.images):
            return False
        return self.preserves_structure(f)

    def hom(self, source, target):
        """All morphisms source -> target, images in point order."""
        points = source.points
        assigned = {}

        def extend(position):
            if position == len(points):
                yield PointMap(
                    source, target, tuple(assigned[p] for p in points)
                )
                return
            point = points[position]
            for image in target.points:
                assigned[point] = image
                if self.partial_ok(source, target, assigned, point):
                    yield from extend(position + 1)
                del assigned[point]

        yield from extend(0)

    def product_cone(self, factors):
        points = tuple(itertools.product(*(f.points for f in factors)))
        apex = self.make_object(points, factors)
        projections = tuple(
            PointMap(apex, factor, tuple(p[i] for p in points))
            for i, factor in enumerate(factors)
        )

        def mediator(legs, source):
            return PointMap(
                source,
                apex,
                tuple(tuple(leg(x) for leg in legs) for x in source.points),
            )

        return ProductCone(apex, projections, tuple(factors), mediator)

    def find_mediator(self, cone, legs, source):
        """Pointwise mediator search: points are global elements."""
        fibres = {}
        for q in cone.apex.points:
            key = tuple(p(q) for p in cone.projections)
            fibres.setdefault(key, []).append(q)
        images = []
        for x in source.points:
            key = tuple(leg(x) for leg in legs)
            matches = fibres.get(key, [])
            if not matches:
                raise NoMediator(f"no point of {cone.apex} over {key}")
            if len(matches) > 1:
                raise NonUniqueMediator(
                    f"{len(matches)} points of {cone.apex} over {key}"
                )
            images.append(matches[0])
        h = PointMap(source, cone.apex, tuple(images))
        if not self.is_morphism(h):
            raise NoMediator(f"the pointwise mediator {h} is not a morphism")
        return h

    def inverse(self, f):
        if len(set(f.images)) != len(f.images):
            return None
        if len(f.images) != len(f.target.points):
            return None
        back = {
            image: point for point, image in zip(f.source.points, f.images)
        }
        g = PointMap.from_dict(f.target, f.source, back)
        if not self.is_morphism(g):
            return None
        return g

    def is_isomorphism(self, f):
        return self.inverse(f) is not None


class FinSetCategory(PointMapCategory):
    name = "FinSet"

    def objects(self, max_points=None):
        if max_points is None:
            max_points = self.default_points
        for n in range(max_points + 1):
            yield FiniteSet(tuple(range(n)))


FinSet = FinSetCategory()
