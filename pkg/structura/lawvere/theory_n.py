"""
The theory N: objects 0..K, and a morphism m -> n is a function
{0..n-1} -> {0..m-1}. It is the opposite of the category of finite
cardinals, so the product of m and n is m + n.
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

from structura.exceptions import CompositionError, UsageError
from structura.fincat.category import EffectiveCategory, ProductCone


@dataclass(frozen=True)
class NMorphism:
    """m -> n, given by the function j |-> indices[j] from n to m."""

    source: int
    target: int
    indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))

    def __str__(self):
        inner = ",".join(str(i) for i in self.indices)
        return f"{self.source}->{self.target}[{inner}]"


class TheoryN(EffectiveCategory):
    name = "N"

    def __init__(self, bound):
        super().__init__()
        self.bound = bound

    def objects(self, max_points=None):
        return iter(range(self.bound + 1))

    def contains(self, obj):
        return isinstance(obj, int) and 0 <= obj <= self.bound

    def hom(self, source, target):
        for indices in itertools.product(range(source), repeat=target):
            yield NMorphism(source, target, indices)

    def identity(self, obj):
        return NMorphism(obj, obj, tuple(range(obj)))

    def compose(self, g, f):
        if f.target != g.source:
            raise CompositionError(f"cannot compose {g} after {f}")
        return NMorphism(
            f.source, g.target, tuple(f.indices[j] for j in g.indices)
        )

    def is_morphism(self, f):
        return (
            isinstance(f, NMorphism)
            and len(f.indices) == f.target
            and all(0 <= i < f.source for i in f.indices)
        )

    def product_cone(self, factors):
        apex = sum(factors)
        projections = []
        offset = 0
        for factor in factors:
            projections.append(
                NMorphism(apex, factor, tuple(range(offset, offset + factor)))
            )
            offset += factor

        def mediator(legs, source):
            indices = tuple(i for leg in legs for i in leg.indices)
            return NMorphism(source, apex, indices)

        return ProductCone(apex, tuple(projections), tuple(factors), mediator)


def build_theory_N(bound):
    if bound < 1:
        raise UsageError("the theory N needs at least the objects 0 and 1")
    return TheoryN(bound)
