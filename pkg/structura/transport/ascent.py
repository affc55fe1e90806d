"""
Ascent along the unit and descent along the counit.

Ascending C gives D = F(C) on the carrier F(C) with the lifted unit
C -> G(D) over eta; descending D gives C = G(D) with the lifted counit
F(C) -> D over eps.
"""

import logging
from dataclasses import replace

from structura.exceptions import UsageError
from structura.lawvere.structures import require_valid

logger = logging.getLogger(__name__)


def on_side(cat, structure, direction):
    """The structure viewed in `cat`, which must contain its carrier."""
    if not cat.contains(structure.carrier):
        raise UsageError(
            f"{direction} along this adjunction starts in {cat.name}; "
            f"{structure.carrier} is not an object there"
        )
    if structure.cat is cat:
        return structure
    return replace(structure, cat=cat)


def ascend(structure, lifted):
    """
    :returns: (D, phi) with D on F(C) and phi : C -> G(D) over eta_C
    :raises EmptyCarrierError: on an empty carrier the constants forbid
    """
    structure = on_side(lifted.source, structure, "ascent")
    lifted.presentation.check_carrier_size(len(structure.carrier))
    require_valid(structure)
    ascended = lifted.lift_F(structure)
    phi = lifted.unit(structure)
    logger.info(
        f"Ascended {structure} along {lifted.name}",
        extra={"event": "ascend", "adjunction": lifted.name},
    )
    return ascended, phi


def descend(structure, lifted):
    """
    :returns: (C, psi) with C on G(D) and psi : F(C) -> D over eps_D
    :raises EmptyCarrierError: on an empty carrier the constants forbid
    """
    structure = on_side(lifted.target, structure, "descent")
    lifted.presentation.check_carrier_size(len(structure.carrier))
    require_valid(structure)
    descended = lifted.lift_G(structure)
    psi = lifted.counit(structure)
    logger.info(
        f"Descended {structure} along {lifted.name}",
        extra={"event": "descend", "adjunction": lifted.name},
    )
    return descended, psi
