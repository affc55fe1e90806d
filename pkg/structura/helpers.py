import logging
from dataclasses import dataclass, replace

from ruamel.yaml import YAML

from structura import config
from structura.exceptions import BoundExceeded

_yaml_safe = YAML(typ="safe")
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bounds:
    """Limits for every exhaustive enumeration.

    :var max_carrier: Largest number of carrier points
    :var max_arity: Largest operation arity
    :var max_identity_variables: Largest identity context
    """

    max_carrier: int = 4
    max_arity: int = 2
    max_identity_variables: int = 3

    def check_carrier(self, size):
        if size > self.max_carrier:
            raise BoundExceeded(
                f"carrier has {size} points, bound is {self.max_carrier}"
            )

    def check_presentation(self, presentation):
        for name, arity in presentation.signature.symbols:
            if arity > self.max_arity:
                raise BoundExceeded(
                    f"{name} has arity {arity}, bound is {self.max_arity}"
                )
        for identity in presentation.identities:
            if identity.context > self.max_identity_variables:
                raise BoundExceeded(
                    f"identity {identity} uses {identity.context} "
                    f"variables, bound is {self.max_identity_variables}"
                )


def get_yaml(filename):
    """
    Reads a YAML file and returns its content, or None when the file
    cannot be read or parsed

    Keyword arguments:
    filename -- path of the file to load
    """
    try:
        with open(filename, "r") as f:
            return _yaml_safe.load(f)
    except Exception:
        logger.warning(
            f"Could not read configuration file {filename}",
            extra={"event": "config_unreadable", "path": filename},
        )
        return None


def default_bounds():
    bounds = Bounds(
        max_carrier=config.MAX_CARRIER,
        max_arity=config.MAX_ARITY,
        max_identity_variables=config.MAX_IDENTITY_VARIABLES,
    )

    if not config.CONFIG_FILE:
        return bounds

    data = get_yaml(config.CONFIG_FILE) or {}
    overrides = data.get("bounds") or {}
    known = {
        key: int(value)
        for key, value in overrides.items()
        if key in Bounds.__dataclass_fields__
    }

    return replace(bounds, **known)


def resolve_bounds(bounds=None):
    if bounds is None:
        return default_bounds()
    return bounds
