from structura.dsl.parser import parse_spec  # noqa: F401
from structura.dsl.printer import print_spec  # noqa: F401
