"""
The commands shared by the command line and the HTTP API.

Each command returns a CommandResult: an exit code (0 success, 1
mathematical failure, 2 usage or document error), the text report and
a machine-readable summary.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from structura.dsl import parse_spec
from structura.exceptions import (
    BoundExceeded,
    DocumentError,
    DocumentErrorList,
    StructuraError,
    UsageError,
)
from structura.fincat.adjunction import shipped_adjunction
from structura.lawvere.presentations import oracle_for
from structura.lawvere.structures import render_tables, validate_structure
from structura.lawvere.theory import build_lawvere_theory, default_bound
from structura.transport.ascent import ascend, descend
from structura.transport.enumeration import enumerate_structures
from structura.transport.lifted import lift_adjunction
from structura.transport.uniqueness import (
    verify_unique_ascent,
    verify_unique_descent,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

STATUS = {EXIT_OK: "ok", EXIT_FAILURE: "failed", EXIT_USAGE: "usage-error"}

DIRECTIONS = ("ascend", "descend")


@dataclass
class CommandResult:
    command: str
    exit_code: int
    text: str
    counts: Dict[str, int] = field(default_factory=dict)
    witnesses: List[str] = field(default_factory=list)

    @property
    def status(self):
        return STATUS[self.exit_code]

    def to_dict(self):
        return {
            "command": self.command,
            "status": self.status,
            "counts": dict(sorted(self.counts.items())),
            "witnesses": list(self.witnesses),
        }


def exit_code_for(error):
    """Usage and document errors exit 2, mathematical failures 1."""
    if isinstance(
        error, (DocumentError, DocumentErrorList, UsageError, BoundExceeded)
    ):
        return EXIT_USAGE
    return EXIT_FAILURE


def error_result(command, error):
    if isinstance(error, DocumentErrorList):
        witnesses = [str(e) for e in error.errors]
    else:
        witnesses = [str(error)]
    report = getattr(error, "report", None)
    text = "\n".join(f"error: {line}" for line in witnesses)
    if report is not None:
        text = f"{report.render()}\n{text}"
    return CommandResult(command, exit_code_for(error), text, {}, witnesses)


def load_document(text):
    """
    :raises DocumentErrorList: with every positioned error
    """
    return parse_spec(text)


def _report_result(command, report, lines=()):
    text = "\n".join(list(lines) + [report.render()])
    counts = dict(report.counts)
    counts.update(report.summary())
    return CommandResult(
        command,
        EXIT_OK if report.verified else EXIT_FAILURE,
        text,
        counts,
        [record.render() for record in report.failures],
    )


def cmd_validate(document, structure_name):
    structure = document.structure(structure_name)
    report = validate_structure(structure)
    return _report_result("validate", report)


def cmd_transport(
    document,
    structure_name,
    adjunction="beta",
    direction="ascend",
    verify_unique=False,
    bounds=None,
):
    """
    Ascend a structure along the unit, or descend it along the counit,
    of a shipped adjunction.
    """
    if direction not in DIRECTIONS:
        raise UsageError(
            f"direction must be one of {', '.join(DIRECTIONS)}, "
            f"not {direction!r}"
        )
    structure = document.structure(structure_name)
    adj = shipped_adjunction(adjunction)
    lifted = lift_adjunction(adj, structure.presentation)

    if direction == "ascend":
        moved, morphism = ascend(structure, lifted)
        label = "unit map"
    else:
        moved, morphism = descend(structure, lifted)
        label = "counit map"

    lines = [
        f"# {direction} {structure_name} along {adj.name}",
        f"carrier: {moved.carrier}",
    ]
    lines.extend(render_tables(moved))
    lines.append(f"{label}: {morphism.base}")
    counts = {"points": len(moved.carrier)}

    if not verify_unique:
        return CommandResult("transport", EXIT_OK, "\n".join(lines), counts)

    if direction == "ascend":
        report = verify_unique_ascent(
            structure, lifted, (moved, morphism), bounds
        )
    else:
        report = verify_unique_descent(
            structure, lifted, (moved, morphism), bounds
        )
    result = _report_result("transport", report, lines + [""])
    result.counts.update(counts)
    return result


def cmd_theory(
    document, theory_name, hom=(1, 1), max_size=3, allow_bounded=False
):
    """
    List the normal-form morphisms of T(m, n) up to the oracle's weight
    bound.
    """
    presentation = document.theory(theory_name)
    source, target = hom
    bound = default_bound(presentation)
    if min(source, target) < 0 or max(source, target) > bound:
        raise BoundExceeded(
            f"hom({source},{target}) is outside the objects 0..{bound} "
            f"of {theory_name}"
        )
    oracle = oracle_for(presentation, allow_bounded=allow_bounded)
    theory = build_lawvere_theory(presentation, oracle, bound, max_size)
    morphisms = [str(f) for f in theory.hom(source, target, max_size)]

    lines = [
        f"# hom({source},{target}) of {theory_name} up to size {max_size}"
    ]
    lines.extend(morphisms)
    lines.extend(f"note: {text}" for text in oracle.notes())
    lines.append(f"count: {len(morphisms)}")
    return CommandResult(
        "theory",
        EXIT_OK,
        "\n".join(lines),
        {"morphisms": len(morphisms)},
        morphisms,
    )


def cmd_enumerate(document, theory_name, carrier_name, bounds=None):
    """Every structure of a theory on a declared set or space."""
    presentation = document.theory(theory_name)
    obj, cat = document.carrier(carrier_name)
    structures = enumerate_structures(presentation, obj, cat, bounds)

    lines = [f"# {theory_name} structures on {carrier_name}"]
    entries = []
    for index, structure in enumerate(structures):
        entry = "; ".join(render_tables(structure)) or "bare"
        entries.append(entry)
        lines.append(f"[{index}] {entry}")
    lines.append(f"count: {len(structures)}")
    return CommandResult(
        "enumerate",
        EXIT_OK,
        "\n".join(lines),
        {"structures": len(structures), "points": len(obj.points)},
        entries,
    )


def run(command, document_text, **options):
    """
    Parse a document and run a command on it, turning every structura
    error into a result with the matching exit code.
    """
    handlers = {
        "validate": cmd_validate,
        "transport": cmd_transport,
        "theory": cmd_theory,
        "enumerate": cmd_enumerate,
    }
    try:
        handler = handlers[command]
    except KeyError:
        return error_result(command, UsageError(f"unknown command {command}"))
    try:
        document = load_document(document_text)
        return handler(document, **options)
    except StructuraError as error:
        logger.info(
            f"{command} failed: {error}",
            extra={"event": "command_error", "command": command},
        )
        return error_result(command, error)
