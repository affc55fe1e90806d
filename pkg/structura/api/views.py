"""
JSON endpoints mirroring the command line. Each takes
{"document": <source text>, ...options} and answers with the same
summary `--json` prints: {command, status, counts, witnesses}, plus the
text report.
"""

import flask
from flask.json import jsonify

from structura import commands
from structura.exceptions import UsageError

api = flask.Blueprint("api", __name__)


def _payload():
    data = flask.request.get_json(silent=True)
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    document = data.get("document")
    if not isinstance(document, str):
        raise UsageError("'document' must be the text of a document")
    return commands.load_document(document), data


def _required(data, key):
    value = data.get(key)
    if not isinstance(value, str) or not value:
        raise UsageError(f"'{key}' is required")
    return value


def _integer(data, key, default):
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise UsageError(f"'{key}' must be an integer")
    return value


def _respond(result):
    body = result.to_dict()
    body["exit_code"] = result.exit_code
    body["report"] = result.text
    return jsonify(body)


@api.route("/validate", methods=["POST"])
def validate():
    document, data = _payload()
    return _respond(
        commands.cmd_validate(document, _required(data, "structure"))
    )


@api.route("/transport", methods=["POST"])
def transport():
    document, data = _payload()
    return _respond(
        commands.cmd_transport(
            document,
            _required(data, "structure"),
            adjunction=data.get("adjunction", "beta"),
            direction=data.get("direction", "ascend"),
            verify_unique=bool(data.get("verify_unique", False)),
        )
    )


@api.route("/theory", methods=["POST"])
def theory():
    document, data = _payload()
    hom = data.get("hom", [1, 1])
    if (
        not isinstance(hom, list)
        or len(hom) != 2
        or not all(isinstance(n, int) for n in hom)
    ):
        raise UsageError("'hom' must be a pair of integers")
    return _respond(
        commands.cmd_theory(
            document,
            _required(data, "theory"),
            hom=tuple(hom),
            max_size=_integer(data, "max_size", 3),
            allow_bounded=bool(data.get("allow_bounded_oracle", False)),
        )
    )


@api.route("/enumerate", methods=["POST"])
def enumerate_structures():
    document, data = _payload()
    return _respond(
        commands.cmd_enumerate(
            document, _required(data, "theory"), _required(data, "on")
        )
    )
