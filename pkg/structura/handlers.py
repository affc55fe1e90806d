import logging

import sentry_sdk
from flask import jsonify
from werkzeug.exceptions import HTTPException

from structura.exceptions import (
    DocumentError,
    DocumentErrorList,
    StructuraError,
    UsageError,
)

logger = logging.getLogger(__name__)


def _error_response(error, status_code, errors=None):
    if errors is None:
        errors = [str(error)]
    body = {"success": False, "error": type(error).__name__, "errors": errors}
    return jsonify(body), status_code


def set_handlers(app):
    @app.errorhandler(DocumentErrorList)
    def handle_document_error_list(error):
        errors = [
            {"message": e.message, "line": e.line, "col": e.col}
            for e in error.errors
        ]
        return _error_response(error, 400, errors)

    @app.errorhandler(DocumentError)
    @app.errorhandler(UsageError)
    def handle_usage_error(error):
        return _error_response(error, 400)

    @app.errorhandler(StructuraError)
    def handle_structura_error(error):
        # BoundExceeded, OracleUnsound and the other mathematical refusals
        logger.info(
            f"Request refused: {error}",
            extra={"event": "request_refused", "error": type(error).__name__},
        )
        return _error_response(error, 422)

    @app.errorhandler(HTTPException)
    def handle_http_error(error):
        return _error_response(error, error.code, [error.description])

    @app.errorhandler(500)
    def internal_error(error):
        if not app.testing:
            sentry_sdk.capture_exception()
        return _error_response(error, 500)
