"""
A Flask application serving the structura commands as JSON endpoints.
"""

# We import the config module before anything else to make sure env vars are
# loaded properly and the FLASK_* prefix is stripped before they are parsed
import structura.config  # noqa: F401

import sentry_sdk

from canonicalwebteam.flask_base.app import FlaskBase
from structura.api.views import api
from structura.config import SENTRY_DSN
from structura.handlers import set_handlers


def create_app(testing=False):
    sentry_sdk.init(dsn=SENTRY_DSN)

    app = FlaskBase(__name__, "structura")
    app.config.from_object("structura.config")
    app.name = "structura"
    app.testing = testing

    set_handlers(app)
    app.register_blueprint(api, url_prefix="/api")

    return app
