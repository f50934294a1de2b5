# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Flask extension for the delay-line test."""

from . import config
from .cli import blade as blade_cmd


class BladeDLT(object):
    """Blade-DLT extension."""

    def __init__(self, app=None):
        """Extension initialization."""
        if app:
            self.init_app(app)

    def init_app(self, app):
        """Initialize application object."""
        self.init_config(app)
        app.extensions["blade-dlt"] = self
        app.cli.add_command(blade_cmd)

    def init_config(self, app):
        """Apply the ``BLADE_DLT_*`` defaults the app does not set."""
        for key in dir(config):
            if key.startswith("BLADE_DLT_"):
                app.config.setdefault(key, getattr(config, key))
