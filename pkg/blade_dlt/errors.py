# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Blade-DLT exceptions."""


class BladeDLTError(Exception):
    """Base class for all Blade-DLT errors."""


class ValidationError(BladeDLTError, ValueError):
    """The pipeline description is structurally invalid."""


class ScanError(BladeDLTError, ValueError):
    """Scan vector or shifted bit count does not match the pipeline."""


class FaultError(BladeDLTError, ValueError):
    """A fault would leave a delay line with a non-positive delay."""


class ConfigError(BladeDLTError):
    """A config or report file is unreadable or ill-formed."""


class DeviceStateError(BladeDLTError, RuntimeError):
    """A measurement was started on a device that was not reset."""
