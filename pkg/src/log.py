"""
Logging setup.

All modules log through ``get_logger(__name__)``. Messages keep the status
prefixes used across the project: ``[*]`` progress, ``[+]`` success,
``[!]`` failure, ``[-]`` refusal.
"""

import logging
import sys
import threading

from . import config

_ROOT = 'pentagraph'
_configured = False
_lock = threading.Lock()


def _configure() -> None:
    global _configured
    with _lock:
        if _configured:
            return
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(message)s'))
        root = logging.getLogger(_ROOT)
        root.addHandler(handler)
        root.setLevel(getattr(logging, config.LOG_LEVEL.upper(), logging.INFO))
        root.propagate = False
        _configured = True


def get_logger(name: str) -> logging.Logger:
    """Get a project logger for a module name."""
    _configure()
    short = name.split('.', 1)[1] if name.startswith('src.') else name
    return logging.getLogger(f"{_ROOT}.{short}")
