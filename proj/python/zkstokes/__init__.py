"""Exact combinatorial Stokes counting, Tucker lemmas, and integer homology
for cyclic group actions.

The heavy lifting lives in the compiled extension; this package re-exports
its surface and locates the bundled command-line binary.
"""

import os
import subprocess
import sys

from ._core import *  # noqa: F401,F403
from . import _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
__version__ = "0.1.0"


def cli_path():
    """Path to the command-line binary, or None when not available.

    Wheels bundle the binary under ``zkstokes/bin``; development builds can
    point at one with the ``ZKSTOKES_CLI`` environment variable.
    """
    here = os.path.dirname(__file__)
    for name in ("zkstokes", "zkstokes.exe"):
        path = os.path.join(here, "bin", name)
        if os.path.exists(path):
            return path
    return os.environ.get("ZKSTOKES_CLI")


def _run_cli():
    path = cli_path()
    if not path:
        raise SystemExit("zkstokes: command-line binary not found")
    raise SystemExit(subprocess.call([path] + sys.argv[1:]))
