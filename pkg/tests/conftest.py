import os
import subprocess
import sys

import pytest


@pytest.fixture
def run_cli():
    """Invoke the CLI in a subprocess and capture its output."""

    def run(args, env_extra=None):
        env = dict(os.environ)
        env.pop("VANGLE_FORMAT", None)
        if env_extra:
            env.update(env_extra)
        return subprocess.run(
            [sys.executable, "-m", "vangle", *args],
            capture_output=True,
            text=True,
            env=env,
            check=False,
        )

    return run
