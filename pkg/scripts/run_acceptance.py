#!/usr/bin/env python3
"""Run the acceptance suite, one printed line per criterion.

Criterion 7 is expected to fail; it transcribes a claim about
convergent-substituted implications that is false in the standard model
(see tests/test_acceptance.py and the windows tests for the analysis).
"""

import pathlib
import subprocess
import sys


def main() -> int:
    root = pathlib.Path(__file__).resolve().parent.parent
    return subprocess.call(
        [sys.executable, "-m", "pytest", str(root / "tests" / "test_acceptance.py"),
         "-v", "-s", "--no-header"],
        cwd=root,
    )


if __name__ == "__main__":
    sys.exit(main())
