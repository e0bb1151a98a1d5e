#!/usr/bin/env python3
"""Run the acceptance suite with per-criterion progress lines.

Usage:
    python3 scripts/run_acceptance.py [extra pytest args]

Each criterion prints one `criterion N: PASS (...)` line; the pytest exit
code is propagated.
"""

import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main() -> int:
    args = [str(ROOT / "tests" / "test_acceptance.py"), "-v", "-s"]
    args.extend(sys.argv[1:])
    return pytest.main(args)


if __name__ == "__main__":
    raise SystemExit(main())
