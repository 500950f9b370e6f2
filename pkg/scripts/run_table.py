#!/usr/bin/env python3
"""Recompute the x = 2a invariant catalog; equivalent to `cubictrace table`."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cubictrace.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["table", *sys.argv[1:]]))
