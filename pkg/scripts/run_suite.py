#!/usr/bin/env python3
"""Run the full theorem suite from a checkout (wrapper around the CLI).

Usage:
    python scripts/run_suite.py [--deep] [--max-dim N] [--format json]
"""

import sys

from hopfqexp.cli import main

if __name__ == "__main__":
    sys.exit(main(["suite", *sys.argv[1:]]))
