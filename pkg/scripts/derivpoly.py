#!/usr/bin/env python3
"""
Entry point for the derivpoly command line.

Usage:
    python scripts/derivpoly.py {table,deriv,check} --help
"""

import os
import sys

# Add the project root to the path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(project_root)

from core.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
