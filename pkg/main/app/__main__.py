#!/usr/bin/env python3
"""
gamma-expansions - exact coefficients and accuracy tables for asymptotic
expansions of the Gamma function
Command-line entry point: python -m app (run from the main/ directory)
"""

import sys
from pathlib import Path

# Make the package importable when started from a source checkout
main_dir = Path(__file__).resolve().parent.parent
if str(main_dir) not in sys.path:
    sys.path.insert(0, str(main_dir))

if __name__ == "__main__":
    from app.cli import main
    main()
