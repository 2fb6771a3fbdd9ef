#!/usr/bin/env python3
"""
Launcher script for the htutte command line.

Allows running the CLI from the project root without installing the package:

    python run_cli.py tutte hamming74.txt
"""

import os
import sys

from dotenv import load_dotenv

load_dotenv()

# Add src directory to Python path so imports work
src_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), "src")
if src_dir not in sys.path:
    sys.path.insert(0, src_dir)

from harmonic_tutte.cli.main import main  # noqa: E402

if __name__ == "__main__":
    main()
