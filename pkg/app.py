"""
localmodels - command-line entry point.

    python app.py admissible 3 2 1 --svg
    python app.py chart A 3 2 1 --level wedge
    python app.py flatness output/chart_A_n3_21_wedge.json
    python app.py verify orthogonal
"""

import sys

from src.cli import main

if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
