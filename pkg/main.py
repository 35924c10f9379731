"""
Simulador de forrageamento em enxame.

Ponto de entrada principal: delega para a CLI em app.experiment.cli.
"""

import sys

from app.experiment.cli import main

if __name__ == "__main__":
    sys.exit(main())
