#!/usr/bin/env python
"""
renyikit command line startup script

    renyikit_script.py divergence rho.json sigma.json --alpha 0.5,2,inf
"""
import sys

from renyikit.cli import main

if __name__ == "__main__":
    sys.exit(main())
