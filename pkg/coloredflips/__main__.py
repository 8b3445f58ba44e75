# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Allows python -m coloredflips.
"""
# Standard library
import sys
# Local imports
from coloredflips import cli

if __name__ == "__main__":
    sys.exit(cli.main())
