#!/usr/bin/env python3
"""Print the q = 0.4 comparison grid and check it against reference values."""

import sys

from chanskew.cli import main

if __name__ == "__main__":
    sys.exit(main(["table1", *sys.argv[1:]]))
