"""Allow running the command line as `python -m starfree`."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
