"""Thin wrapper to invoke the spinbrauer CLI from the project root."""

import sys

from src.core.app import main


if __name__ == "__main__":
    sys.exit(main())
