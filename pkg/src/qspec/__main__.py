"""Allow `python -m qspec` to behave like the `qspec` console script."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
