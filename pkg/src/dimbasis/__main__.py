"""Entry point for ``python -m dimbasis``."""

from dimbasis.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
