"""`python -m rollercoaster` dispatches to the CLI."""
from .cli import run

if __name__ == "__main__":
    raise SystemExit(run())
