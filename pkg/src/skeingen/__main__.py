"""Entry point for running skeingen as a module.

This allows running the CLI with:
    python -m skeingen
"""

from skeingen.cli.main import main

if __name__ == "__main__":
    main()
