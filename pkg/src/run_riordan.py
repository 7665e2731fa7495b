"""
Unified runner for the riordan-tp commands.

With no arguments this replays the worked-example corpus; otherwise the
arguments are passed to the riordan-tp command line unchanged.
"""
import sys

from dotenv import load_dotenv

from src.cli.commands import main as cli_main

# Load environment variables from .env file
load_dotenv()


def main() -> int:
    """
    Run riordan-tp.

    This function:
    1. Falls back to "verify-paper --all" when no command is given
    2. Prints a banner for human-readable output
    3. Runs the command and returns its exit code
    """
    argv = sys.argv[1:] or ["verify-paper", "--all"]
    if "json" not in argv and "csv" not in argv:
        print("\n" + "=" * 60)
        print(f"RIORDAN TP: {argv[0]}")
        print("=" * 60)
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
