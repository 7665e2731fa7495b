"""
Runtime configuration.

Settings come from the process environment, optionally seeded from a
.env file in the working directory. Values are read on every call so a
changed environment (or a patched one in tests) takes effect at once.
"""
import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

DEFAULT_MAX_MINORS = 2_000_000
DEFAULT_TP_ORDER = 6
PACKAGED_CORPUS = Path(__file__).resolve().parent / "verify" / "data" / "paper_examples.json"


def _int_setting(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.replace("_", "").replace(",", ""))
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def max_minors() -> int:
    """
    Cap on the number of minors one total-positivity check may enumerate.

    Returns:
        The value of RIORDAN_TP_MAX_MINORS, or 2,000,000 when unset
    """
    return _int_setting("RIORDAN_TP_MAX_MINORS", DEFAULT_MAX_MINORS)


def default_tp_order() -> int:
    """Default largest minor order for TP checks (RIORDAN_TP_DEFAULT_ORDER)."""
    return _int_setting("RIORDAN_TP_DEFAULT_ORDER", DEFAULT_TP_ORDER)


def corpus_path() -> Path:
    """Location of the example corpus (RIORDAN_CORPUS_PATH or the packaged file)."""
    raw = os.environ.get("RIORDAN_CORPUS_PATH")
    return Path(raw) if raw else PACKAGED_CORPUS
