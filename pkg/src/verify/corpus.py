"""
The worked-example corpus.

Each record holds a way to build an array (explicit generating
functions, a quasi-Riordan pair, or tridiagonal production data plus
d(0)), the matrix as printed, and what the checks should find. Printed
entries that disagree with exact arithmetic are listed as flagged cells
carrying both values; they are never corrected silently.
"""
import json
from pathlib import Path
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src import config
from src.arrays.matrix_window import MatrixWindow
from src.sequences.production import TridiagonalProduction
from src.series import Rational
from src.tp.minors import Witness


class ExampleSource(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["explicit", "quasi", "tridiagonal"]
    d: Optional[str] = None
    g: Optional[str] = None
    f: Optional[str] = None
    production: Optional[TridiagonalProduction] = None
    d0: Optional[Rational] = None

    @model_validator(mode="after")
    def _complete(self) -> "ExampleSource":
        if self.kind == "explicit" and not (self.d and self.g and self.f):
            raise ValueError("explicit sources need d, g and f")
        if self.kind == "quasi" and not (self.g and self.f):
            raise ValueError("quasi sources need g and f")
        if self.kind == "tridiagonal" and (self.production is None or self.d0 is None):
            raise ValueError("tridiagonal sources need production data and d0")
        return self


class FlaggedEntry(BaseModel):
    """A printed entry that exact arithmetic does not reproduce."""

    model_config = ConfigDict(frozen=True)

    row: int
    col: int
    printed: Rational
    derived: Rational
    note: str = ""


class ClosedForms(BaseModel):
    """Printed closed forms of d, g, f as expressions in t."""

    model_config = ConfigDict(frozen=True)

    d: str
    g: str
    f: str
    reproduce_sequences: bool = True


class AZWClosedForms(BaseModel):
    model_config = ConfigDict(frozen=True)

    A: str
    Z: str
    W: str


class PaperExample(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    title: str
    provenance: Literal["printed", "derived"] = "printed"
    source: ExampleSource
    expected: List[List[Rational]]
    flagged: List[FlaggedEntry] = Field(default_factory=list)
    closed_forms: Optional[ClosedForms] = None
    azw_closed_forms: Optional[AZWClosedForms] = None
    expected_tp: Optional[Literal["WindowTP", "NotTP"]] = None
    tp_order: int = 3
    expected_witness: Optional[Witness] = None
    expected_production: Optional[List[List[Rational]]] = None
    expected_production_tp: Optional[Literal["WindowTP", "NotTP"]] = None
    expected_exact_verdict: Optional[Literal["TP", "NotTP"]] = None
    notes: str = ""

    @model_validator(mode="after")
    def _flags_inside_matrix(self) -> "PaperExample":
        for entry in self.flagged:
            if entry.row >= len(self.expected) or entry.col > entry.row:
                raise ValueError(f"flagged cell ({entry.row}, {entry.col}) is outside the printed matrix")
            if self.expected_value(entry.row, entry.col) != entry.printed:
                raise ValueError(f"flagged cell ({entry.row}, {entry.col}) does not hold the printed value")
            if entry.printed == entry.derived:
                raise ValueError(f"flagged cell ({entry.row}, {entry.col}) is not a discrepancy")
        return self

    @property
    def rows(self) -> int:
        return len(self.expected)

    def expected_value(self, row: int, col: int):
        printed_row = self.expected[row]
        return printed_row[col] if col < len(printed_row) else 0

    def expected_window(self) -> MatrixWindow:
        return MatrixWindow.from_rows(self.expected, cols=self.rows)

    def derived_window(self) -> MatrixWindow:
        """The printed matrix with every flagged cell replaced by its derived value."""
        grid = self.expected_window().to_rows()
        for entry in self.flagged:
            grid[entry.row][entry.col] = entry.derived
        return MatrixWindow(grid)

    def flags_by_cell(self) -> Dict[tuple, FlaggedEntry]:
        return {(entry.row, entry.col): entry for entry in self.flagged}


def load_corpus(path: Optional[Path] = None) -> List[PaperExample]:
    """
    Load the corpus, sorted by id.

    Args:
        path: JSON file; defaults to RIORDAN_CORPUS_PATH or the packaged data

    Returns:
        The examples
    """
    source = Path(path) if path is not None else config.corpus_path()
    with open(source, "r", encoding="utf-8") as handle:
        records = json.load(handle)
    examples = [PaperExample.model_validate(record) for record in records]
    return sorted(examples, key=lambda example: example.id)
