"""
LangGraph workflow that replays the worked-example corpus.

Each example flows through the same graph:

    build -> compare -> tp_screen -> cross_oracle -> closed_forms -> report

1. build: construct the array from its source (explicit generating
   functions, a quasi-Riordan pair, or tridiagonal production data)
2. compare: every printed entry against exact arithmetic; flagged cells
   must hold their derived value instead
3. tp_screen: the windowed total-positivity screen, with its witness
4. cross_oracle: A/Z/W sequences, the production identity, forward
   substitution and the production iteration must all agree
5. closed_forms: printed closed forms of d, g, f and of A, Z, W

A failure to build jumps straight to the report.
"""
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TypedDict

from langgraph.graph import END, StateGraph
from pydantic import BaseModel, ConfigDict, Field

from src.arrays.builders import build_almost, build_quasi, quasi_as_almost
from src.arrays.matrix_window import MatrixWindow
from src.arrays.specs import AlmostRiordanSpec, QuasiRiordanSpec
from src.cli.expression import series_from_text
from src.errors import InvalidArgument, RiordanError
from src.sequences.characteristic import azw_from_almost
from src.sequences.production import (
    check_production_identity,
    extract_production,
    production_from_azw,
    production_iteration,
    production_window_from_tridiagonal,
)
from src.sequences.recovery import recover_from_tridiagonal
from src.series import format_rational
from src.tp.jacobi import exact_tridiagonal_check
from src.tp.minors import tp_check
from src.verify.corpus import PaperExample, load_corpus

logger = logging.getLogger(__name__)

# extra orders kept beyond the window so A/Z/W and f/t stay exact
_ORDER_SLACK = 3


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    detail: str = ""


class ExampleReport(BaseModel):
    """Outcome of every check run on one example."""

    id: str
    title: str
    provenance: str
    checks: List[CheckResult] = Field(default_factory=list)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(check.passed for check in self.checks)


class CorpusReport(BaseModel):
    examples: List[ExampleReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(example.passed for example in self.examples)

    @property
    def failures(self) -> List[ExampleReport]:
        return [example for example in self.examples if not example.passed]

    def render_text(self, verbose: bool = False) -> str:
        lines = []
        for example in self.examples:
            status = "ok" if example.passed else "FAIL"
            lines.append(f"[{status}] {example.id}: {example.title}")
            if example.error:
                lines.append(f"    error: {example.error}")
            for check in example.checks:
                if verbose or not check.passed:
                    mark = "pass" if check.passed else "fail"
                    suffix = f" ({check.detail})" if check.detail else ""
                    lines.append(f"    {mark}: {check.name}{suffix}")
        passed = len(self.examples) - len(self.failures)
        lines.append(f"{passed}/{len(self.examples)} examples verified")
        return "\n".join(lines)


class VerificationState(TypedDict):
    """State for the verification workflow."""
    example: PaperExample
    spec: Optional[AlmostRiordanSpec]
    window: Optional[MatrixWindow]
    checks: List[CheckResult]
    error: Optional[str]
    report: Optional[ExampleReport]


def _record(state: VerificationState, name: str, passed: bool, detail: str = "") -> None:
    if not passed:
        logger.info("%s: check %s failed %s", state["example"].id, name, detail)
    state["checks"] = state["checks"] + [CheckResult(name=name, passed=passed, detail=detail)]


def _cells(differences: Sequence[tuple]) -> str:
    shown = ", ".join(
        f"({i},{j}) expected {format_rational(want)} got {format_rational(got)}"
        for i, j, want, got in differences[:4]
    )
    more = len(differences) - 4
    return shown + (f" and {more} more" if more > 0 else "")


def _differences(expected: MatrixWindow, actual: MatrixWindow) -> List[tuple]:
    return [
        (i, j, expected.entry(i, j), actual.entry(i, j))
        for i in range(expected.rows)
        for j in range(expected.cols)
        if expected.entry(i, j) != actual.entry(i, j)
    ]


def _explicit_spec(example: PaperExample, order: int) -> AlmostRiordanSpec:
    source = example.source
    return AlmostRiordanSpec(
        series_from_text(source.d, order),
        series_from_text(source.g, order),
        series_from_text(source.f, order),
    )


def create_verification_workflow() -> StateGraph:
    """
    Create the LangGraph workflow that verifies one corpus example.

    Returns:
        A LangGraph StateGraph
    """

    def build(state: VerificationState) -> VerificationState:
        """Construct the array window from the example's source."""
        example = state["example"]
        rows = example.rows
        order = rows + _ORDER_SLACK
        source = example.source
        try:
            if source.kind == "explicit":
                spec = _explicit_spec(example, order)
                window = build_almost(spec, rows, rows)
            elif source.kind == "quasi":
                quasi = QuasiRiordanSpec(series_from_text(source.g, order), series_from_text(source.f, order))
                window = build_quasi(quasi, rows, rows)
                spec = quasi_as_almost(quasi)
            else:
                spec = recover_from_tridiagonal(source.production, source.d0, order)
                window = build_almost(spec, rows, rows)
        except RiordanError as exc:
            logger.warning("%s: could not build the array: %s", example.id, exc)
            state["error"] = f"{type(exc).__name__}: {exc}"
            return state
        state["spec"] = spec
        state["window"] = window
        return state

    def after_build(state: VerificationState) -> str:
        return "error" if state["error"] else "continue"

    def compare(state: VerificationState) -> VerificationState:
        """Compare printed entries, honouring flagged cells."""
        example = state["example"]
        window = state["window"]
        flags = example.flags_by_cell()
        mismatches = []
        for i in range(example.rows):
            for j in range(example.rows):
                computed = window.entry(i, j)
                flag = flags.get((i, j))
                wanted = flag.derived if flag else example.expected_value(i, j)
                if computed != wanted:
                    mismatches.append((i, j, wanted, computed))
        _record(state, "printed-entries", not mismatches, _cells(mismatches))
        for flag in example.flagged:
            logger.debug("%s: (%d, %d) printed %s, derived %s", example.id, flag.row, flag.col,
                         flag.printed, flag.derived)

        source = example.source
        if source.kind == "tridiagonal":
            rows = example.rows
            jacobi = production_window_from_tridiagonal(source.production, rows - 1, rows)
            iterated = production_iteration(jacobi, source.d0, rows)
            differences = _differences(example.derived_window(), iterated)
            _record(state, "production-iteration", not differences, _cells(differences))
        return state

    def tp_screen(state: VerificationState) -> VerificationState:
        """Run the minor screen at the example's order."""
        example = state["example"]
        if example.expected_tp is None:
            return state
        try:
            report = tp_check(state["window"], max_order=example.tp_order)
        except RiordanError as exc:
            _record(state, "tp-screen", False, f"{type(exc).__name__}: {exc}")
            return state
        _record(state, "tp-screen", report.verdict == example.expected_tp,
                f"{report.verdict} after {report.minors_checked} minors")
        if example.expected_witness is not None:
            _record(state, "tp-witness", report.witness == example.expected_witness,
                    f"found {report.witness}")
        return state

    def cross_oracle(state: VerificationState) -> VerificationState:
        """A/Z/W sequences against every independent route to J."""
        example = state["example"]
        spec, window = state["spec"], state["window"]
        rows = example.rows
        try:
            azw = azw_from_almost(spec, rows)
            _record(state, "production-identity", check_production_identity(spec, azw, rows))

            extracted = extract_production(window)
            from_azw = production_from_azw(azw, rows - 1, rows - 1)
            differences = _differences(from_azw, extracted)
            _record(state, "forward-substitution", not differences, _cells(differences))

            if example.expected_production is not None:
                width = max(len(row) for row in example.expected_production)
                printed = MatrixWindow.from_rows(example.expected_production, cols=width)
                production = production_from_azw(azw, printed.rows, width)
                differences = _differences(printed, production)
                _record(state, "printed-production", not differences, _cells(differences))
                if example.expected_production_tp is not None:
                    report = tp_check(production, max_order=2)
                    _record(state, "production-tp", report.verdict == example.expected_production_tp,
                            report.verdict)

            source = example.source
            if source.kind == "tridiagonal":
                tridiagonal = production_window_from_tridiagonal(source.production, rows - 1, rows - 1)
                differences = _differences(tridiagonal, from_azw)
                _record(state, "recovered-production", not differences, _cells(differences))
                if example.expected_exact_verdict is not None:
                    verdict = exact_tridiagonal_check(source.production)
                    _record(state, "exact-criterion", verdict.value == example.expected_exact_verdict,
                            verdict.value)
        except RiordanError as exc:
            _record(state, "cross-oracle", False, f"{type(exc).__name__}: {exc}")
        return state

    def closed_forms(state: VerificationState) -> VerificationState:
        """Expand printed closed forms and compare them with the array."""
        example = state["example"]
        rows = example.rows
        order = rows + _ORDER_SLACK
        try:
            forms = example.closed_forms
            if forms is not None:
                spec = AlmostRiordanSpec(
                    series_from_text(forms.d, order),
                    series_from_text(forms.g, order),
                    series_from_text(forms.f, order),
                )
                window = build_almost(spec, rows, rows)
                if forms.reproduce_sequences:
                    differences = _differences(example.derived_window(), window)
                    _record(state, "closed-forms", not differences, _cells(differences))
                else:
                    differences = _differences(example.expected_window(), window)
                    _record(state, "closed-forms-match-printed", not differences, _cells(differences))
                    _record(state, "closed-forms-differ-from-sequences",
                            window != example.derived_window())

            if example.azw_closed_forms is not None:
                azw = azw_from_almost(state["spec"], rows)
                printed = example.azw_closed_forms
                for name, text, series in (("A", printed.A, azw.A), ("Z", printed.Z, azw.Z),
                                           ("W", printed.W, azw.W)):
                    expansion = series_from_text(text, rows)
                    _record(state, f"closed-form-{name}", expansion == series.truncate(rows), str(expansion))
        except RiordanError as exc:
            _record(state, "closed-forms", False, f"{type(exc).__name__}: {exc}")
        return state

    def report(state: VerificationState) -> VerificationState:
        """Collect the checks into an ExampleReport."""
        example = state["example"]
        state["report"] = ExampleReport(
            id=example.id,
            title=example.title,
            provenance=example.provenance,
            checks=state["checks"],
            error=state["error"],
        )
        return state

    workflow = StateGraph(VerificationState)

    workflow.add_node("build", build)
    workflow.add_node("compare", compare)
    workflow.add_node("tp_screen", tp_screen)
    workflow.add_node("cross_oracle", cross_oracle)
    workflow.add_node("closed_forms", closed_forms)
    workflow.add_node("report", report)

    workflow.add_conditional_edges(
        "build",
        after_build,
        {
            "continue": "compare",
            "error": "report"
        }
    )
    workflow.add_edge("compare", "tp_screen")
    workflow.add_edge("tp_screen", "cross_oracle")
    workflow.add_edge("cross_oracle", "closed_forms")
    workflow.add_edge("closed_forms", "report")
    workflow.add_edge("report", END)

    workflow.set_entry_point("build")

    return workflow


def initial_state(example: PaperExample) -> VerificationState:
    return VerificationState(example=example, spec=None, window=None, checks=[], error=None, report=None)


def verify_example(example: PaperExample, app: Any = None) -> ExampleReport:
    """
    Run the verification workflow on one example.

    Args:
        example: The corpus record
        app: A compiled workflow to reuse

    Returns:
        The example's report
    """
    app = app or create_verification_workflow().compile()
    result: Dict[str, Any] = app.invoke(initial_state(example))
    return result["report"]


def run_corpus(ids: Optional[Sequence[str]] = None, path: Optional[Path] = None) -> CorpusReport:
    """
    Verify the corpus, or the examples with the given ids.

    Args:
        ids: Example ids to run; all examples when None
        path: Corpus file; defaults to the packaged data

    Returns:
        The corpus report

    Raises:
        InvalidArgument: If an id is not in the corpus
    """
    examples = load_corpus(path)
    if ids:
        known = {example.id: example for example in examples}
        missing = [example_id for example_id in ids if example_id not in known]
        if missing:
            raise InvalidArgument(f"unknown example id(s): {', '.join(missing)}")
        examples = [known[example_id] for example_id in ids]
    app = create_verification_workflow().compile()
    reports = [verify_example(example, app) for example in examples]
    logger.info("verified %d examples, %d failed", len(reports), sum(not r.passed for r in reports))
    return CorpusReport(examples=reports)
