import logging
from typing import Iterable, List, NamedTuple, Optional, Sequence

from config import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE
from exceptions.exception import (
    ClassificationError,
    GraphFormatError,
    OracleLimitExceeded,
    RecipeError,
    TheoremViolation,
    ValidationError,
)
from graph_core import Graph, parse_edge_list, parse_graph6
from models import (
    AnalysisReport,
    AnalysisResult,
    FamilyClassification,
    FamilyTag,
    OutputFormat,
    VerifyConfig,
    VerifySummary,
)
from repositories.corpus_repository import CorpusRepository
from service import AnalysisService, GenerationService, SamplingService, VerificationService

logger = logging.getLogger(__name__)


class CommandResult(NamedTuple):
    output: str
    exit_code: int


def _usage_error(e: Exception) -> CommandResult:
    logger.warning(f"Usage error: {e}")
    return CommandResult(f"error: {e}", EXIT_USAGE)


def _sorted(vertices) -> str:
    return str(sorted(vertices))


def render_classification(cls: FamilyClassification) -> List[str]:
    if cls.tag == FamilyTag.OUT_OF_SCOPE:
        return [f"family: {cls.tag.value} ({cls.reason})"]
    lines = [f"family: {cls.tag.value}", f"  C = {list(cls.C)}"]
    if cls.C_prime is not None:
        lines.append(f"  C' = {list(cls.C_prime)}")
    if cls.shared:
        lines.append(f"  shared = {_sorted(cls.shared)}")
    if cls.tag in (FamilyTag.EVEN_LINKED, FamilyTag.ODD_LINKED):
        lines.append(f"  x = {cls.x}, y = {cls.y}")
        lines.append(f"  X = {_sorted(cls.X)}")
        lines.append(f"  A = {_sorted(cls.A)}, B = {_sorted(cls.B)}")
    return lines


def render_report(title: str, report: AnalysisReport) -> List[str]:
    identity = report.identity_class.label if report.identity_class else f"2α{report.identity_value:+d}"
    lines = [
        f"{title}:",
        f"  alpha = {report.alpha}, mu = {report.mu}, n = {report.n}",
        f"  core = {_sorted(report.core)}",
        f"  corona = {_sorted(report.corona)}",
        f"  N(core) = {_sorted(report.core_neighborhood)}",
        f"  |core| + |corona| = {identity}",
        f"  corona ⊔ N(core) = V: {report.partition_holds}",
    ]
    if report.ge is not None:
        lines.append(f"  Gallai-Edmonds: D = {_sorted(report.ge.D)}, A = {_sorted(report.ge.A)}, C = {_sorted(report.ge.C)}")
    return lines


def render_analysis(result: AnalysisResult) -> str:
    lines = render_classification(result.classification)
    if not result.bicriticality_checked:
        lines.append("  bicriticality: assumed, not checked (graph exceeds the oracle limit)")
    if result.predicted is not None:
        lines.extend(render_report("closed form", result.predicted))
    if result.oracle is not None:
        lines.extend(render_report("oracle", result.oracle))
        if result.predicted is not None:
            lines.append(f"mismatches: {', '.join(result.oracle.mismatches) or 'none'}")
    if result.checks:
        lines.append("checks:")
        for check in result.checks:
            status = "pass" if check.passed else ("diverges" if check.expected_divergent else "FAIL")
            lines.append(f"  [{status}] {check.name}: {check.detail}")
    for warning in result.warnings:
        lines.append(f"warning: {warning}")
    return "\n".join(lines)


def render_summary(summary: VerifySummary) -> str:
    lines = [
        f"checked: {summary.checked}",
        f"unexpected mismatches: {summary.unexpected_mismatches}",
        f"expected divergences: {summary.divergence_count}",
    ]
    if summary.parse_errors:
        lines.append(f"parse errors: {summary.parse_errors}")

    lines.append("families:")
    for family, tally in summary.families.items():
        lines.append(
            f"  {family:<18} checked={tally.checked} matches={tally.theorem_matches} "
            f"mismatches={tally.mismatches} divergent={tally.expected_divergent}"
        )
    lines.append("statements:")
    for name, tally in summary.statements.items():
        marker = " (expected-divergent)" if tally.expected_divergent else ""
        lines.append(f"  {name:<26} checked={tally.checked} passed={tally.passed} failed={tally.failed}{marker}")

    for record in summary.mismatch_records:
        lines.append(
            f"mismatch: {record.family} #{record.index} seed={record.seed} {record.statement}: "
            f"predicted {record.predicted}, oracle {record.oracle}, graph6 {record.graph6}"
        )
    lines.append(f"elapsed: {summary.elapsed_seconds:.2f}s")
    return "\n".join(lines)


def _summary_result(summary: VerifySummary, as_json: bool) -> CommandResult:
    output = summary.model_dump_json(indent=2) if as_json else render_summary(summary)
    return CommandResult(output, EXIT_MISMATCH if summary.unexpected_mismatches else EXIT_OK)


class AnalysisController:
    def __init__(self, service: Optional[AnalysisService] = None):
        self.service = service or AnalysisService()

    @staticmethod
    def parse(data: bytes, fmt: str) -> Graph:
        if fmt == "g6":
            lines = [line for line in data.splitlines() if line.strip()]
            if not lines:
                raise GraphFormatError("Empty graph6 input")
            return parse_graph6(lines[0])
        return parse_edge_list(data)

    def analyze(self, data: bytes, fmt: str = "el", as_json: bool = False) -> CommandResult:
        try:
            g = self.parse(data, fmt)
            result = self.service.analyze(g)
        except (GraphFormatError, OracleLimitExceeded, ValueError) as e:
            return _usage_error(e)
        except (ClassificationError, TheoremViolation) as e:
            logger.error(f"Structure theorem failed on input graph: {e}")
            return CommandResult(f"mismatch: {e}", EXIT_MISMATCH)

        output = result.model_dump_json(indent=2) if as_json else render_analysis(result)
        return CommandResult(output, EXIT_MISMATCH if result.unexpected_mismatches else EXIT_OK)


class VerificationController:
    def __init__(self, service: Optional[VerificationService] = None):
        self.service = service or VerificationService()

    def verify(self, config: VerifyConfig) -> CommandResult:
        try:
            summary = self.service.verify(config)
        except (ValidationError, RecipeError, OracleLimitExceeded) as e:
            return _usage_error(e)
        return _summary_result(summary, config.format == OutputFormat.JSON)

    def enumerate(self, lines: Iterable[str], max_n: int, as_json: bool = False) -> CommandResult:
        try:
            summary = self.service.enumerate_stream(lines, max_n)
        except (ValidationError, OracleLimitExceeded) as e:
            return _usage_error(e)
        return _summary_result(summary, as_json)


class SamplingController:
    def __init__(self, service: Optional[SamplingService] = None):
        self.service = service or SamplingService()

    def fraction(self, n_list: Sequence[int], p: float, trials: int, seed: int) -> CommandResult:
        try:
            rows = self.service.fraction_rows(n_list, p, trials, seed)
        except (ValidationError, OracleLimitExceeded) as e:
            return _usage_error(e)
        lines = ["n,p,trials,fraction"]
        lines.extend(f"{row.n},{row.p},{row.trials},{row.fraction}" for row in rows)
        return CommandResult("\n".join(lines), EXIT_OK)


class GenerationController:
    def generate(self, kind: str, max_n: int, count: int, seed: int, out_dir: str) -> CommandResult:
        try:
            tag = FamilyTag(kind)
            written = GenerationService(CorpusRepository(out_dir)).generate(tag, max_n, count, seed)
        except (ValueError, RecipeError, ValidationError, ClassificationError, OSError) as e:
            return _usage_error(e)
        return CommandResult("\n".join(written), EXIT_OK)
