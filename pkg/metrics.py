import logging
from collections import defaultdict
from typing import Dict, List

from models import FamilyTally, InstanceOutcome, MismatchRecord, StatementTally, VerifySummary

logger = logging.getLogger(__name__)


class SummaryCollector:
    def __init__(self):
        self._families: Dict[str, FamilyTally] = defaultdict(FamilyTally)
        self._statements: Dict[str, StatementTally] = defaultdict(StatementTally)
        self._records: List[MismatchRecord] = []
        self._parse_errors = 0

    def parse_error(self) -> None:
        self._parse_errors += 1

    def record(self, outcome: InstanceOutcome) -> None:
        tally = self._families[outcome.family]
        tally.checked += 1
        if outcome.unexpected_failures:
            tally.mismatches += 1
        else:
            tally.theorem_matches += 1
        if outcome.divergences:
            tally.expected_divergent += 1

        for result in outcome.results:
            self._count_statement(result.name, result.passed, result.expected_divergent)
            if result.passed or result.expected_divergent:
                continue
            logger.warning(
                f"Mismatch on {outcome.family} #{outcome.index} (seed {outcome.seed}): {result.name} "
                f"predicted {result.predicted}, observed {result.observed}"
            )
            self._records.append(MismatchRecord(
                family=outcome.family,
                index=outcome.index,
                seed=outcome.seed,
                statement=result.name,
                predicted=result.predicted,
                oracle=result.observed,
                recipe=outcome.recipe,
                graph6=outcome.graph6,
            ))

    def _count_statement(self, name: str, passed: bool, expected_divergent: bool) -> None:
        stats = self._statements[name]
        stats.checked += 1
        if passed:
            stats.passed += 1
        else:
            stats.failed += 1
        stats.expected_divergent = stats.expected_divergent or expected_divergent

    def summary(self, elapsed_seconds: float = 0.0) -> VerifySummary:
        return VerifySummary(
            families=dict(sorted(self._families.items())),
            statements=dict(sorted(self._statements.items())),
            mismatch_records=sorted(self._records, key=lambda r: (r.index, r.statement)),
            parse_errors=self._parse_errors,
            elapsed_seconds=elapsed_seconds,
        )
