import logging
import random
import time
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from bicritical import is_2bicritical
from closed_form import build_report, check_summary_identities, compare_with_oracle, predict
from config import BICRITICAL_ORACLE_LIMIT, CYCLE_CAP, ENUMERATE_MAX_N
from exceptions.exception import (
    ClassificationError,
    GraphFormatError,
    OracleLimitExceeded,
    TheoremViolation,
    ValidationError,
)
from family import classify
from generators import companion_H, random_family, random_gnp
from graph_core import Graph, bipartition, parse_graph6, to_graph6
from independence import core_corona_oracle
from matching import failing_cross_pairs, gallai_edmonds, is_matching_covered, maximum_matching
from metrics import SummaryCollector
from models import (
    AnalysisReport,
    AnalysisResult,
    EarPendantRecipe,
    FamilyClassification,
    FamilyTag,
    FractionRow,
    GallaiEdmonds,
    InstanceOutcome,
    Provenance,
    StatementResult,
    VerifyConfig,
    VerifySummary,
)
from repositories.corpus_repository import CorpusRepository
from utils.seed_utils import SeedUtils
from utils.task_utils import TaskDispatcher
from validators.config_validator import VerifyConfigValidator

logger = logging.getLogger(__name__)

COMPARED_FIELDS = ("alpha", "mu", "core", "corona", "identity_value")
CROSS_PAIR_SAMPLES = 20


def _render(value) -> Optional[str]:
    if value is None:
        return None
    if isinstance(value, frozenset):
        return str(sorted(value))
    if isinstance(value, GallaiEdmonds):
        return f"D={sorted(value.D)} A={sorted(value.A)} C={sorted(value.C)}"
    return str(value)


class AnalysisService:
    def __init__(self, strict: bool = False, use_oracle: bool = True, cap: int = CYCLE_CAP):
        self.strict = strict
        self.use_oracle = use_oracle
        self.cap = cap

    @staticmethod
    def oracle_report(g: Graph, cls: FamilyClassification) -> AnalysisReport:
        profile = core_corona_oracle(g)
        mu = maximum_matching(g).size
        return build_report(
            cls.tag,
            g.n,
            profile.alpha,
            mu,
            profile.core,
            profile.corona,
            g.neighborhood(profile.core),
            gallai_edmonds(g),
            Provenance.ORACLE,
            classification=cls,
        )

    def _classify(self, g: Graph, warnings: List[str]) -> Tuple[FamilyClassification, bool]:
        try:
            return classify(g, cap=self.cap), True
        except OracleLimitExceeded as e:
            if self.strict:
                raise
            message = f"{e}; classifying without the bicriticality check"
            logger.warning(message)
            warnings.append(message)
            return classify(g, assume_bicritical=True, cap=self.cap), False

    def analyze(self, g: Graph) -> AnalysisResult:
        warnings: List[str] = []
        cls, bicriticality_checked = self._classify(g, warnings)
        predicted = None if cls.tag == FamilyTag.OUT_OF_SCOPE else predict(g, cls)

        oracle = None
        if self.use_oracle:
            try:
                oracle = self.oracle_report(g, cls)
            except OracleLimitExceeded as e:
                if self.strict:
                    raise
                message = f"{e}; reporting the closed form only"
                logger.warning(message)
                warnings.append(message)

        if predicted is not None and oracle is not None:
            mismatches = compare_with_oracle(predicted, oracle)
            if mismatches:
                logger.error(f"Closed form disagrees with the oracle on {', '.join(mismatches)}")
            oracle = oracle.model_copy(update={"mismatches": mismatches})

        checks = []
        if predicted is not None:
            checks = check_summary_identities(oracle or predicted)
        return AnalysisResult(
            classification=cls,
            bicriticality_checked=bicriticality_checked,
            predicted=predicted,
            oracle=oracle,
            checks=checks,
            warnings=warnings,
        )


class VerificationService:
    def __init__(self, analysis: Optional[AnalysisService] = None):
        self.analysis = analysis or AnalysisService(strict=True)

    def _compare(self, predicted: AnalysisReport, oracle: AnalysisReport) -> List[StatementResult]:
        fields = list(COMPARED_FIELDS) + (["ge"] if predicted.ge is not None else [])
        results = []
        for field in fields:
            expected, observed = getattr(predicted, field), getattr(oracle, field)
            results.append(StatementResult(
                name=field,
                passed=expected == observed,
                predicted=_render(expected),
                observed=_render(observed),
            ))
        return results

    @staticmethod
    def _companion_statements(g: Graph, cls: FamilyClassification, seed: int) -> List[StatementResult]:
        try:
            h = companion_H(g, cls)
        except TheoremViolation as e:
            logger.error(str(e))
            return [StatementResult(name="companion-matching-covered", passed=False, observed=str(e))]

        core = h.nx.subgraph([v for v in h.vertices if v not in cls.X])
        sides = bipartition(core)
        covered = sides is not None and is_matching_covered(core)
        results = [StatementResult(name="companion-matching-covered", passed=covered, observed=str(covered))]
        if sides is not None:
            failures = failing_cross_pairs(core, sides[0], sides[1], CROSS_PAIR_SAMPLES, random.Random(seed))
            results.append(StatementResult(
                name="hetyei-cross-pairs",
                passed=not failures,
                predicted="[]",
                observed=str(failures),
            ))
        return results

    def check_instance(
        self,
        g: Graph,
        expected: Optional[FamilyTag],
        family: str,
        index: int,
        seed: int,
        recipe: Optional[EarPendantRecipe] = None,
        cls: Optional[FamilyClassification] = None,
    ) -> InstanceOutcome:
        results: List[StatementResult] = []
        if cls is None:
            try:
                # generated instances are 2-bicritical by construction
                cls = classify(g, assume_bicritical=recipe is not None)
            except ClassificationError as e:
                logger.error(f"Instance {index} of {family} failed classification: {e}")
                results.append(StatementResult(name="classification", passed=False, observed=str(e)))
                return self._outcome(g, family, index, seed, recipe, results)

        if expected is not None:
            results.append(StatementResult(
                name="classification",
                passed=cls.tag == expected,
                predicted=expected.value,
                observed=cls.tag.value,
            ))

        if cls.tag != FamilyTag.OUT_OF_SCOPE and (expected is None or cls.tag == expected):
            predicted = predict(g, cls)
            try:
                oracle = self.analysis.oracle_report(g, cls)
            except TheoremViolation as e:
                logger.error(f"Instance {index} of {family}: {e}")
                results.append(StatementResult(name="gallai-edmonds-structure", passed=False, observed=str(e)))
                return self._outcome(g, family, index, seed, recipe, results)
            results.extend(self._compare(predicted, oracle))
            results.extend(
                StatementResult(name=check.name, passed=check.passed, expected_divergent=check.expected_divergent,
                                observed=check.detail)
                for check in check_summary_identities(oracle)
            )
            if cls.tag in (FamilyTag.EVEN_LINKED, FamilyTag.ODD_LINKED):
                results.extend(self._companion_statements(g, cls, seed))

        return self._outcome(g, family, index, seed, recipe, results)

    @staticmethod
    def _outcome(g, family, index, seed, recipe, results) -> InstanceOutcome:
        return InstanceOutcome(
            family=family,
            index=index,
            seed=seed,
            n=g.n,
            recipe=recipe,
            graph6=to_graph6(g),
            results=results,
        )

    def verify_instance(self, kind: str, max_n: int, master_seed: int, index: int) -> InstanceOutcome:
        tag = FamilyTag(kind)
        seed = SeedUtils.sub_seed(master_seed, index)
        g, recipe = random_family(tag, max_n, seed)
        return self.check_instance(g, tag, tag.value, index, seed, recipe=recipe)

    def verify(self, config: VerifyConfig) -> VerifySummary:
        VerifyConfigValidator(config).validate()
        started = time.perf_counter()
        logger.info(
            f"Verifying {config.count} instances of {[f.value for f in config.families]} "
            f"with max_n={config.max_n}, seed={config.seed}, workers={config.workers}"
        )

        items = [
            (family.value, config.max_n, config.seed, position * config.count + i)
            for position, family in enumerate(config.families)
            for i in range(config.count)
        ]
        outcomes = TaskDispatcher(config.workers).map(items)

        collector = SummaryCollector()
        for outcome in sorted(outcomes, key=lambda o: o.index):
            collector.record(outcome)
        summary = collector.summary(elapsed_seconds=time.perf_counter() - started)
        logger.info(f"Checked {summary.checked} instances, {summary.unexpected_mismatches} unexpected mismatches")
        return summary

    def enumerate_stream(self, lines: Iterable[str], max_n: int) -> VerifySummary:
        if not 1 <= max_n <= ENUMERATE_MAX_N:
            raise ValidationError(f"max_n must lie in 1..{ENUMERATE_MAX_N}, got {max_n}")
        started = time.perf_counter()
        collector = SummaryCollector()
        parsed = 0

        for number, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                g = parse_graph6(line)
            except GraphFormatError as e:
                logger.warning(f"Skipping line {number + 1}: {e}")
                collector.parse_error()
                continue
            parsed += 1
            if g.n > max_n:
                logger.warning(f"Skipping line {number + 1}: {g.n} vertices exceeds max_n={max_n}")
                continue
            if g.n == 0 or not nx.is_connected(g.nx):
                continue

            cls = classify(g)
            if cls.tag == FamilyTag.OUT_OF_SCOPE:
                continue
            collector.record(self.check_instance(g, None, cls.tag.value, number, seed=number, cls=cls))

        if parsed == 0:
            raise ValidationError("No graph6 line in the stream could be parsed")
        return collector.summary(elapsed_seconds=time.perf_counter() - started)


class SamplingService:
    @staticmethod
    def fraction_samples(n: int, p: float, trials: int, seed: int) -> List[Tuple[Graph, bool]]:
        """Every sampled graph with its verdict; sample t of order n uses sub-seed (seed, n, t)."""
        if trials < 1:
            raise ValidationError(f"trials must be at least 1, got {trials}")
        if n > BICRITICAL_ORACLE_LIMIT:
            raise OracleLimitExceeded(f"Bicriticality oracle limited to {BICRITICAL_ORACLE_LIMIT} vertices, got {n}")
        samples = []
        for t in range(trials):
            g = random_gnp(n, p, SeedUtils.sub_seed_path(seed, n, t))
            samples.append((g, is_2bicritical(g).is_bicritical))
        return samples

    def fraction_rows(self, n_list: Sequence[int], p: float, trials: int, seed: int) -> List[FractionRow]:
        rows = []
        for n in n_list:
            passed = sum(verdict for _, verdict in self.fraction_samples(n, p, trials, seed))
            rows.append(FractionRow(n=n, p=p, trials=trials, passed=passed))
            logger.info(f"n={n}: {passed}/{trials} sampled graphs are 2-bicritical")
        return rows


class GenerationService:
    def __init__(self, repository: CorpusRepository):
        self.repository = repository

    def generate(self, kind: FamilyTag, max_n: int, count: int, seed: int) -> List[str]:
        if count < 1:
            raise ValidationError(f"count must be at least 1, got {count}")
        written = []
        for i in range(count):
            sub_seed = SeedUtils.sub_seed(seed, i)
            g, recipe = random_family(kind, max_n, sub_seed)
            written.append(self.repository.save(kind, i, sub_seed, g, recipe))
        logger.info(f"Generated {count} {kind.value} instances into {self.repository.out_dir}")
        return written
