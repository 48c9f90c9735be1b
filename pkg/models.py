from enum import Enum
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer

VertexSet = Annotated[
    frozenset[int],
    PlainSerializer(lambda members: sorted(members), return_type=List[int]),
]


class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True)


class FamilyTag(str, Enum):
    ONE_ODD_CYCLE = "OneOddCycle"
    FUSED_ODD = "FusedOdd"
    EVEN_LINKED = "EvenLinked"
    ODD_LINKED = "OddLinked"
    DISCONNECTED_PAIR = "DisconnectedPair"
    OUT_OF_SCOPE = "OutOfScope"


GENERATED_FAMILIES = [
    FamilyTag.ONE_ODD_CYCLE,
    FamilyTag.FUSED_ODD,
    FamilyTag.EVEN_LINKED,
    FamilyTag.ODD_LINKED,
    FamilyTag.DISCONNECTED_PAIR,
]

MINIMUM_ORDER = {
    FamilyTag.ONE_ODD_CYCLE: 3,
    FamilyTag.FUSED_ODD: 5,
    FamilyTag.ODD_LINKED: 6,
    FamilyTag.EVEN_LINKED: 7,
    FamilyTag.DISCONNECTED_PAIR: 6,
}


class IndependenceMethod(str, Enum):
    ORACLE = "Oracle"
    POLY_OCT2 = "PolyOct2"


class Provenance(str, Enum):
    CLOSED_FORM = "ClosedForm"
    ORACLE = "Oracle"


class IdentityClass(str, Enum):
    TWO_ALPHA = "TwoAlpha"
    TWO_ALPHA_PLUS_1 = "TwoAlphaPlus1"
    TWO_ALPHA_PLUS_2 = "TwoAlphaPlus2"

    @classmethod
    def from_value(cls, value: int) -> Optional["IdentityClass"]:
        members = [cls.TWO_ALPHA, cls.TWO_ALPHA_PLUS_1, cls.TWO_ALPHA_PLUS_2]
        return members[value] if 0 <= value < len(members) else None

    @property
    def label(self) -> str:
        return {"TwoAlpha": "2α", "TwoAlphaPlus1": "2α+1", "TwoAlphaPlus2": "2α+2"}[self.value]


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class Matching(FrozenModel):
    pairs: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_pairs(cls, pairs) -> "Matching":
        return cls(pairs=tuple(sorted(tuple(sorted(pair)) for pair in pairs)))

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for pair in self.pairs for v in pair)

    def partner(self, v: int) -> int:
        for a, b in self.pairs:
            if a == v:
                return b
            if b == v:
                return a
        return v


class GallaiEdmonds(FrozenModel):
    D: VertexSet
    A: VertexSet
    C: VertexSet


class IndependenceProfile(FrozenModel):
    alpha: int
    core: VertexSet
    corona: VertexSet
    mis_count: Optional[int] = None
    method: IndependenceMethod


class BicriticalVerdict(FrozenModel):
    is_bicritical: bool
    witness: Optional[VertexSet] = None


class CycleList(FrozenModel):
    cycles: List[Tuple[int, ...]]
    odd_count: int
    truncated: bool = False

    @property
    def odd_cycles(self) -> List[Tuple[int, ...]]:
        return [cycle for cycle in self.cycles if len(cycle) % 2 == 1]


class FamilyClassification(FrozenModel):
    tag: FamilyTag
    C: Tuple[int, ...] = ()
    C_prime: Optional[Tuple[int, ...]] = None
    shared: VertexSet = frozenset()
    x: Optional[int] = None
    y: Optional[int] = None
    X: VertexSet = frozenset()
    A: VertexSet = frozenset()
    B: VertexSet = frozenset()
    reason: Optional[str] = None

    @property
    def cycle_vertices(self) -> frozenset[int]:
        return frozenset(self.C) | frozenset(self.C_prime or ())


class IdentityCheck(FrozenModel):
    name: str
    passed: bool
    expected_divergent: bool = False
    detail: Optional[str] = None


class AnalysisReport(FrozenModel):
    family: FamilyTag
    n: int
    alpha: int
    mu: int
    core: VertexSet
    corona: VertexSet
    core_neighborhood: VertexSet
    ge: Optional[GallaiEdmonds] = None
    identity_class: Optional[IdentityClass] = None
    identity_value: int
    partition_holds: bool
    provenance: Provenance
    mismatches: List[str] = Field(default_factory=list)
    classification: Optional[FamilyClassification] = None


class OddCycleBase(FrozenModel):
    kind: Literal["OddCycle"] = "OddCycle"
    len: int


class OddK4HomeomorphBase(FrozenModel):
    kind: Literal["OddK4Homeomorph"] = "OddK4Homeomorph"
    path_lens: Tuple[int, int, int, int, int, int]


class EarStep(FrozenModel):
    kind: Literal["Ear"] = "Ear"
    u: int
    v: int
    internal_len: int


class PendantStep(FrozenModel):
    kind: Literal["Pendant"] = "Pendant"
    cycle_len: int
    path_len: int
    attach: int


RecipeBase = Annotated[Union[OddCycleBase, OddK4HomeomorphBase], Field(discriminator="kind")]
RecipeStep = Annotated[Union[EarStep, PendantStep], Field(discriminator="kind")]


class EarPendantRecipe(FrozenModel):
    base: RecipeBase
    steps: List[RecipeStep] = Field(default_factory=list)
    detached: List[OddCycleBase] = Field(default_factory=list)


class VerifyConfig(BaseModel):
    families: List[FamilyTag] = Field(default_factory=lambda: list(GENERATED_FAMILIES))
    count: int = Field(default=100, description="Instances per family")
    max_n: int = Field(default=20, description="Order budget per instance")
    seed: int = Field(default=0, ge=0, lt=2**64, description="Unsigned 64-bit master seed")
    workers: int = Field(default=1, description="Concurrency degree")
    output: Optional[str] = Field(default=None, description="Output path, stdout when absent")
    format: OutputFormat = OutputFormat.TEXT


class StatementResult(FrozenModel):
    name: str
    passed: bool
    expected_divergent: bool = False
    predicted: Optional[str] = None
    observed: Optional[str] = None


class InstanceOutcome(FrozenModel):
    family: str
    index: int
    seed: int
    n: int
    recipe: Optional[EarPendantRecipe] = None
    graph6: Optional[str] = None
    results: List[StatementResult] = Field(default_factory=list)

    @property
    def unexpected_failures(self) -> List[StatementResult]:
        return [r for r in self.results if not r.passed and not r.expected_divergent]

    @property
    def divergences(self) -> List[StatementResult]:
        return [r for r in self.results if not r.passed and r.expected_divergent]


class FamilyTally(BaseModel):
    checked: int = 0
    theorem_matches: int = 0
    mismatches: int = 0
    expected_divergent: int = 0


class StatementTally(BaseModel):
    checked: int = 0
    passed: int = 0
    failed: int = 0
    expected_divergent: bool = False


class MismatchRecord(FrozenModel):
    family: str
    index: int
    seed: int
    statement: str
    predicted: Optional[str] = None
    oracle: Optional[str] = None
    recipe: Optional[EarPendantRecipe] = None
    graph6: Optional[str] = None


class VerifySummary(BaseModel):
    families: Dict[str, FamilyTally] = Field(default_factory=dict)
    statements: Dict[str, StatementTally] = Field(default_factory=dict)
    mismatch_records: List[MismatchRecord] = Field(default_factory=list)
    parse_errors: int = 0
    elapsed_seconds: float = 0.0

    @property
    def checked(self) -> int:
        return sum(t.checked for t in self.families.values())

    @property
    def unexpected_mismatches(self) -> int:
        return len(self.mismatch_records)

    @property
    def divergence_count(self) -> int:
        return sum(t.expected_divergent for t in self.families.values())

    def content(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude={"elapsed_seconds"})


class AnalysisResult(BaseModel):
    classification: FamilyClassification
    bicriticality_checked: bool = True
    predicted: Optional[AnalysisReport] = None
    oracle: Optional[AnalysisReport] = None
    checks: List[IdentityCheck] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)

    @property
    def unexpected_mismatches(self) -> List[str]:
        names = list(self.oracle.mismatches) if self.oracle is not None else []
        names.extend(c.name for c in self.checks if not c.passed and not c.expected_divergent)
        return names


class FractionRow(FrozenModel):
    n: int
    p: float
    trials: int
    passed: int

    @property
    def fraction(self) -> float:
        return self.passed / self.trials
