from typing import FrozenSet, NamedTuple, Protocol, Tuple, Union

from exceptions.exception import InvalidRecipeStep, ValidationError
from models import (
    MINIMUM_ORDER,
    EarStep,
    FamilyTag,
    OddCycleBase,
    OddK4HomeomorphBase,
    PendantStep,
    VerifyConfig,
)

RecipeItem = Union[OddCycleBase, OddK4HomeomorphBase, EarStep, PendantStep]


class ReplayState(NamedTuple):
    n: int
    edges: FrozenSet[Tuple[int, int]]


class StepPolicy(Protocol):
    def validate(self, item: RecipeItem, state: ReplayState) -> None:
        ...


class ConfigPolicy(Protocol):
    def validate(self, config: VerifyConfig) -> None:
        ...


class OddCyclePolicy:
    MIN_LENGTH = 3

    def validate(self, item: RecipeItem, state: ReplayState) -> None:
        if not isinstance(item, OddCycleBase):
            return
        if item.len < self.MIN_LENGTH or item.len % 2 == 0:
            raise InvalidRecipeStep(f"Odd cycle length must be odd and at least {self.MIN_LENGTH}, got {item.len}")


class OddHomeomorphPolicy:
    def validate(self, item: RecipeItem, state: ReplayState) -> None:
        if not isinstance(item, OddK4HomeomorphBase):
            return
        even = [length for length in item.path_lens if length < 1 or length % 2 == 0]
        if even:
            raise InvalidRecipeStep(f"K4 homeomorph paths must have odd positive length, got {list(item.path_lens)}")


class EarParityPolicy:
    def validate(self, item: RecipeItem, state: ReplayState) -> None:
        if not isinstance(item, EarStep):
            return
        if item.internal_len < 0 or item.internal_len % 2 == 1:
            raise InvalidRecipeStep(
                f"Ear must have odd length, got {item.internal_len + 1} ({item.internal_len} internal vertices)"
            )


class EarEndpointPolicy:
    def validate(self, item: RecipeItem, state: ReplayState) -> None:
        if not isinstance(item, EarStep):
            return
        missing = [w for w in (item.u, item.v) if not 0 <= w < state.n]
        if missing:
            raise InvalidRecipeStep(f"Ear endpoint {missing[0]} not in current graph of order {state.n}")
        if item.u == item.v and item.internal_len < 2:
            raise InvalidRecipeStep(f"Closed ear at {item.u} needs at least 2 internal vertices")
        if item.u != item.v and item.internal_len == 0:
            if (min(item.u, item.v), max(item.u, item.v)) in state.edges:
                raise InvalidRecipeStep(f"Chord {item.u}-{item.v} duplicates an existing edge")


class PendantCyclePolicy:
    MIN_LENGTH = 3

    def validate(self, item: RecipeItem, state: ReplayState) -> None:
        if not isinstance(item, PendantStep):
            return
        if item.cycle_len < self.MIN_LENGTH or item.cycle_len % 2 == 0:
            raise InvalidRecipeStep(f"Pendant cycle length must be odd and at least 3, got {item.cycle_len}")


class PendantPathPolicy:
    def validate(self, item: RecipeItem, state: ReplayState) -> None:
        if not isinstance(item, PendantStep):
            return
        if item.path_len < 1:
            raise InvalidRecipeStep(f"Pendant path must have positive length, got {item.path_len}")
        if not 0 <= item.attach < state.n:
            raise InvalidRecipeStep(f"Pendant attach vertex {item.attach} not in current graph of order {state.n}")


class CountPolicy:
    def validate(self, config: VerifyConfig) -> None:
        if config.count < 1:
            raise ValidationError(f"count must be at least 1, got {config.count}")


class WorkersPolicy:
    def validate(self, config: VerifyConfig) -> None:
        if config.workers < 1:
            raise ValidationError(f"workers must be at least 1, got {config.workers}")


class FamiliesPolicy:
    def validate(self, config: VerifyConfig) -> None:
        if not config.families:
            raise ValidationError("At least one family is required")
        if FamilyTag.OUT_OF_SCOPE in config.families:
            raise ValidationError("OutOfScope is not a generatable family")


class BudgetPolicy:
    def validate(self, config: VerifyConfig) -> None:
        for family in config.families:
            minimum = MINIMUM_ORDER.get(family)
            if minimum is not None and config.max_n < minimum:
                raise ValidationError(f"max_n {config.max_n} below the minimum order {minimum} of {family.value}")
