from typing import List

from exceptions.exception import InvalidRecipeStep
from policy import (
    EarEndpointPolicy,
    EarParityPolicy,
    OddCyclePolicy,
    OddHomeomorphPolicy,
    PendantCyclePolicy,
    PendantPathPolicy,
    RecipeItem,
    ReplayState,
    StepPolicy,
)


class StepValidator:
    def __init__(self, item: RecipeItem, state: ReplayState):
        self.item = item
        self.state = state
        self.policies: List[StepPolicy] = [
            OddCyclePolicy(),
            OddHomeomorphPolicy(),
            EarParityPolicy(),
            EarEndpointPolicy(),
            PendantCyclePolicy(),
            PendantPathPolicy(),
        ]

    def validate(self) -> None:
        errors = []

        for policy in self.policies:
            try:
                policy.validate(self.item, self.state)
            except InvalidRecipeStep as e:
                errors.append(str(e))

        if errors:
            error_message = "; ".join(errors)
            raise InvalidRecipeStep(f"Invalid {self.item.kind} step: {error_message}")
