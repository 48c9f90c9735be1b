import logging
from typing import Any, Dict

from celery_app import app
from models import InstanceOutcome
from service import VerificationService

logger = logging.getLogger(__name__)


def run_instance(kind: str, max_n: int, master_seed: int, index: int) -> InstanceOutcome:
    outcome = VerificationService().verify_instance(kind, max_n, master_seed, index)
    logger.debug(f"Verified {kind} #{index}: {len(outcome.results)} statements")
    return outcome


@app.task(bind=True, acks_late=True)
def verify_instance(self, kind: str, max_n: int, master_seed: int, index: int) -> Dict[str, Any]:
    logger.info(f"Task {self.request.id} verifying {kind} #{index}")
    return run_instance(kind, max_n, master_seed, index).model_dump(mode="json")
