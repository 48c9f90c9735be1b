import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence, Tuple

from config import CELERY_TASK_ALWAYS_EAGER
from models import InstanceOutcome

logger = logging.getLogger(__name__)

WorkItem = Tuple[str, int, int, int]


class TaskDispatcher:
    """Runs verification work items inline, on a local process pool, or on the Celery worker pool."""

    def __init__(self, workers: int = 1, eager: bool = CELERY_TASK_ALWAYS_EAGER):
        self.workers = workers
        self.eager = eager

    def map(self, items: Sequence[WorkItem]) -> List[InstanceOutcome]:
        from tasks import run_instance

        if self.workers == 1:
            return [run_instance(*item) for item in items]

        if self.eager:
            logger.info(f"Dispatching {len(items)} work items to {self.workers} local processes")
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                return list(pool.map(run_instance, *zip(*items))) if items else []

        return self._dispatch_celery(items)

    @staticmethod
    def _dispatch_celery(items: Sequence[WorkItem]) -> List[InstanceOutcome]:
        from celery import group

        from tasks import verify_instance

        logger.info(f"Dispatching {len(items)} work items to the Celery worker pool")
        job = group(verify_instance.s(*item) for item in items).apply_async()
        return [InstanceOutcome.model_validate(payload) for payload in job.get()]
