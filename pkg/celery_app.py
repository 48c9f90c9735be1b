from celery import Celery
from config import CELERY_BROKER_URL, CELERY_RESULT_BACKEND, CELERY_TASK_ALWAYS_EAGER, VERIFICATION_QUEUE

import logging

logger = logging.getLogger(__name__)

app = Celery(
    'oddbic',
    broker=CELERY_BROKER_URL,
    backend=CELERY_RESULT_BACKEND,
    include=['tasks']
)

app.conf.update(
    task_serializer='json',
    accept_content=['json'],
    result_serializer='json',
    timezone='UTC',
    enable_utc=True,
    task_acks_late=True,
    task_reject_on_worker_lost=True,
    task_always_eager=CELERY_TASK_ALWAYS_EAGER,
    task_default_queue=VERIFICATION_QUEUE,
    task_routes={
        'tasks.verify_instance': {'queue': VERIFICATION_QUEUE},
    },
    worker_send_task_events=True,
    task_track_started=True,
    worker_log_color=True,
)
