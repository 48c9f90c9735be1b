import os

DEFAULT_MIS_LIMIT = 32
DEFAULT_BICRITICAL_LIMIT = 26
HARD_CAP = min(int(os.environ.get('ODDBIC_HARD_CAP', 64)), 64)


def _limit(name: str, default: int) -> int:
    value = os.environ.get(name) or os.environ.get('ODDBIC_ORACLE_LIMIT')
    return min(int(value), HARD_CAP) if value else default


MIS_ORACLE_LIMIT = _limit('ODDBIC_MIS_LIMIT', DEFAULT_MIS_LIMIT)
BICRITICAL_ORACLE_LIMIT = _limit('ODDBIC_BICRITICAL_LIMIT', DEFAULT_BICRITICAL_LIMIT)
MATCHING_ORACLE_LIMIT = 16
ENUMERATE_MAX_N = 11

CYCLE_CAP = int(os.environ.get('ODDBIC_CYCLE_CAP', 1_000_000))

LOG_LEVEL = os.environ.get('ODDBIC_LOG_LEVEL', 'WARNING')

CELERY_BROKER_URL = os.environ.get('CELERY_BROKER_URL', 'memory://')
CELERY_RESULT_BACKEND = os.environ.get('CELERY_RESULT_BACKEND', 'cache+memory://')
CELERY_TASK_ALWAYS_EAGER = os.environ.get('ODDBIC_CELERY_EAGER', '1').lower() not in ('0', 'false', 'no')
VERIFICATION_QUEUE = os.environ.get('ODDBIC_QUEUE', 'verification')

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
