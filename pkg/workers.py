import click
import socket
from celery_app import app
from config import VERIFICATION_QUEUE


class Worker:

    @staticmethod
    def start_worker(concurrency: int, loglevel: str):
        hostname = socket.gethostname()
        worker_name = f'verifier@{hostname}'

        app.conf.worker_proc_alive_timeout = 60
        app.conf.worker_name = worker_name
        worker = app.Worker(
            hostname=worker_name,
            queues=[VERIFICATION_QUEUE],
            concurrency=concurrency,
            loglevel=loglevel,
            prefetch_multiplier=1,
            max_tasks_per_child=500,
            task_time_limit=600,
            task_soft_time_limit=540
        )

        worker.start()


@click.command()
@click.option('--concurrency', default=1, show_default=True, help='Worker processes')
@click.option('--loglevel', default='INFO', show_default=True)
def main(concurrency, loglevel):
    Worker.start_worker(concurrency, loglevel)


if __name__ == '__main__':
    main()
