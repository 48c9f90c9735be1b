import logging
import sys
from typing import List, Optional

import click

from config import CYCLE_CAP, EXIT_USAGE, LOG_LEVEL
from controller import (
    AnalysisController,
    CommandResult,
    GenerationController,
    SamplingController,
    VerificationController,
)
from models import GENERATED_FAMILIES, FamilyTag, OutputFormat, VerifyConfig
from service import AnalysisService

logger = logging.getLogger(__name__)

FAMILY_NAMES = [family.value for family in GENERATED_FAMILIES]


def _emit(result: CommandResult, output: Optional[str] = None) -> None:
    if output and result.exit_code != EXIT_USAGE:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(result.output + "\n")
        logger.info(f"Wrote {output}")
    else:
        click.echo(result.output, err=result.exit_code == EXIT_USAGE)
    sys.exit(result.exit_code)


def _parse_families(value: str) -> List[FamilyTag]:
    if value.strip().lower() == "all":
        return list(GENERATED_FAMILIES)
    try:
        return [FamilyTag(name.strip()) for name in value.split(",") if name.strip()]
    except ValueError as e:
        raise click.BadParameter(f"{e}; choose from {', '.join(FAMILY_NAMES)} or 'all'")


def _parse_orders(value: str) -> List[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected a comma-separated list of integers, got {value!r}")


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress at INFO level")
def main(verbose):
    logging.basicConfig(
        level=logging.INFO if verbose else LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


@main.command()
@click.argument("source", type=click.File("rb"), default="-")
@click.option("--format", "fmt", type=click.Choice(["el", "g6"]), default="el", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON report")
@click.option("--strict", is_flag=True, help="Fail instead of skipping an oracle beyond its size limit")
@click.option("--no-oracle", is_flag=True, help="Report the closed form only")
@click.option("--cap", default=CYCLE_CAP, show_default=True, help="Cycle enumeration cap")
def analyze(source, fmt, as_json, strict, no_oracle, cap):
    """Classify a graph and compare closed-form values against the oracle."""
    service = AnalysisService(strict=strict, use_oracle=not no_oracle, cap=cap)
    _emit(AnalysisController(service).analyze(source.read(), fmt, as_json))


@main.command()
@click.option("--families", default="all", show_default=True, help="Comma-separated family tags or 'all'")
@click.option("--count", default=100, show_default=True, help="Instances per family")
@click.option("--max-n", default=20, show_default=True, help="Order budget per instance")
@click.option("--seed", default=0, show_default=True, type=click.IntRange(0, 2**64 - 1))
@click.option("--workers", default=1, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write the summary here")
def verify(families, count, max_n, seed, workers, as_json, output):
    """Generate instances per family and check every statement against the oracles."""
    config = VerifyConfig(
        families=_parse_families(families),
        count=count,
        max_n=max_n,
        seed=seed,
        workers=workers,
        output=output,
        format=OutputFormat.JSON if as_json else OutputFormat.TEXT,
    )
    _emit(VerificationController().verify(config), config.output)


@main.command()
@click.argument("kind", type=click.Choice(FAMILY_NAMES))
@click.option("--max-n", default=20, show_default=True)
@click.option("--count", default=1, show_default=True)
@click.option("--seed", default=0, show_default=True, type=click.IntRange(0, 2**64 - 1))
@click.option("--out-dir", default=".", show_default=True, type=click.Path(file_okay=False))
def gen(kind, max_n, count, seed, out_dir):
    """Write generated instances as edge lists with recipe sidecars."""
    _emit(GenerationController().generate(kind, max_n, count, seed, out_dir))


@main.command("enumerate")
@click.argument("source", type=click.File("r"), default="-")
@click.option("--max-n", default=8, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def enumerate_graphs(source, max_n, as_json):
    """Check every in-scope graph of a graph6 stream."""
    _emit(VerificationController().enumerate(source, max_n, as_json))


@main.command("bicritical-fraction")
@click.option("--n", "orders", required=True, help="Comma-separated orders")
@click.option("--p", default=0.5, show_default=True)
@click.option("--trials", default=100, show_default=True)
@click.option("--seed", default=0, show_default=True, type=click.IntRange(0, 2**64 - 1))
def bicritical_fraction(orders, p, trials, seed):
    """CSV of the fraction of G(n, p) samples that are 2-bicritical."""
    _emit(SamplingController().fraction(_parse_orders(orders), p, trials, seed))


if __name__ == "__main__":
    main()
