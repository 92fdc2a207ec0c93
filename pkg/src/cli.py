"""Command-line interface for knotlab."""

import json
import logging
from pathlib import Path
from typing import Optional

import click

from .config import CliConfig, get_log_level, parse_k_range
from .covers.branched import branched_table
from .exceptions import KnotlabError, UsageError
from .knots.catalog import KnotCatalog, catalog_frame
from .pipeline import VerificationPipeline, invariants_report
from .twistspin.metabolizers import TwistSpinScenario

logging.basicConfig(
    level=get_log_level(), format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

USAGE_EXIT = UsageError.exit_code
FAILED_EXIT = 1


class KnotlabGroup(click.Group):
    """Maps library errors and argument errors onto the documented exit codes."""

    def invoke(self, ctx):
        """Run the command, exiting with the code of any library error."""
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = USAGE_EXIT
            raise
        except KnotlabError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(e.exit_code)


def _emit(payload, as_json: bool, human: str) -> None:
    if as_json:
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(human)


def _config(catalog_path: Optional[Path], as_json: bool, **extra) -> CliConfig:
    return CliConfig.from_env(
        catalog_path=catalog_path, output="json" if as_json else None, **extra
    )


def _parse_int(value: str, option: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{option} expects an integer, got '{value}'")


catalog_option = click.option(
    "--catalog", "catalog_path", type=click.Path(path_type=Path), default=None,
    help="Catalog JSON file (default: KNOTLAB_CATALOG or the built-in catalog).",
)
json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON.")


@click.group(cls=KnotlabGroup)
def cli():
    """Blanchfield forms, twist-spin metabolizers and branched covers."""
    pass


@cli.command()
@catalog_option
@json_option
def catalog(catalog_path: Optional[Path], as_json: bool):
    """List catalog knots with their Alexander polynomials."""
    config = _config(catalog_path, as_json)
    knots = KnotCatalog.load(config.catalog_path)
    frame = catalog_frame(knots.entries())
    _emit(
        json.loads(frame.to_json(orient="records")),
        config.output == "json",
        frame.to_string(index=False),
    )


@cli.command()
@click.argument("name")
@catalog_option
@json_option
def invariants(name: str, catalog_path: Optional[Path], as_json: bool):
    """Alexander polynomial, presentation and Blanchfield pairing of a knot."""
    config = _config(catalog_path, as_json)
    knot = KnotCatalog.load(config.catalog_path).knot(name)
    report = invariants_report(knot)

    payload = {
        "knot": report["knot"],
        "size": report["size"],
        "epsilon": report["epsilon"],
        "alexander": report["alexander"].to_json(),
        "presentation": report["presentation"].to_json(),
        "pairing": [[value.to_json() for value in row] for row in report["pairing"]],
        "hermitian": report["hermitian"],
        "well_defined": report["well_defined"],
        "nonsingular": report["nonsingular"],
    }

    def verdict(flag: bool) -> str:
        return "pass" if flag else "FAIL"

    lines = [
        f"Knot: {report['knot']} (size {report['size']}, eps {report['epsilon']:+d})",
        f"Alexander polynomial: {report['alexander']}",
        "Presentation:",
        str(report["presentation"]),
        "Blanchfield pairing:",
    ]
    if report["pairing"]:
        lines += ["[" + ", ".join(str(v) for v in row) + "]" for row in report["pairing"]]
    else:
        lines.append("[] (trivial module)")
    lines += [
        f"hermitian: {verdict(report['hermitian'])}",
        f"well-defined: {verdict(report['well_defined'])}",
        f"nonsingular: {verdict(report['nonsingular'])}",
    ]
    _emit(payload, config.output == "json", "\n".join(lines))
    if not (report["hermitian"] and report["well_defined"] and report["nonsingular"]):
        raise click.exceptions.Exit(FAILED_EXIT)


@cli.command()
@click.argument("name")
@click.option("--k", "k_text", required=True, help="Twist parameter.")
@click.option("--eps", "eps_text", default=None, help="Sign choice for odd k: +1 or -1.")
@click.option("--no-scaling", is_flag=True, help="Skip the t^n scaling sweep.")
@catalog_option
@json_option
def verify(
    name: str,
    k_text: str,
    eps_text: Optional[str],
    no_scaling: bool,
    catalog_path: Optional[Path],
    as_json: bool,
):
    """Verify the twist-spin metabolizers of NAME (+) -NAME."""
    k = _parse_int(k_text, "--k")
    eps = None
    if eps_text is not None:
        eps = _parse_int(eps_text, "--eps")
        if eps not in (1, -1):
            raise UsageError(f"--eps must be +1 or -1, got {eps_text}")
    config = _config(catalog_path, as_json, k_range=(k, k))
    knot = KnotCatalog.load(config.catalog_path).knot(name)

    report = VerificationPipeline(scaling=not no_scaling).run(TwistSpinScenario(knot, k, eps))

    lines = [f"Twist-spin verification: {report.knot}, k={report.k}"]
    for result in report.candidates:
        mark = "✓" if result.passed else "✗"
        lines.append(
            f"  {mark} [{result.tag.value}] {result.candidate.provenance}: {result.verdict.verdict}"
        )
        witness = result.verdict.to_dict().get("witness")
        if witness:
            lines.append(f"      witness: {json.dumps(witness, sort_keys=True)}")
        if result.order_check is False:
            lines.append("      order check failed")
        if result.scaling_stable is False:
            lines.append("      verdict changes under t^n scaling")
    if report.consistency is not None:
        lines.append(f"  consistency: {'pass' if report.consistency else 'FAIL'}")
    if report.epsilon_relation is not None:
        lines.append(f"  eps relation: {'pass' if report.epsilon_relation else 'FAIL'}")
    lines.append(f"  monodromy: {'pass' if report.monodromy else 'FAIL'}")
    _emit(report.to_dict(), config.output == "json", "\n".join(lines))
    if not report.passed:
        raise click.exceptions.Exit(FAILED_EXIT)


@cli.command()
@click.argument("name")
@click.option("--k", "k_text", required=True, help="Inclusive range lo..hi.")
@click.option("--workers", type=int, default=None, help="Worker processes for the sweep.")
@catalog_option
@json_option
def branched(
    name: str, k_text: str, workers: Optional[int], catalog_path: Optional[Path], as_json: bool
):
    """Homology of the cyclic branched covers of NAME over a range of k."""
    config = _config(catalog_path, as_json, k_range=parse_k_range(k_text), workers=workers)
    knot = KnotCatalog.load(config.catalog_path).knot(name)
    lo, hi = config.k_range
    ks = list(range(lo, hi + 1))

    table = branched_table(knot, ks, workers=config.workers)
    skipped = [0] if 0 in ks else []
    payload = {
        "knot": knot.label,
        "rows": json.loads(table.to_json(orient="records")),
        "skipped": skipped,
    }
    human = table.to_string(index=False) if len(table) else "(no rows)"
    if skipped:
        human += "\nnote: k=0 skipped (branched covers need k != 0)"
    _emit(payload, config.output == "json", human)


if __name__ == "__main__":
    cli()
