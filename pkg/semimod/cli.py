"""
Command line interface of semimod.

Example:
    ```
    semimod dual 5 7 0 9 6 8 --check
    semimod census --all --max-sum 16 --format tsv
    ```

Payloads go to stdout, diagnostics to stderr. Invalid input exits with 2,
a failed consistency check with 3 and a census mismatch with 4.
"""

from typing import Optional, Sequence, Tuple

import click

from semimod.algebra.selfdual import parity_invariant_check
from semimod.algebra.semigroup import NumericalSemigroup
from semimod.config import load_config_from_json
from semimod.constants import MIN_SEMIGROUP_SUM, OUTPUT_FORMATS
from semimod.exceptions import (
    CensusMismatchError,
    ConsistencyError,
    InvalidMatrixError,
    OracleMismatchError,
    SemimodInputError,
)
from semimod.helpers.logger import Logger
from semimod.pipelines.census import CensusPipeline, CensusPipelineInput
from semimod.pipelines.pipeline_context import PipelineContext
from semimod.responses import (
    OutputEnvelope,
    ResponseSerializer,
    census_response,
    decode_matrix_response,
    dual_response,
    gaps_response,
    lean_response,
    matrix_response,
    orbit_response,
    path_response,
    resolution_response,
    syzygy_response,
)
from semimod.schemas.config import Config

EXIT_INPUT_ERROR = 2
EXIT_CONSISTENCY_ERROR = 3
EXIT_CENSUS_MISMATCH = 4

# lets negative generators like -3 through as arguments
GENERATOR_ARGS = {"ignore_unknown_options": True}


class SemimodGroup(click.Group):
    """Maps the semimod exceptions to exit codes."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except CensusMismatchError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_CENSUS_MISMATCH)
        except ConsistencyError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_CONSISTENCY_ERROR)
        except SemimodInputError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_INPUT_ERROR)


def format_option(command):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(OUTPUT_FORMATS),
        default=None,
        help="Output format, defaults to output_format of the config.",
    )(command)


def check_option(command):
    return click.option(
        "--check/--no-check",
        default=None,
        help="Cross-check the closed formulas against the brute-force oracles.",
    )(command)


def _config(ctx: click.Context) -> Config:
    return ctx.obj["config"]


def _logger(ctx: click.Context) -> Logger:
    return ctx.obj["logger"]


def _format(ctx: click.Context, fmt: Optional[str]) -> str:
    return fmt or _config(ctx).output_format


def _check(ctx: click.Context, check: Optional[bool]) -> bool:
    return _config(ctx).oracle_check if check is None else check


def _emit(envelope: OutputEnvelope):
    click.echo(ResponseSerializer.serialize(envelope), nl=False)


def _log_input(ctx: click.Context, gamma: NumericalSemigroup, gens: Sequence[int]):
    _logger(ctx).log(f"{ctx.info_name} {gamma} generators {list(gens)}")


def _log_shift(ctx: click.Context, envelope: OutputEnvelope):
    shift = envelope.payload.get("shift")
    if "input" in envelope.payload and shift:
        _logger(ctx).log(f"Input normalized by shifting {shift}")


@click.group(cls=SemimodGroup)
@click.option("--verbose", is_flag=True, help="Log diagnostics to stderr.")
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Path of a semimod.json config file.",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool, config_path: Optional[str]):
    """Semimodules over two-generated numerical semigroups."""
    config = load_config_from_json({"verbose": verbose or None}, config_path)
    ctx.ensure_object(dict)
    ctx.obj["config"] = config
    ctx.obj["logger"] = Logger(save_logs=config.save_logs, verbose=config.verbose)


@cli.command()
@click.argument("alpha", type=int)
@click.argument("beta", type=int)
@format_option
@click.pass_context
def gaps(ctx: click.Context, alpha: int, beta: int, fmt: Optional[str]):
    """List the gaps of <ALPHA,BETA> with their coordinates."""
    gamma = NumericalSemigroup(alpha, beta)
    _logger(ctx).log(f"gaps {gamma}")
    _emit(gaps_response(gamma, _format(ctx, fmt)))


@cli.command(context_settings=GENERATOR_ARGS)
@click.argument("alpha", type=int)
@click.argument("beta", type=int)
@click.argument("gens", type=int, nargs=-1, required=True)
@format_option
@click.pass_context
def lean(ctx, alpha: int, beta: int, gens: Tuple[int, ...], fmt: Optional[str]):
    """Normalize GENS to the lean set of the semimodule they generate."""
    gamma = NumericalSemigroup(alpha, beta)
    _log_input(ctx, gamma, gens)
    envelope = lean_response(gamma, gens, _format(ctx, fmt))
    _log_shift(ctx, envelope)
    _emit(envelope)


@cli.command(context_settings=GENERATOR_ARGS)
@click.argument("alpha", type=int)
@click.argument("beta", type=int)
@click.argument("gens", type=int, nargs=-1, required=True)
@format_option
@check_option
@click.pass_context
def dual(ctx, alpha, beta, gens, fmt: Optional[str], check: Optional[bool]):
    """Dual of the semimodule generated by GENS."""
    gamma = NumericalSemigroup(alpha, beta)
    _log_input(ctx, gamma, gens)
    envelope = dual_response(gamma, gens, _format(ctx, fmt), _check(ctx, check))
    _log_shift(ctx, envelope)
    if "check" in envelope.payload:
        _logger(ctx).log("Dual formula agrees with the oracle")
    _emit(envelope)


@cli.command(context_settings=GENERATOR_ARGS)
@click.argument("alpha", type=int)
@click.argument("beta", type=int)
@click.argument("gens", type=int, nargs=-1, required=True)
@format_option
@check_option
@click.pass_context
def syzygy(ctx, alpha, beta, gens, fmt: Optional[str], check: Optional[bool]):
    """Syzygy generators J and the syzygy class of GENS."""
    gamma = NumericalSemigroup(alpha, beta)
    _log_input(ctx, gamma, gens)
    envelope = syzygy_response(gamma, gens, _format(ctx, fmt), _check(ctx, check))
    _log_shift(ctx, envelope)
    if "check" in envelope.payload:
        _logger(ctx).log("Syzygy formula agrees with the oracle and the matrix rule")
    _emit(envelope)


def _parse_row(value: str) -> Tuple[int, ...]:
    try:
        return tuple(int(entry) for entry in value.split(","))
    except ValueError as e:
        raise InvalidMatrixError(f"'{value}' is not a comma separated row") from e


@cli.command(context_settings=GENERATOR_ARGS)
@click.argument("args", type=int, nargs=-1)
@click.option("--top", default=None, help="Top row to decode, e.g. 2,1,1,1.")
@click.option("--bottom", default=None, help="Bottom row to decode, e.g. 1,2,1,3.")
@format_option
@click.pass_context
def matrix(
    ctx,
    args: Tuple[int, ...],
    top: Optional[str],
    bottom: Optional[str],
    fmt: Optional[str],
):
    """
    Two-row matrix of the class of GENS (ARGS = ALPHA BETA GENS...), or
    the lean set of the matrix given by --top and --bottom.
    """
    if top is not None or bottom is not None:
        if top is None or bottom is None or args:
            raise InvalidMatrixError(
                "Decoding needs both --top and --bottom and no positional arguments"
            )
        _logger(ctx).log(f"matrix decode ({top}),({bottom})")
        envelope = decode_matrix_response(
            _parse_row(top), _parse_row(bottom), _format(ctx, fmt)
        )
        _emit(envelope)
        return

    if len(args) < 3:
        raise SemimodInputError("matrix needs ALPHA BETA and at least one generator")
    gamma = NumericalSemigroup(args[0], args[1])
    _log_input(ctx, gamma, args[2:])
    _emit(matrix_response(gamma, args[2:], _format(ctx, fmt)))


@cli.command(context_settings=GENERATOR_ARGS)
@click.argument("alpha", type=int)
@click.argument("beta", type=int)
@click.argument("gens", type=int, nargs=-1, required=True)
@click.option("--svg", "svg_file", type=click.Path(dir_okay=False), default=None)
@format_option
@click.pass_context
def path(ctx, alpha, beta, gens, svg_file: Optional[str], fmt: Optional[str]):
    """Lattice path of the class of GENS with its turning points marked."""
    gamma = NumericalSemigroup(alpha, beta)
    _log_input(ctx, gamma, gens)
    envelope = path_response(
        gamma, gens, _format(ctx, fmt), svg_file, _config(ctx).svg_cell_size
    )
    if svg_file:
        _logger(ctx).log(f"SVG written to {svg_file}")
    _emit(envelope)


@cli.command(context_settings=GENERATOR_ARGS)
@click.argument("alpha", type=int)
@click.argument("beta", type=int)
@click.argument("gens", type=int, nargs=-1, required=True)
@click.option("--steps", type=int, default=None, help="Number of free modules.")
@format_option
@check_option
@click.pass_context
def resolution(
    ctx, alpha, beta, gens, steps: Optional[int], fmt: Optional[str], check
):
    """Generator degrees of the minimal graded free resolution."""
    gamma = NumericalSemigroup(alpha, beta)
    _log_input(ctx, gamma, gens)
    envelope = resolution_response(
        gamma,
        gens,
        _format(ctx, fmt),
        _config(ctx).resolution_steps if steps is None else steps,
        _check(ctx, check),
    )
    _emit(envelope)


@cli.command()
@click.argument("pair", type=int, nargs=-1)
@click.option("--all", "all_pairs", is_flag=True, help="Every coprime pair.")
@click.option("--max-sum", type=int, default=None, help="Bound on alpha + beta.")
@format_option
@check_option
@click.pass_context
def census(
    ctx,
    pair: Tuple[int, ...],
    all_pairs: bool,
    max_sum: Optional[int],
    fmt: Optional[str],
    check: Optional[bool],
):
    """
    Selfdual classes per generator count against the counting formulas,
    for PAIR = ALPHA BETA or with --all for every pair up to --max-sum.
    """
    config = _config(ctx)
    if all_pairs:
        if pair:
            raise SemimodInputError("census --all takes no ALPHA BETA")
        max_sum = max_sum or config.max_sum
        if max_sum < MIN_SEMIGROUP_SUM:
            raise SemimodInputError(
                f"--max-sum must be at least {MIN_SEMIGROUP_SUM}, got {max_sum}"
            )
        pipeline_input = CensusPipelineInput.up_to_sum(max_sum)
    else:
        if len(pair) != 2:
            raise SemimodInputError("census needs ALPHA BETA or --all")
        pipeline_input = CensusPipelineInput([NumericalSemigroup(*pair)])

    pipeline = CensusPipeline(
        PipelineContext(pipeline_input.semigroups, config), _logger(ctx)
    )
    report = pipeline.run(pipeline_input)

    if _check(ctx, check):
        for result in report.results:
            gamma = result.gamma
            if gamma.alpha % 2 and gamma.beta % 2 and not parity_invariant_check(gamma):
                raise OracleMismatchError(
                    "odd generator count", result.observed, "odd counts only"
                )

    _emit(census_response(report, _format(ctx, fmt)))

    if not report.matches:
        raise CensusMismatchError(report.mismatches())


@cli.command(context_settings=GENERATOR_ARGS)
@click.argument("alpha", type=int)
@click.argument("beta", type=int)
@click.argument("gens", type=int, nargs=-1, required=True)
@format_option
@click.pass_context
def orbit(ctx, alpha, beta, gens, fmt: Optional[str]):
    """Orbit of the class of GENS under syzygy and duality."""
    gamma = NumericalSemigroup(alpha, beta)
    _log_input(ctx, gamma, gens)
    _emit(orbit_response(gamma, gens, _format(ctx, fmt)))


def main():
    cli(obj={})


if __name__ == "__main__":
    main()
