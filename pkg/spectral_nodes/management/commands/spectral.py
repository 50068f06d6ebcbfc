from django.core.management.base import BaseCommand, CommandError

from spectral_nodes.cli import OutputFormat, RunConfig, Subcommand, execute, exit_code
from spectral_nodes.exceptions import SpectralNodesError
from spectral_nodes.nodes import NodeFamily


class Command(BaseCommand):
    requires_system_checks = []
    help = (
        "Generate interpolation nodes and emit Lebesgue, interpolation error, "
        "differentiation matrix and Volterra collocation data as CSV or JSON."
    )

    def add_arguments(self, parser):
        parser.add_argument("subcommand", choices=[member.value for member in Subcommand])
        parser.add_argument("--family", choices=[member.value for member in NodeFamily])
        parser.add_argument("--s", type=int, help="polynomial degree; the node count is s + 1")
        parser.add_argument("--function", dest="function_id", help="builtin target function id")
        parser.add_argument("--problem", dest="problem_id", help="builtin Volterra problem id")
        parser.add_argument(
            "--format", choices=[member.value for member in OutputFormat], default="csv"
        )
        parser.add_argument("--output", help="write to this path instead of stdout")
        parser.add_argument("--grid", type=int, help="number of uniform grid points")
        parser.add_argument(
            "--emit-function",
            action="store_true",
            help="lebesgue: emit the Lebesgue function on the grid instead of its maximum",
        )
        parser.add_argument(
            "--explicit-cgl",
            action="store_true",
            help="diffmat: use the closed-form Chebyshev-Gauss-Lobatto matrix (descending order)",
        )
        parser.add_argument(
            "--interval-end", type=float, help="volterra: right end T of the interval [0, T]"
        )

    def handle(self, *args, **options):
        try:
            run_config = RunConfig.from_options(
                options["subcommand"],
                family=options["family"],
                s=options["s"],
                function_id=options["function_id"],
                problem_id=options["problem_id"],
                format=options["format"],
                output=options["output"],
                grid=options["grid"],
                emit_function=options["emit_function"],
                explicit_cgl=options["explicit_cgl"],
                interval_end=options["interval_end"],
            )
            execute(run_config, stdout=self.stdout)
        except SpectralNodesError as err:
            raise CommandError(str(err), returncode=exit_code(err)) from err
