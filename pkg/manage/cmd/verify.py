"""

quatinv
Copyright (C) 2023  quatinv Contributors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, version 3 of the License.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""

from quatinv.errors import NumericalError
from quatinv.verify import run_checks


def run_verify(ctx, args):
    """Run the invariant suite at small scale. Exits 2 when a check fails."""
    seed = ctx.config["DEFAULT_SEED"] if args.seed is None else args.seed
    results = run_checks(seed=seed)

    for result in results:
        status = "ok" if result.ok else "FAILED"
        print(f"{result.name:<24} {status:<7} {result.detail}")

    if not all(result.ok for result in results):
        return NumericalError.exit_code

    return 0


def setup(subparser):
    verify_parser = subparser.add_parser(
        "verify", help="Run the invariant suite", description=run_verify.__doc__
    )
    verify_parser.add_argument("--seed", type=int, default=None)
    verify_parser.set_defaults(func=run_verify)
