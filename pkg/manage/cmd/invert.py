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

import time

from quatinv.errors import UsageError
from quatinv.inversion import invert, resolve_algorithm
from quatinv.model import residual
from quatinv.qmat import read_qmat, write_qmat
from quatinv.rng import gen_random


def _load_input(ctx, args):
    if args.input is not None and args.gen is not None:
        raise UsageError("give either an input file or --gen, not both")

    if args.input is not None:
        return read_qmat(args.input)

    if args.gen is None:
        raise UsageError("an input file or --gen N is required")

    seed = ctx.config["DEFAULT_SEED"] if args.seed is None else args.seed
    return gen_random(args.gen, seed, args.trial)


def invert_matrix(ctx, args):
    """Invert one matrix and report time, residual and branch.

    The input is a QMH1 file, or a seeded random matrix with --gen.
    """
    alg = resolve_algorithm(args.alg)
    z = _load_input(ctx, args)

    start = time.perf_counter()
    report = invert(z, alg, threshold_factor=ctx.config["SINGULAR_THRESHOLD_FACTOR"])
    elapsed = time.perf_counter() - start

    if args.out is not None:
        write_qmat(args.out, report.inverse)

    branch = report.branch.value if report.branch is not None else "-"
    print(
        f"n={z.rows} alg={int(alg)} ({alg.label}) time={elapsed:.6f}s "
        f"residual={residual(z, report.inverse):.3e} branch={branch}"
    )


def setup(subparser):
    invert_parser = subparser.add_parser(
        "invert", help="Invert one matrix", description=invert_matrix.__doc__
    )
    invert_parser.add_argument("input", nargs="?", help="Input .qmat file")
    invert_parser.add_argument(
        "--alg", required=True, help="Algorithm code (0 to 6) or name"
    )
    invert_parser.add_argument("--gen", type=int, help="Generate an n×n input instead")
    invert_parser.add_argument("--seed", type=int, default=None)
    invert_parser.add_argument("--trial", type=int, default=0)
    invert_parser.add_argument("--out", help="Where to write the inverse")
    invert_parser.set_defaults(func=invert_matrix)
