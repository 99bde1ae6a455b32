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

from quatinv.qmat import write_qmat
from quatinv.rng import gen_random


def gen_matrix(ctx, args):
    """Write a seeded random matrix as a QMH1 file."""
    seed = ctx.config["DEFAULT_SEED"] if args.seed is None else args.seed
    z = gen_random(args.n, seed, args.trial)
    write_qmat(args.out, z)
    print(f"wrote {args.n}x{args.n} matrix (seed {seed}, trial {args.trial})")


def setup(subparser):
    gen_parser = subparser.add_parser(
        "gen", help="Generate a random matrix", description=gen_matrix.__doc__
    )
    gen_parser.add_argument("n", type=int, help="Matrix size")
    gen_parser.add_argument("--seed", type=int, default=None, help="Root seed")
    gen_parser.add_argument("--trial", type=int, default=0, help="Trial index")
    gen_parser.add_argument("--out", required=True, help="Output .qmat path")
    gen_parser.set_defaults(func=gen_matrix)
