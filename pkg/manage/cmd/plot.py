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

from quatinv.plots import render_plots
from quatinv.records import read_records


def plot_csv(ctx, args):
    """Render times.svg, ratios.svg and residuals.svg from a bench CSV."""
    records = read_records(args.csv)
    out_dir = args.out or ctx.config["OUTPUT_DIR"]
    for path in render_plots(records, out_dir):
        print(f"wrote {path}")


def setup(subparser):
    plot_parser = subparser.add_parser(
        "plot", help="Plot a benchmark CSV", description=plot_csv.__doc__
    )
    plot_parser.add_argument("csv", help="CSV written by bench")
    plot_parser.add_argument("--out", help="Output directory")
    plot_parser.set_defaults(func=plot_csv)
