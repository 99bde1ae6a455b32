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

import argparse
import sys
from dataclasses import dataclass
from typing import List, Optional

import logbook
from logbook import Logger

from quatinv.errors import NotGeneric, QuatinvError, UsageError
from quatinv.schemas import CONFIG, validate
from manage.cmd import bench, gen, invert, plot, verify

log = Logger(__name__)

#: exit code for failed file access, shared with FormatError
IO_EXIT_CODE = 3


@dataclass
class Context:
    """What every command gets besides its arguments."""

    config: dict


class ManageParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so bad usage maps
    onto UsageError like every other failure."""

    def error(self, message):
        raise UsageError(message)


def load_config(config) -> dict:
    """Pick the `config.MODE` class out of a config module and validate
    its uppercase attributes."""
    try:
        mode = getattr(config, config.MODE)
    except AttributeError as err:
        raise UsageError(f"bad config mode: {err}")

    doc = {key: getattr(mode, key) for key in dir(mode) if key.isupper()}
    return validate(doc, CONFIG)


def init_parser():
    parser = ManageParser(prog="manage.py")
    subparser = parser.add_subparsers(help="operations", parser_class=ManageParser)

    gen.setup(subparser)
    invert.setup(subparser)
    bench.setup(subparser)
    plot.setup(subparser)
    verify.setup(subparser)

    return parser


def main(config, argv: Optional[List[str]] = None, handler=None) -> int:
    """Run one command, returning its exit code."""
    argv = sys.argv[1:] if argv is None else argv
    parser = init_parser()

    try:
        ctx = Context(load_config(config))
        if handler is not None and ctx.config["DEBUG"]:
            handler.level = logbook.DEBUG

        if not argv:
            parser.print_help()
            return UsageError.exit_code

        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            parser.print_help()
            return UsageError.exit_code

        return args.func(ctx, args) or 0
    except NotGeneric as err:
        log.error("{} (another algorithm may still succeed)", err.message)
        return err.exit_code
    except QuatinvError as err:
        log.error("{}", err.message)
        return err.exit_code
    except OSError as err:
        log.error("i/o error: {}", err)
        return IO_EXIT_CODE
    except Exception:
        log.exception("error while running command")
        return 1
