"""
Main command-line application
"""
import argparse
import logging
import sys
from typing import List, Optional

from homimage import __version__
from homimage.cli.classification.commands import register as register_classification
from homimage.cli.common import TEXT, common_parser, emit_error
from homimage.cli.enumeration.commands import register as register_enumeration
from homimage.cli.families.commands import register as register_families
from homimage.cli.structures.commands import register as register_structures
from homimage.core.config import settings
from homimage.core.exceptions import HomImageError
from homimage.models.models import ErrorResponse

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Standard and strong homomorphic image orderings on finite graphs, digraphs and tournaments",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Include command groups
    parents = [common_parser()]
    register_structures(subparsers, parents)
    register_classification(subparsers, parents)
    register_families(subparsers, parents)
    register_enumeration(subparsers, parents)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    # stdout carries results only
    logging.basicConfig(level=settings.log_level, stream=sys.stderr)
    args = build_parser().parse_args(argv)
    output_format = getattr(args, "format", TEXT)

    try:
        return args.handler(args)
    except HomImageError as e:
        logger.debug(f"{args.command} failed: {e.message}")
        emit_error(e.to_response(), output_format)
        return 2
    except OSError as e:
        logger.error(f"{args.command} could not read input: {e}")
        emit_error(ErrorResponse(message=str(e), error_code="IO_ERROR"), output_format)
        return 2


if __name__ == "__main__":
    sys.exit(main())
