"""
Shared CLI helpers: global flags, structure file loading and output formatting
"""
import argparse
import sys
from pathlib import Path
from typing import Iterable, Tuple

from pydantic import BaseModel

from homimage.core.exceptions import ParseError
from homimage.models.models import ErrorResponse, Kind, Strength, Structure, StructureClass
from homimage.services.structures.text_format import format_structure, parse_structure, to_dot

TEXT, RECORD = "text", "record"


def common_parser() -> argparse.ArgumentParser:
    """Flags shared by every command, attached after the command name"""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--strength", type=Strength, choices=[s.value for s in Strength], default=Strength.STANDARD)
    parser.add_argument("--class", dest="structure_class", type=StructureClass, choices=[c.value for c in StructureClass])
    parser.add_argument("--dot", action="store_true", help="emit structures in DOT instead of the text format")
    parser.add_argument("--format", choices=[TEXT, RECORD], default=TEXT)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--bound", type=int, default=None)
    return parser


def load_structure(path: str) -> Tuple[Structure, Kind]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text ({e.reason} at byte {e.start})")
    return parse_structure(text)


def emit_record(model: BaseModel) -> None:
    print(model.model_dump_json())


def emit_structures(structures: Iterable[Structure], kind: Kind, args: argparse.Namespace, label: str = "") -> None:
    for i, structure in enumerate(structures):
        if args.format == RECORD:
            emit_record(structure)
        elif args.dot:
            print(to_dot(structure, kind, name=f"S{i}"), end="")
        else:
            comment = f"{label} {i}".strip() if label else None
            print(format_structure(structure, kind, comment=comment))


def emit_error(response: ErrorResponse, output_format: str) -> None:
    if output_format == RECORD:
        print(response.model_dump_json(), file=sys.stderr)
    else:
        print(f"error [{response.error_code}]: {response.message}", file=sys.stderr)
