"""
Family commands
"""
import argparse

from homimage.cli.common import emit_structures
from homimage.models.models import FamilyName, LoopModel
from homimage.services.families.family_service import family_service


def register(subparsers, parents) -> None:
    family = subparsers.add_parser("family", parents=parents, help="print a member of a named family")
    family.add_argument("name", type=FamilyName, choices=[f.value for f in FamilyName])
    family.add_argument("params", type=int, nargs="*")
    family.add_argument(
        "--model",
        type=LoopModel,
        choices=[LoopModel.REFLEXIVE.value, LoopModel.IRREFLEXIVE.value],
        default=LoopModel.REFLEXIVE,
        help="loop model for complete and empty families",
    )
    family.set_defaults(handler=cmd_family)


def cmd_family(args: argparse.Namespace) -> int:
    structure, kind = family_service.build(args.name, args.params, args.model)
    emit_structures([structure], kind, args)
    return 0
