"""
Structure commands: compare two structures, list homomorphic images
"""
import argparse
import logging

from homimage.cli.common import RECORD, emit_record, emit_structures, load_structure
from homimage.models.models import ComparisonResult, Relation
from homimage.services.homomorphism.hom_service import homomorphism_service
from homimage.services.structures.structure_service import structure_service

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    compare = subparsers.add_parser("compare", parents=parents, help="compare A and B in the image ordering")
    compare.add_argument("file_a")
    compare.add_argument("file_b")
    compare.set_defaults(handler=cmd_compare)

    images = subparsers.add_parser("images", parents=parents, help="list all homomorphic images")
    images.add_argument("file")
    images.set_defaults(handler=cmd_images)


def cmd_compare(args: argparse.Namespace) -> int:
    """Exit 0 when A and B are comparable, 1 when incomparable"""
    a, _ = load_structure(args.file_a)
    b, _ = load_structure(args.file_b)

    witness = homomorphism_service.find_epimorphism(b, a, args.strength)
    if witness is not None:
        relation = Relation.EQUAL if structure_service.are_isomorphic(a, b) else Relation.LESS
    else:
        witness = homomorphism_service.find_epimorphism(a, b, args.strength)
        relation = Relation.GREATER if witness is not None else Relation.INCOMPARABLE

    result = ComparisonResult(relation=relation, strength=args.strength, witness=witness)
    if args.format == RECORD:
        emit_record(result)
    else:
        print(relation.value)
        if witness is not None:
            print(f"witness: {witness}")
    return 1 if relation == Relation.INCOMPARABLE else 0


def cmd_images(args: argparse.Namespace) -> int:
    structure, kind = load_structure(args.file)
    images = homomorphism_service.homomorphic_images(structure, args.strength, kind)
    logger.info(f"{len(images)} {args.strength.value} images")
    emit_structures(images, kind, args, label="image")
    return 0
