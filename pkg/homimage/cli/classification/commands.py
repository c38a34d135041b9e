"""
Classification commands
"""
import argparse

from homimage.cli.common import RECORD, emit_record, emit_structures, load_structure
from homimage.core.exceptions import PreconditionViolated
from homimage.services.classification.classification_service import classification_service


def register(subparsers, parents) -> None:
    classify = subparsers.add_parser(
        "classify", parents=parents, help="wqo verdict for the class avoiding an obstruction"
    )
    classify.add_argument("obstruction")
    classify.add_argument("--witness", type=int, default=0, metavar="N", help="append N verified antichain members")
    classify.set_defaults(handler=cmd_classify)


def cmd_classify(args: argparse.Namespace) -> int:
    if args.structure_class is None:
        raise PreconditionViolated("classify needs --class")
    obstruction, _ = load_structure(args.obstruction)
    verdict = classification_service.classify(args.structure_class, args.strength, obstruction)

    if args.format == RECORD:
        emit_record(verdict)
    else:
        print(f"outcome: {verdict.outcome.value}")
        print(f"finite_ideal: {str(verdict.finite_ideal).lower()}")
        family = verdict.witness_family
        if family is not None:
            print(f"witness_family: {family.name.value} start={family.start} step={family.step}")
        print(f"theorem_tag: {verdict.theorem_tag}")

    if args.witness > 0:
        members = classification_service.canonical_antichain(
            args.structure_class, args.strength, obstruction, args.witness
        )
        if args.format != RECORD:
            print()
        emit_structures(members, args.structure_class.kind, args, label="antichain member")
    return 0
