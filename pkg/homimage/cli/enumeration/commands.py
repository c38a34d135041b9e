"""
Enumeration commands: enumerate, ideal, antichain, verify
"""
import argparse
import logging

from homimage.cli.common import RECORD, emit_record, emit_structures, load_structure
from homimage.core.exceptions import PreconditionViolated, VerificationFailed
from homimage.models.models import Kind, LoopModel, PropositionTag, ReportOutcome, Shape
from homimage.services.enumeration.enumeration_service import enumeration_service
from homimage.services.enumeration.verification_service import DEFAULT_BOUNDS, verification_service

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    enumerate_parser = subparsers.add_parser(
        "enumerate", parents=parents, help="one structure per isomorphism class on n vertices"
    )
    enumerate_parser.add_argument("n", type=int)
    enumerate_parser.add_argument("--kind", dest="shape", type=Shape, choices=[s.value for s in Shape])
    enumerate_parser.add_argument("--model", type=LoopModel, choices=[m.value for m in LoopModel])
    enumerate_parser.set_defaults(handler=cmd_enumerate)

    ideal = subparsers.add_parser("ideal", parents=parents, help="enumerated members of Av(obstruction)")
    ideal.add_argument("obstruction")
    ideal.add_argument("--max-n", dest="max_n", type=int, required=True)
    ideal.set_defaults(handler=cmd_ideal)

    antichain = subparsers.add_parser("antichain", parents=parents, help="search for an antichain")
    antichain.add_argument("files", nargs="*")
    antichain.add_argument("--size", type=int, required=True)
    antichain.add_argument("--obstruction")
    antichain.add_argument("--max-n", dest="max_n", type=int)
    antichain.set_defaults(handler=cmd_antichain)

    verify = subparsers.add_parser("verify", parents=parents, help="run a named exhaustive check")
    verify.add_argument("tag", help=f"one of {', '.join(t.value for t in PropositionTag)}, or its slug")
    verify.set_defaults(handler=cmd_verify)


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.structure_class is not None:
        kind = args.structure_class.kind
    elif args.shape is not None and args.model is not None:
        kind = Kind(shape=args.shape, model=args.model)
    else:
        raise PreconditionViolated("enumerate needs --class or both --kind and --model")
    structures = enumeration_service.enumerate_structures(kind, args.n)
    logger.info(f"{len(structures)} {kind} classes on {args.n} vertices")
    emit_structures(structures, kind, args, label="class")
    return 0


def cmd_ideal(args: argparse.Namespace) -> int:
    if args.structure_class is None:
        raise PreconditionViolated("ideal needs --class")
    obstruction, _ = load_structure(args.obstruction)
    members = enumeration_service.ideal_members(args.structure_class, args.strength, obstruction, args.max_n)
    emit_structures(members, args.structure_class.kind, args, label="member")
    return 0


def cmd_antichain(args: argparse.Namespace) -> int:
    """Exit 0 when an antichain of the requested size is found, 1 otherwise"""
    if args.files:
        loaded = [load_structure(path) for path in args.files]
        candidates = [structure for structure, _ in loaded]
        kind = loaded[0][1]
    elif args.structure_class is not None and args.obstruction and args.max_n is not None:
        obstruction, _ = load_structure(args.obstruction)
        kind = args.structure_class.kind
        candidates = enumeration_service.ideal_members(
            args.structure_class, args.strength, obstruction, args.max_n
        )
    else:
        raise PreconditionViolated("antichain needs structure files or --class, --obstruction and --max-n")

    result = enumeration_service.find_antichain(candidates, args.strength, args.size)
    if args.format == RECORD:
        emit_record(result)
    else:
        search = "greedy" if result.greedy else "exact"
        print(f"{'found' if result.found else 'absent'} ({search} search over {result.candidates} candidates)")
        if result.found:
            print()
            emit_structures(result.members, kind, args, label="antichain member")
    return 0 if result.found else 1


def cmd_verify(args: argparse.Namespace) -> int:
    """Exit 0 on pass, 1 on fail"""
    tag = verification_service.resolve_tag(args.tag)
    bound = args.bound if args.bound is not None else DEFAULT_BOUNDS[tag]
    try:
        report = verification_service.verify_proposition(tag, bound, seed=args.seed)
    except VerificationFailed as e:
        logger.error(f"{tag.value} failed: {e.message}")
        return 1

    if args.format == RECORD:
        emit_record(report)
    else:
        print(f"{report.tag} bound={report.bound}: {report.outcome.value}")
        print(f"checked {report.checked} cases in {report.elapsed:.2f}s")
        if report.detail:
            print(f"detail: {report.detail}")
        if report.counterexample:
            print(report.counterexample, end="")
    return 0 if report.outcome == ReportOutcome.PASS else 1
