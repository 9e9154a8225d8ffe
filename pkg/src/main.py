import argparse
import logging
import sys

from typing import Any, Callable, List, Optional, Sequence

from connectors.file_connector import FileConnector
from dendrex.functoriality import check_functoriality, check_identity_transport
from dendrex.homs import induced_hom, presentation_for, verify_hom
from drawing.draw import draw
from drawing.export import drawing_to_dot, to_json
from errors import DendrexError, PreconditionError
from graphalg.cuntz_krieger import ck_presentation, linear_graph
from graphalg.matrices import linear_graph_ck_matrices, verify_matrix_assignment
from graphalg.zigzag import verify_zigzag_up_to
from omega.canonical import automorphisms
from omega.enumeration import enumerate_trees
from omega.faces import degeneracies, faces
from omega.identities import identity_suite
from omega.morphisms import hom_set
from presheaf.normal_mono import is_normal_mono
from presheaf.representable import boundary, inner_horn, representable
from settings import settings

description = """
Computes with the category of non-planar rooted trees, the noncommutative dendrices of trees, finite
dendroidal sets and their drawings as diagrams of C*-algebra presentations, and Cuntz-Krieger
presentations of finite graphs. Results are written to stdout as JSON (or DOT for drawings).
"""

logging_level = {
    "ERROR": logging.ERROR,
    "WARN": logging.WARN,
    "INFO": logging.INFO,
    "DEBUG": logging.DEBUG
}
logger = logging.getLogger(__name__)
logging.basicConfig(level=logging_level.get(settings.log_level.upper()), format='%(asctime)s %(levelname)s: %(message)s', stream=sys.stderr)

class Outcome:
    """What a subcommand prints and whether its verification passed."""

    def __init__(self, result: Any, passed: bool = True, dot: Optional[str] = None):
        self.result = result
        self.passed = passed
        self.dot = dot

def _trees_enum(args: argparse.Namespace) -> Outcome:
    return Outcome(enumerate_trees(args.max_edges))

def _tree(args: argparse.Namespace) -> Outcome:
    tree = FileConnector(args.file).load_tree()
    if args.action == "faces":
        return Outcome(faces(tree))
    if args.action == "degeneracies":
        return Outcome(degeneracies(tree))
    return Outcome([dict(sorted(bijection.items())) for bijection in automorphisms(tree)])

def _omega_hom(args: argparse.Namespace) -> Outcome:
    source = FileConnector(args.source).load_tree()
    target = FileConnector(args.target).load_tree()
    return Outcome(hom_set(source, target))

def _dendrex_show(args: argparse.Namespace) -> Outcome:
    return Outcome(presentation_for(FileConnector(args.file).load_tree(), abelian=args.abelian))

def _dendrex_map(args: argparse.Namespace) -> Outcome:
    source = FileConnector(args.source).load_tree()
    target = FileConnector(args.target).load_tree()
    morphism = FileConnector(args.morphism).load_morphism_between(source, target)
    hom = induced_hom(morphism)
    report = verify_hom(hom)
    return Outcome({"morphism": morphism, "normal_form": morphism.normal_form, "hom": hom, "report": report}, report.passed)

def _presheaf(args: argparse.Namespace) -> Outcome:
    tree = FileConnector(args.file).load_tree()
    if args.action == "representable":
        return Outcome(representable(tree, args.bound))
    if args.action == "boundary":
        inclusion = boundary(tree, args.bound)
    else:
        if args.edge is None:
            raise PreconditionError("An inner horn needs --edge")
        inclusion = inner_horn(tree, args.edge, args.bound)
    report = is_normal_mono(inclusion)
    return Outcome({"inclusion": inclusion, "normal": report}, report.normal)

def _draw(args: argparse.Namespace) -> Outcome:
    presheaf = FileConnector(args.file).load_presheaf()
    drawing = draw(presheaf, include_degenerate=not args.no_degenerate, open_only=args.open_only)
    dot = drawing_to_dot(drawing)
    if args.dot:
        with open(args.dot, "w") as file:
            file.write(dot)
    return Outcome(drawing, dot=dot)

def _graph_ck(args: argparse.Namespace) -> Outcome:
    return Outcome(ck_presentation(FileConnector(args.file).load_graph()))

def _graph_linear(args: argparse.Namespace) -> Outcome:
    presentation = ck_presentation(linear_graph(args.n))
    if not args.matrices:
        return Outcome(presentation)
    matrices = linear_graph_ck_matrices(args.n)
    report = verify_matrix_assignment(presentation, matrices)
    return Outcome({"presentation": presentation, "matrices": matrices, "report": report}, report.passed)

def _verify_identities(args: argparse.Namespace) -> Outcome:
    instances = identity_suite(args.max_edges)
    failures = [instance for instance in instances if not instance.holds]
    return Outcome({"checked": len(instances), "failures": failures}, not failures)

def _verify_functoriality(args: argparse.Namespace) -> Outcome:
    reports = [check_functoriality(args.max_edges), check_identity_transport(args.max_edges)]
    return Outcome(reports, all(reports))

def _verify_sm(args: argparse.Namespace) -> Outcome:
    reports = verify_zigzag_up_to(args.n, seed=args.seed)
    return Outcome(reports, all(reports))

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dendrex", description=description)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.version}.{settings.sub_version}")
    parser.add_argument("--seed", type=int, default=settings.seed, help=f"seed of randomized sweeps (default {settings.seed})")
    parser.add_argument("--format", choices=("json", "dot"), default="json", help="output format, dot only for drawings")
    commands = parser.add_subparsers(dest="command", required=True)

    trees = commands.add_parser("trees", help="canonical trees").add_subparsers(dest="action", required=True)
    enum = trees.add_parser("enum", help="all tree shapes up to a number of edges")
    enum.add_argument("--max-edges", type=int, required=True)
    enum.set_defaults(handler=_trees_enum)

    tree = commands.add_parser("tree", help="generating morphisms of a tree")
    tree.add_argument("action", choices=("faces", "degeneracies", "auts"))
    tree.add_argument("file")
    tree.set_defaults(handler=_tree)

    omega = commands.add_parser("omega", help="morphisms between trees").add_subparsers(dest="action", required=True)
    hom = omega.add_parser("hom", help="all morphisms from SRC to TGT")
    hom.add_argument("source")
    hom.add_argument("target")
    hom.set_defaults(handler=_omega_hom)

    dendrex = commands.add_parser("dendrex", help="dendrex presentations and induced homomorphisms").add_subparsers(dest="action", required=True)
    show = dendrex.add_parser("show")
    show.add_argument("file")
    show.add_argument("--abelian", action="store_true")
    show.set_defaults(handler=_dendrex_show)
    induced = dendrex.add_parser("map")
    induced.add_argument("source")
    induced.add_argument("target")
    induced.add_argument("--morphism", required=True, help="JSON file with the edge map of SRC -> TGT")
    induced.set_defaults(handler=_dendrex_map)

    presheaf = commands.add_parser("presheaf", help="representables, boundaries and inner horns")
    presheaf.add_argument("action", choices=("representable", "boundary", "horn"))
    presheaf.add_argument("file")
    presheaf.add_argument("--bound", type=int, required=True)
    presheaf.add_argument("--edge")
    presheaf.set_defaults(handler=_presheaf)

    drawing = commands.add_parser("draw", help="the drawing of a finite dendroidal set")
    drawing.add_argument("file")
    drawing.add_argument("--no-degenerate", action="store_true")
    drawing.add_argument("--open-only", action="store_true")
    drawing.add_argument("--dot", help="also write the DOT export to this path")
    drawing.set_defaults(handler=_draw)

    graph = commands.add_parser("graph", help="Cuntz-Krieger presentations").add_subparsers(dest="action", required=True)
    ck = graph.add_parser("ck")
    ck.add_argument("file")
    ck.set_defaults(handler=_graph_ck)
    linear = graph.add_parser("linear")
    linear.add_argument("n", type=int)
    linear.add_argument("--matrices", action="store_true")
    linear.set_defaults(handler=_graph_linear)

    verify = commands.add_parser("verify", help="exhaustive and seeded checks").add_subparsers(dest="action", required=True)
    identities = verify.add_parser("identities")
    identities.add_argument("--max-edges", type=int, required=True)
    identities.set_defaults(handler=_verify_identities)
    functoriality = verify.add_parser("functoriality")
    functoriality.add_argument("--max-edges", type=int, required=True)
    functoriality.set_defaults(handler=_verify_functoriality)
    sm = verify.add_parser("sm")
    sm.add_argument("n", type=int)
    sm.set_defaults(handler=_verify_sm)
    return parser

def run(argv: Sequence[str], out: Optional[Callable[[str], Any]] = None) -> int:
    """Runs one command; returns 0 when it passes, 1 on a failed verification and 2 on bad usage or input."""
    out = out or sys.stdout.write
    try:
        args = build_parser().parse_args(list(argv))
    except SystemExit as exit:
        return int(exit.code or 0)
    try:
        outcome: Outcome = args.handler(args)
        if args.format == "dot":
            if outcome.dot is None:
                raise PreconditionError("DOT output is only available for drawings")
            out(outcome.dot)
        else:
            out(to_json(outcome.result) + "\n")
    except DendrexError as error:
        logger.error(error.detail)
        return error.exit_code
    if not outcome.passed:
        logger.warning(f"Verification failed for '{' '.join(argv)}'")
        return 1
    return 0

def main(argv: Optional[List[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)

if __name__ == "__main__":
    sys.exit(main())
