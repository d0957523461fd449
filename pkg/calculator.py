# calculator.py
"""
Command-line entry point for arcalg.
Enumerates blocks, multiplies elements, prints q-matrices and module data,
renders diagrams and runs the verification suites.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from core.algebra.diagram_algebra import AlgebraKind, DiagramAlgebra, Route
from core.diagrams.blocks import Block
from core.diagrams.oriented import BasisDiagram
from core.diagrams.weights import Weight
from core.exceptions import ArcAlgebraError, VerificationFailure
from core.inout.matrix_csv import matrix_to_csv, write_matrix_csv
from core.inout.render import render_ascii
from core.inout.verify_config import VerifyConfig, load_verify_config
from core.numeric.poly_matrix import PolyMatrix
from core.reps.matrices import cartan_matrix, decomposition_matrix
from core.reps.modules import CellModule, ProjectiveModule
from core.surgery.element import Element
from core.verify.runner import VerifyReport, run_verification


class Calculator:
    """Thin façade over the library; every method returns text or plain data."""

    def enumerate(self, block: str) -> List[Weight]:
        return list(Block.of(block))

    def multiply(self, block: str, x: str, y: str, route: Route = Route.GENERALIZED) -> Element:
        algebra = DiagramAlgebra(block, AlgebraKind.K, route)
        return algebra.multiply(Element.parse(x), Element.parse(y))

    def basis(self, block: str, kind: AlgebraKind = AlgebraKind.K) -> List[BasisDiagram]:
        return list(DiagramAlgebra(block, kind).basis)

    def matrix(self, name: str, block: str) -> PolyMatrix:
        build = cartan_matrix if name == "cartan" else decomposition_matrix
        return build(Block.of(block))

    def cell_module(self, mu: str) -> str:
        cell = CellModule(Weight.parse(mu))
        lines = [f"V({cell.mu}): {cell.graded_dimension()}"]
        lines.extend(f"  {c}  deg {d}" for c, d in zip(cell.basis, cell.degrees))
        lines.append(str(cell.layers()))
        return "\n".join(lines) + "\n"

    def filtration(self, lam: str) -> str:
        proj = ProjectiveModule(Weight.parse(lam))
        return f"dim P({proj.lam}) = {proj.graded_dimension()}\n{proj.filtration()}\n"

    def verify(self, config: VerifyConfig) -> VerifyReport:
        return run_verification(config)

    def render(self, diagram: Optional[str] = None, element: Optional[str] = None) -> str:
        if diagram is not None:
            return render_ascii(BasisDiagram.parse(diagram))
        return render_ascii(Element.parse(element or "0"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arcalg", description="Generalised Khovanov arc algebra calculator")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging verbosity")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="List the weights of a block in block order")
    p.add_argument("--block", required=True, help="Any weight of the block, e.g. vv^^")

    p = sub.add_parser("multiply", help="Multiply two elements of K over a block")
    p.add_argument("--block", required=True)
    p.add_argument("--x", required=True, help="Element, e.g. '(1,2)|^v|' or '+1·(...) -2·(...)'")
    p.add_argument("--y", required=True)
    p.add_argument("--route", choices=[r.value for r in Route], default=Route.GENERALIZED.value)

    p = sub.add_parser("basis", help="List the basis of K or H with degrees")
    p.add_argument("--block", required=True)
    p.add_argument("--kind", choices=[k.value for k in AlgebraKind], default=AlgebraKind.K.value)

    for name, text in (("cartan", "q-Cartan matrix as CSV"), ("decomp", "q-decomposition matrix as CSV")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--block", required=True)
        p.add_argument("--out", type=Path, help="Write the CSV here instead of stdout")

    p = sub.add_parser("cellmod", help="Basis, degrees and layers of a cell module")
    p.add_argument("--mu", required=True)

    p = sub.add_parser("filtration", help="Cell module filtration of a projective")
    p.add_argument("--lam", required=True)

    p = sub.add_parser("verify", help="Run verification suites")
    p.add_argument("--suite", action="append", help="Suite name or 'all'; repeatable")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--config", type=Path, help="YAML run configuration")

    p = sub.add_parser("render", help="Draw a diagram or element as text")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--diagram")
    group.add_argument("--element")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format="%(levelname)s %(name)s: %(message)s")

    calc = Calculator()
    try:
        if args.command == "enumerate":
            for w in calc.enumerate(args.block):
                print(w)
        elif args.command == "multiply":
            print(calc.multiply(args.block, args.x, args.y, Route(args.route)))
        elif args.command == "basis":
            for x in calc.basis(args.block, AlgebraKind(args.kind)):
                print(f"{x}\t{x.degree}")
        elif args.command in ("cartan", "decomp"):
            matrix = calc.matrix(args.command, args.block)
            if args.out:
                write_matrix_csv(matrix, args.out)
            else:
                sys.stdout.write(matrix_to_csv(matrix))
        elif args.command == "cellmod":
            sys.stdout.write(calc.cell_module(args.mu))
        elif args.command == "filtration":
            sys.stdout.write(calc.filtration(args.lam))
        elif args.command == "verify":
            config = load_verify_config(args.config) if args.config else VerifyConfig()
            config = config.with_overrides(max_vertices=args.max_vertices, samples=args.samples,
                                           seed=args.seed, workers=args.workers, suites=args.suite)
            report = calc.verify(config)
            sys.stdout.write(report.render())
            report.raise_for_failure()
        elif args.command == "render":
            sys.stdout.write(calc.render(args.diagram, args.element))
    except VerificationFailure as e:
        print(f"Verification failed: {e}", file=sys.stderr)
        return 1
    except ArcAlgebraError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
