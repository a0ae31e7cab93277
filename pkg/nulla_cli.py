#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
nulla_cli.py

Command-line front end:

  nulla encode    --graph G --problem P [--m M] [--k K] [--target-graph H] [-o FILE]
  nulla solve     (--system FILE | --graph G --problem P ...) [--degree-bound D] [--benchmark CSV]
  nulla verify    --system FILE --certificate FILE
  nulla enumerate --graph G --problem STRUCTURE [--k K] [--target-graph H]
  nulla analyze   (--system FILE | --graph G --problem P ...)

Primary output (JSON, listings, reports) goes to stdout or --output; status
lines go to stderr.

Exit codes: 0 certified / verified, 1 no certificate / verification failed,
2 input error, 3 resource refusal.

ENV (via .env): see settings.py
"""

import argparse
import logging
import sys
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

import settings
from encoders import ORIGINAL, PROBLEMS, SUBSET, PolySystem, encode
from enumcert import analyze
from errors import (CertificateError, EncodingError, FormatError, GraphParseError, InfeasibilityError,
                    NotSubsetClosed, NullaError, OracleRefusal, ResourceRefusal, StructuralError)
from formats import CertificateFile, content_hash, read_model, write_text
from graphs import read_graph
from nulla import Certificate, default_degree_bound, nulla_solve, verify_certificate
from oracles import (OracleLimits, Structure, StructureKind, enumerate_family, is_subset_closed,
                     max_structure_size)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_REFUSED = 3

COMMANDS = ("encode", "solve", "verify", "enumerate", "analyze")

# structure names accepted by `enumerate`
STRUCTURES = {
    "indset": Structure.INDEPENDENT_SET,
    "matching": Structure.MATCHING,
    "kcolor": Structure.K_COLORABLE,
    "hom": Structure.HOMOMORPHIC,
    "regular": Structure.REGULAR,
    "kregular": Structure.K_REGULAR,
    "vcover": Structure.VERTEX_COVER,
    "ecover": Structure.EDGE_COVER,
    "cagefree": Structure.CAGE_FREE,
    "edgecolor": Structure.EDGE_COLORABLE,
}


class RunConfig(BaseModel):
    command: Literal["encode", "solve", "verify", "enumerate", "analyze"]
    graph: Optional[str] = None
    graph_format: Optional[Literal["edgelist", "dimacs"]] = None
    problem: Optional[str] = None
    m: Optional[int] = Field(default=None, ge=0)
    k: Optional[int] = Field(default=None, ge=0)
    target_graph: Optional[str] = None
    form: Literal["subset", "original"] = SUBSET
    all_pairs: bool = False
    system: Optional[str] = None
    certificate: Optional[str] = None
    degree_bound: Optional[int] = Field(default=None, ge=0)
    max_vertices: int = Field(default=settings.MAX_VERTICES, ge=0)
    max_edges: int = Field(default=settings.MAX_EDGES, ge=0)
    max_columns: int = Field(default=settings.MAX_COLUMNS, ge=1)
    output: Optional[str] = None
    benchmark: Optional[str] = None
    quiet: bool = False
    progress: bool = settings.PROGRESS

    @model_validator(mode="after")
    def _required(self) -> "RunConfig":
        if self.command == "verify":
            if not (self.system and self.certificate):
                raise ValueError("verify needs --system and --certificate")
        elif self.command == "enumerate":
            if not (self.graph and self.problem):
                raise ValueError("enumerate needs --graph and --problem")
            if self.problem not in STRUCTURES:
                raise ValueError(f"unknown structure {self.problem!r}; choose from {', '.join(STRUCTURES)}")
            if self.problem in ("kcolor", "kregular") and self.k is None:
                raise ValueError(f"enumerate {self.problem} needs --k")
            if self.problem == "hom" and not self.target_graph:
                raise ValueError("enumerate hom needs --target-graph")
        elif self.command == "encode" or not self.system:
            if not (self.graph and self.problem):
                raise ValueError(f"{self.command} needs --system or --graph with --problem")
            if self.problem not in PROBLEMS:
                raise ValueError(f"unknown problem {self.problem!r}; choose from {', '.join(PROBLEMS)}")
        return self

    @property
    def limits(self) -> OracleLimits:
        return OracleLimits(max_vertices=self.max_vertices, max_edges=self.max_edges)


# ---- output helpers ----

def _status(config: RunConfig, message: str) -> None:
    if not config.quiet:
        print(message, file=sys.stderr)


def _emit(config: RunConfig, text: str) -> None:
    if config.output:
        write_text(config.output, text)
        _status(config, f"💾 wrote {config.output}")
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _graphs(config: RunConfig):
    graph = read_graph(config.graph, config.graph_format)
    target = read_graph(config.target_graph) if config.target_graph else None
    return graph, target


def load_system(config: RunConfig) -> PolySystem:
    if config.system:
        return PolySystem.from_json(_read(config.system))
    graph, target = _graphs(config)
    return encode(config.problem, graph, m=config.m, k=config.k, target=target,
                  form=config.form, all_pairs=config.all_pairs)


# ---- commands ----

def cmd_encode(config: RunConfig) -> int:
    system = load_system(config)
    _emit(config, system.to_json())
    _status(config, f"✅ encoded {system.problem}: {system.n_vars} variables, {system.size} equations")
    return EXIT_OK


def cmd_solve(config: RunConfig) -> int:
    system = load_system(config)
    bound = config.degree_bound if config.degree_bound is not None else default_degree_bound(system, config.limits)
    _status(config, f"🔍 NulLA on {system.problem}: {system.n_vars} variables, {system.size} equations, bound {bound}")
    try:
        result = nulla_solve(system, bound, max_columns=config.max_columns, progress=config.progress)
    except ResourceRefusal as e:
        if config.benchmark and e.report is not None:
            write_text(config.benchmark, e.report.to_csv())
        raise
    if config.benchmark:
        write_text(config.benchmark, result.report.to_csv())
    _status(config, result.report.to_table())
    if not result.found:
        _status(config, f"❌ no certificate up to bound {bound}")
        return EXIT_NEGATIVE
    _emit(config, result.certificate.to_json(system, result.report))
    _status(config, f"🎉 certified infeasible at degree {result.degree}")
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    text = _read(config.system)
    system = PolySystem.from_json(text)
    model = read_model(CertificateFile, config.certificate)
    if model.system_hash and model.system_hash != content_hash(system.to_json()):
        _status(config, "⚠️ certificate was produced for a different system file; verifying anyway")
    check = verify_certificate(system, Certificate.from_model(model, system.table))
    if check.ok:
        _status(config, "✅ certificate verified: sum of beta_i * f_i is exactly 1")
        return EXIT_OK
    print(f"residual: {check.residual}")
    _status(config, "❌ certificate does not verify")
    return EXIT_NEGATIVE


def cmd_enumerate(config: RunConfig) -> int:
    graph, target = _graphs(config)
    structure = STRUCTURES[config.problem]
    k = config.k
    if structure is Structure.EDGE_COLORABLE and k is None:
        k = max(graph.max_degree(), 1)
    family = enumerate_family(StructureKind(structure, k=k, target=target), graph, config.limits)
    lines: List[str] = [family.format_member(member) for member in family.sorted_members()]
    lines.append(f"count: {len(family)}")
    if family.members:
        lines.append(f"max size: {max_structure_size(family)}")
    closure = is_subset_closed(family)
    lines.append(f"subset-closed: {'yes' if closure else 'no'}")
    if closure.witness is not None:
        outer, inner = closure.witness
        lines.append(f"witness: {family.format_member(outer)} present, {family.format_member(inner)} missing")
    _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_analyze(config: RunConfig) -> int:
    system = load_system(config)
    report = analyze(system, degree_bound=config.degree_bound, limits=config.limits,
                     max_columns=config.max_columns)
    _emit(config, report.to_text())
    if report.downgraded:
        _status(config, "⚠️ family is not subset closed; report holds empirical data only")
        return EXIT_OK
    if report.passed:
        _status(config, "✅ all claims PASS")
        return EXIT_OK
    _status(config, "❌ some claims FAIL")
    return EXIT_NEGATIVE


HANDLERS = {
    "encode": cmd_encode,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "analyze": cmd_analyze,
}


# ---- argparse ----

def _graph_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", help="Graph file (edge list, or DIMACS by .dimacs/.col extension)")
    parser.add_argument("--graph-format", choices=["edgelist", "dimacs"], help="Override format detection")
    parser.add_argument("--problem", help=f"One of: {', '.join(PROBLEMS)} (enumerate: {', '.join(STRUCTURES)})")
    parser.add_argument("--m", type=int, help="Cardinality target m")
    parser.add_argument("--k", type=int, help="Colors (kcolor, edgecolor oracle) or degree (kregular)")
    parser.add_argument("--target-graph", help="Target graph H for hom")
    parser.add_argument("--form", choices=[SUBSET, ORIGINAL], default=SUBSET,
                        help="vcover/ecover encoding (default: subset)")
    parser.add_argument("--all-pairs", action="store_true", help="regular: equate degrees of all vertex pairs")


def _guard_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-vertices", type=int, default=settings.MAX_VERTICES,
                        help=f"Oracle guard on vertex count (default: {settings.MAX_VERTICES})")
    parser.add_argument("--max-edges", type=int, default=settings.MAX_EDGES,
                        help=f"Oracle guard on edge count (default: {settings.MAX_EDGES})")
    parser.add_argument("--max-columns", type=int, default=settings.MAX_COLUMNS,
                        help=f"NulLA matrix column cap (default: {settings.MAX_COLUMNS})")
    parser.add_argument("--degree-bound", type=int, help="Highest degree tried (default: from the oracle)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nulla", description="Nullstellensatz certificates for graph problems.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="Write primary output here instead of stdout")
    common.add_argument("-q", "--quiet", action="store_true", help="Suppress status lines on stderr")
    common.add_argument("--progress", action="store_true", default=settings.PROGRESS,
                        help="Show tqdm progress over the degree ascent")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="Write the polynomial system of a graph problem")
    _graph_options(p)

    p = sub.add_parser("solve", parents=[common], help="Search for a minimum-degree certificate")
    _graph_options(p)
    _guard_options(p)
    p.add_argument("--system", help="System JSON file (instead of --graph/--problem)")
    p.add_argument("--benchmark", help="Write the per-degree matrix sizes as CSV here")

    p = sub.add_parser("verify", parents=[common], help="Check a certificate exactly")
    p.add_argument("--system", help="System JSON file")
    p.add_argument("--certificate", help="Certificate JSON file")

    p = sub.add_parser("enumerate", parents=[common], help="List a structure family by brute force")
    _graph_options(p)
    _guard_options(p)

    p = sub.add_parser("analyze", parents=[common], help="Compare enumerative and NulLA certificates")
    _graph_options(p)
    _guard_options(p)
    p.add_argument("--system", help="System JSON file (instead of --graph/--problem)")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, settings.LOG_LEVEL, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = RunConfig.model_validate({k: v for k, v in vars(args).items() if v is not None})
    except ValidationError as e:
        print(f"❌ invalid arguments: {e}", file=sys.stderr)
        return EXIT_INPUT

    try:
        return HANDLERS[config.command](config)
    except (OracleRefusal, ResourceRefusal) as e:
        print(f"⚠️ refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (GraphParseError, EncodingError, FormatError, StructuralError, NotSubsetClosed) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"❌ cannot read input: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (InfeasibilityError, CertificateError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    except NullaError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
