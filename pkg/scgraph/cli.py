#!/usr/bin/env python3
"""
scgraph command-line interface.

Graphs are given as graph6 strings; "-" reads one graph per line from
standard input. Results go to stdout, progress and banners to stderr.

Exit codes:
  0  success (witness found where one was requested)
  1  verified absence, or a conjecture counterexample
  2  usage or input error

Usage:
  python3 -m scgraph enum --n 8
  python3 -m scgraph antimorphism --pow2 'Ch'
  python3 -m scgraph p4-partition 'Ch'
  python3 -m scgraph detect --skew 'DjC'
  python3 -m scgraph theorem-m 'DjC'
  python3 -m scgraph conjecture --n 12 --jobs 4 --out reports.jsonl --summary-csv summary.csv
  python3 -m scgraph construct --p4 '@'
  python3 -m scgraph construct --join 'Ch' 'Ch'
  python3 -m scgraph akiyama-harary 'DjC'
  python3 -m scgraph two-join 'Ch'
"""

import argparse
import json
import sys
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, List, Optional

from tqdm import tqdm

from scgraph.antimorphism import (find_antimorphism, find_antimorphism_of_type, find_power_of_two_antimorphism,
                                  is_self_complementary)
from scgraph.config import Guards
from scgraph.constructions import enumerate_sc_graphs, j_construction, p4_construction
from scgraph.errors import (ConfigError, GuardExceededError, Graph6Error, InvalidWitnessError,
                            NotSelfComplementaryError, PermutationError, PreconditionError, VertexError)
from scgraph.graph import Graph
from scgraph.graph6 import parse_graph6, read_graph6_lines, write_graph6
from scgraph.p4partition import p4_partition
from scgraph.report import StructureReport, conjecture_check, summarize, theorem_m_cycle_type, write_reports
from scgraph.structure import (akiyama_harary_check, find_induced_c5, find_skew_partition,
                               find_symmetric_partition, symmetric_to_2join_shape, theorem_m_decompose)

INPUT_ERRORS = (Graph6Error, PermutationError, VertexError, GuardExceededError, ConfigError,
                NotSelfComplementaryError, PreconditionError, InvalidWitnessError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vertex_count(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"vertex count must be non-negative, got {n}")
    return n


@dataclass(frozen=True)
class RunConfig:
    command: str
    guards: Guards
    jobs: int = 1
    out: Optional[str] = None
    quiet: bool = False
    progress: bool = True

    def __post_init__(self):
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be at least 1, got {self.jobs}")


def _status(config: RunConfig, message: str = '') -> None:
    if not config.quiet:
        print(message, file=sys.stderr)


def _banner(config: RunConfig, title: str) -> None:
    _status(config, "=" * 60)
    _status(config, title)
    _status(config, "=" * 60)


def _graphs(text: str) -> Iterator[Graph]:
    if text == '-':
        yield from read_graph6_lines(sys.stdin)
    else:
        yield parse_graph6(text)


def _emit(line: str = '') -> None:
    print(line)


# -- commands -----------------------------------------------------------------

def cmd_enum(args, config: RunConfig) -> int:
    _banner(config, f"Self-complementary graphs on {args.n} vertices")
    graphs = enumerate_sc_graphs(args.n, max_n=config.guards.enum_max_n, jobs=config.jobs,
                                 progress=config.progress)
    for g in graphs:
        _emit(write_graph6(g))
    _status(config, f"\n✓ {len(graphs):,} graphs")
    return 0


def cmd_antimorphism(args, config: RunConfig) -> int:
    status = 0
    for g in _graphs(args.graph):
        if args.pow2:
            t = find_power_of_two_antimorphism(g) if is_self_complementary(g) else None
        else:
            t = find_antimorphism(g)
        if t is None:
            _emit("none")
            status = 1
        else:
            _emit(t.format())
    return status


def cmd_p4_partition(args, config: RunConfig) -> int:
    for g in _graphs(args.graph):
        p = p4_partition(g)
        for quad in p.quads:
            _emit('-'.join(map(str, quad)))
        _emit(json.dumps(p.to_json()))
    return 0


def cmd_detect(args, config: RunConfig) -> int:
    status = 0
    for g in _graphs(args.graph):
        if args.c5:
            found = find_induced_c5(g)
            payload = list(found) if found is not None else None
        elif args.skew:
            found = find_skew_partition(g, max_n=config.guards.skew_max_n)
            payload = found.to_json() if found is not None else None
        else:
            found = find_symmetric_partition(g, max_n=config.guards.symmetric_max_n)
            payload = found.to_json() if found is not None else None
        if payload is None:
            _emit("none")
            status = 1
        else:
            _emit(json.dumps(payload))
    return status


def _witness_json(witness):
    return witness.to_json() if hasattr(witness, 'to_json') else list(witness)


def cmd_theorem_m(args, config: RunConfig) -> int:
    status = 0
    for g in _graphs(args.graph):
        cycle_type = theorem_m_cycle_type(g.n)
        t = find_antimorphism_of_type(g, cycle_type) if cycle_type else None
        if t is None:
            _emit("none")
            status = 1
            continue
        outcome = theorem_m_decompose(g, t)
        payload = {
            "case": outcome.case,
            "kind": outcome.kind,
            "witness": _witness_json(outcome.witness),
            "antimorphism": outcome.antimorphism.format(),
        }
        if outcome.note:
            payload["note"] = outcome.note
        _emit(json.dumps(payload))
    return status


def cmd_conjecture(args, config: RunConfig) -> int:
    _banner(config, f"Structure sweep over sc-graphs on {args.n} vertices")
    graphs = enumerate_sc_graphs(args.n, max_n=config.guards.enum_max_n, jobs=config.jobs,
                                 progress=config.progress)
    _status(config, f"\nChecking {len(graphs):,} graphs with {config.jobs} job(s)")

    bar = dict(total=len(graphs), desc="Checking graphs", unit=" graphs", disable=not config.progress)
    if config.jobs > 1 and len(graphs) > 1:
        with Pool(processes=config.jobs) as pool:
            reports: List[StructureReport] = list(tqdm(pool.imap(conjecture_check, graphs), **bar))
    else:
        reports = [conjecture_check(g) for g in tqdm(graphs, **bar)]

    if config.out:
        write_reports(reports, config.out)
        _status(config, f"✓ Wrote {len(reports):,} reports to {config.out}")
    else:
        for report in reports:
            _emit(report.to_json_line())

    summary = summarize(reports)
    if args.summary_csv:
        summary.to_csv(args.summary_csv, index=False)
        _status(config, f"✓ Wrote summary to {args.summary_csv}")

    counterexamples = [r for r in reports if r.is_counterexample]
    _emit(summary.to_string(index=False))
    for report in counterexamples:
        _emit(f"COUNTEREXAMPLE {report.graph}")
    _emit(f"graphs={len(reports)} holds={sum(r.conjecture_holds for r in reports)} "
          f"counterexamples={len(counterexamples)}")
    return 1 if counterexamples else 0


def cmd_construct(args, config: RunConfig) -> int:
    if args.p4 is not None:
        for g in _graphs(args.p4):
            result, _ = p4_construction(g)
            _emit(write_graph6(result))
    else:
        first, second = args.join
        _emit(write_graph6(j_construction(parse_graph6(first), parse_graph6(second))))
    return 0


def cmd_akiyama_harary(args, config: RunConfig) -> int:
    for g in _graphs(args.graph):
        result = akiyama_harary_check(g)
        _emit(json.dumps({
            "end_vertices": list(result.end_vertices),
            "cut_vertices": list(result.cut_vertices),
            "skew": result.skew.to_json(),
        }))
    return 0


def cmd_two_join(args, config: RunConfig) -> int:
    status = 0
    for g in _graphs(args.graph):
        w = find_symmetric_partition(g, max_n=config.guards.symmetric_max_n)
        if w is None:
            _emit("none")
            status = 1
            continue
        shape = symmetric_to_2join_shape(g, w)
        _emit(json.dumps({
            "symmetric": w.to_json(),
            "X1": sorted(shape.x1),
            "X2": sorted(shape.x2),
            "conditions_hold": shape.conditions_hold,
            "components_meet_both": shape.components_meet_both,
            "paths_long_enough": shape.paths_long_enough,
        }))
    return status


COMMANDS = {
    'enum': cmd_enum,
    'antimorphism': cmd_antimorphism,
    'p4-partition': cmd_p4_partition,
    'detect': cmd_detect,
    'theorem-m': cmd_theorem_m,
    'conjecture': cmd_conjecture,
    'construct': cmd_construct,
    'akiyama-harary': cmd_akiyama_harary,
    'two-join': cmd_two_join,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='scgraph',
        description="Self-complementary graph toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--quiet', action='store_true', help='No progress bars or banners on stderr')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    p = sub.add_parser('enum', help='All sc-graphs on n vertices, one per isomorphism class')
    p.add_argument('--n', type=_vertex_count, required=True, help='Vertex count')
    p.add_argument('--jobs', type=int, default=1, help='Worker processes (default: 1)')

    p = sub.add_parser('antimorphism', help='Find an antimorphism in cycle notation')
    p.add_argument('--pow2', action='store_true', help='Require every cycle length to be a power of 2')
    p.add_argument('graph', help="graph6 string, or - for stdin")

    p = sub.add_parser('p4-partition', help='Partition an sc-graph into induced P4s')
    p.add_argument('graph', help="graph6 string, or - for stdin")

    p = sub.add_parser('detect', help='Look for an induced C5, a skew or a symmetric partition')
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument('--c5', action='store_true')
    which.add_argument('--skew', action='store_true')
    which.add_argument('--symmetric', action='store_true')
    p.add_argument('graph', help="graph6 string, or - for stdin")

    p = sub.add_parser('theorem-m', help='Case analysis for an antimorphism (a b c d)(...)')
    p.add_argument('graph', help="graph6 string, or - for stdin")

    p = sub.add_parser('conjecture', help='Structure reports for every sc-graph on n vertices')
    p.add_argument('--n', type=_vertex_count, required=True, help='Vertex count')
    p.add_argument('--jobs', type=int, default=1, help='Worker processes (default: 1)')
    p.add_argument('--out', help='Write JSON-lines reports here instead of stdout')
    p.add_argument('--summary-csv', help='Write the per-n summary table as CSV')

    p = sub.add_parser('construct', help='P4-construction or J-construction')
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument('--p4', metavar='G6', help='P4-construction of one graph (or - for stdin)')
    how.add_argument('--join', nargs=2, metavar=('G6', 'H6'), help='J-construction of two graphs')

    p = sub.add_parser('akiyama-harary', help='End-vertices, cut vertices and their skew partition')
    p.add_argument('graph', help="graph6 string, or - for stdin")

    p = sub.add_parser('two-join', help='Read a symmetric partition as a 2-join')
    p.add_argument('graph', help="graph6 string, or - for stdin")

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        guards = Guards.from_env()
        config = RunConfig(
            command=args.command,
            guards=guards,
            jobs=getattr(args, 'jobs', 1),
            out=getattr(args, 'out', None),
            quiet=args.quiet,
            progress=not args.quiet and sys.stderr.isatty(),
        )
        return COMMANDS[args.command](args, config)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
