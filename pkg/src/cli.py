"""
Command-line entry point: admissible | chart | flatness | verify | svg.

Exit codes: 0 all PASS, 1 a FAIL, 2 an INCONCLUSIVE (budget or precision
ran out), 3 usage error.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from src import reports, weyl
from src.alcove_figures import draw_admissible
from src.charts import LEVELS, U, ChartSpec, chart_ideal
from src.config import DEFAULT_MAX_DEGREE, DEFAULT_MAX_PAIRS, DEFAULT_SEED, RunConfig, get_output_dir
from src.exactalg import BudgetExhausted, is_flat_over_dvr
from src.interchange import (
    chart_spec_to_json, element_to_json, ideal_to_json, read_chart_spec, read_ideal, write_json,
)
from src.lifting import PrecisionExhausted

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

CHART_CASES = ('A', 'B', 'B1', 'Picard-I1', 'Orth')


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _prime(text):
    if text.upper() == 'Q':
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a prime or Q, got {text!r}")


def _index_set(text):
    return [t for t in text.split(',') if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--prime', type=_prime, default=3, help="3, 5, 7, 11 or Q (default 3)")
    common.add_argument('--budget-pairs', type=int, default=DEFAULT_MAX_PAIRS)
    common.add_argument('--budget-degree', type=int, default=DEFAULT_MAX_DEGREE)
    common.add_argument('--precision', type=int, default=None, help="u-adic precision (default 2n+2)")
    common.add_argument('--out', type=Path, default=None, help="output directory")
    common.add_argument('--seed', type=int, default=DEFAULT_SEED)

    parser = _Parser(prog='localmodels', description="Local models of unitary Shimura varieties.")
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    adm = sub.add_parser('admissible', parents=[common], help="list an admissible set")
    adm.add_argument('n', type=int)
    adm.add_argument('r', type=int)
    adm.add_argument('s', type=int)
    adm.add_argument('--index-set', type=_index_set, default=None,
                     help="comma separated vertex labels, e.g. 0,2 or 0,2' (default Iwahori)")
    adm.add_argument('--svg', action='store_true', help="also draw the alcoves (n ≤ 5)")

    chart = sub.add_parser('chart', parents=[common], help="write a chart ideal as JSON")
    chart.add_argument('case', choices=CHART_CASES, nargs='?')
    chart.add_argument('n', type=int, nargs='?')
    chart.add_argument('r', type=int, nargs='?')
    chart.add_argument('s', type=int, nargs='?')
    chart.add_argument('--level', choices=LEVELS, default='naive')
    chart.add_argument('--spec-file', type=Path, default=None,
                       help="chart spec JSON with case, n, r, s and level, instead of the positionals")

    flat = sub.add_parser('flatness', parents=[common], help="test an ideal JSON file for flatness")
    flat.add_argument('ideal_file', type=Path)
    flat.add_argument('--u', default=U, help="name of the uniformizer variable")

    verify = sub.add_parser('verify', parents=[common], help="run a verification suite")
    verify.add_argument('suite', choices=reports.SUITES)
    verify.add_argument('--jobs', type=int, default=1, help="worker processes")

    svg = sub.add_parser('svg', parents=[common], help="draw an admissible set as SVG")
    svg.add_argument('n', type=int)
    svg.add_argument('r', type=int)
    svg.add_argument('s', type=int)
    svg.add_argument('--index-set', type=_index_set, default=None)
    return parser


def config_from_args(args) -> RunConfig:
    return RunConfig(
        prime=args.prime,
        max_pairs=args.budget_pairs,
        max_degree=args.budget_degree,
        u_precision=args.precision,
        output_dir=args.out or get_output_dir(),
        seed=args.seed,
    )


def _labels(n, raw):
    if raw is None:
        return None, None
    index = weyl.parahoric_classify(n, raw)
    return index.labels, index


def _index_tag(labels):
    return '' if labels is None else '_I' + ''.join(map(str, sorted(labels)))


def cmd_admissible(args, config: RunConfig) -> int:
    labels, index = _labels(args.n, args.index_set)
    elements = (weyl.admissible_set(args.n, args.r, args.s) if labels is None
                else weyl.admissible_set_for(args.n, args.r, args.s, labels))
    extremes = set(weyl.extreme_elements(args.n, args.r, args.s))
    rows = []
    for w in sorted(elements, key=lambda w: (-weyl.length(w), w.t, w.perm, w.signs)):
        word, _ = weyl.reduced_word(w)
        rows.append({**element_to_json(w), 'length': weyl.length(w), 'extreme': w in extremes,
                     'word': [int(k) for k in word]})
    data = {
        'n': args.n, 'r': args.r, 's': args.s,
        'index_set': None if labels is None else sorted(labels),
        'index_note': None if index is None else index.note,
        'count': len(rows),
        'histogram': {str(k): v for k, v in weyl.length_histogram(elements).items()},
        'elements': rows,
    }
    stem = f"admissible_n{args.n}_{args.r}{args.s}{_index_tag(labels)}"
    path = write_json(data, config.output_dir / f"{stem}.json")
    print(f"✓ {len(rows)} elements → {path}")
    if args.svg:
        print(f"✓ Figure → {draw_admissible(args.n, args.r, args.s, labels, config.output_dir / f'{stem}.svg')}")
    return EXIT_OK


def _chart_spec(args) -> ChartSpec:
    given = [args.case, args.n, args.r, args.s]
    if args.spec_file is not None:
        if any(v is not None for v in given):
            raise UsageError("give either --spec-file or case n r s, not both")
        return read_chart_spec(args.spec_file)
    if any(v is None for v in given):
        raise UsageError("chart needs case n r s or --spec-file")
    return ChartSpec(args.case, args.n, args.r, args.s, args.level)


def cmd_chart(args, config: RunConfig) -> int:
    spec = _chart_spec(args)
    I = chart_ideal(spec, config.field())
    data = {**ideal_to_json(I), 'spec': chart_spec_to_json(spec)}
    path = write_json(data, config.output_dir / f"chart_{spec.case}_n{spec.n}_{spec.r}{spec.s}_{spec.level}.json")
    print(f"✓ {len(I.gens)} generators in {len(I.spec.names)} variables → {path}")
    return EXIT_OK


def cmd_flatness(args, config: RunConfig) -> int:
    I = read_ideal(args.ideal_file)
    verdict = is_flat_over_dvr(I, args.u, config.budget())
    data = {
        'ideal_file': args.ideal_file.name,
        'u': args.u,
        'flat': verdict.flat,
        'witness': None if verdict.witness is None else str(verdict.witness.as_expr()),
    }
    path = write_json(data, config.output_dir / f"flatness_{args.ideal_file.stem}.json")
    print(f"{'✓ flat' if verdict.flat else '⚠️  not flat'} → {path}")
    return EXIT_OK


def cmd_verify(args, config: RunConfig) -> int:
    print(f"Suite {args.suite}")
    print("=" * 60)
    claims = reports.run_suite(args.suite, config, jobs=args.jobs, verbose=True)
    path = reports.write_bundle(args.suite, config, claims)
    code = reports.exit_code(claims)
    print("=" * 60)
    print(f"Report → {path} (exit {code})")
    return code


def cmd_svg(args, config: RunConfig) -> int:
    labels, _ = _labels(args.n, args.index_set)
    stem = f"admissible_n{args.n}_{args.r}{args.s}{_index_tag(labels)}"
    path = draw_admissible(args.n, args.r, args.s, labels, config.output_dir / f"{stem}.svg")
    print(f"✓ Figure → {path}")
    return EXIT_OK


COMMANDS = {
    'admissible': cmd_admissible,
    'chart': cmd_chart,
    'flatness': cmd_flatness,
    'verify': cmd_verify,
    'svg': cmd_svg,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = config_from_args(args)
        return COMMANDS[args.command](args, config)
    except UsageError as e:
        print(f"localmodels: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        print(f"localmodels: invalid input: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExhausted, PrecisionExhausted) as e:
        print(f"localmodels: inconclusive: {e}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
