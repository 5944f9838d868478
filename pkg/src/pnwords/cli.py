"""Command line front end: generation, membership, prefix normal forms,
Gray code verification, statistics and benchmarking.

Words stream to stdout one per line.  Exit codes: 0 on success, 2 on
usage errors (bad words, out-of-range parameters), 1 when a verification
subcommand finds violations.
"""

import argparse
import sys
import time
from contextlib import nullcontext

from . import analysis, core, pnoracle
from .bubble import word_str


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _open_out(args):
    if getattr(args, "out", None):
        return open(args.out, "w")
    return nullcontext(sys.stdout)


def _cmd_generate(args):
    if args.cyclic and (args.weight is not None or args.algo == "simple"
                        or args.order != "coolex"):
        raise ValueError("--cyclic cannot be combined with --weight, --order or --algo simple")
    if args.algo == "simple" and (args.weight is not None or args.order != "coolex"):
        raise ValueError("--algo simple cannot be combined with --weight or --order")
    with _open_out(args) as out:
        write = out.write

        def sink(view):
            write(word_str(view))
            write("\n")

        if args.algo == "simple":
            pnoracle.simple_generate_pn(args.n, sink)
        elif args.cyclic:
            pnoracle.generate_all_pn_cyclic(args.n, sink)
        elif args.weight is not None:
            pnoracle.gen_bubble_pn(args.n, args.weight, sink, order=args.order)
        else:
            pnoracle.generate_all_pn(args.n, sink, order=args.order)
    return 0


def _cmd_count(args):
    print(analysis.count_pnw(args.n))
    return 0


def _cmd_member(args):
    word = core.parse_word(args.word)
    if args.algo == "two-phase":
        result = core.member_two_phase(word)
    else:
        result = core.is_prefix_normal(word)
    print("true" if result else "false")
    return 0


def _cmd_pnf(args):
    print(core.pnf(core.parse_word(args.word)))
    return 0


def _cmd_class(args):
    word = core.parse_word(args.word)
    members = analysis.equivalence_class(word, cap=args.cap)
    with _open_out(args) as out:
        for member in sorted(members, reverse=True):
            out.write(member + "\n")
    return 0


def _cmd_verify_gray(args):
    checker = analysis.GrayChecker(cyclic=args.cyclic)
    if args.stdin:
        count = 0
        for line in sys.stdin:
            checker.feed(core.parse_word(line))
            count += 1
    else:
        if args.n is None:
            raise ValueError("verify-gray needs --n or --stdin")
        count = 0

        def sink(view):
            nonlocal count
            count += 1
            checker.feed(word_str(view))

        if args.cyclic:
            pnoracle.generate_all_pn_cyclic(args.n, sink)
        else:
            pnoracle.generate_all_pn(args.n, sink)
    report = checker.finish()
    print(f"words={count} pairs={report.pairs} violations={len(report.violations)}")
    for v in report.violations:
        print(f"violation index={v.index} word={v.word} next={v.next_word} p={v.p} q={v.q}")
    return 0 if report.ok else 1


def _cmd_stats_cr(args):
    for stats in (analysis.cr_stats_all_words(args.n, cap=args.cap, jobs=args.jobs),
                  analysis.cr_stats_pn(args.n)):
        print(f"population={stats.population} n={stats.n} words={stats.count} "
              f"cr_total={stats.total} cr_mean={float(stats.mean)!r}")
    return 0


def _cmd_stats_ratio(args):
    report = analysis.rejection_ratio(args.n, args.mode, cap=args.cap, jobs=args.jobs)
    if args.csv:
        print(report.csv())
    else:
        print(f"n={report.n} mode={report.mode} rejected={report.rejected} "
              f"passed={report.passed} ratio={report.ratio}")
    return 0


def _cmd_stats_deficit(args):
    count, deficit = analysis.pnw_deficit(args.n)
    print(f"n={args.n} pnw={count} deficit={deficit!r}")
    return 0


def _cmd_stats_pnf_cr(args):
    stats = analysis.pnf_cr_sample(args.n, args.samples, args.seed)
    print(f"n={stats.n} samples={stats.count} seed={args.seed} "
          f"cr_total={stats.total} cr_mean={float(stats.mean)!r}")
    return 0


def _cmd_bench(args):
    if args.n_max < args.n_min:
        raise ValueError("--n-max must be >= --n-min")
    for n in range(args.n_min, args.n_max + 1):
        start = time.perf_counter()
        stats = pnoracle.generate_all_pn(n)  # counting sink: timing excludes output
        elapsed = time.perf_counter() - start
        rate = stats.count / elapsed if elapsed > 0 else float("inf")
        print(f"n={n} words={stats.count} seconds={elapsed:.6f} "
              f"words_per_sec={rate:.0f} membership_calls={stats.membership_calls} "
              f"symbol_reads={stats.symbol_reads} "
              f"reads_per_word={stats.reads_per_word:.4f} swaps={stats.swaps} "
              f"avg_cr={float(stats.avg_cr):.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pnwords",
        description="Generate, test and analyze prefix normal words.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="stream prefix normal words, one per line")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--weight", type=_non_negative, default=None,
                   help="only this weight class")
    p.add_argument("--cyclic", action="store_true",
                   help="cyclic Gray ordering (odd weights up, even weights down)")
    p.add_argument("--order", choices=("coolex", "visit-first"), default="coolex")
    p.add_argument("--algo", choices=("bubble", "simple"), default="bubble")
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("count", help="number of prefix normal words of length n")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("member", help="is the word prefix normal?")
    p.add_argument("word")
    p.add_argument("--algo", choices=("quadratic", "two-phase"), default="quadratic")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("pnf", help="prefix normal form of the word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_pnf)

    p = sub.add_parser("class", help="all words with this prefix normal form")
    p.add_argument("word")
    p.add_argument("--cap", type=_positive, default=analysis.DEFAULT_EXHAUSTIVE_CAP)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("verify-gray", help="check Gray closeness of a listing")
    p.add_argument("--n", type=_positive, default=None)
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--stdin", action="store_true",
                   help="read the listing from stdin instead of generating")
    p.set_defaults(func=_cmd_verify_gray)

    p = sub.add_parser("stats", help="critical prefix, rejection and count statistics")
    stats_sub = p.add_subparsers(dest="stat", required=True)

    q = stats_sub.add_parser("cr", help="critical prefix sums and means")
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--cap", type=_positive, default=analysis.DEFAULT_EXHAUSTIVE_CAP)
    q.add_argument("--jobs", type=_positive, default=1)
    q.set_defaults(func=_cmd_stats_cr)

    q = stats_sub.add_parser("ratio", help="linear-phase rejection ratio")
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--mode", choices=("trivial", "combined"), default="combined")
    q.add_argument("--cap", type=_positive, default=analysis.DEFAULT_EXHAUSTIVE_CAP)
    q.add_argument("--jobs", type=_positive, default=1)
    q.add_argument("--csv", action="store_true", help="emit n,rejected,passed,ratio")
    q.set_defaults(func=_cmd_stats_ratio)

    q = stats_sub.add_parser("deficit", help="n - log2(pnw(n))")
    q.add_argument("--n", type=_positive, required=True)
    q.set_defaults(func=_cmd_stats_deficit)

    q = stats_sub.add_parser("pnf-cr", help="critical prefix of prefix normal forms of random words")
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--samples", type=_positive, default=1000)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=_cmd_stats_pnf_cr)

    p = sub.add_parser("bench", help="generation throughput and amortized counters")
    p.add_argument("--n-min", type=_positive, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.set_defaults(func=_cmd_bench)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return exc.code
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (core.WordFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
