"""Command-line front end.  Exit codes: 0 ok, 1 failed suite, 2 undecided,
3 resource limit, 4 bad input."""

import argparse
import json
import os
import random
import sys
import tempfile

from . import experiments, oracle
from .automorphism import builtin_automorphism, load_aut
from .centralizer import best_conjugator_G, centralizer_G, conjugator_family_G
from .config import Deadline, load_config
from .conjugacy import conjugate
from .diophantine import bezout_bounded, bezout_lcm, multi_bezout
from .errors import ConjlenError, DomainError, MalformedInput, NotAnAutomorphism, ResourceError, Undecided
from .hierarchy import Presentation, ackermann, hydra_presentation, lambda_presentation, mihailova_check
from .normal_form import LambdaGroup, PowerWord
from .suites import SUITES, run_suite, suite_passed, to_jsonl

EXIT_OK, EXIT_FAILED, EXIT_UNDECIDED, EXIT_RESOURCE, EXIT_INPUT = 0, 1, 2, 3, 4


def _write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _emit_rows(args, rows):
    text = experiments.to_csv(rows)
    if args.csv:
        _write_atomic(args.csv, text)
        print(f"wrote {len(rows)} rows to {args.csv}")
    else:
        sys.stdout.write(text)


def _int_list(text):
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise MalformedInput(f"expected integers, got {text!r}") from exc


# commands ----------------------------------------------------------------------

def cmd_nf(args, G, cfg):
    word = G.parse(args.word, args.group)
    x = G.normalize(word, abelian=args.abelian)
    print(G.format_element(x, args.group))


def cmd_sigma(args, G, cfg):
    word = G.parse(args.word)
    print(f"sigma: {G.sigma(word)}  Sigma: {G.Sigma(word)}")


def cmd_defect(args, G, cfg):
    u, w, v = (G.parse(x) for x in (args.u, args.w, args.v))
    n = G.lambda_defect(u, w, v)
    if n is None:
        raise DomainError("u w != w v already in G; no central defect")
    print(f"N: {n}")


def _format_w(G, w):
    return G.format_power(w) if isinstance(w, PowerWord) else G.format(w)


def cmd_conj(args, G, cfg):
    u, v = G.parse(args.u, args.group), G.parse(args.v, args.group)
    res = conjugate(G, u, v, args.group, cfg, Deadline(cfg.deadline_ms))
    if res.status == "conjugate":
        print(f"conjugate{' (case ' + res.case + ')' if res.case else ''}: w = {_format_w(G, res.w)}")
        if res.certificate is not None:
            print(f"certificate: {res.certificate.label}")
            if args.emit_cert:
                for line in res.certificate.transcript:
                    print("  " + line)
        if args.emit_cert and res.constants.as_dict():
            print("constants: " + json.dumps(res.constants.as_dict()))
        return EXIT_OK
    if res.status == "not-conjugate":
        print(f"not conjugate: {res.reason}")
        if args.emit_cert and res.constants.as_dict():
            print("constants: " + json.dumps(res.constants.as_dict()))
        return EXIT_OK
    print(f"undecided (radius {res.radius}): {res.reason}")
    return EXIT_UNDECIDED


def cmd_centralizer(args, G, cfg):
    desc = centralizer_G(G, G.parse(args.u), cfg, Deadline(cfg.deadline_ms))
    print(f"case {desc.tag}")
    for label, w in desc.generators(G):
        print(f"  {label}: {_format_w(G, w)}")


def cmd_conjfamily(args, G, cfg):
    u, v = G.parse(args.u), G.parse(args.v)
    fam = conjugator_family_G(G, u, v, cfg, Deadline(cfg.deadline_ms))
    if fam is None:
        print("not conjugate in G")
        return
    print(f"case {fam.case}{'' if fam.complete else ' (finite-index part only)'}")
    print(f"  base: {_format_w(G, fam.base)}")
    for key, root in fam.roots.items():
        print(f"  root_{key}: {_format_w(G, root)}")
    print(f"  members: {fam.params_help[fam.case]}")
    rng = random.Random(cfg.seed)
    for w in fam.sample(G, rng, count=args.samples):
        ok, _ = G.conjugates_in(u, w, v, "G")
        print(f"  sample {_format_w(G, w)}  [{'ok' if ok else 'FAILED'}]")


def cmd_bestconj(args, G, cfg):
    best = best_conjugator_G(G, G.parse(args.u), G.parse(args.v), cfg, Deadline(cfg.deadline_ms))
    if best is None:
        print("not conjugate in G")
        return
    print(f"w = {_format_w(G, best.word)}")
    print(f"|w| = {best.length}  Sigma(w) = {best.Sigma}  sigma(w) = {best.sigma}")


def _print_solution(sol):
    if sol is None:
        print("no solution")
        return
    print("solution: " + " ".join(map(str, sol.values)))
    print("bounds:   " + " ".join(str(b) for b in sol.bounds))


def cmd_bezout(args, G, cfg):
    _print_solution(bezout_bounded(args.a, args.b, args.c))


def cmd_bezout_lcm(args, G, cfg):
    _print_solution(bezout_lcm(args.a, args.b, args.c))


def cmd_bezout_multi(args, G, cfg):
    _print_solution(multi_bezout(_int_list(args.coeffs), args.c))


def cmd_oracle(args, G, cfg):
    radius = args.radius if args.radius is not None else 3
    if args.what == "ball":
        index = oracle.ball(G, args.group, radius, cfg.oracle_nodes)
        rows = [{"radius": r, "sphere": len(layer), "ball": sum(map(len, index.layers[:r + 1]))}
                for r, layer in enumerate(index.layers[:radius + 1])]
        _emit_rows(args, rows)
    elif args.what == "cl":
        if len(args.words) != 2:
            raise MalformedInput("oracle cl needs two words")
        u, v = (G.parse(x, args.group) for x in args.words)
        hit = oracle.min_conjugator(G, args.group, u, v, radius, cfg.oracle_nodes)
        if hit is None:
            print(f"no conjugator of length <= {radius}: CL(u, v) > {radius}")
        else:
            print(f"CL(u, v) = {hit[1]}  w = {G.format(hit[0])}")
    else:
        _emit_rows(args, oracle.distortion_scan(G, radius, cfg.oracle_nodes))


def cmd_ack(args, G, cfg):
    value = ackermann(args.k, args.n)
    if value.bit_length() <= 4096:
        print(value)
    elif value & (value - 1) == 0:
        print(f"2^{value.bit_length() - 1}")
    else:
        print(f"<{value.bit_length()}-bit integer>")


def cmd_hydra(args, G, cfg):
    sys.stdout.write(hydra_presentation(args.k).dumps())


def cmd_lambda(args, G, cfg):
    sys.stdout.write(lambda_presentation(G.phi).dumps())


def cmd_mihailova(args, G, cfg):
    pres = Presentation.load(args.file)
    radius = args.radius if args.radius is not None else 4
    report = mihailova_check(pres, max_len=args.max_len, ball_radius=radius,
                             rng=random.Random(cfg.seed))
    rows = list(report.rows())
    if args.csv:
        _emit_rows(args, rows)
    else:
        for row in rows:
            print(f"{row['check']:<28} w={row['w'] or '-':<8} r={row['r'] or '-':<12} {row['result']}")
    print(f"ball of {report.ball_size} pairs; {'passed' if report.passed else 'FAILED'}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_exp_distortion(args, G, cfg):
    _emit_rows(args, experiments.experiment_distortion(G, args.n_max, cfg))


def cmd_exp_clfamily(args, G, cfg):
    _emit_rows(args, experiments.experiment_cl_family(G, args.n_max, cfg))


def cmd_suite(args, G, cfg):
    records = run_suite(args.name, cfg, G)
    text = to_jsonl(records)
    if args.csv:
        _write_atomic(args.csv, text)
    sys.stdout.write(text)
    return EXIT_OK if suite_passed(records) else EXIT_FAILED


# parser ----------------------------------------------------------------------------

def build_parser():
    # SUPPRESS keeps a flag given before the subcommand from being reset by the
    # subparser's copy of the same option
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--phi", help="automorphism file (default: built-in, m = 3)")
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--seed", type=int)
    common.add_argument("--csv", help="write CSV (or JSON lines for suites) to this path")
    common.add_argument("--radius", type=int)
    common.add_argument("--deadline-ms", type=int)
    common.add_argument("--assume-atoroidal", action="store_true")

    parser = argparse.ArgumentParser(prog="conjlen", parents=[common],
                                     description="Computation in free-by-free groups and their central extension.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    groups = ("F", "E", "H", "G", "L")
    p = add("nf", cmd_nf, "normal form of a word")
    p.add_argument("word")
    p.add_argument("--group", choices=groups, default="L")
    p.add_argument("--abelian", action="store_true", help="skip the F-part")
    add("sigma", cmd_sigma, "s-exponent and max prefix s-exponent").add_argument("word")
    p = add("defect", cmd_defect, "N with u w = w v l^N")
    p.add_argument("u"); p.add_argument("w"); p.add_argument("v")
    p = add("conj", cmd_conj, "decide conjugacy")
    p.add_argument("u"); p.add_argument("v")
    p.add_argument("--group", choices=groups, default="L")
    p.add_argument("--emit-cert", action="store_true")
    add("centralizer", cmd_centralizer, "centralizer in G").add_argument("u")
    p = add("conjfamily", cmd_conjfamily, "all conjugators in G")
    p.add_argument("u"); p.add_argument("v")
    p.add_argument("--samples", type=int, default=3)
    p = add("bestconj", cmd_bestconj, "bounded conjugator for sigma(u) != 0")
    p.add_argument("u"); p.add_argument("v")
    for name, func in (("bezout", cmd_bezout), ("bezout-lcm", cmd_bezout_lcm)):
        p = add(name, func, "solve a x + b y = c with bounds")
        for x in "abc":
            p.add_argument(x, type=int)
    p = add("bezout-multi", cmd_bezout_multi, "solve sum a_i x_i = c with bounds")
    p.add_argument("coeffs", help="comma-separated coefficients")
    p.add_argument("c", type=int)
    p = add("oracle", cmd_oracle, "brute-force balls, conjugator lengths, distortion")
    p.add_argument("what", choices=("ball", "cl", "distortion"))
    p.add_argument("words", nargs="*")
    p.add_argument("--group", choices=groups, default="L")
    p = add("ack", cmd_ack, "Ackermann function A_k(n)")
    p.add_argument("k", type=int); p.add_argument("n", type=int)
    add("hydra", cmd_hydra, "hydra presentation").add_argument("k", type=int)
    add("lambda", cmd_lambda, "presentation of the central extension")
    p = add("mihailova", cmd_mihailova, "bounded fibre-product checks")
    p.add_argument("file")
    p.add_argument("--check", action="store_true", help="run the checks (the default)")
    p.add_argument("--max-len", type=int, default=2)
    add("exp-distortion", cmd_exp_distortion, "distortion table").add_argument("n_max", type=int)
    add("exp-clfamily", cmd_exp_clfamily, "conjugator lengths along the family").add_argument("n_max", type=int)
    add("suite", cmd_suite, "acceptance suites").add_argument("name", choices=["all", *SUITES])
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("phi", "config", "seed", "csv", "radius", "deadline_ms"):
        if not hasattr(args, name):
            setattr(args, name, None)
    args.assume_atoroidal = getattr(args, "assume_atoroidal", False)
    try:
        cfg = load_config(args.config, seed=args.seed, deadline_ms=args.deadline_ms,
                          phi_path=args.phi,
                          assume_atoroidal=True if args.assume_atoroidal else None)
        phi = load_aut(cfg.phi_path, cfg.word_budget) if cfg.phi_path else builtin_automorphism(3)
        G = LambdaGroup(phi, cfg.word_budget)
        code = args.func(args, G, cfg)
        return EXIT_OK if code is None else code
    except Undecided as exc:
        print(f"undecided (radius {exc.radius}): {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except ResourceError as exc:
        extra = f" (achieved {exc.achieved})" if exc.achieved is not None else ""
        print(f"resource limit: {exc}{extra}", file=sys.stderr)
        return EXIT_RESOURCE
    except (MalformedInput, DomainError, NotAnAutomorphism) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ConjlenError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
