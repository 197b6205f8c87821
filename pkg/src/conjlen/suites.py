"""The acceptance suites: each yields records ``{suite, check, passed, detail, seconds}``.

Every suite is deterministic given the Config (its ``seed`` drives all
random choices).  ``run_suite("all")`` runs them in order.
"""

import itertools
import json
import random
import time
from fractions import Fraction
from math import gcd
from pathlib import Path

from .centralizer import best_conjugator_G, centralizer_G, decompose
from .config import Config
from .conjugacy import conjugate_in_Lambda
from .diophantine import bezout_bounded, bezout_lcm, multi_bezout
from .errors import ResourceError, Undecided
from .experiments import commutator_witness, experiment_cl_family
from .hierarchy import (FreeSolver, FiniteSolver, Presentation, ackermann,
                        hydra_presentation, lambda_presentation, mihailova_check)
from .normal_form import LambdaGroup
from .oracle import ball, centralizer_ball, element_key, min_conjugator
from .words import free_reduce, invert

GOLDEN_DIR = Path(__file__).resolve().parents[2] / "tests" / "golden"


class _Recorder:
    def __init__(self, suite):
        self.suite = suite
        self.records = []
        self.start = time.perf_counter()

    def add(self, check, passed, detail=""):
        self.records.append({
            "suite": self.suite,
            "check": check,
            "passed": bool(passed),
            "detail": detail,
            "seconds": round(time.perf_counter() - self.start, 3),
        })

    def time_limit(self, limit):
        took = time.perf_counter() - self.start
        self.add("runtime", took < limit, f"{took:.1f} s (limit {limit} s)")


def _random_word(rng, letters, length):
    return free_reduce(rng.choice(letters) * rng.choice((1, -1)) for _ in range(length))


# 1 ------------------------------------------------------------------------------

def suite_bezout_grid(G, cfg):
    rec = _Recorder("bezout-grid")
    bad = []
    count = 0
    for a in range(-20, 21):
        for b in range(-20, 21):
            if not a or not b:
                continue
            d = gcd(a, b)
            lcm = abs(a * b) // d
            for c in range(-40, 41):
                count += 1
                sol = bezout_bounded(a, b, c)
                alt = bezout_lcm(a, b, c)
                if (sol is None) != (c % d != 0) or (alt is None) != (sol is None):
                    bad.append((a, b, c, "solvability"))
                    continue
                if sol is None:
                    continue
                x, y = sol.values
                ok = (a * x + b * y == c
                      and abs(x) <= Fraction(abs(b), d)
                      and abs(y) <= max(abs(Fraction(c, b)), Fraction(abs(a), d))
                      and alt.values == sol.values
                      and abs(a * x) <= lcm and abs(b * y) <= max(abs(c), lcm))
                if not ok:
                    bad.append((a, b, c, sol.values))
    rec.add("two-variable grid", not bad, f"{count} triples, {len(bad)} failures {bad[:3]}")

    boxes = [(1, 20, 40), (2, 20, 40), (3, 8, 16), (4, 4, 8)]
    for m, amax, cmax in boxes:
        bad = []
        count = 0
        for coeffs in itertools.product(range(-amax, amax + 1), repeat=m):
            g = gcd(*coeffs)
            bound = max(max(map(abs, coeffs)), 0)
            for c in range(-cmax, cmax + 1):
                count += 1
                sol = multi_bezout(coeffs, c)
                solvable = c == 0 if g == 0 else c % g == 0
                if (sol is not None) != solvable:
                    bad.append((coeffs, c, "solvability"))
                    continue
                if sol is None:
                    continue
                lim = max(bound, abs(c))
                if (sum(a * x for a, x in zip(coeffs, sol.values)) != c
                        or any(abs(x) > lim for x in sol.values)):
                    bad.append((coeffs, c, sol.values))
        rec.add(f"multivariate m={m} |a|<={amax} |c|<={cmax}", not bad,
                f"{count} instances, {len(bad)} failures {bad[:3]}")
    rec.time_limit(30)
    return rec.records


# 2 ------------------------------------------------------------------------------

def _lambda_relators(G):
    return [tuple(r) for r in lambda_presentation(G.phi).relators]


def suite_normal_form(G, cfg):
    rec = _Recorder("normal-form")
    rng = random.Random(cfg.seed)
    letters = sorted(G.allowed("L"))
    relators = _lambda_relators(G)
    bad = 0
    for _ in range(200):
        w = _random_word(rng, letters, rng.randint(0, 20))
        r = rng.choice(relators)
        if rng.random() < 0.5:
            r = invert(r)
        i = rng.randint(0, len(w))
        if G.normalize(w) != G.normalize(w[:i] + r + w[i:]):
            bad += 1
    rec.add("200 relator insertions", bad == 0, f"{bad} changed normal forms")

    def agree(w):
        x = G.normalize(w)
        y = G.normalize(w, abelian=True)
        vec = [0] * G.m
        for z in x.f:
            vec[abs(z) - 1] += 1 if z > 0 else -1
        return (x.alpha, x.e, x.n) == (y.alpha, y.e, y.n) and tuple(vec) == x.alpha

    sub = (1, G.S, G.T)
    bad = count = 0
    for n in range(13):
        for w in itertools.product(sub, repeat=n):
            count += 1
            if not agree(w):
                bad += 1
    rec.add("exhaustive agreement over a1, s, t up to length 12", bad == 0,
            f"{count} words, {bad} disagreements")

    bad = 0
    for _ in range(500):
        if not agree(_random_word(rng, letters, rng.randint(0, 25))):
            bad += 1
    rec.add("500 random words of length <= 25", bad == 0, f"{bad} disagreements")
    rec.time_limit(60)
    return rec.records


# 3 ------------------------------------------------------------------------------

def _stretch_by_matrix(G, n):
    """Exponent sum of phi^n(a1), by repeated multiplication of the images' exponent table."""
    m = G.m
    table = [[0] * m for _ in range(m)]
    for i, img in enumerate(G.phi.images):
        for x in img:
            table[abs(x) - 1][i] += 1 if x > 0 else -1
    vec = [1] + [0] * (m - 1)
    for _ in range(n):
        vec = [sum(table[r][c] * vec[c] for c in range(m)) for r in range(m)]
    return sum(vec)


def suite_distortion_witness(G, cfg):
    rec = _Recorder("distortion-witness")
    bad = []
    for n in range(21):
        x = G.normalize(commutator_witness(G, n))
        if x.f or x.e or x.n != _stretch_by_matrix(G, n):
            bad.append((n, x.n))
    rec.add("[t, s^-n a1 s^n] = l^f(n) for n <= 20", not bad, f"mismatches {bad}")

    ratios = [Fraction(_stretch_by_matrix(G, n + 1), _stretch_by_matrix(G, n)) for n in range(8, 41)]
    lo, hi = min(ratios), max(ratios)
    rec.add("f(n+1)/f(n) in [1.7, 1.95] for 8 <= n <= 40",
            Fraction(17, 10) <= lo and hi <= Fraction(195, 100),
            f"range [{float(lo):.4f}, {float(hi):.4f}]")

    rng = random.Random(cfg.seed + 3)
    letters = sorted(G.allowed("L"))
    C = G.phi.growth
    violations = []
    refined = 0
    for _ in range(1000):
        w = _random_word(rng, letters, rng.randint(1, 20))
        N = G.normalize(w).n
        stripped, ell = G.strip_lambda(w)
        alpha = sum(1 for z in w if G.is_a(z))
        Sigma = G.Sigma(stripped)
        if abs(N) > abs(ell) + alpha * C ** Sigma:
            violations.append(G.format(w))
        # every a-letter meets each t-letter at most once while the t's move right
        t_count = sum(1 for z in w if abs(z) == G.T)
        if abs(N) > abs(ell) + alpha * t_count * C ** Sigma:
            refined += 1
    rec.add("|N| <= |l| + alpha C^Sigma on 1000 random words", not violations,
            f"C={C}; {len(violations)} violations, e.g. {violations[:3]}; "
            f"with a factor for the number of t-letters: {refined} violations")
    rec.time_limit(60)
    return rec.records


# 4 ------------------------------------------------------------------------------

REPRESENTATIVES = {
    "A": ["1", "l", "s a1 s^-1 a1 a2 a3^-1", "t a1 t^-1 a1^-1 l", "s^-1 a1 s a2^-1"],
    "B": ["t", "t^2", "s^-1 t s", "t s t^-1 s^-1", "t^-1 s^2 t s^-2"],
    "C": ["a1", "a1 a2", "a2^3", "a1 a2^-1 a3", "s^-1 a1 a2 s"],
    "D": ["a1 t", "a1 t^2", "a2 t^-1", "a1 a2 t s t^-1 s^-1", "a1 s^-1 t s"],
    "E": ["s", "s^2", "a1 s", "s t", "a1 s t"],
}


def suite_centralizer(G, cfg, radius=4):
    rec = _Recorder("centralizer-vs-oracle")
    index = ball(G, "G", radius, cfg.oracle_nodes)
    for case, words in REPRESENTATIVES.items():
        for text in words:
            u = G.parse(text)
            desc = centralizer_G(G, u, cfg)
            got = decompose(G, u).case
            oracle = centralizer_ball(G, G.strip_lambda(u)[0], radius, cfg.oracle_nodes)
            predicted = {key for key, _, g in index.items(radius) if desc.contains(G, g)}
            commute = all(G.conjugates_in(u, w, u, "G")[0] for _, w in desc.generators(G))
            rec.add(f"case {case}: {text}", got == case and commute and oracle == predicted,
                    f"classified {got}; {desc.describe(G)}; oracle {len(oracle)}, "
                    f"predicted {len(predicted)}, symmetric difference {len(oracle ^ predicted)}")
    u = G.parse("a1 t")
    expected = set()
    for p in range(-radius, radius + 1):
        for q in range(-(radius - abs(p)), radius - abs(p) + 1):
            w = ((1,) * p if p >= 0 else (-1,) * -p) + ((G.T,) * q if q >= 0 else (-G.T,) * -q)
            expected.add(element_key(G.normalize(w), "G"))
    oracle = centralizer_ball(G, u, radius, cfg.oracle_nodes)
    rec.add("Z(a1 t) in the ball is {a1^p t^q : |p| + |q| <= 4}", oracle == expected,
            f"oracle {len(oracle)}, expected {len(expected)}")
    rec.time_limit(600)
    return rec.records


# 5 ------------------------------------------------------------------------------

def random_conjugate_pair(G, rng, v_len=8, g_len=6):
    letters = sorted(G.allowed("L"))
    v = _random_word(rng, letters, rng.randint(1, v_len))
    g = _random_word(rng, letters, rng.randint(0, g_len))
    return free_reduce(g + v + invert(g)), v


def suite_conjugacy_roundtrip(G, cfg, pairs=300):
    rec = _Recorder("conjugacy-roundtrip")
    rng = random.Random(cfg.seed + 5)
    undecided = wrong = 0
    failures = []
    for _ in range(pairs):
        u, v = random_conjugate_pair(G, rng)
        res = conjugate_in_Lambda(G, u, v, cfg)
        if res.status == "undecided":
            undecided += 1
            failures.append(G.format(u) + " ~ " + G.format(v))
        elif res.status != "conjugate" or not res.certificate.ok:
            wrong += 1
            failures.append(G.format(u) + " ~ " + G.format(v))
    rec.add(f"{pairs} random conjugate pairs", undecided == 0 and wrong == 0,
            f"{wrong} wrong, {undecided} undecided {failures[:3]}")
    rec.time_limit(30 * 60)
    return rec.records


def _reduced_words(letters, length):
    layer = [()]
    out = [()]
    for _ in range(length):
        layer = [w + (x,) for w in layer for s in (1, -1) for x in [s * y for y in letters]
                 if not w or w[-1] != -x]
        out.extend(layer)
    return out


def suite_conjugacy_oracle(G, cfg, total=4, radius=6):
    rec = _Recorder("conjugacy-oracle")
    words = _reduced_words([1, G.S, G.T, G.L], total)
    pairs = undecided = 0
    disagreements = []
    counts = {"conjugate": 0, "not-conjugate": 0}
    for u in words:
        for v in words:
            if len(u) + len(v) > total:
                continue
            pairs += 1
            res = conjugate_in_Lambda(G, u, v, cfg)
            if res.status == "undecided":
                undecided += 1
                continue
            counts[res.status] += 1
            hit = min_conjugator(G, "L", u, v, radius, cfg.oracle_nodes)
            if res.status == "conjugate":
                ok = res.certificate.ok
            else:
                ok = hit is None
            if not ok:
                disagreements.append(f"{G.format(u)} ~ {G.format(v)}: {res.status}, oracle {hit}")
    rec.add(f"all pairs with |u| + |v| <= {total} against the radius-{radius} oracle",
            not disagreements,
            f"{pairs} pairs, {counts['conjugate']} conjugate, {counts['not-conjugate']} not, "
            f"{undecided} undecided (excluded), {len(disagreements)} disagreements {disagreements[:3]}")
    rec.time_limit(30 * 60)
    return rec.records


# 6 ------------------------------------------------------------------------------

def suite_cl_family(G, cfg, n_max=14):
    rec = _Recorder("cl-family")
    rows = experiment_cl_family(G, n_max, cfg)
    for r in rows:
        rec.add(f"n={r['n']}",
                r["constructed"] <= r["f"] and r["certified"] == "certified"
                and 2 * r["lower_bound"] >= r["f"] and r["lower_bound"] <= r["constructed"],
                f"f={r['f']} constructed={r['constructed']} lower={r['lower_bound']} "
                f"exact={r['exact']} certificate={r['certified']}")
    for col in ("constructed", "lower_bound"):
        ratios = [rows[i + 1][col] / rows[i][col] for i in range(len(rows) - 1) if rows[i]["n"] >= 8]
        rec.add(f"{col} ratios beyond n=8 in [1.7, 1.95]",
                all(1.7 <= x <= 1.95 for x in ratios), f"{[round(x, 4) for x in ratios]}")
    return rec.records


# 7 ------------------------------------------------------------------------------

def random_case_e_pair(G, rng, n_max=24):
    """(u, v) conjugate in G with u in case E and |u| + |v| <= n_max."""
    gens = sorted(G.allowed("G"))
    while True:
        u = _random_word(rng, gens, rng.randint(2, 8))
        parts = decompose(G, u)
        if parts.case != "E":
            continue
        g = _random_word(rng, gens, rng.randint(1, 6))
        v = free_reduce(invert(g) + u + g)
        if len(u) + len(v) <= n_max:
            return u, v


def fitted_constant(stats):
    return max(max(Fraction(length, n * n), Fraction(Sigma, n)) for n, length, Sigma in stats)


def suite_best_conjugator(G, cfg, batch=50):
    rec = _Recorder("best-conjugator")
    rng = random.Random(cfg.seed + 7)
    batches = []
    skipped = 0
    for _ in range(2):
        stats = []
        while len(stats) < batch:
            u, v = random_case_e_pair(G, rng)
            try:
                best = best_conjugator_G(G, u, v, cfg)
            except Undecided:
                skipped += 1
                continue
            if best is None:
                rec.add("conjugate pair recognised", False, f"{G.format(u)} ~ {G.format(v)}")
                continue
            stats.append((len(u) + len(v), best.length, best.Sigma))
        batches.append(stats)
    c1, c2 = (fitted_constant(s) for s in batches)
    for i, (stats, c) in enumerate(zip(batches, (c1, c2)), 1):
        ok = all(length <= c * n * n and Sigma <= c * n for n, length, Sigma in stats)
        rec.add(f"batch {i}: |w| <= C n^2 and Sigma(w) <= C n", ok, f"C = {float(c):.4f}")
    spread = abs(c1 - c2) / max(c1, c2)
    rec.add("fitted constant stable within 20%", spread <= Fraction(1, 5),
            f"C1={float(c1):.4f} C2={float(c2):.4f} relative difference {float(spread):.3f}; "
            f"{skipped} undecided pairs redrawn")
    return rec.records


# 8 ------------------------------------------------------------------------------

def unfolded_ackermann(k, n):
    """A_k(n) by unfolding A_{k+1}(n + 1) = A_k(A_{k+1}(n)) down to level 1,
    where A_1(n) = 2n stands in for a recursion of depth n."""
    if k == 0:
        return n + 2
    if k == 1:
        return 2 * n
    value = 2
    for _ in range(n):
        value = unfolded_ackermann(k - 1, value)
    return value


def suite_hierarchy(G, cfg, golden_dir=None, mihailova_radius=5):
    rec = _Recorder("hierarchy")
    rec.add("A_0(n) = n + 2 for n <= 100", all(ackermann(0, n) == n + 2 for n in range(101)))
    rec.add("A_1(n) = 2n for n <= 100", all(ackermann(1, n) == 2 * n for n in range(101)))
    unfolded = unfolded_ackermann(3, 3)
    value = ackermann(3, 3)
    rec.add("A_3(3) = 65536, matching the unfolded recursion", value == 65536 and unfolded == value,
            f"ackermann(3, 3) = 2^{value.bit_length() - 1}, unfolded = 2^{unfolded.bit_length() - 1}")

    golden_dir = Path(golden_dir) if golden_dir else GOLDEN_DIR
    for name, pres in (("hydra1", hydra_presentation(1)), ("hydra3", hydra_presentation(3)),
                       ("lambda", lambda_presentation(G.phi))):
        path = golden_dir / f"{name}.txt"
        if not path.exists():
            rec.add(f"{name} matches golden file", False, f"missing {path}")
            continue
        rec.add(f"{name} matches golden file", path.read_bytes() == pres.dumps().encode())

    klein = Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2, 1, 2)))
    free = Presentation(("a", "b"), ())
    for label, pres, solver in (("Klein four", klein, FiniteSolver(klein)),
                                ("free rank 2", free, FreeSolver(free))):
        try:
            report = mihailova_check(pres, solver, max_len=2, ball_radius=mihailova_radius,
                                     rng=random.Random(cfg.seed))
        except ResourceError as exc:
            rec.add(f"mihailova {label}", False, str(exc))
            continue
        rec.add(f"mihailova {label}: soundness", report.soundness, f"ball of {report.ball_size} pairs")
        rec.add(f"mihailova {label}: w = 1 conjugacy",
                all(ok for _, _, ok in report.positive), f"{len(report.positive)} checks")
        rec.add(f"mihailova {label}: w != 1 consistent (bounded)",
                not any(hit for _, _, hit in report.negative), f"{len(report.negative)} probes")
    rec.time_limit(300)
    return rec.records


# dispatch -----------------------------------------------------------------------

SUITES = {
    "bezout-grid": suite_bezout_grid,
    "normal-form": suite_normal_form,
    "distortion-witness": suite_distortion_witness,
    "centralizer-vs-oracle": suite_centralizer,
    "conjugacy-roundtrip": suite_conjugacy_roundtrip,
    "conjugacy-oracle": suite_conjugacy_oracle,
    "cl-family": suite_cl_family,
    "best-conjugator": suite_best_conjugator,
    "hierarchy": suite_hierarchy,
}


def run_suite(name, cfg=None, G=None):
    """Records of one suite, or of all of them for ``name == "all"``."""
    cfg = cfg or Config()
    G = G or LambdaGroup(word_budget=cfg.word_budget)
    if name == "all":
        return [r for n in SUITES for r in run_suite(n, cfg, G)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; expected one of {', '.join(['all', *SUITES])}")
    return SUITES[name](G, cfg)


def to_jsonl(records):
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


def suite_passed(records):
    return all(r["passed"] for r in records)
