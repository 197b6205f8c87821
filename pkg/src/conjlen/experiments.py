"""The two growth experiments: distortion of <l> in Lambda, and conjugator
lengths along the family a1 t l^f(n) ~ a1 t.
"""

import csv
import io
import math
import time
from fractions import Fraction

from .config import Config
from .conjugacy import conjugate_in_Lambda
from .errors import ResourceError
from .oracle import distortion_scan, geodesic_length, min_conjugator, witness_lower


def commutator_witness(G, n, i=1):
    """The word [t, s^-n a_i s^n], of length 4n + 4, equal to l^f(n)."""
    S, T = G.S, G.T
    x = (-S,) * n + (i,) + (S,) * n
    return (-T,) + tuple(-y for y in reversed(x)) + (T,) + x


def experiment_distortion(G, n_max, cfg=None):
    """Rows n, witness lower bound, upper bound from the shuffling lemma, exact value.

    A word of length n equal to l^N has s-exponent 0, so every prefix has
    |sigma| <= n/2.  Each a-letter passes each t-letter at most once, twisted
    by phi^k with |k| <= n/2, and there are at most n^2/4 such meetings:
    |N| <= n + (n^2 // 4) C^(n // 2), C the longest image of a generator under
    phi or its inverse.
    """
    cfg = cfg or Config()
    exact = {row["n"]: row["exact_or_bound"] for row in distortion_scan(G, n_max, cfg.oracle_nodes)}
    C = G.phi.growth
    rows = []
    for n in range(1, n_max + 1):
        rows.append({
            "n": n,
            "witness_lower": witness_lower(G, n),
            "upper_bound": n + (n * n // 4) * C ** (n // 2),
            "exact": exact.get(n),
        })
    return rows


def fit_h_constant(G, radius, cfg=None):
    """(C_H, lengths): min over 1 <= p <= radius of |a1^p|_H / p, from the exact H-ball."""
    cfg = cfg or Config()
    lengths = {}
    for p in range(1, radius + 1):
        try:
            d = geodesic_length(G, "H", (1,) * p, radius, cfg.oracle_nodes)
        except ResourceError:
            break
        if d is None:
            break
        lengths[p] = d
    if not lengths:
        return Fraction(1), lengths
    return min(Fraction(d, p) for p, d in lengths.items()), lengths


def family_lower_bound(f, h_lengths, c_h):
    """min over p of max(|p + f|, |a1^p|_H), with |a1^p|_H exact where known and
    c_h |p| beyond.  For |p| > 2f the first term already exceeds f.  Lengths
    are integers, so the bound is rounded up."""
    best = f
    for p in range(-2 * f, 2 * f + 1):
        h = h_lengths.get(abs(p), c_h * abs(p)) if p else 0
        best = min(best, max(abs(p + f), h))
    return math.ceil(best)


def experiment_cl_family(G, n_max, cfg=None, h_radius=6, oracle_radius=4):
    """Rows for u_n = a1 t [t, s^-n a1 s^n] against v_n = a1 t."""
    cfg = cfg or Config()
    c_h, h_lengths = fit_h_constant(G, h_radius, cfg)
    rows = []
    for n in range(1, n_max + 1):
        start = time.perf_counter()
        f = G.phi.stretch(1, n)
        u = (1, G.T) + commutator_witness(G, n)
        v = (1, G.T)
        res = conjugate_in_Lambda(G, u, v, cfg)
        if res.status != "conjugate":
            raise AssertionError(f"family member n={n} not recognised as conjugate: {res}")
        built = len(res.w)
        exact = None
        if f <= oracle_radius:
            hit = min_conjugator(G, "L", u, v, oracle_radius, cfg.oracle_nodes)
            exact = hit[1] if hit else None
        rows.append({
            "n": n,
            "input_length": len(u) + len(v),
            "f": f,
            "constructed": built,
            "certified": res.certificate.label,
            "lower_bound": family_lower_bound(f, h_lengths, c_h),
            "c_h": float(c_h),
            "exact": exact,
            "log2f_over_n": round(math.log2(f) / n, 6),
            "seconds": round(time.perf_counter() - start, 3),
        })
    return rows


def to_csv(rows):
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    return buf.getvalue()
