"""Ackermann functions, hydra and Lambda presentations, and the fibre-product
generators of a presentation with bounded checks of their defining properties.
"""

import random
from dataclasses import dataclass
from pathlib import Path

from .automorphism import builtin_automorphism
from .errors import MalformedInput, ResourceError
from .words import Alphabet, free_reduce, invert, max_root_free, multiply

# ackermann ------------------------------------------------------------------------

DEFAULT_MAX_BITS = 1 << 20
DEFAULT_MAX_STEPS = 1 << 20


def ackermann(k, n, max_bits=DEFAULT_MAX_BITS, max_steps=DEFAULT_MAX_STEPS):
    """A_k(n) from A_0(n) = n + 2, A_1(0) = 0, A_k(0) = 2 (k >= 2) and
    A_{k+1}(n + 1) = A_k(A_{k+1}(n)).

    Unrolling the recursion gives A_{k+1}(n) = A_k^n(A_{k+1}(0)); the n-fold
    iterates of n -> n + 2 and n -> 2n are added and shifted in one step,
    higher levels are iterated literally.  Values wider than ``max_bits`` or
    needing more than ``max_steps`` iterations are refused with ResourceError.

    >>> [ackermann(2, n) for n in range(4)]
    [2, 4, 8, 16]
    """
    if k < 0 or n < 0:
        raise MalformedInput("ackermann needs non-negative k and n")
    return _Ackermann(max_bits, max_steps).value(k, n)


class _Ackermann:
    def __init__(self, max_bits, max_steps):
        self.max_bits = max_bits
        self.max_steps = max_steps
        self.memo = {}

    def value(self, k, n):
        if k == 0:
            return n + 2
        key = (k, n)
        if key not in self.memo:
            start = 0 if k == 1 else 2
            self.memo[key] = self.iterate(k - 1, start, n)
        return self.memo[key]

    def iterate(self, k, x, times):
        """A_k applied ``times`` times to x."""
        if k == 0:
            return x + 2 * times
        if k == 1:
            bits = x.bit_length() + times
            if x and bits > self.max_bits:
                size = bits if bits.bit_length() <= 64 else f"2^{bits.bit_length() - 1}"
                raise ResourceError(f"value has about {size} bits, over the {self.max_bits}-bit budget")
            return x << times
        if times > self.max_steps:
            raise ResourceError(
                f"needs {times} iterations of A_{k}; refused (budget {self.max_steps} steps)")
        for _ in range(times):
            x = self.value(k, x)
        return x


# presentations -----------------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise MalformedInput("repeated generator names")
        for r in self.relators:
            if any(not 0 < abs(x) <= n for x in r):
                raise MalformedInput("relator uses a letter outside the generators")
            if free_reduce(r) != tuple(r):
                raise MalformedInput("relators must be freely reduced")

    @property
    def alphabet(self):
        return Alphabet(list(self.generators))

    def dumps(self):
        A = self.alphabet
        lines = ["gens: " + " ".join(self.generators)]
        lines += [A.format(r) for r in self.relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or not lines[0].startswith("gens:"):
            raise MalformedInput("presentation file must start with a 'gens:' line")
        gens = tuple(lines[0][len("gens:"):].split())
        if not gens:
            raise MalformedInput("presentation needs at least one generator")
        A = Alphabet(list(gens))
        return cls(gens, tuple(free_reduce(A.parse(ln)) for ln in lines[1:]))

    def save(self, path):
        Path(path).write_text(self.dumps())

    @classmethod
    def load(cls, path):
        try:
            return cls.loads(Path(path).read_text())
        except OSError as exc:
            raise MalformedInput(f"cannot read presentation {path}: {exc}") from exc


def _commutator(x, y):
    return free_reduce(invert(x) + invert(y) + x + y)


def hydra_presentation(k):
    """Generators a1..ak, t, s with t^-1 a1 t = a1, t^-1 a_i t = a_i a_(i-1) (i > 1)
    and [s, a_i t] = 1, written as relators."""
    if k < 1:
        raise MalformedInput("hydra presentation needs k >= 1")
    t, s = k + 1, k + 2
    gens = tuple(f"a{i}" for i in range(1, k + 1)) + ("t", "s")
    rels = [(-t, 1, t, -1)]
    rels += [(-t, i, t, -(i - 1), -i) for i in range(2, k + 1)]
    rels += [_commutator((s,), (i, t)) for i in range(1, k + 1)]
    return Presentation(gens, tuple(free_reduce(r) for r in rels))


def lambda_presentation(phi=None):
    """Generators a1..am, s, t, l with s^-1 a_i s = phi(a_i), [t, a_i] = l and l central."""
    phi = phi or builtin_automorphism(3)
    m = phi.rank
    s, t, lam = m + 1, m + 2, m + 3
    gens = tuple(f"a{i}" for i in range(1, m + 1)) + ("s", "t", "l")
    rels = [free_reduce((-s, i, s) + invert(phi.images[i - 1])) for i in range(1, m + 1)]
    rels += [_commutator((t,), (i,)) + (-lam,) for i in range(1, m + 1)]
    rels += [_commutator((x,), (lam,)) for x in list(range(1, m + 1)) + [s, t]]
    return Presentation(gens, tuple(rels))


# word problem solvers ----------------------------------------------------------------------

class FreeSolver:
    """Word problem of a presentation without relators."""

    def __init__(self, pres):
        if pres.relators:
            raise MalformedInput("FreeSolver needs a presentation without relators")
        self.pres = pres

    def is_trivial(self, word):
        return not free_reduce(word)


class FiniteSolver:
    """Word problem of a finite group via coset enumeration over the trivial subgroup.

    The enumeration gives the regular permutation action, and a word is
    trivial exactly when it fixes the base coset.
    """

    def __init__(self, pres, max_cosets=100_000):
        self.pres = pres
        self.n = len(pres.generators)
        self.action = _enumerate_cosets(self.n, pres.relators, max_cosets)

    @property
    def order(self):
        return len(self.action)

    def is_trivial(self, word):
        c = 0
        for x in word:
            c = self.action[c][_col(x)]
        return c == 0


def _col(x):
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


def _enumerate_cosets(n, relators, max_cosets):
    """Coset table of the trivial subgroup (HLT strategy with coincidences)."""
    width = 2 * n
    table = [[None] * width]
    parent = [0]
    rels = [[_col(x) for x in r] for r in relators]

    def inv(c):
        return c ^ 1

    def rep(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c, x):
        if len(table) >= max_cosets:
            raise ResourceError(f"coset enumeration exceeded {max_cosets} cosets")
        d = len(table)
        table.append([None] * width)
        parent.append(d)
        table[c][x] = d
        table[d][inv(x)] = c

    def merge(a, b, queue):
        a, b = rep(a), rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a
        queue.append(b)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(width):
                f = table[e][x]
                if f is None:
                    continue
                table[f][inv(x)] = None
                e1, f1 = rep(e), rep(f)
                if table[e1][x] is not None:
                    merge(f1, table[e1][x], queue)
                elif table[f1][inv(x)] is not None:
                    merge(e1, table[f1][inv(x)], queue)
                else:
                    table[e1][x] = f1
                    table[f1][inv(x)] = e1

    def scan_and_fill(c, word):
        f, b, i, j = c, c, 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][inv(word[j])] is not None:
                b = table[b][inv(word[j])]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][inv(word[i])] = f
                return
            define(f, word[i])

    c = 0
    while c < len(table):
        if parent[c] == c:
            for r in rels:
                scan_and_fill(c, r)
                if parent[c] != c:
                    break
            if parent[c] == c:
                for x in range(width):
                    if table[c][x] is None:
                        define(c, x)
        c += 1

    live = [c for c in range(len(table)) if parent[c] == c]
    index = {c: i for i, c in enumerate(live)}
    return [[index[rep(table[c][x])] for x in range(width)] for c in live]


def solver_for(pres, max_cosets=100_000):
    return FreeSolver(pres) if not pres.relators else FiniteSolver(pres, max_cosets)


# fibre products ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FibreGenerators:
    diagonal: tuple     # (a_i, a_i)
    relator: tuple      # (r_j, 1)

    @property
    def all(self):
        return self.diagonal + self.relator


def mihailova_generators(pres):
    """Generators of {(u, v) : u = v in Q} inside F x F."""
    n = len(pres.generators)
    diag = tuple(((i,), (i,)) for i in range(1, n + 1))
    rels = tuple((tuple(r), ()) for r in pres.relators)
    return FibreGenerators(diag, rels)


def _pair_mul(x, y):
    return multiply(x[0], y[0]), multiply(x[1], y[1])


def _pair_inv(x):
    return invert(x[0]), invert(x[1])


def subgroup_ball(gens, radius, max_nodes=500_000):
    """Pairs reachable by words of length <= radius in the generators, with a shortest word
    (as a tuple of signed generator indices)."""
    signed = [(i + 1, g) for i, g in enumerate(gens)] + [(-(i + 1), _pair_inv(g)) for i, g in enumerate(gens)]
    seen = {((), ()): ()}
    frontier = [((), ())]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            w = seen[x]
            for label, g in signed:
                if w and w[-1] == -label:
                    continue
                y = _pair_mul(x, g)
                if y not in seen:
                    seen[y] = w + (label,)
                    nxt.append(y)
                    if len(seen) > max_nodes:
                        raise ResourceError(f"subgroup ball exceeds {max_nodes} nodes")
        frontier = nxt
    return seen


def find_pair_conjugator(ball, x, y):
    """Some g in the ball with g^-1 x g = y (pairs in F x F), or None."""
    for g in ball:
        gi = _pair_inv(g)
        if _pair_mul(_pair_mul(gi, x), g) == y:
            return g
    return None


@dataclass
class MihailovaReport:
    ball_size: int
    soundness: bool
    positive: list      # (w, r, conjugator found?)
    negative: list      # (w, r, conjugator found?)

    @property
    def passed(self):
        return self.soundness and all(ok for _, _, ok in self.positive) and not any(
            hit for _, _, hit in self.negative)

    def rows(self):
        yield {"check": "soundness", "w": "", "r": "", "result": self.soundness}
        for w, r, ok in self.positive:
            yield {"check": "w=1 conjugate", "w": w, "r": r, "result": ok}
        for w, r, hit in self.negative:
            yield {"check": "w!=1 consistent (bounded)", "w": w, "r": r, "result": not hit}


def mihailova_check(pres, solver=None, max_len=2, ball_radius=4, rng=None, samples=3):
    """Bounded checks of the fibre-product lemma for ``pres``.

    * every pair in the subgroup ball has equal coordinates in Q;
    * for trivial w built from relators, (w r w^-1, r) is conjugate to (r, r)
      by an element of the ball, for each test element r;
    * for non-trivial w with |w| <= max_len, the ball holds no such conjugator
      (bounded evidence only).
    """
    rng = rng or random.Random(0)
    solver = solver or solver_for(pres)
    gens = mihailova_generators(pres).all
    ball = subgroup_ball(gens, ball_radius)
    sound = all(solver.is_trivial(multiply(x, invert(y))) for x, y in ball)
    n = len(pres.generators)
    A = pres.alphabet
    tests = list(pres.relators) or [(1,)] + ([(1, 2)] if n > 1 else [])

    trivial = [()]
    for r in pres.relators:
        trivial.append(tuple(r))
        g = (rng.choice([i for i in range(1, n + 1)] + [-i for i in range(1, n + 1)]),)
        trivial.append(multiply(g, r, invert(g)))
    trivial = trivial[: 1 + samples * max(1, len(pres.relators))]

    positive = []
    for w in trivial:
        for r in tests:
            x = (multiply(w, r, invert(w)), tuple(r))
            hit = find_pair_conjugator(ball, x, (tuple(r), tuple(r)))
            positive.append((A.format(w), A.format(r), hit is not None))

    negative = []
    bound = getattr(solver, "order", 2 * max_len + 2)
    for w in _words_up_to(n, max_len):
        if solver.is_trivial(w):
            continue
        for r in tests:
            # a conjugator exists exactly when w lies in <root r> modulo Q; for a
            # relator that is not a proper power this means w = 1, but proper
            # powers (and probes that are not relators) admit other w
            if _in_cyclic(solver, w, max_root_free(r)[0], bound):
                continue
            x = (multiply(w, r, invert(w)), tuple(r))
            hit = find_pair_conjugator(ball, x, (tuple(r), tuple(r)))
            negative.append((A.format(w), A.format(r), hit is not None))
    return MihailovaReport(len(ball), sound, positive, negative)


def _words_up_to(n, length):
    letters = [i for i in range(1, n + 1)] + [-i for i in range(1, n + 1)]
    layer = [()]
    out = []
    for _ in range(length):
        layer = [w + (x,) for w in layer for x in letters if not w or w[-1] != -x]
        out.extend(layer)
    return out


def _in_cyclic(solver, w, root, bound):
    """Whether w equals some root^i in Q with |i| <= bound."""
    return any(solver.is_trivial(multiply(w, invert(root) * i if i > 0 else root * -i))
               for i in range(-bound, bound + 1))
