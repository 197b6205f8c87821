"""Brute-force ground truth: Cayley balls with normal-form deduplication.

Everything here is exact within the radius searched and deliberately slow;
it exists to check the algorithms, not to replace them.
"""

import time
from dataclasses import dataclass, field

from .errors import MalformedInput, ResourceError
from .words import invert

DEFAULT_NODES = 400_000


def generators(G, group):
    """The signed generators of a group, in a fixed order."""
    if group not in ("F", "E", "H", "G", "L"):
        raise MalformedInput(f"unknown group {group!r}")
    return [x for g in sorted(G.allowed(group)) for x in (g, -g)]


def element_key(x, group):
    if group == "L":
        return x.key()
    return x.g_key()


@dataclass
class BallIndex:
    """Elements of word length <= radius, by normal-form key, with a shortest word each."""

    group: str
    radius: int = 0
    layers: list = field(default_factory=list)     # lists of keys per word length
    words: dict = field(default_factory=dict)      # key -> shortest word
    elements: dict = field(default_factory=dict)   # key -> Element

    def __len__(self):
        return len(self.words)

    def __contains__(self, key):
        return key in self.words

    def length(self, key):
        w = self.words.get(key)
        return None if w is None else len(w)

    def items(self, radius=None):
        """(key, word, element) for all elements up to ``radius``, layer by layer."""
        top = self.radius if radius is None else min(radius, self.radius)
        for layer in self.layers[:top + 1]:
            for key in layer:
                yield key, self.words[key], self.elements[key]


def ball(G, group, radius, node_budget=DEFAULT_NODES):
    """BallIndex of ``group`` up to ``radius``; cached on G and extended on demand.

    Raises ResourceError (``achieved`` = the radius completed) past the node budget.
    """
    cache = G.cache.setdefault("oracle_balls", {})
    index = cache.get(group)
    if index is None:
        index = BallIndex(group)
        key = element_key(G.identity, group)
        index.layers.append([key])
        index.words[key] = ()
        index.elements[key] = G.identity
        cache[group] = index
    gens = generators(G, group)
    letters = {g: G.normalize((g,)) for g in gens}
    while index.radius < radius:
        layer = []
        for key in index.layers[index.radius]:
            x, w = index.elements[key], index.words[key]
            for g in gens:
                if w and w[-1] == -g:
                    continue
                y = G.mul(x, letters[g])
                k = element_key(y, group)
                if k in index.words:
                    continue
                index.words[k] = w + (g,)
                index.elements[k] = y
                layer.append(k)
                if len(index.words) > node_budget:
                    # roll back the partial layer so the cached index stays consistent
                    for k2 in layer:
                        del index.words[k2], index.elements[k2]
                    raise ResourceError(
                        f"ball of {group} exceeds {node_budget} nodes beyond radius {index.radius}",
                        achieved=index.radius)
        index.layers.append(layer)
        index.radius += 1
    return index


def _conjugates(G, group, x, radius, node_budget):
    """{key of w^-1 x w: shortest such w} over ball(group, radius)."""
    cache = G.cache.setdefault("oracle_conj", {})
    ck = (group, element_key(x, group), radius)
    if ck in cache:
        return cache[ck]
    out = {}
    for _, w, g in ball(G, group, radius, node_budget).items(radius):
        c = G.mul(G.mul(G.inv(g), x), g)
        out.setdefault(element_key(c, group), w)
    if len(cache) > 20000:
        cache.clear()
    cache[ck] = out
    return out


def min_conjugator(G, group, u, v, radius, node_budget=DEFAULT_NODES):
    """(w, |w|) with u w = w v and |w| minimal among words of length <= radius, or None.

    Meet in the middle: w = w1 w2^-1 with w1^-1 u w1 = w2^-1 v w2, the two
    halves taken from balls of radius ceil(r/2) and floor(r/2).
    """
    x, y = G.element(u), G.element(v)
    left = _conjugates(G, group, x, (radius + 1) // 2, node_budget)
    right = _conjugates(G, group, y, radius // 2, node_budget)
    best = None
    for key, w1 in left.items():
        w2 = right.get(key)
        if w2 is not None and (best is None or len(w1) + len(w2) < best[1]):
            best = (w1 + invert(w2), len(w1) + len(w2))
    return best


def centralizer_ball(G, u, radius, node_budget=DEFAULT_NODES, group="G"):
    """Keys of all g in ball(group, radius) with u g = g u in G."""
    x = G.element(u)
    out = set()
    for key, _, g in ball(G, group, radius, node_budget).items(radius):
        if G.same(G.mul(x, g), G.mul(g, x), "G")[0]:
            out.add(key)
    return out


def geodesic_length(G, group, word, radius, node_budget=DEFAULT_NODES):
    """|word| in the group's word metric if at most ``radius``, else None."""
    x = G.element(word)
    d = ball(G, group, radius, node_budget).length(element_key(x, group))
    # the cached ball may reach further than asked
    return d if d is not None and d <= radius else None


def witness_lower(G, n):
    """f((n - 4) // 4) for n >= 4: [t, s^-k a1 s^k] has length 4k + 4 and equals l^f(k)."""
    if n < 4:
        return None
    return G.phi.stretch(1, (n - 4) // 4)


def distortion_scan(G, radius, node_budget=DEFAULT_NODES):
    """Rows (n, max |N| over l^N in ball(Lambda, n), witness lower bound, nodes, seconds).

    Stops early (with the rows computed so far) when the node budget runs out.
    """
    rows = []
    best = 0
    start = time.perf_counter()
    for n in range(radius + 1):
        try:
            index = ball(G, "L", n, node_budget)
        except ResourceError:
            break
        for key in index.layers[n]:
            f, e, N = key
            if not f and not e:
                best = max(best, abs(N))
        rows.append({
            "n": n,
            "exact_or_bound": best,
            "witness_lower": witness_lower(G, n),
            "nodes": len(index),
            "seconds": round(time.perf_counter() - start, 3),
        })
    return rows
