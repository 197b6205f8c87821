"""Conjugacy and maximal roots in the two hyperbolic pieces of G:
the free group E = F(s, t) and the free-by-cyclic group H = F x|_phi <s>.

E is free, so everything there is exact.  In H an element is ``f s^k``:

* k = 0: conjugators can be taken as ``x s^l`` where x conjugates u to
  phi^-l(v) in F; l is scanned outwards until the abelianised length of
  phi^-l(v) has stayed above that of u for ``patience`` consecutive steps.
* k != 0: an abelian obstruction rules pairs out exactly; otherwise a
  meet-in-the-middle search over balls of H finds a conjugator, and an
  exhausted search is reported as Undecided.

Roots ``(g s^j)^p = f s^k`` are filtered abelianly
(``sum_i Phi^(-ij) alpha(g) = alpha(f)`` must be solvable), then looked for
among rotations of the input, then by a bounded search over g.
"""

from math import ceil

from . import matrix as mx
from .config import NO_DEADLINE, Config
from .errors import DomainError, ResourceError, Undecided
from .words import (conjugate_in_free, cyclic_reduce, free_reduce, invert,
                    max_root_free, multiply, primitive_period)


def e_part(G, word):
    return G.retract(word, "E")


def h_part(G, word):
    return G.retract(word, "H")


def conjugate_in_E(G, u, v):
    """x with u_E x = x v_E in E, or None."""
    return conjugate_in_free(e_part(G, u), e_part(G, v))


def h_element(G, word):
    return G.normalize(h_part(G, word))


def h_key(x):
    return (x.f, x.e)


def h_word(G, x):
    return G.to_word(x, with_lambda=False)


def _divisors(n):
    n = abs(n)
    return sorted({d for i in range(1, int(n ** 0.5) + 1) if n % i == 0 for d in (i, n // i)})


# balls in H ---------------------------------------------------------------

def h_ball(G, radius, node_budget):
    """BFS levels of the Cayley ball of H: a list of lists of (element, word).

    The ball is cached on the group and grown on demand.  Raises
    ResourceError (with the radius reached) when the node budget is hit.
    """
    store = G.cache.setdefault("h_ball", [[(G.identity, ())]])
    seen = G.cache.setdefault("h_ball_seen", {h_key(G.identity)})
    gens = [x for i in range(1, G.m + 1) for x in (i, -i)] + [G.S, -G.S]
    letters = {x: G.normalize((x,)) for x in gens}
    total = sum(len(level) for level in store)
    while len(store) <= radius:
        nxt = []
        for x, w in store[-1]:
            for g in gens:
                if w and w[-1] == -g:
                    continue
                y = G.mul(x, letters[g])
                key = h_key(y)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append((y, w + (g,)))
                total += 1
                if total > node_budget:
                    raise ResourceError(f"H-ball exceeds {node_budget} nodes", achieved=len(store) - 1)
        store.append(nxt)
    return store[:radius + 1]


def affordable_radius(G, node_budget, wanted):
    """Largest radius <= wanted whose H-ball fits in the node budget."""
    r = 0
    while r < wanted:
        try:
            h_ball(G, r + 1, node_budget)
        except ResourceError:
            break
        r += 1
    return r


def conjugate_set(G, x, radius, node_budget):
    """{key of w^-1 x w: w} over the H-ball of the given radius, first (shortest) w kept."""
    cache = G.cache.setdefault("h_conj_sets", {})
    key = (h_key(x), radius)
    hit = cache.get(key)
    if hit is not None:
        return hit
    out = {}
    for level in h_ball(G, radius, node_budget):
        for w, word in level:
            c = G.mul(G.mul(G.inv(w), x), w)
            out.setdefault(h_key(c), word)
    if len(cache) > 4096:
        cache.clear()
    cache[key] = out
    return out


# conjugacy in H --------------------------------------------------------------

def _twist_obstruction(G, fu_alpha, fv_alpha, k):
    """True when no g s^l can conjugate f_u s^k to f_v s^k even abelianly."""
    phi = G.phi
    lhs = mx.sub(phi.power(-k), mx.identity(G.m))
    for l in range(abs(k)):
        rhs = tuple(a - b for a, b in zip(phi.abelian(fv_alpha, -l), fu_alpha))
        if mx.solve_integer(lhs, rhs) is not None:
            return False
    return True


def _scan_twists(G, fu, fv, cfg, deadline):
    """For u, v in F: some x s^l with u x s^l = x s^l v in H, or None."""
    phi = G.phi
    if not fu or not fv:
        return () if fu == fv else None
    target = len(cyclic_reduce(fu)[0])
    alpha_u = tuple(G.from_f(fu).alpha)
    alpha_v = tuple(G.from_f(fv).alpha)

    def attempt(l):
        if phi.abelian(alpha_v, -l) != alpha_u:
            return None
        img = phi.apply(fv, -l)
        x = conjugate_in_free(fu, img)
        if x is None:
            return None
        return multiply(x, (G.S,) * l if l >= 0 else (-G.S,) * -l)

    hit = attempt(0)
    if hit is not None:
        return hit
    for direction in (1, -1):
        grown = 0
        for step in range(1, cfg.max_twist + 1):
            deadline.check()
            l = direction * step
            try:
                hit = attempt(l)
            except ResourceError:
                break
            if hit is not None:
                return hit
            # cyclic length is at least the L1 norm of the abelianisation
            size = sum(map(abs, phi.abelian(alpha_v, -l)))
            if size <= target and not any(alpha_v):
                try:
                    size = len(cyclic_reduce(phi.apply(fv, -l))[0])
                except ResourceError:
                    break
            grown = grown + 1 if size > target else 0
            if grown >= cfg.patience:
                break
        else:
            raise Undecided(f"phi-twist scan reached {cfg.max_twist} without settling", cfg.max_twist)
    return None


def conjugate_in_H(G, u, v, cfg=None, deadline=NO_DEADLINE):
    """A word w over a, s with u w = w v in H, or None if they are not conjugate.

    Raises Undecided when the bounded search for sigma != 0 runs out.
    """
    cfg = cfg or Config()
    x, y = h_element(G, u), h_element(G, v)
    if h_key(x) == h_key(y):
        return ()
    k = G.e_sigma(x.e)
    if k != G.e_sigma(y.e):
        return None
    if k == 0:
        return _scan_twists(G, x.f, y.f, cfg, deadline)
    if _twist_obstruction(G, x.alpha, y.alpha, k):
        return None
    n = len(h_part(G, u)) + len(h_part(G, v))
    wanted = ceil(cfg.c_search * n / 2)
    radius = affordable_radius(G, cfg.node_budget, wanted)
    for r in range(radius + 1):
        deadline.check(2 * r)
        cu = conjugate_set(G, x, r, cfg.node_budget)
        cv = conjugate_set(G, y, r, cfg.node_budget)
        best = None
        for key, w1 in cu.items():
            w2 = cv.get(key)
            if w2 is not None and (best is None or len(w1) + len(w2) < len(best)):
                best = multiply(w1, invert(w2))
        if best is not None:
            assert h_key(G.product(u, best)) == h_key(G.product(best, v))
            return best
    raise Undecided(f"no H-conjugator within radius {2 * radius}", 2 * radius)


# roots in H ----------------------------------------------------------------------

def _power_product(G, g, j, p):
    """g phi^-j(g) phi^-2j(g) ... phi^-(p-1)j(g)."""
    out = ()
    for i in range(p):
        out = multiply(out, G.phi.apply(g, -i * j))
    return out


def _rotation_roots(G, words):
    """{p: r} for roots r with r^p = h read off literal periodic rotations."""
    found = {}
    for w in words:
        for i in range(len(w)):
            rot = w[i:] + w[:i]
            per = primitive_period(rot)
            if per and per < len(rot):
                q = len(rot) // per
                root = free_reduce(w[:i] + rot[:per] + invert(w[:i]))
                found.setdefault(q, root)
    return found


def _abelian_root_target(G, alpha_f, j, p):
    """alpha(g) forced by the abelianised root equation: a vector, None (none exists),
    or ``"free"`` when the sum matrix is singular."""
    m = G.m
    total = mx.zeros(m)
    for i in range(p):
        total = mx.add(total, G.phi.power(-i * j))
    sol = mx.solve_integer(total, alpha_f)
    if sol is None:
        return None
    if mx.det(total) == 0:
        return "free"
    return sol


def _search_root(G, f, j, p, target, radius, node_budget, deadline):
    """Depth-first search for g with |g| <= radius and power product f."""
    m = G.m
    gens = [x for i in range(1, m + 1) for x in (i, -i)]
    nodes = 0
    alpha = [0] * m

    def dist():
        return sum(abs(a - b) for a, b in zip(alpha, target)) if target != "free" else 0

    def rec(word):
        nonlocal nodes
        nodes += 1
        if nodes % 1024 == 0:
            deadline.check(radius)
        if nodes > node_budget:
            raise ResourceError("root search exceeded node budget", achieved=len(word))
        if (target == "free" or dist() == 0) and _power_product(G, word, j, p) == f:
            return word
        if len(word) >= radius:
            return None
        for g in gens:
            if word and word[-1] == -g:
                continue
            i = abs(g) - 1
            alpha[i] += 1 if g > 0 else -1
            if dist() <= radius - len(word) - 1:
                hit = rec(word + (g,))
                if hit is not None:
                    alpha[i] -= 1 if g > 0 else -1
                    return hit
            alpha[i] -= 1 if g > 0 else -1
        return None

    return rec(())


def max_root_H(G, h, cfg=None, deadline=NO_DEADLINE):
    """(root, multiplicity) with root^multiplicity = h in H and multiplicity maximal.

    Raises DomainError for h = 1 and Undecided when some larger
    multiplicity could be neither ruled out nor exhibited.
    """
    cfg = cfg or Config()
    h = h_part(G, h)
    x = G.normalize(h)
    if h_key(x) == h_key(G.identity):
        raise DomainError("the identity has no maximal root")
    k = G.e_sigma(x.e)
    if k == 0:
        return max_root_free(x.f)
    nf_word = h_word(G, x)
    witnesses = _rotation_roots(G, [h, nf_word])
    radius = cfg.c_search * len(h)
    for p in reversed(_divisors(k)):
        if p == 1:
            return nf_word, 1
        j = k // p
        root = witnesses.get(p)
        if root is not None:
            return _certify_root(G, root, p, x)
        target = _abelian_root_target(G, x.alpha, j, p)
        if target is None:
            continue
        try:
            g = _search_root(G, x.f, j, p, target, radius, cfg.node_budget, deadline)
        except ResourceError as exc:
            raise Undecided(f"root of order {p} neither found nor excluded", exc.achieved) from exc
        if g is None:
            raise Undecided(f"root of order {p} neither found nor excluded within radius {radius}", radius)
        root = multiply(g, (G.S,) * j if j > 0 else (-G.S,) * -j)
        return _certify_root(G, root, p, x)
    return nf_word, 1


def _certify_root(G, root, p, x):
    y = G.pow(G.normalize(root), p)
    assert h_key(y) == h_key(x), "root certificate failed"
    return root, p


__all__ = [
    "conjugate_in_E", "conjugate_in_H", "max_root_H", "h_element",
    "h_ball", "conjugate_set",
]
