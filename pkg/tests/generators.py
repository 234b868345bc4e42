"""Seeded random instances for the property suites."""

from dismantle import Graph, Poset, SimplicialComplex
from dismantle.complexes import dominated_vertices


def random_graph(rng, n, p=0.4, loop_p=0.4):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    loops = [i for i in range(n) if rng.random() < loop_p]
    return Graph(range(n), edges=edges, loops=loops)


def random_reflexive_graph(rng, n, p=0.4):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph(range(n), edges=edges, loops=range(n))


def random_poset(rng, n, p=0.3):
    lt = [(i, j) for i in range(n) for j in range(i + 1, n)
          if rng.random() < p]
    return Poset(range(n), lt)


def random_complex(rng, n, p=0.5):
    """Clique-complex-free random complex: a few random facets."""
    facets = []
    for _ in range(max(1, n)):
        size = rng.randint(1, max(1, n - 1))
        facet = rng.sample(range(n), min(size, n))
        facets.append(tuple(facet))
    if rng.random() < p and n >= 1:
        facets.append((rng.randrange(n),))
    return SimplicialComplex.from_simplices(facets)


def add_dominated_vertex(rng, g, new_id):
    """Extend a graph by one vertex dominated by an existing one."""
    from dismantle import sort_key
    a = rng.choice(g.vertices)
    nbhd = sorted(g.neighborhood(a), key=sort_key)
    attach = {v for v in nbhd if rng.random() < 0.7}
    looped = a in attach and g.is_looped(a) and rng.random() < 0.5
    loops = set(g.loops) | {new_id} if looped else g.loops
    return Graph(
        list(g.vertices) + [new_id],
        edges=list(g.edges()) + [(new_id, v) for v in attach],
        loops=loops), a


def random_collapse(rng, k, steps):
    """Apply up to `steps` random elementary strong collapses."""
    cur = k
    deleted = []
    for _ in range(steps):
        pairs = dominated_vertices(cur)
        if not pairs:
            break
        x, _ = rng.choice(pairs)
        deleted.append(x)
        cur = cur.delete(x)
    return cur, deleted
