import random
from itertools import combinations

from chargraph.graphs import CharGraph
from chargraph.shapes import Complement, Complete, Cycle, Join, Union

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def random_chargraph(rng: random.Random, max_vertices: int = 7) -> CharGraph:
    k = rng.randint(0, max_vertices)
    verts = rng.sample(PRIMES, k)
    edges = [e for e in combinations(sorted(verts), 2) if rng.random() < 0.4]
    return CharGraph(verts, edges)


def random_shape_expr(rng: random.Random, max_leaves: int = 4, max_leaf_size: int = 4):
    """A random AST whose total leaf size stays within max_leaves * max_leaf_size."""
    def leaf():
        if rng.random() < 0.6:
            return Complete(rng.randint(0, max_leaf_size))
        return Cycle(rng.randint(3, max(3, max_leaf_size)))

    def build(budget: int, depth: int):
        if depth >= 3 or budget <= 1 or rng.random() < 0.35:
            return leaf()
        roll = rng.random()
        if roll < 0.25:
            return Complement(build(budget, depth + 1))
        parts = tuple(build(budget // 2, depth + 1) for _ in range(rng.randint(2, 3)))
        return Union(parts) if roll < 0.65 else Join(parts)

    return build(max_leaves, 0)


def leaf_vertex_total(expr) -> int:
    if isinstance(expr, (Complete, Cycle)):
        return expr.n
    if isinstance(expr, Complement):
        return leaf_vertex_total(expr.inner)
    return sum(leaf_vertex_total(p) for p in expr.parts)
