"""Instance generators for exercising the scheme pipeline end to end.

Two families, both sized so practical parameters drive the build to a
frozen entry in one step:

* star-of-balls: identical low-degree path balls hanging off a common
  apex set, every ball's whole boundary equal to the apexes (deletion
  branch);
* caterpillar: one long low-degree spine under the apex set, reaching
  beyond the ball radius (contraction branch).

The freeze size of each instance respects its removal volume: a deletion
step removes (h+k) balls, which the certifier caps at N.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..constants import split_path_budget
from ..graphs import Graph
from .params import SchemeParams


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph
    params: SchemeParams


def star_of_balls(
    apexes: int, balls: int, ball_size: int, h: int = 3, k: int = 2
) -> Instance:
    """Apex set joined to every vertex of ``balls`` disjoint paths.

    The deletion branch consumes h + k whole balls in one step; the freeze
    size is the larger of the removal volume and the leftover graph.
    """
    if apexes < 1 or balls < h + k or ball_size < 1:
        raise ValueError("need at least one apex and h + k balls")
    edges = []
    n = apexes
    for _ in range(balls):
        for i in range(ball_size):
            v = n
            n += 1
            for a in range(apexes):
                edges.append((a, v))
            if i:
                edges.append((v - 1, v))
    g = Graph.from_edges(n, edges)
    leftover = apexes + 1 + (balls - h - k) * ball_size
    n_freeze = max((h + k) * ball_size, leftover)
    if g.n <= n_freeze:
        raise ValueError("instance would freeze before any step")
    params = SchemeParams(
        h=h,
        k=k,
        r=apexes + 1,
        d=apexes + 2,
        n_freeze=n_freeze,
        l0=ball_size,
        t=balls,
    )
    return Instance(f"star_w{apexes}_m{balls}_p{ball_size}", g, params)


def caterpillar(
    apexes: int, spine: int, h: int = 3, k: int = 2, n_freeze: int = 12
) -> Instance:
    """Apex set joined to every vertex of one long path.

    With no hyperedges yet every spine vertex has the same type, so the
    contraction step works with k0 = 1 + (h+k-2) chunks and needs
    l0 = n(1, k0, 3) + 1; the spine must reach past that radius.
    """
    k0 = 1 + (h + k - 2)
    l0 = split_path_budget(1, k0, 3) + 1
    if spine < l0 + 1:
        raise ValueError(f"spine must have more than {l0} vertices")
    edges = [(a, apexes + i) for a in range(apexes) for i in range(spine)]
    edges += [(apexes + i, apexes + i + 1) for i in range(spine - 1)]
    g = Graph.from_edges(apexes + spine, edges)
    if g.n <= n_freeze:
        raise ValueError("instance would freeze before any step")
    params = SchemeParams(
        h=h,
        k=k,
        r=apexes + 1,
        d=apexes + 2,
        n_freeze=n_freeze,
        l0=l0,
        t=1,
    )
    return Instance(f"caterpillar_w{apexes}_s{spine}", g, params)


def acceptance_corpus() -> list[Instance]:
    """At least twenty one-step instances within the acceptance parameter box
    (h=3, k=2, r <= 6, d <= 4, N <= 12)."""
    out = []
    for w in (1, 2):
        for m in (5, 6, 7):
            for p in (1, 2):
                out.append(star_of_balls(w, m, p))
    for w in (1, 2):
        for spine in (13 - w, 14 - w, 15 - w, 16 - w):
            out.append(caterpillar(w, spine))
    return out
