"""Distance matrices via breadth-first search.

The distance matrix of a connected graph is integral, symmetric, zero on the
diagonal, and satisfies the triangle inequality; entries equal 1 exactly on
edges.  Disconnected input is rejected with a witness pair of vertices.
"""

from __future__ import annotations

from collections import deque

from .graphs import Graph

IntMatrix = list[list[int]]


class DisconnectedError(ValueError):
    def __init__(self, u: int, v: int):
        self.pair = (u, v)
        super().__init__(f"graph is disconnected: no path between vertices {u} and {v}")


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from one vertex; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist

def distance_matrix(g: Graph) -> IntMatrix:
    """All-pairs shortest path distances; raises DisconnectedError if needed."""
    rows = []
    for s in range(g.n):
        d = bfs_distances(g, s)
        for v, dv in enumerate(d):
            if dv < 0:
                raise DisconnectedError(s, v)
        rows.append(d)
    return rows


def is_connected(g: Graph) -> bool:
    return all(d >= 0 for d in bfs_distances(g, 0))


def diameter(g: Graph) -> int:
    return max(max(row) for row in distance_matrix(g))


def transmission_profile(g: Graph) -> tuple[list[int], bool]:
    """Row sums of the distance matrix plus a flag for transmission regularity."""
    sums = [sum(row) for row in distance_matrix(g)]
    return sums, len(set(sums)) == 1


def format_matrix(mat: IntMatrix) -> str:
    """Text dump: first line "n", then n rows of n space-separated integers."""
    n = len(mat)
    lines = [str(n)]
    for row in mat:
        if len(row) != n:
            raise ValueError("matrix must be square")
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> IntMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix input")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ValueError("line 1: expected matrix order") from None
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    mat = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != n:
            raise ValueError(f"line {i}: expected {n} entries, got {len(parts)}")
        try:
            mat.append([int(p) for p in parts])
        except ValueError:
            raise ValueError(f"line {i}: entries must be integers") from None
    return mat


def check_distance_matrix(mat: IntMatrix) -> None:
    """Validate the structural invariants of a distance matrix."""
    n = len(mat)
    for i in range(n):
        if len(mat[i]) != n:
            raise ValueError("matrix must be square")
        if mat[i][i] != 0:
            raise ValueError(f"nonzero diagonal at {i}")
        for j in range(n):
            if i != j and mat[i][j] <= 0:
                raise ValueError(f"non-positive off-diagonal at ({i}, {j})")
            if mat[i][j] != mat[j][i]:
                raise ValueError(f"asymmetry at ({i}, {j})")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if mat[i][j] > mat[i][k] + mat[k][j]:
                    raise ValueError(f"triangle inequality fails at ({i}, {j}, {k})")
