"""Small shared helpers: errors, canonical ordering and a union-find."""

from __future__ import annotations


class CapError(ValueError):
    """A construction needs data above a level, dimension or arity cap."""


class RegimeError(ValueError):
    """No homotopy colimit model can be chosen for a diagram."""


def sort_key(x):
    """Total order on nested tuples of ints and strings.

    Labels mix ints, strings and tuples, which Python will not compare
    directly.
    """
    if isinstance(x, tuple):
        return (2, tuple(sort_key(y) for y in x))
    if isinstance(x, str):
        return (1, x)
    return (0, x)


class UnionFind:
    """Array-backed disjoint sets over ``range(n)``.

    The representative of each class is its smallest element.

    >>> uf = UnionFind(4)
    >>> uf.union(3, 1)
    >>> uf.find(3)
    1
    """

    def __init__(self, n: int = 0):
        self.parent = list(range(n))

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx < ry:
            self.parent[ry] = rx
        elif ry < rx:
            self.parent[rx] = ry

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return out


# permutations are tuples p with p[i] the image of i (0-based)

def perm_compose(p, q):
    """``p after q``."""
    return tuple(p[i] for i in q)


def perm_inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def permutations(n: int):
    from itertools import permutations as _perms
    return list(_perms(range(n)))
