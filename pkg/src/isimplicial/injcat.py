"""The injection category, its concatenation product and comma-category combinatorics."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _perms

from ._util import CapError, perm_inverse
from . import fincat
from . import sset


@dataclass(frozen=True, order=True)
class Injection:
    """An injective map ``{1..m} -> {1..n}``; ``values[j-1]`` is the image of ``j``."""

    n: int
    values: tuple

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if len(set(vals)) != len(vals) or any(not 1 <= v <= self.n for v in vals):
            raise ValueError(f"not an injection into {self.n}: {vals}")

    @property
    def m(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        return self.values[j - 1]

    def __matmul__(self, other: "Injection") -> "Injection":
        """Composition ``self . other``."""
        if other.n != self.m:
            raise ValueError("injections not composable")
        return Injection(self.n, tuple(self.values[v - 1] for v in other.values))

    def is_identity(self) -> bool:
        return self.m == self.n and self.values == tuple(range(1, self.n + 1))

    def __repr__(self):
        return f"Injection({self.m}->{self.n}: {list(self.values)})"

    def key(self) -> str:
        return f"{self.m}>{self.n}:" + ",".join(map(str, self.values))


def identity(n: int) -> Injection:
    return Injection(n, tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def injections(m: int, n: int) -> tuple:
    """All injections ``m -> n`` in lexicographic order of value lists."""
    if m < 0 or n < 0:
        raise ValueError("negative level")
    return tuple(Injection(n, v) for v in _perms(range(1, n + 1), m))


def from_permutation(p) -> Injection:
    """The bijection ``j -> p[j-1] + 1`` for a 0-based permutation tuple."""
    return Injection(len(p), tuple(i + 1 for i in p))


def concat(a: Injection, b: Injection) -> Injection:
    """Blockwise sum ``a + b``: ``m+m' -> n+n'``."""
    return Injection(a.n + b.n, a.values + tuple(v + a.n for v in b.values))


def concat_all(parts) -> Injection:
    out = identity(0)
    for p in parts:
        out = concat(out, p)
    return out


def shuffle(m: int, n: int) -> Injection:
    """Block swap ``m + n -> n + m``."""
    return Injection(m + n, tuple(range(n + 1, n + m + 1)) + tuple(range(1, n + 1)))


def block_permutation(sizes, perm) -> Injection:
    """Bijection moving block ``j`` (of size ``sizes[j]``) to slot ``perm[j]``.

    Source blocks are in the order ``sizes``; in the target, slot ``s`` holds
    block ``perm^{-1}(s)``.
    """
    inv = perm_inverse(perm)
    offsets, off = {}, 0
    for s in range(len(sizes)):
        j = inv[s]
        offsets[j] = off
        off += sizes[j]
    vals = []
    for j, k in enumerate(sizes):
        vals.extend(offsets[j] + t + 1 for t in range(k))
    return Injection(off, tuple(vals))


def restrict_block(a: Injection, start: int, size: int) -> Injection:
    """``a`` restricted to source positions ``start+1 .. start+size``."""
    return Injection(a.n, a.values[start:start + size])


@lru_cache(maxsize=None)
def generators(k: int, k_max: int) -> tuple:
    """Injections out of ``k`` generating everything out of ``k`` up to ``k_max``.

    The standard inclusion ``k -> k+1`` and the adjacent transpositions of
    ``k``; every injection ``k -> k'`` is a composite of such maps.
    """
    out = []
    if k + 1 <= k_max:
        out.append(Injection(k + 1, tuple(range(1, k + 1))))
    for i in range(1, k):
        v = list(range(1, k + 1))
        v[i - 1], v[i] = v[i], v[i - 1]
        out.append(Injection(k, tuple(v)))
    return tuple(out)


class ICat:
    """The injection category truncated to levels ``lo..N`` as a FinCat.

    ``ICat(N, lo=1)`` is the positive part.
    """

    def __init__(self, N: int, lo: int = 0):
        if N < lo:
            raise CapError(f"level cap {N} below lowest level {lo}")
        self.N, self.lo = N, lo
        levels = list(range(lo, N + 1))
        self.cat = fincat.FinCat.generate(
            levels, lambda a, b: list(injections(a, b)),
            lambda g, f: g @ f, identity)

    def mid(self, a: Injection) -> int:
        return self.cat.mid(a)

    def oid(self, n: int) -> int:
        return self.cat.oid(n)

    def injection(self, f: int) -> Injection:
        return self.cat.morphisms[f]


def concat_functor(ks, source: ICat, target: ICat) -> fincat.Functor:
    """``l -> k1 + ... + ki + l`` from ``source`` into ``target``."""
    K = sum(ks)
    pre = identity(K)
    ob = [target.oid(K + l) for l in source.cat.objects]
    mor = [target.mid(concat(pre, source.injection(f))) for f in range(source.cat.num_morphisms)]
    return fincat.Functor(source.cat, target.cat, ob, mor)


def comma_concat(ks, m: int, level_cap: int | None = None) -> fincat.FinCat:
    """The comma category ``(k1 + ... + ki + -) / m``.

    Objects are named ``(l, alpha)`` with ``alpha: K + l -> m`` an Injection.
    """
    if level_cap is not None and m > level_cap:
        raise CapError(f"level {m} above level cap {level_cap}")
    K = sum(ks)
    if K > m:
        return fincat.empty()
    src, tgt = ICat(m - K), ICat(m)
    return fincat.comma(concat_functor(ks, src, tgt), tgt.oid(m), "over")


def sigma_action_on_components(k: int, i: int, m: int) -> tuple[dict, bool]:
    """Block permutation action of ``Sigma_i`` on components of ``(k^i + -) / m``.

    Returns ``({perm: component image list}, is_free)``; ``sigma`` sends
    ``(l, alpha)`` to ``(l, alpha . (block(sigma)^{-1} + id_l))``.
    """
    if i * k > m:
        raise ValueError("need i*k <= m")
    C = comma_concat([k] * i, m)
    comps = fincat.components(C)
    where = {o: c for c, members in enumerate(comps) for o in members}
    table, free = {}, True
    for perm in _perms(range(i)):
        b = block_permutation([k] * i, perm_inverse(perm))
        img = []
        for members in comps:
            l, alpha = C.objects[members[0]]
            moved = alpha @ concat(b, identity(l))
            img.append(where[C.oid((l, moved))])
        table[perm] = img
        if perm != tuple(range(i)) and any(img[c] == c for c in range(len(comps))):
            free = False
    return table, free


def coslice_positive(n: int, N: int) -> fincat.FinCat:
    """``n / I_+`` restricted to levels ``1..N``."""
    src = ICat(N, lo=1)
    tgt = ICat(N, lo=min(n, 1))
    inc = fincat.Functor(src.cat, tgt.cat, [tgt.oid(l) for l in src.cat.objects],
                         [tgt.mid(src.injection(f)) for f in range(src.cat.num_morphisms)])
    return fincat.comma(inc, tgt.oid(n), "under")


def is_homotopy_cofinal_proxy(N: int) -> list[dict]:
    """For each ``n <= N``: components and nerve homology of ``n / I_+`` (levels ``<= N``).

    Homology is reported through degree ``N - 2``.
    """
    if N < 1:
        raise CapError("cofinality proxy needs level cap N >= 1")
    cap = max(N - 1, 1)
    out = []
    for n in range(N + 1):
        C = coslice_positive(n, N)
        X = sset.nerve(C, cap)
        hom = [sset.homology(X, k) for k in range(N - 1)]
        out.append({
            "n": n,
            "objects": C.num_objects,
            "components": len(fincat.components(C)),
            "homology": hom,
            "connected": len(fincat.components(C)) == 1,
            "acyclic": all(h == (0, []) for h in hom[1:]),
        })
    return out
