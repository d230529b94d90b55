"""Truncated finitely generated simplicial sets.

A simplicial set carries an explicit dimension ``cap`` and stores only its
nondegenerate simplices together with their faces.  Every simplex is kept in
Eilenberg-Zilber normal form ``(y, sigma)``: ``y`` a nondegenerate label of
dimension ``p`` and ``sigma`` a monotone surjection ``[q] -> [p]`` given as a
tuple of length ``q + 1``.  Simplicial operators are monotone maps
``theta: [r] -> [q]`` (tuples) acting on the right.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product as _iproduct

from ._util import CapError, UnionFind, sort_key
from .fincat import FinCat, Functor


@lru_cache(maxsize=None)
def identity_op(p: int) -> tuple:
    return tuple(range(p + 1))


@lru_cache(maxsize=None)
def surjections(q: int, p: int) -> tuple:
    """All monotone surjections ``[q] -> [p]`` in lexicographic order."""
    if p > q or p < 0:
        return ()
    out = []
    for steps in combinations(range(q), p):
        s, v = [0], 0
        for i in range(q):
            if i in steps:
                v += 1
            s.append(v)
        out.append(tuple(s))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def coface(q: int, i: int) -> tuple:
    """``delta_i: [q-1] -> [q]`` skipping ``i``."""
    return tuple(j for j in range(q + 1) if j != i)


@lru_cache(maxsize=None)
def codegeneracy(q: int, i: int) -> tuple:
    """``sigma_i: [q+1] -> [q]`` hitting ``i`` twice."""
    return tuple(j if j <= i else j - 1 for j in range(q + 2))


def compose_ops(a: tuple, b: tuple) -> tuple:
    """``a after b`` for monotone maps as tuples."""
    return tuple(a[i] for i in b)


def simplex_dim(s) -> int:
    return len(s[1]) - 1


def nondeg(y, p: int):
    return (y, identity_op(p))


class SSet:
    """A simplicial set truncated at dimension ``cap``.

    ``nondeg[p]`` lists the nondegenerate ``p``-simplices in canonical order;
    ``faces[y]`` holds the ``p + 1`` faces of each ``y`` with ``p >= 1`` as
    normal-form simplices.
    """

    def __init__(self, cap: int, nondeg, faces, *, sort=False):
        if cap < 0:
            raise CapError("negative dimension cap")
        nondeg = [list(level) for level in nondeg]
        if len(nondeg) > cap + 1:
            if any(nondeg[cap + 1:]):
                raise CapError("simplices above the dimension cap")
            nondeg = nondeg[:cap + 1]
        nondeg += [[] for _ in range(cap + 1 - len(nondeg))]
        if sort:
            nondeg = [sorted(level, key=sort_key) for level in nondeg]
        self.cap = cap
        self.nondeg = nondeg
        self.faces = faces
        self.dim = {y: p for p, level in enumerate(nondeg) for y in level}
        if len(self.dim) != sum(len(level) for level in nondeg):
            raise ValueError("nondegenerate labels must be unique")
        self._along: dict = {}
        self._simplices: dict[int, list] = {}

    # -- access -----------------------------------------------------------
    def counts(self) -> list[int]:
        return [len(level) for level in self.nondeg]

    def __len__(self):
        return len(self.dim)

    def is_empty(self) -> bool:
        return not self.nondeg[0]

    def simplices(self, q: int) -> list:
        """All ``q``-simplices, degenerate ones included, in canonical order."""
        if q > self.cap:
            raise CapError(f"degree {q} above cap {self.cap}")
        if q not in self._simplices:
            self._simplices[q] = [(y, s) for p in range(q + 1)
                                  for y in self.nondeg[p] for s in surjections(q, p)]
        return self._simplices[q]

    def vertices(self) -> list:
        return list(self.nondeg[0])

    # -- simplicial operators ---------------------------------------------
    def _along_injection(self, y, iota: tuple):
        """``iota^* y`` for a nondegenerate ``y`` and injective monotone ``iota``."""
        key = (y, iota)
        hit = self._along.get(key)
        if hit is not None:
            return hit
        p = self.dim[y]
        if len(iota) == p + 1:
            res = (y, identity_op(p))
        else:
            img = set(iota)
            top = max(j for j in range(p + 1) if j not in img)
            z = self.faces[y][top]
            rest = tuple(t if t < top else t - 1 for t in iota)
            res = self.act(z, rest)
        self._along[key] = res
        return res

    def act(self, s, theta: tuple):
        """``theta^* s`` for a monotone ``theta: [r] -> [q]``."""
        y, sigma = s
        rho = tuple(sigma[t] for t in theta)
        image = sorted(set(rho))
        pos = {v: i for i, v in enumerate(image)}
        pi = tuple(pos[v] for v in rho)
        z, kappa = self._along_injection(y, tuple(image))
        return (z, tuple(kappa[v] for v in pi))

    def face(self, s, i: int):
        q = simplex_dim(s)
        if q == 0:
            raise ValueError("vertices have no faces")
        return self.act(s, coface(q, i))

    def degen(self, s, i: int):
        q = simplex_dim(s)
        if q + 1 > self.cap:
            raise CapError(f"degeneracy into degree {q + 1} above cap {self.cap}")
        return self.act(s, codegeneracy(q, i))

    def vertex(self, s, j: int):
        return self.act(s, (j,))

    def __repr__(self):
        return f"SSet(cap={self.cap}, nondeg={self.counts()})"


def is_nondegenerate(s) -> bool:
    sigma = s[1]
    return sigma == identity_op(len(sigma) - 1)


def validate(X: SSet) -> list[str]:
    """Closure, face dimensions and ``d_i d_j = d_{j-1} d_i`` for ``i < j``."""
    problems = []
    for p in range(1, X.cap + 1):
        for y in X.nondeg[p]:
            fs = X.faces.get(y)
            if fs is None or len(fs) != p + 1:
                problems.append(f"simplex {y!r} lacks {p + 1} faces")
                continue
            for f in fs:
                if f[0] not in X.dim or simplex_dim(f) != p - 1 or X.dim[f[0]] > p - 1:
                    problems.append(f"face {f!r} of {y!r} is not a stored {p - 1}-simplex")
    if problems:
        return problems
    for p in range(2, X.cap + 1):
        for y in X.nondeg[p]:
            s = nondeg(y, p)
            for j in range(p + 1):
                for i in range(j):
                    if X.face(X.face(s, j), i) != X.face(X.face(s, i), j - 1):
                        problems.append(f"d{i} d{j} != d{j - 1} d{i} on {y!r}")
    return problems


# -- standard cells -------------------------------------------------------

def _subcomplex_of_simplex(n: int, cap: int, keep) -> SSet:
    nd = [[] for _ in range(cap + 1)]
    faces = {}
    for p in range(min(n, cap) + 1):
        for c in combinations(range(n + 1), p + 1):
            if keep(c):
                nd[p].append(c)
                if p:
                    faces[c] = tuple(nondeg(c[:i] + c[i + 1:], p - 1) for i in range(p + 1))
    return SSet(cap, nd, faces)


def _check_cell(n, cap):
    cap = n if cap is None else cap
    if n > cap:
        raise CapError(f"cell of dimension {n} exceeds cap {cap}")
    return cap


def standard(n: int, cap: int | None = None) -> SSet:
    """``Delta^n``; vertices are ``(0,), ..., (n,)``."""
    cap = _check_cell(n, cap)
    return _subcomplex_of_simplex(n, cap, lambda c: True)


def boundary(n: int, cap: int | None = None) -> SSet:
    cap = _check_cell(n, cap)
    return _subcomplex_of_simplex(n, cap, lambda c: len(c) <= n)


def horn(n: int, k: int, cap: int | None = None) -> SSet:
    if not 0 <= k <= n:
        raise ValueError("horn index out of range")
    cap = _check_cell(n, cap)
    missing = tuple(j for j in range(n + 1) if j != k)
    return _subcomplex_of_simplex(n, cap, lambda c: len(c) <= n and c != missing)


def point(cap: int = 0) -> SSet:
    return standard(0, cap)


def empty(cap: int = 0) -> SSet:
    return SSet(cap, [], {})


# -- maps -----------------------------------------------------------------

class SMap:
    """A simplicial map, stored on nondegenerate simplices of the source."""

    def __init__(self, source: SSet, target: SSet, mapping: dict):
        self.source, self.target, self.mapping = source, target, mapping

    def __call__(self, s):
        z, tau = self.mapping[s[0]]
        return (z, tuple(tau[i] for i in s[1]))

    def __eq__(self, other):
        return (isinstance(other, SMap) and self.source is other.source
                and self.target is other.target and self.mapping == other.mapping)

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"SMap({self.source!r} -> {self.target!r})"


def identity_map(X: SSet) -> SMap:
    return SMap(X, X, {y: nondeg(y, p) for y, p in X.dim.items()})


def compose_maps(g: SMap, f: SMap) -> SMap:
    return SMap(f.source, g.target, {y: g(s) for y, s in f.mapping.items()})


def inclusion(A: SSet, X: SSet) -> SMap:
    """Inclusion of a subcomplex sharing labels with ``X``."""
    return SMap(A, X, {y: nondeg(y, p) for y, p in A.dim.items()})


def validate_map(f: SMap) -> list[str]:
    X, Y = f.source, f.target
    problems = []
    for y, p in X.dim.items():
        img = f.mapping.get(y)
        if img is None or img[0] not in Y.dim or simplex_dim(img) != p:
            problems.append(f"{y!r} has no image of dimension {p}")
    if problems:
        return problems
    for p in range(1, X.cap + 1):
        for y in X.nondeg[p]:
            s = nondeg(y, p)
            for i in range(p + 1):
                if f(X.face(s, i)) != Y.face(f(s), i):
                    problems.append(f"map does not commute with d{i} on {y!r}")
    return problems


def is_isomorphism(f: SMap) -> bool:
    """Bijective on nondegenerate simplices, hence on all simplices up to cap."""
    X, Y = f.source, f.target
    if len(X.dim) != len(Y.dim):
        return False
    images = set()
    for y, s in f.mapping.items():
        if not is_nondegenerate(s):
            return False
        images.add(s[0])
    return len(images) == len(Y.dim)


def generating_cofibration(n: int, cap: int | None = None) -> SMap:
    cap = _check_cell(n, cap)
    return inclusion(boundary(n, cap), standard(n, cap))


def empty_inclusion(X: SSet) -> SMap:
    return SMap(empty(X.cap), X, {})


# -- from explicit simplex sets -------------------------------------------

def from_full(cap: int, simplices, face_fn, degen_fn, *, sort=True) -> SSet:
    """Build from all simplices per degree with face and degeneracy functions.

    ``simplices[q]`` lists every ``q``-simplex (degenerate ones included);
    ``face_fn(q, x, i)`` and ``degen_fn(q, x, i)`` return raw simplices.
    A simplex is degenerate iff ``x = s_i d_i x`` for some ``i``.
    """
    nf: dict = {}
    nd = [[] for _ in range(cap + 1)]
    for q in range(cap + 1):
        for x in simplices[q]:
            for i in range(q):
                d = face_fn(q, x, i)
                if degen_fn(q - 1, d, i) == x:
                    z, tau = nf[(q - 1, d)]
                    nf[(q, x)] = (z, compose_ops(tau, codegeneracy(q - 1, i)))
                    break
            else:
                nd[q].append(x)
                nf[(q, x)] = nondeg(x, q)
    faces = {}
    for q in range(1, cap + 1):
        for x in nd[q]:
            faces[x] = tuple(nf[(q - 1, face_fn(q, x, i))] for i in range(q + 1))
    return SSet(cap, nd, faces, sort=sort)


# -- nerves -----------------------------------------------------------------

def _chain_normal_form(C: FinCat, c0: int, chain):
    """Normal form of a chain that may contain identities."""
    kept, sigma, v = [], [0], 0
    for f in chain:
        if not C.is_identity(f):
            kept.append(f)
            v += 1
        sigma.append(v)
    return ((c0, tuple(kept)), tuple(sigma))


def nerve(C: FinCat, cap: int) -> SSet:
    """Nerve of a finite category; labels ``(c0, (f1, ..., fk))`` with ids."""
    nd = [[(a, ()) for a in range(C.num_objects)]]
    outs: dict[int, list[int]] = {}
    for f in range(C.num_morphisms):
        if not C.is_identity(f):
            outs.setdefault(C.src[f], []).append(f)
    chains = [(a, ()) for a in range(C.num_objects)]
    faces = {}
    for k in range(1, cap + 1):
        level = []
        for c0, fs in chains:
            end = C.tgt[fs[-1]] if fs else c0
            for f in outs.get(end, []):
                level.append((c0, fs + (f,)))
        nd.append(level)
        for c0, fs in level:
            fcs = []
            for i in range(k + 1):
                if i == 0:
                    fcs.append(_chain_normal_form(C, C.tgt[fs[0]], fs[1:]))
                elif i == k:
                    fcs.append(_chain_normal_form(C, c0, fs[:-1]))
                else:
                    merged = fs[:i - 1] + (C.compose(fs[i], fs[i - 1]),) + fs[i + 1:]
                    fcs.append(_chain_normal_form(C, c0, merged))
            faces[(c0, fs)] = tuple(fcs)
        chains = level
    return SSet(cap, nd, faces)


def chain_of(C: FinCat, s) -> tuple:
    """Expand a nerve simplex to ``(c0, full chain with identities)``."""
    (c0, fs), sigma = s
    objs = [c0]
    for f in fs:
        objs.append(C.tgt[f])
    out = []
    for j in range(1, len(sigma)):
        a, b = sigma[j - 1], sigma[j]
        out.append(C.ident[objs[a]] if a == b else fs[a])
    return objs[sigma[0]], tuple(out)


def nerve_map(F: Functor, X: SSet, Y: SSet) -> SMap:
    """``N(F): X -> Y`` where ``X``, ``Y`` are nerves of source and target."""
    D = F.target
    mapping = {}
    for (c0, fs) in X.dim:
        mapping[(c0, fs)] = _chain_normal_form(D, F.ob[c0], tuple(F.mor[f] for f in fs))
    return SMap(X, Y, mapping)


def codiscrete_nerve(elements, cap: int) -> SSet:
    """``E(S)``: ``q``-simplices are ``(q+1)``-tuples of elements.

    Isomorphic to the nerve of the codiscrete category on ``S``, with labels
    that are vertex sequences (no two consecutive entries equal).
    """
    elements = list(elements)
    nd = [[(e,) for e in elements]]
    faces = {}
    level = nd[0]
    for q in range(1, cap + 1):
        level = [t + (e,) for t in level for e in elements if e != t[-1]]
        nd.append(level)
        for t in level:
            faces[t] = tuple(_vertex_sequence_nf(t[:i] + t[i + 1:]) for i in range(q + 1))
    return SSet(cap, nd, faces)


def _vertex_sequence_nf(t: tuple):
    kept, sigma = [t[0]], [0]
    for e in t[1:]:
        if e != kept[-1]:
            kept.append(e)
        sigma.append(len(kept) - 1)
    return (tuple(kept), tuple(sigma))


def vertex_sequence(s) -> tuple:
    """Vertex tuple of a simplex of a codiscrete nerve."""
    t, sigma = s
    return tuple(t[i] for i in sigma)


# -- products, coproducts, colimits ---------------------------------------

def product_normal_form(comps: tuple):
    """Normal form in a product of a tuple of equal-degree simplices."""
    sigmas = [c[1] for c in comps]
    q = len(sigmas[0]) - 1
    pi, v = [0], 0
    for i in range(q):
        if not all(s[i] == s[i + 1] for s in sigmas):
            v += 1
        pi.append(v)
    if v == q:
        return (comps, identity_op(q))
    reps = {}
    for i, t in enumerate(pi):
        reps.setdefault(t, i)
    first = [reps[t] for t in range(v + 1)]
    label = tuple((y, tuple(s[i] for i in first)) for y, s in comps)
    return (label, tuple(pi))


def product(*factors: SSet) -> SSet:
    """Degreewise cartesian product; labels are tuples of factor simplices."""
    caps = {X.cap for X in factors}
    if len(caps) != 1:
        raise CapError("product of simplicial sets with different caps")
    cap = caps.pop()
    nd, faces = [], {}
    for r in range(cap + 1):
        level = []
        for comps in _iproduct(*(X.simplices(r) for X in factors)):
            lab, pi = product_normal_form(comps)
            if pi == identity_op(r):
                level.append(comps)
        nd.append(level)
        if r:
            for comps in level:
                faces[comps] = tuple(
                    product_normal_form(tuple(X.face(c, i) for X, c in zip(factors, comps)))
                    for i in range(r + 1))
    return SSet(cap, nd, faces)


def product_map(maps, source: SSet, target: SSet) -> SMap:
    """``f1 x ... x fn`` between given product simplicial sets."""
    mapping = {}
    for comps in source.dim:
        mapping[comps] = product_normal_form(tuple(f(c) for f, c in zip(maps, comps)))
    return SMap(source, target, mapping)


def projection(P: SSet, i: int, target: SSet) -> SMap:
    return SMap(P, target, {comps: comps[i] for comps in P.dim})


def coproduct(*summands: SSet) -> SSet:
    """Labels ``(index, y)``."""
    caps = {X.cap for X in summands}
    if len(caps) != 1:
        raise CapError("coproduct of simplicial sets with different caps")
    cap = caps.pop()
    nd = [[(i, y) for i, X in enumerate(summands) for y in X.nondeg[p]] for p in range(cap + 1)]
    faces = {}
    for i, X in enumerate(summands):
        for y, fs in X.faces.items():
            faces[(i, y)] = tuple(((i, z), t) for z, t in fs)
    return SSet(cap, nd, faces)


def coproduct_inclusion(C: SSet, i: int, X: SSet) -> SMap:
    return SMap(X, C, {y: nondeg((i, y), p) for y, p in X.dim.items()})


class Colimit:
    """Colimit of a diagram of simplicial sets, by disjoint union and quotient.

    ``pieces`` maps tags to simplicial sets; ``arrows`` is a list of
    ``(src_tag, tgt_tag, fn)`` where ``fn`` sends a nondegenerate label of the
    source piece to a normal-form simplex of the target piece.  Relations are
    imposed on all simplices of each degree (degenerate ones included).  A
    class is nondegenerate iff all its members are; its label is its least
    member ``(tag, y)`` in the order (sorted tags, canonical piece order).
    """

    def __init__(self, pieces: dict, arrows, cap: int):
        self.cap = cap
        for X in pieces.values():
            if X.cap != cap:
                raise CapError("colimit of simplicial sets with different caps")
        self.tags = sorted(pieces, key=sort_key)
        self.pieces = pieces
        by_src: dict = {}
        for a in arrows:
            by_src.setdefault(a[0], []).append(a)
        self.cls: dict = {}
        nd = [[] for _ in range(cap + 1)]
        faces = {}
        for q in range(cap + 1):
            nodes, index = [], {}
            for t in self.tags:
                for s in pieces[t].simplices(q):
                    index[(t, s)] = len(nodes)
                    nodes.append((t, s))
            uf = UnionFind(len(nodes))
            for t in self.tags:
                for _, t2, fn in by_src.get(t, ()):
                    for s in pieces[t].simplices(q):
                        z, tau = fn(s[0])
                        uf.union(index[(t, s)], index[(t2, (z, tuple(tau[i] for i in s[1])))])
            classes = uf.classes()
            for rep in sorted(classes):
                members = classes[rep]
                degenerate = None
                for m in members:
                    if not is_nondegenerate(nodes[m][1]):
                        degenerate = nodes[m]
                        break
                if degenerate is None:
                    t, (y, _) = nodes[rep]
                    label = (t, y)
                    nd[q].append(label)
                    nf = nondeg(label, q)
                else:
                    t, (y, sigma) = degenerate
                    z, tau = self.cls[(t, nondeg(y, len(set(sigma)) - 1))]
                    nf = (z, tuple(tau[i] for i in sigma))
                for m in members:
                    self.cls[nodes[m]] = nf
            if q:
                for label in nd[q]:
                    t, y = label
                    s = nondeg(y, q)
                    faces[label] = tuple(self.cls[(t, pieces[t].face(s, i))] for i in range(q + 1))
        self.sset = SSet(cap, nd, faces)

    def project(self, tag, s):
        """Class of the piece simplex ``s`` (any normal-form simplex)."""
        hit = self.cls.get((tag, s))
        if hit is not None:
            return hit
        y, sigma = s
        z, tau = self.cls[(tag, nondeg(y, self.pieces[tag].dim[y]))]
        return (z, tuple(tau[i] for i in sigma))

    def inclusion(self, tag) -> SMap:
        X = self.pieces[tag]
        return SMap(X, self.sset, {y: self.project(tag, nondeg(y, p)) for y, p in X.dim.items()})

    def induced_map(self, target: SSet, legs: dict) -> SMap:
        """Map out of the colimit from a cocone ``legs[tag]: piece -> target``.

        ``legs[tag]`` is a function on nondegenerate piece labels; the cocone
        condition is the caller's business (see :func:`check_cocone`).
        """
        mapping = {}
        for label in self.sset.dim:
            t, y = label
            mapping[label] = legs[t](y)
        return SMap(self.sset, target, mapping)


def colimit(pieces: dict, arrows, cap: int) -> Colimit:
    return Colimit(pieces, arrows, cap)


def check_cocone(col: Colimit, arrows, legs) -> list[str]:
    """Cocone condition ``leg_tgt . arrow = leg_src`` on nondegenerate simplices."""
    problems = []
    for t, t2, fn in arrows:
        X = col.pieces[t]
        for y in X.dim:
            z, tau = fn(y)
            w, kappa = legs[t2](z)
            if (w, tuple(kappa[i] for i in tau)) != legs[t](y):
                problems.append(f"cocone fails on {t!r} -> {t2!r} at {y!r}")
                break
    return problems


def pushout(f: SMap, g: SMap) -> Colimit:
    """Pushout of ``B <- A -> C`` along ``f: A -> B`` and ``g: A -> C``.

    Tags are ``0`` (A), ``1`` (B) and ``2`` (C).
    """
    if f.source is not g.source:
        raise ValueError("pushout needs a common source")
    caps = {f.source.cap, f.target.cap, g.target.cap}
    if len(caps) != 1:
        raise CapError("pushout of simplicial sets with different caps")
    pieces = {0: f.source, 1: f.target, 2: g.target}
    arrows = [(0, 1, f.mapping.__getitem__), (0, 2, g.mapping.__getitem__)]
    return Colimit(pieces, arrows, caps.pop())


# -- connectivity and homology ---------------------------------------------

def components(X: SSet) -> list[list]:
    verts = X.nondeg[0]
    idx = {v: i for i, v in enumerate(verts)}
    uf = UnionFind(len(verts))
    if X.cap >= 1:
        for e in X.nondeg[1]:
            a, b = X.faces[e]
            uf.union(idx[a[0]], idx[b[0]])
    return [[verts[i] for i in c] for c in sorted(uf.classes().values())]


def boundary_matrix(X: SSet, k: int) -> list[list[int]]:
    """Normalized boundary ``C_k -> C_{k-1}``; rows index ``nondeg[k-1]``."""
    rows = {y: i for i, y in enumerate(X.nondeg[k - 1])}
    M = [[0] * len(X.nondeg[k]) for _ in rows]
    for j, y in enumerate(X.nondeg[k]):
        for i, f in enumerate(X.faces[y]):
            if is_nondegenerate(f):
                M[rows[f[0]]][j] += -1 if i % 2 else 1
    return M


def smith_diagonal(M: list[list[int]]) -> list[int]:
    """Nonzero diagonal entries of a diagonalization of an integer matrix.

    Row and column operations over Z; the entries need not form a divisor
    chain (see :func:`invariant_factors`).
    """
    rows = [r[:] for r in M if any(r)]
    diag = []
    while rows:
        best = None
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        while True:
            piv = rows[pi][pj]
            dirty = False
            prow = rows[pi]
            for i, r in enumerate(rows):
                if i != pi and r[pj]:
                    q = r[pj] // piv
                    if q:
                        rows[i] = r = [a - q * b for a, b in zip(r, prow)]
                    if r[pj]:
                        pi, dirty = i, True
                        break
            if dirty:
                continue
            prow = rows[pi]
            for j, v in enumerate(prow):
                if j != pj and v:
                    q = v // piv
                    if q:
                        for r in rows:
                            if r[pj]:
                                r[j] -= q * r[pj]
                    if prow[j]:
                        pj, dirty = j, True
                        break
            if not dirty:
                break
        diag.append(abs(rows[pi][pj]))
        del rows[pi]
        for r in rows:
            r[pj] = 0
        rows = [r for r in rows if any(r)]
    return diag


def invariant_factors(diag: list[int]) -> list[int]:
    """Turn a diagonal into a divisor chain describing the same group."""
    from math import gcd
    d = sorted(x for x in diag if x != 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a * b // g
                    changed = True
        d = sorted(x for x in d if x != 1)
    return d


def _sparse_boundary(X: SSet, k: int) -> dict:
    """Columns of the normalized boundary ``C_k -> C_{k-1}`` as ``{col: {row: v}}``."""
    rows = {y: i for i, y in enumerate(X.nondeg[k - 1])}
    cols = {}
    for j, y in enumerate(X.nondeg[k]):
        col: dict = {}
        for i, f in enumerate(X.faces[y]):
            if is_nondegenerate(f):
                r = rows[f[0]]
                v = col.get(r, 0) + (-1 if i % 2 else 1)
                if v:
                    col[r] = v
                else:
                    col.pop(r, None)
        if col:
            cols[j] = col
    return cols


def sparse_smith_diagonal(cols: dict) -> list[int]:
    """Diagonal of a sparse integer matrix given as ``{col: {row: value}}``.

    Unit pivots are eliminated sparsely; the leftover core goes to
    :func:`smith_diagonal`.
    """
    cols = {c: dict(v) for c, v in cols.items() if v}
    where: dict = {}
    for c, col in cols.items():
        for r in col:
            where.setdefault(r, set()).add(c)
    diag = []
    pending = sorted(cols, key=lambda c: len(cols[c]))
    progress = True
    while progress:
        progress = False
        for c in pending:
            col = cols.get(c)
            if not col:
                continue
            units = [r for r, v in col.items() if v in (1, -1)]
            if not units:
                continue
            r = min(units, key=lambda x: len(where[x]))
            piv = col[r]
            for c2 in list(where[r]):
                if c2 == c:
                    continue
                other = cols[c2]
                q = other[r] * piv  # piv is its own inverse
                for r2, v in col.items():
                    nv = other.get(r2, 0) - q * v
                    if nv:
                        if r2 not in other:
                            where[r2].add(c2)
                        other[r2] = nv
                    elif r2 in other:
                        del other[r2]
                        where[r2].discard(c2)
                if not other:
                    del cols[c2]
            for r2 in col:
                where[r2].discard(c)
            del cols[c]
            diag.append(1)
            progress = True
        pending = sorted(cols, key=lambda c: len(cols[c]))
    if cols:
        rows = sorted({r for col in cols.values() for r in col})
        ri = {r: i for i, r in enumerate(rows)}
        order = sorted(cols)
        M = [[0] * len(order) for _ in rows]
        for j, c in enumerate(order):
            for r, v in cols[c].items():
                M[ri[r]][j] = v
        diag += smith_diagonal(M)
    return diag


def _dense_to_sparse(M) -> dict:
    cols: dict = {}
    for i, row in enumerate(M):
        for j, v in enumerate(row):
            if v:
                cols.setdefault(j, {})[i] = v
    return cols


def homology_from_matrices(n_k: int, d_k, d_k1) -> tuple[int, list[int]]:
    """``H_k`` from ``d_k: C_k -> C_{k-1}`` and ``d_{k+1}: C_{k+1} -> C_k``.

    Matrices are dense row lists or sparse ``{col: {row: v}}`` dicts.
    """
    def diag(M):
        if not M:
            return []
        return sparse_smith_diagonal(M if isinstance(M, dict) else _dense_to_sparse(M))
    r_k = len(diag(d_k))
    dd = diag(d_k1)
    return n_k - r_k - len(dd), invariant_factors(dd)


def homology(X: SSet, k: int) -> tuple[int, list[int]]:
    """``(betti, torsion)`` of ``H_k`` of the normalized chain complex.

    Only degrees ``k <= cap - 1`` are trusted.
    """
    if k < 0 or k > X.cap - 1:
        raise CapError(f"homology in degree {k} needs cap >= {k + 1} (cap is {X.cap})")
    n_k = len(X.nondeg[k])
    d_k = _sparse_boundary(X, k) if k else {}
    return homology_from_matrices(n_k, d_k, _sparse_boundary(X, k + 1))


def is_homology_point(X: SSet, through: int) -> bool:
    return all(homology(X, k) == ((1, []) if k == 0 else (0, [])) for k in range(through + 1))


def chain_map_matrix(f: SMap, k: int) -> list[list[int]]:
    X, Y = f.source, f.target
    rows = {y: i for i, y in enumerate(Y.nondeg[k])}
    M = [[0] * len(X.nondeg[k]) for _ in rows]
    for j, y in enumerate(X.nondeg[k]):
        s = f.mapping[y]
        if is_nondegenerate(s):
            M[rows[s[0]]][j] += 1
    return M


def cone_homology(f: SMap, k: int) -> tuple[int, list[int]]:
    """``H_k`` of the mapping cone ``C_k = X_{k-1} + Y_k`` of ``f: X -> Y``.

    Vanishing for all degrees ``<= t`` means ``f`` is a homology isomorphism
    below ``t`` and surjective in degree ``t``.
    """
    X, Y = f.source, f.target
    if k > min(X.cap, Y.cap) - 1:
        raise CapError(f"cone homology in degree {k} above trusted range")

    def dcone(j):
        # rows: X_{j-2} + Y_{j-1}; cols: X_{j-1} + Y_j, as sparse columns
        nx_r = len(X.nondeg[j - 2]) if j >= 2 else 0
        nx_c = len(X.nondeg[j - 1]) if j >= 1 else 0
        cols: dict = {}
        if j >= 2:
            for c, col in _sparse_boundary(X, j - 1).items():
                cols[c] = {r: -v for r, v in col.items()}
        if j >= 1:
            rows = {y: i for i, y in enumerate(Y.nondeg[j - 1])}
            for c, y in enumerate(X.nondeg[j - 1]):
                s = f.mapping[y]
                if is_nondegenerate(s):
                    col = cols.setdefault(c, {})
                    col[nx_r + rows[s[0]]] = col.get(nx_r + rows[s[0]], 0) + 1
            for c, col in _sparse_boundary(Y, j).items():
                cols[nx_c + c] = {nx_r + r: v for r, v in col.items()}
        return cols

    n_k = (len(X.nondeg[k - 1]) if k >= 1 else 0) + len(Y.nondeg[k])
    d_k = dcone(k) if k >= 1 else {}
    return homology_from_matrices(n_k, d_k, dcone(k + 1))


def is_homology_isomorphism(f: SMap, through: int) -> bool:
    """Cone homology vanishes through ``through + 1``."""
    return all(cone_homology(f, k) == (0, []) for k in range(through + 2))


# -- inner horns ----------------------------------------------------------

def _horns(X: SSet, n: int, k: int):
    """All horns ``Lambda^n_k -> X`` as dicts ``{i: x_i}`` (``i != k``)."""
    cands = X.simplices(n - 1)
    by_face: dict = {}
    for x in cands:
        for i in range(n):
            by_face.setdefault((i, X.face(x, i)), []).append(x)
    idx = [i for i in range(n + 1) if i != k]

    def extend(chosen, pos):
        if pos == len(idx):
            yield dict(chosen)
            return
        j = idx[pos]
        pool = None
        for i, xi in chosen.items():
            # d_i x_j = d_{j-1} x_i for i < j
            key = (i, X.face(xi, j - 1))
            lst = by_face.get(key, [])
            pool = lst if pool is None else [x for x in pool if x in set(lst)]
            if not pool:
                return
        for x in (cands if pool is None else pool):
            chosen[j] = x
            yield from extend(chosen, pos + 1)
            del chosen[j]

    yield from extend({}, 0)


def fill_inner_horn(X: SSet, n: int, k: int, horn_faces: dict) -> list:
    """All ``n``-simplices whose faces agree with ``horn_faces`` (keys ``i != k``)."""
    return [z for z in X.simplices(n)
            if all(X.face(z, i) == x for i, x in horn_faces.items())]


def inner_horn_report(X: SSet, through_dim: int) -> dict:
    """Filler counts for every inner horn ``Lambda^n_k``, ``0 < k < n <= through_dim``."""
    if through_dim > X.cap:
        raise CapError(f"horn check through {through_dim} needs cap >= {through_dim}")
    report = {"horns": 0, "min_fillers": None, "max_fillers": None, "unfilled": None}
    for n in range(2, through_dim + 1):
        index: dict = {}
        for z in X.simplices(n):
            for k in range(1, n):
                key = (k, tuple(X.face(z, i) for i in range(n + 1) if i != k))
                index[key] = index.get(key, 0) + 1
        for k in range(1, n):
            for h in _horns(X, n, k):
                cnt = index.get((k, tuple(h[i] for i in sorted(h))), 0)
                report["horns"] += 1
                lo, hi = report["min_fillers"], report["max_fillers"]
                report["min_fillers"] = cnt if lo is None else min(lo, cnt)
                report["max_fillers"] = cnt if hi is None else max(hi, cnt)
                if cnt == 0 and report["unfilled"] is None:
                    report["unfilled"] = {"n": n, "k": k, "faces": h}
    return report


def is_quasicategory(X: SSet, through_dim: int) -> bool:
    return inner_horn_report(X, through_dim)["unfilled"] is None
