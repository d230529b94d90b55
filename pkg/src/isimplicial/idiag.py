"""Diagrams of simplicial sets indexed by finite sets and injections.

An :class:`IDiagram` is truncated at a level cap ``N`` and a dimension cap
``d``.  Actions of injections are computed lazily and cached.  Every
Kan-extension-shaped construction (Day convolution, colimits over the
injection category, pushouts, orbit quotients) goes through
:class:`ColimitDiagram`, i.e. disjoint union plus union-find quotient per
level and degree.
"""

from __future__ import annotations

from itertools import permutations as _perms

from ._util import CapError, RegimeError, perm_inverse
from . import fincat
from . import sset as S
from .injcat import (ICat, Injection, block_permutation, concat, concat_all,
                     generators, identity, injections, shuffle)


class IDiagram:
    """A level-capped functor from injections to simplicial sets."""

    def __init__(self, N: int, d: int, values, action_fn, *, categories=None, name=""):
        values = list(values)
        if len(values) != N + 1:
            raise CapError(f"need values at levels 0..{N}")
        if any(v.cap != d for v in values):
            raise CapError("all levels must share the dimension cap")
        self.N, self.d = N, d
        self.values = values
        self._action_fn = action_fn
        self._cache: dict = {}
        self.categories = categories
        self.name = name

    def value(self, m: int) -> S.SSet:
        if m > self.N:
            raise CapError(f"level {m} above level cap {self.N}")
        return self.values[m]

    def action(self, a: Injection) -> S.SMap:
        if a.n > self.N:
            raise CapError(f"injection into level {a.n} above level cap {self.N}")
        f = self._cache.get(a)
        if f is None:
            if a.is_identity():
                f = S.identity_map(self.values[a.n])
            else:
                f = self._action_fn(a)
            self._cache[a] = f
        return f

    def all_injections(self):
        return [a for m in range(self.N + 1) for n in range(m, self.N + 1)
                for a in injections(m, n)]

    def generating_injections(self):
        return [g for m in range(self.N + 1) for g in generators(m, self.N)]

    def counts(self) -> list[list[int]]:
        return [v.counts() for v in self.values]

    def __repr__(self):
        return f"IDiagram({self.name or 'anon'}, N={self.N}, d={self.d})"


def validate_idiagram(X: IDiagram, *, exhaustive: bool = True) -> list[str]:
    """Values and action maps valid; ``X(id) = id`` and ``X(b a) = X(b) X(a)``.

    With ``exhaustive=False`` only generating injections are checked for
    validity and the composition law is skipped.
    """
    problems = []
    for m, v in enumerate(X.values):
        for p in S.validate(v):
            problems.append(f"level {m}: {p}")
    injs = X.all_injections() if exhaustive else X.generating_injections()
    for a in injs:
        f = X.action(a)
        if f.source is not X.values[a.m] or f.target is not X.values[a.n]:
            problems.append(f"action of {a} has wrong endpoints")
            continue
        for p in S.validate_map(f):
            problems.append(f"action of {a}: {p}")
    for m in range(X.N + 1):
        if X._action_fn(identity(m)).mapping != S.identity_map(X.values[m]).mapping:
            problems.append(f"identity at level {m} acts nontrivially")
    if exhaustive:
        for a in injs:
            for b in injections(a.n, a.n) + tuple(
                    x for n in range(a.n + 1, X.N + 1) for x in injections(a.n, n)):
                if S.compose_maps(X.action(b), X.action(a)).mapping != X.action(b @ a).mapping:
                    problems.append(f"composition law fails at {b} . {a}")
    return problems


class IMap:
    """A natural transformation, one simplicial map per level."""

    def __init__(self, source: IDiagram, target: IDiagram, maps):
        self.source, self.target = source, target
        self.maps = list(maps)

    def __getitem__(self, m: int) -> S.SMap:
        return self.maps[m]

    def __eq__(self, other):
        return (isinstance(other, IMap) and self.source is other.source
                and self.target is other.target
                and all(f.mapping == g.mapping for f, g in zip(self.maps, other.maps)))

    def __hash__(self):
        return id(self)


def identity_imap(X: IDiagram) -> IMap:
    return IMap(X, X, [S.identity_map(v) for v in X.values])


def compose_imaps(g: IMap, f: IMap) -> IMap:
    return IMap(f.source, g.target, [S.compose_maps(b, a) for b, a in zip(g.maps, f.maps)])


def validate_imap(f: IMap, *, exhaustive: bool = False) -> list[str]:
    """Levelwise validity and naturality (on generators unless ``exhaustive``)."""
    X, Y = f.source, f.target
    problems = []
    for m in range(X.N + 1):
        for p in S.validate_map(f.maps[m]):
            problems.append(f"level {m}: {p}")
    injs = X.all_injections() if exhaustive else X.generating_injections()
    for a in injs:
        lhs = S.compose_maps(f.maps[a.n], X.action(a))
        rhs = S.compose_maps(Y.action(a), f.maps[a.m])
        if lhs.mapping != rhs.mapping:
            bad = next(y for y in lhs.mapping if lhs.mapping[y] != rhs.mapping[y])
            problems.append(f"naturality square fails at {a} on {bad!r}")
    return problems


def is_iso_imap(f: IMap) -> bool:
    return all(S.is_isomorphism(g) for g in f.maps) and not validate_imap(f)


# -- basic diagrams -------------------------------------------------------

def free_diagram(n: int, K: S.SSet, N: int) -> IDiagram:
    """``I(n, -) x K``; labels ``(beta.values, y)``."""
    if n > N:
        raise CapError(f"free diagram on level {n} above level cap {N}")
    values = []
    for m in range(N + 1):
        injs = injections(n, m)
        nd = [[(b.values, y) for b in injs for y in K.nondeg[p]] for p in range(K.cap + 1)]
        faces = {(b.values, y): tuple(((b.values, z), t) for z, t in fs)
                 for b in injs for y, fs in K.faces.items()}
        values.append(S.SSet(K.cap, nd, faces))

    def act(a):
        return S.SMap(values[a.m], values[a.n],
                      {(bv, y): S.nondeg(((a @ Injection(a.m, bv)).values, y), p)
                       for (bv, y), p in values[a.m].dim.items()})

    X = IDiagram(N, K.cap, values, act, name=f"F{n}")
    X.free_level, X.free_cell = n, K
    return X


def free_map(n: int, g: S.SMap, source: IDiagram, target: IDiagram) -> IMap:
    """``F_n(g)`` between already-built free diagrams."""
    maps = []
    for m in range(source.N + 1):
        mapping = {}
        for (bv, y) in source.values[m].dim:
            z, t = g.mapping[y]
            mapping[(bv, y)] = ((bv, z), t)
        maps.append(S.SMap(source.values[m], target.values[m], mapping))
    return IMap(source, target, maps)


def constant_diagram(K: S.SSet, N: int) -> IDiagram:
    values = [K] * (N + 1)
    return IDiagram(N, K.cap, values, lambda a: S.identity_map(K), name="const")


def empty_diagram(N: int, d: int) -> IDiagram:
    E = S.empty(d)
    return IDiagram(N, d, [E] * (N + 1), lambda a: S.identity_map(E), name="empty")


def unit_diagram(N: int, d: int) -> IDiagram:
    return free_diagram(0, S.point(d), N)


def nerve_diagram(D: fincat.CatDiagram, icat: ICat, d: int) -> IDiagram:
    """Levelwise nerve of a category-valued diagram over ``icat``."""
    values = [S.nerve(C, d) for C in D.values]

    def act(a):
        return S.nerve_map(D.act(icat.mid(a)), values[a.m], values[a.n])

    X = IDiagram(icat.N, d, values, act, categories=D, name="nerve")
    X.icat = icat
    return X


def constant_cat_diagram(C: fincat.FinCat, icat: ICat) -> fincat.CatDiagram:
    ident = fincat.identity_functor(C)
    return fincat.CatDiagram(icat.cat, [C] * icat.cat.num_objects, lambda u: ident)


def discrete_cat_diagram(X: IDiagram, icat: ICat) -> fincat.CatDiagram:
    """Category data for a levelwise discrete diagram."""
    cats = [fincat.discrete(v.nondeg[0]) for v in X.values]

    def act(u):
        a = icat.injection(u)
        f = X.action(a)
        C, D = cats[a.m], cats[a.n]
        ob = [D.oid(f.mapping[v][0]) for v in C.objects]
        return fincat.Functor(C, D, ob, [D.ident[o] for o in ob])

    return fincat.CatDiagram(icat.cat, cats, act)


def is_levelwise_discrete(X: IDiagram) -> bool:
    return all(not any(v.nondeg[1:]) for v in X.values)


# -- levelwise colimits ---------------------------------------------------

class ColimitDiagram(IDiagram):
    """Levelwise colimit of pieces, with the action pushed through tags.

    ``level_data(m)`` returns ``(pieces, arrows)`` for :class:`sset.Colimit`;
    ``push(a, tag)`` returns ``(tag2, fn)`` where ``fn`` maps nondegenerate
    piece labels at level ``a.m`` to simplices of piece ``tag2`` at ``a.n``
    (``fn=None`` means the labels carry over unchanged).
    """

    def __init__(self, N, d, level_data, push, *, name=""):
        self.colims = []
        for m in range(N + 1):
            pieces, arrows = level_data(m)
            self.colims.append(S.Colimit(pieces, arrows, d))
        self._push = push
        super().__init__(N, d, [c.sset for c in self.colims], self._act, name=name)

    def _act(self, a: Injection) -> S.SMap:
        src, tgt = self.colims[a.m], self.colims[a.n]
        mapping = {}
        pushed: dict = {}
        for label, p in src.sset.dim.items():
            tag, y = label
            if tag not in pushed:
                pushed[tag] = self._push(a, tag)
            tag2, fn = pushed[tag]
            s = S.nondeg(y, p) if fn is None else fn(y)
            mapping[label] = tgt.project(tag2, s)
        return S.SMap(src.sset, tgt.sset, mapping)

    def induced_imap(self, target: IDiagram, leg) -> IMap:
        """Map out of the colimit from ``leg(m, tag)`` (a function on piece labels)."""
        maps = []
        for m, col in enumerate(self.colims):
            legs = {t: leg(m, t) for t in col.tags}
            maps.append(col.induced_map(target.values[m], legs))
        return IMap(self, target, maps)

    def cocone_problems(self, leg, arrows_of) -> list[str]:
        problems = []
        for m, col in enumerate(self.colims):
            legs = {t: leg(m, t) for t in col.tags}
            problems += [f"level {m}: {p}" for p in S.check_cocone(col, arrows_of(m), legs)]
        return problems


class BoxDiagram(ColimitDiagram):
    """The Day convolution ``X_1 [x] ... [x] X_n``.

    At level ``m`` the pieces are ``X_1(k_1) x ... x X_n(k_n)`` tagged by
    ``(ks, gamma.values)`` with ``gamma: k_1 + ... + k_n -> m``.  Relations
    come from generating injections in each slot.
    """

    def __init__(self, factors, *, name=""):
        caps = {(X.N, X.d) for X in factors}
        if len(caps) != 1:
            raise CapError("Day convolution of diagrams with different caps")
        N, d = caps.pop()
        self.factors = list(factors)
        self._products: dict = {}
        self._arrows: dict = {}
        super().__init__(N, d, self._level, self._push_tag, name=name or "box")

    def piece(self, ks) -> S.SSet:
        P = self._products.get(ks)
        if P is None:
            P = S.product(*(X.values[k] for X, k in zip(self.factors, ks)))
            self._products[ks] = P
        return P

    def _compositions(self, m):
        n = len(self.factors)
        out = []

        def rec(prefix, left):
            if len(prefix) == n:
                out.append(tuple(prefix))
                return
            for k in range(left + 1):
                if not self.factors[len(prefix)].values[k].is_empty():
                    rec(prefix + [k], left - k)

        rec([], m)
        return out

    def _slot_map(self, ks, j, u):
        f = self.factors[j].action(u)

        def fn(label):
            comps = list(label)
            comps[j] = f(comps[j])
            return S.product_normal_form(tuple(comps))
        return fn

    def _level(self, m):
        pieces, arrows = {}, []
        kss = self._compositions(m)
        present = set(kss)
        for ks in kss:
            P = self.piece(ks)
            total = sum(ks)
            for g in injections(total, m):
                pieces[(ks, g.values)] = P
        for ks in kss:
            total = sum(ks)
            offsets = [sum(ks[:j]) for j in range(len(ks))]
            for j, k in enumerate(ks):
                for u in generators(k, m):
                    ks2 = ks[:j] + (u.n,) + ks[j + 1:]
                    if ks2 not in present:
                        continue
                    fn = self._slot_map(ks, j, u)
                    mid = concat_all([identity(offsets[j]), u, identity(total - offsets[j] - k)])
                    # arrows (ks, g2 . mid) -> (ks2, g2)
                    for g2 in injections(sum(ks2), m):
                        arrows.append(((ks, (g2 @ mid).values), (ks2, g2.values), fn))
        self._arrows[m] = arrows
        return pieces, arrows

    def _push_tag(self, a, tag):
        ks, gv = tag
        return (ks, (a @ Injection(a.m, gv)).values), None

    def project(self, m: int, ks, gamma, comps):
        """Class at level ``m`` of ``(comps)`` in piece ``(ks, gamma)``."""
        gv = gamma.values if isinstance(gamma, Injection) else tuple(gamma)
        return self.colims[m].project((tuple(ks), gv), S.product_normal_form(tuple(comps)))

    def arrows(self, m):
        return self._arrows[m]

    def representatives(self, m):
        """Every (tag, nondegenerate piece label) pair at level ``m``."""
        col = self.colims[m]
        for t in col.tags:
            for y in col.pieces[t].dim:
                yield t, y


def box(X: IDiagram, Y: IDiagram) -> BoxDiagram:
    return BoxDiagram([X, Y])


def box_many(factors) -> BoxDiagram:
    return BoxDiagram(list(factors))


def box_maps(fs, source: BoxDiagram, target: BoxDiagram) -> IMap:
    """``f_1 [x] ... [x] f_n`` between given convolutions."""
    def leg(m, tag):
        ks, gv = tag

        def fn(label):
            return target.project(m, ks, gv, tuple(f.maps[k](c) for f, k, c in zip(fs, ks, label)))
        return fn
    return source.induced_imap(target, leg)


def box_symmetry(XY: BoxDiagram, YX: BoxDiagram) -> IMap:
    """``X [x] Y -> Y [x] X`` induced by the block swap."""
    def leg(m, tag):
        (a, b), gv = tag
        g = Injection(m, gv) @ shuffle(b, a)

        def fn(label):
            return YX.project(m, (b, a), g, (label[1], label[0]))
        return fn
    return XY.induced_imap(YX, leg)


def left_unitor(UX: BoxDiagram) -> IMap:
    """``F_0(*) [x] X -> X``."""
    X = UX.factors[1]

    def leg(m, tag):
        (_, a), gv = tag
        f = X.action(Injection(m, gv))
        return lambda label: f(label[1])
    return UX.induced_imap(X, leg)


def associator(XYZ: BoxDiagram, XY_Z: BoxDiagram, XY: BoxDiagram) -> IMap:
    """``X [x] Y [x] Z -> (X [x] Y) [x] Z`` via the ternary convolution."""
    def leg(m, tag):
        (a, b, c), gv = tag

        def fn(label):
            inner = XY.project(a + b, (a, b), identity(a + b), label[:2])
            return XY_Z.project(m, (a + b, c), gv, (inner, label[2]))
        return fn
    return XYZ.induced_imap(XY_Z, leg)


def day_comparison(box_FF: BoxDiagram, target: IDiagram) -> IMap:
    """``F_k(K) [x] F_l(L) -> F_{k+l}(K x L)``, ``(b1, x), (b2, y), g -> (g (b1 + b2), (x, y))``."""
    X, Y = box_FF.factors

    def leg(m, tag):
        (a, b), gv = tag
        g = Injection(m, gv)

        def fn(label):
            (l1, s1), (l2, s2) = label
            (b1, x), (b2, y) = l1, l2
            inj = g @ concat(Injection(a, b1), Injection(b, b2))
            return S.nondeg((inj.values, ((x, s1), (y, s2))), len(s1) - 1)
        return fn
    return box_FF.induced_imap(target, leg)


# -- powers and symmetric group actions -------------------------------------

def power(X: IDiagram, n: int) -> BoxDiagram:
    if n < 1:
        raise ValueError("power needs n >= 1")
    P = BoxDiagram([X] * n, name=f"{X.name}^{n}")
    return P


def sigma_act(P: BoxDiagram, perm, m: int) -> S.SMap:
    """Permutation action on ``P(m)`` for ``P`` a power; factor ``j`` moves to slot ``perm[j]``."""
    col = P.colims[m]
    inv = perm_inverse(perm)
    mapping = {}
    for label, p in col.sset.dim.items():
        (ks, gv), comps = label
        ks2 = tuple(ks[inv[s]] for s in range(len(ks)))
        chi = block_permutation(ks2, inv)
        g2 = Injection(m, gv) @ chi
        comps2 = tuple(comps[inv[s]] for s in range(len(ks)))
        mapping[label] = col.project((ks2, g2.values), S.nondeg(comps2, p))
    return S.SMap(col.sset, col.sset, mapping)


def sigma_free_on_levels(X: IDiagram, n: int, *, P: BoxDiagram | None = None,
                         max_dim: int | None = None) -> tuple[bool, dict | None]:
    """Whether ``Sigma_n`` acts freely on every ``X^n(m)``; returns a witness if not."""
    P = P or power(X, n)
    top = P.d if max_dim is None else min(max_dim, P.d)
    ident = tuple(range(n))
    for m in range(P.N + 1):
        V = P.values[m]
        for perm in _perms(range(n)):
            if perm == ident:
                continue
            f = sigma_act(P, perm, m)
            for p in range(top + 1):
                for y in V.nondeg[p]:
                    if f.mapping[y] == S.nondeg(y, p):
                        return False, {"level": m, "perm": perm, "dim": p, "simplex": y}
    return True, None


# -- pushouts and colimits over the injection category ---------------------

def pushout_diagram(f: IMap, g: IMap) -> ColimitDiagram:
    """Levelwise pushout of ``V <- U -> Y`` along ``f: U -> V``, ``g: U -> Y``."""
    U, V, Y = f.source, f.target, g.target
    if g.source is not U:
        raise ValueError("pushout needs a common source")
    diag = {0: U, 1: V, 2: Y}

    def level(m):
        return ({0: U.values[m], 1: V.values[m], 2: Y.values[m]},
                [(0, 1, f.maps[m].mapping.__getitem__), (0, 2, g.maps[m].mapping.__getitem__)])

    def push(a, tag):
        return tag, diag[tag].action(a).mapping.__getitem__

    out = ColimitDiagram(U.N, U.d, level, push, name="pushout")
    out.legs = (f, g)
    return out


def sphere_diagram(level: int, dim: int, N: int, d: int) -> IDiagram:
    """``F_level`` of the boundary inclusion of ``Delta^dim`` glued to a point."""
    B, D, P = S.boundary(dim, d), S.standard(dim, d), S.point(d)
    U, V, Y = (free_diagram(level, X, N) for X in (B, D, P))
    f = free_map(level, S.inclusion(B, D), U, V)
    collapse = S.SMap(B, P, {y: (P.nondeg[0][0], (0,) * (p + 1)) for y, p in B.dim.items()})
    g = free_map(level, collapse, U, Y)
    X = pushout_diagram(f, g)
    X.name = f"F{level}(S^{dim})"
    return X


def orbit_diagram(X: IDiagram, elements, act) -> ColimitDiagram:
    """Levelwise orbits of a group acting by ``act(g, m) -> SMap`` on ``X(m)``.

    The action must commute with the injection action; relations are one
    self-arrow per group element.
    """
    elements = list(elements)

    def level(m):
        return {0: X.values[m]}, [(0, 0, act(g, m).mapping.__getitem__) for g in elements]

    def push(a, tag):
        return tag, X.action(a).mapping.__getitem__

    return ColimitDiagram(X.N, X.d, level, push, name=f"{X.name}/G")


def pushout_inclusion(P: ColimitDiagram, tag: int) -> IMap:
    src = {0: P.legs[0].source, 1: P.legs[0].target, 2: P.legs[1].target}[tag]
    return IMap(src, P, [P.colims[m].inclusion(tag) for m in range(P.N + 1)])


def _colim_over_levels(X: IDiagram, top: int) -> S.Colimit:
    pieces = {n: X.values[n] for n in range(top + 1)}
    arrows = [(u.m, u.n, X.action(u).mapping.__getitem__)
              for n in range(top + 1) for u in generators(n, top)]
    return S.Colimit(pieces, arrows, X.d)


def colim_I(X: IDiagram) -> tuple[S.SSet, S.Colimit, dict]:
    """Colimit over the materialized injection category, with a stabilization report."""
    col = _colim_over_levels(X, X.N)
    report = {"components": len(S.components(col.sset)), "components_below": None,
              "stable": None}
    if X.N >= 1:
        below = _colim_over_levels(X, X.N - 1)
        report["components_below"] = len(S.components(below.sset))
        report["stable"] = report["components_below"] == report["components"]
    return col.sset, col, report


def colim_map(col: S.Colimit, X: IDiagram) -> dict:
    """Leg functions ``level -> label -> simplex`` of the colimit cocone."""
    return {n: (lambda y, n=n: col.project(n, S.nondeg(y, X.values[n].dim[y])))
            for n in range(X.N + 1)}


# -- homotopy colimits ------------------------------------------------------

def hocolim_I(X: IDiagram, regime: str | None = None):
    """Desk-scale homotopy colimit and its comparison map to ``colim_I``.

    Regimes: ``"grothendieck"`` (nerve of the Grothendieck construction, for
    diagrams carrying category data or levelwise discrete ones) and ``"bk"``
    (diagonal of the simplicial replacement).  Returns
    ``(hocolim, comparison SMap, colim Colimit)``.
    """
    if regime is None:
        if X.categories is not None or is_levelwise_discrete(X):
            regime = "grothendieck"
        else:
            raise RegimeError("diagram carries no category data; pass regime='bk'")
    _, col, _ = colim_I(X)
    if regime == "grothendieck":
        return _hocolim_grothendieck(X, col) + (col,)
    if regime == "bk":
        return _hocolim_bk(X, col) + (col,)
    raise RegimeError(f"unknown regime {regime!r}")


def _hocolim_grothendieck(X: IDiagram, col: S.Colimit):
    icat = getattr(X, "icat", None)
    D = X.categories
    if D is None or icat is None:
        icat = ICat(X.N)
        D = discrete_cat_diagram(X, icat)
        nerve_values = False
    else:
        nerve_values = True
    G = fincat.grothendieck(D)
    H = S.nerve(G, X.d)
    I = icat.cat
    objs, mors = G.structure
    mapping = {}
    for label in H.dim:
        c0, fs = label
        j0, x0 = objs[c0]
        us = [mors[f][0] for f in fs]
        jr = I.tgt[us[-1]] if us else j0
        # w_i = u_r ... u_{i+1} pushes the i-th arrow to the last level
        ws = [I.ident[jr]]
        for u in reversed(us[1:]):
            ws.append(I.compose(ws[-1], u))
        ws.reverse()
        whole = I.compose(ws[0], us[0]) if us else I.ident[j0]
        chain = tuple(D.act(w).mor[mors[f][2]] for f, w in zip(fs, ws))
        Cr = D.values[jr]
        s = S._chain_normal_form(Cr, D.act(whole).ob[x0], chain)
        level = I.objects[jr]
        if not nerve_values:
            (xo, _), sigma = s
            s = (Cr.objects[xo], sigma)
        mapping[label] = col.project(level, s)
    return H, S.SMap(H, col.sset, mapping)


def _hocolim_bk(X: IDiagram, col: S.Colimit):
    icat = ICat(X.N)
    I = icat.cat
    d = X.d
    chains = {0: [(a, ()) for a in range(I.num_objects)]}
    outs: dict = {}
    for f in range(I.num_morphisms):
        outs.setdefault(I.src[f], []).append(f)
    for q in range(1, d + 1):
        chains[q] = [(a, fs + (f,)) for a, fs in chains[q - 1]
                     for f in outs[I.tgt[fs[-1]] if fs else a]]
    level_of = I.objects
    simplices = {}
    for q in range(d + 1):
        simplices[q] = [(a, fs, x) for a, fs in chains[q]
                        for x in X.values[level_of[a]].simplices(q)]

    def push(f, x):
        return X.action(icat.injection(f))(x)

    def face(q, s, i):
        a, fs, x = s
        V = X.values[level_of[a]]
        if i == 0:
            return (I.tgt[fs[0]], fs[1:], push(fs[0], V.face(x, 0)))
        if i == q:
            return (a, fs[:-1], V.face(x, q))
        merged = fs[:i - 1] + (I.compose(fs[i], fs[i - 1]),) + fs[i + 1:]
        return (a, merged, V.face(x, i))

    def degen(q, s, i):
        a, fs, x = s
        objs = [a] + [I.tgt[f] for f in fs]
        V = X.values[level_of[a]]
        return (a, fs[:i] + (I.ident[objs[i]],) + fs[i:], V.degen(x, i))

    H = S.from_full(d, simplices, face, degen)
    mapping = {}
    for label in H.dim:
        a, fs, x = label
        y = x
        end = a
        for f in fs:
            y = push(f, y)
            end = I.tgt[f]
        mapping[label] = col.project(level_of[end], y)
    return H, S.SMap(H, col.sset, mapping)


def comparison_is_homology_iso(X: IDiagram, regime: str | None = None) -> dict:
    """Cone homology of ``hocolim_I X -> colim_I X`` through the trusted range."""
    H, f, col = hocolim_I(X, regime)
    top = X.d - 1
    cone = [S.cone_homology(f, k) for k in range(top + 1)]
    return {"cone_homology": cone, "iso_through": top - 1,
            "is_iso": all(c == (0, []) for c in cone),
            "hocolim_homology": [S.homology(H, k) for k in range(top + 1)],
            "colim_homology": [S.homology(col.sset, k) for k in range(top + 1)]}


# -- commutative monoids ----------------------------------------------------

class CommIMonoid:
    """An IDiagram ``A`` with unit ``F_0(*) -> A`` and multiplication ``A [x] A -> A``."""

    def __init__(self, A: IDiagram, unit: IMap, mult: IMap, AA: BoxDiagram):
        self.A, self.unit, self.mult, self.AA = A, unit, mult, AA


def validate_comm_monoid(M: CommIMonoid, AAA: BoxDiagram | None = None) -> list[str]:
    """Naturality, unit, associativity and commutativity as exact equalities."""
    A, AA, mult = M.A, M.AA, M.mult
    failures = [f"unit: {p}" for p in validate_imap(M.unit)]
    failures += [f"mult: {p}" for p in validate_imap(mult)]
    u0 = M.unit.maps[0].mapping[((), (0,))]

    # unit laws: mult(u, x) = A(gamma) x = mult(x, u)
    for a in range(A.N + 1):
        V = A.values[a]
        for m in range(a, A.N + 1):
            for g in injections(a, m):
                fg = A.action(g)
                for y, p in V.dim.items():
                    x = S.nondeg(y, p)
                    u = (u0[0], tuple(u0[1][0] for _ in range(p + 1)))
                    want = fg(x)
                    if mult.maps[m](AA.project(m, (0, a), g, (u, x))) != want:
                        failures.append(f"left unit fails at level {m}, {g}, {y!r}")
                    if mult.maps[m](AA.project(m, (a, 0), g, (x, u))) != want:
                        failures.append(f"right unit fails at level {m}, {g}, {y!r}")

    sym = box_symmetry(AA, AA)
    twisted = compose_imaps(mult, sym)
    for m in range(A.N + 1):
        if twisted.maps[m].mapping != mult.maps[m].mapping:
            bad = next(y for y in mult.maps[m].mapping
                       if twisted.maps[m].mapping[y] != mult.maps[m].mapping[y])
            failures.append(f"commutativity fails at level {m} on {bad!r}")

    AAA = AAA or box_many([A, A, A])
    for m in range(A.N + 1):
        for (ks, gv), label in AAA.representatives(m):
            a, b, c = ks
            x, y, z = label
            ab = mult.maps[a + b](AA.project(a + b, (a, b), identity(a + b), (x, y)))
            left = mult.maps[m](AA.project(m, (a + b, c), gv, (ab, z)))
            bc = mult.maps[b + c](AA.project(b + c, (b, c), identity(b + c), (y, z)))
            right = mult.maps[m](AA.project(m, (a, b + c), gv, (x, bc)))
            if left != right:
                failures.append(f"associativity fails at level {m}, piece {(ks, gv)}, {label!r}")
    return failures


def sabotage_level_swap(M: CommIMonoid, m: int = 2) -> CommIMonoid:
    """``M`` with the multiplication at level ``m`` followed by a transposition."""
    if m < 2:
        raise ValueError("a level swap needs level >= 2")
    swap = Injection(m, (2, 1) + tuple(range(3, m + 1)))
    maps = list(M.mult.maps)
    maps[m] = S.compose_maps(M.A.action(swap), maps[m])
    return CommIMonoid(M.A, M.unit, IMap(M.AA, M.A, maps), M.AA)


def trivial_monoid(N: int, d: int) -> CommIMonoid:
    """``F_0(*)`` with the identity unit and the collapse multiplication."""
    U = unit_diagram(N, d)
    UU = box(U, U)
    mult = IMap(UU, U, [S.SMap(UU.values[m], U.values[m],
                               {y: (U.values[m].nondeg[0][0], tuple(0 for _ in range(p + 1)))
                                for y, p in UU.values[m].dim.items()})
                        for m in range(N + 1)])
    return CommIMonoid(U, identity_imap(U), mult, UU)
