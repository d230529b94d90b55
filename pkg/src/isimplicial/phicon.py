"""The tuple construction on a permutative category and its nerve as a commutative monoid.

Level ``n`` has ``n``-tuples of objects, with morphisms the base morphisms
between tensor products.  Injections place entries and fill in the unit;
morphisms are conjugated by the reordering symmetry, built by insertion sort.
"""

from __future__ import annotations

from functools import reduce

from . import fincat
from . import idiag as I
from . import sset as S
from .injcat import ICat, Injection, injections


class PermCat:
    """A strict symmetric monoidal category on a FinCat.

    ``tensor`` is a Functor ``base x base -> base`` (product ids as in
    :func:`fincat.product`), ``unit`` an object id and ``sym[(a, b)]`` the
    morphism id of ``a (x) b -> b (x) a``.
    """

    def __init__(self, base: fincat.FinCat, tensor: fincat.Functor, unit: int, sym: dict,
                 *, name=""):
        self.base, self.tensor, self.unit, self.sym = base, tensor, unit, dict(sym)
        self.name = name
        self._n = base.num_objects
        self._nm = base.num_morphisms

    def tob(self, a: int, b: int) -> int:
        return self.tensor.ob[a * self._n + b]

    def tmor(self, f: int, g: int) -> int:
        return self.tensor.mor[f * self._nm + g]

    def tob_all(self, objs) -> int:
        return reduce(self.tob, objs, self.unit)

    def tmor_all(self, mors) -> int:
        return reduce(self.tmor, mors, self.base.ident[self.unit])


def from_tables(objects, morphisms, identities, compose, tensor_ob, tensor_mor, unit, sym,
                *, name="") -> PermCat:
    """Build from name-level tables; ``tensor_ob``/``tensor_mor`` are dicts on name pairs."""
    C = fincat.FinCat(objects, morphisms, identities, compose)
    CC = fincat.product(C, C)
    ob = [C.oid(tensor_ob[(C.objects[a], C.objects[b])])
          for a in range(C.num_objects) for b in range(C.num_objects)]
    mor = [C.mid(tensor_mor[(C.morphisms[f], C.morphisms[g])])
           for f in range(C.num_morphisms) for g in range(C.num_morphisms)]
    T = fincat.Functor(CC, C, ob, mor)
    s = {(C.oid(a), C.oid(b)): C.mid(f) for (a, b), f in sym.items()}
    return PermCat(C, T, C.oid(unit), s, name=name)


def validate_permcat(A: PermCat) -> list[str]:
    """Functoriality, strict associativity and unit, and symmetry axioms."""
    C = A.base
    obs, ms = range(C.num_objects), range(C.num_morphisms)
    problems = [f"tensor: {p}" for p in fincat.validate_functor(A.tensor)]
    e = A.unit
    for a in obs:
        if A.tob(e, a) != a or A.tob(a, e) != a:
            problems.append(f"unit not strict on object {C.objects[a]!r}")
    for f in ms:
        ie = C.ident[e]
        if A.tmor(ie, f) != f or A.tmor(f, ie) != f:
            problems.append(f"unit not strict on morphism {C.morphisms[f]!r}")
    for a in obs:
        for b in obs:
            for c in obs:
                if A.tob(A.tob(a, b), c) != A.tob(a, A.tob(b, c)):
                    problems.append(f"tensor not associative on {C.objects[a]!r}, {C.objects[b]!r}, {C.objects[c]!r}")
    for f in ms:
        for g in ms:
            for h in ms:
                if A.tmor(A.tmor(f, g), h) != A.tmor(f, A.tmor(g, h)):
                    problems.append("tensor not associative on morphisms")
    for (a, b) in [(a, b) for a in obs for b in obs]:
        t = A.sym.get((a, b))
        if t is None:
            problems.append(f"missing symmetry at {C.objects[a]!r}, {C.objects[b]!r}")
            continue
        if C.src[t] != A.tob(a, b) or C.tgt[t] != A.tob(b, a):
            problems.append(f"symmetry at {C.objects[a]!r}, {C.objects[b]!r} has wrong ends")
            continue
        if C.compose(A.sym[(b, a)], t) != C.ident[A.tob(a, b)]:
            problems.append(f"symmetry not involutive at {C.objects[a]!r}, {C.objects[b]!r}")
        for c in obs:
            lhs = A.sym[(a, A.tob(b, c))]
            rhs = C.compose(A.tmor(C.ident[b], A.sym[(a, c)]), A.tmor(A.sym[(a, b)], C.ident[c]))
            if lhs != rhs:
                problems.append(f"hexagon fails at {C.objects[a]!r}, {C.objects[b]!r}, {C.objects[c]!r}")
    if problems:
        return problems
    for f in ms:
        for g in ms:
            a, b, a2, b2 = C.src[f], C.src[g], C.tgt[f], C.tgt[g]
            if C.compose(A.sym[(a2, b2)], A.tmor(f, g)) != C.compose(A.tmor(g, f), A.sym[(a, b)]):
                problems.append(f"symmetry not natural at {C.morphisms[f]!r}, {C.morphisms[g]!r}")
    return problems


# -- corpus -------------------------------------------------------------------

def z2_discrete() -> PermCat:
    """Objects ``0, 1`` under addition mod 2; only identities."""
    objs = [0, 1]
    mors = [(f"id{a}", a, a) for a in objs]
    ids = {a: f"id{a}" for a in objs}
    comp = [(f"id{a}", f"id{a}", f"id{a}") for a in objs]
    tob = {(a, b): (a + b) % 2 for a in objs for b in objs}
    tmor = {(f"id{a}", f"id{b}"): f"id{(a + b) % 2}" for a in objs for b in objs}
    sym = {(a, b): f"id{(a + b) % 2}" for a in objs for b in objs}
    return from_tables(objs, mors, ids, comp, tob, tmor, 0, sym, name="Z/2 discrete")


def z2_one_object() -> PermCat:
    """One object; morphisms ``e, t`` forming Z/2; tensor is multiplication, symmetry trivial."""
    mul = {("e", "e"): "e", ("e", "t"): "t", ("t", "e"): "t", ("t", "t"): "e"}
    mors = [("e", "*", "*"), ("t", "*", "*")]
    comp = [(g, f, h) for (g, f), h in mul.items()]
    return from_tables(["*"], mors, {"*": "e"}, comp, {("*", "*"): "*"}, mul, "*",
                       {("*", "*"): "e"}, name="Z/2 one object")


def z2_signed() -> PermCat:
    """Parities ``0, 1``, each with automorphism group ``{e, t}``; ``tau_{1,1} = t``."""
    objs = [0, 1]
    mors = [(f"{g}{a}", a, a) for a in objs for g in "et"]
    ids = {a: f"e{a}" for a in objs}
    mul = {("e", "e"): "e", ("e", "t"): "t", ("t", "e"): "t", ("t", "t"): "e"}
    comp = [(f"{g}{a}", f"{f}{a}", f"{h}{a}") for a in objs for (g, f), h in mul.items()]
    tob = {(a, b): (a + b) % 2 for a in objs for b in objs}
    tmor = {(f"{g}{a}", f"{h}{b}"): f"{mul[(g, h)]}{(a + b) % 2}"
            for a in objs for b in objs for g in "et" for h in "et"}
    sym = {(a, b): f"{'t' if a * b else 'e'}{(a + b) % 2}" for a in objs for b in objs}
    return from_tables(objs, mors, ids, comp, tob, tmor, 0, sym, name="Z/2 signed")


def trivial_permcat() -> PermCat:
    return from_tables(["*"], [("e", "*", "*")], {"*": "e"}, [("e", "e", "e")],
                       {("*", "*"): "*"}, {("e", "e"): "e"}, "*", {("*", "*"): "e"},
                       name="trivial")


def corpus() -> dict:
    return {"z2-discrete": z2_discrete(), "z2-one-object": z2_one_object(),
            "z2-signed": z2_signed()}


# -- the construction ---------------------------------------------------------

def phi_level(A: PermCat, n: int) -> fincat.FinCat:
    """Objects: ``n``-tuples of object names; morphisms ``(src, tgt, f)`` with ``f`` a base name."""
    C = A.base
    tuples = [()]
    for _ in range(n):
        tuples = [t + (a,) for t in tuples for a in range(C.num_objects)]
    names = [tuple(C.objects[a] for a in t) for t in tuples]
    ten = {nm: A.tob_all(t) for nm, t in zip(names, tuples)}

    def hom(a, b):
        return [(a, b, C.morphisms[f]) for f in C.hom(ten[a], ten[b])]

    def comp(g, f):
        return (f[0], g[1], C.morphisms[C.compose(C.mid(g[2]), C.mid(f[2]))])

    def ident(a):
        return (a, a, C.morphisms[C.ident[ten[a]]])

    P = fincat.FinCat.generate(names, hom, comp, ident)
    P.tuples = tuples
    P.base_mor = [C.mid(m[2]) for m in P.morphisms]
    return P


def reorder_iso(A: PermCat, word, perm) -> int:
    """Symmetry ``(x) word -> (x) [word[perm[0]], word[perm[1]], ...]`` by insertion sort.

    ``perm`` lists, for each target position, the source position it takes.
    """
    C = A.base
    cur = list(range(len(word)))
    mor = C.ident[A.tob_all(word)]
    rank = {src: pos for pos, src in enumerate(perm)}
    # insertion sort of cur by rank, recording adjacent swaps
    for i in range(1, len(cur)):
        j = i
        while j > 0 and rank[cur[j - 1]] > rank[cur[j]]:
            objs = [word[x] for x in cur]
            pre = A.tob_all(objs[:j - 1])
            post = A.tob_all(objs[j + 1:])
            step = A.tmor(A.tmor(C.ident[pre], A.sym[(objs[j - 1], objs[j])]), C.ident[post])
            mor = C.compose(step, mor)
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            j -= 1
    return mor


def phi_action(A: PermCat, a: Injection, source: fincat.FinCat | None = None,
               target: fincat.FinCat | None = None) -> fincat.Functor:
    """Place entry ``j`` at position ``a(j)``, the unit elsewhere; conjugate by the reordering."""
    C = A.base
    P = source or phi_level(A, a.m)
    Q = target or phi_level(A, a.n)
    order = sorted(range(a.m), key=lambda j: a.values[j])
    isos = []
    ob = []
    for t in P.tuples:
        out = [A.unit] * a.n
        for j, x in enumerate(t):
            out[a.values[j] - 1] = x
        ob.append(Q.oid(tuple(C.objects[x] for x in out)))
        isos.append(reorder_iso(A, list(t), order))
    mor = []
    for f in range(P.num_morphisms):
        s, t = P.src[f], P.tgt[f]
        inv = C.inverse(isos[s])
        g = C.compose(isos[t], C.compose(P.base_mor[f], inv))
        mor.append(Q.mid((Q.objects[ob[s]], Q.objects[ob[t]], C.morphisms[g])))
    return fincat.Functor(P, Q, ob, mor)


def phi_diagram(A: PermCat, N: int) -> tuple[fincat.CatDiagram, ICat]:
    icat = ICat(N)
    levels = [phi_level(A, n) for n in range(N + 1)]
    D = fincat.CatDiagram(icat.cat, levels, lambda u: phi_action(
        A, icat.injection(u), levels[icat.injection(u).m], levels[icat.injection(u).n]))
    return D, icat


def concat_functor(A: PermCat, P: fincat.FinCat, Q: fincat.FinCat, R: fincat.FinCat):
    """``Phi(a) x Phi(b) -> Phi(a + b)`` on ids: ``(f, g) -> f (x) g``."""
    C = A.base

    def ob(x, y):
        return R.oid(P.objects[x] + Q.objects[y])

    def mor(f, g):
        h = A.tmor(P.base_mor[f], Q.base_mor[g])
        return R.mid((R.objects[ob(P.src[f], Q.src[g])], R.objects[ob(P.tgt[f], Q.tgt[g])],
                      C.morphisms[h]))
    return ob, mor


def n_phi(A: PermCat, N: int, d: int) -> I.CommIMonoid:
    """The nerve of the tuple construction as a commutative monoid in IDiagrams."""
    D, icat = phi_diagram(A, N)
    X = I.nerve_diagram(D, icat, d)
    U = I.unit_diagram(N, d)
    unit_obj = tuple(A.base.objects[A.unit] for _ in range(N + 1))
    unit = I.IMap(U, X, [S.SMap(U.values[m], X.values[m],
                                {y: S.nondeg((D.values[m].oid(unit_obj[:m]), ()), 0)
                                 for y in U.values[m].dim})
                         for m in range(N + 1)])
    XX = I.box(X, X)
    levels = D.values

    def leg(m, tag):
        (a, b), gv = tag
        ob, mor = concat_functor(A, levels[a], levels[b], levels[a + b])
        G = D.act(icat.mid(Injection(m, gv)))
        T = levels[m]

        def fn(label):
            c1, c2 = label
            x0, f1 = S.chain_of(levels[a], c1)
            y0, f2 = S.chain_of(levels[b], c2)
            chain = tuple(G.mor[mor(f, g)] for f, g in zip(f1, f2))
            return S._chain_normal_form(T, G.ob[ob(x0, y0)], chain)
        return fn

    mult = XX.induced_imap(X, leg)
    M = I.CommIMonoid(X, unit, mult, XX)
    M.permcat, M.cat_diagram = A, D
    return M


def tensoring_functor(A: PermCat, P: fincat.FinCat) -> fincat.Functor:
    C = A.base
    return fincat.Functor(P, C, [A.tob_all(t) for t in P.tuples], P.base_mor)


def levelwise_equivalence_suite(A: PermCat, N: int) -> dict:
    """Tensoring functors and positive-level actions are equivalences of categories."""
    if N < 1:
        raise ValueError("need N >= 1")
    levels = [phi_level(A, n) for n in range(N + 1)]
    tens = {n: fincat.is_equivalence(tensoring_functor(A, levels[n])) for n in range(1, N + 1)}
    actions, from_zero = {}, {}
    for m in range(N + 1):
        for n in range(m, N + 1):
            for a in injections(m, n):
                ok = fincat.is_equivalence(phi_action(A, a, levels[m], levels[n]))
                (actions if m >= 1 else from_zero)[a.key()] = ok
    return {"tensoring": tens, "positive_actions": actions, "from_level_zero": from_zero,
            "all_equivalences": all(tens.values()) and all(actions.values())}


def functoriality_problems(A: PermCat, N: int) -> list[str]:
    D, icat = phi_diagram(A, N)
    return fincat.validate_diagram(D)


def quasicategory_report(A: PermCat, N: int, through_dim: int = 3) -> dict:
    """Inner horn filler counts for every level's nerve."""
    out = {}
    for n in range(N + 1):
        X = S.nerve(phi_level(A, n), through_dim)
        out[n] = S.inner_horn_report(X, through_dim)
    return out
