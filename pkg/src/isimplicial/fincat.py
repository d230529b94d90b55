"""Finite categories, functors, comma categories and the Grothendieck construction.

Objects and morphisms carry arbitrary hashable names externally and dense
integer ids internally.  Construction validates the tables and refuses
anything that is not a category.
"""

from __future__ import annotations

from ._util import UnionFind, sort_key


class InvalidCategory(ValueError):
    def __init__(self, problems):
        super().__init__("; ".join(problems[:5]))
        self.problems = problems


def validate_category(objects, morphisms, identities, compose) -> list[str]:
    """Return the violated category axioms of raw tables (empty iff valid).

    ``morphisms`` is a list of ``(name, src, tgt)``, ``identities`` maps
    object names to morphism names and ``compose`` lists ``(g, f, gf)``
    triples meaning ``g . f = gf``.
    """
    problems = []
    objs = set(objects)
    if len(objs) != len(objects):
        problems.append("duplicate object names")
    src, tgt = {}, {}
    for name, s, t in morphisms:
        if name in src:
            problems.append(f"duplicate morphism {name!r}")
        if s not in objs or t not in objs:
            problems.append(f"morphism {name!r} has unknown endpoint")
        src[name], tgt[name] = s, t
    for a in objects:
        i = identities.get(a)
        if i not in src or src[i] != a or tgt[i] != a:
            problems.append(f"bad identity at object {a!r}")
    table = {}
    for g, f, gf in compose:
        if f not in src or g not in src or gf not in src:
            problems.append(f"composite ({g!r}, {f!r}) mentions unknown morphism")
            continue
        if tgt[f] != src[g]:
            problems.append(f"composite ({g!r}, {f!r}) defined on non-composable pair")
        if (g, f) in table and table[(g, f)] != gf:
            problems.append(f"composite ({g!r}, {f!r}) defined twice")
        table[(g, f)] = gf
        if src[gf] != src[f] or tgt[gf] != tgt[g]:
            problems.append(f"composite ({g!r}, {f!r}) = {gf!r} has wrong endpoints")
    if problems:
        return problems
    names = [m[0] for m in morphisms]
    out_of = {a: [] for a in objects}
    for n in names:
        out_of[src[n]].append(n)
    for f in names:
        for g in out_of[tgt[f]]:
            if (g, f) not in table:
                problems.append(f"composite ({g!r}, {f!r}) missing")
    if problems:
        return problems
    for f in names:
        if table[(identities[tgt[f]], f)] != f or table[(f, identities[src[f]])] != f:
            problems.append(f"identity law fails for {f!r}")
    for f in names:
        for g in out_of[tgt[f]]:
            gf = table[(g, f)]
            for h in out_of[tgt[g]]:
                if table[(h, gf)] != table[(table[(h, g)], f)]:
                    problems.append(f"associativity fails on ({h!r}, {g!r}, {f!r})")
    return problems


class FinCat:
    """A finite category with integer-indexed objects and morphisms."""

    def __init__(self, objects, morphisms, identities, compose, *, check=True):
        if check:
            problems = validate_category(objects, morphisms, identities, compose)
            if problems:
                raise InvalidCategory(problems)
        self.objects = list(objects)
        self._oid = {o: i for i, o in enumerate(self.objects)}
        self.morphisms = [m[0] for m in morphisms]
        self._mid = {m: i for i, m in enumerate(self.morphisms)}
        self.src = [self._oid[m[1]] for m in morphisms]
        self.tgt = [self._oid[m[2]] for m in morphisms]
        self.ident = [self._mid[identities[o]] for o in self.objects]
        self.comp = {(self._mid[g], self._mid[f]): self._mid[gf] for g, f, gf in compose}
        self.homs: dict[tuple[int, int], list[int]] = {}
        for f in range(len(self.morphisms)):
            self.homs.setdefault((self.src[f], self.tgt[f]), []).append(f)

    @classmethod
    def from_ids(cls, objects, morphisms, src, tgt, ident, comp):
        """Build from already-dense integer tables, skipping validation."""
        self = cls.__new__(cls)
        self.objects = list(objects)
        self._oid = {o: i for i, o in enumerate(self.objects)}
        self.morphisms = list(morphisms)
        self._mid = {m: i for i, m in enumerate(self.morphisms)}
        self.src, self.tgt, self.ident = list(src), list(tgt), list(ident)
        self.comp = dict(comp)
        self.homs = {}
        for f in range(len(self.morphisms)):
            self.homs.setdefault((self.src[f], self.tgt[f]), []).append(f)
        return self

    @classmethod
    def generate(cls, objects, hom, compose_fn, identity_fn, *, check=False):
        """Build from a hom function and a composition rule on morphism names.

        ``hom(a, b)`` lists morphism names from ``a`` to ``b``; names must be
        unique across the whole category.
        """
        mors, src, tgt = [], [], []
        for i, a in enumerate(objects):
            for j, b in enumerate(objects):
                for f in hom(a, b):
                    mors.append(f)
                    src.append(i)
                    tgt.append(j)
        mid = {m: i for i, m in enumerate(mors)}
        ident = [mid[identity_fn(a)] for a in objects]
        comp = {}
        outs: dict[int, list[int]] = {}
        for f in range(len(mors)):
            outs.setdefault(src[f], []).append(f)
        for f in range(len(mors)):
            for g in outs.get(tgt[f], []):
                comp[(g, f)] = mid[compose_fn(mors[g], mors[f])]
        C = cls.from_ids(objects, mors, src, tgt, ident, comp)
        if check:
            problems = validate_category(*C.tables())
            if problems:
                raise InvalidCategory(problems)
        return C

    def tables(self):
        mors = [(m, self.objects[self.src[i]], self.objects[self.tgt[i]])
                for i, m in enumerate(self.morphisms)]
        idents = {o: self.morphisms[self.ident[i]] for i, o in enumerate(self.objects)}
        comp = [(self.morphisms[g], self.morphisms[f], self.morphisms[gf])
                for (g, f), gf in self.comp.items()]
        return self.objects, mors, idents, comp

    @property
    def num_objects(self) -> int:
        return len(self.objects)

    @property
    def num_morphisms(self) -> int:
        return len(self.morphisms)

    def oid(self, name) -> int:
        return self._oid[name]

    def mid(self, name) -> int:
        return self._mid[name]

    def hom(self, a: int, b: int) -> list[int]:
        return self.homs.get((a, b), [])

    def compose(self, g: int, f: int) -> int:
        return self.comp[(g, f)]

    def is_identity(self, f: int) -> bool:
        return self.ident[self.src[f]] == f

    def inverse(self, f: int):
        """The inverse of ``f`` or None."""
        a, b = self.src[f], self.tgt[f]
        for g in self.hom(b, a):
            if self.comp[(g, f)] == self.ident[a] and self.comp[(f, g)] == self.ident[b]:
                return g
        return None

    def __repr__(self):
        return f"FinCat({self.num_objects} objects, {self.num_morphisms} morphisms)"


def validate(C: FinCat) -> list[str]:
    return validate_category(*C.tables())


# --- small constructors -------------------------------------------------------

def terminal() -> FinCat:
    return FinCat(["*"], [("id", "*", "*")], {"*": "id"}, [("id", "id", "id")])


def empty() -> FinCat:
    return FinCat([], [], {}, [])


def discrete(objects) -> FinCat:
    objects = list(objects)
    return FinCat(objects, [(("id", o), o, o) for o in objects],
                  {o: ("id", o) for o in objects},
                  [(("id", o), ("id", o), ("id", o)) for o in objects])


def codiscrete(objects) -> FinCat:
    """Exactly one morphism between any two objects."""
    objects = list(objects)
    return FinCat.generate(objects, lambda a, b: [(a, b)],
                           lambda g, f: (f[0], g[1]), lambda a: (a, a))


def group_category(elements, multiply, identity) -> FinCat:
    """One-object category of a finite group (or monoid)."""
    elements = list(elements)
    return FinCat(["*"], [(g, "*", "*") for g in elements], {"*": identity},
                  [(g, f, multiply(g, f)) for g in elements for f in elements])


def arrow_category(n: int) -> FinCat:
    """The poset ``0 < 1 < ... < n``."""
    objs = list(range(n + 1))
    return FinCat.generate(objs, lambda a, b: [(a, b)] if a <= b else [],
                           lambda g, f: (f[0], g[1]), lambda a: (a, a))


def product(C: FinCat, D: FinCat) -> FinCat:
    objs = [(a, b) for a in C.objects for b in D.objects]
    mors, src, tgt = [], [], []
    for f in range(C.num_morphisms):
        for g in range(D.num_morphisms):
            mors.append((C.morphisms[f], D.morphisms[g]))
            src.append(C.src[f] * D.num_objects + D.src[g])
            tgt.append(C.tgt[f] * D.num_objects + D.tgt[g])
    nD = D.num_morphisms
    ident = [C.ident[a] * nD + D.ident[b] for a in range(C.num_objects) for b in range(D.num_objects)]
    comp = {}
    for (g1, f1), h1 in C.comp.items():
        for (g2, f2), h2 in D.comp.items():
            comp[(g1 * nD + g2, f1 * nD + f2)] = h1 * nD + h2
    return FinCat.from_ids(objs, mors, src, tgt, ident, comp)


# --- functors ----------------------------------------------------------------

class Functor:
    def __init__(self, source: FinCat, target: FinCat, ob, mor):
        self.source, self.target = source, target
        self.ob = tuple(ob)
        self.mor = tuple(mor)

    @classmethod
    def from_names(cls, source, target, ob: dict, mor: dict):
        return cls(source, target,
                   [target.oid(ob[o]) for o in source.objects],
                   [target.mid(mor[m]) for m in source.morphisms])

    def __call__(self, f: int) -> int:
        return self.mor[f]

    def __eq__(self, other):
        return (isinstance(other, Functor) and self.source is other.source
                and self.target is other.target and self.ob == other.ob
                and self.mor == other.mor)

    def __hash__(self):
        return hash((self.ob, self.mor))

    def __repr__(self):
        return f"Functor({self.source!r} -> {self.target!r})"


def identity_functor(C: FinCat) -> Functor:
    return Functor(C, C, range(C.num_objects), range(C.num_morphisms))


def compose_functors(G: Functor, F: Functor) -> Functor:
    return Functor(F.source, G.target, [G.ob[a] for a in F.ob], [G.mor[f] for f in F.mor])


def validate_functor(F: Functor) -> list[str]:
    C, D = F.source, F.target
    problems = []
    for f in range(C.num_morphisms):
        g = F.mor[f]
        if D.src[g] != F.ob[C.src[f]] or D.tgt[g] != F.ob[C.tgt[f]]:
            problems.append(f"endpoints not preserved at {C.morphisms[f]!r}")
    for a in range(C.num_objects):
        if F.mor[C.ident[a]] != D.ident[F.ob[a]]:
            problems.append(f"identity not preserved at {C.objects[a]!r}")
    if problems:
        return problems
    for (g, f), gf in C.comp.items():
        if F.mor[gf] != D.compose(F.mor[g], F.mor[f]):
            problems.append(f"composition not preserved at ({C.morphisms[g]!r}, {C.morphisms[f]!r})")
    return problems


def is_isomorphic_objects(C: FinCat, a: int, b: int) -> bool:
    return any(C.inverse(f) is not None for f in C.hom(a, b))


def is_equivalence(F: Functor) -> bool:
    """Fully faithful and essentially surjective, decided by exhaustive search."""
    C, D = F.source, F.target
    for a in range(C.num_objects):
        for b in range(C.num_objects):
            images = [F.mor[f] for f in C.hom(a, b)]
            if len(set(images)) != len(images) or len(images) != len(D.hom(F.ob[a], F.ob[b])):
                return False
    image = set(F.ob)
    for d in range(D.num_objects):
        if d not in image and not any(is_isomorphic_objects(D, e, d) for e in image):
            return False
    return True


# --- comma categories, components, terminal objects ---------------------------

def comma(F: Functor, c, side: str = "over") -> FinCat:
    """The comma category ``F / c`` (``side="over"``) or ``c / F`` (``"under"``).

    ``c`` is an object id of ``F.target``.  Over: objects ``(j, f: F j -> c)``
    and morphisms ``u: j -> j'`` with ``f' F(u) = f``.
    """
    J, C = F.source, F.target
    objs = []
    for j in range(J.num_objects):
        fs = C.hom(F.ob[j], c) if side == "over" else C.hom(c, F.ob[j])
        objs.extend((j, f) for f in fs)
    mors, src, tgt, comp = [], [], [], {}
    by_source: dict[int, list[tuple[int, int]]] = {}
    for x, (j, f) in enumerate(objs):
        for y, (j2, f2) in enumerate(objs):
            for u in J.hom(j, j2):
                if side == "over":
                    ok = C.compose(f2, F.mor[u]) == f
                else:
                    ok = C.compose(F.mor[u], f) == f2
                if ok:
                    by_source.setdefault(x, []).append((len(mors), u))
                    mors.append((J.morphisms[u], x, y))
                    src.append(x)
                    tgt.append(y)
    index = {(src[i], J.mid(mors[i][0]), tgt[i]): i for i in range(len(mors))}
    ident = [index[(x, J.ident[j], x)] for x, (j, _) in enumerate(objs)]
    for i, u in (p for x in by_source for p in by_source[x]):
        for k, v in by_source.get(tgt[i], []):
            comp[(k, i)] = index[(src[i], J.compose(v, u), tgt[k])]
    names = [(J.objects[j], C.morphisms[f]) for j, f in objs]
    mor_names = [(m[0], names[m[1]], names[m[2]]) for m in mors]
    return FinCat.from_ids(names, mor_names, src, tgt, ident, comp)


def components(C: FinCat) -> list[list[int]]:
    """Connected components as sorted lists of object ids, ordered by least member."""
    uf = UnionFind(C.num_objects)
    for f in range(C.num_morphisms):
        uf.union(C.src[f], C.tgt[f])
    return sorted(uf.classes().values())


def terminal_objects(C: FinCat, among=None) -> list[int]:
    """Objects receiving exactly one morphism from every object of ``among``."""
    among = range(C.num_objects) if among is None else among
    return [t for t in among if all(len(C.hom(a, t)) == 1 for a in among)]


def component_terminals(C: FinCat) -> list[tuple[list[int], list[int]]]:
    return [(comp, terminal_objects(C, comp)) for comp in components(C)]


# --- diagrams of categories --------------------------------------------------

class CatDiagram:
    """A functor from a finite index category to finite categories.

    ``action`` maps index morphism ids to Functors; it may be a dict or a
    callable, evaluated lazily and cached.
    """

    def __init__(self, index: FinCat, values, action):
        self.index = index
        self.values = list(values)
        self._action = action
        self._cache: dict[int, Functor] = {}

    def act(self, u: int) -> Functor:
        if u not in self._cache:
            a = self._action
            self._cache[u] = a[u] if isinstance(a, dict) else a(u)
        return self._cache[u]


def validate_diagram(D: CatDiagram) -> list[str]:
    I = D.index
    problems = []
    for u in range(I.num_morphisms):
        F = D.act(u)
        if F.source is not D.values[I.src[u]] or F.target is not D.values[I.tgt[u]]:
            problems.append(f"action of {I.morphisms[u]!r} has wrong endpoints")
        elif validate_functor(F):
            problems.append(f"action of {I.morphisms[u]!r} is not a functor")
    for a in range(I.num_objects):
        if D.act(I.ident[a]) != identity_functor(D.values[a]):
            problems.append(f"identity at {I.objects[a]!r} acts nontrivially")
    for (g, f), gf in I.comp.items():
        if compose_functors(D.act(g), D.act(f)) != D.act(gf):
            problems.append(f"composition law fails at ({I.morphisms[g]!r}, {I.morphisms[f]!r})")
    return problems


def grothendieck(D: CatDiagram) -> FinCat:
    """Objects ``(j, x)``; morphisms ``(u, g)`` with ``g: D(u) x -> x'``.

    Composition is ``(u', g') (u, g) = (u' u, g' D(u')(g))``.
    """
    I = D.index
    objs = [(j, x) for j in range(I.num_objects) for x in range(D.values[j].num_objects)]
    oid = {o: i for i, o in enumerate(objs)}
    mors, src, tgt = [], [], []
    out: dict[int, list[int]] = {}
    leaving: dict[int, list[int]] = {}
    for u in range(I.num_morphisms):
        leaving.setdefault(I.src[u], []).append(u)
    for (j, x) in objs:
        for u in leaving.get(j, []):
            F = D.act(u)
            Y = D.values[I.tgt[u]]
            fx = F.ob[x]
            for x2 in range(Y.num_objects):
                for g in Y.hom(fx, x2):
                    out.setdefault(oid[(j, x)], []).append(len(mors))
                    mors.append((u, x, g))
                    src.append(oid[(j, x)])
                    tgt.append(oid[(I.tgt[u], x2)])
    mid = {m: i for i, m in enumerate(mors)}
    ident = [mid[(I.ident[j], x, D.values[j].ident[x])] for (j, x) in objs]
    comp = {}
    for i, (u, x, g) in enumerate(mors):
        for k in out.get(tgt[i], []):
            u2, _, g2 = mors[k]
            Y = D.values[I.tgt[u2]]
            comp[(k, i)] = mid[(I.compose(u2, u), x, Y.compose(g2, D.act(u2).mor[g]))]
    names = [(I.objects[j], D.values[j].objects[x]) for j, x in objs]
    mor_names = [(I.morphisms[u], D.values[I.src[u]].objects[x],
                  D.values[I.tgt[u]].morphisms[g]) for u, x, g in mors]
    G = FinCat.from_ids(names, mor_names, src, tgt, ident, comp)
    G.structure = (objs, mors)  # id-level (j, x) and (u, x, g)
    return G


def canonical_order(C: FinCat) -> FinCat:
    """Reindex objects and morphisms in sorted name order."""
    oorder = sorted(range(C.num_objects), key=lambda i: sort_key(C.objects[i]))
    morder = sorted(range(C.num_morphisms), key=lambda i: sort_key(C.morphisms[i]))
    onew = {o: i for i, o in enumerate(oorder)}
    mnew = {m: i for i, m in enumerate(morder)}
    return FinCat.from_ids([C.objects[i] for i in oorder], [C.morphisms[i] for i in morder],
                           [onew[C.src[i]] for i in morder], [onew[C.tgt[i]] for i in morder],
                           [mnew[C.ident[i]] for i in oorder],
                           {(mnew[g], mnew[f]): mnew[h] for (g, f), h in C.comp.items()})

