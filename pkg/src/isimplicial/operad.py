"""Operads in simplicial sets, group quotients, free algebras and pushout-products.

Permutations are 0-based tuples, ``p[i]`` the image of ``i``.  Operads carry
a right action of ``Sigma_n`` on ``D(n)``; for Barratt-Eccles that is
translation ``(t_0, ..., t_q) . s = (t_0 s, ..., t_q s)``.
"""

from __future__ import annotations

from itertools import product as _iproduct

from ._util import CapError, perm_compose, perm_inverse, permutations
from . import idiag as I
from . import sset as S
from .injcat import (Injection, block_permutation, concat, generators, identity,
                     injections, shuffle)


# -- permutation algebra ----------------------------------------------------

def perm_sum(parts):
    """Blockwise sum ``p_1 + ... + p_n``."""
    out, off = [], 0
    for p in parts:
        out.extend(off + x for x in p)
        off += len(p)
    return tuple(out)


def perm_block(sigma, sizes):
    """``sigma<k_1, ..., k_n>``: block ``j`` (size ``k_j``) moves to slot ``sigma[j]``."""
    b = block_permutation(sizes, sigma)
    return tuple(v - 1 for v in b.values)


def assoc_gamma(sigma, taus):
    """Composition in the associative operad ``Sigma_*``."""
    return perm_compose(perm_block(sigma, [len(t) for t in taus]), perm_sum(taus))


def _degenerate_vertex(v, q):
    return (v, (0,) * (q + 1))


# -- group actions ------------------------------------------------------------

class GroupAction:
    """A finite group acting on an SSet (``act(g) -> SMap``) or on an IDiagram
    levelwise (``act(g, m) -> SMap``).

    For SSets the action is a left action unless ``right=True``.
    """

    def __init__(self, target, elements, multiply, identity, act, *, right=False):
        self.target = target
        self.elements = list(elements)
        self.multiply = multiply
        self.identity = identity
        self._act = act
        self.right = right
        self._cache: dict = {}
        self.on_diagram = isinstance(target, I.IDiagram)

    def act(self, g, m=None) -> S.SMap:
        key = (g, m)
        if key not in self._cache:
            self._cache[key] = self._act(g, m) if self.on_diagram else self._act(g)
        return self._cache[key]

    def levels(self):
        return range(self.target.N + 1) if self.on_diagram else [None]

    def space(self, m=None) -> S.SSet:
        return self.target.values[m] if self.on_diagram else self.target


def permutation_action(target, n, act, *, right=False) -> GroupAction:
    return GroupAction(target, permutations(n), perm_compose, tuple(range(n)), act, right=right)


def validate_action(A: GroupAction) -> list[str]:
    """Automorphisms, unit and group law (and compatibility with injections)."""
    problems = []
    for m in A.levels():
        X = A.space(m)
        ident = A.act(A.identity, m)
        if ident.mapping != S.identity_map(X).mapping:
            problems.append(f"identity acts nontrivially at level {m}")
        for g in A.elements:
            f = A.act(g, m)
            if not S.is_isomorphism(f):
                problems.append(f"{g} is not an automorphism at level {m}")
            for h in A.elements:
                gh = A.act(A.multiply(g, h), m)
                comp = (S.compose_maps(A.act(h, m), A.act(g, m)) if A.right
                        else S.compose_maps(A.act(g, m), A.act(h, m)))
                if comp.mapping != gh.mapping:
                    problems.append(f"group law fails for ({g}, {h}) at level {m}")
    if A.on_diagram:
        X = A.target
        for a in X.generating_injections():
            for g in A.elements:
                lhs = S.compose_maps(A.act(g, a.n), X.action(a))
                rhs = S.compose_maps(X.action(a), A.act(g, a.m))
                if lhs.mapping != rhs.mapping:
                    problems.append(f"{g} does not commute with {a}")
    return problems


def fixed_simplex(A: GroupAction, max_dim: int | None = None):
    """A nonidentity element fixing a simplex, as ``(g, level, simplex)``, or None."""
    for m in A.levels():
        X = A.space(m)
        top = X.cap if max_dim is None else min(max_dim, X.cap)
        for g in A.elements:
            if g == A.identity:
                continue
            f = A.act(g, m)
            for p in range(top + 1):
                for y in X.nondeg[p]:
                    if f.mapping[y] == S.nondeg(y, p):
                        return g, m, y
    return None


def quotient_by_group(X, A: GroupAction):
    """Orbit quotient with a freeness certificate.

    ``X`` is an SSet or an IDiagram (then ``A`` acts levelwise).  Returns
    ``(quotient, certificate)``; the certificate records freeness and the
    orbit count identity ``|simplices| = |G| * |orbits|`` per level and degree.
    """
    if A.target is not X:
        raise ValueError("action is on a different object")
    problems = validate_action(A)
    if problems:
        raise ValueError(f"incompatible action: {problems[0]}")
    if A.on_diagram:
        Q = I.orbit_diagram(X, A.elements, lambda g, m: A.act(g, m))
        spaces = [(m, X.values[m], Q.values[m]) for m in range(X.N + 1)]
    else:
        Q = S.Colimit({0: X}, [(0, 0, A.act(g).mapping.__getitem__) for g in A.elements], X.cap)
        spaces = [(None, X, Q.sset)]
    witness = fixed_simplex(A)
    free = witness is None
    counts = []
    for m, V, W in spaces:
        for p in range(V.cap + 1):
            counts.append({"level": m, "dim": p, "simplices": len(V.simplices(p)),
                           "orbits": len(W.simplices(p))})
    consistent = all(c["simplices"] == len(A.elements) * c["orbits"] for c in counts)
    cert = {"free": free, "witness": witness, "group_order": len(A.elements),
            "counts": counts, "orbit_count_consistent": consistent if free else None}
    return Q, cert


# -- operads ------------------------------------------------------------------

class Operad:
    """Arity-capped operad: ``spaces[n] = D(n)``, right actions and composition.

    ``act(n, sigma)`` is an SMap ``D(n) -> D(n)``; ``gamma(c, ks, ds)`` takes
    simplices of equal degree, ``c`` in ``D(len(ds))`` and ``ds[j]`` in
    ``D(ks[j])``, and returns a simplex of ``D(sum(ks))``.
    """

    def __init__(self, spaces, act, unit, gamma, *, name=""):
        self.spaces = list(spaces)
        self.n_max = len(self.spaces) - 1
        caps = {X.cap for X in self.spaces}
        if len(caps) != 1:
            raise CapError("operad spaces must share a dimension cap")
        self.cap = caps.pop()
        self._act = act
        self._acts: dict = {}
        self.unit = unit
        self._gamma = gamma
        self.name = name

    def act(self, n, sigma) -> S.SMap:
        key = (n, tuple(sigma))
        if key not in self._acts:
            self._acts[key] = self._act(n, tuple(sigma))
        return self._acts[key]

    def gamma(self, c, arities, ds):
        """``gamma(c; d_1, ..., d_n)`` with ``d_j`` in ``D(arities[j])``."""
        if sum(arities) > self.n_max:
            raise CapError(f"composite arity {sum(arities)} above arity cap {self.n_max}")
        return self._gamma(c, tuple(arities), tuple(ds))

    def action(self, n) -> GroupAction:
        return permutation_action(self.spaces[n], n, lambda s: self.act(n, s), right=True)


def commutativity_operad(n_max: int, cap: int = 0) -> Operad:
    """``C(n) = *`` with trivial actions and composition."""
    P = S.point(cap)
    v = P.nondeg[0][0]
    return Operad([P] * (n_max + 1), lambda n, s: S.identity_map(P), v,
                  lambda c, ks, ds: c, name="Com")


def barratt_eccles(n_max: int, cap: int) -> Operad:
    """``E Sigma_n`` as codiscrete nerves on permutations; vertexwise composition."""
    spaces = [S.codiscrete_nerve(permutations(n), cap) for n in range(n_max + 1)]

    def act(n, sigma):
        X = spaces[n]
        return S.SMap(X, X, {t: S._vertex_sequence_nf(tuple(perm_compose(v, sigma) for v in t))
                             for t in X.dim})

    def gamma(c, ks, ds):
        cv = S.vertex_sequence(c)
        dv = [S.vertex_sequence(d) for d in ds]
        return S._vertex_sequence_nf(tuple(assoc_gamma(cv[i], [d[i] for d in dv])
                                           for i in range(len(cv))))

    return Operad(spaces, act, ((0,),), gamma, name="BE")


def swap_boundary_operad(cap: int = 2) -> Operad:
    """Arity cap 2 with ``D(2)`` the boundary of an edge and ``Sigma_2`` swapping ends.

    Composition projects onto the unique arity-2 input (or is the point).
    Sigma-free but not contractible.
    """
    P = S.point(cap)
    B = S.boundary(1, cap)
    swap = S.SMap(B, B, {(0,): S.nondeg((1,), 0), (1,): S.nondeg((0,), 0)})

    def act(n, sigma):
        X = [P, P, B][n]
        return swap if n == 2 and sigma == (1, 0) else S.identity_map(X)

    def gamma(c, ks, ds):
        total = sum(ks)
        q = len(c[1]) - 1
        if total < 2:
            return _degenerate_vertex(P.nondeg[0][0], q)
        if len(ks) == 2 and ks == (1, 1):
            return c
        for k, d in zip(ks, ds):
            if k == 2:
                return d
        raise AssertionError("unreachable")

    return Operad([P, P, B], act, P.nondeg[0][0], gamma, name="swap-boundary")


def _arity_tuples(n, total_max):
    return [ks for ks in _iproduct(range(total_max + 1), repeat=n) if sum(ks) <= total_max]


def validate_operad(O: Operad, *, max_dim: int = 1, law_dim: int = 0) -> list[str]:
    """Point in arity 0, actions, unit, associativity, equivariance, faces.

    Exhaustive over arity tuples within the cap.  Unit laws and compatibility
    with faces use simplices of degree ``<= max_dim``; associativity and
    equivariance use degree ``<= law_dim`` (enough when composition is
    computed vertexwise and is simplicial).
    """
    problems = []
    if O.spaces[0].counts() != S.point(O.cap).counts():
        problems.append("D(0) is not a point")
    for n in range(O.n_max + 1):
        problems += [f"arity {n}: {p}" for p in validate_action(O.action(n))]
    top = min(max_dim, O.cap)

    def simp(n, q):
        return O.spaces[n].simplices(q)

    for q in range(top + 1):
        u = _degenerate_vertex(O.unit, q)
        for n in range(O.n_max + 1):
            for x in simp(n, q):
                if O.gamma(u, (n,), (x,)) != x:
                    problems.append(f"left unit fails on {x!r}")
                if O.gamma(x, (1,) * n, (u,) * n) != x:
                    problems.append(f"right unit fails on {x!r}")
        for n in range(O.n_max + 1):
            for ks in _arity_tuples(n, O.n_max):
                for c in simp(n, q):
                    for ds in _iproduct(*(simp(k, q) for k in ks)):
                        g = O.gamma(c, ks, ds)
                        laws = q <= law_dim
                        # equivariance in the outer variable
                        for sigma in permutations(n) if laws else ():
                            inv = perm_inverse(sigma)
                            lhs = O.gamma(O.act(n, sigma)(c), ks, ds)
                            ks2 = tuple(ks[inv[s]] for s in range(n))
                            ds2 = tuple(ds[inv[s]] for s in range(n))
                            rhs = O.act(sum(ks), perm_block(sigma, ks))(O.gamma(c, ks2, ds2))
                            if lhs != rhs:
                                problems.append(f"outer equivariance fails at {sigma}, {c!r}")
                        # equivariance in the inner variables
                        for taus in _iproduct(*(permutations(k) for k in ks)) if laws else ():
                            ds3 = tuple(O.act(k, t)(d) for k, t, d in zip(ks, taus, ds))
                            rhs = O.act(sum(ks), perm_sum(taus))(g)
                            if O.gamma(c, ks, ds3) != rhs:
                                problems.append(f"inner equivariance fails at {taus}, {c!r}")
                        # simplicial
                        if q:
                            for i in range(q + 1):
                                X = O.spaces[sum(ks)]
                                lhs = X.face(g, i)
                                fc = O.spaces[n].face(c, i)
                                fds = tuple(O.spaces[k].face(d, i) for k, d in zip(ks, ds))
                                if O.gamma(fc, ks, fds) != lhs:
                                    problems.append(f"gamma not simplicial at face {i}, {c!r}")
                        # associativity
                        total = sum(ks)
                        for ls in _arity_tuples(total, O.n_max) if laws else ():
                            if sum(ls) > O.n_max:
                                continue
                            for es in _iproduct(*(simp(l, q) for l in ls)):
                                lhs = O.gamma(g, ls, es)
                                inner, pos = [], 0
                                for k, d in zip(ks, ds):
                                    part_l, part_e = ls[pos:pos + k], es[pos:pos + k]
                                    inner.append(O.gamma(d, part_l, part_e))
                                    pos += k
                                inner_ks = tuple(sum(ls[sum(ks[:j]):sum(ks[:j + 1])])
                                                 for j in range(n))
                                rhs = O.gamma(c, inner_ks, tuple(inner))
                                if lhs != rhs:
                                    problems.append(f"associativity fails at {c!r}, {ds!r}, {es!r}")
    return problems


def is_sigma_free(O: Operad, *, max_dim: int | None = None):
    """``(free, witness)`` with the witness ``(n, sigma, simplex)`` of a fixed simplex."""
    for n in range(O.n_max + 1):
        hit = fixed_simplex(O.action(n), max_dim)
        if hit is not None:
            g, _, y = hit
            return False, (n, g, y)
    return True, None


def is_einfty_proxy(O: Operad, through: int = 2) -> dict:
    """Sigma-free, connected and homology of a point through ``through`` in each arity.

    A homology proxy only, not a certificate of contractibility.
    """
    if through > O.cap - 1:
        raise CapError(f"homology through {through} needs cap >= {through + 1}")
    free, witness = is_sigma_free(O)
    arities = []
    for n, X in enumerate(O.spaces):
        hom = [S.homology(X, k) for k in range(through + 1)]
        arities.append({"arity": n, "connected": len(S.components(X)) == 1,
                        "homology": hom,
                        "point_homology": hom == [(1, [])] + [(0, [])] * through})
    passes = free and all(a["connected"] and a["point_homology"] for a in arities)
    return {"sigma_free": free, "witness": witness, "arities": arities,
            "through": through, "passes": passes, "kind": "homology proxy"}


# -- free algebras -----------------------------------------------------------

def power_action(X: I.IDiagram, n: int, P: I.BoxDiagram | None = None):
    """``X^n`` with its left ``Sigma_n`` action as a GroupAction."""
    P = P or I.power(X, n)
    return P, permutation_action(P, n, lambda s, m: I.sigma_act(P, s, m))


def free_algebra(O: Operad, X: I.IDiagram, n_max: int | None = None):
    """``coprod_{n <= n_max} D(n) x_{Sigma_n} X^n``, levelwise.

    Returns ``(diagram, report)``; the report lists the levels at which the
    arity truncation is exact (``X^(n_max+1)`` empty there).
    """
    n_max = O.n_max if n_max is None else n_max
    if n_max > O.n_max:
        raise CapError(f"arity {n_max} above operad arity cap {O.n_max}")
    if X.d != O.cap:
        raise CapError("operad and diagram dimension caps differ")
    powers = [I.unit_diagram(X.N, X.d)] + [I.power(X, n) for n in range(1, n_max + 1)]
    prods: dict = {}

    def piece(n, m):
        key = (n, m)
        if key not in prods:
            prods[key] = S.product(O.spaces[n], powers[n].values[m])
        return prods[key]

    def sigma_on(n, sigma, m):
        if n == 0:
            return S.identity_map(powers[0].values[m])
        return I.sigma_act(powers[n], sigma, m)

    def level(m):
        pieces, arrows = {}, []
        for n in range(n_max + 1):
            if powers[n].values[m].is_empty():
                continue
            pieces[n] = piece(n, m)
            for sigma in permutations(n):
                if sigma == tuple(range(n)):
                    continue
                on_d = O.act(n, sigma)
                on_p = sigma_on(n, perm_inverse(sigma), m)

                def fn(label, on_d=on_d, on_p=on_p):
                    x, p = label
                    return S.product_normal_form((on_d(x), on_p(p)))
                arrows.append((n, n, fn))
        return pieces, arrows

    def push(a, n):
        f = powers[n].action(a)

        def fn(label):
            x, p = label
            return S.product_normal_form((x, f(p)))
        return n, fn

    A = I.ColimitDiagram(X.N, X.d, level, push, name=f"free {O.name}")
    nxt = I.power(X, n_max + 1) if n_max + 1 >= 1 else None
    exact = [m for m in range(X.N + 1) if nxt.values[m].is_empty()]
    report = {"arity_cap": n_max, "exact_levels": exact,
              "truncated_levels": [m for m in range(X.N + 1) if m not in exact]}
    return A, report


# -- pushout-products ---------------------------------------------------------

class PushoutProduct:
    """``f [] g``: domain pushout, codomain product, and the induced map."""

    def __init__(self, f: S.SMap, g: S.SMap):
        A, B, C, D = f.source, f.target, g.source, g.target
        AC, BC, AD, BD = S.product(A, C), S.product(B, C), S.product(A, D), S.product(B, D)
        f_c = S.product_map([f, S.identity_map(C)], AC, BC)
        a_g = S.product_map([S.identity_map(A), g], AC, AD)
        self.pushout = S.pushout(f_c, a_g)
        self.domain = self.pushout.sset
        self.codomain = BD
        legs = {
            0: lambda y: S.product_normal_form((f(y[0]), g(y[1]))),
            1: lambda y: S.product_normal_form((y[0], g(y[1]))),
            2: lambda y: S.product_normal_form((f(y[0]), y[1])),
        }
        self.map = self.pushout.induced_map(BD, legs)
        self.legs = legs
        self.cocone_problems = S.check_cocone(
            self.pushout, [(0, 1, f_c.mapping.__getitem__), (0, 2, a_g.mapping.__getitem__)], legs)


def pushout_product(f: S.SMap, g: S.SMap) -> S.SMap:
    return PushoutProduct(f, g).map


def iterated(f: S.SMap, i: int) -> S.SMap:
    """``f^[]i`` with ``f^[]1 = f``."""
    if i < 1:
        raise ValueError("iterated pushout-product needs i >= 1")
    out = f
    for _ in range(i - 1):
        out = pushout_product(out, f)
    return out


class BoxPushoutProduct:
    """The Day convolution analogue ``f [] g`` for IMaps."""

    def __init__(self, f: I.IMap, g: I.IMap):
        X, Y, Z, W = f.source, f.target, g.source, g.target
        XZ, YZ, XW, YW = I.box(X, Z), I.box(Y, Z), I.box(X, W), I.box(Y, W)
        f_z = I.box_maps([f, I.identity_imap(Z)], XZ, YZ)
        x_g = I.box_maps([I.identity_imap(X), g], XZ, XW)
        self.domain = I.pushout_diagram(f_z, x_g)
        self.codomain = YW
        fg = I.box_maps([f, g], XZ, YW)
        yg = I.box_maps([I.identity_imap(Y), g], YZ, YW)
        fw = I.box_maps([f, I.identity_imap(W)], XW, YW)
        legs = {0: fg, 1: yg, 2: fw}
        self.map = self.domain.induced_imap(YW, lambda m, t: legs[t].maps[m].mapping.__getitem__)


def box_pushout_product(f: I.IMap, g: I.IMap) -> I.IMap:
    return BoxPushoutProduct(f, g).map


def box_iterated(f: I.IMap, i: int) -> I.IMap:
    if i < 1:
        raise ValueError("iterated pushout-product needs i >= 1")
    out = f
    for _ in range(i - 1):
        out = box_pushout_product(out, f)
    return out


def image_of(f: S.SMap) -> set:
    """Nondegenerate simplices of the target hit by (faces of) the image of ``f``."""
    out = set()
    stack = [s for s in f.mapping.values()]
    X = f.target
    while stack:
        s = stack.pop()
        y = s[0]
        if y in out:
            continue
        out.add(y)
        stack.extend(X.faces.get(y, ()))
    return out


def is_injective(f: S.SMap) -> bool:
    seen = set()
    for s in f.mapping.values():
        if not S.is_nondegenerate(s) or s[0] in seen:
            return False
        seen.add(s[0])
    return True


# -- the filtration identity ----------------------------------------------------

def _apply(s, sigma):
    y, t = s
    return (y, tuple(t[i] for i in sigma))


def _comma_colimit(Ypow: I.IDiagram, K: int, m: int) -> S.Colimit:
    """``colim`` over ``(K + - | m)`` of ``Ypow(l)``; tags ``(l, alpha.values)``."""
    pieces, arrows = {}, []
    for l in range(m - K + 1):
        if Ypow.values[l].is_empty():
            continue
        for a in injections(K + l, m):
            pieces[(l, a.values)] = Ypow.values[l]
    for l in range(m - K + 1):
        if Ypow.values[l].is_empty():
            continue
        for u in generators(l, m - K):
            fn = Ypow.action(u).mapping.__getitem__
            for a in injections(K + u.n, m):
                src = (a @ concat(identity(K), u)).values
                arrows.append(((l, src), (u.n, a.values), fn))
    return S.Colimit(pieces, arrows, Ypow.d)


def filtration_identity_check(Y: I.IDiagram, k: int, g: S.SMap, n: int, i: int, m: int) -> dict:
    """Compare ``(Y^(n-i) [x] f^[]i)(m)`` with ``colim_{k^i + l -> m} Y^(n-i)(l) x g^[]i``.

    ``f = F_k(g)`` for an inclusion ``g: K -> L`` of a subcomplex.  Both sides
    are built independently; the canonical comparison map on codomains is
    tested for being an isomorphism that carries the domain images onto each
    other and commutes with ``Sigma_(n-i) x Sigma_i``.
    """
    if k < 1:
        raise ValueError("the filtration identity needs k >= 1")
    if not 0 <= i <= n or n < 1:
        raise ValueError("need 0 <= i <= n and n >= 1")
    if m > Y.N:
        raise CapError(f"level {m} above level cap {Y.N}")
    K, L = g.source, g.target
    if any(S.nondeg(y, p) != g.mapping[y] for y, p in K.dim.items()):
        raise ValueError("g must be the inclusion of a subcomplex")
    if L.cap != Y.d:
        raise CapError("cell and diagram dimension caps differ")
    N, d = Y.N, Y.d
    ki = k * i
    FL, FK = I.free_diagram(k, L, N), I.free_diagram(k, K, N)
    Ypow = I.power(Y, n - i) if n > i else I.unit_diagram(N, d)

    # left-hand side: n-fold convolution, domain as union of images
    lhs = I.box_many([Y] * (n - i) + [FL] * i)
    Vm = lhs.values[m]
    dom_lhs: set = set()
    injective = True
    for j in range(i):
        facs = [Y] * (n - i) + [FL] * i
        facs[n - i + j] = FK
        src = I.box_many(facs)
        maps = [I.identity_imap(F) for F in facs]
        maps[n - i + j] = I.free_map(k, g, FK, FL)
        h = I.box_maps(maps, src, lhs).maps[m]
        injective &= is_injective(h)
        dom_lhs |= image_of(h)

    # right-hand side
    Cm = _comma_colimit(Ypow, ki, m)
    rhs = S.product(Cm.sset, *([L] * i)) if i else S.product(Cm.sset)
    dom_rhs = {lab for lab in rhs.dim if any(z[0] in K.dim for z in lab[1:])}

    kvals = tuple(range(1, k + 1))

    def phi_simplex(c, zs):
        (tag, ylab), sc = c
        l, av = tag
        alpha = Injection(m, av)
        if n > i:
            (ks_y, gy), comps_y = ylab
            comps_y = tuple(_apply(cy, sc) for cy in comps_y)
            gamma_y = Injection(l, gy)
        else:
            ks_y, comps_y, gamma_y = (), (), Injection(l, ())
        gam = alpha @ shuffle(l, ki) @ concat(gamma_y, identity(ki))
        comps = comps_y + tuple(((kvals, zl), zt) for zl, zt in zs)
        return lhs.project(m, tuple(ks_y) + (k,) * i, gam, comps)

    mapping = {}
    for lab, p in rhs.dim.items():
        mapping[lab] = phi_simplex(lab[0], lab[1:])
    phi = S.SMap(rhs, Vm, mapping)
    valid = not S.validate_map(phi)
    iso = valid and S.is_isomorphism(phi)
    carried = {phi.mapping[lab][0] for lab in dom_rhs}
    domains_match = iso and carried == dom_lhs

    # equivariance under Sigma_(n-i) x Sigma_i
    equivariant = True
    witness = None
    if iso:
        for sig in permutations(n - i):
            for tau in permutations(i):
                pi = tuple(sig) + tuple(n - i + t for t in tau)
                on_lhs = I.sigma_act(lhs, pi, m)
                tinv = perm_inverse(tau)
                chi = block_permutation([k] * i, tinv) if i else identity(0)
                for lab in rhs.dim:
                    (tag, ylab), sc = lab[0]
                    l, av = tag
                    c = lab[0]
                    if n > i and sig != tuple(range(n - i)):
                        c2 = I.sigma_act(Ypow, sig, l)((ylab, sc))
                        c = Cm.project(tag, c2)
                    (tag2, ylab2), sc2 = c
                    l2, av2 = tag2
                    moved = (Injection(m, av2) @ concat(chi, identity(l2))).values
                    c = Cm.project((l2, moved), (ylab2, sc2))
                    zs = tuple(lab[1:][tinv[s]] for s in range(i))
                    left = phi_simplex(c, zs)
                    right = on_lhs(mapping[lab])
                    if left != right:
                        equivariant, witness = False, (sig, tau, lab)
                        break
                if not equivariant:
                    break
            if not equivariant:
                break
    return {"m": m, "lhs_counts": Vm.counts(), "rhs_counts": rhs.counts(),
            "iso": iso, "domains_match": domains_match, "lhs_maps_injective": injective,
            "equivariant": equivariant and iso, "witness": witness,
            "holds": bool(iso and domains_match and injective and equivariant)}
