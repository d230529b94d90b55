"""Acceptance checks, one test per criterion; each prints a PASS/FAIL line."""

import time
from itertools import product as iprod
from math import comb, perm

import pytest

from isimplicial import fincat, idiag, injcat, operad, phicon
from isimplicial._util import permutations
from isimplicial import sset as S
from isimplicial.idiag import sphere_diagram

sympy = pytest.importorskip("sympy")
from sympy.matrices.normalforms import smith_normal_form  # noqa: E402


def report(n, label, ok, started, limit):
    took = time.perf_counter() - started
    verdict = "PASS" if ok and took < limit else "FAIL"
    print(f"\n{verdict} criterion {n}: {label} ({took:.1f}s, limit {limit}s)")
    assert ok, label
    assert took < limit, f"{label}: {took:.1f}s over {limit}s"


def test_criterion_1_day_convolution_of_free_diagrams():
    t0 = time.perf_counter()
    N, d = 4, 3
    cells = [S.standard(0, d), S.boundary(1, d), S.standard(1, d)]
    free = {(n, c): idiag.free_diagram(n, cells[c], N) for n in range(3) for c in range(3)}
    bad = []
    for k, l, a, b in iprod(range(3), range(3), range(3), range(3)):
        B = idiag.box(free[(k, a)], free[(l, b)])
        KL = S.product(cells[a], cells[b])
        T = idiag.free_diagram(k + l, KL, N)
        c = idiag.day_comparison(B, T)
        # counting route: |I(k+l, m)| times the simplices of K x L
        for m in range(N + 1):
            want = [perm(m, k + l) * x if k + l <= m else 0 for x in KL.counts()]
            if B.values[m].counts() != want or not S.is_isomorphism(c.maps[m]):
                bad.append((k, l, a, b, m))
        if idiag.validate_imap(c):
            bad.append((k, l, a, b, "naturality"))
    report(1, "F_k(K) box F_l(L) -> F_{k+l}(K x L) is an iso", not bad, t0, 60)


def test_criterion_2_comma_components():
    t0 = time.perf_counter()
    bad = []
    for k in range(4):
        for m in range(5):
            C = injcat.comma_concat([k], m)
            for comp, terms in fincat.component_terminals(C):
                if len(terms) < 1:
                    bad.append(("terminal", k, m))
    for i in (2, 3):
        for m in range(i, 5):
            table, free = injcat.sigma_action_on_components(1, i, m)
            # direct route: no non-identity permutation fixes a component
            direct = all(img[c] != c for p, img in table.items() if p != tuple(range(i))
                         for c in range(len(img)))
            if not (free and direct):
                bad.append(("free", i, m))
    report(2, "comma components have terminals; Sigma_i acts freely", not bad, t0, 60)


def test_criterion_3_powers_are_sigma_free():
    t0 = time.perf_counter()
    N, d = 4, 2
    corpus = [idiag.free_diagram(1, S.point(d), N), idiag.free_diagram(2, S.point(d), N),
              sphere_diagram(1, 1, N, d)]
    ok = all(idiag.sigma_free_on_levels(X, n)[0] for X in corpus for n in (2, 3))
    control = [idiag.sigma_free_on_levels(idiag.free_diagram(0, S.point(d), N), n) for n in (2, 3)]
    ok = ok and all(not free and w is not None for free, w in control)
    report(3, "Sigma_n acts freely on X^n(m); F_0(point) fails", ok, t0, 300)


def test_criterion_4_filtration_identity():
    t0 = time.perf_counter()
    d, N = 2, 3
    Y = idiag.free_diagram(1, S.point(d), N)
    g = S.inclusion(S.boundary(1, d), S.standard(1, d))
    results = [operad.filtration_identity_check(Y, 1, g, 2, 1, m) for m in range(N + 1)]
    ok = all(r["holds"] and r["iso"] and r["equivariant"] for r in results)
    report(4, "filtration identity with Sigma_1 x Sigma_1 equivariance, m <= 3", ok, t0, 300)


def test_criterion_5_phi_construction():
    t0 = time.perf_counter()
    N, d = 3, 3
    bad = []
    for name in ("z2-discrete", "z2-one-object"):
        A = phicon.corpus()[name]
        if phicon.validate_permcat(A) or phicon.functoriality_problems(A, N):
            bad.append((name, "permcat"))
        if idiag.validate_comm_monoid(phicon.n_phi(A, N, d)):
            bad.append((name, "monoid"))
        for n in range(1, N + 1):
            if not fincat.is_equivalence(phicon.tensoring_functor(A, phicon.phi_level(A, n))):
                bad.append((name, "tensoring", n))
        for n, r in phicon.quasicategory_report(A, N, 3).items():
            if r["unfilled"] is not None or r["min_fillers"] != 1 or r["max_fillers"] != 1:
                bad.append((name, "horns", n))
    report(5, "n_phi is a commutative I-monoid of quasi-categories", not bad, t0, 300)


def test_criterion_6_barratt_eccles():
    t0 = time.perf_counter()
    BE = operad.barratt_eccles(3, 4)
    r = operad.is_einfty_proxy(BE, 2)
    # counting route: E Sigma_n has n!(n!-1)^q nondegenerate q-simplices
    direct = all(BE.spaces[n].counts() == [perm(n) * (perm(n) - 1) ** q for q in range(5)]
                 for n in range(4))
    # freeness by brute force on every simplex
    for n in (2, 3):
        for sigma in permutations(n):
            if sigma != tuple(range(n)):
                f = BE.act(n, sigma)
                direct = direct and all(f(s) != s for q in range(5) for s in BE.spaces[n].simplices(q))
    Com = operad.commutativity_operad(3, 4)
    com_fixed = [operad.fixed_simplex(Com.action(n)) is not None for n in (2, 3)]
    ok = r["passes"] and r["sigma_free"] and direct and all(com_fixed)
    report(6, "E Sigma_n free with point homology; Com not Sigma-free", ok, t0, 300)


def test_criterion_7_free_commutative_algebra_counts():
    t0 = time.perf_counter()
    X = idiag.free_diagram(1, S.point(2), 4)
    A, info = operad.free_algebra(operad.commutativity_operad(3, 2), X, 3)
    got = [len(A.values[m].vertices()) for m in range(5)]
    want = [sum(comb(m, n) for n in range(4)) for m in range(5)]
    report(7, f"free algebra vertices {got} == subset counts {want}", got == want, t0, 60)


def test_criterion_8_hocolim_comparison():
    t0 = time.perf_counter()
    N, d = 3, 3
    cofibrant = [idiag.comparison_is_homology_iso(idiag.free_diagram(1, S.point(d), N)),
                 idiag.comparison_is_homology_iso(idiag.free_diagram(2, S.point(d), N)),
                 idiag.comparison_is_homology_iso(sphere_diagram(1, 1, N, d), "bk")]
    F1 = idiag.free_diagram(1, S.point(d), N)
    Q, cert = operad.quotient_by_group(*operad.power_action(F1, 2))
    control = idiag.comparison_is_homology_iso(Q)
    ok = all(r["is_iso"] for r in cofibrant) and not control["is_iso"]
    report(8, "comparison map is a homology iso for cofibrant diagrams only", ok, t0, 300)


def _sympy_homology(X, k):
    def snf(M):
        if not M or not M[0]:
            return []
        D = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
        return [abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0]
    n_k = len(X.nondeg[k])
    dk = snf(S.boundary_matrix(X, k)) if k > 0 else []
    dk1 = snf(S.boundary_matrix(X, k + 1))
    return n_k - len(dk) - len(dk1), sorted(x for x in dk1 if x > 1)


def test_criterion_9_simplicial_homology():
    t0 = time.perf_counter()
    cases = [(S.standard(n, n + 1), k, (1 if k == 0 else 0, [])) for n in range(5) for k in range(n + 1)]
    cases += [(S.boundary(2, 3), 1, (1, [])), (S.boundary(2, 3), 0, (1, []))]
    z2 = fincat.group_category([0, 1], lambda a, b: (a + b) % 2, 0)
    cases += [(S.nerve(z2, 3), 1, (0, [2]))]
    ok = all(S.homology(X, k) == want == _sympy_homology(X, k) for X, k, want in cases)
    report(9, "homology of simplices, boundary of Delta^2 and nerve(Z/2)", ok, t0, 60)
