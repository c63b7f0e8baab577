import json

import pytest

from b2crystal import axioms, pbw
from b2crystal.cartan import GCM, b2_gcm
from b2crystal.graph import ColoredGraph
from helpers import (
    a2_crystal_1_1,
    a2_crystal_2_0,
    bad_confluence_graph,
    deletion_mutants,
    redirect_mutants,
)

A = b2_gcm()
A2 = GCM([[2, -1], [-1, 2]])


def test_generated_crystals_pass_everything():
    for l1 in range(5):
        for l2 in range(5):
            g = pbw.generate((l1, l2))
            rep = axioms.check_all(g, A, expected_phi0={1: l1, 2: l2})
            assert rep.passed, ((l1, l2), rep.violations[:3])
            assert not axioms.check_variants(g, A), (l1, l2)


def test_reversed_crystals_pass():
    for lam in [(1, 1), (3, 0), (0, 2), (2, 3)]:
        g = pbw.generate(lam).reverse()
        rep = axioms.check_all(g, A, expected_phi0={1: lam[0], 2: lam[1]})
        assert rep.passed, (lam, rep.violations[:3])


def test_simply_laced_figures():
    for g, phi0 in ((a2_crystal_2_0(), {1: 2, 2: 0}), (a2_crystal_1_1(), {1: 1, 2: 1})):
        rep = axioms.check_all(g, A2, expected_phi0=phi0)
        assert rep.passed, rep.violations
    # the same graphs against the doubly-laced matrix break the
    # string-difference equality
    rep = axioms.check_all(a2_crystal_2_0(), A)
    assert any(v.axiom == "S2" for v in rep.violations)


def test_s2_diagonal_constants():
    g = pbw.generate((2, 1))
    assert not axioms.check_s2_s3(g, A, include_diagonal=True)


def test_broken_square_reports_a_minus():
    # vertex 3 has a 1-parent and a 2-parent with a flat raising delta,
    # but the two length-2 raising words end at different vertices
    g = ColoredGraph((1, 2))
    for _ in range(5):
        g.add_vertex()
    g.add_edge(0, 1, 2)
    g.add_edge(1, 3, 1)
    g.add_edge(2, 3, 2)
    g.add_edge(4, 2, 1)
    g.freeze()
    assert g.delta("e", "eps", 1, 2, 3) == 0
    out = axioms.check_s4_s5(g, A2)
    assert any(v.axiom == "A_MINUS" for v in out)


def test_phi0_mismatch():
    g = pbw.generate((1, 1))
    rep = axioms.check_all(g, A, expected_phi0={1: 2, 2: 1})
    assert [v.axiom for v in rep.violations] == ["PHI0"]


def test_no_maximum_element():
    a = pbw.generate((1, 0))
    union = ColoredGraph((1, 2), cartan=A)
    for v in a.vertices():
        union.add_vertex(vid=v)
        union.add_vertex(vid=100 + v)
    for s, d, c in a.edges():
        union.add_edge(s, d, c)
        union.add_edge(100 + s, 100 + d, c)
    rep = axioms.check_all(union.freeze(), A)
    assert [v.axiom for v in rep.violations] == ["MAX"]


def test_goodness_failure_is_s1():
    g = ColoredGraph((1, 2))
    g.add_vertex()
    g.add_edge_unchecked(0, 0, 1)
    rep = axioms.check_all(g.freeze(), A)
    assert rep.violations and all(v.axiom == "S1" for v in rep.violations)


def test_wt_violation_tagged():
    rep = axioms.check_all(bad_confluence_graph(), A)
    assert any(v.axiom == "WT" and v.witness == 2 for v in rep.violations)


def test_mutation_sensitivity_deletions_and_redirects():
    for l1 in range(3):
        for l2 in range(3):
            g = pbw.generate((l1, l2))
            if len(g) < 2:
                continue
            for edge, mut in deletion_mutants(g):
                rep = axioms.check_all(mut, A)
                assert not rep.passed, ((l1, l2), "deletion", edge)
            for edge, mut in redirect_mutants(g):
                rep = axioms.check_all(mut, A)
                assert not rep.passed, ((l1, l2), "redirect", edge)


def test_split_apex_breaks_seven_step_merge():
    # divert one apex arrow of the 16-element crystal to a twin apex: the
    # raising words of the depth-7 confluence then end at different vertices
    g = pbw.generate((1, 1))
    c2 = g.f_step(2, 0)
    mut = g.copy_mutable(skip_edge=(0, c2, 2))
    twin = mut.add_vertex()
    mut.add_edge(twin, c2, 2)
    out = axioms.check_s6_s9(mut.freeze(), A)
    assert any(v.axiom == "Q1_MINUS" for v in out)


def test_split_pentagon_meet_breaks_c1_plus():
    # find a two-child vertex of the 14-element crystal satisfying the
    # flat-ledge hypothesis, then split the pentagon meet
    g = pbw.generate((0, 2))
    ctx = axioms._Ctx(g)
    hit = None
    for x in g.vertices():
        for i, j in axioms._b2_oriented_pairs(A):
            if ctx.f(i, x) is None or ctx.f(j, x) is None:
                continue
            if (ctx.df_phi(i, j, x), ctx.df_phi(j, i, x)) != (0, 2):
                continue
            v = ctx.descend(x, [i, i])
            if v is not None and ctx.f(j, v) is not None and ctx.df_phi(j, i, v) == 0:
                hit = (x, i, j)
    assert hit is not None
    x, i, j = hit
    q = ctx.descend(x, [j, i, i, i])
    z = ctx.f(j, q)
    mut = g.copy_mutable(skip_edge=(q, z, j))
    twin = mut.add_vertex()
    mut.add_edge(q, twin, j)
    out = axioms.check_s6_s9(mut.freeze(), A)
    assert any(v.axiom == "C1_PLUS" for v in out), sorted({v.axiom for v in out})


def test_branch_deltas_never_one_zero():
    # at every fork with raising deltas (1,2) the two branch-point lowering
    # deltas take one of three values and never (1,0)
    seen = set()
    for l1 in range(4):
        for l2 in range(4):
            lam = (l1, l2)
            g = pbw.generate(lam)
            ctx = axioms._Ctx(g)
            for x in g.vertices():
                if ctx.e(1, x) is None or ctx.e(2, x) is None:
                    continue
                if (ctx.de_eps(1, 2, x), ctx.de_eps(2, 1, x)) != (1, 2):
                    continue
                y = ctx.climb(x, [2, 1, 1])
                y1 = ctx.climb(x, [1, 2, 2, 1, 1])
                t = (ctx.df_phi(1, 2, y), ctx.df_phi(1, 2, y1))
                assert t in {(1, 1), (0, 1), (0, 0)}, (lam, x, t)
                seen.add(t)
    assert seen == {(1, 1), (0, 1), (0, 0)}  # all three cases occur


def test_axiom_hypotheses_all_fire():
    # guard against vacuous checks: every battery hypothesis must trigger
    # somewhere on the [0,4]^2 grid
    counts = dict.fromkeys(["S6", "S7", "S8", "S9", "S8'"], 0)
    for l1 in range(5):
        for l2 in range(5):
            g = pbw.generate((l1, l2))
            ctx = axioms._Ctx(g)
            for i, j in axioms._b2_oriented_pairs(A):
                for x in g.vertices():
                    if ctx.e(i, x) is not None and ctx.e(j, x) is not None:
                        d = (ctx.de_eps(i, j, x), ctx.de_eps(j, i, x))
                        if d == (1, 2):
                            counts["S6"] += 1
                        if d == (1, 1) and ctx.eps(i, x) >= 2:
                            counts["S8'"] += 1
                    if ctx.f(i, x) is not None and ctx.f(j, x) is not None:
                        dp = (ctx.df_phi(i, j, x), ctx.df_phi(j, i, x))
                        if dp == (1, 2):
                            counts["S7"] += 1
                        if dp == (1, 1) and ctx.phi(i, x) >= 2:
                            counts["S8"] += 1
                        if dp == (0, 2):
                            v = ctx.descend(x, [i, i])
                            if v is not None and ctx.f(j, v) is not None and ctx.df_phi(j, i, v) == 0:
                                counts["S9"] += 1
    assert all(n > 0 for n in counts.values()), counts


def test_confluence_checker():
    assert not axioms.check_confluence(pbw.generate((2, 2)))
    # single chain: vacuous
    chain = pbw.generate((1, 0))
    assert not axioms.check_confluence(chain)
    out = axioms.check_confluence(bad_confluence_graph())
    assert len(out) == 1 and out[0].axiom == "CONFLUENCE" and out[0].witness == 2


def test_report_serialization():
    rep = axioms.check_all(pbw.generate((1, 1)), A, expected_phi0={1: 1, 2: 1})
    blob = json.dumps(rep.to_dict())
    data = json.loads(blob)
    assert data["pass"] is True and data["violations"] == []
    assert data["phi0"] == {"1": 1, "2": 1} or data["phi0"] == {1: 1, 2: 1}


def test_deterministic_reports():
    g = pbw.generate((1, 1))
    mut = next(iter(deletion_mutants(g)))[1]
    r1 = axioms.check_all(mut, A)
    r2 = axioms.check_all(mut, A)
    assert [v.to_dict() for v in r1.violations] == [v.to_dict() for v in r2.violations]
