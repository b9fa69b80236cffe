import itertools

import pytest

from sloops.autotopism import (EXTRA_TRIPLES, MOUFANG_TRIPLES, TRIPLE_WORDS,
                               BoundExceeded, NotClosedUnderComponents,
                               TheoremTripleId, autotopism_search, automorphisms,
                               build_theorem_triple, is_autotopism, restrict_triple)
from sloops.core import Perm, left_translation
from sloops.isotopy import IsotopismTriple
from sloops.subalgebra import SubsetMask, restrict, subloops

TID = TheoremTripleId


def brute_autotopisms(T):
    n = T.order
    perms = list(itertools.permutations(range(n)))
    out = []
    for a in perms:
        for b in perms:
            for c in perms:
                if all(T.mul(a[x], b[y]) == c[T.mul(x, y)] for x in range(n) for y in range(n)):
                    out.append((a, b, c))
    return out


def test_left_translation_is_not_an_autotopism(table):
    T = table("z4")
    t = IsotopismTriple(left_translation(T, 2), Perm.identity(4), Perm.identity(4))
    cex = is_autotopism(T, None, t)
    assert (cex.x, cex.y, cex.lhs, cex.rhs) == (0, 0, 2, 0)
    assert cex.z is None and cex.form == "autotopism"
    good = IsotopismTriple(left_translation(T, 2), Perm.identity(4), left_translation(T, 2))
    assert is_autotopism(T, None, good) is None


def test_search_matches_brute_force(table):
    for name in ("z2", "z3", "z4", "klein"):
        T = table(name)
        found = [t.key() for t in autotopism_search(T)]
        assert found == sorted(brute_autotopisms(T)), name
    assert len(autotopism_search(table("z2"))) == 4


def test_group_autotopism_counts(table):
    # |Atp(G)| = |G|^2 |Aut(G)| for groups
    for name, aut in [("z3", 2), ("z4", 2), ("klein", 6), ("s3", 6), ("z5", 4)]:
        T = table(name)
        assert len(automorphisms(T)) == aut
        assert len(autotopism_search(T)) == T.order ** 2 * aut


def test_search_on_subloop_extends_by_identity(table):
    T = table("d4")
    S = SubsetMask.of([0, 1, 2, 3])
    trips = autotopism_search(T, S)
    assert len(trips) == 16 * 2
    for t in trips:
        for p in (t.a, t.b, t.c):
            assert [p[x] for x in range(4, 8)] == [4, 5, 6, 7]
        assert is_autotopism(T, S, t) is None
    sub = restrict(T, S)
    assert sorted(restrict_triple(t, S) for t in trips) == \
        sorted(t.key() for t in autotopism_search(sub))


def test_search_bound(table):
    with pytest.raises(BoundExceeded):
        autotopism_search(table("chein12"))


def test_components_must_preserve_s(table):
    T = table("z4")
    S = SubsetMask.of([0, 2])
    shift = left_translation(T, 1)
    with pytest.raises(NotClosedUnderComponents):
        is_autotopism(T, S, IsotopismTriple(shift, shift, shift))


def _conj(T, x):
    return next(y for y in range(T.order) if T.mul(x, y) == T.identity)


def test_closed_forms_on_s3(table):
    T = table("s3")
    m = T.mul
    inv = lambda a: _conj(T, a)
    n = T.order
    for f in range(n):
        for g in range(n):
            gi, fi = inv(g), inv(f)
            gf = m(g, f)
            gifi = m(gi, fi)           # (gf)^-1
            figi = m(fi, gi)           # (fg)^-1
            expect = {
                TID.T1_5: (lambda x: x, lambda y: m(y, gifi), lambda z: m(z, gifi)),
                TID.T1_6_RB: (lambda x: m(x, gf), lambda y: m(m(figi, y), gifi),
                              lambda z: m(z, gifi)),
                TID.T1_6_LB: (lambda x: m(m(gifi, x), figi), lambda y: m(gf, y),
                              lambda z: m(gifi, z)),
                TID.T1_7_M1: (lambda x: m(gifi, x), lambda y: m(y, gifi),
                              lambda z: m(m(gifi, z), gifi)),
            }
            for tid, (A, B, C) in expect.items():
                t = build_theorem_triple(T, tid, f, g)
                assert t.a.tolist() == [A(x) for x in range(n)], (tid, f, g)
                assert t.b.tolist() == [B(x) for x in range(n)], (tid, f, g)
                assert t.c.tolist() == [C(x) for x in range(n)], (tid, f, g)


def test_triples_in_groups(table):
    for name in ("z4", "s3", "d4"):
        T = table(name)
        for tid in TheoremTripleId:
            ok = all(is_autotopism(T, None, build_theorem_triple(T, tid, f, g)) is None
                     for f in range(T.order) for g in range(T.order))
            assert ok == (tid is not TID.T1_8_E1_ALT), (name, tid)


def test_triples_in_moufang_and_extra_loops(table):
    ch = table("chein12")
    for tid in MOUFANG_TRIPLES + (TID.T1_6_RB, TID.T1_6_LB):
        for f in range(12):
            for g in range(12):
                assert is_autotopism(ch, None, build_theorem_triple(ch, tid, f, g)) is None
    assert any(is_autotopism(ch, None, build_theorem_triple(ch, TID.T1_5, f, g))
               for f in range(12) for g in range(12))
    ex = table("extra16")
    for tid in EXTRA_TRIPLES:
        for f in range(16):
            for g in range(16):
                assert is_autotopism(ex, None, build_theorem_triple(ex, tid, f, g)) is None
    assert any(is_autotopism(ex, None, build_theorem_triple(ex, TID.T1_8_E1_ALT, f, g))
               for f in range(16) for g in range(16))


def test_bol_triples_are_sided(table):
    lb, rb = table("lbol8"), table("rbol8")

    def all_ok(T, tid):
        return all(is_autotopism(T, None, build_theorem_triple(T, tid, f, g)) is None
                   for f in range(8) for g in range(8))
    assert all_ok(lb, TID.T1_6_LB) and not all_ok(lb, TID.T1_6_RB)
    assert all_ok(rb, TID.T1_6_RB) and not all_ok(rb, TID.T1_6_LB)
    assert all_ok(lb, TID.C1_11_L) and not all_ok(lb, TID.C1_11_L_PRINTED)


def test_word_table_shape():
    for tid, words in TRIPLE_WORDS.items():
        assert len(words) == 3
        for w in words:
            assert all(tok.rstrip("'") in ("I", "Rg", "Lf", "Rfr", "Lgl") for tok in w.split())


def test_automorphisms_of_subloops(table):
    T = table("chein12")
    for S in subloops(T):
        if S.size <= 6:
            auts = automorphisms(T, S)
            diag = [t.a for t in autotopism_search(T, S) if t.a == t.b == t.c]
            assert sorted(map(tuple, auts)) == sorted(map(tuple, diag))


def test_autotopisms_form_a_group(table):
    for name, S in (("z4", None), ("klein", None), ("d4", SubsetMask.of([0, 2, 4, 6]))):
        T = table(name)
        trips = autotopism_search(T, S)
        keys = {t.key() for t in trips}
        for s in trips:
            assert s.inverse().key() in keys
            for t in trips:
                assert (s * t).key() in keys


def test_trivial_subloop_and_identity_pair(entries):
    T = entries["chein12"].table
    assert [t.key() for t in autotopism_search(T, SubsetMask.of([0]))] == \
        [IsotopismTriple.identity(12).key()]
    for e in entries.values():
        if e.table.is_loop:
            i = e.table.identity
            for tid in TheoremTripleId:
                t = build_theorem_triple(e.table, tid, i, i)
                assert t == IsotopismTriple.identity(e.table.order)
