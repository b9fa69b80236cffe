import random

import pytest

from sloops.autotopism import (TheoremTripleId, autotopism_search, build_theorem_triple,
                               restrict_triple)
from sloops.core import NoIdentity
from sloops.identities import PropertyId, check_identity
from sloops.isotopy import apply_isotopism, principal_isotope, random_loop_isotopism
from sloops.subalgebra import LOOSE, STRICT, SmarandacheClass, SubsetMask
from sloops.universality import (THEOREMS, NotInClass, is_smarandache_universal,
                                 is_universal, verify_theorem)

P = PropertyId
SC = SmarandacheClass


def test_group_assoc_universal(table):
    rep = is_universal(table("z4"), P.ASSOC)
    assert rep.universal and rep.isotopes_checked == 16 and rep.counterexample is None


def test_bol_universal(table):
    rep = is_universal(table("lbol8"), P.LBOL)
    assert rep.universal and rep.isotopes_checked == 64


def test_lip_not_universal_with_recheckable_counterexample(table):
    T = table("lip6")
    rep = is_universal(T, P.LIP)
    assert not rep.universal
    f, g, cex = rep.counterexample
    assert check_identity(principal_isotope(T, f, g), P.LIP) == cex
    # first failing pair in row-major order
    first = next((a, b) for a in range(6) for b in range(6)
                 if check_identity(principal_isotope(T, a, b), P.LIP) is not None)
    assert (f, g) == first
    assert rep.isotopes_checked == 6 * f + g + 1


def test_loop_property_on_quasigroup_raises(table):
    with pytest.raises(NoIdentity):
        is_universal(table("sub3"), P.LIP)
    # principal isotopes of x - y are x + y + (g - f), all associative
    assert is_universal(table("sub3"), P.ASSOC).universal


def test_smarandache_universal_examples(table):
    Z4 = table("z4")
    rep = is_smarandache_universal(Z4, SC.S_LOOP, "s")
    assert rep.universal and rep.witness == SubsetMask.of([0, 2]) and rep.isotopes_checked == 4
    assert is_smarandache_universal(Z4, SC.S_LOOP, "g").isotopes_checked == 16
    assert is_smarandache_universal(table("chein12"), SC.SML, "s").universal
    with pytest.raises(NotInClass):
        is_smarandache_universal(table("z5"), SC.S_LOOP)
    with pytest.raises(NotInClass):
        is_smarandache_universal(Z4, SC.S_LOOP, witness=SubsetMask.of([0, 1, 2, 3]))


def test_quantifier_monotone(entries):
    for name in ("z4", "s3", "nona6", "lip6", "lbol8"):
        T = entries[name].table
        for c in (SC.S_LOOP, SC.SLIPL, SC.SLBL):
            try:
                g = is_smarandache_universal(T, c, "g")
            except NotInClass:
                continue
            if g.universal:
                assert is_smarandache_universal(T, c, "s").universal


def test_random_loop_isotopes_agree_with_verdict(table):
    rng = random.Random(11)
    for name in ("lip6", "nona6", "lbol8"):
        T = table(name)
        for p in (P.LIP, P.LBOL, P.FLEX, P.ASSOC):
            rep = is_universal(T, p)
            if not rep.universal:
                continue
            for _ in range(10):
                H = apply_isotopism(T, random_loop_isotopism(T, rng))
                assert check_identity(H, p) is None


def test_theorem_report_fields(table):
    rep = verify_theorem(table("z4"), "1.5")
    assert rep.hypothesis_status == "holds" and rep.conclusion_status == "holds"
    d = rep.to_dict()
    assert d["schema_version"] == 1 and d["theorem"] == "1.5" and d["policy"] == "strict"
    w = d["parts"][0]["witnesses"][0]
    assert w["mask"] == [0, 2]
    assert w["triples"]["t1_5"] == {"checked": 4, "failures": [], "oracle_misses": []}


def test_abelian_t1_5_is_trivial_on_identity_pair(table):
    T = table("z4")
    t = build_theorem_triple(T, TheoremTripleId.T1_5, 0, 0)
    assert t.a.is_identity() and t.b.is_identity() and t.c.is_identity()


def test_s3_associative_subloop_triples(table):
    rep = verify_theorem(table("s3"), "1.5")
    assert rep.conclusion_status == "holds"
    for w in rep.parts[0]["witnesses"]:
        assert not w["triples"]["t1_5"]["failures"]
    # and every triple over the whole group (36 pairs) is an autotopism
    T = table("s3")
    keys = {t.key() for t in autotopism_search(T)}
    for f in range(6):
        for g in range(6):
            assert build_theorem_triple(T, TheoremTripleId.T1_5, f, g).key() in keys


def test_z4_triples_in_oracle(table):
    T = table("z4")
    S = SubsetMask.of([0, 2])
    keys = {restrict_triple(t, S) for t in autotopism_search(T, S)}
    for tid in TheoremTripleId:
        if tid is TheoremTripleId.T1_8_E1_ALT:
            continue
        for f in (0, 2):
            for g in (0, 2):
                t = build_theorem_triple(T, tid, f, g)
                assert restrict_triple(t, S) in keys


def test_vacuous_hypothesis_not_a_pass(table):
    rep = verify_theorem(table("z5"), "1.7")
    assert rep.hypothesis_status == "fails" and rep.conclusion_status == "untested"


def test_moufang_theorem(table):
    rep = verify_theorem(table("chein12"), "1.7")
    assert rep.conclusion_status == "holds"
    fams = set()
    for w in rep.parts[0]["witnesses"]:
        fams |= set(w.get("triples", {}))
    assert fams == {f"t1_7_m{i}" for i in range(1, 7)}


def test_extra_variant_reported(table):
    rep = verify_theorem(table("extra16"), "1.8", LOOSE)
    assert rep.conclusion_status == "holds"
    whole = next(w for w in rep.parts[0]["witnesses"] if len(w["mask"]) == 16)
    assert not whole["triples"]["t1_8_e1"]["failures"]
    assert whole["variants"]["t1_8_e1_alt"]["failures"]


def test_inverse_property_triple_pairing(table):
    rep = verify_theorem(table("lbol8"), "c1.11", LOOSE)
    assert rep.conclusion_status == "holds"
    lip_part = rep.parts[0]
    whole = next(w for w in lip_part["witnesses"] if len(w["mask"]) == 8)
    assert not whole["triples"]["c1_11_l"]["failures"]
    assert whole["variants"]["c1_11_l_printed"]["failures"]


def test_iff_theorems(table):
    for name in ("lip6", "lbol8", "chein12"):
        for th in ("1.9", "1.10"):
            for pol in (STRICT, LOOSE):
                assert verify_theorem(table(name), th, pol).conclusion_status == "holds"
    part = verify_theorem(table("lip6"), "1.9", LOOSE).parts[0]
    whole = next(w for w in part["witnesses"] if len(w["mask"]) == 6)
    assert whole["universal_slipl"] is False and whole["slbl"] is False


def test_theorem_names():
    assert set(THEOREMS) == {"1.4", "1.5", "1.6", "1.7", "1.8", "1.9", "1.10", "c1.11", "c1.12"}
    with pytest.raises(ValueError):
        verify_theorem(None, "2.1")


def test_reports_are_reproducible(table):
    a = verify_theorem(table("nona6"), "1.9").to_dict()
    b = verify_theorem(table("nona6"), "1.9").to_dict()
    assert a == b
