"""Universality via f,g-principal isotopes, and end-to-end theorem checks.

Any loop isotope is isomorphic to an f,g-principal isotope, so a property
that is invariant under isomorphism is universal exactly when every one of
the ``n**2`` principal isotopes has it. ``verify_theorem`` builds on that to
check the forward (universality) and converse (autotopism) halves of each
result on a concrete table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .autotopism import (EXTRA_TRIPLES, MOUFANG_TRIPLES, TheoremTripleId,
                         autotopism_search, build_theorem_triple, is_autotopism,
                         restrict_triple)
from .core import LoopError, MulTable, NoIdentity
from .identities import Counterexample, PropertyId, check_identity
from .isotopy import principal_isotope
from .subalgebra import (CLASS_PROPERTIES, STRICT, NonTrivialityPolicy,
                         SmarandacheClass, SubsetMask, class_witnesses,
                         has_class_property, is_closed, is_member, restrict,
                         subquasigroups)

SCHEMA_VERSION = 1
ORACLE_BOUND = 6


class NotInClass(LoopError, ValueError):
    pass


@dataclass
class UniversalityReport:
    property: str
    verdict: str                     # "universal" | "not_universal"
    isotopes_checked: int
    counterexample: tuple[int, int, Counterexample | None] | None = None
    quantifier: str | None = None
    witness: SubsetMask | None = None
    pairs: list[dict] = field(default_factory=list)

    @property
    def universal(self) -> bool:
        return self.verdict == "universal"

    def to_dict(self) -> dict:
        out = {"schema_version": SCHEMA_VERSION, "property": self.property,
               "verdict": self.verdict, "isotopes_checked": self.isotopes_checked,
               "counterexample": None}
        if self.counterexample is not None:
            f, g, cex = self.counterexample
            out["counterexample"] = {"f": f, "g": g,
                                     "failure": None if cex is None else cex.to_dict()}
        if self.quantifier is not None:
            out["quantifier"] = self.quantifier
            out["witness"] = None if self.witness is None else self.witness.elements()
            out["pairs"] = self.pairs
        return out


def is_universal(T: MulTable, p: PropertyId) -> UniversalityReport:
    """Check ``p`` on every f,g-principal isotope, in row-major ``(f, g)`` order.

    Stops at the first failing isotope.
    """
    p = PropertyId.parse(p) if isinstance(p, str) else p
    if p is not PropertyId.ASSOC:
        T.require_identity()
    n = T.order
    checked = 0
    for f in range(n):
        for g in range(n):
            checked += 1
            cex = check_identity(principal_isotope(T, f, g), p)
            if cex is not None:
                return UniversalityReport(p.value, "not_universal", checked, (f, g, cex))
    return UniversalityReport(p.value, "universal", checked)


def _pairs(elements):
    return [(f, g) for f in elements for g in elements]


def is_smarandache_universal(T: MulTable, c: SmarandacheClass, quantifier: str = "s",
                             policy: NonTrivialityPolicy = STRICT,
                             witness: SubsetMask | None = None) -> UniversalityReport:
    """Is every principal isotope of ``T`` again in class ``c``?

    ``quantifier="s"`` draws ``f, g`` from the S-subloop ``witness`` (the
    smallest one by default), i.e. only Smarandache f,g-principal isotopes
    are examined; ``"g"`` uses every pair in the table.
    """
    c = SmarandacheClass.parse(c) if isinstance(c, str) else c
    if quantifier not in ("s", "g"):
        raise ValueError("quantifier must be 's' or 'g'")
    witnesses = class_witnesses(T, c, policy)
    if not witnesses:
        raise NotInClass(f"table is not in class {c.value} under policy {policy.name}")
    if witness is None:
        witness = witnesses[0]
    elif witness not in witnesses:
        raise NotInClass(f"{witness.elements()} does not witness {c.value}")
    elements = witness.elements() if quantifier == "s" else range(T.order)
    rows, first_bad = [], None
    for f, g in _pairs(elements):
        member = is_member(principal_isotope(T, f, g), c, policy)
        rows.append({"f": f, "g": g, "member": member})
        if not member and first_bad is None:
            first_bad = (f, g, None)
    verdict = "universal" if first_bad is None else "not_universal"
    return UniversalityReport(c.value, verdict, len(rows), first_bad,
                              quantifier, witness, rows)


# -- theorem orchestration ------------------------------------------------------

@dataclass(frozen=True)
class _Part:
    cls: SmarandacheClass
    triples: tuple[TheoremTripleId, ...] = ()
    variants: tuple[TheoremTripleId, ...] = ()
    forward: bool = True


@dataclass(frozen=True)
class _IffPart:
    left: SmarandacheClass      # the inverse-property class
    right: SmarandacheClass     # the Bol/Moufang class


SC = SmarandacheClass
TID = TheoremTripleId
THEOREMS: dict[str, tuple] = {
    "1.4": (_Part(SC.S_QUASIGROUP),),
    "1.5": (_Part(SC.S_LOOP, (TID.T1_5,)),),
    "1.6": (_Part(SC.SRBL, (TID.T1_6_RB,)), _Part(SC.SLBL, (TID.T1_6_LB,))),
    "1.7": (_Part(SC.SML, MOUFANG_TRIPLES),),
    "1.8": (_Part(SC.SEL, EXTRA_TRIPLES, (TID.T1_8_E1_ALT,)),),
    "1.9": (_IffPart(SC.SLIPL, SC.SLBL), _IffPart(SC.SRIPL, SC.SRBL)),
    "1.10": (_IffPart(SC.SIPL, SC.SML),),
    "c1.11": (_Part(SC.SLIPL, (TID.C1_11_L,), (TID.C1_11_L_PRINTED,), forward=False),
              _Part(SC.SRIPL, (TID.C1_11_R,), (TID.C1_11_R_PRINTED,), forward=False)),
    "c1.12": (_Part(SC.SIPL, MOUFANG_TRIPLES, forward=False),),
}


def _normalize_theorem(which: str) -> str:
    key = str(which).lower().strip()
    if key.startswith("c") and not key.startswith("c1."):
        key = "c1." + key[1:]
    if key not in THEOREMS:
        raise ValueError(f"unknown theorem {which!r}; expected one of {sorted(THEOREMS)}")
    return key


@dataclass
class TheoremReport:
    theorem: str
    policy: str
    quantifier: str
    hypothesis_status: str           # holds | fails | vacuous
    conclusion_status: str           # holds | fails | untested
    parts: list[dict]
    counterexamples: list[dict]

    def to_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "theorem": self.theorem,
                "policy": self.policy, "quantifier": self.quantifier,
                "hypothesis_status": self.hypothesis_status,
                "conclusion_status": self.conclusion_status,
                "parts": self.parts, "counterexamples": self.counterexamples}


class _Context:
    """Caches isotopes, restrictions and oracle lists for one table."""

    def __init__(self, T: MulTable, policy: NonTrivialityPolicy):
        self.T = T
        self.policy = policy
        self.subs = subquasigroups(T)
        self._iso: dict[tuple[int, int], MulTable] = {}
        self._oracle: dict[SubsetMask, set] = {}
        self._univ: dict[tuple, list] = {}
        self._triples: dict[tuple, object] = {}

    def triple(self, tid, f, g):
        # triples live on the whole loop, so witnesses sharing (f, g) share them
        key = (tid, f, g)
        if key not in self._triples:
            self._triples[key] = build_theorem_triple(self.T, tid, f, g)
        return self._triples[key]

    def isotope(self, f, g):
        if (f, g) not in self._iso:
            self._iso[f, g] = principal_isotope(self.T, f, g)
        return self._iso[f, g]

    def witnesses(self, c):
        if c is not SC.S_QUASIGROUP and not self.T.is_loop:
            return []
        return class_witnesses(self.T, c, self.policy, self.subs)

    def isotope_failures(self, S: SubsetMask, c: SmarandacheClass) -> list[list[int]]:
        """Pairs (f, g) in S x S whose Smarandache isotope loses the class property on S."""
        key = (S, c)
        if key not in self._univ:
            bad = []
            for f, g in _pairs(S.elements()):
                H = self.isotope(f, g)
                assert is_closed(H, S)
                if not has_class_property(restrict(H, S), c):
                    bad.append([f, g])
            self._univ[key] = bad
        return self._univ[key]

    def oracle(self, S: SubsetMask) -> set | None:
        if S.size > ORACLE_BOUND:
            return None
        if S not in self._oracle:
            self._oracle[S] = {restrict_triple(t, S) for t in autotopism_search(self.T, S)}
        return self._oracle[S]


def _check_triples(ctx: _Context, S: SubsetMask, tids, part_name, cexs, record_cex=True):
    out = {}
    oracle = ctx.oracle(S)
    for tid in tids:
        fails, misses = [], []
        for f, g in _pairs(S.elements()):
            t = ctx.triple(tid, f, g)
            cex = is_autotopism(ctx.T, S, t)
            if cex is not None:
                fails.append([f, g])
                if record_cex:
                    cexs.append({"part": part_name, "mask": S.elements(), "triple": tid.value,
                                 "f": f, "g": g, "x": cex.x, "y": cex.y,
                                 "lhs": cex.lhs, "rhs": cex.rhs})
            if oracle is not None and restrict_triple(t, S) not in oracle:
                misses.append([f, g])
        entry = {"checked": S.size ** 2, "failures": fails}
        if oracle is not None:
            entry["oracle_misses"] = misses
        out[tid.value] = entry
    return out


def _triples_ok(results: dict) -> bool:
    return all(not r["failures"] and not r.get("oracle_misses") for r in results.values())


def _verify_part(ctx: _Context, part: _Part, quantifier: str, cexs: list) -> dict:
    c = part.cls
    name = c.value
    witnesses = ctx.witnesses(c)
    out = {"part": name, "in_class": bool(witnesses), "witnesses": []}
    if not witnesses:
        out["hypothesis"] = "fails"
        out["conclusion"] = "untested"
        return out
    statuses = []
    if part.forward and quantifier == "g":
        T = ctx.T
        bad = [[f, g] for f in range(T.order) for g in range(T.order)
               if not is_member(ctx.isotope(f, g), c, ctx.policy)]
        out["forward_over_g"] = {"checked": T.order ** 2, "failures": bad}
        statuses.append(not bad)
        for f, g in bad:
            cexs.append({"part": name, "kind": "forward", "f": f, "g": g})
    any_converse = False
    for S in witnesses:
        bad = ctx.isotope_failures(S, c)
        entry = {"mask": S.elements(), "universal": not bad,
                 "isotope_failures": bad}
        if part.forward and quantifier == "s":
            statuses.append(not bad)
            for f, g in bad:
                cexs.append({"part": name, "kind": "forward", "mask": S.elements(),
                             "f": f, "g": g})
        if part.triples:
            if bad:
                entry["converse"] = "untested"
            else:
                any_converse = True
                res = _check_triples(ctx, S, part.triples, name, cexs)
                entry["converse"] = "holds" if _triples_ok(res) else "fails"
                entry["triples"] = res
                statuses.append(_triples_ok(res))
                if part.variants:
                    var = _check_triples(ctx, S, part.variants, name, cexs, record_cex=False)
                    entry["variants"] = var
        out["witnesses"].append(entry)
    if part.triples and not part.forward and not any_converse:
        out["hypothesis"] = "vacuous"
        out["conclusion"] = "untested"
        return out
    out["hypothesis"] = "holds"
    out["conclusion"] = "holds" if all(statuses) else "fails"
    return out


def _verify_iff(ctx: _Context, part: _IffPart, cexs: list) -> dict:
    name = f"{part.left.value}<->{part.right.value}"
    lw, rw = ctx.witnesses(part.left), ctx.witnesses(part.right)
    out = {"part": name, "in_class": {part.left.value: bool(lw), part.right.value: bool(rw)},
           "witnesses": []}
    if not lw and not rw:
        out["hypothesis"] = "fails"
        out["conclusion"] = "untested"
        return out
    lset, rset = set(lw), set(rw)
    ok = True
    any_left = any_right = False
    for S in sorted(lset | rset, key=SubsetMask.sort_key):
        left_univ = S in lset and not ctx.isotope_failures(S, part.left)
        is_right = S in rset
        right_univ = is_right and not ctx.isotope_failures(S, part.right)
        agree = left_univ == is_right and (right_univ or not is_right)
        any_left |= left_univ
        any_right |= is_right
        ok &= agree
        if not agree:
            cexs.append({"part": name, "kind": "iff", "mask": S.elements(),
                         "universal_" + part.left.value: left_univ,
                         part.right.value: is_right})
        out["witnesses"].append({"mask": S.elements(),
                                 "universal_" + part.left.value: left_univ,
                                 part.right.value: is_right,
                                 "universal_" + part.right.value: right_univ,
                                 "iff": agree})
    out["loop_level"] = {"universal_" + part.left.value: any_left,
                         part.right.value: any_right, "iff": any_left == any_right}
    ok &= any_left == any_right
    out["hypothesis"] = "holds"
    out["conclusion"] = "holds" if ok else "fails"
    return out


def _run_theorem(ctx: _Context, key: str, quantifier: str) -> TheoremReport:
    cexs: list[dict] = []
    parts = []
    for part in THEOREMS[key]:
        if isinstance(part, _IffPart):
            parts.append(_verify_iff(ctx, part, cexs))
        else:
            parts.append(_verify_part(ctx, part, quantifier, cexs))
    hyps = [p["hypothesis"] for p in parts]
    concl = [p["conclusion"] for p in parts]
    if "holds" in hyps:
        hyp = "holds"
    elif "vacuous" in hyps:
        hyp = "vacuous"
    else:
        hyp = "fails"
    if "fails" in concl:
        con = "fails"
    elif "holds" in concl:
        con = "holds"
    else:
        con = "untested"
    return TheoremReport(key, ctx.policy.name, quantifier, hyp, con, parts, cexs)


def verify_theorem(T: MulTable, which: str, policy: NonTrivialityPolicy = STRICT,
                   quantifier: str = "s") -> TheoremReport:
    """Check one result end to end on ``T``.

    Every admissible witness sub-structure is examined separately. A part
    whose class does not contain ``T`` reports hypothesis "fails" and is not
    counted as a pass.
    """
    return verify_theorems(T, [which], policy, quantifier)[_normalize_theorem(which)]


def verify_theorems(T: MulTable, which=None, policy: NonTrivialityPolicy = STRICT,
                    quantifier: str = "s") -> dict[str, TheoremReport]:
    """Like :func:`verify_theorem` for several results, sharing isotopes,
    triples and oracle lists between them. ``which=None`` runs all of them."""
    keys = list(THEOREMS) if which is None else [_normalize_theorem(w) for w in which]
    if quantifier not in ("s", "g"):
        raise ValueError("quantifier must be 's' or 'g'")
    ctx = _Context(T, policy)
    return {key: _run_theorem(ctx, key, quantifier) for key in keys}


__all__ = ["UniversalityReport", "TheoremReport", "NotInClass", "is_universal",
           "is_smarandache_universal", "verify_theorem", "verify_theorems", "THEOREMS",
           "NoIdentity"]
