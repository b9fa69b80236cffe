"""Subquasigroup/subloop enumeration and Smarandache classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .core import MulTable, NoIdentity, validate_table
from .identities import EXTRA, MOUFANG, PropertyId, check_identity


@dataclass(frozen=True, order=True)
class SubsetMask:
    """A set of elements stored as a bit mask (bit ``i`` set iff ``i`` in S)."""

    bits: int

    @classmethod
    def of(cls, elements) -> "SubsetMask":
        bits = 0
        for e in elements:
            bits |= 1 << int(e)
        return cls(bits)

    @property
    def size(self) -> int:
        return bin(self.bits).count("1")

    def elements(self) -> list[int]:
        out, b, i = [], self.bits, 0
        while b:
            if b & 1:
                out.append(i)
            b >>= 1
            i += 1
        return out

    def __contains__(self, e: int) -> bool:
        return bool(self.bits >> int(e) & 1)

    def __iter__(self):
        return iter(self.elements())

    def __len__(self) -> int:
        return self.size

    def sort_key(self):
        return (self.size, self.bits)

    def __repr__(self) -> str:
        return f"SubsetMask({self.elements()})"


def closure(T: MulTable, elements) -> SubsetMask:
    """Smallest subset containing ``elements`` and closed under the product."""
    c = T.cells
    members = set(int(e) for e in elements)
    todo = list(members)
    while todo:
        a = todo.pop()
        for b in list(members):
            for v in (int(c[a, b]), int(c[b, a])):
                if v not in members:
                    members.add(v)
                    todo.append(v)
    return SubsetMask.of(members)


def is_closed(T: MulTable, S: SubsetMask) -> bool:
    el = S.elements()
    if not el:
        return True
    block = T.cells[np.ix_(el, el)]
    return bool(np.isin(block, el).all())


def subquasigroups(T: MulTable) -> list[SubsetMask]:
    """All non-empty closed subsets, sorted by (size, bits).

    Seeds are the closures of all subsets of size at most two; pairwise joins
    are then closed until nothing new appears.
    """
    n = T.order
    found = {closure(T, [a]) for a in range(n)}
    found |= {closure(T, pair) for pair in combinations(range(n), 2)}
    frontier = set(found)
    while frontier:
        new = set()
        for A in frontier:
            for B in found:
                if A.bits | B.bits in (A.bits, B.bits):
                    continue
                J = closure(T, SubsetMask(A.bits | B.bits).elements())
                if J not in found and J not in new:
                    new.add(J)
        found |= new
        frontier = new
    return sorted(found, key=SubsetMask.sort_key)


def subloops(T: MulTable) -> list[SubsetMask]:
    e = T.require_identity()
    return [S for S in subquasigroups(T) if e in S]


def restrict(T: MulTable, S: SubsetMask) -> MulTable:
    """The subtable on ``S``, relabelled to ``0..|S|-1`` in increasing order."""
    el = S.elements()
    local = {g: i for i, g in enumerate(el)}
    block = T.cells[np.ix_(el, el)]
    return validate_table(len(el), [[local[int(v)] for v in row] for row in block])


# -- Smarandache classes ------------------------------------------------------

class SmarandacheClass(enum.Enum):
    S_QUASIGROUP = "s_quasigroup"
    S_LOOP = "s_loop"
    SLIPL = "slipl"
    SRIPL = "sripl"
    SIPL = "sipl"
    SRBL = "srbl"
    SLBL = "slbl"
    SCL = "scl"
    SEL = "sel"
    SAL = "sal"
    SML = "sml"

    @classmethod
    def parse(cls, name: str) -> "SmarandacheClass":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown class {name!r}") from None


# properties the witnessing sub-structure must have
CLASS_PROPERTIES: dict[SmarandacheClass, tuple[PropertyId, ...]] = {
    SmarandacheClass.S_QUASIGROUP: (PropertyId.ASSOC,),
    SmarandacheClass.S_LOOP: (PropertyId.ASSOC,),
    SmarandacheClass.SLIPL: (PropertyId.LIP,),
    SmarandacheClass.SRIPL: (PropertyId.RIP,),
    SmarandacheClass.SIPL: (PropertyId.IP,),
    SmarandacheClass.SRBL: (PropertyId.RBOL,),
    SmarandacheClass.SLBL: (PropertyId.LBOL,),
    SmarandacheClass.SCL: (PropertyId.C,),
    SmarandacheClass.SEL: EXTRA,
    SmarandacheClass.SAL: (PropertyId.ALOOP,),
    SmarandacheClass.SML: MOUFANG,
}

LOOP_CLASSES = tuple(c for c in SmarandacheClass if c is not SmarandacheClass.S_QUASIGROUP)


@dataclass(frozen=True)
class NonTrivialityPolicy:
    """Which sub-structures count as "non-trivial".

    ``min_size`` is the smallest admissible size; ``allow_whole`` admits the
    ambient table itself as its own witness.
    """

    min_size: int = 2
    allow_whole: bool = False

    def admits(self, S: SubsetMask, n: int) -> bool:
        if S.size < self.min_size:
            return False
        return self.allow_whole or S.size < n

    @property
    def name(self) -> str:
        if self == STRICT:
            return "strict"
        if self == LOOSE:
            return "loose"
        return f"min{self.min_size}{'+whole' if self.allow_whole else ''}"

    @classmethod
    def parse(cls, name: str) -> "NonTrivialityPolicy":
        return {"strict": STRICT, "loose": LOOSE}[name]


STRICT = NonTrivialityPolicy(2, False)
LOOSE = NonTrivialityPolicy(2, True)


def has_class_property(sub: MulTable, c: SmarandacheClass) -> bool:
    return all(check_identity(sub, p) is None for p in CLASS_PROPERTIES[c])


def candidates(T: MulTable, c: SmarandacheClass, policy: NonTrivialityPolicy,
               subs: list[SubsetMask] | None = None) -> list[SubsetMask]:
    if subs is None:
        subs = subquasigroups(T)
    if c is not SmarandacheClass.S_QUASIGROUP:
        e = T.require_identity()
        subs = [S for S in subs if e in S]
    return [S for S in subs if policy.admits(S, T.order)]


def class_witnesses(T: MulTable, c: SmarandacheClass,
                    policy: NonTrivialityPolicy = STRICT,
                    subs: list[SubsetMask] | None = None) -> list[SubsetMask]:
    """Every admissible sub-structure with the class property, smallest first."""
    return [S for S in candidates(T, c, policy, subs)
            if has_class_property(restrict(T, S), c)]


@dataclass
class ClassVerdict:
    member: bool
    witness: SubsetMask | None

    def to_dict(self) -> dict:
        return {"member": self.member,
                "witness": None if self.witness is None else self.witness.elements()}


@dataclass
class ClassificationReport:
    policy: NonTrivialityPolicy
    verdicts: dict[SmarandacheClass, ClassVerdict] = field(default_factory=dict)

    def __getitem__(self, c: SmarandacheClass) -> ClassVerdict:
        return self.verdicts[c]

    def __contains__(self, c: SmarandacheClass) -> bool:
        return c in self.verdicts and self.verdicts[c].member

    def to_dict(self) -> dict:
        return {"policy": self.policy.name,
                "classes": {c.value: v.to_dict() for c, v in self.verdicts.items()}}


def classify(T: MulTable, policy: NonTrivialityPolicy = STRICT,
             classes=None) -> ClassificationReport:
    """Decide membership in each Smarandache class; witness is the smallest mask.

    With ``classes=None`` a loop is tested against every class and a proper
    quasigroup only against S_QUASIGROUP. Asking for a loop class on a proper
    quasigroup raises NoIdentity.
    """
    if classes is None:
        classes = list(SmarandacheClass) if T.is_loop else [SmarandacheClass.S_QUASIGROUP]
    if not T.is_loop and any(c in LOOP_CLASSES for c in classes):
        raise NoIdentity("loop classes need a two-sided identity")
    subs = subquasigroups(T)
    restricted: dict[SubsetMask, MulTable] = {}
    report = ClassificationReport(policy)
    for c in classes:
        witness = None
        for S in candidates(T, c, policy, subs):
            if S not in restricted:
                restricted[S] = restrict(T, S)
            if has_class_property(restricted[S], c):
                witness = S
                break
        report.verdicts[c] = ClassVerdict(witness is not None, witness)
    return report


def is_member(T: MulTable, c: SmarandacheClass,
              policy: NonTrivialityPolicy = STRICT) -> bool:
    return c in classify(T, policy, [c])
