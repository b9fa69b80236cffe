"""Autotopism checks, the translation-word triples, and a brute-force oracle.

Triples are words in the translations ``R_g, L_f, R_{f^rho}, L_{g^lambda}``
and their inverses, read left to right (maps act on the right). All words
live in :data:`TRIPLE_WORDS`; nothing else in the package spells them out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .core import (LoopError, MulTable, Perm, compose_all, left_inverse,
                   left_translation, right_inverse, right_translation)
from .identities import Counterexample
from .isotopy import IsotopismTriple
from .subalgebra import SubsetMask


class NotClosedUnderComponents(LoopError, ValueError):
    pass


class BoundExceeded(LoopError, ValueError):
    pass


AUTOTOPISM_SEARCH_BOUND = 8


class TheoremTripleId(enum.Enum):
    T1_5 = "t1_5"
    T1_6_RB = "t1_6_rb"
    T1_6_LB = "t1_6_lb"
    T1_7_M1 = "t1_7_m1"
    T1_7_M2 = "t1_7_m2"
    T1_7_M3 = "t1_7_m3"
    T1_7_M4 = "t1_7_m4"
    T1_7_M5 = "t1_7_m5"
    T1_7_M6 = "t1_7_m6"
    T1_8_E1 = "t1_8_e1"
    T1_8_E2 = "t1_8_e2"
    T1_8_E3 = "t1_8_e3"
    # middle component taken from the line before the last substitution
    T1_8_E1_ALT = "t1_8_e1_alt"
    C1_11_L = "c1_11_l"
    C1_11_R = "c1_11_r"
    # the opposite left/right pairing, kept for comparison
    C1_11_L_PRINTED = "c1_11_l_printed"
    C1_11_R_PRINTED = "c1_11_r_printed"


# Tokens: Rg Lf Rfr (R_{f^rho}) Lgl (L_{g^lambda}); a trailing ' is an inverse.
# "I" is the identity map.
_T1 = ("Rg Rfr'", "Lgl Rg' Rfr Lf'", "Rg' Rfr")
_T2 = ("Rfr Lf' Lgl Rg'", "Lf Lgl'", "Lf' Lgl")
TRIPLE_WORDS: dict[TheoremTripleId, tuple[str, str, str]] = {
    TheoremTripleId.T1_5: ("I", "Lf Rg' Rfr Lf'", "Rg' Rfr"),
    TheoremTripleId.T1_6_RB: _T1,
    TheoremTripleId.T1_6_LB: _T2,
    TheoremTripleId.T1_7_M1: ("Rg Lf' Lgl Rg'", "Lf Rg' Rfr Lf'", "Lf' Lgl Rg' Rfr"),
    TheoremTripleId.T1_7_M2: ("Rg Lf' Lgl Rg'", "Lf Rg' Rfr Lf'", "Rg' Rfr Lf' Lgl"),
    TheoremTripleId.T1_7_M3: ("Rg Lf' Lgl Rg' Rfr Rg'", "Lf Lgl'", "Lf' Lgl"),
    TheoremTripleId.T1_7_M4: ("Rg Rfr'", "Lf Rg' Rfr Lf' Lgl Lf'", "Rg' Rfr"),
    TheoremTripleId.T1_7_M5: ("Rg Lf' Lgl Rg'", "Lgl Rg' Rfr Lgl'", "Rg' Rfr Lf' Lgl"),
    TheoremTripleId.T1_7_M6: ("Rfr Lf' Lgl Rfr'", "Lf Rg' Rfr Lf'", "Lf' Lgl Rg' Rfr"),
    TheoremTripleId.T1_8_E1: ("Rg Lf' Lgl Rg'", "Lf Rfr' Rg Lf'", "Lf' Lgl Rfr' Rg"),
    TheoremTripleId.T1_8_E2: ("Rg Rfr' Rg Lf' Lgl Rg'", "Lgl Lf'", "Lf' Lgl"),
    TheoremTripleId.T1_8_E3: ("Rfr Rg'", "Lf Lgl' Lf Rg' Rfr Lf'", "Rg' Rfr"),
    TheoremTripleId.T1_8_E1_ALT: ("Rg Lf' Lgl Rg'", "Lf Rg' Rfr Lf'", "Lf' Lgl Rfr' Rg"),
    TheoremTripleId.C1_11_L: _T2,
    TheoremTripleId.C1_11_R: _T1,
    TheoremTripleId.C1_11_L_PRINTED: _T1,
    TheoremTripleId.C1_11_R_PRINTED: _T2,
}

MOUFANG_TRIPLES = tuple(TheoremTripleId(f"t1_7_m{i}") for i in range(1, 7))
EXTRA_TRIPLES = (TheoremTripleId.T1_8_E1, TheoremTripleId.T1_8_E2,
                 TheoremTripleId.T1_8_E3) + MOUFANG_TRIPLES


def translation_alphabet(T: MulTable, f: int, g: int) -> dict[str, Perm]:
    fr = right_inverse(T, f)
    gl = left_inverse(T, g)
    maps = {"Rg": right_translation(T, g), "Lf": left_translation(T, f),
            "Rfr": right_translation(T, fr), "Lgl": left_translation(T, gl)}
    maps.update({k + "'": ~v for k, v in list(maps.items())})
    return maps


def evaluate_word(word: str, alphabet: dict[str, Perm], n: int) -> Perm:
    return compose_all([alphabet[tok] for tok in word.split() if tok != "I"], n)


def build_theorem_triple(T: MulTable, tid: TheoremTripleId, f: int, g: int) -> IsotopismTriple:
    alphabet = translation_alphabet(T, f, g)
    return IsotopismTriple(*(evaluate_word(w, alphabet, T.order) for w in TRIPLE_WORDS[tid]))


def _full(T: MulTable, S: SubsetMask | None) -> SubsetMask:
    return SubsetMask((1 << T.order) - 1) if S is None else S


def is_autotopism(T: MulTable, S: SubsetMask | None, t: IsotopismTriple):
    """None when ``xU . yV = (x.y)W`` on ``S x S``; else the first failure.

    Each component must map ``S`` onto itself.
    """
    S = _full(T, S)
    el = np.array(S.elements())
    inside = np.zeros(T.order, bool)
    inside[el] = True
    for name, p in zip("UVW", (t.a, t.b, t.c)):
        if not inside[p.images[el]].all():
            raise NotClosedUnderComponents(f"component {name} maps S outside S")
    U, V, W = t.a.images, t.b.images, t.c.images
    lhs = T.cells[U[el][:, None], V[el][None, :]]
    rhs = W[T.cells[np.ix_(el, el)]]
    bad = np.argwhere(lhs != rhs)
    if not len(bad):
        return None
    i, j = (int(v) for v in bad[0])
    return Counterexample(int(el[i]), int(el[j]), None, int(lhs[i, j]), int(rhs[i, j]),
                          "autotopism")


@dataclass(frozen=True)
class AutotopismWitness:
    triple: IsotopismTriple
    domain: SubsetMask


def restrict_triple(t: IsotopismTriple, S: SubsetMask) -> tuple:
    el = S.elements()
    return tuple(tuple(int(p.images[x]) for x in el) for p in (t.a, t.b, t.c))


def _extend(images_on_s: dict[int, int], n: int) -> Perm:
    out = list(range(n))
    for x, v in images_on_s.items():
        out[x] = v
    return Perm(out)


def autotopism_search(T: MulTable, S: SubsetMask | None = None,
                      bound: int = AUTOTOPISM_SEARCH_BOUND) -> list[IsotopismTriple]:
    """All autotopisms of the sub-structure ``S``, by brute force.

    For each bijection U of S and each image v of a fixed point s0 under V,
    the equation at y = s0 fixes W: ``(x.s0)W = xU . v``. The equation at
    x = s0 then fixes V by left division. Every candidate is verified in
    full. Triples are returned extended by the identity off ``S`` and
    sorted by their images.
    """
    S = _full(T, S)
    k = S.size
    if k > bound:
        raise BoundExceeded(f"|S| = {k} exceeds the search bound {bound}")
    el = S.elements()
    sub = T.cells[np.ix_(el, el)]
    pos = {g: i for i, g in enumerate(el)}
    loc = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub)
    ldiv = np.argsort(loc, axis=1)          # ldiv[a][c] = a \ c
    found = []
    for u in permutations(range(k)):
        u = np.array(u)
        for v0 in range(k):
            w = np.empty(k, np.int64)
            w[loc[:, 0]] = loc[u, v0]
            v = ldiv[u[0]][w[loc[0]]]
            if len(set(v.tolist())) != k:
                continue
            if np.array_equal(loc[u[:, None], v[None, :]], w[loc]):
                found.append((tuple(u.tolist()), tuple(v.tolist()), tuple(w.tolist())))
    found.sort()
    n = T.order
    return [IsotopismTriple(*(_extend({el[i]: el[m[i]] for i in range(k)}, n) for m in trip))
            for trip in found]


def automorphisms(T: MulTable, S: SubsetMask | None = None) -> list[Perm]:
    """All automorphisms of ``S`` by scanning every bijection of ``S``."""
    S = _full(T, S)
    el = S.elements()
    n = T.order
    out = []
    for images in permutations(el):
        phi = dict(zip(el, images))
        if all(phi[T.mul(a, b)] == T.mul(phi[a], phi[b]) for a in el for b in el):
            out.append(_extend(phi, n))
    return out
