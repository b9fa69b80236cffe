"""Isotopes, f,g-principal isotopes and isomorphism search."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .core import (DegreeMismatch, LoopError, MulTable, Perm, left_translation,
                   right_translation, validate_table)
from .subalgebra import SubsetMask, closure, is_closed


class SElementOutsideSubloop(LoopError, ValueError):
    pass


class WitnessNotFound(LoopError, RuntimeError):
    """No principal isotope matched; an isotope of a loop always has one."""


class NotALoopIsotope(LoopError, ValueError):
    pass


@dataclass(frozen=True)
class IsotopismTriple:
    """``(A, B, C)`` with ``xA * yB = (x . y)C``."""

    a: Perm
    b: Perm
    c: Perm

    def __post_init__(self):
        if not self.a.degree == self.b.degree == self.c.degree:
            raise DegreeMismatch("triple components have different degrees")

    @classmethod
    def identity(cls, n: int) -> "IsotopismTriple":
        i = Perm.identity(n)
        return cls(i, i, i)

    @property
    def degree(self) -> int:
        return self.a.degree

    def __mul__(self, other: "IsotopismTriple") -> "IsotopismTriple":
        return IsotopismTriple(self.a * other.a, self.b * other.b, self.c * other.c)

    def inverse(self) -> "IsotopismTriple":
        return IsotopismTriple(~self.a, ~self.b, ~self.c)

    def key(self) -> tuple:
        return (tuple(self.a), tuple(self.b), tuple(self.c))

    def to_dict(self) -> dict:
        return {"a": self.a.tolist(), "b": self.b.tolist(), "c": self.c.tolist()}


def apply_isotopism(G: MulTable, t: IsotopismTriple) -> MulTable:
    """The table ``u * v = ((u A^-1) . (v B^-1)) C``."""
    if t.degree != G.order:
        raise DegreeMismatch(f"triple of degree {t.degree} on table of order {G.order}")
    ai = (~t.a).images
    bi = (~t.b).images
    cells = t.c.images[G.cells[ai[:, None], bi[None, :]]]
    return validate_table(G.order, cells)


def principal_isotope(G: MulTable, f: int, g: int) -> MulTable:
    """``x o y = (x R_g^-1) . (y L_f^-1)``; its identity is ``f . g``."""
    n = G.order
    t = IsotopismTriple(right_translation(G, g), left_translation(G, f), Perm.identity(n))
    H = apply_isotopism(G, t)
    # f.g is an identity for every quasigroup, not only loops
    assert H.identity == G.mul(f, g), (f, g, H.identity)
    return H


def smarandache_principal_isotope(G: MulTable, S: SubsetMask, f: int, g: int) -> MulTable:
    if f not in S or g not in S:
        raise SElementOutsideSubloop(f"S-elements must lie in {S.elements()}: f={f}, g={g}")
    if not is_closed(G, S):
        raise ValueError(f"{S.elements()} is not a subquasigroup")
    H = principal_isotope(G, f, g)
    assert is_closed(H, S), "Smarandache isotope of a subloop stays a subloop"
    return H


# -- isomorphism --------------------------------------------------------------

def generated_sizes(T: MulTable) -> list[int]:
    """Size of the subquasigroup generated by each element."""
    return [closure(T, [x]).size for x in range(T.order)]


def find_isomorphism(G: MulTable, H: MulTable) -> Perm | None:
    """Lexicographically least ``phi`` with ``(x.y)phi = (x phi)*(y phi)``.

    Depth-first search assigns the smallest unassigned element first and
    tries images in increasing order; every assignment is closed under the
    forced consequences ``(x.y)phi := (x phi)*(y phi)`` before branching.
    Forced values agree with every completion, so the first complete map
    found is the least one.
    """
    n = G.order
    if H.order != n:
        return None
    if G.is_loop != H.is_loop:
        return None
    gs, hs = generated_sizes(G), generated_sizes(H)
    if sorted(gs) != sorted(hs):
        return None
    gc, hc = G.cells.tolist(), H.cells.tolist()
    phi = [-1] * n
    used = [False] * n

    def assign(x, v, trail):
        stack = [(x, v)]
        while stack:
            a, va = stack.pop()
            if phi[a] >= 0:
                if phi[a] != va:
                    return False
                continue
            if used[va] or gs[a] != hs[va]:
                return False
            phi[a] = va
            used[va] = True
            trail.append(a)
            for b in range(n):
                vb = phi[b]
                if vb < 0:
                    continue
                stack.append((gc[a][b], hc[va][vb]))
                stack.append((gc[b][a], hc[vb][va]))
        return True

    def undo(trail):
        for a in trail:
            used[phi[a]] = False
            phi[a] = -1

    def search():
        try:
            x = phi.index(-1)
        except ValueError:
            return True
        for v in range(n):
            if used[v] or gs[x] != hs[v]:
                continue
            trail = []
            if assign(x, v, trail) and search():
                return True
            undo(trail)
        return False

    if G.is_loop:
        trail = []
        if not assign(G.identity, H.identity, trail):
            return None
    if not search():
        return None
    return Perm(phi)


def is_isomorphism(G: MulTable, H: MulTable, phi: Perm) -> bool:
    p = phi.images
    return bool(np.array_equal(p[G.cells], H.cells[p[:, None], p[None, :]]))


def random_perm(n: int, rng: random.Random) -> Perm:
    images = list(range(n))
    rng.shuffle(images)
    return Perm(images)


def random_isotopism(n: int, rng: random.Random) -> IsotopismTriple:
    return IsotopismTriple(random_perm(n, rng), random_perm(n, rng), random_perm(n, rng))


def random_loop_isotopism(G: MulTable, rng: random.Random) -> IsotopismTriple:
    """A random triple whose isotope of ``G`` is a loop.

    A random ``(A, B, C)`` is followed by a principal isotopism
    ``(R_v, L_u, I)`` of the resulting quasigroup, for random ``u, v``.
    """
    t = random_isotopism(G.order, rng)
    H = apply_isotopism(G, t)
    u, v = rng.randrange(G.order), rng.randrange(G.order)
    return IsotopismTriple(t.a * right_translation(H, v), t.b * left_translation(H, u), t.c)


def verify_theorem_1_1(G: MulTable, t: IsotopismTriple) -> tuple[int, int, Perm]:
    """Find ``(f, g, phi)`` with ``phi`` an isomorphism from the isotope of
    ``G`` under ``t`` onto the f,g-principal isotope. Pairs are tried in
    row-major order.
    """
    G.require_identity()
    H = apply_isotopism(G, t)
    if not H.is_loop:
        raise NotALoopIsotope("the isotope is a quasigroup without identity; "
                              "only loop isotopes are principal-isotope images")
    n = G.order
    for f in range(n):
        for g in range(n):
            phi = find_isomorphism(H, principal_isotope(G, f, g))
            if phi is not None:
                return f, g, phi
    raise WitnessNotFound(f"no f,g-principal isotope of G matches {t}")


def is_g_loop(G: MulTable) -> bool:
    """True iff ``G`` is isomorphic to each of its f,g-principal isotopes."""
    G.require_identity()
    n = G.order
    return all(find_isomorphism(G, principal_isotope(G, f, g)) is not None
               for f in range(n) for g in range(n))
