"""Standard tables, the Chein doubling, backtracking loop search and a corpus."""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import LoopError, MulTable, validate_table
from .identities import (EQUATIONS, NEEDS_IDENTITY, PropertyId, check_a_loop,
                         check_identity, evaluate, grid, variables)
from .subalgebra import ClassificationReport, subloops

MAX_SEARCH_ORDER = 8


class NotAGroup(LoopError, ValueError):
    pass


class SearchBoundExceeded(LoopError, ValueError):
    pass


def gen_cyclic(n: int) -> MulTable:
    if n < 1:
        raise ValueError("n must be positive")
    i = np.arange(n)
    return validate_table(n, (i[:, None] + i[None, :]) % n)


def gen_klein() -> MulTable:
    i = np.arange(4)
    return validate_table(4, i[:, None] ^ i[None, :])


def _table_from(elements, mul) -> MulTable:
    index = {e: k for k, e in enumerate(elements)}
    return validate_table(len(elements), [[index[mul(a, b)] for b in elements] for a in elements])


def gen_sym3() -> MulTable:
    """S3 on permutations of three points; ``a . b`` applies ``a`` first."""
    perms = list(itertools.permutations(range(3)))
    return _table_from(perms, lambda a, b: tuple(b[a[k]] for k in range(3)))


def gen_dihedral(n: int) -> MulTable:
    """The dihedral group of order ``2n``; element ``i + n*j`` is ``r^i s^j``."""
    if n < 1:
        raise ValueError("n must be positive")

    def mul(a, b):
        (i, j), (k, m) = a, b
        return ((i + (k if j == 0 else -k)) % n, (j + m) % 2)
    elements = [(i, j) for j in range(2) for i in range(n)]
    return _table_from(elements, mul)


def gen_quaternion() -> MulTable:
    """Q8 as signed units; ``+-1, +-i, +-j, +-k`` in that order."""
    def qmul(a, b):
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0)
    units = []
    for axis in range(4):
        for sign in (1, -1):
            u = [0, 0, 0, 0]
            u[axis] = sign
            units.append(tuple(u))
    return _table_from(units, qmul)


def gen_chein(G: MulTable) -> MulTable:
    """Chein's doubling M(G, 2) on ``G u Gu``; element ``g + |G|`` stands for ``gu``.

    g(hu) = (hg)u,  (gu)h = (gh^-1)u,  (gu)(hu) = h^-1 g
    """
    if not G.is_loop or check_identity(G, PropertyId.ASSOC) is not None:
        raise NotAGroup("Chein doubling needs a group")
    if G.identity != 0:
        raise NotAGroup("expected the group identity at index 0")
    n = G.order
    c = G.cells
    inv = np.argmax(c == 0, axis=1)
    out = np.zeros((2 * n, 2 * n), np.int64)
    g = np.arange(n)[:, None]
    h = np.arange(n)[None, :]
    out[:n, :n] = c
    out[:n, n:] = c[h, g] + n
    out[n:, :n] = c[g, inv[h]] + n
    out[n:, n:] = c[inv[h], g]
    return validate_table(2 * n, out)


# -- backtracking search ------------------------------------------------------

@dataclass
class SearchSpec:
    order: int
    required: list[PropertyId] = field(default_factory=list)
    forbidden: list[PropertyId] = field(default_factory=list)
    limit: int = 1
    seed: int | None = None
    accept: Callable[[MulTable], bool] | None = None

    def __post_init__(self):
        self.required = [PropertyId.parse(p) if isinstance(p, str) else p for p in self.required]
        self.forbidden = [PropertyId.parse(p) if isinstance(p, str) else p for p in self.forbidden]


def _expand(props):
    out = []
    for p in props:
        if p is PropertyId.IP:
            out += [PropertyId.LIP, PropertyId.RIP]
        else:
            out.append(p)
    return out


def _partial_inverses(P: np.ndarray):
    n = len(P)
    lam = np.full(n, -1)
    rho = np.full(n, -1)
    rr, cc = np.nonzero(P == 0)
    lam[cc] = rr
    rho[rr] = cc
    return lam, rho


class _Pruner:
    """Evaluates equational identities on a partially filled table."""

    def __init__(self, n, props):
        self.checks = []
        for p in _expand(props):
            if p not in EQUATIONS:
                continue
            lhs, rhs = EQUATIONS[p]
            nv = len(variables(lhs) | variables(rhs))
            self.checks.append((lhs, rhs, grid(n, nv), p in NEEDS_IDENTITY))

    def consistent(self, P: np.ndarray) -> bool:
        inv = None
        for lhs, rhs, env, needs_inv in self.checks:
            lam = rho = None
            if needs_inv:
                if inv is None:
                    inv = _partial_inverses(P)
                lam, rho = inv
            a = evaluate(lhs, P, env, lam, rho)
            b = evaluate(rhs, P, env, lam, rho)
            if np.any((a >= 0) & (b >= 0) & (a != b)):
                return False
        return True


def search_loops(spec: SearchSpec) -> list[MulTable]:
    """Backtracking over normalized loop tables (row and column 0 are the identity).

    Cells are filled row-major; after each cell, required identities are
    evaluated on the prefix and any fully determined instance that fails
    prunes the branch. Complete tables are re-checked for the required and
    forbidden properties and ``spec.accept``. Candidate values are tried in
    increasing order, or in a ``random.Random(seed)`` shuffled order.
    Results are returned sorted lexicographically.
    """
    n = spec.order
    if n < 1 or n > MAX_SEARCH_ORDER:
        raise SearchBoundExceeded(f"order {n} outside [1, {MAX_SEARCH_ORDER}]")
    rng = random.Random(spec.seed) if spec.seed is not None else None
    pruner = _Pruner(n, spec.required)
    P = -np.ones((n, n), np.int64)
    P[0] = np.arange(n)
    P[:, 0] = np.arange(n)
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    found: list[MulTable] = []

    def complete_ok(T: MulTable) -> bool:
        if any(check_identity(T, p) is not None for p in spec.required):
            return False
        if any(check_identity(T, p) is None for p in spec.forbidden):
            return False
        return spec.accept is None or spec.accept(T)

    def dfs(k):
        if k == len(cells):
            T = validate_table(n, P)
            if complete_ok(T):
                found.append(T)
            return len(found) >= spec.limit
        i, j = cells[k]
        used = set(P[i].tolist()) | set(P[:, j].tolist())
        options = [v for v in range(n) if v not in used]
        if rng is not None:
            rng.shuffle(options)
        for v in options:
            P[i, j] = v
            if pruner.consistent(P) and dfs(k + 1):
                return True
        P[i, j] = -1
        return False

    if spec.limit > 0:
        dfs(0)
    return sorted(found, key=lambda T: T.cells.tolist())


# -- corpus -------------------------------------------------------------------

@dataclass
class CorpusEntry:
    name: str
    table: MulTable
    provenance: str
    tags: tuple[str, ...] = ()
    classification: ClassificationReport | None = None


def has_no_proper_subloop(T: MulTable) -> bool:
    return all(S.size in (1, T.order) for S in subloops(T))


def has_unequal_inverses(T: MulTable) -> bool:
    lam = np.argmax(T.cells == T.identity, axis=0)
    rho = np.argmax(T.cells == T.identity, axis=1)
    return bool(np.any(lam != rho))


def fails_a_loop_test(T: MulTable) -> bool:
    return check_a_loop(T) is not None


def subtraction_quasigroup(n: int) -> MulTable:
    i = np.arange(n)
    return validate_table(n, (i[:, None] - i[None, :]) % n)


def left_bol_8() -> MulTable:
    return search_loops(SearchSpec(8, [PropertyId.LBOL], [PropertyId.ASSOC], seed=0))[0]


def lip_not_lbol_6() -> MulTable:
    return search_loops(SearchSpec(6, [PropertyId.LIP], [PropertyId.LBOL], seed=0))[0]


@functools.lru_cache(maxsize=None)
def corpus() -> tuple[CorpusEntry, ...]:
    """The fixed test corpus. Searched entries are reproducible (seed 0)."""
    entries = [CorpusEntry(f"z{n}", gen_cyclic(n), f"gen_cyclic({n})", ("group",))
               for n in range(1, 9)]
    entries += [
        CorpusEntry("klein", gen_klein(), "gen_klein()", ("group",)),
        CorpusEntry("s3", gen_sym3(), "gen_sym3()", ("group",)),
        CorpusEntry("d3", gen_dihedral(3), "gen_dihedral(3)", ("group",)),
        CorpusEntry("d4", gen_dihedral(4), "gen_dihedral(4)", ("group",)),
        CorpusEntry("q8", gen_quaternion(), "gen_quaternion()", ("group",)),
        CorpusEntry("chein_z3", gen_chein(gen_cyclic(3)), "gen_chein(gen_cyclic(3))", ("group",)),
        CorpusEntry("chein12", gen_chein(gen_sym3()), "gen_chein(gen_sym3())", ("moufang",)),
        CorpusEntry("extra16", gen_chein(gen_dihedral(4)), "gen_chein(gen_dihedral(4))",
                    ("moufang", "extra")),
    ]
    b8 = left_bol_8()
    entries += [
        CorpusEntry("lbol8", b8, "search_loops(order=8, require=[lbol], forbid=[assoc], seed=0)",
                    ("lbol",)),
        CorpusEntry("rbol8", validate_table(8, b8.cells.T),
                    "transpose of lbol8", ("rbol",)),
        CorpusEntry("lip6", lip_not_lbol_6(),
                    "search_loops(order=6, require=[lip], forbid=[lbol], seed=0)", ("lip",)),
        CorpusEntry("nosub5", search_loops(SearchSpec(
            5, [], [PropertyId.ASSOC], seed=0, accept=has_no_proper_subloop))[0],
            "search_loops(order=5, forbid=[assoc], seed=0) + no proper subloop", ()),
        CorpusEntry("inv5", search_loops(SearchSpec(
            5, [], [], seed=0, accept=has_unequal_inverses))[0],
            "search_loops(order=5, seed=0) + some left inverse != right inverse", ()),
        CorpusEntry("nona6", search_loops(SearchSpec(
            6, [], [], seed=0, accept=fails_a_loop_test))[0],
            "search_loops(order=6, seed=0) + not an A-loop", ()),
        CorpusEntry("sub3", subtraction_quasigroup(3), "x - y mod 3", ("quasigroup",)),
    ]
    names = [e.name for e in entries]
    assert len(names) == len(set(names))
    return tuple(entries)


def corpus_entry(name: str) -> CorpusEntry:
    for e in corpus():
        if e.name == name:
            return e
    raise KeyError(name)


def corpus_loops(max_order: int = 64) -> list[CorpusEntry]:
    return [e for e in corpus() if e.table.is_loop and e.table.order <= max_order]


def groups(entries=None) -> list[CorpusEntry]:
    return [e for e in (entries or corpus()) if "group" in e.tags]
