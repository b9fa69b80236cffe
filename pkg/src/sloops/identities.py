"""Bol-Moufang type identities and inverse properties, checked exhaustively.

Each equational identity is a pair of expression trees over the variables
``x``, ``y``, ``z``. Trees are evaluated with numpy over every assignment at
once, so the first failing assignment in lexicographic order is simply the
first ``True`` of the mismatch array in C order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import MulTable, NoIdentity, inverse_arrays


class PropertyId(enum.Enum):
    ASSOC = "assoc"
    LBOL = "lbol"
    RBOL = "rbol"
    MOUF1 = "mouf1"
    MOUF2 = "mouf2"
    MOUF3 = "mouf3"
    MOUF4 = "mouf4"
    EXTRA1 = "extra1"
    EXTRA2 = "extra2"
    EXTRA3 = "extra3"
    LIP = "lip"
    RIP = "rip"
    IP = "ip"
    LCC = "lcc"
    RCC = "rcc"
    CC = "cc"
    LC = "lc"
    RC = "rc"
    C = "c"
    ALOOP = "aloop"
    FLEX = "flex"

    @classmethod
    def parse(cls, name: str) -> "PropertyId":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown property {name!r}") from None


@dataclass(frozen=True)
class Counterexample:
    """A failing assignment. ``z`` is None for two-variable identities."""

    x: int
    y: int
    z: int | None
    lhs: int
    rhs: int
    form: str = ""

    def to_dict(self) -> dict:
        return {"form": self.form, "x": self.x, "y": self.y, "z": self.z,
                "lhs": self.lhs, "rhs": self.rhs}


# -- expression trees ---------------------------------------------------------
# A term is a variable name, ("*", a, b), ("lam", a) or ("rho", a).

def _m(a, b):
    return ("*", a, b)


x, y, z = "x", "y", "z"

EQUATIONS: dict[PropertyId, tuple] = {
    PropertyId.ASSOC: (_m(_m(x, y), z), _m(x, _m(y, z))),
    PropertyId.RBOL: (_m(_m(_m(y, x), z), x), _m(y, _m(_m(x, z), x))),
    PropertyId.LBOL: (_m(_m(x, _m(y, x)), z), _m(x, _m(y, _m(x, z)))),
    PropertyId.MOUF1: (_m(_m(x, y), _m(z, x)), _m(_m(x, _m(y, z)), x)),
    PropertyId.MOUF2: (_m(_m(x, y), _m(z, x)), _m(x, _m(_m(y, z), x))),
    PropertyId.MOUF3: (_m(_m(_m(x, y), x), z), _m(x, _m(y, _m(x, z)))),
    PropertyId.MOUF4: (_m(_m(_m(y, x), z), x), _m(y, _m(x, _m(z, x)))),
    PropertyId.EXTRA1: (_m(_m(_m(x, y), z), x), _m(x, _m(y, _m(z, x)))),
    PropertyId.EXTRA2: (_m(_m(x, y), _m(x, z)), _m(x, _m(_m(y, x), z))),
    PropertyId.EXTRA3: (_m(_m(y, x), _m(z, x)), _m(_m(y, _m(x, z)), x)),
    PropertyId.LC: (_m(_m(x, x), _m(y, z)), _m(_m(x, _m(x, y)), z)),
    PropertyId.RC: (_m(y, _m(_m(z, x), x)), _m(_m(_m(y, z), x), x)),
    PropertyId.C: (_m(x, _m(y, _m(y, z))), _m(_m(_m(x, y), y), z)),
    PropertyId.LIP: (_m(("lam", x), _m(x, y)), y),
    PropertyId.RIP: (_m(_m(y, x), ("rho", x)), y),
    PropertyId.FLEX: (_m(_m(x, y), x), _m(x, _m(y, x))),
}

NEEDS_IDENTITY = {PropertyId.LIP, PropertyId.RIP, PropertyId.IP, PropertyId.ALOOP}
TWO_VARIABLE = {PropertyId.LIP, PropertyId.RIP, PropertyId.FLEX}


def variables(term) -> set[str]:
    if isinstance(term, str):
        return {term}
    return set().union(*(variables(t) for t in term[1:]))


def evaluate(term, cells: np.ndarray, env: dict, lam=None, rho=None) -> np.ndarray:
    """Evaluate ``term`` elementwise.

    Negative entries mean "unknown" and propagate, which lets the loop search
    evaluate identities on partially filled tables.
    """
    if isinstance(term, str):
        return env[term]
    op = term[0]
    if op == "*":
        a = evaluate(term[1], cells, env, lam, rho)
        b = evaluate(term[2], cells, env, lam, rho)
        known = (a >= 0) & (b >= 0)
        return np.where(known, cells[np.where(known, a, 0), np.where(known, b, 0)], -1)
    inv = lam if op == "lam" else rho
    a = evaluate(term[1], cells, env, lam, rho)
    return np.where(a >= 0, inv[np.where(a >= 0, a, 0)], -1)


def grid(n: int, nvars: int) -> dict:
    axes = np.meshgrid(*([np.arange(n)] * nvars), indexing="ij")
    return dict(zip("xyz", axes))


def _first_failure(lhs, rhs, env, form, two_var) -> Counterexample | None:
    bad = np.flatnonzero((lhs != rhs).ravel())
    if not len(bad):
        return None
    i = bad[0]
    ex = env["x"].ravel()[i]
    ey = env["y"].ravel()[i]
    ez = None if two_var else int(env["z"].ravel()[i])
    return Counterexample(int(ex), int(ey), ez, int(lhs.ravel()[i]),
                          int(rhs.ravel()[i]), form)


def _check_equation(T: MulTable, p: PropertyId) -> Counterexample | None:
    lhs_t, rhs_t = EQUATIONS[p]
    two_var = p in TWO_VARIABLE
    env = grid(T.order, 2 if two_var else 3)
    lam = rho = None
    if p in NEEDS_IDENTITY:
        lam, rho = inverse_arrays(T)
    lhs = np.broadcast_to(evaluate(lhs_t, T.cells, env, lam, rho), env["x"].shape)
    rhs = np.broadcast_to(evaluate(rhs_t, T.cells, env, lam, rho), env["x"].shape)
    return _first_failure(lhs, rhs, env, p.value, two_var)


def _check_conjugacy(T: MulTable, side: str) -> Counterexample | None:
    # LCC: every L_x L_y L_x^-1 is a left translation (RCC: right, dually).
    # If P = L_w then w is pinned down by 0P = w.0, i.e. w is read off column 0.
    c = T.cells if side == "l" else T.cells.T
    n = T.order
    col0 = {int(v): w for w, v in enumerate(c[:, 0].tolist())}
    for a in range(n):
        inv_a = np.argsort(c[a])
        for b in range(n):
            P = inv_a[c[b][c[a]]]          # t -> ((t La) Lb) La^-1
            w = col0[int(P[0])]
            diff = np.flatnonzero(P != c[w])
            if len(diff):
                t = int(diff[0])
                return Counterexample(a, b, t, int(P[t]), int(c[w, t]), side + "cc")
    return None


def check_identity(T: MulTable, p: PropertyId) -> Counterexample | None:
    """Exhaustively check property ``p``; None means it holds.

    Composite properties (IP, CC) report the first failing component.
    """
    p = PropertyId.parse(p) if isinstance(p, str) else p
    if p in NEEDS_IDENTITY and not T.is_loop:
        raise NoIdentity(f"{p.value} needs a loop")
    if p in EQUATIONS:
        return _check_equation(T, p)
    if p is PropertyId.IP:
        return _check_equation(T, PropertyId.LIP) or _check_equation(T, PropertyId.RIP)
    if p is PropertyId.LCC:
        return _check_conjugacy(T, "l")
    if p is PropertyId.RCC:
        return _check_conjugacy(T, "r")
    if p is PropertyId.CC:
        return _check_conjugacy(T, "l") or _check_conjugacy(T, "r")
    if p is PropertyId.ALOOP:
        res = check_a_loop(T)
        return None if res is None else res[1]
    raise AssertionError(p)


def holds(T: MulTable, p: PropertyId) -> bool:
    return check_identity(T, p) is None


def holds_all(T: MulTable, props) -> bool:
    return all(check_identity(T, p) is None for p in props)


MOUFANG = (PropertyId.MOUF1, PropertyId.MOUF2, PropertyId.MOUF3, PropertyId.MOUF4)
EXTRA = (PropertyId.EXTRA1, PropertyId.EXTRA2, PropertyId.EXTRA3)


def _automorphism_failure(T: MulTable, phi: np.ndarray):
    lhs = phi[T.cells]
    rhs = T.cells[phi[:, None], phi[None, :]]
    bad = np.argwhere(lhs != rhs)
    if not len(bad):
        return None
    a, b = (int(v) for v in bad[0])
    return a, b, int(lhs[a, b]), int(rhs[a, b])


def inner_mapping_generators(T: MulTable):
    """Yield ``(name, images)`` for L(x,y), R(x,y) and T(x), in that order.

    L(x,y) = L_x L_y L_{yx}^-1, R(x,y) = R_x R_y R_{xy}^-1, T(x) = R_x L_x^-1.
    """
    c = T.cells
    n = T.order
    inv_rows = np.argsort(c, axis=1)      # inv_rows[a] = L_a^-1
    inv_cols = np.argsort(c.T, axis=1)    # inv_cols[a] = R_a^-1
    for a in range(n):
        for b in range(n):
            yield f"L({a},{b})", inv_rows[c[b, a]][c[b][c[a]]]
    for a in range(n):
        for b in range(n):
            yield f"R({a},{b})", inv_cols[c[a, b]][c[:, b][c[:, a]]]
    for a in range(n):
        yield f"T({a})", inv_rows[a][c[:, a]]


def check_a_loop(T: MulTable):
    """None if every inner-mapping generator is an automorphism.

    Otherwise ``(generator name, Counterexample)`` where the counterexample
    is the first pair ``(x, y)`` with ``(xy)phi != (x phi)(y phi)``.
    """
    T.require_identity()
    for name, phi in inner_mapping_generators(T):
        fail = _automorphism_failure(T, phi)
        if fail is not None:
            a, b, lhs, rhs = fail
            return name, Counterexample(a, b, None, lhs, rhs, "aloop:" + name)
    return None
