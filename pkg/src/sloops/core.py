"""Cayley tables, permutations and translation maps.

Elements are dense 0-based indices. Maps act on the right: ``x P`` is
``P[x]``, and ``P * Q`` means "apply P, then Q", so ``x(PQ) = (xP)Q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 64


class LoopError(Exception):
    """Base class for errors raised by this package."""


class CellOutOfRange(LoopError, ValueError):
    def __init__(self, row: int, col: int, value: int, order: int):
        self.row, self.col, self.value, self.order = row, col, value, order
        super().__init__(
            f"cell ({row}, {col}) holds {value}, outside [0, {order})")


class LatinViolation(LoopError, ValueError):
    """A row or column of a table repeats a value.

    ``axis`` is ``"row"`` or ``"col"``, ``index`` the offending row/column
    and ``value`` the repeated entry.
    """

    def __init__(self, axis: str, index: int, value: int):
        self.axis, self.index, self.value = axis, index, value
        super().__init__(f"{axis} {index} repeats value {value}")


class NoIdentity(LoopError):
    """Raised when an operation needs a loop but got a proper quasigroup."""


class DegreeMismatch(LoopError, ValueError):
    pass


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class Perm:
    """A bijection on ``range(n)``, written on the right."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        arr = _frozen(list(images) if not isinstance(images, np.ndarray) else images)
        if check:
            n = len(arr)
            if arr.ndim != 1 or not np.array_equal(np.sort(arr), np.arange(n)):
                raise ValueError(f"not a permutation: {arr.tolist()}")
        self.images = arr

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(np.arange(n), check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __getitem__(self, x: int) -> int:
        return int(self.images[x])

    def __iter__(self):
        return (int(v) for v in self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        return perm_compose(self, other)

    def __invert__(self) -> "Perm":
        return perm_inverse(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash(self.images.tobytes())

    def __repr__(self) -> str:
        return f"Perm({self.images.tolist()})"

    def tolist(self) -> list[int]:
        return self.images.tolist()

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(len(self.images))))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """``p`` then ``q``: ``x(pq) = (xp)q``."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree} differ")
    return Perm(q.images[p.images], check=False)


def perm_inverse(p: Perm) -> Perm:
    inv = np.empty_like(p.images)
    inv[p.images] = np.arange(p.degree)
    return Perm(inv, check=False)


def compose_all(perms: Sequence[Perm], n: int) -> Perm:
    """Left-to-right product of ``perms``; the empty product is the identity."""
    out = Perm.identity(n)
    for p in perms:
        out = out * p
    return out


@dataclass(frozen=True, eq=False)
class MulTable:
    """A validated finite quasigroup. ``cells[x, y]`` is ``x . y``.

    Build instances with :func:`validate_table` (or :meth:`from_rows`), never
    directly, so that the Latin property and identity are always checked.
    """

    order: int
    cells: np.ndarray
    identity: int | None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "MulTable":
        return validate_table(len(rows), rows)

    @property
    def is_loop(self) -> bool:
        return self.identity is not None

    def mul(self, x: int, y: int) -> int:
        return int(self.cells[x, y])

    def rows(self) -> list[list[int]]:
        return self.cells.tolist()

    def require_identity(self) -> int:
        if self.identity is None:
            raise NoIdentity("operation requires a loop (two-sided identity)")
        return self.identity

    def __eq__(self, other) -> bool:
        return isinstance(other, MulTable) and np.array_equal(self.cells, other.cells)

    def __hash__(self) -> int:
        return hash(self.cells.tobytes())

    def __repr__(self) -> str:
        kind = "loop" if self.is_loop else "quasigroup"
        return f"MulTable(order={self.order}, {kind}, identity={self.identity})"


def _find_identity(cells: np.ndarray) -> int | None:
    n = len(cells)
    ar = np.arange(n)
    found = [e for e in range(n)
             if np.array_equal(cells[e], ar) and np.array_equal(cells[:, e], ar)]
    assert len(found) <= 1, "a two-sided identity is unique"
    return found[0] if found else None


def validate_table(order: int, cells) -> MulTable:
    """Check that ``cells`` is an ``order x order`` Latin square and wrap it.

    Rows are scanned before columns, each in index order, so the reported
    violation is the first repeated value along the first bad row (or column).
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if order > MAX_ORDER:
        raise ValueError(f"order {order} exceeds MAX_ORDER={MAX_ORDER}")
    arr = np.asarray(cells)
    if arr.shape != (order, order):
        raise ValueError(f"expected a {order}x{order} table, got shape {arr.shape}")
    arr = arr.astype(np.int64)
    bad = np.argwhere((arr < 0) | (arr >= order))
    if len(bad):
        r, c = (int(v) for v in bad[0])
        raise CellOutOfRange(r, c, int(arr[r, c]), order)
    for axis, lines in (("row", arr), ("col", arr.T)):
        for i, line in enumerate(lines):
            seen = set()
            for v in line.tolist():
                if v in seen:
                    raise LatinViolation(axis, i, v)
                seen.add(v)
    return MulTable(order, _frozen(arr), _find_identity(arr))


def left_translation(T: MulTable, a: int) -> Perm:
    """``L_a : x -> a . x``."""
    return Perm(T.cells[a], check=False)


def right_translation(T: MulTable, a: int) -> Perm:
    """``R_a : x -> x . a``."""
    return Perm(T.cells[:, a], check=False)


def left_inverse(T: MulTable, a: int) -> int:
    """The ``b`` with ``b . a = e``."""
    e = T.require_identity()
    return int(np.flatnonzero(T.cells[:, a] == e)[0])


def right_inverse(T: MulTable, a: int) -> int:
    """The ``b`` with ``a . b = e``."""
    e = T.require_identity()
    return int(np.flatnonzero(T.cells[a] == e)[0])


def inverse_arrays(T: MulTable) -> tuple[np.ndarray, np.ndarray]:
    """Left and right inverses of every element, as index arrays."""
    e = T.require_identity()
    lam = np.argmax(T.cells == e, axis=0)   # lam[a]: row b with b.a = e
    rho = np.argmax(T.cells == e, axis=1)   # rho[a]: column b with a.b = e
    return lam, rho


# -- text format ------------------------------------------------------------

def parse_table(text: str) -> MulTable:
    """Parse the plain table format: ``n`` then ``n`` rows of ``n`` integers.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty table file")
    try:
        n = int(lines[0])
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ValueError(f"malformed table: {exc}") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected {n} rows of {n} integers")
    return validate_table(n, rows)


def format_table(T: MulTable) -> str:
    out = [str(T.order)]
    out += [" ".join(str(v) for v in row) for row in T.cells.tolist()]
    return "\n".join(out) + "\n"


def read_table(path) -> MulTable:
    with open(path) as fh:
        return parse_table(fh.read())


def write_table(T: MulTable, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_table(T))
