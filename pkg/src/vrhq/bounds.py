"""Exact arithmetic for the connectivity lower bound of VR(Q_n; r).

Everything here is pure unbounded-integer arithmetic.  The central quantity
is the ratio

    alpha(n, r) = 2^(n-1) / sum_{i=r+1..n} C(n, i)

whose denominator is the degree of every vertex of the distance->=r+1 graph
on Q_n.  The complex VR(Q_n; r) is guaranteed (k-1)-connected where k is the
largest integer strictly below alpha (k = alpha - 1 when alpha is an
integer, floor(alpha) otherwise).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateScale


def binomial(n: int, i: int) -> int:
    """C(n, i), exact; 0 when i > n."""
    if n < 0 or i < 0:
        raise ValueError("binomial requires non-negative arguments")
    if i > n:
        return 0
    return math.comb(n, i)


def tail_degree(n: int, r: int) -> int:
    """sum_{i=r+1..n} C(n, i): the degree of every vertex of the complement
    graph on Q_n at scale r.  Zero when r >= n (empty sum)."""
    _validate_pair(n, r)
    return sum(math.comb(n, i) for i in range(r + 1, n + 1))


@dataclass(frozen=True, eq=False)
class ExactRatio:
    """An unreduced non-negative rational; equality by cross-multiplication."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if self.numerator < 0:
            raise ValueError("numerator must be non-negative")

    def __eq__(self, other):
        if isinstance(other, ExactRatio):
            return self.numerator * other.denominator == other.numerator * self.denominator
        if isinstance(other, int):
            return self.numerator == other * self.denominator
        return NotImplemented

    def __hash__(self):
        return hash(Fraction(self.numerator, self.denominator))

    @property
    def is_integer(self) -> bool:
        return self.numerator % self.denominator == 0

    @property
    def floor(self) -> int:
        return self.numerator // self.denominator

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


@dataclass(frozen=True)
class ConnectivityBound:
    """`Contractible` (full simplex, r >= n) or `LowerBound(c)`: the complex
    is guaranteed c-connected.  c = -1 means nonempty."""

    connectivity: int | None = None

    @classmethod
    def contractible(cls) -> "ConnectivityBound":
        return cls(None)

    @classmethod
    def lower_bound(cls, c: int) -> "ConnectivityBound":
        if c < -1:
            raise ValueError("connectivity lower bound must be >= -1")
        return cls(c)

    @property
    def is_contractible(self) -> bool:
        return self.connectivity is None

    def __repr__(self):
        if self.is_contractible:
            return "Contractible"
        return f"LowerBound({self.connectivity})"


def alpha(n: int, r: int) -> ExactRatio:
    """The exact ratio 2^(n-1) / tail_degree(n, r), stored unreduced.

    Raises DegenerateScale when r >= n: the denominator would be zero
    (the complement graph is all isolated vertices)."""
    _validate_pair(n, r)
    if r >= n:
        raise DegenerateScale(f"alpha({n}, {r}) undefined: requires r <= n - 1")
    return ExactRatio(1 << (n - 1), tail_degree(n, r))


def connectivity_lower_bound(n: int, r: int) -> ConnectivityBound:
    """Guaranteed connectivity of VR(Q_n; r).

    For r >= n every pair of vertices is within distance r, the complex is
    the full simplex on 2^n vertices, and we report Contractible.  Otherwise
    k is the largest integer strictly below alpha(n, r) and the complex is
    (k-1)-connected."""
    _validate_pair(n, r)
    if r >= n:
        return ConnectivityBound.contractible()
    a = alpha(n, r)
    k = a.floor - 1 if a.is_integer else a.floor
    return ConnectivityBound.lower_bound(k - 1)


# Published example values for (n, r, connectivity).  Exact evaluation
# disagrees with the printed value on the last row: floor(2^19 / 21) - 1
# = 24965, not 24964.  reference_table() flags it instead of correcting it.
PUBLISHED_ROWS = (
    (7, 5, 6),
    (8, 6, 13),
    (9, 7, 24),
    (12, 10, 156),
    (18, 15, 761),
    (18, 16, 6897),
    (20, 16, 387),
    (20, 18, 24964),
)


@dataclass(frozen=True)
class TableRow:
    n: int
    r: int
    connectivity: int
    printed: int | None = None
    agrees: bool | None = None


def reference_table() -> list[TableRow]:
    """Recompute the eight published example rows, flagging agreement per row."""
    rows = []
    for n, r, printed in PUBLISHED_ROWS:
        c = connectivity_lower_bound(n, r).connectivity
        rows.append(TableRow(n, r, c, printed=printed, agrees=(c == printed)))
    return rows


def published_value(n: int, r: int) -> int | None:
    """The printed connectivity for (n, r) if it is one of the published rows."""
    for pn, pr, pc in PUBLISHED_ROWS:
        if (pn, pr) == (n, r):
            return pc
    return None


def grid_table(n_max: int, r_max: int | None = None) -> list[TableRow]:
    """Bounds for every pair 1 <= n <= n_max, 0 <= r <= min(r_max, n - 1)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        top = n - 1 if r_max is None else min(r_max, n - 1)
        for r in range(0, top + 1):
            rows.append(TableRow(n, r, connectivity_lower_bound(n, r).connectivity))
    return rows


def counterexample_scan(n_max: int) -> list[tuple[int, int, int]]:
    """All (n, r, c) with 2 <= n <= n_max, n >= r + 2 and bound c >= r + 1.

    Such a bound forces H~_{r+1}(VR(Q_n; r)) = 0, so the reduced homology of
    the complex cannot be concentrated exactly in dimension r + 1."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    found = []
    for n in range(2, n_max + 1):
        for r in range(0, n - 1):
            c = connectivity_lower_bound(n, r).connectivity
            if c >= r + 1:
                found.append((n, r, c))
    return found


def consistency_check_2r(n_max: int) -> list[tuple[int, int, int]]:
    """Violations of c <= 2^r - 2 over the grid r >= 1, n >= r + 2, n <= n_max.

    A bound c > 2^r - 2 would force H~_{2^r - 1} = 0, contradicting the known
    nonvanishing of homology in that dimension; the returned list is expected
    to be empty."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    violations = []
    for n in range(3, n_max + 1):
        for r in range(1, n - 1):
            c = connectivity_lower_bound(n, r).connectivity
            if c > (1 << r) - 2:
                violations.append((n, r, c))
    return violations


def _validate_pair(n, r):
    if not isinstance(n, int) or not isinstance(r, int):
        raise ValueError("n and r must be integers")
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
