"""Exact linear algebra over Q.

Rationals are arbitrary-precision ``fractions.Fraction`` values (always
stored reduced, positive denominator).  Linear systems are solved by
integer-preserving Gauss-Jordan elimination: every row is scaled to a
primitive integer vector and row operations use cross-multiplication
followed by content removal, so no rounding can occur anywhere.  Pivots
are chosen deterministically (first nonzero row in column order), which
makes certificates and free-variable selection reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int]


class StructuralError(ValueError):
    """A row does not match the system's variable list."""


@dataclass
class LinearSystem:
    """A list of exact linear equations over named variables."""

    variables: tuple[str, ...]
    rows: list[tuple[dict[int, Fraction], Fraction]] = field(default_factory=list)

    def __post_init__(self):
        self.variables = tuple(self.variables)
        if len(set(self.variables)) != len(self.variables):
            raise StructuralError("duplicate variable names")
        self._index = {v: j for j, v in enumerate(self.variables)}

    def add_row(self, coeffs: Mapping[str, RationalLike], rhs: RationalLike = 0) -> None:
        """Append the equation ``sum(coeffs[v] * v) = rhs`` (sparse form)."""
        row: dict[int, Fraction] = {}
        for name, value in coeffs.items():
            if name not in self._index:
                raise StructuralError(f"unknown variable {name!r}")
            value = Fraction(value)
            if value:
                row[self._index[name]] = value
        self.rows.append((row, Fraction(rhs)))

    def add_dense_row(self, vector: Sequence[RationalLike], rhs: RationalLike = 0) -> None:
        if len(vector) != len(self.variables):
            raise StructuralError(
                f"row length {len(vector)} != {len(self.variables)} variables"
            )
        row = {j: Fraction(v) for j, v in enumerate(vector) if v}
        self.rows.append((row, Fraction(rhs)))

    @classmethod
    def from_dense(
        cls,
        variables: Iterable[str],
        rows: Iterable[tuple[Sequence[RationalLike], RationalLike]],
    ) -> "LinearSystem":
        sys = cls(tuple(variables))
        for vector, rhs in rows:
            sys.add_dense_row(vector, rhs)
        return sys

    def dense_rows(self) -> list[tuple[list[Fraction], Fraction]]:
        n = len(self.variables)
        out = []
        for row, rhs in self.rows:
            vec = [Fraction(0)] * n
            for j, v in row.items():
                vec[j] = v
            out.append((vec, rhs))
        return out


@dataclass
class Unique:
    """Every variable is determined; ``assignment`` satisfies all rows."""

    assignment: dict[str, Fraction]
    rank: int
    redundant_rows: tuple[int, ...]


@dataclass
class Underdetermined:
    """Consistent but with free variables (set to 0 in ``particular``)."""

    particular: dict[str, Fraction]
    free: tuple[str, ...]
    rank: int
    redundant_rows: tuple[int, ...]


@dataclass
class Inconsistent:
    """No solution.

    ``certificate`` gives rational multipliers on the original rows whose
    combination has all-zero coefficients but right-hand side ``residual``.
    """

    certificate: dict[int, Fraction]
    residual: Fraction
    rank: int


SolveResult = Union[Unique, Underdetermined, Inconsistent]


def _normalize(row: dict[int, int], rhs: int, combo: dict[int, Fraction]):
    """Divide an integer row (and its provenance combo) by its content."""
    content = abs(rhs)
    for v in row.values():
        content = gcd(content, abs(v))
        if content == 1:
            return row, rhs, combo
    if content > 1:
        row = {j: v // content for j, v in row.items()}
        rhs //= content
        combo = {r: c / content for r, c in combo.items()}
    return row, rhs, combo


def _to_integer_rows(sys: LinearSystem):
    """Scale each row to a primitive integer vector, tracking the scale."""
    rows = []
    for idx, (row, rhs) in enumerate(sys.rows):
        mult = 1
        for v in list(row.values()) + [rhs]:
            d = v.denominator
            mult = mult * d // gcd(mult, d)
        irow = {j: int(v * mult) for j, v in row.items()}
        irhs = int(rhs * mult)
        irow, irhs, combo = _normalize(irow, irhs, {idx: Fraction(mult)})
        rows.append([irow, irhs, combo])
    return rows


def _eliminate(sys: LinearSystem):
    """Gauss-Jordan elimination with deterministic pivoting.

    Returns (pivots, rows) where pivots maps column -> row position and
    each row has been fully reduced (a pivot row retains only its pivot
    column and free columns).
    """
    rows = _to_integer_rows(sys)
    pivots: dict[int, int] = {}
    pivot_rows: set[int] = set()
    for col in range(len(sys.variables)):
        pivot = None
        for r, (row, _, _) in enumerate(rows):
            if r not in pivot_rows and row.get(col):
                pivot = r
                break
        if pivot is None:
            continue
        pivots[col] = pivot
        pivot_rows.add(pivot)
        prow, prhs, pcombo = rows[pivot]
        p = prow[col]
        for r, (row, rhs, combo) in enumerate(rows):
            if r == pivot:
                continue
            q = row.get(col)
            if not q:
                continue
            new_row = {j: p * v for j, v in row.items()}
            for j, v in prow.items():
                acc = new_row.get(j, 0) - q * v
                if acc:
                    new_row[j] = acc
                else:
                    new_row.pop(j, None)
            new_rhs = p * rhs - q * prhs
            new_combo = {k: p * c for k, c in combo.items()}
            for k, c in pcombo.items():
                acc = new_combo.get(k, Fraction(0)) - q * c
                if acc:
                    new_combo[k] = acc
                else:
                    new_combo.pop(k, None)
            rows[r] = list(_normalize(new_row, new_rhs, new_combo))
    return pivots, rows


def solve(sys: LinearSystem) -> SolveResult:
    """Solve exactly, classifying the system.

    The result is ``Unique``, ``Underdetermined`` (particular solution with
    the free variables pinned to 0) or ``Inconsistent`` (with a certificate
    combination of original rows reducing to 0 = nonzero).
    """
    pivots, rows = _eliminate(sys)
    rank = len(pivots)
    redundant = []
    for r, (row, rhs, combo) in enumerate(rows):
        if row:
            continue
        if rhs:
            return Inconsistent(certificate=dict(combo), residual=Fraction(rhs), rank=rank)
        redundant.append(r)
    # After full Jordan reduction a pivot row holds its pivot column plus
    # free columns only; with free variables pinned to 0 the solve is direct.
    assignment = {name: Fraction(0) for name in sys.variables}
    for col, r in pivots.items():
        row, rhs, _ = rows[r]
        assignment[sys.variables[col]] = Fraction(rhs, row[col])
    free = tuple(sys.variables[j] for j in range(len(sys.variables)) if j not in pivots)
    if free:
        return Underdetermined(
            particular=assignment,
            free=free,
            rank=rank,
            redundant_rows=tuple(redundant),
        )
    return Unique(assignment=assignment, rank=rank, redundant_rows=tuple(redundant))


def rank(sys: LinearSystem) -> int:
    """Rank of the coefficient matrix (right-hand sides ignored)."""
    pivots, _ = _eliminate(sys)
    return len(pivots)


def residual(sys: LinearSystem, assignment: Mapping[str, RationalLike]) -> list[Fraction]:
    """Exact residuals ``lhs(assignment) - rhs`` for every row."""
    out = []
    for row, rhs in sys.rows:
        acc = -rhs
        for j, v in row.items():
            acc += v * Fraction(assignment[sys.variables[j]])
        out.append(acc)
    return out
