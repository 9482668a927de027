"""Generators of the rational divisor class groups of stacks of 1- and
2-pointed stable hyperelliptic curves, and sparse exact linear
combinations of them.

For genus g >= 2 and n in {1, 2} the class group is freely generated by
the psi-classes of the marked points together with the boundary divisors:

* ``eta_irr`` - irreducible curves with a non-separating node;
* ``delta_{i,m}`` (1 <= i <= g//2) - a separating node splitting off
  genus i, the node fixed by the involution; ``m`` records where the
  marked points sit;
* ``eta_{i,m}`` (1 <= i <= (g-1)//2) - a conjugate pair of nodes
  splitting off genus i;
* ``delta_{0,2}`` (n = 2 only) - a rational tail carrying both points.

Markings: for n = 1, m is "0" (point on the genus g-i side) or "1"; for
n = 2, m is "0", "1a" (first point on the genus-i side), "1b", or "2".
At the top index some labels name the same irreducible divisor and only
the canonical representative is a generator:

* g even:  delta_{g/2,1} = delta_{g/2,0} (n=1);
  delta_{g/2,2} = delta_{g/2,0} and delta_{g/2,1b} = delta_{g/2,1a} (n=2);
* g odd:   eta_{(g-1)/2,1} = eta_{(g-1)/2,0} (n=1);
  eta_{(g-1)/2,2} = eta_{(g-1)/2,0} and the 1a/1b pair merge (n=2).

Expressions keep the *formal* labels (both members of an identified
pair may carry separate coefficients, as in printed closed forms);
``DivisorExpression.canonical()`` merges them by summing.  The n=2
invariant combinations delta_{i,1} = delta_{i,1a} + delta_{i,1b} (and the
eta version) are not generators; inserting one expands it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

PSI = "psi"
ETA_IRR = "eta_irr"
DELTA = "delta"
ETA = "eta"
DELTA_0_2 = "delta_0_2"

MARKINGS_1 = ("0", "1")
MARKINGS_2 = ("0", "1a", "1b", "2")


class DomainError(ValueError):
    """Ambient (g, n) is invalid or an element is out of range for it."""


@dataclass(frozen=True)
class BasisElement:
    """One generator label: kind plus genus index and marking."""

    kind: str
    index: int = 0
    marking: str = ""

    def name(self, n: int) -> str:
        if self.kind == PSI:
            return "psi" if n == 1 else f"psi{self.index}"
        if self.kind == ETA_IRR:
            return "eta_irr"
        if self.kind == DELTA_0_2:
            return "delta_0_2"
        return f"{self.kind}_{self.index}_{self.marking}"

    def __repr__(self):
        if self.kind == PSI:
            return f"psi({self.index})"
        if self.kind in (ETA_IRR, DELTA_0_2):
            return self.kind
        return f"{self.kind}_{self.index}_{self.marking}"


def psi(k: int = 1) -> BasisElement:
    return BasisElement(PSI, k)


def eta_irr() -> BasisElement:
    return BasisElement(ETA_IRR)


def delta(i: int, marking: str) -> BasisElement:
    return BasisElement(DELTA, i, str(marking))


def eta(i: int, marking: str) -> BasisElement:
    return BasisElement(ETA, i, str(marking))


def delta_0_2() -> BasisElement:
    return BasisElement(DELTA_0_2)


def check_ambient(g: int, n: int) -> None:
    if g < 2:
        raise DomainError(f"genus must be >= 2, got {g}")
    if n not in (1, 2):
        raise DomainError(f"number of marked points must be 1 or 2, got {n}")


def delta_range(g: int) -> range:
    return range(1, g // 2 + 1)


def eta_range(g: int) -> range:
    return range(1, (g - 1) // 2 + 1)


def is_valid(e: BasisElement, g: int, n: int) -> bool:
    """Structural validity of a formal label for the ambient (g, n)."""
    check_ambient(g, n)
    markings = MARKINGS_1 if n == 1 else MARKINGS_2
    if e.kind == PSI:
        return 1 <= e.index <= n
    if e.kind == ETA_IRR:
        return True
    if e.kind == DELTA_0_2:
        return n == 2
    if e.kind == DELTA:
        return e.index in delta_range(g) and e.marking in markings
    if e.kind == ETA:
        return e.index in eta_range(g) and e.marking in markings
    return False


def validate(e: BasisElement, g: int, n: int) -> None:
    if not is_valid(e, g, n):
        raise DomainError(f"{e!r} is not a valid class for (g={g}, n={n})")


def canonicalize(e: BasisElement, g: int, n: int) -> BasisElement:
    """Map a formal label to the canonical representative of its divisor.

    Only the top-index identifications act; everything else is fixed.
    Idempotent by construction.
    """
    validate(e, g, n)
    if n == 1:
        if g % 2 == 0 and e == delta(g // 2, "1"):
            return delta(g // 2, "0")
        if g % 2 == 1 and e == eta((g - 1) // 2, "1"):
            return eta((g - 1) // 2, "0")
    else:
        if g % 2 == 0 and e.kind == DELTA and e.index == g // 2:
            if e.marking == "2":
                return delta(g // 2, "0")
            if e.marking == "1b":
                return delta(g // 2, "1a")
        if g % 2 == 1 and e.kind == ETA and e.index == (g - 1) // 2:
            if e.marking == "2":
                return eta((g - 1) // 2, "0")
            if e.marking == "1b":
                return eta((g - 1) // 2, "1a")
    return e


def identified_pairs(g: int, n: int) -> list[tuple[BasisElement, BasisElement]]:
    """The (non-canonical, canonical) label pairs merged by canonicalize."""
    check_ambient(g, n)
    pairs = []
    if n == 1:
        if g % 2 == 0:
            pairs.append((delta(g // 2, "1"), delta(g // 2, "0")))
        else:
            pairs.append((eta((g - 1) // 2, "1"), eta((g - 1) // 2, "0")))
    else:
        if g % 2 == 0:
            pairs.append((delta(g // 2, "2"), delta(g // 2, "0")))
            pairs.append((delta(g // 2, "1b"), delta(g // 2, "1a")))
        else:
            pairs.append((eta((g - 1) // 2, "2"), eta((g - 1) // 2, "0")))
            pairs.append((eta((g - 1) // 2, "1b"), eta((g - 1) // 2, "1a")))
    return pairs


def formal_elements(g: int, n: int) -> list[BasisElement]:
    """Every formal label in deterministic order (identified twins kept)."""
    check_ambient(g, n)
    markings = MARKINGS_1 if n == 1 else MARKINGS_2
    out = [psi(k) for k in range(1, n + 1)]
    out.append(eta_irr())
    for i in delta_range(g):
        out.extend(delta(i, m) for m in markings)
    for i in eta_range(g):
        out.extend(eta(i, m) for m in markings)
    if n == 2:
        out.append(delta_0_2())
    return out


def enumerate_basis(g: int, n: int) -> list[BasisElement]:
    """The free generators, ordered: psi's, eta_irr, deltas, etas, delta_{0,2}.

    Identified pairs appear once, via their canonical representative.
    """
    out = []
    seen = set()
    for e in formal_elements(g, n):
        c = canonicalize(e, g, n)
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def basis_dimension(g: int, n: int) -> int:
    return len(enumerate_basis(g, n))


def formal_position(g: int, n: int) -> dict[BasisElement, int]:
    return {e: j for j, e in enumerate(formal_elements(g, n))}


def _expand(e: BasisElement, n: int) -> list[BasisElement]:
    # delta_{i,1} / eta_{i,1} are invariant-sum macros when n = 2
    if n == 2 and e.kind in (DELTA, ETA) and e.marking == "1":
        return [BasisElement(e.kind, e.index, "1a"), BasisElement(e.kind, e.index, "1b")]
    return [e]


@dataclass(frozen=True)
class DivisorExpression:
    """Sparse exact linear combination of formal labels for one ambient."""

    g: int
    n: int
    terms: dict[BasisElement, Fraction]

    @classmethod
    def zero(cls, g: int, n: int) -> "DivisorExpression":
        check_ambient(g, n)
        return cls(g, n, {})

    @classmethod
    def from_terms(
        cls,
        g: int,
        n: int,
        items: Union[Mapping[BasisElement, Fraction], Iterable[tuple[BasisElement, Fraction]]],
    ) -> "DivisorExpression":
        """Build an expression; n=2 invariant combinations are expanded."""
        check_ambient(g, n)
        if isinstance(items, Mapping):
            items = items.items()
        terms: dict[BasisElement, Fraction] = {}
        for e, coeff in items:
            coeff = Fraction(coeff)
            if not coeff:
                continue
            for part in _expand(e, n):
                validate(part, g, n)
                acc = terms.get(part, Fraction(0)) + coeff
                if acc:
                    terms[part] = acc
                else:
                    del terms[part]
        return cls(g, n, terms)

    def coefficient(self, e: BasisElement) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def scale(self, s) -> "DivisorExpression":
        s = Fraction(s)
        if not s:
            return DivisorExpression.zero(self.g, self.n)
        return DivisorExpression(self.g, self.n, {e: s * v for e, v in self.terms.items()})

    def __add__(self, other: "DivisorExpression") -> "DivisorExpression":
        return expr_combine(self, Fraction(1), other)

    def __sub__(self, other: "DivisorExpression") -> "DivisorExpression":
        return expr_combine(self, Fraction(-1), other)

    def canonical(self) -> "DivisorExpression":
        """Merge identified labels; the canonical coefficient is the sum."""
        merged: dict[BasisElement, Fraction] = {}
        for e, v in self.terms.items():
            c = canonicalize(e, self.g, self.n)
            acc = merged.get(c, Fraction(0)) + v
            if acc:
                merged[c] = acc
            else:
                del merged[c]
        return DivisorExpression(self.g, self.n, merged)

    def ordered_terms(self) -> list[tuple[BasisElement, Fraction]]:
        pos = formal_position(self.g, self.n)
        return sorted(self.terms.items(), key=lambda item: pos[item[0]])

    def __bool__(self):
        return bool(self.terms)


def expr_combine(a: DivisorExpression, s, b: DivisorExpression) -> DivisorExpression:
    """Exact combination a + s*b; zero terms are dropped."""
    if (a.g, a.n) != (b.g, b.n):
        raise DomainError(
            f"cannot combine expressions on (g={a.g}, n={a.n}) and (g={b.g}, n={b.n})"
        )
    s = Fraction(s)
    terms = dict(a.terms)
    for e, v in b.terms.items():
        acc = terms.get(e, Fraction(0)) + s * v
        if acc:
            terms[e] = acc
        else:
            terms.pop(e, None)
    return DivisorExpression(a.g, a.n, terms)
