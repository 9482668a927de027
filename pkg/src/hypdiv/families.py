"""Catalog of one-parameter test families and their exact degree vectors.

Each family is a complete one-parameter family of pointed stable
hyperelliptic curves, reduced to the only data the linear method needs:
the exact degree of every generator class on the family plus the degree
of the target divisor (the universal Weierstrass divisor for n = 1, the
universal degree-2-series divisor for n = 2).  Degrees are cataloged as
closed-form functions of (g, i); the self-intersection entries are
recomputed through :mod:`hypdiv.surfcalc` as a consistency gate.

Families
--------
* ``diagonal_family`` - constant curve C, section moving along the
  diagonal of C x C.  Pins the psi coefficient.
* ``quadric_pencil_family`` - general pencil of bidegree-(2, g+1) curves
  on a quadric, marked at one or two base points.  The discriminant
  contributes degree 4(2g+1) on eta_irr; it pins the eta_irr coefficient.
* ``glued_weierstrass_family`` - a moving branched-cover family of genus
  i with a Weierstrass section (from a horizontal ruling, self-intersection
  -1, or a bidegree-(1,1) ruling, self-intersection -i) glued to a fixed
  pointed curve of genus g-i.  Lies in delta_{i,.}; nodal fibers hit
  eta_irr with multiplicity 2 and two fibers degenerate to eta_{i-1,.}.
* ``two_point_blowup_family`` - blowups of C x C giving 2-pointed
  families meeting only delta_{0,2}; two variants pin psi_1 + psi_2 and
  delta_{0,2} together.
* ``g12_ruling_family`` - the glued construction with an extra marked
  ruling, after the degree-2 base change that makes the marking a
  section; all degrees double.
* ``f2ip1_family`` - the pencil branched along 2i+2 bidegree-(1,1)
  curves through a common point and 2g-2i rulings, marked along one
  general and one special ruling.  The special fiber lies in eta_{i,.}.
  The boundary instance i = 0 is the member with no moving genus: its
  eta-degree lands on the out-of-range label eta_{0,1}, which is exactly
  what pins that auxiliary for small g.

Degrees on out-of-range labels (eta_{0,m}; eta_{g/2,m} for even g) are
registered against explicit :class:`AuxiliaryLabel` keys, never dropped.
Degrees that the underlying relation only constrains through the sum
psi_1 + psi_2 are recorded against the :data:`PSI_SUM` key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from . import basis as B
from . import surfcalc
from .basis import BasisElement, DomainError

WEIERSTRASS = "weierstrass"
G12 = "g12"

HORIZONTAL = "horizontal"
DIAGONAL = "diagonal"
LOW = "low"
HIGH = "high"
SINGLE = "single"
WEIERSTRASS_INVOLUTION = "weierstrass_involution"


@dataclass(frozen=True)
class AuxiliaryLabel:
    """A boundary-type label whose index is out of range for (g, n)."""

    kind: str
    index: int
    marking: str

    def name(self, n: int = 2) -> str:
        return f"{self.kind}_{self.index}_{self.marking}"

    def __repr__(self):
        return f"aux:{self.kind}_{self.index}_{self.marking}"


@dataclass(frozen=True)
class PsiSum:
    """Key for degrees recorded against the invariant sum psi_1 + psi_2."""

    def name(self, n: int = 2) -> str:
        return "psi_sum"

    def __repr__(self):
        return "psi_sum"


PSI_SUM = PsiSum()

Label = Union[BasisElement, AuxiliaryLabel, PsiSum]


def eta_label(g: int, n: int, i: int, marking: str) -> Label:
    """eta_{i,marking} as a basis label, or an auxiliary if out of range."""
    e = B.eta(i, marking)
    if i in B.eta_range(g):
        return e
    return AuxiliaryLabel(B.ETA, i, marking)


def _check_label(label: Label, g: int, n: int) -> None:
    if isinstance(label, (AuxiliaryLabel, PsiSum)):
        if isinstance(label, AuxiliaryLabel):
            if label.kind == B.ETA and label.index in B.eta_range(g):
                raise DomainError(f"{label!r} is in range for g={g}; not auxiliary")
            if label.kind == B.DELTA and label.index in B.delta_range(g):
                raise DomainError(f"{label!r} is in range for g={g}; not auxiliary")
        return
    if n == 2 and label.kind in (B.DELTA, B.ETA) and label.marking == "1":
        # invariant combination: legal in degree vectors, expanded in expressions
        if label.index not in (B.delta_range(g) if label.kind == B.DELTA else B.eta_range(g)):
            raise DomainError(f"{label!r} index out of range")
        return
    B.validate(label, g, n)


@dataclass(frozen=True)
class DegreeVector:
    """Exact degrees of every generator and of the target on one family."""

    g: int
    n: int
    target: str
    target_degree: Fraction
    degrees: dict[Label, Fraction]
    family: str
    params: dict = field(default_factory=dict)

    def degree(self, label: Label) -> Fraction:
        return self.degrees.get(label, Fraction(0))

    def auxiliary_labels(self) -> list[AuxiliaryLabel]:
        return [k for k in self.degrees if isinstance(k, AuxiliaryLabel)]

    def provenance(self) -> str:
        if self.params:
            inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
            return f"{self.family}[{inner}]"
        return self.family


def _vector(g, n, target, target_degree, degrees, family, params=None) -> DegreeVector:
    B.check_ambient(g, n)
    clean: dict[Label, Fraction] = {}
    for label, value in degrees.items():
        value = Fraction(value)
        if not value:
            continue
        _check_label(label, g, n)
        clean[label] = value
    return DegreeVector(
        g=g,
        n=n,
        target=target,
        target_degree=Fraction(target_degree),
        degrees=clean,
        family=family,
        params=dict(params or {}),
    )


def _gate(expected: int, actual: Fraction, what: str) -> None:
    if Fraction(expected) != actual:
        raise AssertionError(f"catalog self-check failed for {what}: {expected} != {actual}")


def diagonal_family(g: int) -> DegreeVector:
    """Fixed curve C, diagonal section of C x C (n = 1).

    The section hits every Weierstrass point once (degree 2g+2 on the
    target) and deg(psi) = -(diagonal)^2 = 2g - 2; no singular fibers.
    """
    B.check_ambient(g, 1)
    psi_degree = -surfcalc.diagonal_self_intersection(g)
    _gate(2 * g - 2, Fraction(psi_degree), "diagonal psi degree")
    return _vector(
        g, 1, WEIERSTRASS, 2 * g + 2, {B.psi(1): psi_degree}, "diagonal"
    )


def quadric_pencil_family(g: int, marks: int) -> DegreeVector:
    """General bidegree-(2, g+1) pencil on P^1 x P^1, marked at base points.

    Base points are exceptional after blowing up, so each psi degree is 1;
    the only boundary met is eta_irr, with the discriminant degree 4(2g+1).
    With two marks the target degree is 0: the two base points never lie
    in a common ruling, so no fiber of the degree-2 series contains both.
    """
    if marks not in (1, 2):
        raise DomainError(f"marks must be 1 or 2, got {marks}")
    B.check_ambient(g, marks)
    eta_irr_degree = 4 * (2 * g + 1)
    if marks == 1:
        degrees = {B.psi(1): 1, B.eta_irr(): eta_irr_degree}
        return _vector(g, 1, WEIERSTRASS, 1, degrees, "quadric_pencil")
    degrees = {B.psi(1): 1, B.psi(2): 1, B.eta_irr(): eta_irr_degree}
    return _vector(g, 2, G12, 0, degrees, "quadric_pencil", {"marks": 2})


def glued_weierstrass_family(g: int, i: int, section: str, side: str, n: int) -> DegreeVector:
    """Moving genus-i cover glued to a fixed pointed curve of genus g-i.

    ``section`` picks the Weierstrass attachment section: ``horizontal``
    (a ruling, self-intersection -1 upstairs) or ``diagonal`` (a
    bidegree-(1,1) ruling, self-intersection -i).  ``side = low`` keeps
    the marked point(s) on the fixed genus g-i component, so the family
    lies in delta_{i,0}; ``side = high`` switches the genera, landing in
    delta_{i,1} (n = 1) or delta_{i,2} (n = 2).  The marked points stay
    constant, so psi degrees and the target degree vanish.
    """
    B.check_ambient(g, n)
    if i not in B.delta_range(g):
        raise DomainError(f"i={i} out of range 1..{g // 2} for g={g}")
    if section not in (HORIZONTAL, DIAGONAL):
        raise DomainError(f"unknown section kind {section!r}")
    if side not in (LOW, HIGH):
        raise DomainError(f"unknown side {side!r}")

    # the moving component has genus j; boundary labels carry the mark m
    if side == LOW:
        j = i
        delta_key = B.delta(i, "0")
        eta_key = eta_label(g, n, i - 1, "0")
    else:
        j = g - i
        delta_key = B.delta(i, "1" if n == 1 else "2")
        eta_key = eta_label(g, n, i, "1" if n == 1 else "2")

    if section == HORIZONTAL:
        self_int = surfcalc.branch_section_self_intersection(1, 0, 2)
        _gate(-1, self_int, "horizontal attachment section")
        degrees = {delta_key: self_int, B.eta_irr(): 8 * j, eta_key: 2}
    else:
        self_int = surfcalc.branch_section_self_intersection(1, 1, 2 * j + 2)
        _gate(-j, self_int, "diagonal attachment section")
        degrees = {delta_key: self_int, B.eta_irr(): 4 * j, eta_key: 2 * j + 2}

    target = WEIERSTRASS if n == 1 else G12
    return _vector(
        g, n, target, 0, degrees, f"glued_{section}_{side}", {"i": i}
    )


def two_point_blowup_family(g: int, kind: str) -> DegreeVector:
    """Blowup of C x C along diagonal points, two sections (n = 2).

    ``single``: blow up one non-Weierstrass point (p, p); sections are the
    strict transforms of C x {p} and the diagonal.  ``weierstrass_involution``:
    blow up all 2g+2 Weierstrass diagonal points; sections are the strict
    transforms of the diagonal and the involution graph, so the family lies
    entirely inside the target divisor.
    """
    B.check_ambient(g, 2)
    diag = surfcalc.diagonal_self_intersection(g)
    if kind == SINGLE:
        psi1 = -surfcalc.section_after_blowups(0, 1)
        psi2 = -surfcalc.section_after_blowups(diag, 1)
        _gate(1, Fraction(psi1), "single-blowup constant section")
        _gate(2 * g - 1, Fraction(psi2), "single-blowup diagonal section")
        degrees = {B.psi(1): psi1, B.psi(2): psi2, B.delta_0_2(): 1}
        return _vector(g, 2, G12, 1, degrees, "two_point_single")
    if kind == WEIERSTRASS_INVOLUTION:
        psi_degree = -surfcalc.section_after_blowups(diag, 2 * g + 2)
        _gate(4 * g, Fraction(psi_degree), "involution-graph section")
        degrees = {B.psi(1): psi_degree, B.psi(2): psi_degree, B.delta_0_2(): 2 * g + 2}
        return _vector(g, 2, G12, 2 - 2 * g, degrees, "two_point_weierstrass")
    raise DomainError(f"unknown two-point family kind {kind!r}")


def g12_ruling_family(g: int, i: int, side: str) -> DegreeVector:
    """Glued family with a marked ruling, after a degree-2 base change (n = 2).

    One marked point rides the moving genus component (via the pulled-back
    ruling), the other sits on the fixed component, so the family lies in
    delta_{i,1} and misses the target.  The base change doubles every
    degree of the underlying glued family.  Only the sum psi_1 + psi_2 is
    constrained, recorded against PSI_SUM.
    """
    B.check_ambient(g, 2)
    if i not in B.delta_range(g):
        raise DomainError(f"i={i} out of range 1..{g // 2} for g={g}")
    if side not in (LOW, HIGH):
        raise DomainError(f"unknown side {side!r}")
    j = i if side == LOW else g - i
    eta_index = i - 1 if side == LOW else i
    self_int = surfcalc.branch_section_self_intersection(1, 0, 2)
    _gate(-1, self_int, "ruling attachment section")
    degrees = {
        B.delta(i, "1"): 2 * self_int,
        eta_label(g, 2, eta_index, "1"): 4,
        B.eta_irr(): 16 * j,
        PSI_SUM: 2,
    }
    return _vector(g, 2, G12, 0, degrees, f"ruling_{side}", {"i": i})


def f2ip1_family(g: int, i: int) -> DegreeVector:
    """Pencil branched along 2i+2 concurrent (1,1)-curves and 2g-2i rulings.

    Marked along one general ruling (pulled back by the degree-2 base
    change, deg psi = 2(i+1)) and one line over the special ruling through
    the common point (deg psi = 2).  One fiber lies in eta_{i,.} with the
    moving mark on the genus-i side; nodal fibers give
    deg(eta_irr) = 4(i+1)(4g-2i+1).

    The index range is 0 <= i <= (g-1)//2.  The boundary member i = 0 has
    no moving genus: its eta-degree is registered on the auxiliary label
    eta_{0,1}, and including it closes the coefficient system at g = 2.
    """
    B.check_ambient(g, 2)
    if not 0 <= i <= (g - 1) // 2:
        raise DomainError(f"i={i} out of range 0..{(g - 1) // 2} for g={g}")
    degrees = {
        B.psi(1): 2 * (i + 1),
        B.psi(2): 2,
        eta_label(g, 2, i, "1"): 2,
        B.eta_irr(): 4 * (i + 1) * (4 * g - 2 * i + 1),
    }
    return _vector(g, 2, G12, 0, degrees, "f2ip1", {"i": i})


class Ansatz:
    """Unknown-coefficient model for a target divisor class.

    Maps every degree-vector key to the name of the rational unknown that
    multiplies it: ``d`` for psi classes, ``c`` for eta_irr, ``a_0_2`` for
    delta_{0,2}, ``a_i_m`` / ``b_i_m`` for delta / eta boundary labels.
    The 1a/1b markings share the invariant unknown ``a_i_1`` (the class is
    symmetric under swapping the marked points), which is also what the
    invariant-combination and PSI_SUM keys resolve to.
    """

    def __init__(self, g: int, n: int, target: str):
        B.check_ambient(g, n)
        self.g = g
        self.n = n
        self.target = target

    @staticmethod
    def _marking_slot(marking: str) -> str:
        return {"0": "0", "1": "1", "1a": "1", "1b": "1", "2": "2"}[marking]

    def symbol_for(self, label: Label) -> str:
        if isinstance(label, PsiSum):
            return "d"
        if isinstance(label, AuxiliaryLabel):
            prefix = "a" if label.kind == B.DELTA else "b"
            return f"{prefix}_{label.index}_{self._marking_slot(label.marking)}"
        if label.kind == B.PSI:
            return "d"
        if label.kind == B.ETA_IRR:
            return "c"
        if label.kind == B.DELTA_0_2:
            return "a_0_2"
        prefix = "a" if label.kind == B.DELTA else "b"
        return f"{prefix}_{label.index}_{self._marking_slot(label.marking)}"

    def formal_symbols(self) -> list[str]:
        """Deterministic unknown order: d, c, a_0_2, a's by (i, m), b's."""
        symbols = ["d", "c"]
        markings = ("0", "1") if self.n == 1 else ("0", "1", "2")
        if self.n == 2:
            symbols.append("a_0_2")
        for i in B.delta_range(self.g):
            symbols.extend(f"a_{i}_{m}" for m in markings)
        for i in B.eta_range(self.g):
            symbols.extend(f"b_{i}_{m}" for m in markings)
        return symbols

    def labels_for_symbol(self, symbol: str) -> list[BasisElement]:
        """Formal expression labels carrying a solved symbol's value."""
        if symbol == "d":
            return [B.psi(k) for k in range(1, self.n + 1)]
        if symbol == "c":
            return [B.eta_irr()]
        if symbol == "a_0_2":
            return [B.delta_0_2()]
        prefix, index, slot = symbol.split("_")
        index = int(index)
        kind = B.DELTA if prefix == "a" else B.ETA
        if slot == "1" and self.n == 2:
            return [BasisElement(kind, index, "1a"), BasisElement(kind, index, "1b")]
        return [BasisElement(kind, index, slot)]


def weierstrass_ansatz(g: int) -> Ansatz:
    return Ansatz(g, 1, WEIERSTRASS)


def g12_ansatz(g: int) -> Ansatz:
    return Ansatz(g, 2, G12)


def pairing_degree(ansatz: Ansatz, dv: DegreeVector) -> dict[str, Fraction]:
    """Pair an unknown-coefficient expression with a degree vector.

    Returns the exact linear form (unknown -> coefficient); equating it to
    ``dv.target_degree`` is the relation the family contributes.
    """
    if (ansatz.g, ansatz.n) != (dv.g, dv.n):
        raise DomainError(
            f"ansatz ambient (g={ansatz.g}, n={ansatz.n}) does not match "
            f"degree vector (g={dv.g}, n={dv.n})"
        )
    if ansatz.target != dv.target:
        raise DomainError(f"ansatz target {ansatz.target!r} != family target {dv.target!r}")
    form: dict[str, Fraction] = {}
    for label, degree in dv.degrees.items():
        symbol = ansatz.symbol_for(label)
        acc = form.get(symbol, Fraction(0)) + degree
        if acc:
            form[symbol] = acc
        else:
            form.pop(symbol, None)
    return form


def evaluate_pairing(
    expr: "B.DivisorExpression",
    dv: DegreeVector,
    aux_values: Mapping[str, Fraction] | None = None,
) -> Fraction:
    """Degree of a concrete divisor expression on a family.

    Invariant-combination and PSI_SUM keys require the expression to be
    symmetric in the corresponding labels; auxiliary keys look their value
    up in ``aux_values`` (by symbol name, e.g. ``b_0_1``).
    """
    if (expr.g, expr.n) != (dv.g, dv.n):
        raise DomainError("expression and degree vector live on different stacks")
    ansatz = Ansatz(dv.g, dv.n, dv.target)
    total = Fraction(0)
    for label, degree in dv.degrees.items():
        if isinstance(label, AuxiliaryLabel):
            if aux_values is None or ansatz.symbol_for(label) not in aux_values:
                raise DomainError(f"no value supplied for auxiliary {label!r}")
            total += degree * Fraction(aux_values[ansatz.symbol_for(label)])
            continue
        if isinstance(label, PsiSum):
            c1, c2 = expr.coefficient(B.psi(1)), expr.coefficient(B.psi(2))
            if c1 != c2:
                raise DomainError("PSI_SUM pairing needs equal psi coefficients")
            total += degree * c1
            continue
        if dv.n == 2 and label.kind in (B.DELTA, B.ETA) and label.marking == "1":
            ca = expr.coefficient(BasisElement(label.kind, label.index, "1a"))
            cb = expr.coefficient(BasisElement(label.kind, label.index, "1b"))
            if ca != cb:
                raise DomainError("invariant-combination pairing needs symmetric coefficients")
            total += degree * ca
            continue
        total += degree * expr.coefficient(label)
    return total
