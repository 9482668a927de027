"""Assemble and exactly solve the coefficient system for a target divisor.

For a fixed genus and target, every cataloged family contributes one
linear relation: pairing the unknown-coefficient model with the family's
degree vector and equating to the target degree.  The assembly is
deliberately overdetermined; redundant relations are reported, never
pruned, since they cross-check the catalog.

Two kinds of relation enter beyond the families themselves:

* identification relations: at the top boundary index two formal labels
  name the same irreducible divisor, and the printed closed forms give
  both labels one common value.  The symmetric constraint (e.g.
  ``b_t_0 = b_t_1`` for odd g) is forced; without it the formal
  coefficient of the label that no family reaches would be free.
* the boundary member i = 0 of the f2ip1 pencil (target g12 only).  It
  pins the auxiliary ``b_0_1``; for g >= 3 it is implied by the other
  relations, while at g = 2 it is what makes delta_{1,1} computable.

Unknowns carried on out-of-range labels (``b_0_0``, ``b_0_1``, and for
even g ``b_{g/2}_1`` / ``b_{g/2}_2``) are auxiliaries: first-class solver
variables, solved, reported, and excluded from the resulting divisor
expression.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import exactlin
from . import families as F
from .basis import DivisorExpression, DomainError
from .families import G12, WEIERSTRASS, Ansatz


class SolverError(RuntimeError):
    """The assembled system is inconsistent or underdetermined."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


@dataclass
class Relation:
    """One exact linear equation on the unknown coefficients."""

    coeffs: dict[str, Fraction]
    rhs: Fraction
    provenance: str

    def __post_init__(self):
        self.coeffs = {k: Fraction(v) for k, v in self.coeffs.items() if v}
        self.rhs = Fraction(self.rhs)
        if not self.coeffs:
            raise DomainError(f"relation {self.provenance!r} has no nonzero coefficient")

    def render(self) -> str:
        parts = []
        for symbol, value in self.coeffs.items():
            if not parts:
                parts.append(f"{value}·{symbol}")
            elif value < 0:
                parts.append(f"- {-value}·{symbol}")
            else:
                parts.append(f"+ {value}·{symbol}")
        return f"{self.provenance}: {' '.join(parts)} = {self.rhs}"


def _ansatz(g: int, target: str) -> Ansatz:
    if target == WEIERSTRASS:
        return F.weierstrass_ansatz(g)
    if target == G12:
        return F.g12_ansatz(g)
    raise DomainError(f"unknown target {target!r}")


def relation_from_family(ansatz: Ansatz, dv: F.DegreeVector) -> Relation:
    form = F.pairing_degree(ansatz, dv)
    return Relation(coeffs=form, rhs=dv.target_degree, provenance=dv.provenance())


def _ordered_coeffs(coeffs: dict[str, Fraction], order: list[str]) -> dict[str, Fraction]:
    position = {s: j for j, s in enumerate(order)}
    tail = len(order)
    return dict(sorted(coeffs.items(), key=lambda kv: position.get(kv[0], tail)))


def family_vectors(g: int, target: str) -> list[F.DegreeVector]:
    """Every cataloged degree vector entering the (g, target) system."""
    if target == WEIERSTRASS:
        vectors = [F.diagonal_family(g), F.quadric_pencil_family(g, 1)]
        for i in range(1, g // 2 + 1):
            for section in (F.HORIZONTAL, F.DIAGONAL):
                for side in (F.LOW, F.HIGH):
                    vectors.append(F.glued_weierstrass_family(g, i, section, side, 1))
        return vectors
    if target == G12:
        vectors = [
            F.two_point_blowup_family(g, F.SINGLE),
            F.two_point_blowup_family(g, F.WEIERSTRASS_INVOLUTION),
            F.quadric_pencil_family(g, 2),
        ]
        for i in range(1, g // 2 + 1):
            for section in (F.HORIZONTAL, F.DIAGONAL):
                for side in (F.LOW, F.HIGH):
                    vectors.append(F.glued_weierstrass_family(g, i, section, side, 2))
        for i in range(1, g // 2 + 1):
            vectors.append(F.g12_ruling_family(g, i, F.LOW))
            vectors.append(F.g12_ruling_family(g, i, F.HIGH))
        for i in range(0, (g - 1) // 2 + 1):
            vectors.append(F.f2ip1_family(g, i))
        return vectors
    raise DomainError(f"unknown target {target!r}")


def identification_relations(g: int, target: str) -> list[Relation]:
    """Symmetric constraints for formal label pairs naming one divisor."""
    from . import basis as B

    ansatz = _ansatz(g, target)
    out = []
    for twin, canonical in B.identified_pairs(g, ansatz.n):
        s1, s2 = ansatz.symbol_for(twin), ansatz.symbol_for(canonical)
        if s1 == s2:
            continue
        out.append(
            Relation(
                coeffs={s1: Fraction(1), s2: Fraction(-1)},
                rhs=Fraction(0),
                provenance=f"identification[{s1}={s2}]",
            )
        )
    return out


def assemble_system(g: int, target: str) -> list[Relation]:
    """All relations for (g, target), in deterministic order."""
    ansatz = _ansatz(g, target)
    order = ansatz.formal_symbols()
    relations = [relation_from_family(ansatz, dv) for dv in family_vectors(g, target)]
    relations.extend(identification_relations(g, target))
    for r in relations:
        r.coeffs = _ordered_coeffs(r.coeffs, order)
    return relations


def unknown_order(g: int, target: str) -> tuple[list[str], list[str]]:
    """(formal unknowns, auxiliary unknowns), both deterministically ordered."""
    ansatz = _ansatz(g, target)
    formal = ansatz.formal_symbols()
    known = set(formal)
    auxiliaries = []
    for relation in assemble_system(g, target):
        for symbol in relation.coeffs:
            if symbol not in known:
                known.add(symbol)
                auxiliaries.append(symbol)
    return formal, auxiliaries


@dataclass
class CoefficientReport:
    """Solved coefficients plus the diagnostics the solve produced."""

    g: int
    target: str
    solution: DivisorExpression
    coefficients: dict[str, Fraction]
    auxiliaries: dict[str, Fraction]
    rank: int
    n_unknowns: int
    redundant: list[str]
    relations: list[Relation] = field(repr=False, default_factory=list)


def solve_coefficients(g: int, target: str) -> CoefficientReport:
    """Solve the assembled system exactly and package the result.

    Raises SolverError if the system is inconsistent (with the combination
    certificate) or leaves any non-auxiliary unknown free; either one
    signals a catalog bug, not a data condition.
    """
    ansatz = _ansatz(g, target)
    relations = assemble_system(g, target)
    formal, auxiliaries = unknown_order(g, target)
    variables = formal + auxiliaries
    system = exactlin.LinearSystem(tuple(variables))
    for relation in relations:
        system.add_row(relation.coeffs, relation.rhs)

    result = exactlin.solve(system)
    if isinstance(result, exactlin.Inconsistent):
        lines = [relations[r].provenance for r in sorted(result.certificate)]
        raise SolverError(
            f"inconsistent system for g={g}, target={target}; "
            f"certificate combines rows {lines} into 0 = {result.residual}",
            certificate=result.certificate,
        )
    if isinstance(result, exactlin.Underdetermined):
        free_formal = [s for s in result.free if s in set(formal)]
        if free_formal:
            raise SolverError(
                f"underdetermined system for g={g}, target={target}: "
                f"free non-auxiliary unknowns {free_formal}"
            )
        raise SolverError(
            f"underdetermined system for g={g}, target={target}: "
            f"free auxiliary unknowns {list(result.free)}"
        )

    assignment = result.assignment
    aux_set = set(auxiliaries)
    solution = DivisorExpression.from_terms(
        g,
        ansatz.n,
        [
            (label, assignment[symbol])
            for symbol in formal
            for label in ansatz.labels_for_symbol(symbol)
        ],
    )
    return CoefficientReport(
        g=g,
        target=target,
        solution=solution,
        coefficients={s: assignment[s] for s in formal},
        auxiliaries={s: assignment[s] for s in auxiliaries},
        rank=result.rank,
        n_unknowns=len(variables),
        redundant=[relations[r].provenance for r in result.redundant_rows],
        relations=relations,
    )


def independent_a1_determinations(g: int) -> dict[int, dict[str, Fraction]]:
    """Determinations of each invariant delta coefficient a_i_1 (target g12).

    For every i, the ruling relation on each side determines a_i_1 once
    the eta unknown it touches is pinned by an f2ip1 relation (a disjoint
    family).  Returns i -> {side: value} for the sides whose eta unknown
    has an f2ip1 source; every i has at least one.
    """
    report = solve_coefficients(g, G12)
    c = report.coefficients["c"]
    d = report.coefficients["d"]

    def b_from_f2ip1(i: int) -> Fraction | None:
        if not 0 <= i <= (g - 1) // 2:
            return None
        dv = F.f2ip1_family(g, i)
        form = F.pairing_degree(F.g12_ansatz(g), dv)
        b_symbol = f"b_{i}_1"
        rest = sum(
            (coeff * (c if s == "c" else d) for s, coeff in form.items() if s != b_symbol),
            Fraction(0),
        )
        return (dv.target_degree - rest) / form[b_symbol]

    out: dict[int, dict[str, Fraction]] = {}
    for i in range(1, g // 2 + 1):
        determinations: dict[str, Fraction] = {}
        for side, eta_index, j in ((F.LOW, i - 1, i), (F.HIGH, i, g - i)):
            b = b_from_f2ip1(eta_index)
            if b is None:
                continue
            # ruling relation: -2 a_i_1 + 4 b + 16 j c + 2 d = 0
            determinations[side] = 2 * b + 8 * j * c + d
        out[i] = determinations
    return out
