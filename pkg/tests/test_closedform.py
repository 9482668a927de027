"""Closed-form tables: frozen small-genus values, symmetries, coherence."""

from fractions import Fraction

import pytest

from hypdiv import basis as B
from hypdiv import closedform as CF
from hypdiv.basis import delta, eta, eta_irr, psi
from hypdiv.families import G12, WEIERSTRASS


def frac(n, d=1):
    return Fraction(n, d)


def test_weierstrass_class_g2():
    expr = CF.hgw_closed_form(2)
    assert expr.terms == {
        psi(1): frac(3),
        eta_irr(): frac(-1, 10),
        delta(1, "0"): frac(-6, 5),
        delta(1, "1"): frac(-6, 5),
    }


def test_weierstrass_class_g3():
    expr = CF.hgw_closed_form(3)
    assert expr.terms == {
        psi(1): frac(2),
        eta_irr(): frac(-1, 28),
        delta(1, "0"): frac(-3, 7),
        delta(1, "1"): frac(-10, 7),
        eta(1, "0"): frac(-3, 7),
        eta(1, "1"): frac(-3, 7),
    }


def test_weierstrass_psi_coefficient():
    assert CF.w_psi(11) == frac(6, 5)
    for g in range(2, 60):
        assert CF.hgw_closed_form(g).terms[psi(1)] == frac(g + 1, g - 1)


def test_g12_class_g2():
    expr = CF.hg12_closed_form(2)
    assert expr.terms == {
        psi(1): frac(1),
        psi(2): frac(1),
        eta_irr(): frac(-1, 10),
        B.delta_0_2(): frac(-3),
        delta(1, "0"): frac(-6, 5),
        delta(1, "1a"): frac(-1, 5),
        delta(1, "1b"): frac(-1, 5),
        delta(1, "2"): frac(-6, 5),
    }


def test_g12_g3_invariant_coefficients():
    assert CF.g12_delta(3, 1, 1) == frac(1, 14)
    assert CF.g12_eta(3, 1, 1) == frac(1, 14)
    # independent confirmation through the ruling relation
    c, d = CF.g12_eta_irr(3), CF.g12_psi(3)
    a, b = CF.g12_delta(3, 1, 1), CF.g12_eta(3, 1, 1)
    assert -2 * a + 4 * b + 32 * c + 2 * d == 0


def test_g12_denominator_normalization():
    # reduced denominators divide (g-1)(2g+1); the (g-1)(2g+2) reading fails
    for g in range(2, 101):
        den = (g - 1) * (2 * g + 1)
        for i in range(1, g // 2 + 1):
            assert den % CF.g12_delta(g, i, 1).denominator == 0
    assert CF.g12_delta(3, 1, 1) == frac(1, 14)
    assert CF.g12_delta(3, 1, 1) != frac(1, 16)


def test_delta_numerator_reflection_symmetry():
    for g in range(2, 101):
        for i in range(1, g // 2 + 1):
            assert CF.w_delta(g, g - i, 0) == CF.w_delta(g, i, 1)
    for g in range(2, 101):
        for i in range(1, (g - 1) // 2 + 1):
            assert CF.w_eta(g, g - 1 - i, 0) == CF.w_eta(g, i, 1)


def test_identified_index_coherence():
    for g in range(2, 101, 2):
        assert CF.w_delta(g, g // 2, 0) == CF.w_delta(g, g // 2, 1)
        assert CF.g12_delta(g, g // 2, 0) == CF.g12_delta(g, g // 2, 2)
    for g in range(3, 101, 2):
        t = (g - 1) // 2
        assert CF.w_eta(g, t, 0) == CF.w_eta(g, t, 1)
        assert CF.g12_eta(g, t, 0) == CF.g12_eta(g, t, 2)


def test_canonicalization_well_defined_on_closed_forms():
    # merging identified labels never silently changes a coefficient ratio:
    # the two merged values are equal, so the canonical value is twice each
    for g in (2, 4, 7, 9):
        for expr in (CF.hgw_closed_form(g), CF.hg12_closed_form(g)):
            merged = expr.canonical()
            for twin, canonical in B.identified_pairs(g, expr.n):
                if twin in expr.terms:
                    assert expr.terms[twin] == expr.terms[canonical]
                    assert merged.terms[canonical] == 2 * expr.terms[canonical]


def test_sign_table():
    for g in range(2, 51):
        w = CF.hgw_closed_form(g)
        for element, value in w.terms.items():
            if element == psi(1):
                assert value > 0
            else:
                assert value < 0
        h = CF.hg12_closed_form(g)
        for element, value in h.terms.items():
            if element.kind == B.PSI:
                assert value > 0
            elif element.kind in (B.DELTA, B.ETA) and element.marking in ("1a", "1b"):
                continue  # the only possibly-positive boundary coefficients
            else:
                assert value < 0


def test_verify_single_genus():
    report = CF.verify_range(2, 2, WEIERSTRASS)
    assert report.ok
    assert len(report.results) == 1
    assert report.results[0].rank == report.results[0].n_unknowns


def test_verify_small_sweep_both_targets():
    assert CF.verify_range(2, 10, WEIERSTRASS).ok
    assert CF.verify_range(2, 10, G12).ok


def test_verify_reports_mismatch_without_raising(monkeypatch):
    import hypdiv.solver as S

    original = S.solve_coefficients

    def perturbed(g, target):
        report = original(g, target)
        if g == 3:
            broken = dict(report.solution.terms)
            broken[psi(1)] += 1
            report.solution = B.DivisorExpression(report.solution.g, report.solution.n, broken)
        return report

    monkeypatch.setattr(S, "solve_coefficients", perturbed)
    report = CF.verify_range(2, 4, WEIERSTRASS)
    assert not report.ok
    failed = [r for r in report.results if not r.ok]
    assert [r.g for r in failed] == [3]
    name, got, want = failed[0].mismatches[0]
    assert name == "psi" and got == want + 1
    assert "mismatches at g in [3]" in report.summary()


def test_invalid_range_rejected():
    with pytest.raises(B.DomainError):
        CF.verify_range(5, 2, WEIERSTRASS)
    with pytest.raises(B.DomainError):
        CF.verify_range(1, 3, WEIERSTRASS)
