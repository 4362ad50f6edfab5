"""Check suites and box audits."""

from fractions import Fraction

import pytest

from padelog.audit import (
    AuditConfig,
    _box_vectors,
    constants_report,
    dn_suite,
    eval_linear_form_arch,
    eval_linear_form_padic,
    exhaustive_audit,
    padic_remainder_magnitude,
    verify_suite,
)
from padelog.bounds import AlphaInput, HypothesisError
from padelog.construction import ConstructionParams, build_system
from padelog.directed import log1p_enclosure

TENTH = AlphaInput(1, 10)


# -- linear form evaluation ----------------------------------------------------

def test_constant_form_is_exact():
    enc, status = eval_linear_form_arch([1, 0], Fraction(1, 10))
    assert status == "ok"
    assert enc.lo == enc.hi == 1


def test_log_two():
    enc, status = eval_linear_form_arch([0, 1], Fraction(1))
    assert status == "ok"
    assert abs(float(enc.hi) - 0.6931471805599453) < 1e-15


def test_three_term_form_against_finer_evaluation():
    coarse, s1 = eval_linear_form_arch([-1, 0, 1], Fraction(1), 128)
    fine, s2 = eval_linear_form_arch([-1, 0, 1], Fraction(1), 512)
    assert s1 == s2 == "ok"
    # |log^2(2) - 1| ~ 0.5195; the finer interval sits inside the coarser
    assert abs(float(fine.hi) - 0.5195469860817986) < 1e-15
    assert coarse.lo <= fine.lo <= fine.hi <= coarse.hi


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        eval_linear_form_arch([0, 0], Fraction(1, 10))
    with pytest.raises(ValueError):
        eval_linear_form_padic([Fraction(0)], Fraction(5), 5)


def test_fraction_coefficients_accepted():
    enc, status = eval_linear_form_arch(
        [Fraction(1, 3), Fraction(-2, 7)], Fraction(1, 10))
    assert status == "ok"
    want = Fraction(1, 3) - Fraction(2, 7) * Fraction(
        "0.0953101798043248600439521232807650922206")
    assert abs(float(enc.hi) - float(want)) < 1e-18


def test_padic_form_valuation():
    form, status = eval_linear_form_padic(
        [Fraction(0), Fraction(3)], Fraction(243), 3)
    assert status == "ok"
    # 3 * log(1+243): v = 1 + 5
    assert form.valuation == 6
    assert form.abs_value() == Fraction(1, 729)


def test_padic_form_escalates_past_engineered_cancellation():
    # the K-term partial sum of the log series is rational; using it as a
    # coefficient cancels everything the default window can see, forcing
    # digit doubling
    alpha = Fraction(243)
    K = 60
    partial = sum(
        Fraction((-1) ** (k + 1) * 243**k, k) for k in range(1, K + 1))
    form, status = eval_linear_form_padic([-partial, Fraction(1)], alpha, 3)
    assert status == "ok"
    # the residue is the tail, whose first term is -243^61/61 (v_3 = 305)
    assert form.valuation == 305


def test_padic_form_reports_imprecise_when_cancellation_outruns_cap():
    alpha = Fraction(243)
    K = 900  # tail valuation ~ 4500, past the 4096-digit ceiling
    partial = sum(
        Fraction((-1) ** (k + 1) * 243**k, k) for k in range(1, K + 1))
    form, status = eval_linear_form_padic([-partial, Fraction(1)], alpha, 3)
    assert status == "imprecise"
    assert form is None


def test_padic_remainder_magnitude_matches_bound_shape():
    params = ConstructionParams(2, 3)
    system = build_system(params)
    alpha = AlphaInput(5, 1)
    mag = padic_remainder_magnitude(system, 1, alpha, 5)
    assert 0 < mag < 1
    # scaled remainder is a p-adic integer: magnitude at most 1
    assert mag.denominator % 5 == 0 or mag == 1


# -- box iteration -------------------------------------------------------------

def test_box_vectors_canonical_half():
    vecs = list(_box_vectors(2, 1))
    assert vecs == [(0, 1), (1, -1), (1, 0), (1, 1)]


def test_box_vectors_skip_zero_and_negated():
    vecs = set(_box_vectors(2, 4))
    assert (0, 0) not in vecs
    for b in vecs:
        assert tuple(-x for x in b) not in vecs
    assert len(vecs) == ((2 * 4 + 1) ** 2 - 1) // 2


def test_box_vectors_deterministic_order():
    assert list(_box_vectors(3, 1)) == list(_box_vectors(3, 1))


# -- verify suite ----------------------------------------------------------------

def test_verify_suite_green():
    rep = verify_suite(m_values=(2,), n_max=2)
    assert rep.passed
    anchors = {r.anchor for r in rep.records}
    assert {"order-vanishing", "degree-caps", "determinant-monomial",
            "table-integrality", "value-integrality", "unity-reconstruction",
            "local-table-agreement", "kernel-equivalence", "coeff-size",
            "remainder-size-arch"} <= anchors


def test_verify_suite_m3_green():
    rep = verify_suite(m_values=(3,), n_max=1)
    assert rep.passed


def test_verify_suite_fault_goes_red():
    rep = verify_suite(m_values=(2,), n_max=1, inject_fault=True)
    assert not rep.passed
    failed_anchors = {r.anchor for r in rep.records if r.status == "fail"}
    # the perturbed table entry must at least break the vanishing order
    # and the partial-fraction identity
    assert "order-vanishing" in failed_anchors
    assert "unity-reconstruction" in failed_anchors


def test_dn_suite_brackets():
    rep = dn_suite(120)
    assert rep.passed
    assert rep.summary == {"checked": 119, "failures": 0}


def test_dn_suite_input_gate():
    with pytest.raises(ValueError):
        dn_suite(1)


# -- config validation -----------------------------------------------------------

def test_config_rejects_bad_mode():
    with pytest.raises(ValueError):
        AuditConfig(mode="explode")


def test_config_requires_alpha_for_audit():
    with pytest.raises(ValueError, match="alpha"):
        AuditConfig(mode="audit")


def test_config_requires_p_for_padic():
    with pytest.raises(ValueError, match="needs p"):
        AuditConfig(mode="padic-audit", alpha=TENTH)


def test_config_rejects_p_outside_padic_modes():
    with pytest.raises(ValueError):
        AuditConfig(mode="audit", alpha=TENTH, p=5)
    # but constants mode accepts an optional p
    AuditConfig(mode="constants", alpha=AlphaInput(243, 1), p=3)


def test_config_rejects_bad_epsilon():
    with pytest.raises(ValueError, match="epsilon"):
        AuditConfig(mode="audit", alpha=TENTH, epsilon=Fraction(0))


# -- archimedean box audit --------------------------------------------------------

@pytest.fixture(scope="module")
def arch_audit_report():
    cfg = AuditConfig(mode="audit", m=2, alpha=TENTH, height_max=30)
    return exhaustive_audit(cfg)


def test_arch_audit_passes(arch_audit_report):
    assert arch_audit_report.passed


def test_arch_audit_row_count(arch_audit_report):
    assert arch_audit_report.summary["rows"] == (61 * 61 - 1) // 2
    assert len(arch_audit_report.tables["rows"]) == 1860


def test_arch_audit_min_row_is_the_convergent(arch_audit_report):
    # continued fraction of log(11/10): the convergent 2/21 gives the
    # smallest form in the box
    min_row = arch_audit_report.summary["min_row"]
    assert min_row["b"] == [2, -21]
    got = float(min_row["abs"]["hi"]["approx"])
    L = log1p_enclosure(Fraction(1, 10), 384)
    want = abs(2 - 21 * float(L.hi))
    assert abs(got - want) < 1e-15


def test_arch_audit_min_by_height_is_monotone(arch_audit_report):
    table = arch_audit_report.tables["min_abs_by_height"]
    assert table[0]["height"] == 1
    values = [float(entry["min_abs_hi"]["approx"]) for entry in table]
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert len(table) == 30


def test_arch_audit_rows_have_floors(arch_audit_report):
    row = arch_audit_report.tables["rows"][0]
    assert row["b"] == [0, 1]
    assert row["status"] == "ok"
    assert not row["h0_applies"]  # H0 here is astronomically large
    assert float(row["floor_log_height_b"]["approx"]) <= 0
    assert "nw_log_floor" in row


def test_arch_audit_improves_on_generic_floor(arch_audit_report):
    # mu ~ 5.3 versus 105500 e (m-1)^2 ~ 2.9e5: five orders of magnitude
    assert arch_audit_report.summary["improves_nw_floor"] is True
    nw = float(arch_audit_report.summary["nw_exponent_floor"]["approx"])
    mu = float(arch_audit_report.summary["mu"]["approx"])
    assert mu < 6 < 250_000 < nw


def test_arch_audit_deterministic_bytes(arch_audit_report):
    cfg = AuditConfig(mode="audit", m=2, alpha=TENTH, height_max=30)
    again = exhaustive_audit(cfg)
    assert again.to_bytes() == arch_audit_report.to_bytes()


def test_arch_audit_inapplicable_instance_raises():
    cfg = AuditConfig(mode="audit", m=3, alpha=TENTH, height_max=2)
    with pytest.raises(HypothesisError, match="delta"):
        exhaustive_audit(cfg)


def test_box_cap_enforced():
    cfg = AuditConfig(mode="audit", m=2, alpha=TENTH, height_max=20_000)
    with pytest.raises(HypothesisError, match="cap"):
        exhaustive_audit(cfg)


def test_row_cap_enforced():
    cfg = AuditConfig(mode="audit", m=4, alpha=TENTH, height_max=40)
    with pytest.raises(HypothesisError, match="cap"):
        exhaustive_audit(cfg)


# -- p-adic box audit -------------------------------------------------------------

@pytest.fixture(scope="module")
def padic_audit_report():
    cfg = AuditConfig(mode="padic-audit", m=2, alpha=AlphaInput(243, 1),
                      p=3, height_max=10)
    return exhaustive_audit(cfg)


def test_padic_audit_passes(padic_audit_report):
    assert padic_audit_report.passed


def test_padic_audit_min_row(padic_audit_report):
    # |b2 log(244)|_3 = |b2|_3 3^-6, minimized over the box at b2 = 9;
    # any row with b1 != 0 has magnitude at least 3^-4 (v_3(b1) <= 2... so
    # >= 3^-2 actually; the uniform winner is (0, 9))
    min_row = padic_audit_report.summary["min_row"]
    assert min_row["b"] == [0, 9]
    assert min_row["abs"] == "1/2187"


def test_padic_audit_rows_carry_valuations(padic_audit_report):
    rows = padic_audit_report.tables["rows"]
    by_b = {tuple(r["b"]): r for r in rows}
    assert by_b[(0, 1)]["valuation"] == 5  # v_3(log 244) = v_3(243)
    assert by_b[(0, 3)]["valuation"] == 6
    assert by_b[(1, 0)]["valuation"] == 0
    assert by_b[(9, 0)]["valuation"] == 2
    assert all(r["status"] == "ok" for r in rows)


def test_padic_audit_deterministic(padic_audit_report):
    cfg = AuditConfig(mode="padic-audit", m=2, alpha=AlphaInput(243, 1),
                      p=3, height_max=10)
    assert exhaustive_audit(cfg).to_bytes() == padic_audit_report.to_bytes()


def test_padic_audit_inapplicable_raises():
    cfg = AuditConfig(mode="padic-audit", m=2, alpha=AlphaInput(5, 1),
                      p=5, height_max=2)
    with pytest.raises(HypothesisError, match="delta"):
        exhaustive_audit(cfg)


# -- constants reports -------------------------------------------------------------

def test_constants_report_applicable():
    cfg = AuditConfig(mode="constants", m=2, alpha=TENTH)
    rep = constants_report(cfg)
    assert rep.passed
    c = rep.summary["constants"]
    assert c["kind"] == "arch" and c["applicable"] is True
    assert abs(float(c["delta"]["approx"]) - 1.522053610694359) < 1e-12
    assert rep.summary["n_star_digits"] == 337
    assert rep.summary["mu"]["approx"] == "5.300253547757442"


def test_constants_report_inapplicable_still_passes():
    cfg = AuditConfig(mode="constants", m=3, alpha=TENTH)
    rep = constants_report(cfg)
    assert rep.passed  # inapplicability is an answer, not a failure
    assert rep.summary["constants"]["applicable"] is False
    assert rep.summary["constants"]["delta_sign"] == -1
    assert "n_star" not in rep.summary


def test_constants_report_padic():
    cfg = AuditConfig(mode="constants", m=2, alpha=AlphaInput(243, 1), p=3)
    rep = constants_report(cfg)
    assert rep.passed
    c = rep.summary["constants"]
    assert c["kind"] == "padic" and c["v"] == 5
    assert abs(float(c["delta"]["approx"]) - 2.102660300268004) < 1e-12


def test_constants_report_proof_variant():
    cfg = AuditConfig(mode="constants", m=2, alpha=TENTH, variant="proof")
    rep = constants_report(cfg)
    assert rep.summary["constants"]["variant"] == "proof"
    assert rep.summary["constants"]["applicable"] is False
