import random
from fractions import Fraction

import pytest

from veronese.construct import (
    PURE_POWER,
    DecompositionRecord,
    Summand,
    certificate_to_json,
    certify_border_rank,
    construct_conic_double,
    construct_line_jet,
    construct_stratum_point,
    construct_tangent_plus_points,
    decomposition_to_json,
    flattening_rank,
    gamma_dims,
    line_condition,
    sylvester_binary,
    terracini_dim,
)
from veronese.errors import CertificateRefused, InputError
from veronese.forms import (
    Form,
    LinearForm,
    power_expand,
    product_expand,
    substitute,
)
from veronese.rationalla import rank_exact
from veronese.schemes import (
    Jet,
    Reduced,
    SchemeSpec,
    random_jet_on_line,
    random_reduced,
    span_matrix,
)
from veronese.strata import StratumLabel

F = Fraction


def span_combo(Z, d, coeffs):
    S = span_matrix(Z, d)
    vec = [F(0)] * S.cols
    for i, c in enumerate(coeffs):
        row = S.row(i)
        for j in range(S.cols):
            vec[j] += c * row[j]
    return Form(Z.m, d, tuple(vec))


# --- decomposition records ----------------------------------------------


def test_decomposition_verifies_on_construction():
    L1, L2 = LinearForm.make([1, 2]), LinearForm.make([1, -1])
    target = power_expand(L1, 3) + power_expand(L2, 3).scale(5)
    rec = DecompositionRecord(
        1,
        3,
        (Summand(PURE_POWER, F(1), L1), Summand(PURE_POWER, F(5), L2)),
        target,
    )
    assert rec.size == 2 and rec.expand() == target
    with pytest.raises(InputError):
        DecompositionRecord(
            1, 3, (Summand(PURE_POWER, F(2), L1),), target
        )


def test_tangent_shape_summand():
    L, M = LinearForm.make([1, 0, 0]), LinearForm.make([0, 1, 1])
    s = Summand("L^(d-1)M", F(3), L, second=M)
    assert s.expand(5) == product_expand([(L, 4), (M, 1)]).scale(3)


# --- sylvester ------------------------------------------------------------


def test_sylvester_pure_power_rank_one():
    for d in (3, 5, 7):
        f = power_expand(LinearForm.make([2, -3]), d)
        res = sylvester_binary(f)
        assert res.rank == 1
        assert res.decomposition is not None and res.decomposition.size == 1


def test_sylvester_tangent_form_rank_d():
    f = product_expand([(LinearForm.make([1, 0]), 4), (LinearForm.make([0, 1]), 1)])
    res = sylvester_binary(f)
    assert res.rank == 5


def test_sylvester_sum_of_two_fourth_powers():
    f = power_expand(LinearForm.make([1, 0]), 4) + power_expand(LinearForm.make([0, 1]), 4)
    res = sylvester_binary(f)
    assert res.rank == 2
    assert res.splits_over_rationals
    assert res.decomposition.expand() == f


def test_sylvester_rejects_zero_and_nonbinary():
    with pytest.raises(InputError):
        sylvester_binary(Form.from_coeffs(1, 2, [0, 0, 0]))
    with pytest.raises(InputError):
        sylvester_binary(power_expand(LinearForm.make([1, 0, 0]), 2))


def test_sylvester_invariant_under_substitution():
    rng = random.Random(3)
    f = product_expand([(LinearForm.make([1, 0]), 3), (LinearForm.make([0, 1]), 1)])
    base = sylvester_binary(f, want_decomposition=False).rank
    for _ in range(5):
        while True:
            a, b, c, e = (rng.randint(-4, 4) for _ in range(4))
            if a * e - b * c != 0:
                break
        g = substitute(f, [LinearForm.make([a, b]), LinearForm.make([c, e])])
        assert sylvester_binary(g, want_decomposition=False).rank == base


def test_sylvester_irrational_witness_marker():
    # x0^5 + x1^5 + (x0+x1)^5 generically needs kernel roots that may be
    # irrational; whatever happens, rank and any decomposition must verify.
    f = (
        power_expand(LinearForm.make([1, 0]), 5)
        + power_expand(LinearForm.make([0, 1]), 5)
        + power_expand(LinearForm.make([1, 1]), 5)
    )
    res = sylvester_binary(f)
    assert res.rank == 3
    if res.decomposition is not None:
        assert res.decomposition.expand() == f
    else:
        assert not res.splits_over_rationals


# --- flattening and certify ------------------------------------------------


def test_flattening_rank_of_three_powers():
    P = (
        power_expand(LinearForm.make([1, 2, 3]), 6)
        + power_expand(LinearForm.make([1, -1, 1]), 6)
        + power_expand(LinearForm.make([2, 1, -1]), 6)
    )
    fr, per_a = flattening_rank(P)
    assert fr == 3
    assert [a for a, _ in per_a] == [1, 2, 3]


def test_certify_three_general_points():
    rng = random.Random(5)
    Z = SchemeSpec(2, tuple(random_reduced(rng, 2, 20) for _ in range(3)))
    P = span_combo(Z, 7, [F(2), F(3), F(4)])
    cert = certify_border_rank(P, Z, 7)
    assert cert.all_passed and cert.value == 3
    assert any("uniqueness criterion" in c.statement for c in cert.claims)


def test_certify_jet_plus_point_regime_boundary():
    rng = random.Random(6)
    Z = SchemeSpec(2, (random_jet_on_line(rng, 2, 20, 2), random_reduced(rng, 2, 20)))
    P = span_combo(Z, 5, [F(1), F(2), F(3)])
    cert = certify_border_rank(P, Z, 5)  # 2t = 6 <= d+1 = 6
    assert cert.all_passed and cert.value == 3


def test_certify_downgrades_long_jet_on_line():
    rng = random.Random(7)
    Z = SchemeSpec(2, (random_jet_on_line(rng, 2, 20, 4),))
    P = span_combo(Z, 5, [F(1), F(2), F(3), F(4)])
    cert = certify_border_rank(P, Z, 5)
    assert cert.all_passed
    assert any("membership only" in c.statement for c in cert.claims)


def test_certify_refuses_point_in_proper_span():
    rng = random.Random(8)
    Z = SchemeSpec(2, tuple(random_reduced(rng, 2, 20) for _ in range(3)))
    P = span_combo(Z, 5, [F(1), F(1), F(0)])  # drops the third point
    with pytest.raises(CertificateRefused):
        certify_border_rank(P, Z, 5)


def test_certify_refuses_nonmember():
    rng = random.Random(9)
    Z = SchemeSpec(2, (random_reduced(rng, 2, 20),))
    P = power_expand(LinearForm.make([1, 2, 3]), 4) + power_expand(
        LinearForm.make([1, -5, 2]), 4
    )
    with pytest.raises(CertificateRefused):
        certify_border_rank(P, Z, 4)


def test_line_condition_detects_long_line_jets():
    rng = random.Random(10)
    ok = SchemeSpec(2, (random_jet_on_line(rng, 2, 9, 2), random_reduced(rng, 2, 9)))
    assert line_condition(ok) is True
    bad = SchemeSpec(2, (random_jet_on_line(rng, 2, 9, 3),))
    assert line_condition(bad) is False


def test_certify_uses_line_criterion_outside_regime():
    # four general points in the plane at d = 5: 2t = 8 > 6 but no line
    # meets the scheme in degree 3, so the line criterion certifies b = 4
    rng = random.Random(11)
    while True:
        Z = SchemeSpec(2, tuple(random_reduced(rng, 2, 20) for _ in range(4)))
        if line_condition(Z):
            break
    P = span_combo(Z, 5, [F(1), F(2), F(3), F(4)])
    cert = certify_border_rank(P, Z, 5)
    assert cert.all_passed
    assert any("line-intersection criterion" in c.statement for c in cert.claims)


# --- constructors -----------------------------------------------------------


def test_construct_stratum_point_examples():
    Z, P, cert = construct_stratum_point(2, 9, StratumLabel.make([2, 1, 1]), seed=0)
    assert cert.all_passed and cert.value == 4
    fr, _ = flattening_rank(P)
    assert fr == 4

    Z, P, cert = construct_stratum_point(
        2, 9, StratumLabel.make([3, 1]), seed=1, non_collinear=True
    )
    assert cert.all_passed
    assert any("dominating scheme" in c.statement for c in cert.claims)

    Z, P, cert = construct_stratum_point(2, 7, StratumLabel.make([1, 1, 1]), seed=2)
    assert cert.all_passed
    assert any("symmetric rank = 3" in c.statement for c in cert.claims)


def test_construct_stratum_point_downgrades_outside_regime():
    Z, P, cert = construct_stratum_point(2, 5, StratumLabel.make([4]), seed=0)
    assert cert.all_passed
    assert any("membership only" in c.statement for c in cert.claims)


def test_construct_stratum_point_rejects_bad_labels():
    with pytest.raises(InputError):
        construct_stratum_point(2, 4, StratumLabel.make([5]), seed=0)
    with pytest.raises(InputError):
        construct_stratum_point(2, 3, StratumLabel.make([2, 2, 1]), seed=0)


def test_construct_line_jet_examples():
    Z, P, rec, cert = construct_line_jet(2, 6, 2, 1, seed=0)
    assert cert.all_passed and rec.size == 7 and cert.value == 7
    assert rec.expand() == P

    Z, P, rec, cert = construct_line_jet(2, 6, 2, 0, seed=0)
    assert cert.all_passed and rec.size == 6
    assert any("= d+2-t1" in c.statement for c in cert.claims)

    Z, P, rec, cert = construct_line_jet(3, 8, 3, 2, seed=0)
    assert cert.all_passed and rec.size == 9


def test_construct_line_jet_validates_ranges():
    with pytest.raises(InputError):
        construct_line_jet(2, 6, 1, 0, seed=0)
    with pytest.raises(InputError):
        construct_line_jet(2, 6, 4, 0, seed=0)
    with pytest.raises(InputError):
        construct_line_jet(2, 6, 2, 4, seed=0)


def test_construct_tangent_examples():
    Z, P, rec, cert = construct_tangent_plus_points(3, 5, 3, seed=0)
    assert cert.all_passed and rec.size == 6
    assert any("normal form verified" in c.statement for c in cert.claims)

    Z, P, rec, cert = construct_tangent_plus_points(3, 7, 4, seed=0)
    assert cert.all_passed and rec.size == 9

    Z, P, rec, cert = construct_tangent_plus_points(3, 5, 5, seed=0)
    assert cert.all_passed and rec.size == 8
    assert any(
        "border rank upper bound" in c.statement for c in cert.claims
    )


def test_construct_tangent_m2_tagged():
    Z, P, rec, cert = construct_tangent_plus_points(2, 6, 3, seed=0)
    assert cert.all_passed
    assert any("outside theorem hypotheses" in c.statement for c in cert.claims)


def test_construct_conic_double_cases():
    A, B, P, cert = construct_conic_double(5, [6], [6], seed=0)
    assert cert.all_passed and cert.value == 6
    for Z in (A, B):
        assert Z.m == 2 and rank_exact(span_matrix(Z, 5)) == 6

    A, B, P, cert = construct_conic_double(5, [4], [8], seed=0)
    assert cert.all_passed and cert.value == 4

    A, B, P, cert = construct_conic_double(5, [3, 3], [6], seed=0)
    assert cert.all_passed and cert.value == 6

    with pytest.raises(InputError):
        construct_conic_double(5, [6], [5], seed=0)


def test_terracini_examples():
    dim, cert = terracini_dim(2, 6, "secant", 3, seed=0)
    assert dim == 8 and cert.all_passed
    dim, cert = terracini_dim(2, 6, "tau", 3, seed=0)
    assert dim == 7 and cert.all_passed
    assert any("triple-point route" in c.statement for c in cert.claims)
    dim, cert = terracini_dim(2, 7, "osculating2", 2, seed=0)
    assert dim == 12 and cert.all_passed
    with pytest.raises(InputError):
        terracini_dim(2, 6, "nope", 3, seed=0)


def test_terracini_tau_fit_precondition():
    with pytest.raises(InputError):
        terracini_dim(2, 3, "tau", 4, seed=0)


def test_gamma_dims_shapes():
    rep = gamma_dims(2, 6, 3, seed=0)
    assert rep["alpha"] == 7 and rep["beta"] == 5
    assert rep["families"]["tangent_vector"]["codim_in_sigma"] == 1
    assert rep["families"]["double_tangent"] == {"skipped": "needs t >= 4"}
    assert rep["all_passed"]

    rep = gamma_dims(2, 6, 4, seed=0)
    assert rep["families"]["double_tangent"]["dim"] == 9
    assert rep["all_passed"]

    with pytest.raises(InputError):
        gamma_dims(2, 6, 7, seed=0)  # t > alpha - 1 = 6


def test_budget_bound_on_certified_pairs():
    for seed in range(3):
        _, _, rec, cert = construct_tangent_plus_points(3, 6, 4, seed=seed)
        b, r = 4, rec.size
        assert cert.all_passed and b + r <= 3 * 6 - 2
        _, _, rec, cert = construct_line_jet(2, 6, 3, 1, seed=seed)
        assert cert.all_passed and (3 + 1) + rec.size <= 3 * 6 - 2


def test_certificate_json_shape():
    Z, P, cert = construct_stratum_point(2, 7, StratumLabel.make([2, 1]), seed=4)
    obj = certificate_to_json(cert)
    assert obj["kind"] == "border_rank" and obj["value"] == 3
    assert all(set(c) == {"statement", "ranks", "passed"} for c in obj["claims"])
    assert obj["seed"] == 4 and "scheme" in obj

    Z, P, rec, cert = construct_line_jet(2, 6, 2, 0, seed=1)
    dobj = decomposition_to_json(rec)
    assert dobj["size"] == rec.size == len(dobj["summands"])
