import json
import math

import pytest

import pairwords as pw


def test_letter_law_and_word_counts():
    assert pw.letter_prob(0.25, 1) == pytest.approx(0.25)
    assert pw.letter_prob(0.25, 3) == pytest.approx(0.25 * 0.75**2)
    word = pw.sample_word(0.3, 500, seed=5, index=2)
    assert len(word) == 500
    assert word == pw.sample_word(0.3, 500, seed=5, index=2)
    x1, x2, x3 = pw.pair_counts(word)
    assert x2 == x1 + x3
    assert pw.pair_counts([1, 1, 2, 1, 1]) == (1, 3, 2)


def test_avoidance_routes_agree():
    pairs = pw.parse_pairs("(1,1),(2,3)")
    assert pairs == [(1, 1), (2, 3)]
    coeffs = pw.avoidance_gf_coefficients(0.5, pairs, 8)
    for n in range(8):
        m = pw.avoid_prob_matrix(0.5, pairs, n)
        assert m == pytest.approx(pw.avoid_prob_enum(0.5, pairs, n), abs=1e-12)
        assert m == pytest.approx(coeffs[n], abs=1e-12)
    lam, c1 = pw.dominant_eigen(0.3, [(1, 1), (2, 2)])
    assert lam == pytest.approx(0.883639, abs=1e-6)
    assert c1 == pytest.approx(1.11248, abs=1e-5)


def test_symbolic_series():
    s = pw.series("(i,i)", 4)
    assert s["lambda"] == "1 - Pi^2 + Pi^3 - 2*Pi^4"
    assert s["C1"] == "1 + Pi^2 - 2*Pi^3 + 6*Pi^4"


def test_exact_and_asymptotic_means():
    assert pw.prob_pair_occurs(0.5, 1, 1, 5) == pytest.approx(19 / 32)
    assert pw.joint_prob(0.5, (1, 2), (2, 1), 2) == 0.0
    exact = pw.mean_total(0.25, 10000)
    assert exact["x2"] == pytest.approx(exact["x1"] + exact["x3"])
    m = pw.mean_x1(0.25, 10000)
    assert m["value"] == pytest.approx(12.692, abs=1e-3)
    assert m["value"] == pytest.approx(m["smooth"] + m["periodic"] + m["correction"])
    assert pw.var_x1(0.25, 10000)["value"] == pytest.approx(1.205, abs=1e-3)
    assert pw.mean_x3(0.25, 500000)["value"] == pytest.approx(750.195, abs=0.01)
    assert [abs(c) for c in pw.cumulant_coefficients(4)] == [1, 7, 12, 6]


def test_limit_density_and_covariance():
    mass = sum(pw.limit_density_f(0.25, 0.3 + k) for k in range(-30, 40))
    assert mass == pytest.approx(1.0, abs=2e-5)
    assert pw.limit_cdf_F(0.25, 20.0) == pytest.approx(1.0, abs=1e-6)
    t = pw.cov_main_term(0.2, (1, 2), (3, 4), 1000.0)
    assert t["label"] == "4" and t["main"] == 0.0
    with pytest.raises(ValueError):
        pw.cov_main_term(0.2, (1, 2), (1, 2), 10.0)


def test_simulation_is_deterministic():
    a = pw.simulate(0.25, 2000, 300, seed=9, workers=1)
    b = pw.simulate(0.25, 2000, 300, seed=9, workers=2)
    assert a == b
    assert sum(a["x1"]["histogram"].values()) == 300
    assert a["x2"]["mean"] == pytest.approx(a["x1"]["mean"] + a["x3"]["mean"])
    with pytest.raises(pw.ResourceCapExceeded):
        pw.simulate(0.25, 10**9, 10**4, seed=1)


def test_cli_in_process():
    code, out, _ = pw.cli("avoid", "--p", "0.5", "--pairs", "(1,1)", "--n", "0", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"inputs", "values", "tail_bound", "periodic_part", "seed"}
    assert doc["values"][0]["value"] == 1
    code, _, err = pw.cli("simulate", "--p", "0.25", "--n", "10", "--words", "5")
    assert code == 2 and "seed" in err
    code, out, _ = pw.cli("exact", "m2", "--p", "0.25", "--n", "100000", "--format", "json")
    assert code == 1
    assert json.loads(out)["error"]["reason"] == "budget"
    assert not math.isnan(pw.F1_prime_at_0(0.5))
