import numpy as np
import pytest
from scipy.integrate import quad

from conftest import seeded_uniforms
from dirspace.criteria import (
    classify,
    dirichlet_membership,
    double_sum_ratio,
    rkt_probe,
    widom_profile,
    widom_tail,
)
from dirspace.measures import MeasureSpec
from dirspace.operators import cesaro_rkt_norm
from dirspace.symbols import SymbolSeq


def test_widom_tail_finite_symbol_exact_zero():
    b = widom_tail(SymbolSeq.explicit([1.0, 0.0]), 1, 100)
    assert b.lower == 0.0 and b.upper == 0.0 and not b.divergent


def test_widom_tail_hilbert_divergent():
    b = widom_tail(SymbolSeq.powerlog(1.0, 0.0), 4, 2000)
    assert b.divergent and b.upper == np.inf
    # partial sums outgrow any fixed cap
    deep = widom_tail(SymbolSeq.powerlog(1.0, 0.0), 4, 10**6)
    assert deep.lower > 10.0


def test_widom_tail_point_mass():
    s = SymbolSeq.from_measure(MeasureSpec.point_mass(0.5))
    b = widom_tail(s, 0, 64)
    # sum n 4^-n = (1/4)/(1-1/4)^2 = 4/9 (geometric-derivative closed form)
    x = 0.25
    oracle = x / (1.0 - x) ** 2
    assert b.lower <= oracle <= b.upper
    assert b.upper - b.lower <= 1e-12


def test_widom_tail_midpoints_nonincreasing_in_m():
    s = SymbolSeq.powerlog(1.0, 1.0)
    mids = [widom_tail(s, m, 4096).midpoint for m in (0, 4, 16, 64, 256)]
    for a, b in zip(mids, mids[1:]):
        assert b <= a + 1e-13


def test_widom_brackets_contain_deeper_oracle():
    # brackets from a 10x-deeper truncation nest inside the reported ones,
    # and the deeper partial sums stay below the upper ends
    for beta in (0.75, 1.0, 1.5):
        s = SymbolSeq.powerlog(1.0, beta)
        for m in (0, 16, 256):
            b = widom_tail(s, m, 2048)
            deep = widom_tail(s, m, 20480)
            eps = 1e-12 * max(b.upper, 1.0)
            assert b.lower - eps <= deep.lower and deep.upper <= b.upper + eps
            n = np.arange(m, 20481)
            partial10 = float(np.sum(n * s.values(n) ** 2))
            assert partial10 <= b.upper + eps


def test_widom_profile_finite_symbol_zero_beyond_support():
    pts = widom_profile(SymbolSeq.explicit([1.0, 0.5, 0.25]), [4, 8, 16], 64)
    for p in pts:
        assert p.lower == 0.0 and p.upper == 0.0


def _log_tail_integral(m: float, two_beta: float) -> float:
    """int_{m-1/2}^inf x (x+1)^-2 log(x+2)^-two_beta dx, via u = log(x+2)
    up to u = 200 plus the closed-form far tail (the integrand is u^-two_beta
    there to double precision)."""
    u0 = np.log(m + 1.5)
    val, _ = quad(
        lambda u: (lambda x: x * (x + 1.0) ** -2 * np.log(x + 2.0) ** -two_beta)(np.exp(u) - 2.0)
        * np.exp(u),
        u0,
        200.0,
        limit=300,
    )
    return val + 200.0 ** (1.0 - two_beta) / (two_beta - 1.0)


def test_widom_profile_plateau_for_log_symbol():
    # beta = 1: S(m) log(m+2) approaches a positive constant; the integral
    # int_m^inf dx/(x log^2 x) = 1/log m is the oracle for the plateau level
    s = SymbolSeq.powerlog(1.0, 1.0)
    pts = widom_profile(s, [2**j for j in range(4, 15)], 2**18)
    ups = [p.upper for p in pts]
    for u, p in zip(ups, pts):
        oracle = np.log(p.m + 2.0) * _log_tail_integral(p.m, 2.0)
        assert u == pytest.approx(oracle, rel=0.02)
    assert ups[-1] == pytest.approx(ups[-3], rel=0.01)  # plateau at the end


def test_widom_profile_decay_for_compact_symbol():
    # S(m) ~ 1/(2 log^2 m), so the normalized profile decays like 1/log m:
    # the 2^8 -> 2^14 ratio approaches log(2^8)/log(2^14) = 4/7 ~ 0.571
    pts = widom_profile(SymbolSeq.powerlog(1.0, 1.5), [2**j for j in range(4, 15)], 2**18)
    mid_8 = next(p for p in pts if p.m == 2**8).upper
    mid_14 = next(p for p in pts if p.m == 2**14).upper
    assert mid_14 < 0.6 * mid_8
    oracle = _log_tail_integral(2**14, 3.0) * np.log(2**14 + 2.0)
    assert mid_14 == pytest.approx(oracle, rel=0.02)


def test_widom_profile_rejects_bad_grid():
    with pytest.raises(ValueError):
        widom_profile(SymbolSeq.powerlog(1.0, 1.0), [16, 16], 256)


# -- classify -----------------------------------------------------------------


def test_classify_ladder():
    verdicts = {b: classify(SymbolSeq.powerlog(1.0, b), "hankel").verdict for b in (0.5, 1.0, 1.5)}
    assert verdicts == {0.5: "unbounded", 1.0: "bounded", 1.5: "compact"}


def test_classify_point_mass_compact():
    rep = classify(SymbolSeq.from_measure(MeasureSpec.point_mass(0.5)), "hankel")
    assert rep.verdict == "compact" and rep.applicability == "theorem-exact"


def test_classify_cesaro_log_symbol_bounded():
    rep = classify(SymbolSeq.powerlog(1.0, 1.0), "cesaro")
    assert rep.verdict == "bounded" and rep.applicability == "theorem-exact"


def test_classify_fast_decay_compact():
    # power decay faster than 1/n: loose one-sided remainders widen the
    # brackets, but the certified end-to-end decay still proves compactness
    assert classify(SymbolSeq.powerlog(1.3, 0.2, 0.7), "hankel").verdict == "compact"
    assert classify(SymbolSeq.powerlog(2.0, 0.0), "hankel").verdict == "compact"
    assert classify(SymbolSeq.lacunary_rule(2, 3.0, 1.2, 0.5, 0.8), "hankel").verdict == "compact"


def test_classify_cesaro_applicability():
    vals = seeded_uniforms(41, 0, 32) - 0.5  # sign-changing: not monotone
    rep = classify(SymbolSeq.explicit(vals), "cesaro")
    assert rep.applicability == "theorem-exact"
    rep2 = classify(SymbolSeq.explicit(vals), "hankel")
    assert rep2.applicability == "heuristic"
    assert any("carleson" in note.lower() for note in rep2.notes)


def test_classify_zero_symbol():
    rep = classify(SymbolSeq.explicit([0.0, 0.0]), "hankel")
    assert rep.verdict == "compact"


def test_classify_uncertified_unbounded_by_cap():
    # Lebesgue moments: density measure, remainder not certifiable, but the
    # partial sums blow past the divergence cap
    rep = classify(SymbolSeq.from_measure(MeasureSpec.lebesgue()), "hankel")
    assert rep.verdict == "unbounded"
    assert any("cap" in note for note in rep.notes)


def test_classify_uncertified_inconclusive():
    # a tame density measure: certification unavailable, partials small
    spec = MeasureSpec(densities=[{"c": 1.0, "gamma": 3.0}])
    rep = classify(SymbolSeq.from_measure(spec), "hankel")
    assert rep.verdict in ("inconclusive", "compact")  # must not claim compact...
    assert rep.verdict == "inconclusive"


def test_classify_kind_validation():
    with pytest.raises(ValueError):
        classify(SymbolSeq.powerlog(1.0, 1.0), "toeplitz")


# -- kernel probes ------------------------------------------------------------


def test_rkt_probe_hankel_at_zero():
    s = SymbolSeq.explicit([1.0, 0.5, 0.25])
    rep = rkt_probe(s, "hankel", [0.0], 16)
    # k_0 = 1, so the image is (lambda_0, lambda_1, ...) and the norm is
    # sqrt(1 + 1*(0.5)^2 + 2*(0.25)^2)
    want = np.sqrt(1.0 + 0.25 + 2 * 0.0625)
    assert rep.rows[0].estimate == pytest.approx(want, rel=1e-12)
    assert rep.notes  # ambiguity of the hankel compactness reading is flagged


def test_rkt_probe_cesaro_matches_closed_form():
    s = SymbolSeq.powerlog(1.0, 1.0)
    rep = rkt_probe(s, "cesaro", [0.2, 0.5, 0.8], 128)
    for row in rep.rows:
        assert row.estimate == pytest.approx(row.closed_form, rel=1e-12)
        assert row.closed_form == pytest.approx(cesaro_rkt_norm(s, row.t, 128), rel=0.05)


def test_rkt_probe_unbounded_symbol_grows():
    s = SymbolSeq.powerlog(1.0, 0.5)
    rep = rkt_probe(s, "hankel", [1.0 - 2.0**-j for j in range(1, 9)], 128)
    ests = [r.estimate for r in rep.rows]
    assert all(b > a for a, b in zip(ests, ests[1:]))
    assert rep.statistic == pytest.approx(max(ests))


# -- membership ---------------------------------------------------------------


def test_membership_explicit():
    b = dirichlet_membership(SymbolSeq.explicit([1.0]), 64)
    assert b.lower <= 1.0 <= b.upper and b.upper - b.lower < 1e-12


def test_membership_lacunary_cases():
    in_d = dirichlet_membership(SymbolSeq.lacunary_rule(1, 2.0, 0.5, 1.0))
    assert not in_d.divergent and np.isfinite(in_d.upper)
    out_d = dirichlet_membership(SymbolSeq.lacunary_rule(1, 2.0, 0.5, 0.0))
    assert out_d.divergent


def test_membership_hilbert_divergent():
    assert dirichlet_membership(SymbolSeq.powerlog(1.0, 0.0)).divergent


# -- double sum ---------------------------------------------------------------


def test_double_sum_basis_vector():
    lhs, rhs, ratio = double_sum_ratio([0.0, 1.0])
    assert lhs == pytest.approx(1.0 / np.log(3.0), rel=1e-14)
    assert rhs == 1.0
    assert ratio == pytest.approx(0.9102, abs=5e-5)


def test_double_sum_zero():
    assert double_sum_ratio([0.0, 0.0, 0.0]) == (0.0, 0.0, 0.0)


def test_double_sum_pair():
    lhs, rhs, ratio = double_sum_ratio([0.0, 1.0, 1.0])
    want = 1.0 / np.log(3.0) + 2.0 / np.log(4.0) + 1.0 / np.log(5.0)
    assert lhs == pytest.approx(want, rel=1e-14)
    assert rhs == 3.0
    assert ratio == pytest.approx(want / 3.0, rel=1e-14)


def test_double_sum_index_zero_ignored():
    assert double_sum_ratio([5.0, 1.0])[0] == double_sum_ratio([0.0, 1.0])[0]


def test_double_sum_rejects_negative():
    with pytest.raises(ValueError):
        double_sum_ratio([0.0, -1.0])


def test_double_sum_battery_bounded():
    mx = 0.0
    for i in range(200):
        length = 2 + int(seeded_uniforms(4242, i, 1)[0] * 255)
        vec = seeded_uniforms(4243, i, length)
        mx = max(mx, double_sum_ratio(vec)[2])
    assert mx <= 10.0


def test_route_consistency_on_ladder():
    """Verdicts, probe growth, and section-norm growth order the three
    calibration symbols the same way."""
    from dirspace.operators import section_matrix, top_singular_value

    order = {"unbounded": 2, "bounded": 1, "compact": 0}
    betas = (1.5, 1.0, 0.5)
    verdict_rank = [order[classify(SymbolSeq.powerlog(1.0, b), "hankel").verdict] for b in betas]
    assert verdict_rank == sorted(verdict_rank)

    # probe statistic at t close to 1 sorts the same way
    t_hi = [
        rkt_probe(SymbolSeq.powerlog(1.0, b), "hankel", [1.0 - 2.0**-8], 128).statistic
        for b in betas
    ]
    assert t_hi == sorted(t_hi)

    # section-norm growth factor over N in {64, 512} sorts the same way
    growth = []
    for b in betas:
        s = SymbolSeq.powerlog(1.0, b)
        lo, _ = top_singular_value(section_matrix(s, "hankel", "dirichlet-section", 64))
        hi, _ = top_singular_value(section_matrix(s, "hankel", "dirichlet-section", 512))
        growth.append(hi / lo)
    assert growth == sorted(growth)
