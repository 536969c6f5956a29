import numpy as np
import pytest

from dirspace.measures import (
    Density,
    MeasureSpec,
    _density_moment_adaptive,
    _density_moments_graded,
    classify_measure,
    moment_sequence,
)


def test_lebesgue_moments_closed_form():
    spec = MeasureSpec.lebesgue()
    assert spec.moment(9) == pytest.approx(0.1, abs=1e-14)
    n = np.arange(200)
    assert np.allclose(spec.moments(n), 1.0 / (n + 1.0), atol=1e-14)


def test_atom_moments():
    spec = MeasureSpec.point_mass(0.3, mass=2.0)
    n = np.arange(20)
    assert np.allclose(spec.moments(n), 2.0 * 0.3**n)
    assert spec.moment(0) == pytest.approx(2.0)


def test_linear_density_moment():
    # w(t) = 2t dt: moments 2/(n+2), via the t^kappa extension of the family
    spec = MeasureSpec(densities=[Density(c=2.0, gamma=0.0, kappa=1.0)])
    for n in (0, 1, 5, 17):
        assert spec.moment(n) == pytest.approx(2.0 / (n + 2.0), abs=1e-13)


def test_mixture_linearity():
    mix = MeasureSpec(atoms=[(0.5, 0.5)], densities=[Density(c=0.5, gamma=0.0)])
    # n = 1: 0.5 * 0.5 + 0.5 * 1/2 = 1/2
    assert mix.moment(1) == pytest.approx(0.5, abs=1e-14)
    atom = MeasureSpec.point_mass(0.5, 0.5)
    leb = MeasureSpec(densities=[Density(c=0.5, gamma=0.0)])
    n = np.arange(50)
    assert np.allclose(mix.moments(n), atom.moments(n) + leb.moments(n), atol=1e-13)


def test_moments_monotone_and_mass():
    spec = MeasureSpec(atoms=[(0.2, 1.0), (0.7, 0.5)], densities=[Density(c=1.0, gamma=1.5)])
    mom = spec.moments(np.arange(65))
    assert np.all(np.diff(mom) < 0.0)
    assert np.all(mom > 0.0)
    assert mom[0] == pytest.approx(spec.total_mass, abs=1e-12)


def test_geometric_domination():
    spec = MeasureSpec(atoms=[(0.4, 1.0), (0.8, 2.0)])
    rho = spec.support_sup
    mom = spec.moments(np.arange(1, 65))
    assert np.all(mom <= spec.total_mass * rho ** np.arange(1, 65) + 1e-15)


def test_beta_moment_vs_quadrature_paths():
    # gamma in (-1, 0): closed Beta form against the substitution quadrature
    # route (delta = 0 forced through the adaptive path via a tiny delta)
    from scipy.special import betaln

    d = Density(c=1.3, gamma=-0.5)
    for n in (0, 3, 11):
        closed = 1.3 * np.exp(betaln(n + 1.0, 0.5))
        assert MeasureSpec(densities=[d]).moment(n) == pytest.approx(closed, abs=1e-12)


def test_log_density_adaptive_vs_graded():
    # delta != 0 engages both quadrature routes; they must agree
    for gamma, delta in [(-0.5, 1.0), (0.5, -0.5), (1.0, 2.0)]:
        d = Density(c=1.0, gamma=gamma, delta=delta)
        n_arr = np.array([0, 1, 7, 40, 300])
        graded = _density_moments_graded(d, n_arr)
        for i, n in enumerate(n_arr):
            adaptive = _density_moment_adaptive(d, int(n))
            assert graded[i] == pytest.approx(adaptive, rel=1e-9, abs=1e-13)


def test_log_density_against_mpmath():
    import mpmath

    d = Density(c=1.0, gamma=-0.25, delta=1.5)
    for n in (0, 5):
        want = mpmath.quad(
            lambda t: t**n * (1 - t) ** mpmath.mpf("-0.25") * (1 - mpmath.log(1 - t)) ** (-1.5),
            [0, 1],
        )
        assert _density_moment_adaptive(d, n) == pytest.approx(float(want), rel=1e-10)


def test_validation_errors():
    with pytest.raises(ValueError):
        MeasureSpec(atoms=[(1.0, 1.0)])  # atom at 1 rejected
    with pytest.raises(ValueError):
        MeasureSpec(atoms=[(0.5, 0.0)])  # nonpositive mass
    with pytest.raises(ValueError):
        Density(c=1.0, gamma=-1.0)  # not integrable
    with pytest.raises(ValueError):
        Density(c=-1.0, gamma=0.0)  # measures are positive
    with pytest.raises(ValueError):
        MeasureSpec.lebesgue().moment(-1)


def test_moment_sequence_symbol():
    sym = moment_sequence(MeasureSpec.point_mass(0.5), 16)
    assert sym.monotone_flag == "decreasing-positive"
    assert np.allclose(sym.values(np.arange(5)), [1, 0.5, 0.25, 0.125, 0.0625])


def test_moment_sequence_zero_measure():
    sym = moment_sequence(MeasureSpec())
    assert np.all(sym.values(np.arange(8)) == 0.0)


def test_classify_measure_verdicts():
    assert classify_measure(MeasureSpec.point_mass(0.5), "hankel").verdict == "compact"
    assert classify_measure(MeasureSpec.lebesgue(), "hankel").verdict == "unbounded"
    assert classify_measure(MeasureSpec(), "hankel").verdict == "compact"
    rep = classify_measure(MeasureSpec.point_mass(0.5), "cesaro")
    assert rep.applicability == "theorem-exact"


def test_describe_roundtrip():
    spec = MeasureSpec(atoms=[(0.25, 1.5)], densities=[Density(c=2.0, gamma=0.5, delta=1.0)])
    again = MeasureSpec.from_dict(spec.describe())
    n = np.arange(30)
    assert np.allclose(spec.moments(n), again.moments(n))
    named = MeasureSpec.from_dict({"named": "lebesgue"})
    assert named.moment(9) == pytest.approx(0.1)
