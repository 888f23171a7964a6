import numpy as np
import pytest

from cgameet.conformal import E12, E13
from cgameet.locus import (
    Branch,
    SweepConfig,
    hyperbola_check,
    meet_at,
    sign_region,
    sweep,
)
from cgameet.meet import Classification, Configuration, circle_circle

CC = Configuration.CIRCLE_CIRCLE
SS = Configuration.SPHERE_SPHERE
CL = Configuration.CIRCLE_LINE
SP = Configuration.SPHERE_PLANE


def test_virtual_samples_on_hyperbola():
    samples = sweep(SweepConfig(CC, 1.0, 1.0), [3, 4, 5])
    for s in samples:
        assert s.classification is Classification.VIRTUAL
        for x, y in s.locus:
            assert abs(x * x - y * y - 1.0) < 1e-9
        assert s.points == ()


def test_inner_tangency():
    (s,) = sweep(SweepConfig(CC, 1.0, 2.0), [1.0])
    assert s.classification is Classification.TANGENT
    assert len(s.points) == 1


def test_sphere_sweep_descriptor():
    (s,) = sweep(SweepConfig(SS, 1.0, 1.0, axis=(0, 0, 1)), [3.0])
    assert s.classification is Classification.VIRTUAL
    assert s.circle.imaginary
    assert s.circle.radius**2 == pytest.approx(1.25)
    assert np.allclose(s.circle.center, [0, 0, 1.5])
    assert abs(abs(s.circle.normal[2]) - 1) < 1e-12


def test_rejects_nonpositive_distances():
    with pytest.raises(ValueError):
        sweep(SweepConfig(CC, 1.0, 1.0), [1.0, 0.0])
    with pytest.raises(ValueError):
        SweepConfig(CC, 1.0)
    with pytest.raises(ValueError):
        SweepConfig(SP, -1.0)


def test_sign_region_examples():
    region = sign_region(1, 2)
    assert region(0.5) == -1
    assert region(1.5) == 1
    assert region(3) == 0
    assert region(1) == 0
    assert region(4) == -1
    with pytest.raises(ValueError):
        sign_region(0, 1)


def test_sign_region_matches_meet(rng):
    for _ in range(200):
        r1, r2 = rng.uniform(0.1, 3, 2)
        d = rng.uniform(0.01, 7)
        region = sign_region(r1, r2)
        out = circle_circle([0, 0, 0], r1, [d, 0, 0], r2)
        expected = {Classification.REAL: 1, Classification.TANGENT: 0, Classification.VIRTUAL: -1}
        assert region.sign(d, rtol=1e-9) == expected[out.classification]


def test_hyperbola_report():
    config = SweepConfig(CC, 1.0, 1.0)
    report = hyperbola_check(sweep(config, np.linspace(3, 100, 200)))
    assert report.count == 200
    assert report.max_residual < 1e-9
    assert report.slope_deviation < 1e-3
    assert report.slope_d == pytest.approx(100)


def test_hyperbola_report_empty():
    report = hyperbola_check([])
    assert report.count == 0 and report.max_residual is None and report.slope_deviation is None


@pytest.mark.parametrize("config", [SweepConfig(CL, 1.3), SweepConfig(SP, 0.7, axis=(1, 2, 2))])
def test_flat_sweeps(config):
    ds = np.linspace(0.05, 4, 40)
    for s in sweep(config, ds):
        assert abs(s.r_squared + s.d * s.d - s.r1 * s.r1) < 1e-9
        assert s.d1 == pytest.approx(s.d)
        assert s.branch is Branch.NEAR


def test_branch_symmetry():
    right = sweep(SweepConfig(CC, 1.0, 1.5, axis=(1, 0, 0)), [3.0, 0.2])
    left = sweep(SweepConfig(CC, 1.0, 1.5, axis=(-1, 0, 0)), [3.0, 0.2])
    for a, b in zip(right, left):
        assert a.d1 == pytest.approx(b.d1)
        assert a.r_squared == pytest.approx(b.r_squared)
        assert a.branch is b.branch
    # world points mirror across x = 0
    a, b = meet_at(SweepConfig(CC, 1.0, 1.0), 1.0), meet_at(SweepConfig(CC, 1.0, 1.0, axis=(-1, 0, 0)), 1.0)
    assert np.allclose(a.c * [-1, 1, 1], b.c)
    # inner configuration puts the pair on the far side of c1
    assert right[1].branch is Branch.FAR
    assert right[0].branch is Branch.NEAR


def test_sphere_sections_reproduce_planar():
    ds = np.linspace(0.1, 6, 30)
    for axis, plane in (((1, 0, 0), E12), ((0, 0, 1), E13)):
        flat = sweep(SweepConfig(CC, 1.0, 1.7, axis=axis, plane=plane), ds)
        solid = sweep(SweepConfig(SS, 1.0, 1.7, axis=axis), ds)
        for a, b in zip(flat, solid):
            assert abs(a.r_squared - b.r_squared) < 1e-9
            assert abs(a.d1 - b.d1) < 1e-9
            assert a.classification is b.classification


def test_asymptotic_cone():
    samples = sweep(SweepConfig(SS, 1.0, 1.0), [10, 100, 1000])
    ratios = [np.sqrt(-s.r_squared) / abs(s.d1) for s in samples]
    assert all(0 < r < 1 for r in ratios)
    assert ratios == sorted(ratios)
    assert 1 - ratios[-1] < 1e-5


def test_offset_sweep_frame(rng):
    c1 = np.array([0.4, -1.2, 0.0])
    config = SweepConfig(CC, 0.8, 1.1, c1=c1, axis=(1, 1, 0))
    for s in sweep(config, [0.5, 1.0, 1.5]):
        if s.points:
            for p in s.points:
                local = p - c1
                x = local @ config.axis
                y = local @ config.transverse
                assert x == pytest.approx(s.d1)
                assert abs(y) == pytest.approx(s.locus[0][1])
