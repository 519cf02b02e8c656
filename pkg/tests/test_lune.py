import random

import pytest
from hypothesis import given, settings, strategies as st

from circlepack import lune, square
from circlepack.errors import InvalidInput
from circlepack.geometry import Tangency, bisect_tangent_radius, tangency_residual
from digits import matches_last_digit


def test_minor_step_examples():
    assert lune.minor_step(0.25, 0.5, 1.0) == pytest.approx(0.12773958089728293, rel=1e-15)
    assert lune.minor_step(4 / 33, 0.5, 1.0) == pytest.approx(4 / 57, rel=1e-14)


def test_minor_step_is_square_recurrence_for_half_radius():
    rng = random.Random(3)
    for _ in range(100):
        R = rng.uniform(0.1, 10)
        r = rng.uniform(1e-4, 0.5) * R
        assert lune.minor_step(r, R / 2, R) == pytest.approx(square.recurrence_step(r, R), rel=1e-12)


def test_steps_reject_overfull_pair():
    with pytest.raises(InvalidInput):
        lune.minor_step(0.6, 0.5, 1.0)
    with pytest.raises(InvalidInput):
        lune.major_step(0.6, 0.5, 1.0)
    with pytest.raises(InvalidInput):
        lune.major_step(0.0, 0.5, 1.0)


def test_max_major_radius_examples():
    assert lune.max_major_radius(0.5, 1.0) == pytest.approx(4 / 9, rel=1e-15)
    assert lune.max_major_radius(1 / 3, 1.0) == pytest.approx(0.5, rel=1e-15)
    with pytest.raises(InvalidInput):
        lune.max_major_radius(1.0, 1.0)


def test_max_major_pair_meets_on_axis():
    b, R = 0.3, 2.0
    r = lune.max_major_radius(b, R)
    spec = lune.LuneSpec(R, r, b, 0, 1)
    start = lune.frame(spec)["a"]
    _, major = lune.pack_lune(spec)
    mirror = major.circles[0]
    assert start.y == pytest.approx(r, rel=1e-12)
    assert mirror.cy == pytest.approx(-r, rel=1e-12)
    assert mirror.cx == pytest.approx(start.x, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(R=st.floats(0.1, 10), bf=st.floats(0.001, 0.999))
def test_fixed_point(R, bf):
    b = bf * R
    r = lune.max_major_radius(b, R)
    assert lune.major_step(r, b, R) == pytest.approx(r, rel=1e-12)


def test_major_step_example_is_tangent():
    r = lune.major_step(0.25, 0.5, 1.0)
    assert 0.25 < r <= 0.5
    spec = lune.LuneSpec(1.0, 0.25, 0.5, 0, 1)
    fixed = lune.frame(spec)
    c = lune.pack_lune(spec)[1].circles[0].placed()
    assert tangency_residual(c, fixed["R"], Tangency.INTERNAL) <= 1e-9
    assert tangency_residual(c, fixed["b"], Tangency.EXTERNAL) <= 1e-9
    assert tangency_residual(c, fixed["a"], Tangency.EXTERNAL) <= 1e-9


def test_classify_resonance():
    assert lune.classify_resonance(4 / 9, 0.5, 1.0) is lune.Resonance.NON_RESONANT
    assert lune.classify_resonance(0.25, 0.5, 1.0) is lune.Resonance.RESONANT
    assert lune.classify_resonance(4 / 9 * (1 + 1e-15), 0.5, 1.0) is lune.Resonance.NON_RESONANT


def test_minor_chain_matches_square_table_rows():
    minor, _ = lune.pack_lune(lune.LuneSpec(1.0, 0.25, 0.5, 3, 0))
    assert all(matches_last_digit(r, p) for r, p in zip(minor.radii, ["0.1277", "0.0732", "0.0465"]))


def test_near_fixed_point_chain_peaks_then_descends():
    a = 4 / 9 - 1e-3
    _, major = lune.pack_lune(lune.LuneSpec(1.0, a, 0.5, 0, 20))
    radii = major.radii
    peak = radii.index(max(radii))
    assert abs(radii[peak] - 4 / 9) <= 1e-3
    assert all(x < y for x, y in zip([a] + radii[:peak], radii[: peak + 1]))
    assert all(x > y for x, y in zip(radii[peak:], radii[peak + 1 :]))
    assert major.extra_columns["phase"][peak] == "at_max"
    assert lune.verify(major, 1e-9).passed


@pytest.mark.parametrize("a, b, R", [(0.05, 0.5, 1.0), (0.01, 0.3, 1.0), (0.2, 2.0, 3.0), (0.25, 0.5, 1.0)])
def test_major_chain_unimodal_without_repeats(a, b, R):
    _, major = lune.pack_lune(lune.LuneSpec(R, a, b, 0, 60))
    radii = major.radii
    assert len(set(radii)) == len(radii)
    peak = radii.index(max(radii))
    assert all(x < y for x, y in zip(radii[:peak], radii[1 : peak + 1]))
    assert all(x > y for x, y in zip(radii[peak:], radii[peak + 1 :]))
    # The largest member lies between the symmetric pair and the circle centred on the axis.
    assert lune.max_major_radius(b, R) * (1 - 1e-12) <= radii[peak] <= (R - b) * (1 + 1e-12)
    phases = major.extra_columns["phase"]
    assert set(phases[:peak]) <= {"ascending"}
    assert set(phases[peak + 1 :]) <= {"descending"}


def test_major_chain_members_match_oracle():
    spec = lune.LuneSpec(1.0, 0.05, 0.5, 0, 8)
    fixed = lune.frame(spec)
    _, major = lune.pack_lune(spec)
    prev = fixed["a"]
    for c in major.circles:
        p = c.placed()
        # Both neighbours of ``prev`` solve the same tangency problem; the oracle
        # must find this one inside a bracket that excludes the other.
        lo, hi = sorted((c.radius * 0.99, c.radius * 1.01))
        found = bisect_tangent_radius(
            [(fixed["R"], Tangency.INTERNAL), (fixed["b"], Tangency.EXTERNAL), (prev, Tangency.EXTERNAL)],
            bracket=(lo, hi),
        )
        assert found == pytest.approx(c.radius, rel=1e-9)
        prev = p


def test_degenerate_start_flags_and_mirrors():
    minor, major = lune.pack_lune(lune.LuneSpec(1.0, 0.5, 0.5, 10, 10))
    assert minor.meta["degenerate"] and major.meta["degenerate"]
    assert minor.radii == pytest.approx(major.radii, rel=1e-14)
    for m, n in zip(minor.circles, major.circles):
        assert m.cx == pytest.approx(n.cx, abs=1e-12)
        assert m.cy == pytest.approx(-n.cy, abs=1e-12)
    assert lune.verify(minor, 1e-9).passed and lune.verify(major, 1e-9).passed


def test_minor_and_major_sides_opposite():
    minor, major = lune.pack_lune(lune.LuneSpec(1.0, 0.25, 0.5, 5, 5))
    assert all(c.cy > 0 for c in minor.circles)
    assert major.circles[-1].cy < 0


@pytest.mark.parametrize(
    "kwargs",
    [dict(R=1, a=0.6, b=0.5), dict(R=1, a=0.2, b=1.0), dict(R=1, a=1.0, b=0.1), dict(R=0, a=0.1, b=0.1), dict(R=1, a=0.1, b=0.1, minor_count=-1)],
)
def test_spec_validation(kwargs):
    with pytest.raises(InvalidInput):
        lune.LuneSpec(**kwargs)


def test_zero_counts_give_empty_chains():
    minor, major = lune.pack_lune(lune.LuneSpec(1.0, 0.25, 0.5))
    assert len(minor) == 0 and len(major) == 0


@settings(max_examples=60, deadline=None)
@given(R=st.floats(0.1, 10), af=st.floats(0.01, 0.9), bf=st.floats(0.01, 0.9))
def test_every_chain_verifies(R, af, bf):
    if af + bf > 1.0:
        return
    minor, major = lune.pack_lune(lune.LuneSpec(R, af * R, bf * R, 25, 40))
    for seq in (minor, major):
        rep = lune.verify(seq, 1e-9)
        assert rep.passed, rep.failures()[:3]
    assert all(y < x for x, y in zip(minor.radii, minor.radii[1:]))
