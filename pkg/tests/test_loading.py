import math

import pytest

from elastopinn.errors import EmptyProgram, OutOfRange
from elastopinn.loading import (
    AXIAL,
    build_biaxial,
    build_uniaxial_cycles,
    LoadingProgram,
)


def test_single_triangle_duration():
    prog = build_uniaxial_cycles(0.01, [0.01])
    assert prog.total_duration == pytest.approx(2.0, rel=1e-14)
    assert prog.cycles == 1


def test_empty_amplitudes_rejected():
    with pytest.raises(EmptyProgram):
        build_uniaxial_cycles(0.01, [])


def test_three_cycles_monotone_time():
    prog = build_uniaxial_cycles(0.01, [0.01, 0.02, 0.03])
    assert prog.cycles == 3
    bounds = prog.segment_bounds()
    assert len(bounds) == 6
    assert all(ta < tb for ta, tb, _ in bounds)
    assert bounds[-1][1] == pytest.approx(12.0, rel=1e-14)
    # total duration equals the segment sum
    assert prog.total_duration == pytest.approx(sum(s.duration for s in prog.segments))


def test_uniaxial_controls():
    prog = build_uniaxial_cycles(0.01, [0.01])
    c = prog.control_at(0.0)
    assert c.strain_rates[AXIAL] == pytest.approx(0.01)
    assert c.stress_holds == {1: 0.0, 2: 0.0}
    assert c.strain_rates[3] == 0.0
    # after the peak the axial rate reverses
    c2 = prog.control_at(1.5)
    assert c2.strain_rates[AXIAL] == pytest.approx(-0.01)


def test_control_boundary_belongs_to_later_segment():
    prog = build_uniaxial_cycles(0.01, [0.01])
    c = prog.control_at(1.0)
    assert c.strain_rates[AXIAL] == pytest.approx(-0.01)


def test_control_out_of_range():
    prog = build_uniaxial_cycles(0.01, [0.01])
    with pytest.raises(OutOfRange):
        prog.control_at(2.5)
    with pytest.raises(OutOfRange):
        prog.control_at(-0.1)


def test_ubc_trace_free_rates():
    prog = build_biaxial("UBC", -100.0, 0.005, cycles=2, amplitude=0.01)
    for t in (0.0, 0.7, 1.99, 3.5):
        c = prog.control_at(t)
        assert not c.stress_holds
        assert sum(c.strain_rates[i] for i in (0, 1, 2)) == pytest.approx(0.0, abs=1e-18)
        assert c.strain_rates[1] == pytest.approx(-c.strain_rates[0] / 2.0)


def test_bc_initial_stress_and_holds():
    prog = build_biaxial("BC", -100.0, 0.005, cycles=1)
    assert prog.initial_stress.v[0] == -100.0
    assert prog.initial_stress.v[1] == -100.0
    assert prog.initial_stress.v[2] == -100.0
    c = prog.control_at(0.0)
    assert c.stress_holds == {1: -100.0, 2: -100.0}
    assert c.strain_rates[AXIAL] == pytest.approx(-0.005)


def test_ubcs_cosine_rate():
    prog = build_biaxial("UBCS", -100.0, 0.005, cycles=3)
    c = prog.control_at(0.5)
    assert c.strain_rates[AXIAL] == pytest.approx(0.005 * math.cos(math.pi / 2.0), abs=1e-18)
    c0 = prog.control_at(0.0)
    assert c0.strain_rates[AXIAL] == pytest.approx(0.005)
    # undrained at every instant
    for t in (0.0, 0.3, 1.2, 5.9):
        c = prog.control_at(t)
        assert sum(c.strain_rates[i] for i in (0, 1, 2)) == pytest.approx(0.0, abs=1e-18)
    assert prog.total_duration == pytest.approx(6.0)


def test_descriptor_roundtrip():
    prog = build_biaxial("UBCS", -100.0, 0.005, cycles=2)
    d = prog.descriptor()
    back = LoadingProgram.from_descriptor(d)
    assert back == prog


def test_tension_compression_mode():
    prog = build_uniaxial_cycles(0.01, [0.01], mode="tension_compression")
    assert prog.total_duration == pytest.approx(4.0)
    assert prog.control_at(1.5).strain_rates[AXIAL] == pytest.approx(-0.01)
    assert prog.control_at(3.5).strain_rates[AXIAL] == pytest.approx(0.01)
