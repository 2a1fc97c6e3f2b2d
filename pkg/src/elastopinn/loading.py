"""Declarative loading programs for the constitutive driver.

A program is an ordered list of segments.  Within a segment each Voigt
channel is either strain-rate controlled (constant rate, or a cosine rate
for the sinusoidal biaxial case) or held at a target stress.  Segment
boundaries are half-open [t_start, t_end) so control lookup is
deterministic at the joints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import EmptyProgram, OutOfRange
from .voigt import SymTensor

AXIAL = 0            # 11-channel carries the axial drive
LATERAL = (1, 2)     # 22/33 normal channels
SHEARS = (3, 4, 5)

RATE = "rate"
HOLD = "hold"
RATE_COSINE = "rate_cosine"   # rate(t) = value * cos(pi * t), t = global time


@dataclass(frozen=True)
class ChannelControl:
    kind: str
    value: float

    def rate_at(self, t: float) -> float:
        if self.kind == RATE:
            return self.value
        if self.kind == RATE_COSINE:
            return self.value * math.cos(math.pi * t)
        raise ValueError(f"channel is not strain-controlled: {self.kind}")


@dataclass(frozen=True)
class Segment:
    duration: float
    controls: tuple[ChannelControl, ...]


@dataclass(frozen=True)
class ControlSample:
    """Per-channel controls evaluated at one instant."""

    strain_rates: dict[int, float]
    stress_holds: dict[int, float]


@dataclass(frozen=True)
class LoadingProgram:
    segments: tuple[Segment, ...]
    initial_stress: SymTensor = field(default_factory=SymTensor.zero)
    description: str = ""
    cycles: int = 1

    def __post_init__(self):
        if not self.segments:
            raise EmptyProgram(self.description or "no segments")
        for seg in self.segments:
            if not seg.duration > 0.0:
                raise ValueError(f"segment duration {seg.duration} must be > 0")
            if len(seg.controls) != 6:
                raise ValueError("each segment needs 6 channel controls")
            if not any(c.kind != HOLD for c in seg.controls):
                raise ValueError("at least one channel must be strain-controlled")

    @property
    def total_duration(self) -> float:
        return sum(seg.duration for seg in self.segments)

    def segment_bounds(self) -> list[tuple[float, float, Segment]]:
        bounds = []
        t = 0.0
        for seg in self.segments:
            bounds.append((t, t + seg.duration, seg))
            t += seg.duration
        return bounds

    def segment_at(self, t: float) -> tuple[float, float, Segment]:
        total = self.total_duration
        if t < 0.0 or t > total:
            raise OutOfRange(f"t={t} outside [0, {total}]")
        for ta, tb, seg in self.segment_bounds():
            if ta <= t < tb:
                return ta, tb, seg
        # exactly the end point: belongs to the final segment
        ta, tb, seg = self.segment_bounds()[-1]
        return ta, tb, seg

    def control_at(self, t: float) -> ControlSample:
        _, _, seg = self.segment_at(t)
        rates = {}
        holds = {}
        for ch, ctl in enumerate(seg.controls):
            if ctl.kind == HOLD:
                holds[ch] = ctl.value
            else:
                rates[ch] = ctl.rate_at(t)
        return ControlSample(strain_rates=rates, stress_holds=holds)

    def descriptor(self) -> dict:
        return {
            "description": self.description,
            "cycles": self.cycles,
            "initial_stress": list(self.initial_stress.v),
            "segments": [
                {
                    "duration": seg.duration,
                    "controls": [{"kind": c.kind, "value": c.value} for c in seg.controls],
                }
                for seg in self.segments
            ],
        }

    @classmethod
    def from_descriptor(cls, d: dict) -> "LoadingProgram":
        segments = tuple(
            Segment(
                duration=float(s["duration"]),
                controls=tuple(ChannelControl(c["kind"], float(c["value"]))
                               for c in s["controls"]),
            )
            for s in d["segments"]
        )
        return cls(
            segments=segments,
            initial_stress=SymTensor(tuple(float(x) for x in d["initial_stress"])),
            description=d.get("description", ""),
            cycles=int(d.get("cycles", 1)),
        )


def _uniaxial_controls(axial_rate: float) -> tuple[ChannelControl, ...]:
    # lateral normal stresses held at zero: uniaxial-stress interpretation
    return (
        ChannelControl(RATE, axial_rate),
        ChannelControl(HOLD, 0.0),
        ChannelControl(HOLD, 0.0),
        ChannelControl(RATE, 0.0),
        ChannelControl(RATE, 0.0),
        ChannelControl(RATE, 0.0),
    )


def build_uniaxial_cycles(rate: float, amplitudes, mode: str = "tension_only") -> LoadingProgram:
    """Strain-controlled axial cycles at a constant rate, lateral stress free.

    ``tension_only`` ramps 0 -> a -> 0 per amplitude; ``tension_compression``
    ramps 0 -> a -> -a -> 0.
    """
    if rate <= 0.0:
        raise ValueError(f"rate={rate} must be > 0")
    amplitudes = list(amplitudes)
    if not amplitudes:
        raise EmptyProgram("no amplitudes")
    if any(b <= a for a, b in zip(amplitudes, amplitudes[1:])):
        raise ValueError("amplitudes must be strictly increasing")
    if mode not in ("tension_only", "tension_compression"):
        raise ValueError(f"unknown mode {mode!r}")

    segments = []
    for amp in amplitudes:
        if mode == "tension_only":
            legs = [(rate, amp / rate), (-rate, amp / rate)]
        else:
            legs = [(rate, amp / rate), (-rate, 2.0 * amp / rate), (rate, amp / rate)]
        for leg_rate, dur in legs:
            segments.append(Segment(dur, _uniaxial_controls(leg_rate)))
    return LoadingProgram(
        segments=tuple(segments),
        initial_stress=SymTensor.zero(),
        description=f"uniaxial_{mode}",
        cycles=len(amplitudes),
    )


def build_biaxial(kind: str, p0: float, axial_rate: float, cycles: int,
                  amplitude: float = 0.01) -> LoadingProgram:
    """Biaxial programs after an isotropic preload to stress p0.

    BC   axial strain cycles, lateral stresses held at p0;
    UBC  lateral strain rates at minus one half the axial rate (undrained);
    UBCS undrained with axial rate axial_rate * cos(pi t).
    """
    if axial_rate <= 0.0:
        raise ValueError(f"axial_rate={axial_rate} must be > 0")
    if cycles < 1:
        raise ValueError("cycles must be >= 1")
    kind = kind.upper()
    init = SymTensor.identity(p0)

    def seg_bc(rate):
        return (
            ChannelControl(RATE, rate),
            ChannelControl(HOLD, p0),
            ChannelControl(HOLD, p0),
            ChannelControl(RATE, 0.0),
            ChannelControl(RATE, 0.0),
            ChannelControl(RATE, 0.0),
        )

    def seg_ubc(rate):
        return (
            ChannelControl(RATE, rate),
            ChannelControl(RATE, -rate / 2.0),
            ChannelControl(RATE, -rate / 2.0),
            ChannelControl(RATE, 0.0),
            ChannelControl(RATE, 0.0),
            ChannelControl(RATE, 0.0),
        )

    if kind in ("BC", "UBC"):
        make = seg_bc if kind == "BC" else seg_ubc
        half = amplitude / axial_rate
        segments = []
        for _ in range(cycles):
            # compression first (axial strain toward -amplitude), then back
            segments.append(Segment(half, make(-axial_rate)))
            segments.append(Segment(half, make(axial_rate)))
        return LoadingProgram(tuple(segments), init, f"biaxial_{kind.lower()}", cycles)
    if kind == "UBCS":
        controls = (
            ChannelControl(RATE_COSINE, axial_rate),
            ChannelControl(RATE_COSINE, -axial_rate / 2.0),
            ChannelControl(RATE_COSINE, -axial_rate / 2.0),
            ChannelControl(RATE, 0.0),
            ChannelControl(RATE, 0.0),
            ChannelControl(RATE, 0.0),
        )
        # cos(pi t) has period 2 in pseudo-time
        return LoadingProgram((Segment(2.0 * cycles, controls),), init, "biaxial_ubcs", cycles)
    raise ValueError(f"unknown biaxial kind {kind!r}")
