"""Classical invariants of Legendrian fronts and the slice-genus bound.

Fronts are modeled by the invariant-sufficient counts (writhe, up/down
cusps) rather than full front words; that is all tb and rot need.  The
Stein handle-attachment check is framing = tb - 1 for every 2-handle, and
the slice-Bennequin inequality tb + |rot| <= 2g - 1 turns into a lower
bound for the slice genus of a curve in the boundary of a Stein domain.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources


@dataclass(frozen=True)
class FrontData:
    """Signed crossing count and cusp counts of a Legendrian front."""

    writhe: int
    down_cusps: int
    up_cusps: int

    def __post_init__(self):
        if self.down_cusps < 0 or self.up_cusps < 0:
            raise ValueError("cusp counts must be nonnegative")
        total = self.down_cusps + self.up_cusps
        if total < 2 or total % 2 != 0:
            raise ValueError(
                f"a front has an even number (>= 2) of cusps, got {total}"
            )

    def stabilized(self, positive: bool) -> "FrontData":
        """Add one zigzag (two cusps of one kind): tb drops by 1, rot moves by +-1."""
        if positive:
            return FrontData(self.writhe, self.down_cusps + 2, self.up_cusps)
        return FrontData(self.writhe, self.down_cusps, self.up_cusps + 2)


def tb(front: FrontData) -> int:
    """Thurston-Bennequin number: writhe - (number of cusps)/2."""
    return front.writhe - (front.down_cusps + front.up_cusps) // 2


def rot(front: FrontData) -> int:
    """Rotation number: (down cusps - up cusps)/2."""
    diff = front.down_cusps - front.up_cusps
    if diff % 2 != 0:
        raise ValueError("cusp parity mismatch; rotation number is not an integer")
    return diff // 2


@dataclass(frozen=True)
class HandleCheck:
    name: str
    framing: int
    tb: int

    @property
    def satisfied(self) -> bool:
        return self.framing == self.tb - 1


def stein_condition(
    handles: list[tuple[int, FrontData]] | list[tuple[str, int, FrontData]],
) -> tuple[bool, tuple[HandleCheck, ...]]:
    """Check framing = tb - 1 for every 2-handle.

    Handles are (framing, front) or (name, framing, front) tuples; returns
    the conjunction plus a per-handle report.  Empty input is vacuously
    true.
    """
    checks = []
    for i, handle in enumerate(handles):
        if len(handle) == 3:
            name, framing, front = handle
        else:
            framing, front = handle
            name = f"handle-{i + 1}"
        checks.append(HandleCheck(name=name, framing=framing, tb=tb(front)))
    return all(c.satisfied for c in checks), tuple(checks)


def slice_bennequin_genus_bound(tb_value: int, rot_value: int) -> int:
    """Smallest g >= 0 allowed by tb + |rot| <= 2g - 1.

    A positive result bounds the slice genus of the curve in any Stein
    filling from below; 0 means no conclusion (never "slice").
    """
    bound = tb_value + abs(rot_value) + 1
    if bound <= 0:
        return 0
    return (bound + 1) // 2


def load_named_fronts() -> dict[str, FrontData]:
    """Front fixtures shipped with the package (see data/fronts.json)."""
    raw = json.loads(
        resources.files("dehn4").joinpath("data/fronts.json").read_text("utf-8")
    )
    return {
        name: FrontData(
            writhe=entry["writhe"],
            down_cusps=entry["down_cusps"],
            up_cusps=entry["up_cusps"],
        )
        for name, entry in raw["fronts"].items()
    }


def stein_framings() -> dict[str, int]:
    raw = json.loads(
        resources.files("dehn4").joinpath("data/fronts.json").read_text("utf-8")
    )
    return {name: int(v) for name, v in raw["stein_framings"].items()}
