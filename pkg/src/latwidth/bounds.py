"""Machine verification of the sharp lattice-point and area bounds for
minimal polygons, over the enumerated classes of each width."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import MinimalClass, enumerate_minimal
from .core import OutOfRange


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking one bound against all classes of one width."""

    d: int
    bound_value: int
    achieved: int
    witnesses: tuple[str, ...]
    holds: bool


def point_bound(d: int) -> int:
    """max((d-1)^2 + 4, (d+1)(d+2)/2): the lattice-point ceiling for minimal
    polygons of width d >= 2."""
    if d < 2:
        raise OutOfRange("the point bound assumes width > 1")
    return max((d - 1) ** 2 + 4, (d + 1) * (d + 2) // 2)


def doubled_volume_bound(d: int) -> int:
    """Integer floor on doubled area: 3d^2/4 for even d, (3d^2 + 1)/4 for odd."""
    if d < 1:
        raise OutOfRange("the volume bound assumes positive width")
    if d % 2 == 0:
        return 3 * d * d // 4
    return (3 * d * d + 1) // 4


def _classes(d: int, classes) -> list[MinimalClass]:
    return list(classes) if classes is not None else enumerate_minimal(d)


def verify_point_bound(d: int, classes=None) -> BoundReport:
    """Check every width-d class against the point bound; report the maximum
    reached and which classes reach it."""
    bound = point_bound(d)
    found = _classes(d, classes)
    achieved = max(c.point_count for c in found)
    witnesses = tuple(c.key for c in found if c.point_count == achieved)
    return BoundReport(d, bound, achieved, witnesses, achieved <= bound)


def verify_volume_bound(d: int, classes=None) -> BoundReport:
    """Check every width-d class against the doubled-area floor; report the
    minimum reached and which classes reach it."""
    bound = doubled_volume_bound(d)
    found = _classes(d, classes)
    achieved = min(c.doubled_area for c in found)
    witnesses = tuple(c.key for c in found if c.doubled_area == achieved)
    return BoundReport(d, bound, achieved, witnesses, achieved >= bound)
