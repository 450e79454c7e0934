"""Model open sets with closed-form distance to the complement.

Only shapes whose boundary distance is exact are offered (balls, annuli,
exteriors of balls, half-spaces, well-separated unions of balls, and
intersections thereof): the boundary factor delta**(alpha/2)/sqrt(t) in the
killed-kernel comparison is sensitive enough that a meshed distance would
pollute every bound check.

All predicates are vectorised: ``x`` may be a single point of shape ``(d,)``
or a batch of shape ``(n, d)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .params import ParameterError

__all__ = [
    "Domain",
    "Ball",
    "Annulus",
    "ExteriorBall",
    "HalfSpace",
    "UnionOfBalls",
    "Intersection",
    "domain_from_config",
]


def _as_points(x, d: int) -> tuple[np.ndarray, bool]:
    pts = np.asarray(x, dtype=float)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    if pts.shape[1] != d:
        raise ParameterError(f"points have dimension {pts.shape[1]}, domain has {d}")
    return pts, single


class Domain:
    """Open subset of R^d with exact membership and boundary distance."""

    d: int

    def contains(self, x):
        """True where x lies in the open set."""
        dist = self.dist_to_complement(x)
        return dist > 0.0

    def dist_to_complement(self, x):
        """Euclidean distance from x to the complement; 0 outside the set."""
        raise NotImplementedError

    def diameter(self) -> float | None:
        """Diameter for bounded sets, None otherwise."""
        return None

    def scaled(self, factor: float) -> "Domain":
        """The set scaled about the origin by ``factor``."""
        raise NotImplementedError(f"{type(self).__name__} does not support scaling")


def _maybe_scalar(values: np.ndarray, single: bool):
    return float(values[0]) if single else values


def _maybe_scalar_bool(values: np.ndarray, single: bool):
    return bool(values[0]) if single else values


@dataclass(frozen=True)
class Ball(Domain):
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", np.atleast_1d(np.asarray(self.center, float)))
        if not self.radius > 0.0:
            raise ParameterError("ball radius must be positive")

    @property
    def d(self) -> int:
        return self.center.size

    def dist_to_complement(self, x):
        pts, single = _as_points(x, self.d)
        dist = np.maximum(0.0, self.radius - np.linalg.norm(pts - self.center, axis=1))
        return _maybe_scalar(dist, single)

    def diameter(self) -> float:
        return 2.0 * self.radius

    def scaled(self, factor: float) -> "Ball":
        return Ball(self.center * factor, self.radius * factor)


@dataclass(frozen=True)
class Annulus(Domain):
    center: np.ndarray
    r_inner: float
    r_outer: float

    def __post_init__(self):
        object.__setattr__(self, "center", np.atleast_1d(np.asarray(self.center, float)))
        if not 0.0 < self.r_inner < self.r_outer:
            raise ParameterError("annulus needs 0 < r_inner < r_outer")

    @property
    def d(self) -> int:
        return self.center.size

    def dist_to_complement(self, x):
        pts, single = _as_points(x, self.d)
        rho = np.linalg.norm(pts - self.center, axis=1)
        dist = np.maximum(0.0, np.minimum(rho - self.r_inner, self.r_outer - rho))
        return _maybe_scalar(dist, single)

    def diameter(self) -> float:
        return 2.0 * self.r_outer

    def scaled(self, factor: float) -> "Annulus":
        return Annulus(self.center * factor, self.r_inner * factor, self.r_outer * factor)


@dataclass(frozen=True)
class ExteriorBall(Domain):
    """The complement of a closed ball."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", np.atleast_1d(np.asarray(self.center, float)))
        if not self.radius > 0.0:
            raise ParameterError("ball radius must be positive")

    @property
    def d(self) -> int:
        return self.center.size

    def dist_to_complement(self, x):
        pts, single = _as_points(x, self.d)
        dist = np.maximum(0.0, np.linalg.norm(pts - self.center, axis=1) - self.radius)
        return _maybe_scalar(dist, single)

    def scaled(self, factor: float) -> "ExteriorBall":
        return ExteriorBall(self.center * factor, self.radius * factor)


@dataclass(frozen=True)
class HalfSpace(Domain):
    """Points with normal . x > offset; the normal is normalised on entry."""

    normal: np.ndarray
    offset: float = 0.0

    def __post_init__(self):
        normal = np.atleast_1d(np.asarray(self.normal, float))
        norm = np.linalg.norm(normal)
        if norm == 0.0:
            raise ParameterError("half-space normal must be nonzero")
        object.__setattr__(self, "normal", normal / norm)
        object.__setattr__(self, "offset", float(self.offset) / norm)

    @property
    def d(self) -> int:
        return self.normal.size

    def dist_to_complement(self, x):
        pts, single = _as_points(x, self.d)
        dist = np.maximum(0.0, pts @ self.normal - self.offset)
        return _maybe_scalar(dist, single)

    def scaled(self, factor: float) -> "HalfSpace":
        return HalfSpace(self.normal, self.offset * factor)


@dataclass(frozen=True)
class UnionOfBalls(Domain):
    """Disjoint union of balls with a stated positive pairwise gap."""

    balls: tuple
    gap_min: float = 1e-9

    def __post_init__(self):
        balls = tuple(self.balls)
        if not balls:
            raise ParameterError("union needs at least one ball")
        object.__setattr__(self, "balls", balls)
        dims = {b.d for b in balls}
        if len(dims) != 1:
            raise ParameterError("all balls must share one dimension")
        if not self.gap_min > 0.0:
            raise ParameterError("gap_min must be positive")
        for i, bi in enumerate(balls):
            for bj in balls[i + 1 :]:
                gap = np.linalg.norm(bi.center - bj.center) - bi.radius - bj.radius
                if gap < self.gap_min:
                    raise ParameterError(
                        f"components must be separated by at least {self.gap_min}, got {gap}"
                    )

    @property
    def d(self) -> int:
        return self.balls[0].d

    def dist_to_complement(self, x):
        pts, single = _as_points(x, self.d)
        dist = np.max([b.dist_to_complement(pts) for b in self.balls], axis=0)
        return _maybe_scalar(dist, single)

    def diameter(self) -> float:
        centers = [b.center for b in self.balls]
        radii = [b.radius for b in self.balls]
        best = 2.0 * max(radii)
        for i in range(len(self.balls)):
            for j in range(i + 1, len(self.balls)):
                span = np.linalg.norm(centers[i] - centers[j]) + radii[i] + radii[j]
                best = max(best, span)
        return best

    def scaled(self, factor: float) -> "UnionOfBalls":
        return UnionOfBalls(
            tuple(b.scaled(factor) for b in self.balls), self.gap_min * factor
        )


@dataclass(frozen=True)
class Intersection(Domain):
    """Intersection of two domains.

    The distance to the complement of an intersection is exactly the minimum
    of the component distances, so closed-form distances compose.
    """

    first: Domain
    second: Domain

    def __post_init__(self):
        if self.first.d != self.second.d:
            raise ParameterError("intersected domains must share a dimension")

    @property
    def d(self) -> int:
        return self.first.d

    def dist_to_complement(self, x):
        return np.minimum(
            self.first.dist_to_complement(x), self.second.dist_to_complement(x)
        )

    def diameter(self) -> float | None:
        options = [s for s in (self.first.diameter(), self.second.diameter()) if s]
        return min(options) if options else None

    def scaled(self, factor: float) -> "Intersection":
        return Intersection(self.first.scaled(factor), self.second.scaled(factor))


def domain_from_config(spec: dict) -> Domain:
    """Build a domain from its config-file description.

    The variant is selected by ``kind`` and the numeric fields follow the
    constructor arguments, e.g. ``{"kind": "ball", "center": [0.0],
    "radius": 1.0}``.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParameterError("domain spec must be a mapping with a 'kind' field")
    kind = str(spec["kind"]).lower()
    try:
        if kind == "ball":
            return Ball(spec["center"], float(spec["radius"]))
        if kind == "annulus":
            return Annulus(spec["center"], float(spec["r_inner"]), float(spec["r_outer"]))
        if kind == "exterior_ball":
            return ExteriorBall(spec["center"], float(spec["radius"]))
        if kind == "half_space":
            return HalfSpace(spec["normal"], float(spec.get("offset", 0.0)))
        if kind == "union_of_balls":
            balls = tuple(Ball(b["center"], float(b["radius"])) for b in spec["balls"])
            return UnionOfBalls(balls, float(spec.get("gap_min", 1e-9)))
        if kind == "intersection":
            return Intersection(
                domain_from_config(spec["first"]), domain_from_config(spec["second"])
            )
    except KeyError as missing:
        raise ParameterError(f"domain spec for {kind!r} is missing field {missing}") from None
    raise ParameterError(f"unknown domain kind {spec['kind']!r}")
