"""Exact exponent regions in ``(1/p, 1/q, s)`` space and the classifier.

All coordinates are :class:`~fractions.Fraction`.  Two-dimensional regions
(``B``, ``D``, ``J``) are open convex polygons; the three-dimensional
families are closed triangles that together form a piecewise-linear roof
over the triangle ``0 <= y <= x <= 1``.  A triple is licensed as bounded
when it lies strictly below the roof over the open triangle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import lp
from .exceptions import HypothesisViolation, InputError
from .zero_order import ZeroOrderResult

ANCHOR = (Fraction(1), Fraction(0), Fraction(-1))

BOUNDED = "Bounded"
UNBOUNDED = "Unbounded"
UNKNOWN = "Unknown"

# rule tags carried by verdicts and region exports
TAG_B = "B-region"
TAG_D = "D-region"
TAG_TRIVIAL = "trivial-Lp"
TAG_ANCHOR = "negative-order-anchor"
TAG_Y = "Y-family"
TAG_Y34 = "Y34-family"
TAG_Z = "Z-family"
TAG_P = "plane-P-sharpness"
TAG_NEC_H = "necessity-s-le-h"
TAG_NEC_ETA = "necessity-s-le-eta"
TAG_J = "J-slice"


def frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        return Fraction(repr(v))
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed rational {v!r}") from exc
    return Fraction(v)


def fstr(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", frac(self.lo))
        object.__setattr__(self, "hi", frac(self.hi))
        if self.lo > self.hi:
            raise InputError(f"empty interval [{self.lo}, {self.hi}]")

    def corners(self) -> tuple:
        return (self.lo,) if self.lo == self.hi else (self.lo, self.hi)


def _corners(v) -> tuple:
    if v is None:
        return (None,)
    if isinstance(v, Interval):
        return v.corners()
    return (frac(v),)


# ---------------------------------------------------------------------------
# geometry types


@dataclass(frozen=True)
class Point3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for k in ("x", "y", "z"):
            object.__setattr__(self, k, frac(getattr(self, k)))
        if not (0 <= self.x <= 1 and 0 <= self.y <= 1):
            raise InputError(f"1/p and 1/q must lie in [0, 1], got ({self.x}, {self.y})")

    def as_tuple(self) -> tuple:
        return (self.x, self.y, self.z)

    def mirror(self) -> "Point3":
        """Reflection ``(x, y, z) -> (1 - y, 1 - x, z)`` (duality)."""
        return Point3(1 - self.y, 1 - self.x, self.z)


@dataclass(frozen=True)
class Plane3:
    """``a x + b y + c z = e``."""

    a: Fraction
    b: Fraction
    c: Fraction
    e: Fraction
    name: str = ""

    def __post_init__(self):
        for k in ("a", "b", "c", "e"):
            object.__setattr__(self, k, frac(getattr(self, k)))
        if self.a == self.b == self.c == 0:
            raise InputError("plane normal must be nonzero")

    def value(self, pt) -> Fraction:
        x, y, z = (pt.as_tuple() if isinstance(pt, Point3) else tuple(map(frac, pt)))
        return self.a * x + self.b * y + self.c * z - self.e

    def contains(self, pt) -> bool:
        return self.value(pt) == 0

    def height(self, x, y) -> Fraction:
        if self.c == 0:
            raise InputError("vertical plane has no height function")
        return (self.e - self.a * frac(x) - self.b * frac(y)) / self.c

    def normalized(self) -> tuple:
        """Coefficients scaled so the first nonzero one is 1 (for equality tests)."""
        coeffs = (self.a, self.b, self.c, self.e)
        lead = next(v for v in coeffs if v != 0)
        return tuple(v / lead for v in coeffs)

    def same_plane(self, other: "Plane3") -> bool:
        return self.normalized() == other.normalized()

    def to_json(self) -> dict:
        return {"name": self.name, "a": fstr(self.a), "b": fstr(self.b), "c": fstr(self.c), "e": fstr(self.e),
                "equation": "a*x + b*y + c*z = e"}


@dataclass(frozen=True)
class ConvexRegion3:
    name: str
    vertices: tuple
    tag: str
    closed: bool = True

    def __post_init__(self):
        vs = tuple(v if isinstance(v, Point3) else Point3(*v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        for i, v in enumerate(vs):
            others = [w.as_tuple() for j, w in enumerate(vs) if j != i]
            if others and lp.in_convex_hull(v.as_tuple(), others):
                raise InputError(f"{self.name}: vertex {v.as_tuple()} is not extreme")

    def contains(self, pt) -> bool:
        p = pt.as_tuple() if isinstance(pt, Point3) else tuple(map(frac, pt))
        return lp.in_convex_hull(p, [v.as_tuple() for v in self.vertices])

    @property
    def plane(self) -> Plane3 | None:
        if len(self.vertices) != 3:
            return None
        p0, p1, p2 = (v.as_tuple() for v in self.vertices)
        u = [b - a for a, b in zip(p0, p1)]
        w = [b - a for a, b in zip(p0, p2)]
        nrm = (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])
        if nrm == (0, 0, 0):
            return None
        e = sum(a * b for a, b in zip(nrm, p0))
        return Plane3(*nrm, e, name=f"plane({self.name})")

    def mirror(self, name: str | None = None) -> "ConvexRegion3":
        return ConvexRegion3(name or self.name + "'", tuple(v.mirror() for v in self.vertices),
                             self.tag, self.closed)

    def vertex_set(self) -> frozenset:
        return frozenset(v.as_tuple() for v in self.vertices)

    def height_at(self, x, y) -> Fraction | None:
        """Height of the triangle above ``(x, y)``, or ``None`` if outside its shadow."""
        maps = _height_map(tuple(v.as_tuple() for v in self.vertices))
        if maps is None:
            return None
        x, y = frac(x), frac(y)
        bary, (a, b, c) = maps
        for u, v, w in bary:
            if u * x + v * y + w < 0:
                return None
        return a * x + b * y + c

    def to_json(self) -> dict:
        pl = self.plane
        return {"name": self.name, "kind": "triangle3" if len(self.vertices) == 3 else "polytope3",
                "closed": self.closed, "tag": self.tag,
                "vertices": [[fstr(c) for c in v.as_tuple()] for v in self.vertices],
                "plane": pl.to_json() if pl is not None else None}


@dataclass(frozen=True)
class Region2:
    """Convex polygon; ``open_edges[i]`` refers to the edge from vertex i to i+1."""

    name: str
    vertices: tuple
    tag: str
    open_edges: tuple = field(default=())

    def __post_init__(self):
        vs = tuple((frac(a), frac(b)) for a, b in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if not self.open_edges:
            object.__setattr__(self, "open_edges", (True,) * len(vs))
        if len(self.open_edges) != len(vs):
            raise InputError("one openness flag per edge is required")

    @property
    def is_open(self) -> bool:
        return all(self.open_edges)

    def _orientation(self) -> int:
        area = _signed_area(self.vertices)
        return 1 if area > 0 else -1

    def contains(self, pt) -> bool:
        x, y = frac(pt[0]), frac(pt[1])
        vs = self.vertices
        sgn = self._orientation()
        for i, (a, b) in enumerate(zip(vs, vs[1:] + vs[:1])):
            c = sgn * _cross(a, b, (x, y))
            if c < 0 or (c == 0 and self.open_edges[i]):
                return False
        return True

    def on_boundary(self, pt) -> bool:
        x, y = frac(pt[0]), frac(pt[1])
        vs = self.vertices
        sgn = self._orientation()
        inside_closed = all(sgn * _cross(a, b, (x, y)) >= 0 for a, b in zip(vs, vs[1:] + vs[:1]))
        return inside_closed and any(_cross(a, b, (x, y)) == 0 for a, b in zip(vs, vs[1:] + vs[:1]))

    def mirror(self, name: str | None = None) -> "Region2":
        return Region2(name or self.name + "'", tuple((1 - y, 1 - x) for x, y in self.vertices),
                       self.tag, self.open_edges)

    def to_json(self) -> dict:
        return {"name": self.name, "kind": "polygon2", "open": self.is_open, "tag": self.tag,
                "open_edges": list(self.open_edges),
                "vertices": [[fstr(a), fstr(b)] for a, b in self.vertices]}


def _cross(a, b, c) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _signed_area(vs) -> Fraction:
    return sum((a[0] * b[1] - b[0] * a[1] for a, b in zip(vs, vs[1:] + vs[:1])), Fraction(0)) / 2


@lru_cache(maxsize=4096)
def _barycentric_map(tri: tuple):
    """Affine coefficients ``(a, b, c)`` with ``l_i = a x + b y + c``, or ``None`` if degenerate."""
    (x1, y1), (x2, y2), (x3, y3) = tri
    det = (y2 - y3) * (x1 - x3) + (x3 - x2) * (y1 - y3)
    if det == 0:
        return None
    a1, b1 = (y2 - y3) / det, (x3 - x2) / det
    a2, b2 = (y3 - y1) / det, (x1 - x3) / det
    c1, c2 = -a1 * x3 - b1 * y3, -a2 * x3 - b2 * y3
    return ((a1, b1, c1), (a2, b2, c2), (-a1 - a2, -b1 - b2, 1 - c1 - c2))


@lru_cache(maxsize=4096)
def _height_map(pts: tuple):
    """Barycentric maps of a triangle's shadow and the affine height over it."""
    bary = _barycentric_map(tuple(p[:2] for p in pts))
    if bary is None:
        return None
    height = tuple(sum(m[k] * p[2] for m, p in zip(bary, pts)) for k in range(3))
    return bary, height


def convex_hull_2d(points: Iterable[Sequence]) -> tuple:
    """Exact convex hull (counter-clockwise, collinear points dropped)."""
    pts = sorted({(frac(a), frac(b)) for a, b in points})
    if len(pts) <= 2:
        return tuple(pts)
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


# ---------------------------------------------------------------------------
# constructors


def _tent_polygon(k: Fraction, n: int, name: str, tag: str) -> Region2:
    k, top = frac(k), Fraction(1, n + 1)
    if k <= 0:
        raise InputError(f"index must be positive, got {k}")
    if k >= top:
        return Region2(name, ((0, 0), (Fraction(1, 2), top), (1, 0)), tag)
    a = (n + 1) * k / 2
    return Region2(name, ((0, 0), (a, k), (1 - a, k), (1, 0)), tag)


def region_A(n: int) -> Region2:
    return Region2("A", ((0, 0), (Fraction(1, 2), Fraction(1, n + 1)), (1, 0)), TAG_B)


def region_B(h, n: int) -> Region2:
    """Open region of ``(1/p, s)`` with ``L^p -> L^p_s`` boundedness from the local index."""
    return _tent_polygon(h, n, "B", TAG_B)


def region_D(eta, n: int) -> Region2:
    return _tent_polygon(eta, n, "D", TAG_D)


def _family(apex, anchor_names, tag, height) -> tuple:
    left = Point3(apex, apex, height)
    right = Point3(1 - apex, 1 - apex, height)
    a = Point3(*ANCHOR)
    main = ConvexRegion3(anchor_names[0], (left, right, a), tag)
    one = ConvexRegion3(anchor_names[1], (Point3(0, 0, 0), a, left), tag)
    two = ConvexRegion3(anchor_names[2], (Point3(1, 1, 0), a, right), tag)
    return main, one, two


def regions_Y(h, n: int) -> tuple:
    return _regions_Y(frac(h), int(n))


@lru_cache(maxsize=1024)
def _regions_Y(h: Fraction, n: int) -> tuple:
    if h <= 0:
        raise InputError("h must be positive")
    if h >= Fraction(1, n + 1):
        raise HypothesisViolation(
            f"the Y family needs h < 1/(n+1) = {Fraction(1, n + 1)}, got h = {h}; use regions_Y34")
    return _family((n + 1) * h / 2, ("Y", "Y1", "Y2"), TAG_Y, h)


@lru_cache(maxsize=64)
def regions_Y34(n: int) -> tuple:
    apex = Point3(Fraction(1, 2), Fraction(1, 2), Fraction(1, n + 1))
    a = Point3(*ANCHOR)
    return (ConvexRegion3("Y3", (Point3(0, 0, 0), a, apex), TAG_Y34),
            ConvexRegion3("Y4", (Point3(1, 1, 0), a, apex), TAG_Y34))


def _order_value(oS) -> int:
    return oS.value if isinstance(oS, ZeroOrderResult) else int(oS)


def regions_Z(g, oS) -> tuple:
    return _regions_Z(frac(g), max(_order_value(oS), 2))


@lru_cache(maxsize=1024)
def _regions_Z(g: Fraction, m: int) -> tuple:
    if g <= 0:
        raise InputError("g must be positive")
    if not g < Fraction(1, m):
        raise HypothesisViolation(f"the Z family needs g < 1/max(o(S),2) = {Fraction(1, m)}, got g = {g}")
    return _family(m * g / 2, ("Z", "Z1", "Z2"), TAG_Z, g)


def plane_P(g) -> Plane3:
    g = frac(g)
    return Plane3(g + 1, -(g + 1), 1, g, name="P")


def plane_Q(h) -> Plane3:
    h = frac(h)
    return Plane3(h + 1, -(h + 1), 1, h, name="Q")


# ---------------------------------------------------------------------------
# slices


def section(region: ConvexRegion3, axis: int, c) -> tuple:
    """Points of ``region`` on the plane ``coord[axis] = c`` (a segment's endpoints, or fewer)."""
    c = frac(c)
    pts = [v.as_tuple() for v in region.vertices]
    out = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            p, q = pts[i], pts[j]
            if p[axis] == c:
                out.add(p)
            if q[axis] == c:
                out.add(q)
            if (p[axis] - c) * (q[axis] - c) < 0:
                t = (c - p[axis]) / (q[axis] - p[axis])
                out.add(tuple(a + t * (b - a) for a, b in zip(p, q)))
    keep = [i for i in range(3) if i != axis]
    hull = convex_hull_2d([(p[keep[0]], p[keep[1]]) for p in out])
    return hull


def superlevel_slice(triangles: Sequence[ConvexRegion3], c, name: str = "slice") -> Region2:
    """Shadow of the part of the roof strictly above height ``c``, as an open polygon."""
    c = frac(c)
    pts = []
    for tri in triangles:
        vs = [v.as_tuple() for v in tri.vertices]
        for p in vs:
            if p[2] >= c:
                pts.append(p[:2])
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                p, q = vs[i], vs[j]
                if (p[2] - c) * (q[2] - c) < 0:
                    t = (c - p[2]) / (q[2] - p[2])
                    pts.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    hull = convex_hull_2d(pts)
    if len(hull) < 3:
        raise InputError(f"the slice at height {c} is empty or degenerate")
    return Region2(name, _start_at_origin(hull), TAG_J)


def _start_at_origin(hull) -> tuple:
    i = min(range(len(hull)), key=lambda k: (hull[k][0] + hull[k][1], hull[k]))
    return tuple(hull[i:] + hull[:i])


def slice_s0(Y: ConvexRegion3, Y1: ConvexRegion3, Y2: ConvexRegion3) -> Region2:
    """``L^p -> L^q`` region: the trapezoid ``J`` cut from the family at ``s = 0``."""
    return superlevel_slice((Y, Y1, Y2), 0, name="J")


def j_vertices(h, n: int) -> tuple:
    """Closed-form corners of ``J``."""
    h = frac(h)
    p1 = (h * (n + 3) / (2 * (h + 1)), h * (n + 1) / (2 * (h + 1)))
    p2 = (1 - h * (n + 1) / (2 * (h + 1)), 1 - h * (n + 3) / (2 * (h + 1)))
    return ((Fraction(0), Fraction(0)), p1, p2, (Fraction(1), Fraction(1)))


def eta_combine(patch_indices: Sequence):
    """Global index from per-patch local indices: the minimum."""
    vals = list(patch_indices)
    if not vals:
        raise InputError("at least one patch index is required")
    if any(isinstance(v, Interval) for v in vals):
        ivs = [v if isinstance(v, Interval) else Interval(v, v) for v in vals]
        if any(iv.lo <= 0 for iv in ivs):
            raise InputError("patch indices must be positive")
        return Interval(min(iv.lo for iv in ivs), min(iv.hi for iv in ivs))
    vals = [frac(v) for v in vals]
    if any(v <= 0 for v in vals):
        raise InputError("patch indices must be positive")
    return min(vals)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class IndexBundle:
    """Indices and flags feeding the classifier.

    ``h``, ``g`` and ``eta`` are exact fractions, :class:`Interval` estimates
    or ``None``.  ``setting`` is ``"local"`` (a graph germ with cutoff) or
    ``"global"`` (a compact surface given by patches, driven by ``eta``).
    """

    n: int
    h: object = None
    g: object = None
    eta: object = None
    oS: ZeroOrderResult | None = None
    phi_nonneg_positive_at_0: bool = False
    phi_bounded_below_near_0: bool = False
    setting: str = "local"

    def __post_init__(self):
        if self.n < 1:
            raise InputError("dimension must be positive")
        if self.setting not in ("local", "global"):
            raise InputError(f"unknown setting {self.setting!r}")
        for k in ("h", "g", "eta"):
            v = getattr(self, k)
            if v is not None and not isinstance(v, Interval):
                object.__setattr__(self, k, frac(v))
        for k in ("h", "g", "eta"):
            v = getattr(self, k)
            lo = v.lo if isinstance(v, Interval) else v
            if v is not None and lo <= 0:
                raise InputError(f"{k} must be positive")
        if self.setting == "local" and self.h is None:
            raise InputError("the local setting needs h")
        if self.setting == "global" and self.eta is None:
            raise InputError("the global setting needs eta")
        if _is_exact(self.h) and _is_exact(self.g) and self.h > self.g:
            raise InputError(f"h = {self.h} exceeds g = {self.g}; the local index never exceeds g")

    @property
    def is_exact(self) -> bool:
        return all(_is_exact(v) or v is None for v in (self.h, self.g, self.eta))

    def with_values(self, h, g, eta) -> "IndexBundle":
        return IndexBundle(self.n, h, g, eta, self.oS, self.phi_nonneg_positive_at_0,
                           self.phi_bounded_below_near_0, self.setting)


def _is_exact(v) -> bool:
    return isinstance(v, Fraction)


@dataclass(frozen=True)
class Verdict:
    status: str
    tags: tuple
    qualifier: str                      # "exact" or "interval"
    bounded_below: Fraction | None = None   # bounded for s below this (at this (1/p, 1/q))
    unbounded_above: Fraction | None = None  # unbounded for s above this
    bounded_rules: tuple = ()
    unbounded_rules: tuple = ()

    def describe(self) -> str:
        parts = [self.status, "[" + ", ".join(self.tags) + "]" if self.tags else "[]", self.qualifier]
        if self.status == UNKNOWN:
            if self.bounded_below is not None:
                parts.append(f"bounded below s = {fstr(self.bounded_below)}")
            if self.unbounded_above is not None:
                parts.append(f"unbounded above s = {fstr(self.unbounded_above)}")
        return " ".join(parts)


def roof_height(triangles: Sequence[ConvexRegion3], x, y) -> Fraction | None:
    """Height of the piecewise-linear roof over ``(x, y)``."""
    heights = [h for h in (t.height_at(x, y) for t in triangles) if h is not None]
    return max(heights) if heights else None


def _z_hypothesis(oS: ZeroOrderResult | None, g: Fraction, strict: bool) -> bool:
    """Whether ``g < 1/max(o,2)`` (or ``<=``) is certified."""
    if oS is None or not oS.is_exact:
        return False
    bound = Fraction(1, max(oS.value, 2))
    return g < bound if strict else g <= bound


def _rules(x, y, z, b: IndexBundle):
    n = b.n
    bounded, unbounded = [], []   # (tag, threshold)
    k = b.h if b.setting == "local" else b.eta
    on_diag = x == y
    if on_diag:
        tent = 2 * min(x, 1 - x) / (n + 1)
        thr = min(tent, k)
        bounded.append((TAG_B if b.setting == "local" else TAG_D, thr))
        bounded.append((TAG_TRIVIAL, Fraction(0)))
    if y <= x:
        bounded.append((TAG_ANCHOR, Fraction(-1)))
    if y < x:
        if k < Fraction(1, n + 1):
            fam, tag = regions_Y(k, n), TAG_Y
        else:
            fam, tag = regions_Y34(n), TAG_Y34
        bounded.append((tag, roof_height(fam, x, y)))
        if b.setting == "local" and b.g is not None and _z_hypothesis(b.oS, b.g, strict=True):
            bounded.append((TAG_Z, roof_height(regions_Z(b.g, b.oS), x, y)))
    if b.setting == "local":
        if b.g is not None and b.phi_bounded_below_near_0 and _z_hypothesis(b.oS, b.g, strict=False):
            unbounded.append((TAG_P, plane_P(b.g).height(x, y)))
        if on_diag and b.h < 1 and b.phi_nonneg_positive_at_0:
            unbounded.append((TAG_NEC_H, b.h))
    elif on_diag and b.eta < 1:
        unbounded.append((TAG_NEC_ETA, b.eta))
    fired_b = tuple(t for t, thr in bounded
                    if (t == TAG_TRIVIAL and z <= thr)
                    or (t in (TAG_B, TAG_D) and 0 < z < thr)
                    or (t not in (TAG_TRIVIAL, TAG_B, TAG_D) and z < thr))
    fired_u = tuple(t for t, thr in unbounded if z > thr)
    below = max((thr for _, thr in bounded), default=None)
    above = min((thr for _, thr in unbounded), default=None)
    return fired_b, fired_u, below, above


def _classify_exact(pt: Point3, b: IndexBundle) -> Verdict:
    fired_b, fired_u, below, above = _rules(pt.x, pt.y, pt.z, b)
    if fired_b and fired_u:
        raise AssertionError(f"contradictory verdicts {fired_b} / {fired_u} at {pt}")
    if fired_b:
        status, tags = BOUNDED, fired_b
    elif fired_u:
        status, tags = UNBOUNDED, fired_u
    else:
        status, tags = UNKNOWN, ()
    return Verdict(status, tags, "exact", below, above, fired_b, fired_u)


def classify(pt, bundle: IndexBundle) -> Verdict:
    """Classify ``(1/p, 1/q, s)`` as Bounded, Unbounded or Unknown.

    Interval-valued indices are resolved by classifying at every corner
    consistent with ``h <= g``; a definitive verdict needs all corners to
    agree and is marked ``"interval"``.
    """
    pt = pt if isinstance(pt, Point3) else Point3(*pt)
    if not (0 < pt.x < 1 and 0 < pt.y < 1):
        raise InputError("classification needs 1 < p, q < infinity")
    if bundle.is_exact:
        return _classify_exact(pt, bundle)
    verdicts = []
    for h in _corners(bundle.h):
        for g in _corners(bundle.g):
            if h is not None and g is not None and h > g:
                continue
            for eta in _corners(bundle.eta):
                verdicts.append(_classify_exact(pt, bundle.with_values(h, g, eta)))
    statuses = {v.status for v in verdicts}
    if len(statuses) == 1 and verdicts:
        v = verdicts[0]
        tags = tuple(sorted({t for w in verdicts for t in w.tags}))
        return Verdict(v.status, tags, "interval",
                       min((w.bounded_below for w in verdicts if w.bounded_below is not None), default=None),
                       max((w.unbounded_above for w in verdicts if w.unbounded_above is not None), default=None),
                       tuple(sorted({t for w in verdicts for t in w.bounded_rules})),
                       tuple(sorted({t for w in verdicts for t in w.unbounded_rules})))
    return Verdict(UNKNOWN, (), "interval",
                   min((w.bounded_below for w in verdicts if w.bounded_below is not None), default=None),
                   max((w.unbounded_above for w in verdicts if w.unbounded_above is not None), default=None))


def classify_Lp_Lps(x, s, bundle: IndexBundle) -> Verdict:
    """``L^p -> L^p_s`` classification of ``(1/p, s)``.

    ``B`` (or ``D``) is open, so its boundary points with ``s > 0`` come out
    Unknown; ``s <= 0`` is bounded trivially.
    """
    x = frac(x)
    return classify(Point3(x, x, frac(s)), bundle)
