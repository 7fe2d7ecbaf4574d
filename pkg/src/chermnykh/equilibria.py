"""Location of equilibrium points.

On the axis the force balance f(x, 0) = Omega_x(x, 0) is scanned for sign
changes over five disjoint intervals (left of the bigger primary, the two
inner belt sub-intervals split at the knee x = -T/sqrt(2), the rest of the
inter-primary range, and right of the smaller primary), then each bracket is
polished by bisection.  A sufficiently massive, sufficiently concentrated
belt adds an inner saddle/centre pair (Xb2, Xb1) between the bigger primary
and the barycentre; otherwise only L1, L2, L3 exist on the axis.

The triangular pair is seeded from closed-form radii and finished with a
2-D Newton iteration on the full gradient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    NoTriangularPointsError,
    ScanError,
    SingularPointError,
)
from .model import (
    BIGGER_PRIMARY,
    SINGULARITY_RADIUS,
    SMALLER_PRIMARY,
    SystemParams,
    omega_grad,
    omega_hessian,
)

# Scan geometry defaults.
X_MAX = 5.0
PRIMARY_GAP = 1e-9  # keep-out half-width around each primary abscissa
MIN_INNER_SAMPLES = 20000

COLLINEAR_KINDS = ("L1", "L2", "L3", "Xb1", "Xb2")
TRIANGULAR_KINDS = ("L4", "L5")


@dataclass(frozen=True)
class EquilibriumPoint:
    """A located equilibrium: kind label, coordinates, primary distances,
    and the gradient residual max(|Omega_x|, |Omega_y|) at (x, y)."""

    kind: str
    x: float
    y: float
    r1: float
    r2: float
    residual: float

    @property
    def is_collinear(self) -> bool:
        return self.kind in COLLINEAR_KINDS

    @property
    def is_triangular(self) -> bool:
        return self.kind in TRIANGULAR_KINDS


@dataclass(frozen=True)
class CollinearScan:
    """Record of one axis scan: the intervals searched, the per-interval
    sample counts, and the sign-change brackets found (disjoint, one root
    each)."""

    intervals: tuple[tuple[float, float], ...]
    samples: tuple[int, ...]
    brackets: tuple[tuple[float, float], ...]


def _point(p: SystemParams, kind: str, x: float, y: float) -> EquilibriumPoint:
    gx, gy = omega_grad(p, x, y)
    r1 = math.hypot(x + p.mu, y)
    r2 = math.hypot(x + p.mu - 1.0, y)
    return EquilibriumPoint(kind, x, y, r1, r2, max(abs(gx), abs(gy)))


def collinear_f(p: SystemParams, x):
    """Axis force balance f(x, 0); identical to Omega_x(x, 0).

    Written in the sign-resolved piecewise form so either side of each
    primary uses the correct branch.  Accepts scalars or arrays.
    """
    x = np.asarray(x, dtype=float)
    s = x + p.mu
    u = x + p.mu - 1.0
    if np.any(np.abs(s) < SINGULARITY_RADIUS):
        raise SingularPointError(BIGGER_PRIMARY, float(np.min(np.abs(s))))
    if np.any(np.abs(u) < SINGULARITY_RADIUS):
        raise SingularPointError(SMALLER_PRIMARY, float(np.min(np.abs(u))))
    w = x * x + p.t_belt**2
    if p.mb > 0.0 and np.any(w == 0.0):
        raise SingularPointError("belt centre (origin with t_belt = 0)", 0.0)
    val = (
        p.n2 * x
        - (1.0 - p.mu) * p.q1 * np.sign(s) / (s * s)
        - p.mu * np.sign(u) / (u * u)
        - 1.5 * p.mu * p.a2 * np.sign(u) / (u * u * u * u)
        - (p.mb * x / w**1.5 if p.mb else 0.0)
    )
    return float(val) if np.ndim(val) == 0 else val


class InnerPointCheck(NamedTuple):
    """Advisory diagnostic for the belt-induced inner pair: whether the belt
    knee lies inside (-mu, 0), and the force value f at the knee -T/sqrt(2).
    A positive f there is the hallmark of the split that creates Xb1/Xb2."""

    narrow_belt: bool
    f_at_knee: float


def inner_point_condition(p: SystemParams) -> InnerPointCheck:
    narrow = p.t_belt < math.sqrt(2.0) * p.mu
    knee = -p.t_belt / math.sqrt(2.0)
    return InnerPointCheck(narrow, collinear_f(p, knee))


def _bisect(p: SystemParams, lo: float, hi: float, flo: float, fhi: float) -> float:
    """Bisection run to floating-point exhaustion; |dx| ends below 1e-14
    for every root of interest, and typically at one ulp."""
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = collinear_f(p, mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return lo if abs(flo) <= abs(fhi) else hi


def scan_collinear(p: SystemParams, samples: int = MIN_INNER_SAMPLES) -> CollinearScan:
    """Sample f(x, 0) over the five axis intervals and bracket its roots."""
    if samples < 8:
        raise DomainError("samples must be at least 8")
    knee = -p.t_belt / math.sqrt(2.0)
    inner_n = max(samples, MIN_INNER_SAMPLES)
    origin = -PRIMARY_GAP if (p.mb > 0.0 and p.t_belt == 0.0) else 0.0

    pieces: list[tuple[float, float, int]] = [
        (-X_MAX, -p.mu - PRIMARY_GAP, samples)
    ]
    if -p.mu + PRIMARY_GAP < knee < origin:
        pieces.append((-p.mu + PRIMARY_GAP, knee, inner_n))
        pieces.append((knee, origin, inner_n))
    else:
        pieces.append((-p.mu + PRIMARY_GAP, origin, inner_n))
    pieces.append((abs(origin), 1.0 - p.mu - PRIMARY_GAP, samples))
    pieces.append((1.0 - p.mu + PRIMARY_GAP, X_MAX, samples))

    brackets: list[tuple[float, float]] = []
    for lo, hi, n in pieces:
        if not lo < hi:
            continue
        xs = np.linspace(lo, hi, n)
        fs = collinear_f(p, xs)
        zero_hits = np.nonzero(fs == 0.0)[0]
        for i in zero_hits:
            brackets.append((float(xs[i]), float(xs[i])))
        flips = np.nonzero(fs[:-1] * fs[1:] < 0.0)[0]
        for i in flips:
            brackets.append((float(xs[i]), float(xs[i + 1])))
    brackets.sort()
    return CollinearScan(
        intervals=tuple((lo, hi) for lo, hi, _ in pieces),
        samples=tuple(n for _, _, n in pieces),
        brackets=tuple(brackets),
    )


def find_collinear(p: SystemParams, samples: int = MIN_INNER_SAMPLES) -> list[EquilibriumPoint]:
    """All axis equilibria, refined by bisection and labeled.

    Returns 3 points (L3, L1, L2) without a belt, and 5 (adding Xb2, Xb1)
    when the belt attraction splits the inner interval.  An unexpected root
    pattern raises ScanError; increase ``samples`` if that happens on a
    legitimate parameter set.
    """
    scan = scan_collinear(p, samples)
    roots: list[float] = []
    for lo, hi in scan.brackets:
        r = lo if lo == hi else _bisect(p, lo, hi, collinear_f(p, lo), collinear_f(p, hi))
        if not any(abs(r - other) < 1e-10 for other in roots):
            roots.append(r)
    left = sorted(r for r in roots if r < -p.mu)
    middle = sorted(r for r in roots if -p.mu < r < 1.0 - p.mu)
    right = sorted(r for r in roots if r > 1.0 - p.mu)

    if len(left) != 1 or len(right) != 1 or len(middle) not in (1, 3):
        raise ScanError(
            f"unexpected root pattern (left={len(left)}, middle={len(middle)}, "
            f"right={len(right)}); increase samples"
        )
    labeled = [("L3", left[0]), ("L2", right[0])]
    if len(middle) == 1:
        labeled.append(("L1", middle[0]))
    else:
        knee = -p.t_belt / math.sqrt(2.0)
        xb2, xb1, l1 = middle
        if not (-p.mu < xb2 <= knee < xb1 < 0.0 < l1):
            raise ScanError(
                "inner roots do not straddle the belt knee as expected; "
                "increase samples"
            )
        labeled += [("L1", l1), ("Xb1", xb1), ("Xb2", xb2)]
    points = [_point(p, kind, x, 0.0) for kind, x in labeled]
    return sorted(points, key=lambda e: e.x)


def refine_equilibrium(p: SystemParams, guess) -> EquilibriumPoint:
    """2-D Newton polish of an equilibrium guess.

    ``guess`` is an (x, y) pair or an EquilibriumPoint.  Converges when the
    gradient residual drops to 1e-13 or the Newton step to 1e-15, within 50
    iterations.  The residual must be decreasing over the first three
    iterations (basin check); a near-singular Hessian or divergence raises
    ConvergenceError carrying the iteration trace.
    """
    if isinstance(guess, EquilibriumPoint):
        x, y = guess.x, guess.y
    else:
        x, y = float(guess[0]), float(guess[1])
    trace: list[tuple[float, float, float]] = []
    for it in range(50):
        gx, gy = omega_grad(p, x, y)
        res = max(abs(gx), abs(gy))
        trace.append((x, y, res))
        if res <= 1e-13:
            break
        if it == 3 and trace[3][2] >= trace[0][2]:
            raise ConvergenceError(
                "guess not in a Newton basin (residual not decreasing)", trace
            )
        oxx, oxy, oyy = omega_hessian(p, x, y)
        det = oxx * oyy - oxy * oxy
        if abs(det) < 1e-14:
            raise ConvergenceError(
                f"degenerate Hessian (det = {det:.3e}) at iterate {it}", trace
            )
        dx = (oyy * gx - oxy * gy) / det
        dy = (oxx * gy - oxy * gx) / det
        x -= dx
        y -= dy
        if max(abs(dx), abs(dy)) <= 1e-15:
            break
    else:
        raise ConvergenceError("no convergence within 50 iterations", trace)
    if abs(y) <= 1e-12:
        y = 0.0  # collinear points carry y = 0 exactly
    return _point(p, _positional_kind(p, x, y), x, y)


def _positional_kind(p: SystemParams, x: float, y: float) -> str:
    if y > 1e-12:
        return "L4"
    if y < -1e-12:
        return "L5"
    if x < -p.mu:
        return "L3"
    if x > 1.0 - p.mu:
        return "L2"
    knee = -p.t_belt / math.sqrt(2.0)
    # Positional heuristic: inside the belt-split interval the labels follow
    # the knee; a full scan is needed to tell a lone shifted L1 from Xb1/Xb2.
    if p.mb > 0.0 and knee < 0.0:
        if knee < x < 0.0:
            return "Xb1"
        if -p.mu < x <= knee:
            return "Xb2"
    return "L1"


def _solve_r2(a2: float, rhs: float) -> float:
    """Root of 1/r^3 + (3/2) a2 / r^5 = rhs; monotone, safe Newton."""
    r = rhs ** (-1.0 / 3.0)
    if a2 == 0.0:
        return r
    for _ in range(60):
        g = r**-3 + 1.5 * a2 * r**-5 - rhs
        dg = -3.0 * r**-4 - 7.5 * a2 * r**-6
        step = g / dg
        r -= step
        if abs(step) <= 1e-16 * r:
            break
    return r


def triangular_analytic(
    p: SystemParams, radii: str = "consistent"
) -> tuple[EquilibriumPoint, EquilibriumPoint]:
    """Closed-form triangular pair via two-circle intersection.

    Two radii conventions are offered:

    * ``consistent`` (default): r1 and r2 solve the exact off-axis balance
      relations q1/r1^3 = 1/r2^3 + (3/2) a2/r2^5 = n^2 - mb/(rs^2 + T^2)^{3/2},
      seeding the belt radius at the unperturbed triangular distance
      rs^2 = (1 - mu) q1^{2/3} + mu^2 and then re-evaluating it once at the
      constructed point.  Exact at mb = 0; the residual error is higher than
      second order in mb, so the gap to the refined point shrinks at least
      quadratically when the belt mass is halved.
    * ``printed``: the first-order series radii
      r1 = q1^{1/3} [1 - a2/2 + (1 - 2 rc) mb (1 - 3 mu a2 / (2(1-mu))) / (3 (rc^2+T^2)^{3/2})],
      r2 = 1 + mu (1 - 2 rc) mb / (3 (rc^2+T^2)^{3/2})],
      kept for reproduction of the published series.

    Either way the coordinates follow from x + mu = (1 + r1^2 - r2^2)/2 and
    y^2 = r1^2 - (x + mu)^2; a negative y^2 means no off-axis equilibria
    exist for these parameters.
    """
    if p.q1 <= 0.0:
        raise DomainError("triangular points degenerate for q1 <= 0 (r1 -> 0)")
    if radii not in ("consistent", "printed"):
        raise DomainError(f"unknown radii convention {radii!r}")
    t2 = p.t_belt**2
    if radii == "printed":
        w3 = (p.rc**2 + t2) ** 1.5
        r1 = p.q1 ** (1.0 / 3.0) * (
            1.0
            - 0.5 * p.a2
            + (1.0 - 2.0 * p.rc)
            * p.mb
            * (1.0 - 1.5 * p.mu * p.a2 / (1.0 - p.mu))
            / (3.0 * w3)
        )
        r2 = 1.0 + p.mu * (1.0 - 2.0 * p.rc) * p.mb / (3.0 * w3)
    else:
        rs2 = (1.0 - p.mu) * p.q1 ** (2.0 / 3.0) + p.mu**2
        passes = 1 if p.mb == 0.0 else 2
        for _ in range(passes):
            rhs = p.n2 - p.mb / (rs2 + t2) ** 1.5
            if rhs <= 0.0:
                raise NoTriangularPointsError(
                    "belt attraction exceeds the rotational balance at the "
                    "reference radius; no off-axis equilibria"
                )
            r1 = (p.q1 / rhs) ** (1.0 / 3.0)
            r2 = _solve_r2(p.a2, rhs)
            xpm, y2 = _circle_cross(r1, r2)
            rs2 = y2 + (xpm - p.mu) ** 2
    xpm, y2 = _circle_cross(r1, r2)
    x = xpm - p.mu
    y = math.sqrt(y2)
    return _point(p, "L4", x, y), _point(p, "L5", x, -y)


def _circle_cross(r1: float, r2: float) -> tuple[float, float]:
    """Intersection of circles of radius r1 about the bigger primary and r2
    about the smaller (unit separation): abscissa measured from the bigger
    primary, and y^2."""
    xpm = 0.5 * (1.0 + r1 * r1 - r2 * r2)
    y2 = r1 * r1 - xpm * xpm
    if y2 <= 0.0:
        raise NoTriangularPointsError(
            f"circles r1 = {r1:.6g}, r2 = {r2:.6g} do not intersect off the "
            "axis; no triangular points for these parameters"
        )
    return xpm, y2


def find_triangular(p: SystemParams) -> tuple[EquilibriumPoint, EquilibriumPoint]:
    """Refined triangular pair; L5 is constructed as the exact mirror of L4
    (the potential is even in y, so the reflection is an identity, not an
    approximation)."""
    seed, _ = triangular_analytic(p)
    try:
        l4 = refine_equilibrium(p, seed)
        if l4.kind != "L4":
            raise ConvergenceError("refinement left the upper half-plane", [])
    except ConvergenceError:
        l4 = _continuation_triangular(p)
    l5 = EquilibriumPoint("L5", l4.x, -l4.y, l4.r1, l4.r2, l4.residual)
    return l4, l5


def _continuation_triangular(p: SystemParams) -> EquilibriumPoint:
    """Walk the perturbations up from the classical problem with adaptive
    steps, re-refining at each stage.  Slow path; only used when the direct
    seed fails the basin check.

    A stage that keeps failing at arbitrarily small steps means the
    off-axis family has terminated (the point merges with the axis) before
    the requested parameters are reached; that is a no-triangular-points
    outcome, not a solver failure."""
    from dataclasses import replace

    guess = (0.5 - p.mu, math.sqrt(3.0) / 2.0)
    frac, step = 0.0, 0.25
    point = refine_equilibrium(p if _is_classical(p) else replace(p, q1=1.0, a2=0.0, mb=0.0), guess)
    stages = 0
    while frac < 1.0:
        stages += 1
        if stages > 200:
            raise ConvergenceError("continuation exceeded 200 stages", [])
        nxt = min(1.0, frac + step)
        stage = replace(
            p,
            q1=1.0 - nxt * (1.0 - p.q1),
            a2=nxt * p.a2,
            mb=nxt * p.mb,
        )
        try:
            cand = refine_equilibrium(stage, guess)
        except ConvergenceError:
            cand = None
        if cand is None or cand.kind != "L4":
            step *= 0.5
            if step < 1e-3:
                raise NoTriangularPointsError(
                    "off-axis equilibrium family terminates about "
                    f"{frac:.3f} of the way to the requested parameters; "
                    "no triangular points exist there"
                )
            continue
        frac, point = nxt, cand
        guess = (cand.x, cand.y)
        step = min(2.0 * step, 0.25)
    return point


def _is_classical(p: SystemParams) -> bool:
    return p.q1 == 1.0 and p.a2 == 0.0 and p.mb == 0.0


def find_all(p: SystemParams, samples: int = MIN_INNER_SAMPLES) -> list[EquilibriumPoint]:
    """Axis points plus the triangular pair (when the latter exist)."""
    points = find_collinear(p, samples)
    try:
        points.extend(find_triangular(p))
    except NoTriangularPointsError:
        pass
    return points
