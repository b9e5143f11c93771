"""Exact rational linear algebra and convex geometry in dimensions 1-3.

All computation is over Python ints and fractions.Fraction; nothing here ever
touches a float.  These primitives back every invariant in the package:
solving small linear systems, enumerating vertices of halfspace
intersections, lattice-adapted coordinate frames for hyperplanes, and closed
form integration of affine functions over convex polytopes.

Scale expectations are "desk scale": constraint systems with at most a few
dozen rows, so brute force over d-subsets is used throughout instead of
incremental convex-hull machinery.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import gcd

Vector = tuple  # tuple of int or Fraction, length = ambient dimension
HalfSpace = tuple  # (normal: Vector, rhs) meaning <normal, x> >= rhs


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(u, s):
    return tuple(a * s for a in u)


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (must be nonzero)."""
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    raise ValueError(f"det: unsupported size {n}")


def cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def solve_linear(rows, rhs):
    """Solve the square system rows @ x = rhs exactly; None if singular."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[r][n] for r in range(n))


def matrix_rank(rows):
    """Rank of a list of row vectors, exact Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    row_idx = 0
    for col in range(cols):
        pivot = next((r for r in range(row_idx, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        inv = 1 / work[row_idx][col]
        work[row_idx] = [v * inv for v in work[row_idx]]
        for r in range(len(work)):
            if r != row_idx and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[row_idx])]
        row_idx += 1
        rank += 1
    return rank


def inverse_unimodular(rows):
    """Inverse of an integer matrix with det +-1, returned as integer rows."""
    n = len(rows)
    d = det(rows)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    inv = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [
                [rows[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            sign = -1 if (i + j) % 2 else 1
            row.append(sign * (det(minor) if minor else 1) * d)
        inv.append(tuple(row))
    return tuple(inv)


def transpose(rows):
    return tuple(zip(*rows))


def mat_vec(rows, v):
    return tuple(dot(row, v) for row in rows)


def hyperplane_frame(normal, rhs):
    """Lattice-adapted frame for the hyperplane <normal, x> = rhs.

    normal must be a primitive integer vector.  Returns (origin, basis) where
    origin is an integer point on the hyperplane and basis is a list of n-1
    integer vectors spanning the full kernel lattice {w : <normal, w> = 0}.
    Lebesgue measure in frame coordinates is exactly the lattice-normalized
    sigma measure of the hyperplane.
    """
    n = len(normal)
    cols = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    weights = list(normal)
    # Unimodular column operations driving the weight row to (+-1, 0, ..., 0).
    while True:
        nz = [i for i, w in enumerate(weights) if w != 0]
        if len(nz) == 1:
            break
        nz.sort(key=lambda i: abs(weights[i]))
        i, j = nz[0], nz[1]
        q = weights[j] // weights[i]
        weights[j] -= q * weights[i]
        cols[j] = vec_sub(cols[j], vec_scale(cols[i], q))
    pivot = next(i for i, w in enumerate(weights) if w != 0)
    cols[0], cols[pivot] = cols[pivot], cols[0]
    weights[0], weights[pivot] = weights[pivot], weights[0]
    if weights[0] == -1:
        cols[0] = vec_scale(cols[0], -1)
        weights[0] = 1
    if weights[0] != 1:
        raise ValueError("normal vector is not primitive")
    origin = vec_scale(cols[0], rhs)
    return origin, cols[1:]


def halfspace_vertices(constraints, dim):
    """All vertices of {x : <n_i, x> >= r_i}, brute force over dim-subsets."""
    pts = set()
    for comb in combinations(constraints, dim):
        rows = [c[0] for c in comb]
        rhs = [c[1] for c in comb]
        x = solve_linear(rows, rhs)
        if x is None:
            continue
        if all(dot(nrm, x) >= r for nrm, r in constraints):
            pts.add(x)
    return sorted(pts)


def _angular_key(center, pts):
    """Comparator-based exact angular order of points around center."""

    def half(p):
        dx, dy = p[0] - center[0], p[1] - center[1]
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return -1 if hp < hq else 1
        px, py = p[0] - center[0], p[1] - center[1]
        qx, qy = q[0] - center[0], q[1] - center[1]
        cr = px * qy - py * qx
        if cr > 0:
            return -1
        if cr < 0:
            return 1
        return 0

    return sorted(pts, key=cmp_to_key(cmp))


def order_polygon(pts):
    """Order the vertex set of a convex polygon counterclockwise."""
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    return _angular_key((cx, cy), pts)


def polygon_area(pts_unordered):
    """Area of a convex polygon given its (unordered) vertex set."""
    if len(pts_unordered) < 3:
        return Fraction(0)
    pts = order_polygon(pts_unordered)
    twice = Fraction(0)
    for i in range(len(pts)):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % len(pts)]
        twice += x0 * y1 - x1 * y0
    return abs(twice) / 2


def _affine_value(grad, const, p):
    return dot(grad, p) + const


def integrate_affine_1d(pts, grad, const):
    if len(pts) < 2:
        return Fraction(0)
    lo, hi = min(pts), max(pts)
    length = hi[0] - lo[0]
    return length * (_affine_value(grad, const, lo) + _affine_value(grad, const, hi)) / 2


def integrate_affine_2d(pts, grad, const):
    """Integral of an affine function over a convex polygon (unordered vertices)."""
    if len(pts) < 3:
        return Fraction(0)
    pts = order_polygon(pts)
    base = pts[0]
    total = Fraction(0)
    for i in range(1, len(pts) - 1):
        p, q = pts[i], pts[i + 1]
        area = abs(det([vec_sub(p, base), vec_sub(q, base)])) / Fraction(2)
        if area == 0:
            continue
        mean = (
            _affine_value(grad, const, base)
            + _affine_value(grad, const, p)
            + _affine_value(grad, const, q)
        ) / 3
        total += area * mean
    return total


def _dedupe_hyperplanes(constraints):
    """Canonicalize halfspace boundaries to rational hyperplanes (normal, rhs)."""
    seen = {}
    for normal, rhs in constraints:
        fr = [Fraction(x) for x in normal] + [Fraction(rhs)]
        denom_lcm = 1
        for f in fr:
            denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
        ints = [int(f * denom_lcm) for f in fr]
        g = vec_gcd(ints)
        if g == 0:
            continue
        ints = [x // g for x in ints]
        lead = next((x for x in ints[:-1] if x != 0), 0)
        if lead < 0:
            ints = [-x for x in ints]
        seen[tuple(ints[:-1]), ints[-1]] = None
    return list(seen)


def integrate_affine_3d(pts, constraints, grad, const):
    """Integral of an affine function over a convex 3-polytope.

    pts is the full vertex set, constraints the halfspaces that carved it
    (used only to recover the face structure).
    """
    if len(pts) < 4:
        return Fraction(0)
    base = pts[0]
    if matrix_rank([vec_sub(p, base) for p in pts[1:]]) < 3:
        return Fraction(0)
    total = Fraction(0)
    for normal, rhs in _dedupe_hyperplanes(constraints):
        face = [p for p in pts if dot(normal, p) == rhs]
        if len(face) < 3:
            continue
        if dot(normal, base) == rhs:
            continue
        # Project out the largest normal coordinate to order the face cycle.
        drop = max(range(3), key=lambda i: abs(normal[i]))
        keep = [i for i in range(3) if i != drop]
        flat = {(p[keep[0]], p[keep[1]]): p for p in face}
        if len(flat) < 3:
            continue
        cycle = order_polygon(list(flat))
        f0 = flat[cycle[0]]
        for i in range(1, len(cycle) - 1):
            p, q = flat[cycle[i]], flat[cycle[i + 1]]
            vol = abs(det([vec_sub(f0, base), vec_sub(p, base), vec_sub(q, base)]))
            if vol == 0:
                continue
            vol = Fraction(vol, 6)
            mean = (
                _affine_value(grad, const, base)
                + _affine_value(grad, const, f0)
                + _affine_value(grad, const, p)
                + _affine_value(grad, const, q)
            ) / 4
            total += vol * mean
    return total


def integrate_affine(pts, constraints, grad, const):
    """Dispatch exact affine integration by ambient dimension of the points."""
    if not pts:
        return Fraction(0)
    dim = len(pts[0])
    if dim == 1:
        return integrate_affine_1d(pts, grad, const)
    if dim == 2:
        return integrate_affine_2d(pts, grad, const)
    if dim == 3:
        return integrate_affine_3d(pts, constraints, grad, const)
    raise ValueError(f"unsupported dimension {dim}")


def region_is_full_dimensional(pts, dim):
    if len(pts) < dim + 1:
        return False
    base = pts[0]
    return matrix_rank([vec_sub(p, base) for p in pts[1:]]) == dim
