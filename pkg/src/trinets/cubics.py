"""Plane cubics over F_p: evaluation, interpolation, classification, and the
chord-tangent group law.

A cubic is a normalized 10-tuple of coefficients in the monomial order
X^3, X^2Y, X^2Z, XY^2, XYZ, XZ^2, Y^3, Y^2Z, YZ^2, Z^3.

Classification brute-forces linear components over all lines of PG(2,p) and
singular points over all points; exact and fast enough for the p <= 200 range
this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import geometry as geo
from . import linalg
from .errors import (CuspidalUnsupported, PointNotOnCurve,
                     SingularPointInvolved, TrinetsError)
from .geometry import Ln, Pt, PrimeField

CubicCoeffs = tuple[int, int, int, int, int, int, int, int, int, int]

MONOMIALS: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
)
CONIC_MONOMIALS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
LINE_MONOMIALS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

# classification tags
NONSINGULAR = "nonsingular-irreducible"
NODAL = "nodal-irreducible"
CUSPIDAL = "cuspidal-irreducible"
CONIC_LINE = "conic-plus-line"
TRIANGLE = "three-lines-triangle"
CONCURRENT = "three-lines-concurrent"
OTHER = "other-degenerate"

IRREDUCIBLE_TAGS = frozenset((NONSINGULAR, NODAL, CUSPIDAL))


def cubic(fp: PrimeField, coeffs) -> CubicCoeffs:
    """Normalize 10 coefficients (first nonzero scaled to 1)."""
    p = fp.p
    c = [v % p for v in coeffs]
    if len(c) != 10:
        raise ValueError("a cubic needs exactly 10 coefficients")
    lead = next((v for v in c if v), None)
    if lead is None:
        raise ValueError("zero polynomial is not a cubic")
    inv = pow(lead, -1, p)
    return tuple(v * inv % p for v in c)


def eval_cubic(fp: PrimeField, F: CubicCoeffs, P: Pt) -> int:
    x, y, z = P
    c = F
    x2, y2, z2 = x * x, y * y, z * z
    return (c[0] * x2 * x + c[1] * x2 * y + c[2] * x2 * z + c[3] * x * y2
            + c[4] * x * y * z + c[5] * x * z2 + c[6] * y2 * y + c[7] * y2 * z
            + c[8] * y * z2 + c[9] * z2 * z) % fp.p


def gradient_at(fp: PrimeField, F: CubicCoeffs, P: Pt) -> tuple[int, int, int]:
    x, y, z = P
    c = F
    p = fp.p
    fx = 3 * c[0] * x * x + 2 * c[1] * x * y + 2 * c[2] * x * z + c[3] * y * y + c[4] * y * z + c[5] * z * z
    fy = c[1] * x * x + 2 * c[3] * x * y + c[4] * x * z + 3 * c[6] * y * y + 2 * c[7] * y * z + c[8] * z * z
    fz = c[2] * x * x + c[4] * x * y + 2 * c[5] * x * z + c[7] * y * y + 2 * c[8] * y * z + 3 * c[9] * z * z
    return (fx % p, fy % p, fz % p)


def hessian_at(fp: PrimeField, F: CubicCoeffs, P: Pt) -> int:
    x, y, z = P
    c = F
    xx = 6 * c[0] * x + 2 * c[1] * y + 2 * c[2] * z
    xy = 2 * c[1] * x + 2 * c[3] * y + c[4] * z
    xz = 2 * c[2] * x + c[4] * y + 2 * c[5] * z
    yy = 2 * c[3] * x + 6 * c[6] * y + 2 * c[7] * z
    yz = c[4] * x + 2 * c[7] * y + 2 * c[8] * z
    zz = 2 * c[5] * x + 2 * c[8] * y + 6 * c[9] * z
    return linalg.det3([[xx, xy, xz], [xy, yy, yz], [xz, yz, zz]], fp.p)


def on_curve(fp: PrimeField, F: CubicCoeffs, P: Pt) -> bool:
    return eval_cubic(fp, F, P) == 0


def is_smooth_point(fp: PrimeField, F: CubicCoeffs, P: Pt) -> bool:
    return on_curve(fp, F, P) and gradient_at(fp, F, P) != (0, 0, 0)


def rational_points(fp: PrimeField, F: CubicCoeffs) -> list[Pt]:
    return [P for P in geo.all_points(fp) if eval_cubic(fp, F, P) == 0]


def singular_points(fp: PrimeField, F: CubicCoeffs) -> list[Pt]:
    """All rational singular points, by full plane scan. With p > 3 a common
    zero of the partials lies on the curve automatically (Euler identity)."""
    return [P for P in geo.all_points(fp) if gradient_at(fp, F, P) == (0, 0, 0)]


def smooth_points(fp: PrimeField, F: CubicCoeffs) -> list[Pt]:
    return [P for P in rational_points(fp, F) if gradient_at(fp, F, P) != (0, 0, 0)]


# -- interpolation ------------------------------------------------------------

def cubic_space_through(fp: PrimeField, points) -> tuple[int, list[CubicCoeffs]]:
    """Dimension and basis of the linear space of cubics through the points."""
    rows = []
    for (x, y, z) in points:
        rows.append([pow(x, a, fp.p) * pow(y, b, fp.p) * pow(z, c, fp.p) % fp.p
                     for (a, b, c) in MONOMIALS])
    basis = [cubic(fp, v) for v in linalg.nullspace(rows, fp.p, ncols=10)]
    return len(basis), basis


# -- polynomial helpers (private) ----------------------------------------------

def _poly_mul(a: dict, b: dict, p: int) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            key = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
            out[key] = (out.get(key, 0) + ca * cb) % p
    return {k: v for k, v in out.items() if v}


def transform_cubic(fp: PrimeField, F: CubicCoeffs, M) -> CubicCoeffs:
    """Coefficients of F(M v): substitution of the linear forms given by M's
    rows into the cubic."""
    p = fp.p
    rows = [{(1, 0, 0): M[i][0] % p, (0, 1, 0): M[i][1] % p, (0, 0, 1): M[i][2] % p}
            for i in range(3)]
    rows = [{k: v for k, v in r.items() if v} for r in rows]
    acc: dict = {}
    for coeff, (a, b, c) in zip(F, MONOMIALS):
        if coeff == 0:
            continue
        term = {(0, 0, 0): coeff}
        for row, power in zip(rows, (a, b, c)):
            for _ in range(power):
                term = _poly_mul(term, row, p)
        for k, v in term.items():
            acc[k] = (acc.get(k, 0) + v) % p
    return cubic(fp, [acc.get(m, 0) for m in MONOMIALS])


# -- factoring out line components ----------------------------------------------

def line_divides(fp: PrimeField, F: CubicCoeffs, L: Ln) -> bool:
    """A line lies in the cubic iff the restriction (a binary cubic) vanishes
    at 4 distinct points of the line."""
    pts = geo.points_on_line(fp, L)
    return all(eval_cubic(fp, F, P) == 0 for P in pts[:4])


def lines_dividing(fp: PrimeField, F: CubicCoeffs) -> list[Ln]:
    return [L for L in geo.all_lines(fp) if line_divides(fp, F, L)]


def _product_matrix(p: int, L: Ln, in_monomials, out_monomials):
    """Matrix of multiplication-by-L from span(in_monomials) to
    span(out_monomials)."""
    out_index = {m: i for i, m in enumerate(out_monomials)}
    mat = [[0] * len(in_monomials) for _ in out_monomials]
    for j, m in enumerate(in_monomials):
        for v in range(3):
            if L[v] % p == 0:
                continue
            key = list(m)
            key[v] += 1
            mat[out_index[tuple(key)]][j] = (mat[out_index[tuple(key)]][j] + L[v]) % p
    return mat


def divide_cubic_by_line(fp: PrimeField, F: CubicCoeffs, L: Ln):
    """The conic Q with L*Q = F, or None when L does not divide F."""
    mat = _product_matrix(fp.p, L, CONIC_MONOMIALS, MONOMIALS)
    q = linalg.solve(mat, list(F), fp.p)
    return tuple(q) if q is not None else None


def divide_conic_by_line(fp: PrimeField, Q, L: Ln):
    """The line M with L*M = Q, or None."""
    mat = _product_matrix(fp.p, L, LINE_MONOMIALS, CONIC_MONOMIALS)
    m = linalg.solve(mat, list(Q), fp.p)
    return geo.normalize(fp, tuple(m)) if m is not None and any(v % fp.p for v in m) else None


def conic_rank(fp: PrimeField, Q) -> int:
    a, b, c, d, e, f = Q
    return linalg.rank([[2 * a, b, c], [b, 2 * d, e], [c, e, 2 * f]], fp.p)


# -- classification -------------------------------------------------------------

@dataclass(frozen=True)
class CubicClass:
    tag: str
    lines: tuple[Ln, ...] = ()
    conic: tuple | None = None
    singular: tuple[Pt, ...] = ()

    @property
    def irreducible(self) -> bool:
        return self.tag in IRREDUCIBLE_TAGS


def classify_cubic(fp: PrimeField, F: CubicCoeffs) -> CubicClass:
    """Decide the splitting type of a cubic.

    Rational linear components are found by the exhaustive line test; with
    none present, a rational singular point (unique for an irreducible curve)
    separates nodal/cuspidal from nonsingular via the tangent cone, and a
    cubic with no rational point at all can only be a Galois orbit of three
    conjugate lines in triangle position.
    """
    comps = lines_dividing(fp, F)
    if len(comps) >= 3:
        l1, l2, l3 = comps[:3]
        concurrent = geo.incident(fp, geo.meet(fp, l1, l2), l3)
        tag = CONCURRENT if concurrent else TRIANGLE
        sing = ()
        if not concurrent:
            sing = tuple(sorted({geo.meet(fp, a, b)
                                 for a, b in ((l1, l2), (l1, l3), (l2, l3))}))
        else:
            sing = (geo.meet(fp, l1, l2),)
        return CubicClass(tag, lines=tuple(comps[:3]), singular=sing)
    if len(comps) == 2:
        return CubicClass(OTHER, lines=tuple(comps),
                          singular=tuple(singular_points(fp, F)))
    if len(comps) == 1:
        l1 = comps[0]
        q = divide_cubic_by_line(fp, F, l1)
        if divide_conic_by_line(fp, q, l1) is not None:
            # repeated line: F = L^2 * M
            return CubicClass(OTHER, lines=(l1,), singular=tuple(singular_points(fp, F)))
        if conic_rank(fp, q) == 3:
            return CubicClass(CONIC_LINE, lines=(l1,), conic=q,
                              singular=tuple(singular_points(fp, F)))
        return CubicClass(OTHER, lines=(l1,), conic=q,
                          singular=tuple(singular_points(fp, F)))
    sing = singular_points(fp, F)
    if sing:
        s = sing[0]
        q2 = _tangent_cone(fp, F, s)
        if q2 == (0, 0, 0):
            return CubicClass(OTHER, singular=tuple(sing))
        a, b, c = q2
        disc = (b * b - 4 * a * c) % fp.p
        tag = NODAL if disc else CUSPIDAL
        return CubicClass(tag, singular=(s,))
    if any(eval_cubic(fp, F, P) == 0 for P in geo.all_points(fp)):
        return CubicClass(NONSINGULAR)
    return CubicClass(OTHER)  # pointless: three conjugate lines in a triangle


def _tangent_cone(fp: PrimeField, F: CubicCoeffs, S: Pt) -> tuple[int, int, int]:
    """Quadratic part of F at the singular point S, in coordinates moving S
    to (0,0,1): coefficients (of X^2, XY, Y^2)."""
    basis = _complete_basis(fp, S)
    m = [[basis[0][i], basis[1][i], S[i]] for i in range(3)]  # columns u, v, S
    g = transform_cubic(fp, F, m)
    # after the move: no Z^3 (S on curve), no XZ^2/YZ^2 (S singular)
    return (g[2], g[4], g[7])  # X^2 Z, XYZ, Y^2 Z


def _complete_basis(fp: PrimeField, S: Pt) -> list[Pt]:
    out = []
    for cand in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        rows = [list(v) for v in out] + [list(cand), list(S)]
        if linalg.rank(rows, fp.p) == len(out) + 2:
            out.append(cand)
        if len(out) == 2:
            return out
    raise AssertionError("basis completion failed")


# -- chord-tangent geometry -----------------------------------------------------

def tangent_line(fp: PrimeField, F: CubicCoeffs, P: Pt) -> Ln:
    if not on_curve(fp, F, P):
        raise PointNotOnCurve(f"{P} not on the cubic")
    g = gradient_at(fp, F, P)
    if g == (0, 0, 0):
        raise SingularPointInvolved(f"{P} is singular")
    return geo.normalize(fp, g)


def _restrict(fp: PrimeField, F: CubicCoeffs, P: Pt, Q: Pt) -> tuple[int, int, int, int]:
    """Coefficients (a3, a2, a1, a0) of the binary cubic F(sP + tQ)."""
    p = fp.p

    def ev(s, t):
        return eval_cubic(fp, F, tuple((s * P[i] + t * Q[i]) % p for i in range(3)))

    a3 = ev(1, 0)
    a0 = ev(0, 1)
    g11 = ev(1, 1)
    g12 = ev(1, 2)
    # g(1,1) = a3+a2+a1+a0 ; g(1,2) = a3+2a2+4a1+8a0
    s1 = (g11 - a3 - a0) % p
    s2 = (g12 - a3 - 8 * a0) % p
    a1 = ((s2 - 2 * s1) * pow(2, -1, p)) % p
    a2 = (s1 - a1) % p
    return a3, a2, a1, a0


def third_intersection(fp: PrimeField, F: CubicCoeffs, P: Pt, Q: Pt) -> Pt:
    """Residual intersection of the line PQ (tangent at P when P = Q) with
    the cubic, multiplicity included."""
    for X in (P, Q):
        if not on_curve(fp, F, X):
            raise PointNotOnCurve(f"{X} not on the cubic")
        if gradient_at(fp, F, X) == (0, 0, 0):
            raise SingularPointInvolved(f"{X} is singular")
    p = fp.p
    if P == Q:
        T = tangent_line(fp, F, P)
        R = next(X for X in geo.points_on_line(fp, T) if X != P)
        a3, a2, a1, a0 = _restrict(fp, F, P, R)
        if (a3, a2) != (0, 0):
            raise AssertionError("tangent restriction must vanish doubly at P")
        if a1 == 0:
            return P  # inflection: triple contact
        return geo.normalize(fp, tuple((a0 * P[i] - a1 * R[i]) % p for i in range(3)))
    a3, a2, a1, a0 = _restrict(fp, F, P, Q)
    if (a3, a0) != (0, 0):
        raise AssertionError("restriction must vanish at P and Q")
    if a2 == 0 and a1 == 0:
        raise TrinetsError("line PQ lies on the cubic; smooth preconditions violated")
    return geo.normalize(fp, tuple((a1 * P[i] - a2 * Q[i]) % p for i in range(3)))


def tangential_point(fp: PrimeField, F: CubicCoeffs, P: Pt) -> Pt:
    return third_intersection(fp, F, P, P)


def inflection_points(fp: PrimeField, F: CubicCoeffs) -> list[Pt]:
    """Smooth rational points where the Hessian vanishes."""
    return [P for P in rational_points(fp, F)
            if gradient_at(fp, F, P) != (0, 0, 0) and hessian_at(fp, F, P) == 0]


# -- the group law ---------------------------------------------------------------

class CubicGroup:
    """Chord-tangent abelian group on the smooth rational points of a
    nonsingular or nodal cubic, with an inflection point as identity."""

    def __init__(self, fp: PrimeField, curve: CubicCoeffs, identity: Pt,
                 points: tuple[Pt, ...]):
        self.fp = fp
        self.curve = curve
        self.identity = identity
        self.points = points
        self.index = {P: i for i, P in enumerate(points)}
        self._sums: dict[tuple[Pt, Pt], Pt] = {}

    def __len__(self) -> int:
        return len(self.points)

    def add(self, P: Pt, Q: Pt) -> Pt:
        key = (P, Q) if P <= Q else (Q, P)
        got = self._sums.get(key)
        if got is None:
            got = third_intersection(self.fp, self.curve,
                                     third_intersection(self.fp, self.curve, P, Q),
                                     self.identity)
            self._sums[key] = got
        return got

    def neg(self, P: Pt) -> Pt:
        return third_intersection(self.fp, self.curve, P, self.identity)

    def sub(self, P: Pt, Q: Pt) -> Pt:
        return self.add(P, self.neg(Q))

    def mul(self, k: int, P: Pt) -> Pt:
        acc = self.identity
        x = P
        if k < 0:
            x = self.neg(x)
            k = -k
        while k:
            if k & 1:
                acc = self.add(acc, x)
            x = self.add(x, x)
            k >>= 1
        return acc

    def order_of(self, P: Pt) -> int:
        k, x = 1, P
        while x != self.identity:
            x = self.add(x, P)
            k += 1
        return k

    def table(self) -> list[list[int]]:
        """Full index-based addition table (meant for small groups)."""
        n = len(self.points)
        return [[self.index[self.add(self.points[i], self.points[j])]
                 for j in range(n)] for i in range(n)]


def build_cubic_group(fp: PrimeField, F: CubicCoeffs, origin: Pt | None = None) -> CubicGroup:
    """Enumerate smooth rational points and anchor the group at an inflection.

    Cuspidal cubics are rejected: their smooth locus carries a group of order
    p, never usable under the p > n convention.
    """
    cls = classify_cubic(fp, F)
    if cls.tag == CUSPIDAL:
        raise CuspidalUnsupported("cuspidal cubic: additive group of order p")
    if cls.tag not in (NONSINGULAR, NODAL):
        raise TrinetsError(f"no group law on a {cls.tag} cubic")
    pts = smooth_points(fp, F)
    if origin is None:
        flexes = [P for P in pts if hessian_at(fp, F, P) == 0]
        if not flexes:
            raise TrinetsError("no rational inflection point to serve as identity")
        origin = min(flexes)
    else:
        origin = geo.normalize(fp, origin)
        if origin not in set(pts):
            raise PointNotOnCurve(f"identity {origin} not a smooth point")
        if tangential_point(fp, F, origin) != origin:
            raise TrinetsError(f"identity {origin} is not an inflection")
    ordered = (origin,) + tuple(sorted(P for P in pts if P != origin))
    return CubicGroup(fp, F, origin, ordered)


def add_points(group: CubicGroup, P: Pt, Q: Pt) -> Pt:
    return group.add(P, Q)


def group_structure(fp: PrimeField, F: CubicCoeffs, origin: Pt | None = None):
    """Invariant factors (a, b) with a | b and matching generators of the
    rational point group."""
    g = build_cubic_group(fp, F, origin)
    n = len(g)
    orders = {P: g.order_of(P) for P in g.points}
    b = 1
    for o in orders.values():
        b = b * o // _gcd(b, o)
    a = n // b
    gen_b = next(P for P, o in orders.items() if o == b)
    if a == 1:
        gens = (gen_b,)
    else:
        span_b = set()
        x = g.identity
        for _ in range(b):
            span_b.add(x)
            x = g.add(x, gen_b)
        gen_a = next(P for P, o in orders.items()
                     if o == a and _independent(g, P, span_b, a))
        gens = (gen_a, gen_b)
    assert b % a == 0 and a * b == n
    return (a, b), gens


def _independent(g: CubicGroup, P: Pt, span_b: set, a: int) -> bool:
    seen = set()
    x = g.identity
    for _ in range(a):
        if x in span_b and x != g.identity:
            return False
        if x in seen:
            return False
        seen.add(x)
        x = g.add(x, P)
    return True


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def torsion_subgroup(g: CubicGroup, d: int) -> list[Pt]:
    """All points with d*P = identity."""
    return [P for P in g.points if g.mul(d, P) == g.identity]


def cubic_to_json(F: CubicCoeffs) -> list[int]:
    return list(F)
