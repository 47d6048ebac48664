"""Exact projective plane PG(2, F_p).

Points and lines are normalized homogeneous triples of ints (first nonzero
coordinate scaled to 1), so equality, hashing and deduplication are plain
tuple operations. Projectivities are normalized 3x3 matrices with the same
convention. Everything is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import CoincidentArguments, DegenerateFrame, NotADivisor

Pt = tuple[int, int, int]
Ln = tuple[int, int, int]
Mat = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """F_p with p a prime >= 5. Elements are plain ints in [0, p)."""

    p: int

    def __post_init__(self):
        if self.p < 5 or not _is_prime(self.p):
            raise ValueError(f"p must be a prime >= 5, got {self.p}")

    def inv(self, x: int) -> int:
        return pow(x % self.p, -1, self.p)

    def elements(self) -> range:
        return range(self.p)

    def units(self) -> range:
        return range(1, self.p)


def mult_subgroup(p: int, n: int) -> list[int]:
    """The order-n subgroup of F_p^*, listed as consecutive powers of its
    smallest generator of exact order n."""
    fp = PrimeField(p)
    if n <= 0 or (p - 1) % n:
        raise NotADivisor(f"{n} does not divide {p - 1}")
    if n == 1:
        return [1]
    prime_parts = _prime_factors(n)
    for g in range(2, p):
        if pow(g, n, p) != 1:
            continue
        if all(pow(g, n // q, p) != 1 for q in prime_parts):
            return [pow(g, k, p) for k in range(n)]
    raise AssertionError(f"no element of order {n} mod {p}")  # unreachable: F_p^* is cyclic


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- points and lines ---------------------------------------------------------

def normalize(fp: PrimeField, v) -> Pt:
    """Scale a nonzero triple so its first nonzero coordinate is 1."""
    p = fp.p
    x, y, z = (v[0] % p, v[1] % p, v[2] % p)
    if x:
        i = pow(x, -1, p)
        return (1, y * i % p, z * i % p)
    if y:
        i = pow(y, -1, p)
        return (0, 1, z * i % p)
    if z:
        return (0, 0, 1)
    raise ValueError("zero vector has no projective class")


def point(fp: PrimeField, x: int, y: int, z: int) -> Pt:
    return normalize(fp, (x, y, z))


def line(fp: PrimeField, a: int, b: int, c: int) -> Ln:
    return normalize(fp, (a, b, c))


def incident(fp: PrimeField, P: Pt, L: Ln) -> bool:
    return (P[0] * L[0] + P[1] * L[1] + P[2] * L[2]) % fp.p == 0


def collinear(fp: PrimeField, P: Pt, Q: Pt, R: Pt) -> bool:
    """Vanishing of the 3x3 coordinate determinant mod p."""
    return linalg.det3([list(P), list(Q), list(R)], fp.p) == 0


def _cross(fp: PrimeField, u, v) -> Pt:
    p = fp.p
    return normalize(fp, (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ))


def join(fp: PrimeField, P: Pt, Q: Pt) -> Ln:
    if P == Q:
        raise CoincidentArguments(f"join of equal points {P}")
    return _cross(fp, P, Q)


def meet(fp: PrimeField, L: Ln, M: Ln) -> Pt:
    if L == M:
        raise CoincidentArguments(f"meet of equal lines {L}")
    return _cross(fp, L, M)


def all_points(fp: PrimeField):
    """Every point of PG(2,p), in normalized form: p^2 + p + 1 of them."""
    p = fp.p
    for y in range(p):
        for z in range(p):
            yield (1, y, z)
    for z in range(p):
        yield (0, 1, z)
    yield (0, 0, 1)


def points_on_line(fp: PrimeField, L: Ln) -> list[Pt]:
    """The p + 1 points of a line, via two spanning points."""
    P, Q = (normalize(fp, tuple(v)) for v in linalg.nullspace([list(L)], fp.p))
    pts = [P]
    pts.extend(
        normalize(fp, (Q[0] + t * P[0], Q[1] + t * P[1], Q[2] + t * P[2]))
        for t in range(fp.p)
    )
    return pts


def all_lines(fp: PrimeField):
    """Every line of PG(2,p) in normalized dual coordinates."""
    yield from all_points(fp)  # same normal forms on the dual side


# -- projectivities -----------------------------------------------------------

def normalize_matrix(fp: PrimeField, m) -> Mat:
    """Scale a 3x3 matrix so its first nonzero entry (row-major) is 1."""
    p = fp.p
    flat = [m[i][j] % p for i in range(3) for j in range(3)]
    lead = next((v for v in flat if v), None)
    if lead is None:
        raise ValueError("zero matrix")
    inv = pow(lead, -1, p)
    return tuple(tuple(m[i][j] * inv % p for j in range(3)) for i in range(3))


def projectivity(fp: PrimeField, m) -> Mat:
    mm = normalize_matrix(fp, m)
    if linalg.det3(mm, fp.p) == 0:
        raise ValueError("singular matrix is not a projectivity")
    return mm


def identity_matrix() -> Mat:
    return ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def apply_point(fp: PrimeField, M: Mat, P: Pt) -> Pt:
    return normalize(fp, linalg.mat_vec(M, P, fp.p))


def apply_line(fp: PrimeField, M: Mat, L: Ln) -> Ln:
    """Image of a line: dual action by the inverse transpose."""
    inv = linalg.inv3(M, fp.p)
    t = [[inv[j][i] for j in range(3)] for i in range(3)]
    return normalize(fp, linalg.mat_vec(t, L, fp.p))


def compose(fp: PrimeField, M: Mat, N: Mat) -> Mat:
    """M after N."""
    return normalize_matrix(fp, linalg.mat_mul(M, N, fp.p))


def inverse(fp: PrimeField, M: Mat) -> Mat:
    return normalize_matrix(fp, linalg.inv3(M, fp.p))


def _frame_to_standard(fp: PrimeField, pts: tuple[Pt, Pt, Pt, Pt]) -> Mat:
    """Matrix sending the standard frame e1,e2,e3,(1,1,1) to the given frame."""
    p = fp.p
    p1, p2, p3, p4 = pts
    for trio in ((p1, p2, p3), (p1, p2, p4), (p1, p3, p4), (p2, p3, p4)):
        if collinear(fp, *trio):
            raise DegenerateFrame(f"three of {pts} are collinear")
    cols = [list(p1), list(p2), list(p3)]
    rows = [[cols[j][i] for j in range(3)] for i in range(3)]
    lam = linalg.solve(rows, list(p4), p)
    if lam is None or 0 in [v % p for v in lam]:
        raise DegenerateFrame(f"unity point {p4} not in general position")
    return tuple(tuple(cols[j][i] * lam[j] % p for j in range(3)) for i in range(3))


def frame_map(fp: PrimeField, src: tuple[Pt, Pt, Pt, Pt], dst: tuple[Pt, Pt, Pt, Pt]) -> Mat:
    """The unique projectivity with src_i -> dst_i for the two 4-point frames."""
    a = _frame_to_standard(fp, tuple(normalize(fp, s) for s in src))
    b = _frame_to_standard(fp, tuple(normalize(fp, d) for d in dst))
    return normalize_matrix(fp, linalg.mat_mul(b, linalg.inv3(a, fp.p), fp.p))


# -- the standard conic Y^2 = XZ ----------------------------------------------

def conic_point(fp: PrimeField, t: int) -> Pt:
    """Parametrization t -> (1, t, t^2) of Y^2 = XZ; t = None is (0,0,1)."""
    return normalize(fp, (1, t, t * t))


def conic_chord(fp: PrimeField, s: int, t: int) -> Ln:
    """Chord of Y^2 = XZ through parameters s and t (tangent when s = t)."""
    return normalize(fp, (s * t, -(s + t), 1))


def point_to_json(P: Pt) -> list[int]:
    return list(P)


def line_to_json(L: Ln) -> dict:
    return {"dual": True, "coeffs": list(L)}


def field_to_json(fp: PrimeField) -> dict:
    return {"p": fp.p}
