import random

import pytest

from trinets import geometry as geo
from trinets.errors import CoincidentArguments, DegenerateFrame, NotADivisor
from trinets.geometry import PrimeField


F13 = PrimeField(13)
F7 = PrimeField(7)


class TestPrimeField:
    def test_rejects_composite_and_small(self):
        for bad in (1, 4, 9, 15, 2, 3):
            with pytest.raises(ValueError):
                PrimeField(bad)

    def test_inverse(self):
        fp = PrimeField(101)
        for x in range(1, 101):
            assert (x * fp.inv(x)) % 101 == 1


class TestMultSubgroup:
    def test_13_3(self):
        assert geo.mult_subgroup(13, 3) == [1, 3, 9]

    def test_trivial(self):
        assert geo.mult_subgroup(13, 1) == [1]

    def test_11_5(self):
        assert geo.mult_subgroup(11, 5) == [1, 3, 9, 5, 4]

    def test_not_a_divisor(self):
        with pytest.raises(NotADivisor):
            geo.mult_subgroup(13, 5)

    @pytest.mark.parametrize("p,n", [(13, 2), (13, 4), (13, 6), (13, 12), (31, 5), (31, 15), (11, 5)])
    def test_closure_and_size(self, p, n):
        h = geo.mult_subgroup(p, n)
        assert len(h) == n == len(set(h))
        hs = set(h)
        assert all(a * b % p in hs for a in h for b in h)
        assert all(pow(a, -1, p) in hs for a in h)
        # listed as consecutive powers of a generator
        g = h[1] if n > 1 else 1
        assert all(h[k] == pow(g, k, p) for k in range(n))


class TestNormalization:
    def test_leading_one(self):
        assert geo.point(F13, 2, 4, 6) == (1, 2, 3)
        assert geo.point(F13, 26, 5, 7) == (0, 1, 4)  # 7 * 5^-1 = 7*8 = 56 = 4
        assert geo.point(F13, 0, 0, 4) == (0, 0, 1)

    def test_idempotent(self):
        rng = random.Random(1)
        for _ in range(200):
            v = tuple(rng.randrange(13) for _ in range(3))
            if v == (0, 0, 0):
                continue
            n1 = geo.normalize(F13, v)
            assert geo.normalize(F13, n1) == n1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            geo.normalize(F13, (0, 0, 0))


class TestIncidence:
    def test_collinear_trivials(self):
        assert geo.collinear(F13, (1, 0, 0), (0, 1, 0), (1, 1, 0))
        assert not geo.collinear(F13, (1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_triangular_law_f13(self):
        # xi = 3, zeta = 3, eta = 9 satisfies xi*zeta = eta
        P = geo.point(F13, 3, 0, 1)
        Q = geo.point(F13, 0, 9, 1)
        R = geo.point(F13, 1, -3, 0)
        assert geo.collinear(F13, P, Q, R)

    def test_coincident_points_collinear(self):
        P = geo.point(F13, 2, 5, 1)
        assert geo.collinear(F13, P, P, geo.point(F13, 1, 1, 1))


class TestJoinMeet:
    def test_trivial(self):
        assert geo.join(F13, (1, 0, 0), (0, 1, 0)) == (0, 0, 1)
        assert geo.meet(F13, (0, 0, 1), (0, 1, 0)) == (1, 0, 0)

    def test_chord_of_conic_f7(self):
        # chord through conic parameters 2 and 3 is [xy, -(x+y), 1]
        P = geo.conic_point(F7, 2)
        Q = geo.conic_point(F7, 3)
        assert geo.join(F7, P, Q) == geo.line(F7, 6, -5, 1)

    def test_coincident_raises(self):
        with pytest.raises(CoincidentArguments):
            geo.join(F13, (1, 2, 3), (1, 2, 3))
        with pytest.raises(CoincidentArguments):
            geo.meet(F13, (1, 2, 3), (1, 2, 3))

    def test_join_meet_duality(self):
        rng = random.Random(7)
        pts = list(geo.all_points(F13))
        for _ in range(100):
            P, Q, R = rng.sample(pts, 3)
            if geo.collinear(F13, P, Q, R):
                continue
            assert geo.meet(F13, geo.join(F13, P, Q), geo.join(F13, P, R)) == P

    def test_incidence_of_join(self):
        rng = random.Random(11)
        pts = list(geo.all_points(F7))
        for _ in range(100):
            P, Q = rng.sample(pts, 2)
            L = geo.join(F7, P, Q)
            assert geo.incident(F7, P, L) and geo.incident(F7, Q, L)


class TestPlaneEnumeration:
    def test_point_count(self):
        pts = list(geo.all_points(F7))
        assert len(pts) == 7 * 7 + 7 + 1
        assert len(set(pts)) == len(pts)

    def test_points_on_line(self):
        for L in [(1, 0, 0), (0, 0, 1), geo.line(F7, 2, 3, 4)]:
            pts = geo.points_on_line(F7, L)
            assert len(pts) == 8 == len(set(pts))
            assert all(geo.incident(F7, P, L) for P in pts)


class TestFrameMap:
    STD = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))

    def test_identity(self):
        assert geo.frame_map(F7, self.STD, self.STD) == geo.identity_matrix()

    def test_swap_is_involution(self):
        swapped = ((0, 1, 0), (1, 0, 0), (0, 0, 1), (1, 1, 1))
        m = geo.frame_map(F7, self.STD, swapped)
        assert geo.compose(F7, m, m) == geo.identity_matrix()

    def test_diagonal_example(self):
        dst = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3))
        m = geo.frame_map(F7, self.STD, dst)
        assert m == geo.projectivity(F7, [[1, 0, 0], [0, 2, 0], [0, 0, 3]])

    def test_roundtrip_inverse(self):
        rng = random.Random(3)
        pts = list(geo.all_points(F13))
        for _ in range(25):
            frame = tuple(rng.sample(pts, 4))
            try:
                fwd = geo.frame_map(F13, self.STD, frame)
            except DegenerateFrame:
                continue
            back = geo.frame_map(F13, frame, self.STD)
            assert geo.compose(F13, back, fwd) == geo.identity_matrix()
            for s, d in zip(self.STD, frame):
                assert geo.apply_point(F13, fwd, s) == geo.normalize(F13, d)

    def test_degenerate_rejected(self):
        bad = ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1))
        with pytest.raises(DegenerateFrame):
            geo.frame_map(F7, bad, self.STD)

    def test_collinear_invariance(self):
        rng = random.Random(5)
        pts = list(geo.all_points(F13))
        m = geo.frame_map(F13, self.STD, ((1, 2, 3), (0, 1, 5), (1, 0, 2), (1, 7, 1)))
        for _ in range(120):
            P, Q, R = rng.sample(pts, 3)
            img = [geo.apply_point(F13, m, X) for X in (P, Q, R)]
            assert geo.collinear(F13, P, Q, R) == geo.collinear(F13, *img)


class TestProjectivityOps:
    def test_apply_line_preserves_incidence(self):
        m = geo.projectivity(F7, [[1, 2, 0], [0, 1, 3], [1, 0, 2]])
        for P in geo.all_points(F7):
            for L in [(0, 0, 1), geo.line(F7, 1, 4, 2)]:
                if geo.incident(F7, P, L):
                    assert geo.incident(F7, geo.apply_point(F7, m, P), geo.apply_line(F7, m, L))

    def test_normalized_composition(self):
        m = geo.projectivity(F7, [[3, 2, 0], [0, 1, 3], [1, 0, 1]])
        assert m[0][0] == 1 or m[0][1] == 1  # leading entry normalized
        assert geo.compose(F7, m, geo.inverse(F7, m)) == geo.identity_matrix()
