"""Finite groups as Cayley tables, latin squares, and isotopy utilities.

Groups are stored extensionally: an n x n table over symbols 0..n-1. All
groups in this package have order <= 60, so cubic-time associativity checks
and subset scans are perfectly affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import NotACoset, NotAGroup, NotASubgroup, NotNormal


@dataclass(frozen=True)
class LatinSquare:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        symbols = set(range(self.n))
        if len(self.rows) != self.n:
            raise ValueError("row count != n")
        for r in self.rows:
            if set(r) != symbols:
                raise ValueError(f"row {r} is not a permutation of 0..{self.n - 1}")
        for c in range(self.n):
            if {r[c] for r in self.rows} != symbols:
                raise ValueError(f"column {c} is not a permutation")

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]


@dataclass(frozen=True)
class FiniteGroup:
    n: int
    table: LatinSquare
    e: int
    name: str = ""

    def mul(self, a: int, b: int) -> int:
        return self.table.rows[a][b]

    def inv(self, a: int) -> int:
        return self.table.rows[a].index(self.e)

    def elements(self) -> range:
        return range(self.n)

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != self.e:
            x = self.mul(x, a)
            k += 1
        return k

    def conjugate(self, g: int, x: int) -> int:
        return self.mul(self.mul(g, x), self.inv(g))

    def is_abelian(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a)
                   for a in range(self.n) for b in range(a + 1, self.n))

    def to_json(self) -> dict:
        return {"n": self.n, "table": [list(r) for r in self.table.rows],
                "e": self.e, "name": self.name}

    @staticmethod
    def from_json(doc: dict) -> "FiniteGroup":
        return make_group(FromTable(tuple(tuple(r) for r in doc["table"]), doc["e"]),
                          name=doc.get("name", ""))


# -- constructors -------------------------------------------------------------

@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Product:
    m: int
    k: int


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of order 2n."""
    n: int


@dataclass(frozen=True)
class Quaternion8:
    pass


@dataclass(frozen=True)
class Alt4:
    pass


@dataclass(frozen=True)
class Sym4:
    pass


@dataclass(frozen=True)
class Alt5:
    pass


@dataclass(frozen=True)
class FromTable:
    rows: tuple[tuple[int, ...], ...]
    e: int


def _table_from_op(n, op) -> LatinSquare:
    return LatinSquare(n, tuple(tuple(op(a, b) for b in range(n)) for a in range(n)))


def _perm_group(n_letters: int, even_only: bool) -> LatinSquare:
    perms = sorted(p for p in permutations(range(n_letters))
                   if not even_only or _is_even(p))
    index = {p: i for i, p in enumerate(perms)}

    def op(a, b):
        pa, pb = perms[a], perms[b]
        return index[tuple(pa[pb[i]] for i in range(n_letters))]

    return _table_from_op(len(perms), op)


def _is_even(perm) -> bool:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
              if perm[i] > perm[j])
    return inv % 2 == 0


def _q8_table() -> LatinSquare:
    # (sign, axis) with axes 1=scalar, i, j, k and quaternion relations.
    names = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"),
             (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    rule = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
            ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
            ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}
    index = {nm: idx for idx, nm in enumerate(names)}

    def op(a, b):
        (sa, xa), (sb, xb) = names[a], names[b]
        s, x = rule[(xa, xb)]
        return index[(sa * sb * s, x)]

    return _table_from_op(8, op)


def make_group(spec, name: str | None = None) -> FiniteGroup:
    """Build a validated group from a constructor spec."""
    if isinstance(spec, Cyclic):
        table = _table_from_op(spec.n, lambda a, b: (a + b) % spec.n)
        return FiniteGroup(spec.n, table, 0, name or f"C{spec.n}")
    if isinstance(spec, Product):
        m, k = spec.m, spec.k

        def op(a, b):
            return ((a // k + b // k) % m) * k + (a % k + b % k) % k

        return FiniteGroup(m * k, _table_from_op(m * k, op), 0, name or f"C{m}xC{k}")
    if isinstance(spec, Dihedral):
        n = spec.n

        def op(a, b):
            sa, ia = divmod(a, n)
            sb, ib = divmod(b, n)
            if sa == 0 and sb == 0:
                return (ia + ib) % n
            if sa == 0 and sb == 1:
                return n + (ib - ia) % n
            if sa == 1 and sb == 0:
                return n + (ia + ib) % n
            return (ib - ia) % n

        return FiniteGroup(2 * n, _table_from_op(2 * n, op), 0, name or f"D{n}")
    if isinstance(spec, Quaternion8):
        return FiniteGroup(8, _q8_table(), 0, name or "Q8")
    if isinstance(spec, Alt4):
        return FiniteGroup(12, _perm_group(4, True), 0, name or "Alt4")
    if isinstance(spec, Sym4):
        return FiniteGroup(24, _perm_group(4, False), 0, name or "Sym4")
    if isinstance(spec, Alt5):
        return FiniteGroup(60, _perm_group(5, True), 0, name or "Alt5")
    if isinstance(spec, FromTable):
        try:
            square = LatinSquare(len(spec.rows), spec.rows)
        except ValueError as exc:
            raise NotAGroup(str(exc)) from exc
        g = is_group(square)
        if g is None or g.e != spec.e:
            raise NotAGroup("table is not associative or lacks the stated identity")
        return FiniteGroup(g.n, g.table, spec.e, name or "")
    raise TypeError(f"unknown group spec {spec!r}")


def is_group(square: LatinSquare) -> FiniteGroup | None:
    """The group on a latin square, if a two-sided identity exists and the
    table is associative; None otherwise."""
    n = square.n
    e = next((c for c in range(n)
              if all(square.rows[c][x] == x and square.rows[x][c] == x for x in range(n))),
             None)
    if e is None:
        return None
    t = square.rows
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            row_a, row_ab = t[a], t[ab]
            for c in range(n):
                if row_ab[c] != t[a][t[b][c]]:
                    return None
    return FiniteGroup(n, square, e)


def principal_loop_isotope(square: LatinSquare) -> tuple[LatinSquare, list[int], list[int]]:
    """Relabel rows by column 0 and columns by row 0, making cell (0,0) a
    two-sided identity. Returns (loop table, row relabel, column relabel):
    loop[sigma[r]][tau[c]] = square[r][c]."""
    n = square.n
    sigma = [square.rows[r][0] for r in range(n)]
    tau = list(square.rows[0])
    out = [[0] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            out[sigma[r]][tau[c]] = square.rows[r][c]
    return LatinSquare(n, tuple(tuple(r) for r in out)), sigma, tau


# -- isomorphism --------------------------------------------------------------

def _order_profile(g: FiniteGroup) -> dict[int, int]:
    prof: dict[int, int] = {}
    for x in g.elements():
        prof[g.order_of(x)] = prof.get(g.order_of(x), 0) + 1
    return prof


def _generating_sequence(g: FiniteGroup) -> list[int]:
    """Greedy small generating sequence (identity excluded)."""
    gens: list[int] = []
    span = {g.e}
    while len(span) < g.n:
        nxt = min(x for x in g.elements() if x not in span)
        gens.append(nxt)
        span = _closure(g, span | {nxt})
    return gens


def _closure(g: FiniteGroup, seed: set[int]) -> set[int]:
    out = set(seed)
    frontier = list(seed)
    while frontier:
        x = frontier.pop()
        for y in tuple(out):
            for z in (g.mul(x, y), g.mul(y, x)):
                if z not in out:
                    out.add(z)
                    frontier.append(z)
    return out


def isomorphic(g: FiniteGroup, h: FiniteGroup) -> list[int] | None:
    """A witness isomorphism g -> h as a list (image of each element), or
    None. Backtracks over generator images, pruned by element order."""
    if g.n != h.n or _order_profile(g) != _order_profile(h):
        return None
    gens = _generating_sequence(g)
    h_orders: dict[int, list[int]] = {}
    for x in h.elements():
        h_orders.setdefault(h.order_of(x), []).append(x)

    def extend(partial: dict[int, int], imgs: list[int]) -> list[int] | None:
        if len(imgs) == len(gens):
            return [partial[x] for x in g.elements()]
        target = gens[len(imgs)]
        for cand in h_orders.get(g.order_of(target), []):
            if cand in partial.values():
                continue
            trial = dict(partial)
            trial[target] = cand
            if _grow(g, h, trial):
                res = extend(trial, imgs + [cand])
                if res is not None:
                    return res
        return None

    def _grow(g, h, m: dict[int, int]) -> bool:
        # close the partial map under multiplication; detect conflicts
        frontier = list(m.items())
        while frontier:
            x, hx = frontier.pop()
            for y, hy in list(m.items()):
                for (a, b) in ((g.mul(x, y), h.mul(hx, hy)), (g.mul(y, x), h.mul(hy, hx))):
                    if a in m:
                        if m[a] != b:
                            return False
                    else:
                        if b in m.values():
                            return False
                        m[a] = b
                        frontier.append((a, b))
        return True

    return extend({g.e: h.e}, [])


# -- subgroups and cosets ------------------------------------------------------

def is_subgroup(g: FiniteGroup, elems) -> bool:
    s = set(elems)
    return (g.e in s and
            all(g.mul(a, b) in s for a in s for b in s))


def subgroups(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups, as sorted element tuples, by closure growth."""
    found = {(g.e,)}
    frontier = [(g.e,)]
    while frontier:
        base = frontier.pop()
        base_set = set(base)
        for x in g.elements():
            if x in base_set:
                continue
            new = tuple(sorted(_closure(g, base_set | {x})))
            if new not in found:
                found.add(new)
                frontier.append(new)
    return sorted(found, key=lambda s: (len(s), s))


def cosets(g: FiniteGroup, sub, side: str = "left") -> list[tuple[int, ...]]:
    """Partition of G into cosets of sub, ordered by minimal element."""
    if not is_subgroup(g, sub):
        raise NotASubgroup(f"{sub} is not closed")
    s = sorted(set(sub))
    seen: set[int] = set()
    out = []
    for x in g.elements():
        if x in seen:
            continue
        cs = tuple(sorted({g.mul(x, h) for h in s} if side == "left"
                          else {g.mul(h, x) for h in s}))
        seen.update(cs)
        out.append(cs)
    return sorted(out, key=lambda c: c[0])


def is_normal(g: FiniteGroup, sub) -> bool:
    if not is_subgroup(g, sub):
        raise NotASubgroup(f"{sub} is not closed")
    s = set(sub)
    return all(g.conjugate(x, h) in s for x in g.elements() for h in s)


def coset_latin_square(g: FiniteGroup, sub, h1, h2):
    """Extract the latin square with rows H1, columns H2 (cosets of a normal
    subgroup H) and the relabeling maps onto H's own table.

    Returns (square, rho, kappa, nu) with H-elements rho[i], kappa[j], nu[k]
    such that nu[square[i][j]] = rho[i] * kappa[j] in G for all cells.
    """
    if not is_normal(g, sub):
        raise NotNormal(f"{sub} is not normal")
    all_cosets = set(cosets(g, sub))
    h1 = tuple(sorted(h1))
    h2 = tuple(sorted(h2))
    if h1 not in all_cosets or h2 not in all_cosets:
        raise NotACoset("H1/H2 must be cosets of the subgroup")
    t1, t2 = h1[0], h2[0]
    # products land in the single coset t1*H*t2; relabel its elements 0..n-1
    prod_coset = sorted({g.mul(a, b) for a in h1 for b in h2})
    val_index = {v: i for i, v in enumerate(prod_coset)}
    n = len(sub)
    square = LatinSquare(n, tuple(
        tuple(val_index[g.mul(h1[i], h2[j])] for j in range(n)) for i in range(n)))
    inv_t1 = g.inv(t1)
    inv_t2 = g.inv(t2)
    rho = [g.mul(inv_t1, h1[i]) for i in range(n)]          # h1 = t1 * rho[i]
    kappa = [g.mul(h2[j], inv_t2) for j in range(n)]        # h2 = kappa[j] * t2
    nu = [g.mul(inv_t1, g.mul(v, inv_t2)) for v in prod_coset]  # v = t1 * nu * t2
    return square, rho, kappa, nu
