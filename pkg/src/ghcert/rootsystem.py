"""Root systems of the finite Cartan types, with exact rational arithmetic.

Conventions (part of the external contract, documented in the README):

* Cartan matrix: ``A[i][j] = <alpha_j, alpha_i^vee> = alpha_j(h_i)``.
* ``d[i] = (alpha_i, alpha_i)/2`` with shortest root of each simple factor
  normalized to squared length 2.
* Weights are stored by their values on the simple coroots h_1..h_l
  ("fundamental coordinates"); roots by their simple-root coordinates.
* Positive roots are ordered by height, then lexicographically by their
  simple-root coordinate tuples (ascending).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ghcert.errors import InvalidCartanType, LengthOutOfRange, NonDominant, SearchTooLarge
from ghcert.linalg import inverse, matvec

WEYL_ORDER_CAP = 10**7

_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_WEYL_ORDERS_EXC = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


def _admissible(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in ("B", "C"):
        return rank >= 2
    if family == "D":
        return rank >= 4
    if family in _EXCEPTIONAL_RANKS:
        return rank in _EXCEPTIONAL_RANKS[family]
    return False


@dataclass(frozen=True)
class CartanType:
    """An ordered product of simple factors, e.g. A2 or A1xA1."""

    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise InvalidCartanType("empty Cartan type")
        for fam, rank in self.factors:
            if not isinstance(rank, int) or not _admissible(fam, rank):
                raise InvalidCartanType(f"inadmissible factor {fam}{rank}")

    @classmethod
    def parse(cls, spec) -> "CartanType":
        """Accepts 'A2', 'A1xA1', or a list like ['A1', 'A1']."""
        if isinstance(spec, CartanType):
            return spec
        if isinstance(spec, str):
            parts = spec.replace("×", "x").split("x")
        else:
            parts = list(spec)
        factors = []
        for p in parts:
            p = p.strip()
            if len(p) < 2 or p[0] not in "ABCDEFG" or not p[1:].isdigit():
                raise InvalidCartanType(f"cannot parse factor {p!r}")
            factors.append((p[0], int(p[1:])))
        return cls(tuple(factors))

    def __str__(self):
        return "x".join(f"{f}{r}" for f, r in self.factors)

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)

    def weyl_order(self) -> int:
        order = 1
        for fam, r in self.factors:
            if fam == "A":
                n = 1
                for i in range(2, r + 2):
                    n *= i
            elif fam in ("B", "C"):
                n = 2**r
                for i in range(2, r + 1):
                    n *= i
            elif fam == "D":
                n = 2 ** (r - 1)
                for i in range(2, r + 1):
                    n *= i
            else:
                n = _WEYL_ORDERS_EXC[(fam, r)]
            order *= n
        return order


def _simple_cartan_matrix(family: str, rank: int):
    """Cartan matrix and symmetrizers d of one simple factor."""
    A = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    d = [1] * rank

    def edge(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    if family == "A":
        for i in range(rank - 1):
            edge(i, i + 1)
    elif family == "B":
        # alpha_rank short, the rest long
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 2, rank - 1, -1, -2)
        d = [2] * (rank - 1) + [1]
    elif family == "C":
        # alpha_rank long
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 2, rank - 1, -2, -1)
        d = [1] * (rank - 1) + [2]
    elif family == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif family == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-rank, node 2 attached to 4
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, -1, -2)
        edge(2, 3)
        d = [2, 2, 1, 1]
    elif family == "G":
        # alpha_1 short, alpha_2 long
        edge(0, 1, -3, -1)
        d = [1, 3]
    return A, d


class RootSystem:
    """Root system data for a (possibly non-simple) Cartan type."""

    def __init__(self, ctype: CartanType):
        self.ctype = ctype
        self.rank = ctype.rank
        self.cartan = [[0] * self.rank for _ in range(self.rank)]
        self.d = [0] * self.rank
        self.factor_ranges = []
        off = 0
        for fam, r in ctype.factors:
            A, d = _simple_cartan_matrix(fam, r)
            for i in range(r):
                self.d[off + i] = d[i]
                for j in range(r):
                    self.cartan[off + i][off + j] = A[i][j]
            self.factor_ranges.append(range(off, off + r))
            off += r
        self.positive_roots = self._generate_positive_roots()
        self.root_index = {c: i for i, c in enumerate(self.positive_roots)}
        self.root_set = set(self.positive_roots) | {
            tuple(-x for x in c) for c in self.positive_roots
        }
        self._cartan_inv = None

    # -- root generation ------------------------------------------------

    def _generate_positive_roots(self):
        simples = []
        for i in range(self.rank):
            c = [0] * self.rank
            c[i] = 1
            simples.append(tuple(c))
        roots = set(simples)
        frontier = list(simples)
        while frontier:
            new = []
            for beta in frontier:
                for i in range(self.rank):
                    p = 0
                    cur = list(beta)
                    while True:
                        cur[i] -= 1
                        t = tuple(cur)
                        if t in roots:
                            p += 1
                        else:
                            break
                    pairing = sum(beta[j] * self.cartan[i][j] for j in range(self.rank))
                    if p - pairing > 0:
                        up = list(beta)
                        up[i] += 1
                        t = tuple(up)
                        if t not in roots:
                            roots.add(t)
                            new.append(t)
            frontier = new
        return sorted(roots, key=lambda c: (sum(c), c))

    def is_root(self, c) -> bool:
        return tuple(c) in self.root_set

    def height(self, c) -> int:
        return sum(c)

    # -- invariant bilinear form ---------------------------------------

    def root_ip(self, b, c) -> Fraction:
        """(beta, gamma) for roots in simple-root coordinates."""
        return Fraction(
            sum(
                b[i] * c[j] * self.d[i] * self.cartan[i][j]
                for i in range(self.rank)
                for j in range(self.rank)
                if b[i] and c[j]
            )
        )

    def weight_root_ip(self, lam, c) -> Fraction:
        """(lambda, beta) for a weight in fundamental coordinates."""
        return sum(Fraction(c[j] * self.d[j]) * lam[j] for j in range(self.rank) if c[j])

    def pair_coroot(self, lam, c) -> Fraction:
        """<lambda, beta^vee> = 2 (lambda, beta) / (beta, beta)."""
        return 2 * self.weight_root_ip(lam, c) / self.root_ip(c, c)

    def root_to_weight(self, c):
        """Fundamental coordinates of a root (its values on the h_i)."""
        return tuple(
            Fraction(sum(c[j] * self.cartan[i][j] for j in range(self.rank)))
            for i in range(self.rank)
        )

    def cartan_inverse(self):
        if self._cartan_inv is None:
            self._cartan_inv = inverse([[Fraction(x) for x in row] for row in self.cartan])
        return self._cartan_inv

    def weight_to_root_coords(self, lam):
        return tuple(matvec(self.cartan_inverse(), [Fraction(x) for x in lam]))

    def weight_ip(self, lam, mu) -> Fraction:
        """(lambda, mu) for two weights in fundamental coordinates."""
        c = self.weight_to_root_coords(mu)
        return sum(lam[j] * c[j] * self.d[j] for j in range(self.rank))

    def coroot_coeffs(self, c):
        """Integer coefficients of beta^vee on the simple coroots h_i."""
        dd = self.root_ip(c, c) / 2
        out = []
        for i in range(self.rank):
            k = Fraction(c[i] * self.d[i]) / dd
            assert k.denominator == 1
            out.append(int(k))
        return tuple(out)

    # -- Weyl group ----------------------------------------------------

    def simple_reflection_matrix(self, i):
        """Matrix of s_i on fundamental coordinates (columns act on weights)."""
        n = self.rank
        m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for j in range(n):
            m[j][i] -= Fraction(self.cartan[j][i])
        return m

    def reflect_simple(self, i, lam):
        return tuple(lam[j] - lam[i] * self.cartan[j][i] for j in range(self.rank))

    def reflect_root(self, c, lam):
        k = self.pair_coroot(lam, c)
        f = self.root_to_weight(c)
        return tuple(x - k * y for x, y in zip(lam, f))

    def act_on_root(self, matrix, c):
        """Image of a root (simple-root coords) under a weight-coords matrix."""
        f = matvec(matrix, list(self.root_to_weight(c)))
        return tuple(self.weight_to_root_coords(f))

    def weyl_by_length(self, max_len=None):
        """BFS enumeration of the Weyl group grouped by length.

        Returns a list `levels` with levels[r] = list of WeylElement of
        length r.  Deduplication is by the canonical action matrix.
        """
        if self.ctype.weyl_order() > WEYL_ORDER_CAP:
            raise SearchTooLarge(
                f"Weyl group of {self.ctype} exceeds the {WEYL_ORDER_CAP} cap"
            )
        n = self.rank
        ident = tuple(tuple(Fraction(int(r == c)) for c in range(n)) for r in range(n))
        gens = [
            tuple(tuple(row) for row in self.simple_reflection_matrix(i)) for i in range(n)
        ]
        seen = {ident}
        levels = [[WeylElement((), ident)]]
        frontier = [((), ident)]
        while frontier:
            if max_len is not None and len(levels) > max_len:
                break
            nxt = []
            for word, mat in frontier:
                for i in range(n):
                    prod = tuple(
                        tuple(
                            sum(gens[i][r][k] * mat[k][c] for k in range(n))
                            for c in range(n)
                        )
                        for r in range(n)
                    )
                    if prod not in seen:
                        seen.add(prod)
                        nxt.append((word + (i,), prod))
            if not nxt:
                break
            levels.append([WeylElement(tuple(reversed(w)), m) for w, m in sorted(nxt)])
            frontier = nxt
        return levels

    def weyl_elements_of_length(self, r: int):
        n_pos = len(self.positive_roots)
        if r < 0 or r > n_pos:
            raise LengthOutOfRange(f"length {r} not in [0, {n_pos}]")
        levels = self.weyl_by_length(max_len=r)
        if r >= len(levels):
            return []
        return levels[r]

    def length_of_matrix(self, matrix) -> int:
        """Number of positive roots sent negative by the action matrix."""
        count = 0
        for c in self.positive_roots:
            img = self.act_on_root(matrix, c)
            if tuple(img) not in self.root_index:
                count += 1
        return count

    # -- weights -------------------------------------------------------

    def rho(self):
        """Half-sum of the positive roots, in fundamental coordinates."""
        return tuple(Fraction(1) for _ in range(self.rank))

    def is_dominant(self, lam) -> bool:
        return all(x >= 0 for x in lam)

    def is_integral(self, lam) -> bool:
        return all(Fraction(x).denominator == 1 for x in lam)

    def weyl_dimension(self, lam) -> int:
        """Weyl dimension formula; exact positive integer."""
        if not (self.is_dominant(lam) and self.is_integral(lam)):
            raise NonDominant(f"{lam} is not dominant integral")
        rho = self.rho()
        num = Fraction(1)
        den = Fraction(1)
        shifted = [Fraction(x) + 1 for x in lam]
        for c in self.positive_roots:
            num *= self.weight_root_ip(shifted, c)
            den *= self.weight_root_ip(rho, c)
        val = num / den
        assert val.denominator == 1 and val > 0
        return int(val)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word plus fundamental-coords matrix."""

    word: tuple
    matrix: tuple

    @property
    def length(self) -> int:
        return len(self.word)


@lru_cache(maxsize=None)
def root_system(ctype_str: str) -> RootSystem:
    return RootSystem(CartanType.parse(ctype_str))
