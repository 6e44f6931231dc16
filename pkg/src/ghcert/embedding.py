"""The embedded pair (k, t): closure, reductivity checks, the ideal test,
the Killing complement, and the regular element h.

Input contract: the torus t must lie inside the standard Cartan h_std of g
(its basis vectors are supported on the Cartan coordinates).  This keeps
every ad-spectrum rational and lets t-weight spaces be read off from the
root decomposition.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from ghcert.algebra import LieAlgebra, Subspace
from ghcert.errors import (
    DegenerateRestriction,
    InputInvalid,
    NoRegularFound,
    NotTInvariant,
    ReducedToZero,
    TNotInK,
)
from ghcert.linalg import matvec, nullspace, rank, solve, transpose
from ghcert.rootsystem import CartanType
from ghcert.weights import WeightMultiset
from ghcert import algebra as _algebra


@dataclass(frozen=True)
class ReductivityReport:
    bracket_closed: bool
    killing_nondegenerate_on_k: bool
    toral_action_semisimple: bool

    @property
    def passed(self) -> bool:
        return (
            self.bracket_closed
            and self.killing_nondegenerate_on_k
            and self.toral_action_semisimple
        )


@dataclass
class EmbeddedSubalgebra:
    k: Subspace
    t: Subspace
    generators: list
    checks: ReductivityReport


@dataclass
class RegularElement:
    h: list  # coordinates in the algebra basis
    t_coeffs: tuple  # integer coefficients on the t basis rows
    k_root_values: dict  # t-root of k (coords tuple) -> nonzero Fraction
    g_spectrum: tuple  # sorted ((eigenvalue, multiplicity), ...)


def close_generators(L: LieAlgebra, gens) -> Subspace:
    """Smallest bracket-closed subspace containing the generators."""
    if not gens:
        raise InputInvalid("generator list is empty")
    space = Subspace.from_vectors([list(g) for g in gens], L.dim)
    while True:
        extra = []
        rows = [list(r) for r in space.rows]
        for i, x in enumerate(rows):
            for y in rows[i:]:
                b = L.bracket(x, y)
                if any(c != 0 for c in b):
                    extra.append(b)
        bigger = Subspace.from_vectors(rows + extra, L.dim)
        if bigger.dim == space.dim:
            return space
        space = bigger


def _min_poly(M):
    """Minimal polynomial of a rational matrix, ascending coefficients."""
    n = len(M)
    poly = [Fraction(1)]  # constant 1 = minimal polynomial of nothing yet
    for start in range(n):
        v = [Fraction(int(i == start)) for i in range(n)]
        iterates = [v]
        while True:
            nxt = matvec(M, iterates[-1])
            combo = solve(transpose(iterates), nxt)
            if combo is not None:
                local = [-c for c in combo] + [Fraction(1)]
                poly = _poly_lcm(poly, local)
                break
            iterates.append(nxt)
        if len(poly) == n + 1:
            break
    return poly


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b != [Fraction(0)] and any(x != 0 for x in b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a[-1] != 1:
        inv = Fraction(1) / a[-1]
        a = [x * inv for x in a]
    return a


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_lcm(a, b):
    g = _poly_gcd(a, b)
    q, r = _poly_divmod(_poly_mul(a, b), g)
    assert not any(x != 0 for x in r)
    if q[-1] != 1:
        inv = Fraction(1) / q[-1]
        q = [x * inv for x in q]
    return q


def _poly_derivative(p):
    return _poly_trim([i * c for i, c in enumerate(p)][1:] or [Fraction(0)])


def _squarefree(p) -> bool:
    g = _poly_gcd(p, _poly_derivative(p))
    return len(g) == 1


def verify_reductive(L: LieAlgebra, k: Subspace, t: Subspace) -> ReductivityReport:
    """The practical battery standing in for 'reductive in g, algebraic'."""
    if not k.contains_subspace(t):
        raise TNotInK("t is not contained in k")
    rows = [list(r) for r in k.rows]
    closed = True
    for i, x in enumerate(rows):
        for y in rows[i:]:
            if not k.contains(L.bracket(x, y)):
                closed = False
                break
        if not closed:
            break
    gram = [[L.killing(x, y) for y in rows] for x in rows]
    nondeg = k.dim == 0 or rank(gram) == k.dim
    semisimple = all(_squarefree(_min_poly(L.ad(list(r)))) for r in t.rows)
    return ReductivityReport(closed, nondeg, semisimple)


def make_embedding(L: LieAlgebra, gens, t_rows) -> EmbeddedSubalgebra:
    """Close the generators and validate the full (k, t) input contract."""
    k = close_generators(L, gens)
    t = Subspace.from_vectors([list(r) for r in t_rows], L.dim)
    for r in t.rows:
        if any(r[i] != 0 for i in range(L.rank, L.dim)):
            raise InputInvalid("t basis vectors must lie in the standard Cartan")
    for i, x in enumerate(t.rows):
        for y in t.rows[i:]:
            if any(c != 0 for c in L.bracket(list(x), list(y))):
                raise InputInvalid("t is not abelian")
    checks = verify_reductive(L, k, t)
    # t must be self-centralizing in k (a Cartan subalgebra of k)
    cent = centralizer_in(L, t, k)
    if cent != t:
        raise InputInvalid(
            f"t (dim {t.dim}) is not self-centralizing in k (centralizer dim {cent.dim})"
        )
    return EmbeddedSubalgebra(k, t, [list(g) for g in gens], checks)


def centralizer_in(L: LieAlgebra, t: Subspace, k: Subspace):
    """{x in k : [t, x] = 0} as a Subspace."""
    rows = [list(r) for r in k.rows]
    if not rows:
        return Subspace((), L.dim)
    cols = []
    for x in rows:
        col = []
        for tv in t.rows:
            col.extend(L.bracket(list(tv), x))
        cols.append(col)
    coeff = transpose(cols)
    sols = nullspace(coeff, n_cols=len(rows)) if coeff else []
    vecs = []
    for s in sols:
        vecs.append([sum(s[i] * rows[i][c] for i in range(len(rows))) for c in range(L.dim)])
    return Subspace.from_vectors(vecs, L.dim)


def is_ideal(L: LieAlgebra, k: Subspace) -> bool:
    for i in range(L.dim):
        b = L.basis_vector(L.basis[i])
        for x in k.rows:
            if not k.contains(L.bracket(b, list(x))):
                return False
    return True


def killing_perp(L: LieAlgebra, k: Subspace) -> Subspace:
    """Killing-orthogonal complement of k in g."""
    if k.dim == 0:
        return Subspace.from_vectors([L.basis_vector(l) for l in L.basis], L.dim)
    pairing = [matvec(L.killing_matrix, list(r)) for r in k.rows]
    perp_rows = nullspace(pairing, n_cols=L.dim)
    perp = Subspace.from_vectors(perp_rows, L.dim)
    if k.intersect(perp).dim != 0:
        raise DegenerateRestriction("k meets its Killing complement nontrivially")
    assert k.dim + perp.dim == L.dim
    return perp


@dataclass
class Reduction:
    """Result of splitting off the simple ideals of g contained in k."""

    removed_factors: tuple  # indices into the original factor list
    algebra: LieAlgebra
    k: Subspace
    t: Subspace
    old_columns: tuple  # basis index in the original algebra per new basis index


def split_off_contained_ideals(L: LieAlgebra, k: Subspace, t: Subspace):
    """Drop every simple ideal of g lying inside k; None if nothing to drop."""
    ideals = L.simple_ideal_subspaces()
    contained = [i for i, ideal in enumerate(ideals) if k.contains_subspace(ideal)]
    if not contained:
        return None
    kept = [i for i in range(len(ideals)) if i not in contained]
    if not kept:
        raise ReducedToZero("k contains every simple ideal of g, so k = g")
    ctype = CartanType(tuple(L.ctype.factors[i] for i in kept))
    L_red = _algebra.build_algebra(ctype)
    kept_cols = sorted(c for i in kept for c in L.rs.factor_ranges[i])

    def embed_root(c_red):
        full = [0] * L.rank
        pos = 0
        for i in kept:
            for j in L.rs.factor_ranges[i]:
                full[j] = c_red[pos]
                pos += 1
        return tuple(full)

    old_columns = []
    for label in L_red.basis:
        if label[0] == "h":
            old_columns.append(L.index[("h", kept_cols[label[1]])])
        else:
            old_columns.append(L.index[(label[0], embed_root(label[1]))])

    rest = ideals[kept[0]]
    for i in kept[1:]:
        rest = rest.sum(ideals[i])
    k_rest = k.intersect(rest)
    t_rest = t.intersect(rest)
    if k_rest.dim != k.dim - sum(ideals[i].dim for i in contained):
        raise InputInvalid("k does not split along the contained ideals")
    if t_rest.dim != t.dim - sum(L.ctype.factors[i][1] for i in contained):
        raise InputInvalid("t does not split along the contained ideals")
    k_red = Subspace.from_vectors(
        [[row[c] for c in old_columns] for row in k_rest.rows], L_red.dim
    )
    t_red = Subspace.from_vectors(
        [[row[c] for c in old_columns] for row in t_rest.rows], L_red.dim
    )
    return Reduction(tuple(contained), L_red, k_red, t_red, tuple(old_columns))


# -- joint t-weight decomposition --------------------------------------


def basis_t_weights(L: LieAlgebra, t: Subspace):
    """t-weight (coords tuple) of each Chevalley basis element of g."""
    out = []
    for label in L.basis:
        if label[0] == "h":
            out.append((Fraction(0),) * t.dim)
        else:
            f = L.rs.root_to_weight(label[1])
            sign = 1 if label[0] == "e" else -1
            out.append(
                tuple(
                    sign * sum(Fraction(row[i]) * f[i] for i in range(L.rank))
                    for row in t.rows
                )
            )
    return out


def joint_weight_spaces(L: LieAlgebra, t: Subspace):
    """Decomposition of g into joint t-weight coordinate subspaces."""
    wts = basis_t_weights(L, t)
    groups = {}
    for idx, w in enumerate(wts):
        groups.setdefault(w, []).append(idx)
    out = {}
    for w, idxs in groups.items():
        vecs = []
        for i in idxs:
            v = L.zero()
            v[i] = Fraction(1)
            vecs.append(v)
        out[w] = Subspace.from_vectors(vecs, L.dim)
    return out


def t_weight_spaces_of(L: LieAlgebra, t: Subspace, V: Subspace):
    """V split into joint t-weight pieces; errors if the pieces miss some of V."""
    pieces = {}
    total = 0
    for w, gw in joint_weight_spaces(L, t).items():
        inter = V.intersect(gw)
        if inter.dim:
            pieces[w] = inter
            total += inter.dim
    if total != V.dim:
        raise NotTInvariant(
            f"subspace is not a sum of joint t-weight spaces ({total} of {V.dim})"
        )
    return pieces


def t_roots_of_k(L: LieAlgebra, emb: EmbeddedSubalgebra) -> WeightMultiset:
    """Nonzero joint t-weights of ad t on k, with multiplicities."""
    ms = WeightMultiset("t")
    for w, piece in t_weight_spaces_of(L, emb.t, emb.k).items():
        if any(x != 0 for x in w):
            ms.add(w, piece.dim)
    return ms


# -- regular element ---------------------------------------------------


def _shells(dim, max_height):
    for radius in range(max_height + 1):
        shell = []

        def rec(prefix):
            if len(prefix) == dim:
                if max(abs(x) for x in prefix) == radius:
                    shell.append(tuple(prefix))
                return
            for v in range(-radius, radius + 1):
                rec(prefix + [v])

        rec([])
        yield shell


def regular_from_coeffs(L: LieAlgebra, emb: EmbeddedSubalgebra, coeffs):
    """RegularElement for h = sum coeffs[i] * t_basis[i], or None if some
    nonzero joint t-weight of g vanishes on it."""
    t = emb.t
    coeffs = tuple(Fraction(c) for c in coeffs)
    wts = basis_t_weights(L, t)
    spectrum = {}
    for w in wts:
        val = sum(c * x for c, x in zip(coeffs, w))
        if val == 0 and any(x != 0 for x in w):
            return None
        spectrum[val] = spectrum.get(val, 0) + 1
    h = [
        sum(c * row[i] for c, row in zip(coeffs, t.rows))
        for i in range(L.dim)
    ]
    kvals = {
        root: sum(c * x for c, x in zip(coeffs, root))
        for root in t_roots_of_k(L, emb).entries
    }
    return RegularElement(
        h=h,
        t_coeffs=coeffs,
        k_root_values=kvals,
        g_spectrum=tuple(sorted(spectrum.items())),
    )


def choose_regular(
    L: LieAlgebra, emb: EmbeddedSubalgebra, seed: int = 0, max_height: int = 6
) -> RegularElement:
    """Deterministic seeded search for h in t with C_g(h) = C_g(t).

    The returned h is regular in k (all t-roots of k nonzero on it) and,
    more strongly, no nonzero joint t-weight of g vanishes on it, so the
    parabolic built from h is minimal t-compatible.
    """
    rng = random.Random(seed) if seed else None
    for shell in _shells(emb.t.dim, max_height):
        # canonical order prefers positive leading coefficients; a nonzero
        # seed permutes candidates within each shell
        shell = sorted(shell, key=lambda c: tuple(-x for x in c))
        if rng is not None:
            rng.shuffle(shell)
        for coeffs in shell:
            reg = regular_from_coeffs(L, emb, coeffs)
            if reg is not None:
                return reg
    raise NoRegularFound(
        f"no regular element with integer coefficients up to {max_height}; raise max_height"
    )


def t_roots_and_rho(L: LieAlgebra, emb: EmbeddedSubalgebra, h: RegularElement):
    """t-roots of k and rho = half-sum of the h-positive ones."""
    roots = t_roots_of_k(L, emb)
    positive = WeightMultiset("t")
    for coords, mult in roots.entries.items():
        val = h.k_root_values[coords]
        assert val != 0
        if val > 0:
            positive.add(coords, mult)
    rho = positive.half_sum(dim=emb.t.dim)
    return roots, rho
