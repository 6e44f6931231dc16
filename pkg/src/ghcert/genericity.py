"""Genericity of the shifted weight mu = omega + 2*rho_n_perp: integrality
and dominance for k, the nonnegativity condition over the t-weights of
n ∩ k, and the strict positivity condition over every nonempty submultiset
of the t-weights of n.
"""

from dataclasses import dataclass
from fractions import Fraction

from ghcert.algebra import LieAlgebra
from ghcert.borel import BorelData
from ghcert.embedding import EmbeddedSubalgebra
from ghcert.errors import ContextMismatch, DegenerateOnT, GenericNuNotFound, SearchTooLarge
from ghcert.linalg import det, inverse, matvec
from ghcert.parabolic import ParabolicData, RhoVectors, t_weight_multiset
from ghcert.weights import Weight, WeightMultiset

DEFAULT_MAX_COEFF = 5
DEFAULT_MAX_SCALE = 20
DEFAULT_COND2_CAP = 24


class TStarForm:
    """Killing-induced bilinear form on t*: the inverse Gram matrix of t."""

    def __init__(self, gram):
        if det(gram) == 0:
            raise DegenerateOnT("Killing form degenerates on t")
        self.gram = gram
        self.gram_inv = inverse(gram)
        # positive definiteness via leading principal minors
        n = len(gram)
        for k in range(1, n + 1):
            minor = det([row[:k] for row in gram[:k]])
            if minor <= 0:
                raise DegenerateOnT("Killing form is not positive definite on t")

    def ip(self, a, b) -> Fraction:
        return sum(x * y for x, y in zip(a, matvec(self.gram_inv, list(b))))

    def ip_w(self, a: Weight, b: Weight) -> Fraction:
        if a.context != "t" or b.context != "t":
            raise ContextMismatch("t* form applies to t-weights only")
        return self.ip(a.coords, b.coords)


def induced_form_on_tstar(L: LieAlgebra, emb: EmbeddedSubalgebra) -> TStarForm:
    rows = [list(r) for r in emb.t.rows]
    gram = [[L.killing(x, y) for y in rows] for x in rows]
    return TStarForm(gram)


def restrict_to_t(emb: EmbeddedSubalgebra, nu: Weight) -> Weight:
    """omega: the restriction of a functional on h_std to t."""
    if nu.context != "g":
        raise ContextMismatch("expected a weight on the standard Cartan")
    return Weight(
        "t",
        tuple(
            sum(Fraction(row[i]) * nu.coords[i] for i in range(len(nu.coords)))
            for row in emb.t.rows
        ),
    )


def mu_from_nu(emb: EmbeddedSubalgebra, nu: Weight, rv: RhoVectors) -> Weight:
    return restrict_to_t(emb, nu) + rv.mu_shift


def check_integral_dominant(form: TStarForm, mu: Weight, k_roots, positive_k_roots):
    """Integrality against all t-root coroots of k; dominance against the
    positive ones."""
    integral = True
    for beta in k_roots.entries:
        bb = form.ip(beta, beta)
        val = 2 * form.ip(mu.coords, beta) / bb
        if val.denominator != 1:
            integral = False
            break
    dominant = all(
        form.ip(mu.coords, beta) >= 0 for beta in positive_k_roots.entries
    )
    return integral, dominant


def check_condition_1(form: TStarForm, mu: Weight, rho: Weight, rho_n: Weight, weights_n_cap_k):
    """<mu + 2 rho - rho_n, beta> >= 0 for every t-weight beta of n ∩ k."""
    vec = [m + 2 * r - rn for m, r, rn in zip(mu.coords, rho.coords, rho_n.coords)]
    violations = [
        beta for beta in sorted(weights_n_cap_k.entries) if form.ip(vec, beta) < 0
    ]
    return not violations, violations


@dataclass
class Cond2Result:
    ok: bool
    witness: tuple  # ((weight coords, chosen count), ...) for the first violation
    enumerated_count: int


def check_condition_2(
    form: TStarForm,
    mu: Weight,
    rho: Weight,
    S: WeightMultiset,
    cap: int = DEFAULT_COND2_CAP,
    method: str = "exhaustive",
) -> Cond2Result:
    """<mu + 2 rho - rho_T, rho_T> > 0 for every nonempty submultiset T of S.

    The empty submultiset is excluded (it would demand 0 > 0).  The pruned
    method skips subtrees proven all-positive by an exact rational bound
    and must agree with the exhaustive method, witness included.
    """
    groups = S.items()  # sorted (coords, mult)
    combos = 1
    for _, mult in groups:
        combos *= mult + 1
    if combos > 2**cap:
        raise SearchTooLarge(f"{combos} submultisets exceeds the 2^{cap} cap")
    enumerated = combos - 1
    dim = len(mu.coords)
    c = [m + 2 * r for m, r in zip(mu.coords, rho.coords)]
    halves = [tuple(Fraction(x, 2) for x in coords) for coords, _ in groups]

    witness = None

    def value(hs):
        diff = [a - b for a, b in zip(c, hs)]
        return form.ip(diff, hs)

    def subtree_all_positive(idx, hs):
        # lower bound of value over every completion from group idx onward
        base = value(hs)
        lin = Fraction(0)
        for j in range(idx, len(groups)):
            w = halves[j]
            t = form.ip(c, w) - 2 * form.ip(hs, w)
            if t < 0:
                lin += groups[j][1] * t
        quad = Fraction(0)
        for j in range(idx, len(groups)):
            for jj in range(idx, len(groups)):
                q = form.ip(halves[j], halves[jj])
                if q > 0:
                    quad += groups[j][1] * groups[jj][1] * q
        return base + lin - quad > 0

    def dfs(idx, hs, counts, any_chosen):
        nonlocal witness
        if witness is not None:
            return
        if method == "pruned" and subtree_all_positive(idx, hs):
            return
        if idx == len(groups):
            if any_chosen and value(hs) <= 0:
                witness = tuple(
                    (groups[j][0], counts[j]) for j in range(len(groups)) if counts[j]
                )
            return
        coords, mult = groups[idx]
        half = halves[idx]
        cur = list(hs)
        for k in range(mult + 1):
            counts[idx] = k
            dfs(idx + 1, tuple(cur), counts, any_chosen or k > 0)
            if witness is not None:
                return
            cur = [a + b for a, b in zip(cur, half)]
        counts[idx] = 0

    dfs(0, (Fraction(0),) * dim, [0] * len(groups), False)
    return Cond2Result(ok=witness is None, witness=witness, enumerated_count=enumerated)


@dataclass
class GenericityReport:
    mu: Weight
    integral: bool
    dominant: bool
    cond1_ok: bool
    cond1_violations: list
    cond2_ok: bool
    cond2_witness: tuple
    enumerated_count: int

    @property
    def passed(self) -> bool:
        return self.integral and self.dominant and self.cond1_ok and self.cond2_ok


def evaluate_genericity(
    L, emb, pd: ParabolicData, rv: RhoVectors, form: TStarForm, nu: Weight,
    cond2_cap: int = DEFAULT_COND2_CAP,
) -> GenericityReport:
    from ghcert.embedding import t_roots_of_k

    mu = mu_from_nu(emb, nu, rv)
    k_roots = t_roots_of_k(L, emb)
    positive = WeightMultiset("t")
    for coords, mult in k_roots.entries.items():
        if pd.h.k_root_values[coords] > 0:
            positive.add(coords, mult)
    integral, dominant = check_integral_dominant(form, mu, k_roots, positive)
    wts_nk = t_weight_multiset(L, emb, pd.n_cap_k)
    c1_ok, c1_viol = check_condition_1(form, mu, rv.rho, rv.rho_n, wts_nk)
    S = t_weight_multiset(L, emb, pd.n)
    c2 = check_condition_2(form, mu, rv.rho, S, cap=cond2_cap)
    return GenericityReport(
        mu=mu,
        integral=integral,
        dominant=dominant,
        cond1_ok=c1_ok,
        cond1_violations=c1_viol,
        cond2_ok=c2.ok,
        cond2_witness=c2.witness,
        enumerated_count=c2.enumerated_count,
    )


def _lex_tuples(rank, max_coeff):
    if rank == 0:
        yield ()
        return
    for head in range(max_coeff + 1):
        for tail in _lex_tuples(rank - 1, max_coeff):
            yield (head,) + tail


def find_generic_nu(
    L,
    emb,
    pd: ParabolicData,
    rv: RhoVectors,
    borel: BorelData,
    form: TStarForm,
    max_coeff: int = DEFAULT_MAX_COEFF,
    max_scale: int = DEFAULT_MAX_SCALE,
    cond2_cap: int = DEFAULT_COND2_CAP,
):
    """First b-dominant integral nu whose mu passes all genericity checks.

    Scans nu = N * w_b(lam) over standard-dominant coefficient tuples lam
    (lexicographic) and scales N; deterministic.
    """
    assert pd.r > 0
    for lam in _lex_tuples(L.rank, max_coeff):
        nu0 = borel.apply_wb(Weight("g", tuple(Fraction(x) for x in lam)))
        for scale in range(1, max_scale + 1):
            if all(x == 0 for x in lam) and scale > 1:
                break
            nu = nu0.scale(scale)
            report = evaluate_genericity(L, emb, pd, rv, form, nu, cond2_cap=cond2_cap)
            if report.passed:
                return nu, report.mu, report
    raise GenericNuNotFound(
        f"no generic nu with coefficients <= {max_coeff} and scale <= {max_scale}"
    )
