"""The weight-graded twisted bimodule family over the sphere, functionals
and convolution, and the averaging projection onto the sphere.

omega(n, m) is the span of the basis monomials of coaction weight n inside
the coordinate ring, with the right action twisted by the (2m)-th antipode
power.  The family composes: the product x * S^(2m)(y) of members of
omega(n, m) and omega(i, j) lands in omega(n+i, m+j), and within a
truncation the products span the target.  All claims here are checked at
the element level against the honest coaction, never by index bookkeeping
alone.
"""

from __future__ import annotations

from .hopf import antipode, b_coproduct_grouped, coproduct, _cop_word, left_coaction
from .linalg import Echelon
from .ncalg import (LAURENT, PODLES, QSL2, Monomial, NCPoly, embed_podles,
                    express_in_podles, filtration_basis, get_algebra,
                    laurent_word, qsl2_index, qsl2_word)
from .scalars import SYMBOLIC


# ---------------------------------------------------------------------------
# the omega family
# ---------------------------------------------------------------------------

def omega_membership(x, n, m=0):
    """True iff the left coaction of x is z^n (x) x (m only labels the
    right-action twist and does not enter the condition)."""
    if x.alg.id != QSL2:
        raise ValueError("omega_membership expects a QSL2 element")
    C = get_algebra(LAURENT, x.alg.field)
    want = left_coaction(x)
    zw = laurent_word(n)
    return want == _diagonal_tensor(C, x, zw)


def _diagonal_tensor(C, x, zw):
    from .hopf import Tensor
    return Tensor(C, x.alg, {(zw, w): c for w, c in x.terms.items()})


def omega_basis(n, m, N, field=SYMBOLIC):
    """All basis monomials f_{l,m',n'} with l + m' - n' = n of length <= N,
    each certified by the honest membership check."""
    if N < 0:
        raise ValueError("N must be >= 0")
    A = get_algebra(QSL2, field)
    out = []
    for l in range(-N, N + 1):
        for mm in range(N - abs(l) + 1):
            nn = l + mm - n
            if 0 <= nn <= N - abs(l) - mm:
                w = qsl2_word(l, mm, nn)
                if not omega_membership(A.monomial(w), n, m):
                    raise AssertionError("index arithmetic disagrees with coaction")
                out.append(w)
    out.sort(key=A.sort_key)
    return [Monomial(QSL2, w) for w in out]


class OmegaModule:
    """Truncated carrier of omega(n, m): weight-n monomials of length <= N
    with left action by multiplication and right action through S^(2m)."""

    def __init__(self, n, m, N, field=SYMBOLIC):
        self.n = n
        self.m = m
        self.N = N
        self.field = field
        self.A = get_algebra(QSL2, field)
        self.basis = omega_basis(n, m, N, field)

    def act_left(self, b, v):
        """Left action of a sphere element (membership-checked)."""
        out = embed_podles(b) * v
        if not out.is_zero() and not omega_membership(out, self.n):
            raise AssertionError("left action left the weight space")
        return out

    def act_right(self, v, b):
        """Right action of a sphere element, twisted by S^(2m)
        (membership-checked)."""
        out = v * antipode(embed_podles(b), 2 * self.m)
        if not out.is_zero() and not omega_membership(out, self.n):
            raise AssertionError("right action left the weight space")
        return out


def omega_product_check(n, m, i, j, N, field=SYMBOLIC):
    """Element-level instance of the composition law
    omega(n,m) (x)_B omega(i,j) -> omega(n+i, m+j).

    Every pairwise product x * S^(2m)(y) of truncated basis vectors must
    pass the membership test for weight n+i (counted as failures), and the
    products must span the truncated target up to the reported per-level
    defects (expected zero within the stable range, length <= N).
    """
    A = get_algebra(QSL2, field)
    left = omega_basis(n, m, N, field)
    right = omega_basis(i, j, N, field)
    failures = 0
    products = []
    for x in left:
        for y in right:
            p = A.monomial(x.word) * antipode(A.monomial(y.word), 2 * m)
            products.append(p)
            if not p.is_zero() and not omega_membership(p, n + i):
                failures += 1
    target = omega_basis(n + i, m + j, N, field)
    span = Echelon(field)
    for p in products:
        span.add(p.terms)
    defects = {}
    for level in range(N + 1):
        defect = 0
        for t in target:
            if len(t.word) <= level and not span.contains({t.word: field.one}):
                defect += 1
        defects[level] = defect
    return {"n": n, "m": m, "i": i, "j": j, "N": N,
            "membership_failures": failures,
            "pair_count": len(products),
            "spanning_defects": defects}


# ---------------------------------------------------------------------------
# functionals and convolution
# ---------------------------------------------------------------------------

class Functional:
    """A linear functional on one preset algebra.

    kinds: 'counit'; 'char_A' (the torus characters a -> t, d -> 1/t of the
    coordinate ring); 'char_B' (a character of the sphere given by its
    values on (y-1, y0, y1)); 'sparse' (explicit values on basis words,
    zero elsewhere); 'conv' (convolution product phi * psi, evaluated
    through the coproduct).
    """

    def __init__(self, kind, alg_id, field=SYMBOLIC, *, t=None, values=None,
                 table=None, parts=None):
        self.kind = kind
        self.alg_id = alg_id
        self.field = field
        self.t = t
        self.values = values
        self.table = table or {}
        self.parts = parts

    # -- constructors --------------------------------------------------------

    @staticmethod
    def counit(alg_id, field=SYMBOLIC):
        return Functional("counit", alg_id, field)

    @staticmethod
    def char_A(t, field=SYMBOLIC):
        if field.is_zero(t):
            raise ValueError("character parameter must be nonzero")
        return Functional("char_A", QSL2, field, t=t)

    @staticmethod
    def char_B(vm, v0, vp, field=SYMBOLIC):
        from .hochschild import validate_character_b
        validate_character_b((vm, v0, vp), field)
        return Functional("char_B", PODLES, field, values=(vm, v0, vp))

    @staticmethod
    def sparse(alg_id, table, field=SYMBOLIC):
        return Functional("sparse", alg_id, field, table=dict(table))

    @staticmethod
    def gamma(chi=None, field=SYMBOLIC):
        """The functional x |-> chi(beta(S^-1(x))) on the coordinate ring."""
        return Functional("gamma", QSL2, field, values=chi)

    # -- evaluation ----------------------------------------------------------

    def on_word(self, alg_id, w):
        field = self.field
        if self.kind == "counit":
            alg = get_algebra(alg_id, field)
            from .hopf import counit
            return counit(alg.monomial(w))
        if self.kind == "char_A":
            if alg_id != QSL2:
                raise ValueError("char_A is a functional on QSL2")
            l, m, n = qsl2_index(w)
            if m or n:
                return field.zero
            return self.t ** l if l >= 0 else (field.one / self.t) ** (-l)
        if self.kind == "char_B":
            if alg_id != PODLES:
                raise ValueError("char_B is a functional on PODLES")
            from .ncalg import podles_index
            i, j = podles_index(w)
            vm, v0, vp = self.values
            out = field.one
            for _ in range(i):
                out = out * v0
            for _ in range(abs(j)):
                out = out * (vp if j > 0 else vm)
            return out
        if self.kind == "sparse":
            if alg_id != self.alg_id:
                raise ValueError("functional domain mismatch")
            return self.table.get(w, field.zero)
        if self.kind == "gamma":
            if alg_id != QSL2:
                raise ValueError("gamma is a functional on QSL2")
            A = get_algebra(QSL2, field)
            return gamma_functional(A.monomial(w), self.values)
        if self.kind == "conv":
            return _conv_word(self, alg_id, w)
        raise ValueError(f"unknown functional kind {self.kind}")

    def __call__(self, p):
        out = self.field.zero
        for w, c in p.terms.items():
            v = self.on_word(p.alg.id, w)
            if not self.field.is_zero(v):
                out = out + c * v
        return out


def convolution(phi, psi):
    """(phi * psi)(a) = phi(a_(1)) psi(a_(2)).

    Evaluates on QSL2 through the coproduct and on the sphere through its
    coideal coproduct (first legs in the sphere, second legs in QSL2); phi
    must accept the first-leg algebra and psi the second-leg algebra.
    """
    if psi.alg_id not in (QSL2,):
        raise ValueError("the right factor must be a functional on QSL2")
    domain = phi.alg_id
    return Functional("conv", domain, phi.field, parts=(phi, psi))


def _conv_word(conv, alg_id, w):
    phi, psi = conv.parts
    field = conv.field
    out = field.zero
    if alg_id == PODLES:
        B = get_algebra(PODLES, field)
        for lw, right in b_coproduct_grouped(B, w).items():
            v1 = phi.on_word(PODLES, lw)
            if field.is_zero(v1):
                continue
            out = out + v1 * psi(right)
    elif alg_id == QSL2:
        A = get_algebra(QSL2, field)
        for (lw, rw), c in _cop_word(A, w).items():
            v1 = phi.on_word(QSL2, lw)
            if field.is_zero(v1):
                continue
            out = out + c * v1 * psi.on_word(QSL2, rw)
    else:
        raise ValueError("convolution evaluates on QSL2 or PODLES")
    return out


# ---------------------------------------------------------------------------
# the averaging projection beta and the left inverse of sigma
# ---------------------------------------------------------------------------

def haar_laurent(p):
    """The invariant functional on Laurent polynomials: h(z^k) = delta_k0."""
    if p.alg.id != LAURENT:
        raise ValueError("haar_laurent expects a LAURENT element")
    return p.terms.get((), p.alg.field.zero)


def beta_projection(x):
    """beta(x) = h(pi(x_(1))) x_(2), the projection of the coordinate ring
    onto the sphere along the coaction weight decomposition; the result is
    returned in the sphere basis."""
    if x.alg.id != QSL2:
        raise ValueError("beta_projection expects a QSL2 element")
    A = x.alg
    field = A.field
    acc = A.zero()
    for w, c in x.terms.items():
        picked = {}
        for (lw, rw), cc in _cop_word(A, w).items():
            l, m, n = qsl2_index(lw)
            if m == 0 and n == 0 and l == 0:
                acc2 = picked.get(rw)
                val = c * cc
                acc2 = val if acc2 is None else acc2 + val
                if field.is_zero(acc2):
                    picked.pop(rw, None)
                else:
                    picked[rw] = acc2
        acc = acc + NCPoly(A, picked)
    return express_in_podles(acc)


def gamma_functional(x, chi=None):
    """gamma(x) = chi(beta(S^-1(x))), a functional on the coordinate ring
    built from a character chi of the sphere (default: the counit)."""
    if x.alg.id != QSL2:
        raise ValueError("gamma_functional expects a QSL2 element")
    field = x.alg.field
    if chi is None:
        chi = Functional.counit(PODLES, field)
    return chi(beta_projection(antipode(x, -1)))


def transes_check(maxlen=5, chi=None, field=SYMBOLIC):
    """(chi * gamma)(b) = counit(b) for every sphere basis monomial with
    i + |j| <= maxlen, with gamma built from the same chi and the product
    the convolution restricted to the sphere."""
    from .hopf import counit
    B = get_algebra(PODLES, field)
    if chi is None:
        chi = Functional.counit(PODLES, field)
    product = convolution(chi, Functional.gamma(chi, field))
    failures = []
    for mono in filtration_basis(B, maxlen):
        total = product.on_word(PODLES, mono.word)
        if total != counit(B.monomial(mono.word)):
            failures.append(B.render_word(mono.word))
    return {"maxlen": maxlen, "failures": failures, "pass": not failures}


def sigma_inverse_check(N, field=SYMBOLIC):
    """The explicit left inverse of sigma:

        sigma_inv(a) = gamma(S^-2(a_(1))) S^-2(a_(2))

    must undo sigma on every sphere basis monomial with i + |j| <= N, and
    sigma itself must scale the basis ray e_{ij} by q^(-2j)."""
    from .hochschild import sigma_map
    if N < 1:
        raise ValueError("sigma_inverse_check needs N >= 1")
    B = get_algebra(PODLES, field)
    A = get_algebra(QSL2, field)
    ray_failures = []
    roundtrip_failures = []
    for mono in filtration_basis(B, N):
        e = B.monomial(mono.word)
        s = sigma_map(e)
        from .ncalg import podles_index
        i, j = podles_index(mono.word)
        if s != e.scale(field.q_power(-2 * j)):
            ray_failures.append(B.render_word(mono.word))
        back = sigma_inverse_apply(embed_podles(s))
        if back != e:
            roundtrip_failures.append(B.render_word(mono.word))
    return {"N": N, "ray_failures": ray_failures,
            "roundtrip_failures": roundtrip_failures,
            "pass": not ray_failures and not roundtrip_failures}


def sigma_inverse_apply(x, chi=None):
    """gamma(S^-2(x_(1))) S^-2(x_(2)) expressed back in the sphere."""
    if x.alg.id != QSL2:
        raise ValueError("sigma_inverse_apply expects a QSL2 element")
    A = x.alg
    field = A.field
    acc = A.zero()
    for w, c in x.terms.items():
        for (lw, rw), cc in _cop_word(A, w).items():
            g = gamma_functional(antipode(A.monomial(lw), -2), chi)
            if field.is_zero(g):
                continue
            acc = acc + antipode(A.monomial(rw), -2).scale(c * cc * g)
    return express_in_podles(acc)
