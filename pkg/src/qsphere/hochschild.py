"""Hochschild cochain machinery for the quantum sphere.

Cochains are sparse multilinear maps: a finite table on tuples of sphere
basis monomials, zero outside the declared support, extended by
multilinearity through normal forms.  The coboundaries (standard b and the
adjoint-twisted d), the conjugating map xi and the character action all
return lazily evaluated cochains, so composites like b(xi(phi)) are exact
everywhere; identity checks compare values on explicit argument windows.

Carriers: 'B' (the sphere as a bimodule over itself) and 'BxA' (the sphere
tensor the full quantized coordinate ring, left action on the first leg,
right action through the second).  The twisted coboundary and xi need the
right A-action and are only defined on 'BxA'.
"""

from __future__ import annotations

import itertools

from .hopf import Tensor, antipode, b_coproduct_grouped, coproduct, _cop_word
from .linalg import nullspace
from .ncalg import (PODLES, QSL2, NCPoly, embed_podles, express_in_podles,
                    filtration_basis, get_algebra, podles_index,
                    qsl2_index, qsl2_word)
from .scalars import SYMBOLIC


class Bimodule:
    """Coefficient bimodule descriptor for cochains.

    kinds: 'B' (the sphere over itself), 'BxA' (sphere (x) coordinate
    ring, actions leg-wise), and 'A_twist' (the coordinate ring with the
    right action twisted by S^(2*twist)).
    """

    def __init__(self, kind, field=SYMBOLIC, twist=0):
        if kind not in ("B", "BxA", "A_twist"):
            raise ValueError(f"unsupported carrier {kind!r}")
        self.kind = kind
        self.field = field
        self.twist = twist
        self.B = get_algebra(PODLES, field)
        self.A = get_algebra(QSL2, field)

    def zero(self):
        if self.kind == "B":
            return self.B.zero()
        if self.kind == "A_twist":
            return self.A.zero()
        return Tensor.zero(self.B, self.A)

    def is_zero(self, v):
        return v.is_zero()

    def scale(self, c, v):
        return v.scale(c)

    def add(self, v1, v2):
        return v1 + v2

    def left_word(self, w, v):
        """Left action of the sphere basis monomial w."""
        m = NCPoly(self.B, {w: self.field.one})
        if self.kind == "B":
            return m * v
        if self.kind == "A_twist":
            return embed_podles(m) * v
        out = Tensor.zero(self.B, self.A)
        for (lw, rw), c in v.terms.items():
            for w2, c2 in self.B.mul_words(w, lw).items():
                out.add_term(w2, rw, c * c2)
        return out

    def right_word(self, v, w):
        """Right action of the sphere basis monomial w."""
        if self.kind == "B":
            return v * NCPoly(self.B, {w: self.field.one})
        return self.right_A(v, embed_podles(NCPoly(self.B, {w: self.field.one})))

    def right_A(self, v, a):
        """Right action of a QSL2 element (not defined on the 'B' carrier)."""
        if self.kind == "A_twist":
            return v * antipode(a, 2 * self.twist)
        if self.kind != "BxA":
            raise ValueError("right A-action needs the BxA or A_twist carrier")
        out = Tensor.zero(self.B, self.A)
        for (lw, rw), c in v.terms.items():
            for aw, c2 in a.terms.items():
                for w2, c3 in self.A.mul_words(rw, aw).items():
                    out.add_term(lw, w2, c * c2 * c3)
        return out

    def ad_word(self, w, v):
        """Adjoint action ad(w)v = w_(1) v S(w_(2))."""
        if self.kind == "B":
            raise ValueError("adjoint action needs a right A-action")
        out = self.zero()
        for lw, right in b_coproduct_grouped(self.B, w).items():
            part = self.right_A(self.left_word(lw, v), antipode(right, 1))
            out = out + part
        return out

    def random_value(self, rng, size=2):
        pool_b = [m.word for m in filtration_basis(self.B, 2)]
        coeffs = [self.field.q_power(k) for k in (-2, -1, 0, 1, 2)]
        ints = [self.field.from_int(k) for k in (-2, -1, 1, 2)]
        if self.kind == "B":
            out = self.B.zero()
            for _ in range(size):
                c = rng.choice(coeffs) * rng.choice(ints)
                out = out + NCPoly(self.B, {rng.choice(pool_b): c})
            return out
        pool_a = [m.word for m in filtration_basis(self.A, 2)]
        if self.kind == "A_twist":
            out = self.A.zero()
            for _ in range(size):
                c = rng.choice(coeffs) * rng.choice(ints)
                out = out + NCPoly(self.A, {rng.choice(pool_a): c})
            return out
        out = Tensor.zero(self.B, self.A)
        for _ in range(size):
            c = rng.choice(coeffs) * rng.choice(ints)
            out.add_term(rng.choice(pool_b), rng.choice(pool_a), c)
        return out


# ---------------------------------------------------------------------------
# cochains
# ---------------------------------------------------------------------------

class Cochain:
    """Concrete sparse cochain: table on tuples of sphere basis words."""

    def __init__(self, degree, carrier, table, support):
        self.degree = degree
        self.carrier = carrier
        self.table = {k: v for k, v in table.items() if not carrier.is_zero(v)}
        self.support = support

    def eval_words(self, words):
        v = self.table.get(tuple(words))
        return self.carrier.zero() if v is None else v


class LazyCochain:
    """Cochain defined by a formula; values memoised per argument tuple."""

    def __init__(self, degree, carrier, fn):
        self.degree = degree
        self.carrier = carrier
        self.fn = fn
        self._memo = {}

    def eval_words(self, words):
        words = tuple(words)
        v = self._memo.get(words)
        if v is None:
            v = self.fn(words)
            self._memo[words] = v
        return v


def eval_cochain(phi, args):
    """Evaluate a cochain-like at NCPoly arguments by multilinearity."""
    slots = tuple(a.terms if isinstance(a, NCPoly) else tuple(a) for a in args)
    return eval_multi(phi, slots)


def eval_multi(phi, slots):
    """Evaluate phi at a tuple of slots, each a basis word or a sparse
    combination {word: coeff}, expanding multilinearly."""
    fixed = []
    expand = []
    for pos, s in enumerate(slots):
        if isinstance(s, dict):
            expand.append((pos, s))
            fixed.append(None)
        else:
            fixed.append(s)
    if not expand:
        return phi.eval_words(tuple(fixed))
    out = phi.carrier.zero()
    for combo in itertools.product(*[list(s.items()) for _, s in expand]):
        coeff = None
        args = list(fixed)
        for (pos, _), (w, c) in zip(expand, combo):
            args[pos] = w
            coeff = c if coeff is None else coeff * c
        val = phi.eval_words(tuple(args))
        if not phi.carrier.is_zero(val):
            out = out + val.scale(coeff)
    return out


def hochschild_b(phi):
    """The standard Hochschild coboundary of phi (degree n -> n+1)."""
    n = phi.degree
    M = phi.carrier
    mul = M.B.mul_words

    def fn(ws):
        val = M.left_word(ws[0], phi.eval_words(ws[1:]))
        sign = 1
        for i in range(1, n + 1):
            sign = -sign
            merged = mul(ws[i - 1], ws[i])
            sub = eval_multi(phi, ws[:i - 1] + (merged,) + ws[i + 1:])
            val = val + sub.scale(M.field.from_int(sign))
        sign = -sign
        trail = M.right_word(phi.eval_words(ws[:n]), ws[n])
        return val + trail.scale(M.field.from_int(sign))

    return LazyCochain(n + 1, M, fn)


def twisted_d(phi):
    """The adjoint-twisted coboundary: leading term ad(b^1), trailing term
    scaled by the counit of the last argument (BxA carrier only)."""
    n = phi.degree
    M = phi.carrier
    if M.kind == "B":
        raise ValueError("the twisted coboundary needs a right A-action")
    mul = M.B.mul_words

    def fn(ws):
        val = M.ad_word(ws[0], phi.eval_words(ws[1:]))
        sign = 1
        for i in range(1, n + 1):
            sign = -sign
            merged = mul(ws[i - 1], ws[i])
            sub = eval_multi(phi, ws[:i - 1] + (merged,) + ws[i + 1:])
            val = val + sub.scale(M.field.from_int(sign))
        sign = -sign
        if ws[n] == ():  # counit of a basis monomial is its constant part
            val = val + phi.eval_words(ws[:n]).scale(M.field.from_int(sign))
        return val

    return LazyCochain(n + 1, M, fn)


def xi(phi, inverse=False):
    """The conjugating isomorphism

        xi(phi)(b^1,...,b^n) = phi(b^1_(1),...,b^n_(1)) * (b^1_(2)...b^n_(2))

    with the inverse applying the antipode to the product of second legs.
    Degree 0 cochains are fixed (empty product of legs).
    """
    n = phi.degree
    M = phi.carrier
    if M.kind == "B":
        raise ValueError("xi needs a right A-action")
    A = M.A

    def fn(ws):
        groups = [b_coproduct_grouped(M.B, w) for w in ws]
        out = M.zero()
        if isinstance(phi, Cochain):
            combos = [k for k in phi.table if all(
                k[i] in groups[i] for i in range(n))]
        else:
            combos = itertools.product(*[list(g) for g in groups])
        for legs in combos:
            val = phi.eval_words(legs)
            if M.is_zero(val):
                continue
            if n:
                prod = groups[0][legs[0]]
                for i in range(1, n):
                    prod = prod * groups[i][legs[i]]
            else:
                prod = A.one()
            if inverse:
                prod = antipode(prod, 1)
            out = out + M.right_A(val, prod)
        return out

    return LazyCochain(n, M, fn)


# ---------------------------------------------------------------------------
# characters of the coordinate ring and their action on cochains
# ---------------------------------------------------------------------------

class CharacterFunctional:
    """The character of QSL2 with a |-> t, d |-> t^-1, b, c |-> 0."""

    def __init__(self, t, field=SYMBOLIC):
        if field.is_zero(t):
            raise ValueError("character parameter must be nonzero")
        self.t = t
        self.field = field

    def on_word(self, w):
        l, m, n = qsl2_index(w)
        if m or n:
            return self.field.zero
        return self.t ** l if l >= 0 else (self.field.one / self.t) ** (-l)

    def on_poly(self, p):
        out = self.field.zero
        for w, c in p.terms.items():
            v = self.on_word(w)
            if not self.field.is_zero(v):
                out = out + c * v
        return out

    def compose_S(self):
        return CharacterFunctional(self.field.one / self.t, self.field)

    def compose_S2(self):
        # S^2 fixes a and d and kills nothing new: X o S^2 = X
        return self

    def convolve(self, other):
        return CharacterFunctional(self.t * other.t, self.field)

    def act_sphere_word(self, w):
        """X.m = m_(1) X(m_(2)) for a sphere basis word, as {word: coeff}."""
        B = get_algebra(PODLES, self.field)
        out = {}
        for lw, right in b_coproduct_grouped(B, w).items():
            v = self.on_poly(right)
            if not self.field.is_zero(v):
                acc = out.get(lw)
                acc = v if acc is None else acc + v
                if self.field.is_zero(acc):
                    out.pop(lw, None)
                else:
                    out[lw] = acc
        return out

    def act_qsl2_word(self, w):
        """X.a = a_(1) X(a_(2)) for a QSL2 basis word, as {word: coeff}."""
        A = get_algebra(QSL2, self.field)
        out = {}
        for (lw, rw), c in _cop_word(A, w).items():
            v = self.on_word(rw)
            if not self.field.is_zero(v):
                acc = out.get(lw)
                acc = c * v if acc is None else acc + c * v
                if self.field.is_zero(acc):
                    out.pop(lw, None)
                else:
                    out[lw] = acc
        return out


def character_action(X, phi):
    """The action of a character X on a BxA-valued cochain:

        (X phi)(b^1,...,b^n) =
            (S^2(X) (x) X) |> phi(S(X).b^1, ..., S(X).b^n)

    specialised to group-like functionals, whose Sweedler legs all equal X.
    """
    M = phi.carrier
    if M.kind != "BxA":
        raise ValueError("character action needs the BxA carrier")
    XS = X.compose_S()
    X2 = X.compose_S2()

    def fn(ws):
        args = tuple(XS.act_sphere_word(w) for w in ws)
        val = eval_multi(phi, args)
        out = M.zero()
        for (lw, rw), c in val.terms.items():
            left = X2.act_sphere_word(lw)
            right = X.act_qsl2_word(rw)
            for w1, c1 in left.items():
                for w2, c2 in right.items():
                    out.add_term(w1, w2, c * c1 * c2)
        return out

    return LazyCochain(phi.degree, M, fn)


# ---------------------------------------------------------------------------
# comparisons and random cochains
# ---------------------------------------------------------------------------

def cochains_equal(c1, c2, tuples):
    """Exact equality of two cochain-likes on the given argument tuples."""
    for ws in tuples:
        if c1.eval_words(ws) != c2.eval_words(ws):
            return False
    return True


def argument_window(degree, level, field=SYMBOLIC):
    """All degree-tuples of sphere basis words of length <= level."""
    B = get_algebra(PODLES, field)
    pool = [m.word for m in filtration_basis(B, level)]
    return list(itertools.product(pool, repeat=degree))


def random_cochain(rng, degree, carrier, support=3, entries=4):
    """A sparse random cochain with the given support filtration."""
    B = carrier.B
    pool = [m.word for m in filtration_basis(B, support)]
    table = {}
    for _ in range(entries):
        key = tuple(rng.choice(pool) for _ in range(degree))
        table[key] = carrier.random_value(rng)
    return Cochain(degree, carrier, table, support)


def random_argument_tuples(rng, degree, level, count, field=SYMBOLIC):
    B = get_algebra(PODLES, field)
    pool = [m.word for m in filtration_basis(B, level)]
    return [tuple(rng.choice(pool) for _ in range(degree)) for _ in range(count)]


# ---------------------------------------------------------------------------
# twisted centers: degree-0 cohomology of the dualising family
# ---------------------------------------------------------------------------

def weight_basis_words(i, N):
    """QSL2 normal words of coaction weight i and length <= N."""
    words = []
    for l in range(-N, N + 1):
        for m in range(N - abs(l) + 1):
            n = l + m - i
            if 0 <= n <= N - abs(l) - m:
                words.append(qsl2_word(l, m, n))
    return words


def h0_twisted_center(i, j, N, field=SYMBOLIC):
    """Basis of {f in omega_{i,j} truncated at length N :
    y_k f = f S^(2j)(y_k) for k in {-1,0,1}}, by sparse exact elimination.

    The solver poses the full truncated system; it does not presuppose the
    reduction to the degree-0 part, which instead falls out of the
    y0-equation.
    """
    if N < 2 * j + abs(i) + 2:
        raise ValueError(f"need N >= {2 * j + abs(i) + 2} for (i, j) = ({i}, {j})")
    A = get_algebra(QSL2, field)
    B = get_algebra(PODLES, field)
    cols = weight_basis_words(i, N)
    gens = [embed_podles(B.gen(g)) for g in ("y-1", "y0", "y1")]
    eqs = {}
    for w in cols:
        p = A.monomial(w)
        for k, g in enumerate(gens):
            img = g * p - p * antipode(g, 2 * j)
            for iw, c in img.terms.items():
                eqs.setdefault((k, iw), {})[w] = c
    sol = nullspace(field, eqs.values(), cols)
    return [NCPoly(A, vec) for vec in sol]


def h0_expected(i, j):
    """Dimension and representative word predicted by the closed form:
    one-dimensional with representative b^m c^n (m - n = i, m + n = 2j)
    iff i = 2(m - j) for some 0 <= m <= 2j."""
    if i % 2 == 0 and abs(i) <= 2 * j:
        m = j + i // 2
        n = j - i // 2
        return 1, qsl2_word(0, m, n)
    return 0, None


# ---------------------------------------------------------------------------
# the modular-type automorphism sigma
# ---------------------------------------------------------------------------

def validate_character_b(chi, field=SYMBOLIC):
    """chi: values on (y-1, y0, y1); must respect the sphere relations."""
    vm, v0, vp = chi
    q2 = field.q_power(2)
    qm2 = field.q_power(-2)
    q1 = field.q_power(1)
    qm1 = field.q_power(-1)
    checks = [
        v0 * vp - q2 * vp * v0,
        v0 * vm - qm2 * vm * v0,
        vp * vm - (qm2 * v0 * v0 + qm1 * v0),
        vm * vp - (q2 * v0 * v0 + q1 * v0),
    ]
    if any(not field.is_zero(x) for x in checks):
        raise ValueError("values do not define an algebra map on the sphere")


def sigma_map(p, chi=None):
    """sigma(x) = chi(x_(1)) S^2(x_(2)), an algebra map from the sphere into
    the coordinate ring.

    For the counit character (the default) this is S^2 restricted to the
    sphere, scaling the basis ray e_{ij} by q^(-2j), and the result is
    returned over PODLES.  Other characters can leave the sphere (already
    sigma_chi(y1) picks up a d^2 term when chi(y1) != 0); the result is
    then returned over QSL2.
    """
    if p.alg.id != PODLES:
        raise ValueError("sigma_map expects a PODLES element")
    field = p.alg.field
    if chi is None:
        chi = (field.zero, field.zero, field.zero)
    chi = tuple(field.from_int(v) if isinstance(v, int) else v for v in chi)
    validate_character_b(chi, field)
    vm, v0, vp = chi
    B = p.alg
    A = get_algebra(QSL2, field)

    def chi_word(w):
        i, j = podles_index(w)
        out = field.one
        for _ in range(i):
            out = out * v0
        for _ in range(abs(j)):
            out = out * (vp if j > 0 else vm)
        return out

    acc = A.zero()
    for w, c in p.terms.items():
        for lw, right in b_coproduct_grouped(B, w).items():
            cv = chi_word(lw)
            if field.is_zero(cv):
                continue
            acc = acc + antipode(right, 2).scale(c * cv)
    try:
        return express_in_podles(acc)
    except ValueError:
        return acc
