"""Hopf-algebra structure maps on the presets and Sweedler tensor calculus.

Coproducts, counits and antipodes are defined on generators and extended as
(anti)algebra maps; tensors are kept fully expanded over pairs of normal
words, so identities are decided by comparing canonical forms.  The sphere
carries no intrinsic coproduct; its Sweedler legs are computed through the
embedding into QSL2, and first legs land back in the sphere (the coideal
property), which b_coproduct certifies on every call.
"""

from __future__ import annotations

from .ncalg import (LAURENT, PODLES, QSL2, SMASH_Z2, NCPoly, embed_podles,
                    express_in_podles, get_algebra, laurent_word, qsl2_index)


class Tensor:
    """A canonicalised sum of two-leg tensors over normal words.

    terms maps (left word, right word) to a nonzero coefficient; the legs
    may live in different presets (e.g. LAURENT x QSL2 for coactions).
    """

    __slots__ = ("left_alg", "right_alg", "terms")

    def __init__(self, left_alg, right_alg, terms):
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.terms = terms

    @staticmethod
    def zero(left_alg, right_alg):
        return Tensor(left_alg, right_alg, {})

    @staticmethod
    def of(p, r):
        """Elementary tensor p (x) r of two NCPolys."""
        out = {}
        zero = p.alg.field.is_zero
        for w1, c1 in p.terms.items():
            for w2, c2 in r.terms.items():
                c = c1 * c2
                if not zero(c):
                    out[(w1, w2)] = c
        return Tensor(p.alg, r.alg, out)

    def _check(self, other):
        if self.left_alg is not other.left_alg or self.right_alg is not other.right_alg:
            raise ValueError("tensor leg algebra mismatch")

    def add_term(self, lw, rw, c):
        zero = self.left_alg.field.is_zero
        acc = self.terms.get((lw, rw))
        acc = c if acc is None else acc + c
        if zero(acc):
            self.terms.pop((lw, rw), None)
        else:
            self.terms[(lw, rw)] = acc

    def __add__(self, other):
        self._check(other)
        out = Tensor(self.left_alg, self.right_alg, dict(self.terms))
        for (lw, rw), c in other.terms.items():
            out.add_term(lw, rw, c)
        return out

    def __neg__(self):
        return Tensor(self.left_alg, self.right_alg,
                      {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = self.left_alg.field.from_int(c)
        if self.left_alg.field.is_zero(c):
            return Tensor.zero(self.left_alg, self.right_alg)
        return Tensor(self.left_alg, self.right_alg,
                      {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        out = Tensor.zero(self.left_alg, self.right_alg)
        lmul = self.left_alg.mul_words
        rmul = self.right_alg.mul_words
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                c12 = c1 * c2
                for lw, cl in lmul(l1, l2).items():
                    for rw, cr in rmul(r1, r2).items():
                        out.add_term(lw, rw, c12 * cl * cr)
        return out

    def __eq__(self, other):
        return (isinstance(other, Tensor)
                and self.left_alg is other.left_alg
                and self.right_alg is other.right_alg
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        keyfn = lambda k: (self.left_alg.sort_key(k[0]), self.right_alg.sort_key(k[1]))
        for lw, rw in sorted(self.terms, key=keyfn):
            c = self.terms[(lw, rw)]
            cs = self.left_alg.field.render(c)
            body = f"{self.left_alg.render_word(lw)} (x) {self.right_alg.render_word(rw)}"
            parts.append(body if cs == "1" else f"({cs})*{body}")
        return "  +  ".join(parts)

    def __repr__(self):
        return f"Tensor({self.render()})"


# ---------------------------------------------------------------------------
# coproducts
# ---------------------------------------------------------------------------

_COP_GEN = {
    # QSL2 generator indices: a=0, d=1, b=2, c=3
    QSL2: {0: [((0,), (0,)), ((2,), (3,))],       # a -> a(x)a + b(x)c
           2: [((0,), (2,)), ((2,), (1,))],       # b -> a(x)b + b(x)d
           3: [((3,), (0,)), ((1,), (3,))],       # c -> c(x)a + d(x)c
           1: [((3,), (2,)), ((1,), (1,))]},      # d -> c(x)b + d(x)d
    LAURENT: {0: [((0,), (0,))], 1: [((1,), (1,))]},
    SMASH_Z2: {0: [((0,), (0,))],                 # x -> x(x)x
               1: [((), (1,)), ((1,), (0,))]},    # y -> 1(x)y + y(x)x
}

_COP_CACHE = {}


def coproduct(p):
    """Sweedler coproduct as a canonical Tensor.

    Sphere elements are embedded into QSL2 first; the result legs then live
    in QSL2 (x) QSL2.
    """
    if p.alg.id == PODLES:
        return coproduct(embed_podles(p))
    if p.alg.id not in _COP_GEN:
        raise ValueError(f"no coproduct on {p.alg.id}")
    out = Tensor.zero(p.alg, p.alg)
    for w, c in p.terms.items():
        for (lw, rw), cc in _cop_word(p.alg, w).items():
            out.add_term(lw, rw, c * cc)
    return out


def _cop_word(alg, w):
    key = (id(alg), w)
    hit = _COP_CACHE.get(key)
    if hit is not None:
        return hit
    if not w:
        res = {((), ()): alg.field.one}
    else:
        head = _cop_word(alg, w[:-1])
        gen = _COP_GEN[alg.id][w[-1]]
        t = Tensor(alg, alg, dict(head))
        g = Tensor(alg, alg, {pair: alg.field.one for pair in gen})
        res = (t * g).terms
    _COP_CACHE[key] = res
    return res


_BCOP_CACHE = {}


def b_coproduct_word(B, w):
    """Coproduct of a sphere basis word with first legs re-expressed in the
    sphere: dict {(sphere word, QSL2 word): coeff}.

    First legs of Delta(B) lie in B (x) A; a first leg outside the weight-0
    span would falsify that and raises.
    """
    key = (id(B), w)
    hit = _BCOP_CACHE.get(key)
    if hit is not None:
        return hit
    A = get_algebra(QSL2, B.field)
    emb = embed_podles(NCPoly(B, {w: B.field.one}))
    out = {}
    zero = B.field.is_zero
    for aw, c in emb.terms.items():
        for (lw, rw), cc in _cop_word(A, aw).items():
            e = express_in_podles(NCPoly(A, {lw: A.field.one}))
            (ew, eu), = e.terms.items()
            k = (ew, rw)
            acc = out.get(k)
            val = c * cc * eu
            acc = val if acc is None else acc + val
            if zero(acc):
                out.pop(k, None)
            else:
                out[k] = acc
    _BCOP_CACHE[key] = out
    return out


def b_coproduct(p):
    """Coproduct of a sphere element as a Tensor with legs PODLES (x) QSL2."""
    if p.alg.id != PODLES:
        raise ValueError("b_coproduct expects a PODLES element")
    A = get_algebra(QSL2, p.alg.field)
    out = Tensor.zero(p.alg, A)
    for w, c in p.terms.items():
        for (lw, rw), cc in b_coproduct_word(p.alg, w).items():
            out.add_term(lw, rw, c * cc)
    return out


def b_coproduct_grouped(B, w):
    """b_coproduct of a basis word grouped by first leg:
    dict {sphere word: NCPoly over QSL2 summing the matching right legs}."""
    A = get_algebra(QSL2, B.field)
    groups = {}
    for (lw, rw), c in b_coproduct_word(B, w).items():
        groups.setdefault(lw, {})[rw] = c
    return {lw: NCPoly(A, t) for lw, t in groups.items()}


# ---------------------------------------------------------------------------
# counit and antipode
# ---------------------------------------------------------------------------

_COUNIT_KILL = {QSL2: {2, 3}, PODLES: {0, 1, 2}, LAURENT: set(), SMASH_Z2: {1}}


def counit(p):
    """The counit, an algebra map killing b, c (and all sphere generators)."""
    kill = _COUNIT_KILL[p.alg.id]
    out = p.alg.field.zero
    for w, c in p.terms.items():
        if not any(g in kill for g in w):
            out = out + c
    return out


# antipode on generators: S(a)=d, S(b)=-q^-1 b, S(c)=-q c, S(d)=a and the
# smash-product S(x)=x, S(y)=-yx; S^2 is diagonal on basis words
_S2_EXP = {QSL2: (0, 0, -2, 2), LAURENT: (0, 0), PODLES: None, SMASH_Z2: None}


def antipode(p, power=1):
    """S^power, an anti-algebra map for odd power, algebra map for even.

    Any integer power is accepted (even powers are diagonal on basis words
    and odd powers are S or S^-1 composed with them).  Sphere elements only
    admit even powers: S(B) is not contained in B, but S^2(B) = B.
    """
    alg = p.alg
    if alg.id == PODLES:
        if power % 2 != 0:
            raise ValueError("odd antipode powers do not preserve the sphere")
        return express_in_podles(antipode(embed_podles(p), power))
    # power = 2*m + odd with odd in {0, 1}; S^-1 = S^-2 o S
    odd = power % 2
    m = (power - odd) // 2
    out = _antipode_even(p, m)
    if odd:
        out = _antipode_once(out)
    return out


def _antipode_even(p, m):
    if m == 0:
        return p
    alg = p.alg
    if alg.id == SMASH_Z2:
        # S^2: x -> x, y -> -y
        terms = {}
        for w, c in p.terms.items():
            n_y = sum(1 for g in w if g == 1)
            terms[w] = c if (n_y * m) % 2 == 0 else -c
        return NCPoly(alg, terms)
    exps = _S2_EXP[alg.id]
    terms = {}
    for w, c in p.terms.items():
        k = sum(exps[g] for g in w) * m
        terms[w] = c * alg.field.q_power(k)
    return NCPoly(alg, terms)


def _antipode_once(p):
    alg = p.alg
    f = alg.field
    if alg.id == QSL2:
        images = {0: {(1,): f.one}, 1: {(0,): f.one},
                  2: {(2,): -f.q_power(-1)}, 3: {(3,): -f.q_power(1)}}
    elif alg.id == LAURENT:
        images = {0: {(1,): f.one}, 1: {(0,): f.one}}
    elif alg.id == SMASH_Z2:
        # S(y) = -yx, which is xy in the normal basis
        images = {0: {(0,): f.one}, 1: {(0, 1): f.one}}
    else:
        raise ValueError(f"no antipode on {alg.id}")
    out = alg.zero()
    for w, c in p.terms.items():
        acc = alg.poly({(): c})
        for g in reversed(w):
            acc = acc * NCPoly(alg, images[g])
        out = out + acc
    return out


# ---------------------------------------------------------------------------
# the quotient pi: QSL2 -> LAURENT and the left coaction
# ---------------------------------------------------------------------------

def project_pi(p):
    """pi(a)=z, pi(d)=z^-1, pi(b)=pi(c)=0; on basis words a Kronecker delta."""
    if p.alg.id != QSL2:
        raise ValueError("project_pi expects a QSL2 element")
    C = get_algebra(LAURENT, p.alg.field)
    out = C.zero()
    for w, c in p.terms.items():
        l, m, n = qsl2_index(w)
        if m == 0 and n == 0:
            out = out + NCPoly(C, {laurent_word(l): c})
    return out


def left_coaction(p):
    """(pi (x) id) o Delta, a Tensor with legs LAURENT (x) QSL2."""
    if p.alg.id != QSL2:
        raise ValueError("left_coaction expects a QSL2 element")
    C = get_algebra(LAURENT, p.alg.field)
    out = Tensor.zero(C, p.alg)
    for w, c in p.terms.items():
        for (lw, rw), cc in _cop_word(p.alg, w).items():
            l, m, n = qsl2_index(lw)
            if m == 0 and n == 0:
                out.add_term(laurent_word(l), rw, c * cc)
    return out


def coideal_membership(p):
    """True iff left_coaction(p) = 1 (x) p, i.e. p lies in the sphere."""
    C = get_algebra(LAURENT, p.alg.field)
    want = Tensor(C, p.alg, {((), w): c for w, c in p.terms.items()})
    return left_coaction(p) == want


# ---------------------------------------------------------------------------
# the conjugation intertwiner rho on B (x) A
# ---------------------------------------------------------------------------

def rho(t, inverse=False):
    """rho(b (x) a) = b_(1) (x) a*S^2(b_(2)); inverse uses S instead of S^2."""
    if t.left_alg.id != PODLES or t.right_alg.id != QSL2:
        raise ValueError("rho acts on PODLES (x) QSL2 tensors")
    B, A = t.left_alg, t.right_alg
    out = Tensor.zero(B, A)
    for (bw, aw), c in t.terms.items():
        for b1, right in b_coproduct_grouped(B, bw).items():
            img = antipode(right, 1 if inverse else 2)
            for rw, rc in (NCPoly(A, {aw: A.field.one}) * img).terms.items():
                out.add_term(b1, rw, c * rc)
    return out


def rho_check(x, b, a, y, z):
    """Element-level check of the intertwining law

        rho(x_(1)*b*y (x) z*a*S(x_(2))) = x * rho(b (x) a) <| (y (x) z)

    with x, b sphere elements, a, z in QSL2 and y in QSL2 but lying in the
    sphere (it multiplies b on the right inside B).
    """
    B = x.alg
    A = a.alg
    y_b = express_in_podles(y) if y.alg.id == QSL2 else y
    # left-hand side
    lhs = Tensor.zero(B, A)
    for xw, xc in x.terms.items():
        for x1, right in b_coproduct_grouped(B, xw).items():
            left_leg = NCPoly(B, {x1: B.field.one}) * b * y_b
            right_leg = z * a * _antipode_once(right)
            lhs = lhs + Tensor.of(left_leg, right_leg).scale(xc)
    lhs = rho(lhs)
    # right-hand side
    rba = rho(Tensor.of(b, a))
    rhs = Tensor.zero(B, A)
    for yw, yc in y_b.terms.items():
        for y1, yright in b_coproduct_grouped(B, yw).items():
            s2 = antipode(yright, 2)
            for (uw, vw), c in rba.terms.items():
                u = x * NCPoly(B, {uw: B.field.one}) * NCPoly(B, {y1: B.field.one})
                v = z * NCPoly(A, {vw: A.field.one}) * s2
                rhs = rhs + Tensor.of(u, v).scale(yc * c)
    return lhs == rhs
