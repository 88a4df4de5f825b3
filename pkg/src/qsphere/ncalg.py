"""Noncommutative polynomial arithmetic in the preset algebras.

Four presets are built in:

  QSL2      the quantized coordinate ring of SL(2): generators a, b, c, d
  PODLES    the standard Podles quantum sphere: generators y0, y1, y-1
  LAURENT   Laurent polynomials k[z, z^-1]
  SMASH_Z2  the smash product k[y] x Z_2: generators x, y with x^2=1, xy=-yx

Elements are kept in normal form: words over the generators rewritten until
no rule applies, which lands every element on its ordered-monomial basis
(a^l b^m c^n and d^k b^m c^n for QSL2, y0^i y1^j and y0^i y-1^j for the
sphere, grouplike monomials for LAURENT, x^e y^i for the smash product).
The rewriting systems are small and confluence is established by property
testing rather than a completion proof.

Words are tuples of generator indices; polynomials are sparse dicts mapping
normal words to nonzero field coefficients.
"""

from __future__ import annotations

import re

from .scalars import SYMBOLIC

QSL2 = "QSL2"
PODLES = "PODLES"
LAURENT = "LAURENT"
SMASH_Z2 = "SMASH_Z2"


class Monomial:
    """A normal-form basis monomial of one preset algebra."""

    __slots__ = ("alg_id", "word")

    def __init__(self, alg_id, word):
        self.alg_id = alg_id
        self.word = tuple(word)

    def __eq__(self, other):
        return (isinstance(other, Monomial)
                and self.alg_id == other.alg_id and self.word == other.word)

    def __hash__(self):
        return hash((self.alg_id, self.word))

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        return f"Monomial({self.alg_id}, {self.word})"


class Grading:
    """Integer degree assignment per generator, extended additively."""

    def __init__(self, name, degrees):
        self.name = name
        self.degrees = tuple(degrees)

    def of_word(self, word):
        return sum(self.degrees[g] for g in word)


class AlgebraPreset:
    """One of the built-in algebras, bound to a coefficient field.

    rules maps a 2-letter left-hand word to its normal replacement, a list
    of (coefficient, word) pairs.  Rewriting any occurrence of any left-hand
    side terminates and (by testing) is confluent, so normal forms do not
    depend on the reduction strategy.
    """

    def __init__(self, alg_id, gens, rules, sort_ranks, field):
        self.id = alg_id
        self.gens = tuple(gens)
        self.field = field
        self.rules = rules
        self.sort_ranks = tuple(sort_ranks)
        self.gen_index = {g: i for i, g in enumerate(self.gens)}
        self._mul_cache = {}

    def __repr__(self):
        return f"AlgebraPreset({self.id}, field={self.field.name})"

    # -- rewriting -----------------------------------------------------------

    def reduce_terms(self, terms, strategy="leftmost"):
        """Rewrite a dict {word: coeff} to normal form.

        strategy picks the redex position ('leftmost' or 'rightmost'); the
        result must not depend on it, which the confluence check exercises.
        """
        rules = self.rules
        zero = self.field.is_zero
        out = {}
        stack = list(terms.items())
        while stack:
            word, coeff = stack.pop()
            pos = -1
            rng = range(len(word) - 1)
            if strategy == "rightmost":
                rng = range(len(word) - 2, -1, -1)
            for i in rng:
                if (word[i], word[i + 1]) in rules:
                    pos = i
                    break
            if pos < 0:
                acc = out.get(word)
                acc = coeff if acc is None else acc + coeff
                if zero(acc):
                    out.pop(word, None)
                else:
                    out[word] = acc
                continue
            head, tail = word[:pos], word[pos + 2:]
            for rc, rw in rules[(word[pos], word[pos + 1])]:
                stack.append((head + rw + tail, coeff * rc))
        return out

    def mul_words(self, w1, w2):
        """Normal form of the concatenation of two normal words (cached)."""
        if not w1:
            return {w2: self.field.one}
        if not w2:
            return {w1: self.field.one}
        key = (w1, w2)
        hit = self._mul_cache.get(key)
        if hit is None:
            hit = self.reduce_terms({w1 + w2: self.field.one})
            self._mul_cache[key] = hit
        return hit

    # -- element constructors --------------------------------------------------

    def poly(self, terms):
        out = {}
        zero = self.field.is_zero
        for word, coeff in terms.items():
            if zero(coeff):
                continue
            acc = out.get(word)
            acc = coeff if acc is None else acc + coeff
            if zero(acc):
                out.pop(word, None)
            else:
                out[word] = acc
        return NCPoly(self, out)

    def zero(self):
        return NCPoly(self, {})

    def one(self):
        return NCPoly(self, {(): self.field.one})

    def gen(self, name):
        if name not in self.gen_index:
            raise ValueError(f"unknown generator {name!r} in {self.id}")
        return NCPoly(self, {(self.gen_index[name],): self.field.one})

    def monomial(self, word):
        return NCPoly(self, {tuple(word): self.field.one})

    def scalar(self, c):
        if isinstance(c, int):
            c = self.field.from_int(c)
        return self.poly({(): c})

    def sort_key(self, word):
        return (len(word), tuple(self.sort_ranks[g] for g in word))

    def render_word(self, word):
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.gens[word[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)


class NCPoly:
    """Sparse normal-form combination {normal word: nonzero coefficient}."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    # -- ring operations -----------------------------------------------------

    def _check(self, other):
        if self.alg is not other.alg:
            raise ValueError(
                f"algebra mismatch: {self.alg.id} vs {other.alg.id}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        zero = self.alg.field.is_zero
        for w, c in other.terms.items():
            acc = out.get(w)
            acc = c if acc is None else acc + c
            if zero(acc):
                out.pop(w, None)
            else:
                out[w] = acc
        return NCPoly(self.alg, out)

    def __neg__(self):
        return NCPoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        zero = self.alg.field.is_zero
        mul = self.alg.mul_words
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c12 = c1 * c2
                for w, cr in mul(w1, w2).items():
                    acc = out.get(w)
                    acc = c12 * cr if acc is None else acc + c12 * cr
                    if zero(acc):
                        out.pop(w, None)
                    else:
                        out[w] = acc
        return NCPoly(self.alg, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if isinstance(c, int):
            c = self.alg.field.from_int(c)
        if self.alg.field.is_zero(c):
            return NCPoly(self.alg, {})
        return NCPoly(self.alg, {w: c * v for w, v in self.terms.items()})

    def __pow__(self, k):
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, NCPoly) and self.alg is other.alg
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alg.id, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def length(self):
        """Largest word length in the support (filtration level)."""
        return max((len(w) for w in self.terms), default=0)

    def coeff(self, word):
        return self.terms.get(tuple(word), self.alg.field.zero)

    def map_coeffs(self, fn, field=None):
        alg = self.alg if field is None else get_algebra(self.alg.id, field)
        return alg.poly({w: fn(c) for w, c in self.terms.items()})

    def render(self):
        if not self.terms:
            return "0"
        field = self.alg.field
        parts = []
        for word in sorted(self.terms, key=self.alg.sort_key, reverse=True):
            c = self.terms[word]
            cs = field.render(c)
            ms = self.alg.render_word(word)
            neg = cs.startswith("-") and _is_simple(cs[1:])
            if neg:
                cs = cs[1:]
            if ms == "1":
                body = cs if _is_simple(cs) else f"({cs})"
            elif cs == "1":
                body = ms
            else:
                if not _is_simple(cs):
                    cs = f"({cs})"
                body = f"{cs}*{ms}"
            parts.append(("-" if neg else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"NCPoly[{self.alg.id}]({self.render()})"


def _is_simple(cs):
    # coefficient strings that can sit in front of '*' without parentheses
    return re.fullmatch(r"\d+(/\d+)?|q(\^-?\d+)?|\d+\*q(\^-?\d+)?", cs) is not None


# ---------------------------------------------------------------------------
# preset construction
# ---------------------------------------------------------------------------

_ALGEBRAS = {}


def get_algebra(alg_id, field=SYMBOLIC):
    """The preset algebra bound to a coefficient field (cached)."""
    key = (alg_id, id(field))
    alg = _ALGEBRAS.get(key)
    if alg is None:
        alg = _build(alg_id, field)
        _ALGEBRAS[key] = alg
    return alg


def _build(alg_id, field):
    one = field.one
    qp = field.q_power
    if alg_id == QSL2:
        # generators a=0 d=1 b=2 c=3; normal words are a^l b^m c^n and
        # d^k b^m c^n.  Putting a and d in front makes them adjacent in any
        # sorted word, so the ad/da rules always fire and the two are
        # mutually exclusive in normal form.
        rules = {
            (2, 0): [(qp(-1), (0, 2))],            # ba -> q^-1 ab
            (3, 0): [(qp(-1), (0, 3))],            # ca -> q^-1 ac
            (3, 2): [(one, (2, 3))],               # cb -> bc
            (2, 1): [(qp(1), (1, 2))],             # bd -> q db
            (3, 1): [(qp(1), (1, 3))],             # cd -> q dc
            (0, 1): [(one, ()), (qp(1), (2, 3))],  # ad -> 1 + q bc
            (1, 0): [(one, ()), (qp(-1), (2, 3))], # da -> 1 + q^-1 bc
        }
        return AlgebraPreset(QSL2, ("a", "d", "b", "c"), rules, (0, 3, 1, 2), field)
    if alg_id == PODLES:
        # generators y0=0 y1=1 y-1=2; normal words are y0^i y1^j / y0^i y-1^j
        rules = {
            (1, 0): [(qp(-2), (0, 1))],
            (2, 0): [(qp(2), (0, 2))],
            (1, 2): [(qp(-2), (0, 0)), (qp(-1), (0,))],
            (2, 1): [(qp(2), (0, 0)), (qp(1), (0,))],
        }
        return AlgebraPreset(PODLES, ("y0", "y1", "y-1"), rules, (1, 2, 0), field)
    if alg_id == LAURENT:
        rules = {
            (0, 1): [(one, ())],
            (1, 0): [(one, ())],
        }
        return AlgebraPreset(LAURENT, ("z", "zinv"), rules, (0, 1), field)
    if alg_id == SMASH_Z2:
        rules = {
            (0, 0): [(one, ())],
            (1, 0): [(field.from_int(-1), (0, 1))],
        }
        return AlgebraPreset(SMASH_Z2, ("x", "y"), rules, (0, 1), field)
    raise ValueError(f"unknown algebra preset {alg_id!r}")


# ---------------------------------------------------------------------------
# normal form of free expressions
# ---------------------------------------------------------------------------

def normal_form(expr, alg, strategy="leftmost"):
    """Normal form of a formal combination of generator words.

    expr may be an NCPoly, or a dict mapping words (tuples of generator
    names or indices) to coefficients.
    """
    if isinstance(expr, NCPoly):
        return alg.poly(alg.reduce_terms(expr.terms, strategy))
    terms = {}
    for word, coeff in expr.items():
        idx = []
        for g in word:
            if isinstance(g, str):
                if g not in alg.gen_index:
                    raise ValueError(f"unknown generator {g!r} in {alg.id}")
                idx.append(alg.gen_index[g])
            else:
                if not 0 <= g < len(alg.gens):
                    raise ValueError(f"unknown generator index {g} in {alg.id}")
                idx.append(g)
        if isinstance(coeff, int):
            coeff = alg.field.from_int(coeff)
        w = tuple(idx)
        terms[w] = terms.get(w, alg.field.zero) + coeff
    return alg.poly(alg.reduce_terms(terms, strategy))


def multiply(p, r):
    """Product of two NCPolys over the same preset."""
    if p.alg is not r.alg:
        raise ValueError(f"algebra mismatch: {p.alg.id} vs {r.alg.id}")
    return p * r


# ---------------------------------------------------------------------------
# gradings
# ---------------------------------------------------------------------------

def podles_degree():
    return Grading("podles-degree", (0, 1, -1))


def qsl2_degree():
    # deg f_{lmn} = l (generator order a, d, b, c); the y0-commutation
    # characterisation is y0*f = q^(-2l)*f*y0 on basis monomials
    return Grading("qsl2-degree", (1, -1, 0, 0))


def qsl2_weight():
    # left coaction weight: coact(f) = z^w (x) f with w = l + m - n
    return Grading("qsl2-weight", (1, -1, 1, -1))


def grade_decompose(p, grading):
    """Split p into homogeneous components {degree: NCPoly}."""
    buckets = {}
    for w, c in p.terms.items():
        buckets.setdefault(grading.of_word(w), {})[w] = c
    return {d: NCPoly(p.alg, t) for d, t in sorted(buckets.items())}


# ---------------------------------------------------------------------------
# filtration bases
# ---------------------------------------------------------------------------

_BASIS_CACHE = {}


def filtration_basis(alg, N):
    """All normal monomials of word length <= N, deterministically ordered."""
    if N < 0:
        raise ValueError("N must be >= 0")
    key = (alg.id, N)
    hit = _BASIS_CACHE.get(key)
    if hit is not None:
        return hit
    words = []
    if alg.id == PODLES:
        for i in range(N + 1):
            for j in range(-(N - i), N - i + 1):
                words.append(podles_word(i, j))
    elif alg.id == QSL2:
        for l in range(-N, N + 1):
            for m in range(N - abs(l) + 1):
                for n in range(N - abs(l) - m + 1):
                    words.append(qsl2_word(l, m, n))
    elif alg.id == LAURENT:
        words = [laurent_word(k) for k in range(-N, N + 1)]
        out = [Monomial(alg.id, w) for w in words]
        _BASIS_CACHE[key] = out
        return out
    elif alg.id == SMASH_Z2:
        for e in (0, 1):
            for i in range(N - e + 1):
                words.append((0,) * e + (1,) * i)
    else:
        raise ValueError(f"no basis enumeration for {alg.id}")
    words.sort(key=alg.sort_key)
    out = [Monomial(alg.id, w) for w in words]
    _BASIS_CACHE[key] = out
    return out


def podles_word(i, j):
    """The basis monomial y0^i y1^j (j >= 0) or y0^i y-1^(-j) (j < 0)."""
    if j >= 0:
        return (0,) * i + (1,) * j
    return (0,) * i + (2,) * (-j)


def podles_index(word):
    """(i, j) for a normal sphere word."""
    i = sum(1 for g in word if g == 0)
    j1 = sum(1 for g in word if g == 1)
    jm = sum(1 for g in word if g == 2)
    return i, j1 - jm


def qsl2_word(l, m, n):
    """The normal word of the basis monomial f_{lmn}: a^l b^m c^n for
    l >= 0 and d^(-l) b^m c^n for l < 0."""
    if l >= 0:
        return (0,) * l + (2,) * m + (3,) * n
    return (1,) * (-l) + (2,) * m + (3,) * n


def qsl2_index(word):
    """(l, m, n) for a normal QSL2 word."""
    counts = [0, 0, 0, 0]
    for g in word:
        counts[g] += 1
    return counts[0] - counts[1], counts[2], counts[3]


def laurent_word(k):
    return (0,) * k if k >= 0 else (1,) * (-k)


def laurent_exp(word):
    return sum(1 if g == 0 else -1 for g in word)


# ---------------------------------------------------------------------------
# the sphere inside QSL2: y-1 = ca, y0 = bc, y1 = bd
# ---------------------------------------------------------------------------

_EMBED_GEN_WORDS = {0: (2, 3), 1: (2, 1), 2: (3, 0)}  # y0->bc, y1->bd, y-1->ca


def embed_podles(p):
    """Algebra embedding of the sphere into QSL2."""
    if p.alg.id != PODLES:
        raise ValueError("embed_podles expects a PODLES element")
    A = get_algebra(QSL2, p.alg.field)
    out = A.zero()
    for w, c in p.terms.items():
        mono, unit = _embed_word(p.alg, w)
        out = out + NCPoly(A, {mono: c * unit})
    return out


_EMBED_CACHE = {}


def _embed_word(B, w):
    """Image of a normal sphere word: a single QSL2 word with a unit coefficient."""
    key = (id(B), w)
    hit = _EMBED_CACHE.get(key)
    if hit is not None:
        return hit
    A = get_algebra(QSL2, B.field)
    free = ()
    for g in w:
        free = free + _EMBED_GEN_WORDS[g]
    terms = A.reduce_terms({free: A.field.one})
    if len(terms) != 1:
        raise AssertionError("sphere monomial image is not monomial")
    (mono, unit), = terms.items()
    _EMBED_CACHE[key] = (mono, unit)
    return mono, unit


def express_in_podles(p):
    """Inverse of embed_podles on its image.

    Raises ValueError when some monomial of p lies outside the subalgebra
    (every weight-0 normal word is in the image, so the check is the weight).
    """
    if p.alg.id != QSL2:
        raise ValueError("express_in_podles expects a QSL2 element")
    B = get_algebra(PODLES, p.alg.field)
    out = B.zero()
    for w, c in p.terms.items():
        l, m, n = qsl2_index(w)
        if l + m - n != 0:
            raise ValueError(
                f"element is not in the sphere subalgebra: weight {l + m - n} "
                f"monomial {p.alg.render_word(w)}")
        # preimage of a^l b^m c^(m+l) is y0^m y-1^l, of b^(n-l) c^n d^(-l)
        # is y0^n y1^(-l); both read as e_{i,j} with i = m or n, j = -l
        i = m if l >= 0 else n
        ew = podles_word(i, -l)
        mono, unit = _embed_word(B, ew)
        if mono != w:
            raise AssertionError("sphere expression lookup failed")
        out = out + NCPoly(B, {ew: c / unit})
    return out


# ---------------------------------------------------------------------------
# plain-text expression grammar
# ---------------------------------------------------------------------------

def parse_expr(text, alg):
    """Parse "y1*y-1 + q^-2*y0^2" style input into an NCPoly.

    Atoms are generators of the preset (longest match, so y-1 lexes as one
    symbol where it exists), integers, integer fractions n/m, and the
    deformation parameter q; operators are + - * ^ and parentheses.
    """
    tokens = _tokenize(text, alg)
    poly, pos = _parse_sum(tokens, 0, alg)
    if pos != len(tokens):
        raise ValueError(f"trailing input at token {tokens[pos]!r}")
    return poly


def _tokenize(text, alg):
    gens = sorted(alg.gens, key=len, reverse=True)
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        matched = None
        for g in gens:
            if text.startswith(g, i):
                matched = g
                break
        if matched:
            out.append(("gen", alg.gen_index[matched]))
            i += len(matched)
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j])))
            i = j
            continue
        if ch == "q":
            out.append(("q", None))
            i += 1
            continue
        if ch in "+-*^()/":
            out.append((ch, None))
            i += 1
            continue
        raise ValueError(f"unexpected character {ch!r} in expression")
    return out


def _parse_sum(tokens, pos, alg):
    sign = 1
    while pos < len(tokens) and tokens[pos][0] in "+-":
        if tokens[pos][0] == "-":
            sign = -sign
        pos += 1
    acc, pos = _parse_product(tokens, pos, alg)
    if sign < 0:
        acc = -acc
    while pos < len(tokens) and tokens[pos][0] in "+-":
        sign = 1
        while pos < len(tokens) and tokens[pos][0] in "+-":
            if tokens[pos][0] == "-":
                sign = -sign
            pos += 1
        term, pos = _parse_product(tokens, pos, alg)
        acc = acc + (term if sign > 0 else -term)
    return acc, pos


def _parse_product(tokens, pos, alg):
    acc, pos = _parse_power(tokens, pos, alg)
    while pos < len(tokens) and tokens[pos][0] in ("*", "/"):
        op = tokens[pos][0]
        factor, pos = _parse_power(tokens, pos + 1, alg)
        if op == "*":
            acc = acc * factor
        else:
            acc = acc * _invert_poly(factor)
    return acc, pos


def _parse_power(tokens, pos, alg):
    base, pos = _parse_atom(tokens, pos, alg)
    if pos < len(tokens) and tokens[pos][0] == "^":
        pos += 1
        sign = 1
        if pos < len(tokens) and tokens[pos][0] == "-":
            sign = -1
            pos += 1
        if pos >= len(tokens) or tokens[pos][0] != "int":
            raise ValueError("expected an integer exponent after '^'")
        k = sign * tokens[pos][1]
        pos += 1
        if k >= 0:
            base = base ** k
        else:
            base = _invert_poly(base) ** (-k)
    return base, pos


def _parse_atom(tokens, pos, alg):
    if pos >= len(tokens):
        raise ValueError("unexpected end of expression")
    kind, val = tokens[pos]
    if kind == "(":
        inner, pos = _parse_sum(tokens, pos + 1, alg)
        if pos >= len(tokens) or tokens[pos][0] != ")":
            raise ValueError("missing closing parenthesis")
        return inner, pos + 1
    if kind == "gen":
        return NCPoly(alg, {(val,): alg.field.one}), pos + 1
    if kind == "int":
        return alg.scalar(val), pos + 1
    if kind == "q":
        return alg.poly({(): alg.field.q_power(1)}), pos + 1
    raise ValueError(f"unexpected token {kind!r}")


def _invert_poly(p):
    """Inverse of a scalar multiple of 1 or of a single LAURENT monomial."""
    if len(p.terms) != 1:
        raise ValueError("can only invert scalars and grouplike monomials")
    (w, c), = p.terms.items()
    inv_c = p.alg.field.one / c
    if not w:
        return p.alg.poly({(): inv_c})
    if p.alg.id == LAURENT:
        return p.alg.poly({laurent_word(-laurent_exp(w)): inv_c})
    raise ValueError("generators of this preset are not invertible")
