"""Dihedral Hecke algebra oracle and HOMFLY-PT specialization.

Standard basis delta_w over Z[v, v^-1] with delta_s^2 = (v^-1 - v) delta_s
+ 1; KL basis b_w = sum_{y <= w} v^{l(w)-l(y)} delta_y (all KL polynomials
are 1 in the dihedral case).  The HOMFLY polynomial of a 3-strand braid
closure is evaluated through the Jones-Ocneanu trace on the S_3 Hecke
algebra.
"""

from __future__ import annotations

from .ring import LETTERS


class Laurent:
    """Laurent polynomial in v over Z."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def one(cls):
        return cls({0: 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent({0: other})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    def __neg__(self):
        return Laurent({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Laurent({0: other})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def substitute_q(self):
        """Render as a dict exponent -> coeff (used for v -> Q checks)."""
        return dict(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                bits.append(str(c))
            else:
                var = "v" if e == 1 else ("v^%d" % e)
                if c == 1:
                    bits.append(var)
                elif c == -1:
                    bits.append("-" + var)
                else:
                    bits.append("%d*%s" % (c, var))
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out


# ---------------------------------------------------------------------------
# the dihedral group


def canonical_word(word, m):
    """Canonical reduced word; the longest element is stored s-first."""
    word = tuple(word)
    if len(word) == m and word and word[0] == "t":
        return tuple(LETTERS[k % 2] for k in range(m))
    return word


def group_elements(m):
    out = [()]
    for length in range(1, m + 1):
        for start in ("s", "t"):
            w = tuple(("s", "t")[(("s", "t").index(start) + k) % 2]
                      for k in range(length))
            w = canonical_word(w, m)
            if w not in out:
                out.append(w)
    return out


def right_mult(word, x, m):
    """Reduced word of w * s_x."""
    word = canonical_word(word, m)
    if word and word[-1] == x:
        return word[:-1]
    if len(word) == m:
        # w0: switch to the reduced word ending in x, then cancel
        for start in ("s", "t"):
            alt = tuple(("s", "t")[(("s", "t").index(start) + k) % 2]
                        for k in range(m))
            if alt[-1] == x:
                return alt[:-1]
    return canonical_word(word + (x,), m)


# ---------------------------------------------------------------------------
# Hecke elements


class HeckeElement:
    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def unit(cls, m):
        return cls(m, {(): Laurent.one()})

    @classmethod
    def delta(cls, m, word):
        return cls(m, {canonical_word(tuple(word), m): Laurent.one()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Laurent()) + c
        return HeckeElement(self.m, out)

    def __neg__(self):
        return HeckeElement(self.m, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, laurent):
        return HeckeElement(self.m,
                            {w: c * laurent for w, c in self.terms.items()})

    def times_generator(self, x, sign=1):
        """Right multiplication by delta_x or its inverse."""
        if sign < 0:
            # delta_x^{-1} = delta_x + (v - v^-1)
            return self.times_generator(x, 1) + self.scale(
                Laurent({1: 1, -1: -1}))
        m = self.m
        out = {}

        def bump(w, c):
            out[w] = out.get(w, Laurent()) + c

        for w, c in self.terms.items():
            wx = right_mult(w, x, m)
            if len(wx) > len(w):
                bump(wx, c)
            else:
                # delta_w delta_x = (v^-1 - v) delta_w + delta_{wx}
                bump(w, c * Laurent({-1: 1, 1: -1}))
                bump(wx, c)
        return HeckeElement(m, out)

    def __mul__(self, other):
        out = HeckeElement(self.m)
        for w, c in other.terms.items():
            piece = self.scale(c)
            for x in w:
                piece = piece.times_generator(x)
            out = out + piece
        return out

    def coefficient(self, word):
        return self.terms.get(canonical_word(tuple(word), self.m), Laurent())

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            name = "d_%s" % ("".join(w) or "e")
            bits.append("(%r)%s" % (self.terms[w], name))
        return " + ".join(bits)


def delta_product(m, braid):
    """Product of delta_letter^{sign} over a braid word."""
    out = HeckeElement.unit(m)
    for letter, sign in braid:
        out = out.times_generator(letter, sign)
    return out


def kl_basis(m, word):
    """b_w = sum_{y <= w} v^{l(w)-l(y)} delta_y (dihedral Bruhat order)."""
    word = canonical_word(tuple(word), m)
    terms = {}
    for y in group_elements(m):
        if len(y) < len(word) or y == word:
            terms[y] = Laurent.monomial(len(word) - len(y))
    return HeckeElement(m, terms)


def standard_in_kl(m, word):
    """Coefficients of delta_w in the KL basis: {y: (-v)^{l(w)-l(y)}}."""
    word = canonical_word(tuple(word), m)
    out = {}
    for y in group_elements(m):
        if len(y) < len(word) or y == word:
            k = len(word) - len(y)
            out[y] = Laurent.monomial(k, (-1) ** k)
    return out


def bs_class(m, word):
    """Class of the Bott-Samelson BS(word): product of b_letters."""
    out = HeckeElement.unit(m)
    for x in word:
        out = out * kl_basis(m, (x,))
    return out


def class_of_complex(cplx):
    """Sum_i (-1)^i sum_atoms v^{shift} [atom]; class(F_s) = delta_s."""
    m = cplx.m
    total = HeckeElement(m)
    for d, obs in cplx.objects.items():
        sign = (-1) ** d
        for mod in obs:
            kl = getattr(mod, "kl", None)
            if kl is not None:
                base = kl_basis(m, kl)
            elif mod.word is not None:
                base = bs_class(m, mod.word)
            else:
                raise ValueError("untagged atom in class_of_complex")
            piece = base.scale(Laurent.monomial(mod.shift, sign))
            total = total + piece
    return total


def soergel_pairing(m, w_word, u_word):
    """epsilon(b_{reverse(w)} b_u): the graded rank of hom(BS(w), BS(u))
    under v -> Q."""
    prod = bs_class(m, tuple(reversed(tuple(w_word)))) * bs_class(m, u_word)
    return prod.coefficient(())


# ---------------------------------------------------------------------------
# HOMFLY via the Jones-Ocneanu trace on H(S_3)


def _h3_multiply_letter(terms, x, z, m=3):
    """Right multiplication by T_x in H(S_3) with sympy coefficients."""
    out = {}
    for w, c in terms.items():
        wx = right_mult(w, x, m)
        if len(wx) > len(w):
            out[wx] = out.get(wx, 0) + c
        else:
            out[w] = out.get(w, 0) + c * z
            out[wx] = out.get(wx, 0) + c
    return {w: c for w, c in out.items() if c != 0}


def homfly(braid, variables=None):
    """HOMFLY-PT polynomial of the 3-strand closure, in (v, z) with the
    skein relation v^-1 P(+) - v P(-) = z P(0) and unknot = 1."""
    import sympy as sp
    from .complexes import parse_braid
    if isinstance(braid, str):
        braid = parse_braid(braid)
    if variables is None:
        v, z = sp.symbols("v z")
    else:
        v, z = variables
    terms = {(): sp.Integer(1)}
    writhe = 0
    for letter, sign in braid:
        writhe += sign
        if sign > 0:
            terms = _h3_multiply_letter(terms, letter, z)
        else:
            # T_x^{-1} = T_x - z
            plus = _h3_multiply_letter(terms, letter, z)
            terms = {w: plus.get(w, 0) - z * terms.get(w, 0)
                     for w in set(plus) | set(terms)}
            terms = {w: sp.expand(c) for w, c in terms.items() if c != 0}
    zeta = z / (1 - v ** 2)
    weight = {
        (): sp.Integer(1),
        ("s",): zeta,
        ("t",): zeta,
        ("s", "t"): zeta ** 2,
        ("t", "s"): zeta ** 2,
        ("s", "t", "s"): zeta * (z * zeta + 1),
    }
    tr = sum(c * weight[w] for w, c in terms.items())
    mu = (1 - v ** 2) / (v * z)
    return sp.cancel(sp.together(mu ** 2 * v ** writhe * tr))


def braid_writhe(braid):
    from .complexes import parse_braid
    if isinstance(braid, str):
        braid = parse_braid(braid)
    return sum(sign for _, sign in braid)


def euler_check(series, braid):
    """Substitute A = -a^2 q^2, Q = q, T = -1, multiply by the unit
    q^2 a^{writhe - 2}, and compare with homfly under v = a, z = q - 1/q.

    Returns (passed, residual expression)."""
    import sympy as sp
    a, q = sp.symbols("a q")
    chi = sp.Integer(0)
    for (ae, te, qe, e, c) in series.terms():
        chi += c * (-a ** 2 * q ** 2) ** ae * (-1) ** te * q ** qe \
            / (1 - q ** 2) ** e
    w = braid_writhe(braid)
    unit = q ** 2 * a ** (w - 2)
    target = homfly(braid, variables=(a, q - 1 / q))
    residual = sp.cancel(sp.together(chi * unit - target))
    return residual == 0, residual
