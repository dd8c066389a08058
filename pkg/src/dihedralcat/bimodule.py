"""Graded R-bimodules presented as free right R-modules.

A bimodule is a free right R-module with a chosen homogeneous basis,
together with two commuting matrices giving left multiplication by a_s
and a_t.  Shifts are absorbed into the basis degrees; Bott-Samelson
word/shift tags ride along for atom bookkeeping.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .modules import column_degree, matrix_kernel, minimalize_columns
from .ring import LETTERS, RingElement, realization

# ---------------------------------------------------------------------------
# matrices over R


def mat_zero(field, nrows, ncols):
    z = RingElement.zero(field)
    return [[z] * ncols for _ in range(nrows)]


def mat_identity(field, n):
    z = RingElement.zero(field)
    one = RingElement.constant(field, 1)
    return [[one if i == j else z for j in range(n)] for i in range(n)]


def mat_mul(a, b, field):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    out = mat_zero(field, n, m)
    for i in range(n):
        for p in range(k):
            x = a[i][p]
            if not x:
                continue
            for j in range(m):
                if b[p][j]:
                    out[i][j] = out[i][j] + x * b[p][j]
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_scale(a, f):
    return [[x * f for x in row] for row in a]


def mat_transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


# ---------------------------------------------------------------------------
# bimodules


class Bimodule:
    """Free right R-module with commuting left-action matrices."""

    __slots__ = ("real", "rank", "degrees", "left", "word", "shift",
                 "_pow_cache")

    def __init__(self, real, degrees, left_s, left_t, word=None, shift=0,
                 check=True):
        self.real = real
        self.degrees = tuple(degrees)
        self.rank = len(self.degrees)
        self.left = {"s": tuple(tuple(row) for row in left_s),
                     "t": tuple(tuple(row) for row in left_t)}
        self.word = tuple(word) if word is not None else None
        self.shift = shift
        self._pow_cache = {}
        if check:
            self._validate()

    def _validate(self):
        for x in LETTERS:
            mat = self.left[x]
            if len(mat) != self.rank or any(len(r) != self.rank for r in mat):
                raise ValueError("left_%s has wrong shape" % x)
            for i in range(self.rank):
                for j in range(self.rank):
                    want = 2 + self.degrees[j] - self.degrees[i]
                    if not mat[i][j].is_homogeneous(want):
                        raise ValueError(
                            "left_%s[%d,%d] not homogeneous of degree %d"
                            % (x, i, j, want))
        ab = mat_mul(self.left["s"], self.left["t"], self.field)
        ba = mat_mul(self.left["t"], self.left["s"], self.field)
        if not mat_eq(ab, ba):
            raise ValueError("left actions do not commute")

    @property
    def field(self):
        return self.real.field

    @property
    def m(self):
        return self.real.m

    def left_action_of(self, f):
        """Matrix of left multiplication by f in R."""
        field = self.field
        out = mat_zero(field, self.rank, self.rank)
        for (i, j), c in f.terms.items():
            p = self._power("s", i)
            q = self._power("t", j)
            term = mat_scale(mat_mul(p, q, field), RingElement.constant(field, 0) + c)
            out = mat_add(out, term)
        return out

    def _power(self, x, k):
        key = (x, k)
        if key not in self._pow_cache:
            if k == 0:
                self._pow_cache[key] = mat_identity(self.field, self.rank)
            else:
                self._pow_cache[key] = mat_mul(
                    self._power(x, k - 1),
                    [list(r) for r in self.left[x]], self.field)
        return self._pow_cache[key]

    def shifted(self, k):
        """M(k): internal grading shifted down by k."""
        return Bimodule(self.real, [d - k for d in self.degrees],
                        self.left["s"], self.left["t"],
                        word=self.word,
                        shift=self.shift + k, check=False)

    def graded_rank(self):
        """Sum of Q^degree over the right basis."""
        from .series import QSeries
        num = {}
        for d in self.degrees:
            num[d] = num.get(d, 0) + 1
        return QSeries(num, 0)

    def same_graded_rank(self, other):
        return sorted(self.degrees) == sorted(other.degrees)

    def __eq__(self, other):
        if not isinstance(other, Bimodule):
            return NotImplemented
        return (self.m == other.m and self.degrees == other.degrees
                and self.left == other.left)

    def __hash__(self):
        return hash((self.m, self.degrees, self.left))

    def __repr__(self):
        if self.word is not None:
            tag = "BS(%s)" % "".join(self.word) if self.word else "R"
            if self.shift:
                tag += "(%d)" % self.shift
            return tag
        return "Bimodule(rank=%d, degrees=%s)" % (self.rank, list(self.degrees))

    def to_json(self):
        return {
            "m": self.m,
            "degrees": list(self.degrees),
            "left_s": _mat_to_json(self.left["s"]),
            "left_t": _mat_to_json(self.left["t"]),
            "word": list(self.word) if self.word is not None else None,
            "shift": self.shift,
        }

    @classmethod
    def from_json(cls, data):
        real = realization(data["m"])
        return cls(real, data["degrees"],
                   _mat_from_json(data["left_s"], real.field),
                   _mat_from_json(data["left_t"], real.field),
                   word=data.get("word"), shift=data.get("shift", 0),
                   check=False)


def poly_to_json(f):
    return [[i, j, [str(c) for c in coeff.coeffs]]
            for (i, j), coeff in sorted(f.terms.items())]


def poly_from_json(data, field):
    from .field import FieldScalar
    terms = {}
    for i, j, coeffs in data:
        terms[(i, j)] = FieldScalar(
            field, tuple(Fraction(c) for c in coeffs))
    return RingElement(field, terms)


def _mat_to_json(mat):
    return [[poly_to_json(x) for x in row] for row in mat]


def _mat_from_json(data, field):
    return [[poly_from_json(x, field) for x in row] for row in data]


def regular(m, shift=0):
    """R(shift): rank one, generator in degree -shift."""
    real = realization(m)
    return Bimodule(real, (-shift,),
                    [[real.alpha["s"]]], [[real.alpha["t"]]],
                    word=(), shift=shift, check=False)


def b_generator(m, letter, shift=0):
    """B_letter(shift) in the basis {1 (x) 1, alpha (x) 1}."""
    real = realization(m)
    alpha = real.alpha[letter]
    alpha2 = alpha * alpha
    left = {}
    for x in LETTERS:
        g, h = real.invariant_split(real.alpha[x], letter)
        left[x] = [[g, alpha2 * h], [h, g]]
    return Bimodule(real, (-1 - shift, 1 - shift), left["s"], left["t"],
                    word=(letter,), shift=shift, check=False)


def tensor(mod_a, mod_b):
    """mod_a (x)_R mod_b with lexicographic pair basis (a-index major)."""
    if mod_a.m != mod_b.m:
        raise ValueError("tensor over different m")
    field = mod_a.field
    ra, rb = mod_a.rank, mod_b.rank
    degrees = [da + db for da in mod_a.degrees for db in mod_b.degrees]
    left = {}
    for x in LETTERS:
        mat = mat_zero(field, ra * rb, ra * rb)
        for k in range(ra):
            for i in range(ra):
                f = mod_a.left[x][k][i]
                if not f:
                    continue
                act = mod_b.left_action_of(f)
                for l in range(rb):
                    for j in range(rb):
                        if act[l][j]:
                            mat[k * rb + l][i * rb + j] = \
                                mat[k * rb + l][i * rb + j] + act[l][j]
        left[x] = mat
    word = None
    if mod_a.word is not None and mod_b.word is not None:
        word = mod_a.word + mod_b.word
    return Bimodule(mod_a.real, degrees, left["s"], left["t"],
                    word=word, shift=mod_a.shift + mod_b.shift, check=False)


def bott_samelson(m, word, shift=0):
    out = regular(m, 0)
    for letter in word:
        out = tensor(out, b_generator(m, letter))
    return out.shifted(shift) if shift else out


def dualize_D(mod):
    """D(M): degrees negated, left action transposed."""
    return Bimodule(mod.real, [-d for d in mod.degrees],
                    mat_transpose(mod.left["s"]),
                    mat_transpose(mod.left["t"]),
                    word=None, shift=-mod.shift, check=False)


def flip_omega(mod):
    """omega on a word-tagged atom: reverse the word, keep the shift."""
    if mod.word is None:
        raise ValueError("flip_omega requires a word-tagged atom")
    return bott_samelson(mod.m, tuple(reversed(mod.word)), mod.shift)


def dual_vee(mod):
    """vee = omega after D on a word-tagged atom: reverse word, negate shift."""
    if mod.word is None:
        raise ValueError("dual_vee requires a word-tagged atom")
    return bott_samelson(mod.m, tuple(reversed(mod.word)), -mod.shift)


# ---------------------------------------------------------------------------
# morphisms


class BimoduleMorphism:
    __slots__ = ("dom", "cod", "matrix", "degree")

    def __init__(self, dom, cod, matrix, degree=0, check=True):
        self.dom = dom
        self.cod = cod
        self.matrix = tuple(tuple(row) for row in matrix)
        self.degree = degree
        if check:
            self._validate()

    def _validate(self):
        if len(self.matrix) != self.cod.rank or any(
                len(r) != self.dom.rank for r in self.matrix):
            raise ValueError("morphism matrix has wrong shape")
        for i in range(self.cod.rank):
            for j in range(self.dom.rank):
                want = self.degree + self.dom.degrees[j] - self.cod.degrees[i]
                if not self.matrix[i][j].is_homogeneous(want):
                    raise ValueError(
                        "entry (%d,%d) not homogeneous of degree %d"
                        % (i, j, want))
        field = self.dom.field
        mat = [list(r) for r in self.matrix]
        for x in LETTERS:
            lhs = mat_mul([list(r) for r in self.cod.left[x]], mat, field)
            rhs = mat_mul(mat, [list(r) for r in self.dom.left[x]], field)
            if not mat_eq(lhs, rhs):
                raise ValueError("morphism does not intertwine left_%s" % x)

    def __bool__(self):
        return any(any(row) for row in self.matrix)

    def __eq__(self, other):
        if not isinstance(other, BimoduleMorphism):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.matrix == other.matrix)

    def compose(self, other):
        """self after other."""
        if other.cod is not self.dom and other.cod != self.dom:
            raise ValueError("composition mismatch")
        mat = mat_mul([list(r) for r in self.matrix],
                      [list(r) for r in other.matrix], self.dom.field)
        return BimoduleMorphism(other.dom, self.cod, mat,
                                self.degree + other.degree, check=False)

    def __add__(self, other):
        return BimoduleMorphism(
            self.dom, self.cod,
            mat_add([list(r) for r in self.matrix],
                    [list(r) for r in other.matrix]),
            self.degree, check=False)

    def __neg__(self):
        return BimoduleMorphism(self.dom, self.cod,
                                mat_neg([list(r) for r in self.matrix]),
                                self.degree, check=False)

    def scale(self, c):
        field = self.dom.field
        f = RingElement.constant(field, 0) + c if not isinstance(c, RingElement) else c
        return BimoduleMorphism(self.dom, self.cod,
                                mat_scale([list(r) for r in self.matrix], f),
                                self.degree, check=False)

    def __repr__(self):
        return "BimoduleMorphism(%r -> %r, deg=%d)" % (
            self.dom, self.cod, self.degree)


def identity_morphism(mod):
    return BimoduleMorphism(mod, mod, mat_identity(mod.field, mod.rank),
                            0, check=False)


def zero_morphism(dom, cod, degree=0):
    return BimoduleMorphism(dom, cod,
                            mat_zero(dom.field, cod.rank, dom.rank),
                            degree, check=False)


def tensor_morphism(f, g):
    """f (x) g between the tensor bimodules."""
    dom = tensor(f.dom, g.dom)
    cod = tensor(f.cod, g.cod)
    field = dom.field
    rb_dom, rb_cod = g.dom.rank, g.cod.rank
    mat = mat_zero(field, cod.rank, dom.rank)
    for k in range(f.cod.rank):
        for i in range(f.dom.rank):
            p = f.matrix[k][i]
            if not p:
                continue
            act = g.cod.left_action_of(p)
            # left-move p across the tensor, then apply g
            block = mat_mul(act, [list(r) for r in g.matrix], field)
            for l in range(rb_cod):
                for j in range(rb_dom):
                    if block[l][j]:
                        mat[k * rb_cod + l][i * rb_dom + j] = \
                            mat[k * rb_cod + l][i * rb_dom + j] + block[l][j]
    return BimoduleMorphism(dom, cod, mat, f.degree + g.degree, check=False)


DOT_IN_HALF = Fraction(1, 2)


def dot_out(m, letter):
    """Multiplication B_letter -> R(1): e1 -> 1, e2 -> alpha."""
    real = realization(m)
    dom = b_generator(m, letter)
    cod = regular(m, 1)
    return BimoduleMorphism(dom, cod,
                            [[real.one, real.alpha[letter]]], 0)


def dot_in(m, letter):
    """R(-1) -> B_letter: 1 -> (alpha (x) 1 + 1 (x) alpha) / 2."""
    real = realization(m)
    dom = regular(m, -1)
    cod = b_generator(m, letter)
    half = real.field.from_rational(DOT_IN_HALF)
    return BimoduleMorphism(dom, cod,
                            [[real.alpha[letter].scale(half)],
                             [RingElement.constant(real.field, half)]], 0)


# ---------------------------------------------------------------------------
# hom spaces


class HomSpace:
    """Right R-module of intertwiners dom -> cod, with minimal generators."""

    def __init__(self, dom, cod):
        self.dom = dom
        self.cod = cod
        field = dom.field
        nd, nc = dom.rank, cod.rank
        nunk = nc * nd
        tags = [cod.degrees[i] - dom.degrees[j]
                for i in range(nc) for j in range(nd)]
        self.position_degrees = tags
        if not nunk:
            self.generators = []
            self.degrees = []
            return
        gens = self._generators_by_degree(field, nd, nc, tags)
        if gens is None:  # freeness heuristic failed: exact fallback
            gens = self._generators_by_syzygies(field, nd, nc, nunk, tags)
        self.generators = gens
        self.degrees = sorted(column_degree(g, tags) for g in gens)

    def _generators_by_degree(self, field, nd, nc, tags):
        """Minimal generators collected degree by degree.

        Hom spaces of Soergel bimodules are free right R-modules generated
        in degrees within [min(tags), max(tags)]; each degree slice is a
        small K_m-linear system (hom_degree_basis).  The bound is verified
        on two extra degrees; on any mismatch we return None and the
        caller falls back to the syzygy computation.
        """
        dom, cod = self.dom, self.cod
        gens = []  # (degree, morphism matrix)
        lo, hi = min(tags), max(tags)
        for d in range(lo, hi + 3):
            unknowns = []
            for i in range(nc):
                for j in range(nd):
                    dd = d + dom.degrees[j] - cod.degrees[i]
                    if dd < 0 or dd % 2:
                        continue
                    half = dd // 2
                    for a in range(half + 1):
                        unknowns.append((i, j, a, half - a))
            if not unknowns:
                continue
            col_of = {u: k for k, u in enumerate(unknowns)}
            span = []  # echelon rows, {col: scalar}, leading entry 1
            for e, mat in gens:
                if (d - e) < 0 or (d - e) % 2:
                    continue
                half = (d - e) // 2
                for p in range(half + 1):
                    q = half - p
                    vec = {}
                    for (i, j, a, b), k in col_of.items():
                        if a >= p and b >= q:
                            c = mat[i][j].terms.get((a - p, b - q))
                            if c:
                                vec[k] = c
                    _echelon_insert(span, vec)
            for phi in hom_degree_basis(dom, cod, d):
                vec = {}
                for (i, j, a, b), k in col_of.items():
                    c = phi.matrix[i][j].terms.get((a, b))
                    if c:
                        vec[k] = c
                if _echelon_insert(span, vec):
                    if d > hi:
                        return None  # generator beyond the bound: bail out
                    gens.append((d, phi.matrix))
        out = []
        for e, mat in sorted(gens, key=lambda t: t[0]):
            vec = [RingElement.zero(field)] * (nc * nd)
            for i in range(nc):
                for j in range(nd):
                    vec[i * nd + j] = mat[i][j]
            out.append(vec)
        return out

    def _generators_by_syzygies(self, field, nd, nc, nunk, tags):
        dom, cod = self.dom, self.cod

        def pos(i, j):
            return i * nd + j

        rows = []
        for x in LETTERS:
            for i in range(nc):
                for j in range(nd):
                    row = [RingElement.zero(field)] * nunk
                    for a in range(nc):
                        if cod.left[x][i][a]:
                            row[pos(a, j)] = row[pos(a, j)] + cod.left[x][i][a]
                    for b in range(nd):
                        if dom.left[x][b][j]:
                            row[pos(i, b)] = row[pos(i, b)] - dom.left[x][b][j]
                    rows.append(row)
        gens = matrix_kernel(rows, field)
        return minimalize_columns(gens, nunk, field, degrees=tags)

    def graded_rank(self):
        from .series import QSeries
        num = {}
        for g in self.generators:
            d = column_degree(g, self.position_degrees)
            num[d] = num.get(d, 0) + 1
        return QSeries(num, 0)

    def basis(self):
        out = []
        nd = self.dom.rank
        for g in self.generators:
            mat = [[g[i * nd + j] for j in range(nd)]
                   for i in range(self.cod.rank)]
            out.append(BimoduleMorphism(
                self.dom, self.cod, mat,
                column_degree(g, self.position_degrees), check=False))
        return sorted(out, key=lambda f: f.degree)

    def degree_basis(self, degree=0):
        return [f for f in self.basis() if f.degree == degree]


def _echelon_insert(span, row):
    """Reduce a sparse {col: scalar} row against the echelon span; extend
    the span and return True when a new pivot appears."""
    row = {c: v for c, v in row.items() if v}
    lead = {min(p): p for p in span if p}
    while row:
        c = min(row)
        prow = lead.get(c)
        if prow is None:
            inv = row[c].inverse()
            span.append({cc: v * inv for cc, v in row.items()})
            return True
        f = row.pop(c)
        for cc, v in prow.items():
            if cc == c:
                continue
            nv = row.get(cc)
            nv = -(f * v) if nv is None else nv - f * v
            if nv:
                row[cc] = nv
            else:
                row.pop(cc, None)
    return False


def hom_space(dom, cod):
    return HomSpace(dom, cod)


def direct_sum(mods):
    """Block-diagonal direct sum; returns (sum, inclusions, projections)."""
    if not mods:
        raise ValueError("empty direct sum")
    real = mods[0].real
    field = real.field
    degrees = []
    offsets = []
    for mod in mods:
        offsets.append(len(degrees))
        degrees.extend(mod.degrees)
    total = len(degrees)
    left = {}
    for x in LETTERS:
        mat = mat_zero(field, total, total)
        for off, mod in zip(offsets, mods):
            for i in range(mod.rank):
                for j in range(mod.rank):
                    mat[off + i][off + j] = mod.left[x][i][j]
        left[x] = mat
    out = Bimodule(real, degrees, left["s"], left["t"], check=False)
    incls, projs = [], []
    for off, mod in zip(offsets, mods):
        inc = mat_zero(field, total, mod.rank)
        prj = mat_zero(field, mod.rank, total)
        one = RingElement.constant(field, 1)
        for i in range(mod.rank):
            inc[off + i][i] = one
            prj[i][off + i] = one
        incls.append(BimoduleMorphism(mod, out, inc, 0, check=False))
        projs.append(BimoduleMorphism(out, mod, prj, 0, check=False))
    return out, incls, projs


def hom_degree_basis(dom, cod, degree=0):
    """K_m-basis of the intertwiners dom -> cod of one fixed degree.

    Solved as a finite-dimensional linear system over K_m: each matrix
    entry is a polynomial of a forced internal degree, so its monomial
    coefficients are the unknowns.
    """
    field = dom.field
    unknowns = []  # (i, j, a, b): coefficient of a_s^a a_t^b in entry (i,j)
    for i in range(cod.rank):
        for j in range(dom.rank):
            d = degree + dom.degrees[j] - cod.degrees[i]
            if d < 0 or d % 2:
                continue
            half = d // 2
            for a in range(half + 1):
                unknowns.append((i, j, a, half - a))
    if not unknowns:
        return []
    col_of = {u: k for k, u in enumerate(unknowns)}
    rows = {}  # (x, r, c, mono) -> {col: scalar}

    def bump(key, col, val):
        row = rows.setdefault(key, {})
        row[col] = row.get(col, field.zero()) + val

    for x in LETTERS:
        for (i, j, a, b) in unknowns:
            col = col_of[(i, j, a, b)]
            # term (cod.left[x] . Phi)[r][j] picks up left[x][r][i]*mono(a,b)
            for r in range(cod.rank):
                f = cod.left[x][r][i]
                for (p, q), cf in f.terms.items():
                    bump((x, r, j, (p + a, q + b)), col, cf)
            # term (Phi . dom.left[x])[i][c] picks up mono(a,b)*left[x][j][c]
            for c in range(dom.rank):
                f = dom.left[x][j][c]
                for (p, q), cf in f.terms.items():
                    bump((x, i, c, (p + a, q + b)), col, -cf)
    if rows:
        vecs = linalg.sparse_kernel_basis(
            (rows[key] for key in sorted(rows)), len(unknowns), field)
    else:
        vecs = [[field.one() if k == i else field.zero()
                 for k in range(len(unknowns))]
                for i in range(len(unknowns))]
    out = []
    for vec in vecs:
        mat = mat_zero(field, cod.rank, dom.rank)
        for (i, j, a, b), k in col_of.items():
            if vec[k]:
                mat[i][j] = mat[i][j] + RingElement(
                    field, {(a, b): vec[k]})
        out.append(BimoduleMorphism(dom, cod, mat, degree, check=False))
    return out


# ---------------------------------------------------------------------------
# invertibility of degree-0 morphisms (graded Nakayama)


def scalar_part(phi):
    """Constant coefficients where source and target degrees agree."""
    field = phi.dom.field
    out = []
    for i in range(phi.cod.rank):
        row = []
        for j in range(phi.dom.rank):
            if (phi.degree + phi.dom.degrees[j] - phi.cod.degrees[i] == 0):
                row.append(phi.matrix[i][j].constant_coefficient())
            else:
                row.append(field.zero())
        out.append(row)
    return out


def is_invertible(phi):
    if phi.dom.rank != phi.cod.rank or phi.degree != 0:
        return False
    if not phi.dom.same_graded_rank(phi.cod):
        return False
    return bool(linalg.det(scalar_part(phi), phi.dom.field))


def invert_morphism(phi):
    """Inverse of a degree-0 isomorphism via the graded Neumann series."""
    field = phi.dom.field
    sinv = linalg.inverse(scalar_part(phi), field)
    if sinv is None:
        return None
    sinv_r = [[RingElement.constant(field, 0) + c if c else
               RingElement.zero(field) for c in row] for row in sinv]
    # phi = S + P with P of strictly positive internal degree; then
    # N = S^-1 P strictly raises basis degree, hence is nilpotent.
    smat = [[RingElement.constant(field, 0) + c if c else
             RingElement.zero(field) for c in row]
            for row in scalar_part(phi)]
    pmat = mat_sub([list(r) for r in phi.matrix], smat)
    nmat = mat_mul(sinv_r, pmat, field)
    acc = mat_identity(field, phi.dom.rank)
    term = mat_identity(field, phi.dom.rank)
    for _ in range(phi.dom.rank + 1):
        term = mat_neg(mat_mul(term, nmat, field))
        if not any(any(row) for row in term):
            break
        acc = mat_add(acc, term)
    inv = mat_mul(acc, sinv_r, field)
    return BimoduleMorphism(phi.cod, phi.dom, inv, 0, check=False)


def find_isomorphism(mod_a, mod_b, seed=0, trials=32):
    """A degree-0 invertible intertwiner mod_a -> mod_b, or None."""
    import random
    if not mod_a.same_graded_rank(mod_b):
        return None
    basis = hom_space(mod_a, mod_b).degree_basis(0)
    if not basis:
        return None
    field = mod_a.field
    rng = random.Random(seed)
    candidates = [[1] * len(basis)]
    for _ in range(trials):
        candidates.append([rng.randint(-3, 3) for _ in basis])
    for coeffs in candidates:
        phi = zero_morphism(mod_a, mod_b)
        for c, f in zip(coeffs, basis):
            if c:
                phi = phi + f.scale(field.from_rational(c))
        if is_invertible(phi):
            return phi
    return None
