"""Executable checks of the structural theorems.

Full-twist complexes, vanishing of partial traces on Rouquier complexes,
pi_s^+ of the relative full twist, relative Serre duality, Hom complexes,
and the Serre-duality series identity.  Every check returns a JSON-ready
report dict with a "status" of "pass", "inconclusive-pass" or "fail".
"""

from __future__ import annotations

from .bimodule import b_generator, hom_space, regular
from .complexes import (complexes_isomorphic, minimal_form, rouquier_braid,
                        single_object, split_atoms, tensor_complex)
from .homology import complex_homology
from .modules import ModuleGB, column_degree
from .ring import RingElement, realization
from .series import QSeries
from .trace import pi_on_complex


# ---------------------------------------------------------------------------
# full twists


from functools import lru_cache


@lru_cache(maxsize=None)
def full_twist(m, simplify=True):
    """FT = F_{w0}^2, the Rouquier complex of (st)^m."""
    return rouquier_braid(m, " ".join(["s", "t"] * m),
                          simplify=simplify, split=simplify)


@lru_cache(maxsize=None)
def full_twist_inverse(m, simplify=True):
    return rouquier_braid(m, " ".join(["t^-1", "s^-1"] * m),
                          simplify=simplify, split=simplify)


@lru_cache(maxsize=None)
def ft_over_t(m, simplify=True):
    """FT_{{s,t}/t} = F_{(st)^m} F_t^{-2}."""
    braid = " ".join(["s", "t"] * m) + " t^-1 t^-1"
    return rouquier_braid(m, braid, simplify=simplify, split=simplify)


@lru_cache(maxsize=None)
def ft_over_t_inverse(m, simplify=True):
    braid = "t t " + " ".join(["t^-1", "s^-1"] * m)
    return rouquier_braid(m, braid, simplify=simplify, split=simplify)


# ---------------------------------------------------------------------------
# homology series of a complex of free bimodules


def _diff_matrix(cplx, d):
    """Whole differential C^d -> C^{d+1} as a matrix over R, or None."""
    if d not in cplx.diffs:
        return None
    field = realization(cplx.m).field
    src = cplx.objects.get(d, [])
    tgt = cplx.objects.get(d + 1, [])
    rows = sum(mod.rank for mod in tgt)
    cols = sum(mod.rank for mod in src)
    mat = [[RingElement.zero(field)] * cols for _ in range(rows)]
    roff = 0
    for r, tm in enumerate(tgt):
        coff = 0
        for c, sm in enumerate(src):
            blk = cplx.diffs[d][r][c]
            if blk is not None:
                for i in range(tm.rank):
                    for j in range(sm.rank):
                        mat[roff + i][coff + j] = blk.matrix[i][j]
            coff += sm.rank
        roff += tm.rank
    return mat


def complex_presentation(cplx):
    """(degrees, relations, maps) viewing the complex over presented
    modules (all relations empty: the atoms are free)."""
    degrees = {d: [deg for mod in obs for deg in mod.degrees]
               for d, obs in cplx.objects.items() if obs}
    relations = {d: [] for d in degrees}
    maps = {}
    for d in cplx.diffs:
        mat = _diff_matrix(cplx, d)
        if mat is not None:
            maps[d] = mat
    return degrees, relations, maps


def homology_series(cplx):
    """{cohomological degree: Hilbert QSeries of the homology}."""
    field = realization(cplx.m).field
    degrees, relations, maps = complex_presentation(cplx)
    hom = complex_homology(degrees, relations, maps, field)
    return {d: h.hilbert_series() for d, h in hom.items()}


def _is_zero_up_to_homotopy(cplx):
    mf = minimal_form(cplx)
    if mf.is_zero():
        return "pass"
    if not homology_series(mf):
        return "inconclusive-pass"
    return "fail"


def _is_boxed_regular(cplx):
    """Is the complex exactly [R] in degree 0?"""
    degs = [d for d, obs in cplx.objects.items() if obs]
    if degs != [0] or len(cplx.objects[0]) != 1:
        return False
    mod = cplx.objects[0][0]
    return mod.rank == 1 and tuple(mod.degrees) == (0,)


# ---------------------------------------------------------------------------
# vanishing suite


def _traced_vanishes(m, braid, letter, sign):
    cplx = rouquier_braid(m, braid, simplify=True, split=True)
    traced = pi_on_complex(cplx, letter, sign)
    return _is_zero_up_to_homotopy(traced)


def check_vanishing(m):
    """pi_s^+ on F_{(st)^k}, F_{(st)^k s} (and pi_s^- on the inverses)
    vanishes for 1 <= k <= floor(m/2); alternating-word vanishing for
    lengths 2..2m-3."""
    checks = []

    def record(name, status):
        checks.append({"name": name, "status": status})

    for k in range(1, m // 2 + 1):
        pos_even = " ".join(["s", "t"] * k)
        pos_odd = pos_even + " s"
        neg_even = " ".join(["t^-1", "s^-1"] * k)
        neg_odd = "s^-1 " + neg_even
        record("pi_s_plus(F_(st)^%d) ~ 0" % k,
               _traced_vanishes(m, pos_even, "s", 1))
        record("pi_s_minus(F_(ts)^-%d) ~ 0" % k,
               _traced_vanishes(m, neg_even, "s", -1))
        if 2 * k + 1 <= 2 * m - 3:
            # the odd word (st)^k s must stay within the alternating-word
            # range; at m = 2 the family is empty (sts is not reduced)
            record("pi_s_plus(F_(st)^%d_s) ~ 0" % k,
                   _traced_vanishes(m, pos_odd, "s", 1))
            record("pi_s_minus(F_s^-1_(ts)^-%d) ~ 0" % k,
                   _traced_vanishes(m, neg_odd, "s", -1))
    for length in range(2, 2 * m - 2):
        word = " ".join(("s", "t")[i % 2] for i in range(length))
        record("pi_s_plus(F_%s) ~ 0" % word.replace(" ", ""),
               _traced_vanishes(m, word, "s", 1))
        inverse = " ".join(tok + "^-1" for tok in reversed(word.split()))
        record("pi_s_minus(F_%s^-1) ~ 0" % word.replace(" ", ""),
               _traced_vanishes(m, inverse, "s", -1))
    status = "pass"
    if any(c["status"] == "fail" for c in checks):
        status = "fail"
    elif any(c["status"] == "inconclusive-pass" for c in checks):
        status = "inconclusive-pass"
    return {"suite": "vanishing", "m": m, "status": status, "checks": checks}


def check_pift(m):
    """Minimal form of pi_s^+(FT_{{s,t}/t}) is exactly [R]."""
    traced = pi_on_complex(ft_over_t(m), "s", 1)
    mf = minimal_form(traced)
    ok = _is_boxed_regular(mf)
    return {"suite": "pift", "m": m,
            "status": "pass" if ok else "fail",
            "minimal_form": repr(mf)}


# ---------------------------------------------------------------------------
# relative Serre duality


def serre_test_objects(m):
    """The test set {[R], [B_s], [B_t], F_s, F_t, F_s F_t}."""
    return {
        "[R]": single_object(m, regular(m, 0)),
        "[B_s]": single_object(m, b_generator(m, "s")),
        "[B_t]": single_object(m, b_generator(m, "t")),
        "F_s": rouquier_braid(m, "s"),
        "F_t": rouquier_braid(m, "t"),
        "F_sF_t": rouquier_braid(m, "s t"),
    }


def _simplify_split(cplx):
    return minimal_form(split_atoms(minimal_form(cplx)))


def check_relative_serre(x_complex, m, seed=20240401):
    """pi_s^-(X) ~ pi_s^+(FT_{{s,t}/t} (x) X), certified by an isomorphism
    of minimal forms when the randomized search finds one, with a homology
    Hilbert-series comparison as the always-decidable fallback."""
    lhs = minimal_form(pi_on_complex(_simplify_split(x_complex), "s", -1))
    prod = _simplify_split(tensor_complex(ft_over_t(m), x_complex))
    rhs = minimal_form(pi_on_complex(prod, "s", 1))
    verdict, witness = complexes_isomorphic(lhs, rhs, seed=seed)
    report = {"suite": "relative-serre", "m": m,
              "lhs": repr(lhs), "rhs": repr(rhs)}
    if verdict == "yes":
        report["status"] = "pass"
        report["witness"] = {str(d): [[repr(x) for x in row]
                                      for row in phi.matrix]
                             for d, phi in (witness or {}).items()}
        return report
    series_match = homology_series(lhs) == homology_series(rhs)
    if verdict == "no" and lhs.graded_atom_profile() != \
            rhs.graded_atom_profile():
        report["status"] = "fail"
    elif series_match:
        report["status"] = "inconclusive-pass"
    else:
        report["status"] = "fail"
    return report


# ---------------------------------------------------------------------------
# Hom complexes


class HomComplex:
    """Total complex of hom_space blocks with D(f) = d_Y f - (-1)^n f d_X.

    Components are free (Soergel inputs), so homology is computed through
    the presented-module machinery with empty relation sets.
    """

    def __init__(self, x_complex, y_complex):
        self.m = x_complex.m
        self.field = realization(self.m).field
        field = self.field
        xdeg = sorted(d for d, obs in x_complex.objects.items() if obs)
        ydeg = sorted(d for d, obs in y_complex.objects.items() if obs)
        xobj = {p: x_complex.sum_object(p) for p in xdeg}
        yobj = {q: y_complex.sum_object(q) for q in ydeg}
        xdif = {p: x_complex.sum_differential(p)
                for p in xdeg if p in x_complex.diffs}
        ydif = {q: y_complex.sum_differential(q)
                for q in ydeg if q in y_complex.diffs}
        # components[n] = ordered list of (p, q, HomSpace, ModuleGB|None)
        self.components = {}
        for p in xdeg:
            for q in ydeg:
                hs = hom_space(xobj[p], yobj[q])
                gb = ModuleGB(hs.generators, len(hs.position_degrees),
                              field) if hs.generators else None
                self.components.setdefault(q - p, []).append((p, q, hs, gb))
        self.degrees = {}
        for n, comps in self.components.items():
            degs = []
            for (_, _, hs, _) in comps:
                degs.extend(column_degree(g, hs.position_degrees)
                            for g in hs.generators)
            self.degrees[n] = degs
        self.maps = {}
        for n in sorted(self.components):
            if n + 1 not in self.components:
                continue
            mat = self._differential(n, xobj, xdif, ydif)
            self.maps[n] = mat

    def _component_offsets(self, n):
        offs = {}
        total = 0
        for (p, q, hs, _) in self.components[n]:
            offs[(p, q)] = total
            total += len(hs.generators)
        return offs, total

    def _differential(self, n, xobj, xdif, ydif):
        field = self.field
        src_offs, src_total = self._component_offsets(n)
        tgt_offs, tgt_total = self._component_offsets(n + 1)
        tgt_lookup = {(p, q): (hs, gb)
                      for (p, q, hs, gb) in self.components[n + 1]}
        mat = [[RingElement.zero(field)] * src_total
               for _ in range(tgt_total)]

        def add_lift(col, tgt_key, vec):
            hs, gb = tgt_lookup[tgt_key]
            if gb is None:
                if any(vec):
                    raise ArithmeticError("Hom differential misses target")
                return
            lifted = gb.lift(vec)
            if lifted is None:
                raise ArithmeticError("Hom differential lift failed")
            base = tgt_offs[tgt_key]
            for i, val in enumerate(lifted):
                if val:
                    mat[base + i][col] = mat[base + i][col] + val

        for (p, q, hs, _) in self.components[n]:
            nd = hs.dom.rank
            for gi, gen in enumerate(hs.generators):
                col = src_offs[(p, q)] + gi
                fmat = [[gen[i * nd + j] for j in range(nd)]
                        for i in range(hs.cod.rank)]
                if q in ydif and (p, q + 1) in tgt_lookup:
                    dmat = ydif[q].matrix
                    comp = [[sum((dmat[i][k] * fmat[k][j]
                                  for k in range(len(fmat)) if fmat[k][j]),
                                 RingElement.zero(field))
                             for j in range(nd)] for i in range(len(dmat))]
                    vec = [comp[i][j] for i in range(len(comp))
                           for j in range(nd)]
                    add_lift(col, (p, q + 1), vec)
                if p - 1 in xdif and (p - 1, q) in tgt_lookup:
                    dmat = xdif[p - 1].matrix
                    nd2 = xobj[p - 1].rank
                    # -(-1)^n f d_X
                    sign = -1 if n % 2 == 0 else 1
                    comp = [[sum((fmat[i][k] * dmat[k][j]
                                  for k in range(nd) if dmat[k][j]),
                                 RingElement.zero(field))
                             for j in range(nd2)]
                            for i in range(len(fmat))]
                    vec = [comp[i][j] if sign == 1 else -comp[i][j]
                           for i in range(len(comp)) for j in range(nd2)]
                    add_lift(col, (p - 1, q), vec)
        return mat

    def homology(self):
        relations = {n: [] for n in self.degrees}
        return complex_homology(self.degrees, relations, self.maps,
                                self.field)

    def homology_series(self):
        return {n: h.hilbert_series() for n, h in self.homology().items()}


def hom_complex(x_complex, y_complex):
    return HomComplex(x_complex, y_complex)


# ---------------------------------------------------------------------------
# Serre duality on series


def _qtext(qs):
    """Raw rational-function text; duals may expand downward, so the
    canonical graded formatter does not apply."""
    c = qs.canonical()
    num = " + ".join("%d*Q^%d" % (v, q) for q, v in sorted(c.num.items()))
    if not num:
        return "0"
    return "(%s)/(1-Q^2)^%d" % (num, c.e) if c.e else "(%s)" % num


def dual_homology_series(series_by_degree):
    """The graded dual of a bigraded homology series, termwise by stratum.

    Local duality over R (two variables in degree 2, omega = R(-4)[2]):
    a stratum c Q^q/(1-Q^2)^e in H^n dualizes to
    c Q^{2e-4-q}/(1-Q^2)^e in H^{-n+2-e}.
    """
    out = {}
    for n, qs in series_by_degree.items():
        for q, e, c in qs.terms():
            tgt = -n + 2 - e
            piece = QSeries({2 * e - 4 - q: c}, e)
            out[tgt] = out.get(tgt, QSeries.zero()) + piece
    return {d: qs for d, qs in out.items() if qs}


def check_serre(x_complex, y_complex, m, twisted_x=None):
    """Bigraded homology series of Hom(X, Y) against the graded dual of
    Hom(Y, FT^{-1} (x) X): Q -> 1/Q with the local-duality twist and
    codimension reindexing of dual_homology_series.

    twisted_x: optional precomputed simplified FT^{-1} (x) X (reusable
    across the Y loop)."""
    lhs = hom_complex(x_complex, y_complex).homology_series()
    twisted = twisted_x
    if twisted is None:
        twisted = _simplify_split(tensor_complex(full_twist_inverse(m),
                                                 x_complex))
    rhs_raw = hom_complex(y_complex, twisted).homology_series()
    rhs = dual_homology_series(rhs_raw)
    report = {"suite": "serre-series", "m": m,
              "lhs": {str(n): _qtext(qs) for n, qs in sorted(lhs.items())},
              "rhs_dual": {str(n): _qtext(qs)
                           for n, qs in sorted(rhs.items())}}
    residuals = {}
    for n in set(lhs) | set(rhs):
        diff = lhs.get(n, QSeries.zero()) - rhs.get(n, QSeries.zero())
        if diff:
            residuals[str(n)] = _qtext(diff)
    if residuals:
        report["status"] = "fail"
        report["residuals"] = residuals
    else:
        report["status"] = "pass"
    return report


# ---------------------------------------------------------------------------
# property instances


def check_semiorthogonality(m):
    """Hom(X, iota M) ~ 0 for X killed by pi_s^+ and iota M a parabolic
    generator: the adjunction hom(X, iota M) = hom(pi_s^+ X, M)."""
    killed = {"F_s": rouquier_braid(m, "s")}
    if m >= 3:
        killed["F_sF_t"] = rouquier_braid(m, "s t")
    induced = {"[R]": single_object(m, regular(m, 0)),
               "[B_t]": single_object(m, b_generator(m, "t"))}
    checks = []
    for xn, xc in killed.items():
        for yn, yc in induced.items():
            series = hom_complex(xc, yc).homology_series()
            checks.append({"name": "hom(%s, %s) ~ 0" % (xn, yn),
                           "status": "pass" if not series else "fail",
                           "series": {str(n): repr(q)
                                      for n, q in series.items()}})
    status = "pass" if all(c["status"] == "pass" for c in checks) else "fail"
    return {"suite": "semiorthogonality", "m": m, "status": status,
            "checks": checks}


def check_equivalence_instance(m):
    """ft_over_t (x) X lands in ker pi_s^+ for X in the negative-word
    generators killed by pi_s^- (word length <= m)."""
    checks = []
    for length in range(1, m + 1):
        word = [("s", "t")[i % 2] for i in range(length)]
        braid = " ".join(tok + "^-1" for tok in reversed(word))
        x_complex = rouquier_braid(m, braid)
        prod = _simplify_split(tensor_complex(ft_over_t(m), x_complex))
        status = _is_zero_up_to_homotopy(pi_on_complex(prod, "s", 1))
        checks.append({"name": "pi_s_plus(ft_over_t (x) F_%s^-1) ~ 0"
                       % "".join(word), "status": status})
    status = "pass"
    if any(c["status"] == "fail" for c in checks):
        status = "fail"
    elif any(c["status"] == "inconclusive-pass" for c in checks):
        status = "inconclusive-pass"
    return {"suite": "equivalence", "m": m, "status": status,
            "checks": checks}


def run_suite(name, m, seed=20240401):
    if name == "vanishing":
        return check_vanishing(m)
    if name == "pift":
        return check_pift(m)
    if name == "relative":
        objs = serre_test_objects(m)
        checks = []
        for xn, xc in objs.items():
            rep = check_relative_serre(xc, m, seed=seed)
            rep["object"] = xn
            checks.append(rep)
        status = "pass"
        if any(c["status"] == "fail" for c in checks):
            status = "fail"
        elif any(c["status"] == "inconclusive-pass" for c in checks):
            status = "inconclusive-pass"
        return {"suite": "relative", "m": m, "status": status,
                "checks": checks}
    if name == "full":
        parts = [check_vanishing(m), check_pift(m),
                 run_suite("relative", m, seed=seed),
                 check_semiorthogonality(m), check_equivalence_instance(m)]
        status = "pass"
        if any(p["status"] == "fail" for p in parts):
            status = "fail"
        elif any(p["status"] == "inconclusive-pass" for p in parts):
            status = "inconclusive-pass"
        return {"suite": "full", "m": m, "status": status, "parts": parts}
    raise ValueError("unknown suite %r" % name)
