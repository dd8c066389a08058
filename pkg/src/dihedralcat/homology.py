"""Homology of complexes of presented modules and HHH assembly.

The triply-graded series is assembled strandwise: for each Hochschild
degree k the simplified Rouquier complex is pushed through HH^k, homology
is taken per cohomological (T-) degree, and Hilbert series are summed with
one fixed internal-degree offset per strand.
"""

from __future__ import annotations

from .modules import (ModuleGB, PresentedModule, column_degree,
                      minimalize_columns)
from .ring import RingElement, realization
from .series import PoincareSeries, QSeries

# Internal-degree offset per Hochschild strand (Q-exponent added to the
# strand's Hilbert series).  The Koszul twists M(2), M(4) already carry the
# normalization that reproduces the golden Whitehead data and the HOMFLY
# specialization, so every offset is zero; the knob stays in place because
# the acceptance tests pin it empirically.
STRAND_Q_OFFSET = {0: 0, 1: 0, 2: 0}


def _syzygy_project(columns, rank, field, first):
    """Syzygies of the given columns, projected to the first `first`
    coordinates."""
    if not columns:
        return []
    gb = ModuleGB(columns, rank, field)
    return [vec[:first] for vec in gb.syzygies()]


def presented_homology(degrees, relations, maps, field, at):
    """ker/im homology of a complex of presented modules at one degree.

    degrees/relations: {cohom degree: generator degrees / relation columns};
    maps: {cohom degree: matrix over R to the next degree}.
    """
    deg_at = degrees[at]
    n_at = len(deg_at)
    zero = RingElement.zero(field)
    amat = maps.get(at)
    if amat is not None and len(amat) and n_at:
        acols = [[amat[i][j] for i in range(len(amat))] for j in range(n_at)]
        relq = [c for c in relations.get(at + 1, []) if any(c)]
        combined = acols + relq
        syz = _syzygy_project(combined, len(amat), field, n_at)
        kgens = [c for c in syz if any(c)]
    else:
        kgens = [[zero] * n_at for _ in range(n_at)]
        for i in range(n_at):
            kgens[i][i] = RingElement.constant(field, 1)
    for col in relations.get(at, []):
        if any(col):
            kgens.append(list(col))
    kgens = minimalize_columns(kgens, n_at, field, degrees=list(deg_at))
    if not kgens:
        return PresentedModule([], [], field)
    lower = []
    bmat = maps.get(at - 1)
    if bmat is not None and len(bmat) == n_at:
        ncols = len(bmat[0]) if bmat else 0
        for j in range(ncols):
            col = [bmat[i][j] for i in range(n_at)]
            if any(col):
                lower.append(col)
    for col in relations.get(at, []):
        if any(col):
            lower.append(list(col))
    combined = kgens + lower
    rels = _syzygy_project(combined, n_at, field, len(kgens))
    rels = [c for c in rels if any(c)]
    kdegs = [column_degree(c, list(deg_at)) for c in kgens]
    return PresentedModule(kdegs, rels, field).minimalize()


def complex_homology(degrees, relations, maps, field):
    """All homology modules, {cohom degree: minimal PresentedModule}."""
    out = {}
    for d in sorted(degrees):
        h = presented_homology(degrees, relations, maps, field, d)
        if h.rank:
            out[d] = h
    return out


def _concat_strand(results):
    """Concatenate per-atom HochschildResults of one cohomological degree."""
    degs = []
    rels = []
    off = 0
    field = None
    for res in results:
        pres = res.presentation
        field = pres.field
        degs.extend(pres.degrees)
        for col in pres.relations:
            rels.append([RingElement.zero(field)] * off + list(col))
        off += pres.rank
    total = off
    rels = [col + [RingElement.zero(field)] * (total - len(col))
            for col in rels]
    return degs, rels


def strand_data(cplx, k):
    """Presented-complex data (degrees, relations, maps) for HH^k(cplx)."""
    from .trace import hochschild_on_complex
    results, maps = hochschild_on_complex(cplx, k)
    degrees = {}
    relations = {}
    for d, lst in results.items():
        degs, rels = _concat_strand(lst)
        degrees[d] = degs
        relations[d] = rels
    return degrees, relations, maps


def strand_homology(cplx, k):
    """{cohom degree: minimal PresentedModule} for the HH^k strand."""
    field = realization(cplx.m).field
    degrees, relations, maps = strand_data(cplx, k)
    return complex_homology(degrees, relations, maps, field)


def hhh(braid, m=3, strands=(0, 1, 2), precomputed=None):
    """The triply-graded Poincare series of the braid closure."""
    from .complexes import rouquier_braid
    cplx = precomputed
    if cplx is None:
        cplx = rouquier_braid(m, braid, simplify=True, split=True)
    series = PoincareSeries.zero()
    for k in strands:
        hom = strand_homology(cplx, k)
        off = STRAND_Q_OFFSET[k]
        for t_deg, module in hom.items():
            qs = module.hilbert_series()
            if off:
                qs = qs.shift(off)
            series = series.add_piece(k, t_deg, qs)
    return series


def euler_characteristic_check(degrees, relations, maps, field):
    """Sum (-1)^i HS(C_i) == Sum (-1)^i HS(H_i), returns (bool, residual)."""
    total_c = QSeries.zero()
    for d in degrees:
        pres = PresentedModule(degrees[d], relations.get(d, []), field)
        hs = pres.hilbert_series()
        total_c = total_c + (hs if d % 2 == 0 else -hs)
    total_h = QSeries.zero()
    for d, h in complex_homology(degrees, relations, maps, field).items():
        hs = h.hilbert_series()
        total_h = total_h + (hs if d % 2 == 0 else -hs)
    resid = total_c - total_h
    return (not resid), resid
