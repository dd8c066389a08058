"""Oracle tests for module Groebner bases, syzygies and Hilbert series."""

import pytest

from dihedralcat.field import field_for
from dihedralcat.modules import (ModuleGB, PresentedModule, column_degree,
                                 kernel, matrix_kernel, minimal_presentation,
                                 minimalize_columns)
from dihedralcat.ring import RingElement
from dihedralcat.series import QSeries


def _gens(m=3):
    F = field_for(m)
    return F, RingElement.gen(F, "s"), RingElement.gen(F, "t")


def test_groebner_membership_and_lift():
    F, a, b = _gens()
    one = RingElement.constant(F, 1)
    cols = [[a], [b]]
    gb = ModuleGB(cols, 1, F)
    assert gb.contains([a * a + b * b.scale(F.delta())])
    assert not gb.contains([one])
    lift = gb.lift([a * b])
    assert lift is not None
    total = sum((lift[i] * cols[i][0] for i in range(2)),
                RingElement.zero(F))
    assert total == a * b


def test_syzygies_are_exact():
    F, a, b = _gens()
    cols = [[a], [b], [a * b]]
    gb = ModuleGB(cols, 1, F)
    syz = gb.syzygies()
    assert syz  # (b, 0, -1)-type relations exist
    for vec in syz:
        total = sum((vec[i] * cols[i][0] for i in range(3)),
                    RingElement.zero(F))
        assert not total


def test_kernel_of_map():
    # kernel of R^2 -> R, (f, g) -> a f + b g is generated by (b, -a)
    F, a, b = _gens()
    ker = matrix_kernel([[a, b]], F)
    assert ker
    for col in ker:
        assert not a * col[0] + b * col[1]
    gb = ModuleGB(ker, 2, F)
    assert gb.contains([b, -a])


def test_free_module_kernel_is_zero():
    F, a, b = _gens()
    one = RingElement.constant(F, 1)
    zero = RingElement.zero(F)
    ker = matrix_kernel([[one, zero], [a, one]], F)
    assert not [c for c in ker if any(c)]


def test_minimalize_columns_drops_redundant():
    F, a, b = _gens()
    cols = [[a], [a.scale(F.from_rational(2))], [b], [a + b]]
    kept = minimalize_columns(cols, 1, F, degrees=[0])
    gb1 = ModuleGB(cols, 1, F)
    gb2 = ModuleGB(kept, 1, F)
    assert len(kept) == 2
    for col in cols:
        assert gb2.contains(col)
    for col in kept:
        assert gb1.contains(col)


def test_column_degree():
    F, a, b = _gens()
    assert column_degree([a * b, RingElement.zero(F)], [0, 5]) == 4
    assert column_degree([RingElement.zero(F), b], [0, 5]) == 7


def test_hilbert_series_free_and_quotient():
    F, a, b = _gens()
    free = PresentedModule([0, 2], [], F)
    assert free.hilbert_series() == QSeries({0: 1, 2: 1}, 2)
    # R/(a_s) has series 1/(1-Q^2)
    quot = PresentedModule([0], [[a]], F)
    assert quot.hilbert_series() == QSeries({0: 1}, 1)
    # R/(a_s, a_t) = k
    point = PresentedModule([0], [[a], [b]], F)
    assert point.hilbert_series() == QSeries({0: 1}, 0)
    # R/(a_s^2, a_s a_t): basis {t^j} U {s}, series 1/(1-Q^2) + Q^2
    mixed = PresentedModule([0], [[a * a], [a * b]], F)
    assert mixed.hilbert_series() == QSeries({0: 1}, 1) + QSeries({2: 1}, 0)


def test_minimal_presentation_projector_identity():
    F, a, b = _gens()
    one = RingElement.constant(F, 1)
    zero = RingElement.zero(F)
    # generator 1 = a * generator 0 is redundant
    degrees = [0, 2]
    relations = [[a, -one], [zero, b]]
    new_deg, new_rel, incl, proj = minimal_presentation(degrees, relations, F)
    assert new_deg == [0]
    # proj . incl = identity on the minimal module
    comp = [[sum((proj[i][k] * incl[k][j] for k in range(len(incl))),
                 RingElement.zero(F))
             for j in range(len(new_deg))] for i in range(len(new_deg))]
    assert comp[0][0] == one
    # the relation b*g1 becomes b*a on the survivor
    gb = ModuleGB(new_rel, 1, F)
    assert gb.contains([a * b])


def test_presented_module_is_zero_and_free():
    F, a, b = _gens()
    one = RingElement.constant(F, 1)
    assert PresentedModule([0], [[one]], F).is_zero()
    assert not PresentedModule([0], [[a]], F).is_zero()
    assert PresentedModule([0, 2], [], F).is_free()
    assert not PresentedModule([0], [[a]], F).is_free()


def test_kernel_wrapper_matches_syzygies():
    F, a, b = _gens()
    cols = [[a, b], [b, a]]
    ker = kernel(cols, 2, F)
    for vec in ker:
        for i in range(2):
            total = sum((vec[j] * cols[j][i] for j in range(2)),
                        RingElement.zero(F))
            assert not total
