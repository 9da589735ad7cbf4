import random

import pytest

from homalg.algebra import Bimodule
from homalg.complexes import (BimoduleComplex, cohomology_dim, inf_sup_amp,
                              single_bimodule_complex)
from homalg.dg import (DGModule, DGRing, dgring_from_algebra, dgmodule_from_complex,
                       dgmodule_to_complex, gv_add, gv_eq, gv_scale, h0,
                       module_in_degree_zero, projection_and_section,
                       regular_dgmodule, restrict_along_tau, trivial_extension)
from homalg.errors import NoCanonicalSection, SupPositive
from homalg.field import QQ
from homalg.fixtures import FIXTURE_NAMES, get_fixture
from homalg.matrix import unit_vec, vec_add, vec_scale, zero_vec


def da_shifted(a, shift_to=-1):
    return single_bimodule_complex(a.dual_bimodule(), shift_to)


def tiny_b():
    # k semidirect k in degree -1: two-dimensional DG-ring
    a = get_fixture("k@Q")
    return trivial_extension(a, da_shifted(a))


def test_trivial_extension_tiny():
    b = tiny_b()
    assert b.dims == {0: 1, -1: 1}
    assert b.total_dim() == 2


def test_trivial_extension_positive_degree_rejected():
    a = get_fixture("k@Q")
    with pytest.raises(SupPositive):
        trivial_extension(a, da_shifted(a, 1))


def test_trivial_extension_all_fixtures_pass_exhaustive_checks():
    # the DGRing constructor verifies d^2, graded associativity, unit, Leibniz
    for name in FIXTURE_NAMES:
        for tag in ("Q", "F5"):
            a = get_fixture(f"{name}@{tag}")
            b = trivial_extension(a, da_shifted(a))
            assert b.total_dim() == 2 * a.dim


def test_product_formula_on_random_elements():
    # [a1; m1] [a2; m2] = [a1 a2; a1 m2 + m1 a2] on random elements
    rng = random.Random(7170)
    for fid in ("a2@Q", "kx2@Q", "square@Q", "a3@F5"):
        a = get_fixture(fid)
        da = a.dual_bimodule()
        b = trivial_extension(a, da_shifted(a))
        f = a.field
        for _ in range(25):
            a1 = a.random_element(rng)
            a2 = a.random_element(rng)
            m1 = tuple(f.random(rng) for _ in range(da.dim))
            m2 = tuple(f.random(rng) for _ in range(da.dim))
            x = {0: a1, -1: m1}
            y = {0: a2, -1: m2}
            prod = b.mult_elem(x, y)
            expect0 = a.mult(a1, a2)
            expect1 = vec_add(f, da.act_left(a1, m2), da.act_right(m1, a2))
            assert gv_eq(f, prod, {0: expect0, -1: expect1})


def test_h0_recovers_structure_constants():
    for name in FIXTURE_NAMES:
        a = get_fixture(f"{name}@Q")
        b = trivial_extension(a, da_shifted(a))
        h = h0(b)
        assert h.sc == a.sc
        assert h.unit == a.unit
        assert h.dim == a.dim


def test_h0_of_degree_zero_ring_is_itself():
    a = get_fixture("a2@Q")
    b = dgring_from_algebra(a)
    h = h0(b)
    assert h.sc == a.sc


def test_h0_with_degree_zero_bimodule_term():
    # M = the regular bimodule in degree 0, zero differential: H^0 is the
    # 2-dimensional square-zero extension, not A
    a = get_fixture("k@Q")
    reg = Bimodule(a, a, 1,
                   [a.left_mult_matrix((QQ.one(),))],
                   [a.right_mult_matrix((QQ.one(),))])
    b = trivial_extension(a, single_bimodule_complex(reg, 0))
    h = h0(b)
    assert h.dim == 2
    assert h.sc != a.sc


def test_projection_section_identity():
    for name in FIXTURE_NAMES:
        a = get_fixture(f"{name}@Q")
        b = trivial_extension(a, da_shifted(a))
        sd = projection_and_section(b)  # raises if pi.tau != 1 or tau not multiplicative
        assert sd.h0_algebra.sc == a.sc


def test_section_multiplicative_on_random_pairs():
    rng = random.Random(990)
    a = get_fixture("a3@Q")
    b = trivial_extension(a, da_shifted(a))
    sd = projection_and_section(b)
    for _ in range(20):
        x = a.random_element(rng)
        y = a.random_element(rng)
        lhs = b.mult_elem(sd.tau_elem(x), sd.tau_elem(y))
        rhs = sd.tau_elem(a.mult(x, y))
        assert gv_eq(a.field, lhs, rhs)


def test_no_section_without_trivial_extension_meta():
    a = get_fixture("a2@Q")
    b0 = dgring_from_algebra(a)
    with pytest.raises(NoCanonicalSection):
        projection_and_section(b0)


def test_restriction_is_a_plus_m():
    # restriction along tau equals the complex A (+) M degree by degree
    for fid in ("k@Q", "a2@Q", "kx3@F5"):
        a = get_fixture(fid)
        b = trivial_extension(a, da_shifted(a))
        c = restrict_along_tau(b)
        assert c.term(0).dim == a.dim
        assert c.term(-1).dim == a.dim  # DA has dim = dim A
        assert inf_sup_amp(c) == (-1, 0, 1)


def test_restriction_of_degree_zero_ring_is_regular_module():
    a = get_fixture("kx2@Q")
    b = trivial_extension(a, da_shifted(a))
    c = restrict_along_tau(b)
    # degree-0 term is the regular module
    reg = a.regular_module()
    assert c.term(0).action == reg.action


def test_regular_dgmodule_and_shift():
    b = tiny_b()
    m = regular_dgmodule(b)
    assert m.dims == {0: 1, -1: 1}
    s = m.shift(1)
    assert s.dims == {-1: 1, -2: 1}
    s2 = s.shift(-1)
    assert s2.dims == m.dims


def test_module_in_degree_zero_verifies():
    a = get_fixture("a2@Q")
    b = trivial_extension(a, da_shifted(a))
    sd = projection_and_section(b)
    for s in a.simple_modules():
        x = module_in_degree_zero(b, s, sd)
        assert x.dims == {0: 1}


def test_complex_dgmodule_roundtrip():
    a = get_fixture("kx2@Q")
    b0 = dgring_from_algebra(a)
    xi = list(a.labels).index("x")
    from homalg.complexes import BddComplex
    reg = a.regular_module()
    rx = a.right_mult_matrix(unit_vec(QQ, 2, xi))
    c = BddComplex(a, {-1: reg, 0: reg}, {-1: rx})
    m = dgmodule_from_complex(b0, c)
    c2 = dgmodule_to_complex(m)
    assert c2.term(-1).action == c.term(-1).action
    assert c2.diff(-1) == c.diff(-1)


def test_dgring_json_roundtrip():
    b = trivial_extension(get_fixture("a2@Q"), da_shifted(get_fixture("a2@Q")))
    j = b.to_json()
    b2 = DGRing.from_json(j)
    assert b2.dims == b.dims
    assert b2.mult == b.mult
    assert b2.unit == b.unit
