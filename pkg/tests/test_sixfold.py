import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwzero.errors import DegreeError, NotDeterminedError
from gwzero.fourmanifold import Manifold4, blow_up
from gwzero.lattice import Class2, parse_form
from gwzero.randomized import random_base
from gwzero.sixfold import Class6, CohoClass6, H4Class, pushforward, stabilize

from oracles import KunnethRing


@pytest.fixture(scope="module")
def small():
    """(H + E8- + <1>) # -CP2: small enough for the symbolic oracle."""
    y = Manifold4.create("Y", parse_form("H+E8-+<1>"), [0] * 10 + [1])
    return stabilize(blow_up(y, "E"))


@pytest.fixture(scope="module")
def ring(small):
    return KunnethRing(small.base.lattice.gram)


def test_stabilize_bases(s, x, E):
    assert s.rank_h2 == x.rank + 1
    assert s.c1_pair(s.fiber()) == 2
    assert s.c1_pair(pushforward(E)) == 1
    assert s.simply_connected
    assert len(s.h2_labels) == len(s.h4_labels) == x.rank + 1


def test_pushforward():
    a, b = Class2([1, 2]), Class2([0, -1])
    assert pushforward(a) == Class6(a, 0)
    assert pushforward(Class2.zero(2)).is_zero()
    assert pushforward(a + b) == pushforward(a) + pushforward(b)


def test_pd_of_pushforward(s, E):
    pd = s.pd_of_pushforward(E)
    assert pd.degree == 4
    assert s.pair_deg4(pd, s.sweep(E)) == -1
    assert s.pair_deg4(pd, s.slice()) == 0
    b = Class2.basis(23, 0)
    assert s.pd_of_pushforward(E + b) == s.pd_of_pushforward(E) + s.pd_of_pushforward(b)


def test_pd_of_sweep(s, E):
    pd = s.pd_of_sweep(E)
    assert pd.degree == 2
    assert s.pair_deg2(pd, pushforward(E)) == -1
    assert s.pair_deg2(pd, s.fiber()) == 0
    b = Class2.basis(23, 3)
    assert s.pd_of_sweep(E + b) == s.pd_of_sweep(E) + s.pd_of_sweep(b)


def test_pd_of_fiber(s, E):
    pd = s.pd_of_fiber()
    assert s.pair_deg4(pd, s.slice()) == 1
    assert s.pair_deg4(pd, s.sweep(E)) == 0
    assert s.pd(2 * s.fiber()) != s.pd(s.fiber())


def test_pair_deg2_examples(s, x, E):
    phi = CohoClass6.deg2(x.lattice.functional(E), 0)
    assert s.pair_deg2(phi, pushforward(E)) == -1
    tau = s.tau()
    assert s.pair_deg2(tau, s.fiber()) == 1
    assert s.pair_deg2(tau, pushforward(E)) == 0
    with pytest.raises(DegreeError):
        s.pair_deg2(s.pd_of_fiber(), pushforward(E))


def test_pair_deg4_examples(s, E):
    assert s.pair_deg4(s.pd_of_pushforward(E), s.sweep(E)) == -1
    assert s.pair_deg4(s.pd_of_fiber(), s.slice()) == 1
    assert s.pair_deg4(CohoClass6.deg4(0, (0,) * 23), H4Class(3, E)) == 0
    with pytest.raises(DegreeError):
        s.pair_deg4(s.tau(), s.slice())


def test_triple_product_examples(s, E):
    tau = s.tau()
    sw = s.pd_of_sweep(E)
    assert s.triple_product(tau, tau, tau) == 0
    assert s.triple_product(sw, sw, tau) == -1
    base = [s.pd_of_sweep(Class2.basis(23, i)) for i in (0, 1, 22)]
    assert s.triple_product(*base) == 0
    with pytest.raises(DegreeError):
        s.triple_product(tau, tau, s.pd_of_fiber())


def test_coho_shape_validation():
    with pytest.raises(DegreeError):
        CohoClass6(3)
    with pytest.raises(DegreeError):
        CohoClass6(4, phi=(1,))
    with pytest.raises(DegreeError):
        CohoClass6(2, vol=1)


def test_non_simply_connected_base_not_determined():
    y = Manifold4.create("T", parse_form("H+<-1>"), [0, 0, 1], simply_connected=False, exceptional_classes=[[0, 0, 1]])
    st6 = stabilize(y)
    assert not st6.simply_connected
    with pytest.raises(NotDeterminedError):
        st6.pd_of_pushforward(Class2([0, 0, 1]))


# -- symbolic Kunneth oracle ------------------------------------------------

def _ring_deg2(ring, a: CohoClass6):
    return ring.from_functional(a.phi) + a.lam * ring.t


def _ring_deg4(ring, b: CohoClass6):
    return b.vol * ring.w + ring.from_functional(b.psi) * ring.t


vec = st.lists(st.integers(-4, 4), min_size=12, max_size=12)


@given(vec, vec)
@settings(max_examples=25)
def test_duality_tables_against_kunneth_oracle(small, ring, a, b):
    A, B = Class2(a), Class2(b)
    # geometric Poincare duals: A x pt -> g_A t, B x S2 -> g_B, X x pt -> t, pt x S2 -> w
    assert small.pair_deg4(small.pd_of_pushforward(A), small.sweep(B)) == ring.integrate(ring.h2x(a) * ring.t * ring.h2x(b))
    assert small.pair_deg4(small.pd_of_pushforward(A), small.slice()) == ring.integrate(ring.h2x(a) * ring.t * ring.t) == 0
    assert small.pair_deg4(small.pd_of_fiber(), small.slice()) == ring.integrate(ring.w * ring.t) == 1
    assert small.pair_deg4(small.pd_of_fiber(), small.sweep(B)) == ring.integrate(ring.w * ring.h2x(b)) == 0
    assert small.pair_deg2(small.pd_of_sweep(A), pushforward(B)) == ring.integrate(ring.h2x(a) * ring.h2x(b) * ring.t)
    assert small.pair_deg2(small.pd_of_sweep(A), small.fiber()) == ring.integrate(ring.h2x(a) * ring.w) == 0
    # duality consistency
    x = small.base
    assert small.pair_deg4(small.pd_of_pushforward(A), small.sweep(B)) == x.pair(A, B) == \
        small.pair_deg2(small.pd_of_sweep(B), pushforward(A))


deg2 = st.tuples(vec, st.integers(-4, 4))


@given(deg2, deg2, deg2)
@settings(max_examples=10)
def test_triple_product_against_kunneth_oracle(small, ring, a, b, c):
    classes = [CohoClass6.deg2(p, l) for p, l in (a, b, c)]
    expected = ring.integrate(_ring_deg2(ring, classes[0]) * _ring_deg2(ring, classes[1]) * _ring_deg2(ring, classes[2]))
    assert small.triple_product(*classes) == expected
    cup = small.cup22(classes[0], classes[1])
    assert ring.integrate(_ring_deg4(ring, cup) * _ring_deg2(ring, classes[2])) == expected


@given(st.integers(0, 2**32), st.data())
def test_triple_product_symmetric_trilinear(seed, data):
    import itertools

    rng = random.Random(seed)
    s6 = stabilize(random_base(rng, max_rank=12))
    n = s6.base.rank
    v = st.lists(st.integers(-5, 5), min_size=n, max_size=n)
    a, b, c, d = (CohoClass6.deg2(data.draw(v), data.draw(st.integers(-5, 5))) for _ in range(4))
    t = s6.triple_product(a, b, c)
    for p in itertools.permutations((a, b, c)):
        assert s6.triple_product(*p) == t
    assert s6.triple_product(a + d, b, c) == t + s6.triple_product(d, b, c)


@given(st.integers(0, 2**32), st.data())
def test_c1_on_class6(seed, data):
    rng = random.Random(seed)
    s6 = stabilize(random_base(rng, max_rank=12))
    n = s6.base.rank
    a = Class2(data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n)))
    b = data.draw(st.integers(-5, 5))
    assert s6.c1_pair(Class6(a, b)) == s6.base.c1_pair(a) + 2 * b
    assert s6.c1_pair(pushforward(a)) == s6.base.c1_pair(a)


@given(st.integers(0, 2**32), st.data())
def test_pd_injective(seed, data):
    rng = random.Random(seed)
    s6 = stabilize(random_base(rng, max_rank=12))
    n = s6.base.rank
    v = st.lists(st.integers(-3, 3), min_size=n, max_size=n)
    a, b = Class2(data.draw(v)), Class2(data.draw(v))
    if a != b:
        assert s6.pd_of_pushforward(a) != s6.pd_of_pushforward(b)
        assert s6.pd_of_sweep(a) != s6.pd_of_sweep(b)
