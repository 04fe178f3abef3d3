import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperperiodic import _pykernels, kernels

try:
    from hyperperiodic import _ckernels
except ImportError:
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled extension not built")
BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
class TestContracts:
    def test_reduce(self, impl):
        assert tuple(impl.reduce_letters((1, 2, -2, -1, 3))) == (3,)
        assert tuple(impl.reduce_letters(())) == ()

    def test_element_order(self, impl):
        assert impl.element_order((10,), (4,)) == 5
        assert impl.element_order((6, 2), (3, 1)) == 2
        assert impl.element_order((6, 2), (0, 0)) == 1

    def test_cone_orbits(self, impl):
        # Z/10 with cones (10, 5, 2) and images (1, 4, 5); element 1 has one orbit per cone
        got = impl.cone_orbits((10, 1), (1, 0), [(10, 1, 0), (5, 4, 0), (2, 5, 0)])
        assert [tuple(t) for t in got] == [(10, 1, 1), (5, 3, 1), (2, 1, 1)]

    def test_vertex_classes(self, impl):
        assert list(impl.vertex_classes(4, (2, 3, 0, 1))) == [0, 0, 0, 0]


@needs_c
@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-6, 6).filter(bool), max_size=60))
def test_reduce_agrees(letters):
    assert tuple(_ckernels.reduce_letters(tuple(letters))) == _pykernels.reduce_letters(letters)


@needs_c
@settings(max_examples=200, deadline=None)
@given(st.integers(1, 60), st.sampled_from([1, 2]), st.data())
def test_cone_orbits_agree(a, b, data):
    h = (data.draw(st.integers(0, a - 1)), data.draw(st.integers(0, b - 1)))
    cones = []
    for _ in range(data.draw(st.integers(1, 4))):
        x = (data.draw(st.integers(0, a - 1)), data.draw(st.integers(0, b - 1)))
        m = _pykernels.element_order((a, b), x)
        cones.append((m, x[0], x[1]))
    py = [tuple(t) for t in _pykernels.cone_orbits((a, b), h, cones)]
    c = [tuple(t) for t in _ckernels.cone_orbits((a, b), h, cones)]
    assert py == c
    assert _ckernels.element_order((a, b), h) == _pykernels.element_order((a, b), h)


@needs_c
@pytest.mark.parametrize("seed", range(20))
def test_vertex_classes_agree(seed):
    rng = random.Random(seed)
    m = 2 * rng.randint(1, 200)
    edges = list(range(m))
    rng.shuffle(edges)
    pairing = [0] * m
    for a, b in zip(edges[::2], edges[1::2]):
        pairing[a], pairing[b] = b, a
    assert list(_ckernels.vertex_classes(m, tuple(pairing))) == _pykernels.vertex_classes(m, pairing)


def test_large_letters_stay_exact():
    big = 1 << 70
    assert kernels.reduce_letters((big, 3, -3, -big, 5)) == (5,)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
