import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gammaext.errors import InputError
from gammaext.linalg import Mat, echelon, kernel_array, solve_array

# -- oracles -----------------------------------------------------------
# Brute-force checks by exhaustive enumeration over small F_p^m; the library
# results are compared against these, never the other way around.


def all_vectors(p, m):
    vs = [np.zeros(m, dtype=np.int64)]
    for i in range(m):
        vs = [v.copy() for v in vs for _ in range(1)]
        new = []
        for v in vs:
            for c in range(p):
                w = v.copy()
                w[i] = c
                new.append(w)
        vs = new
    return vs


def brute_kernel(a, p):
    a = np.asarray(a) % p
    return [v for v in all_vectors(p, a.shape[1]) if not (a @ v % p).any()]


def brute_solutions(a, b, p):
    a = np.asarray(a) % p
    b = np.asarray(b) % p
    return [v for v in all_vectors(p, a.shape[1]) if np.array_equal(a @ v % p, b)]


def span_dim(vectors, p):
    if not vectors:
        return 0
    return Mat(p, np.stack(vectors, axis=1)).rank()


# -- fixed examples ----------------------------------------------------

def test_kernel_f2_all_ones():
    a = [[1, 1], [1, 1]]
    k = kernel_array(a, 2)
    assert k.shape == (2, 1)
    assert list(k[:, 0]) == [1, 1]
    # matches brute force
    assert span_dim(brute_kernel(a, 2), 2) == 1


def test_solve_f2():
    x = solve_array([[1, 1], [0, 1]], [0, 1], 2)
    assert list(x) == [1, 1]
    assert brute_solutions([[1, 1], [0, 1]], [0, 1], 2) is not None


def test_solve_no_solution():
    assert solve_array([[1, 0], [1, 0]], [1, 0], 3) is None
    assert brute_solutions([[1, 0], [1, 0]], [1, 0], 3) == []


def test_identity_rref():
    m = Mat.identity(5, 4)
    rank, pivots, _ = m.rref()
    assert rank == 4 and pivots == (0, 1, 2, 3)
    assert m.kernel().cols == 0


def test_zero_matrix():
    m = Mat.zeros(3, 2, 5)
    assert m.rank() == 0
    assert m.kernel().cols == 5


def test_characteristic_mismatch():
    with pytest.raises(InputError):
        Mat.identity(2, 2) @ Mat.identity(3, 2)
    with pytest.raises(InputError):
        Mat.identity(2, 2).kron(Mat.identity(3, 2))


def test_nonprime_rejected():
    with pytest.raises(InputError):
        Mat(4, [[1]])


def test_dsum_shapes():
    d = Mat.identity(2, 2).dsum(Mat.zeros(2, 1, 3))
    assert (d.rows, d.cols) == (3, 5)
    assert d.rank() == 2


# -- property tests ----------------------------------------------------

small_p = st.sampled_from([2, 3, 5])


@st.composite
def random_mat(draw, p=None, max_dim=5):
    p = p or draw(small_p)
    n = draw(st.integers(1, max_dim))
    m = draw(st.integers(1, max_dim))
    entries = draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=m, max_size=m),
            min_size=n,
            max_size=n,
        )
    )
    return Mat(p, entries)


@given(random_mat())
@settings(max_examples=120, deadline=None)
def test_rank_transpose(m):
    assert m.rank() == m.transpose().rank()


@given(random_mat())
@settings(max_examples=120, deadline=None)
def test_rank_nullity(m):
    assert m.rank() + m.kernel().cols == m.cols
    if m.kernel().cols:
        prod = m @ m.kernel()
        assert not prod.a.any()


@given(random_mat())
@settings(max_examples=80, deadline=None)
def test_rref_idempotent(m):
    rank, pivots, r = m.rref()
    rank2, pivots2, r2 = r.rref()
    assert rank == rank2 and pivots == pivots2 and r == r2


@given(random_mat())
@settings(max_examples=60, deadline=None)
def test_kernel_matches_bruteforce(m):
    if m.cols <= 4 and m.p <= 3:
        assert m.kernel().cols == span_dim(brute_kernel(m.a, m.p), m.p)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_kron_mixed_product(data):
    p = data.draw(small_p)
    a = data.draw(random_mat(p=p, max_dim=3))
    b = data.draw(random_mat(p=p, max_dim=3))
    c = data.draw(random_mat(p=p, max_dim=3))
    d = data.draw(random_mat(p=p, max_dim=3))
    if a.cols == c.rows and b.cols == d.rows:
        assert a.kron(b) @ c.kron(d) == (a @ c).kron(b @ d)


@given(random_mat(p=2, max_dim=6))
@settings(max_examples=60, deadline=None)
def test_gf2_engine_agrees(m):
    e1 = echelon(m.a, 2, force="generic")
    e2 = echelon(m.a, 2, force="gf2")
    assert e1.rank == e2.rank
    assert e1.pivots == e2.pivots
    assert np.array_equal(e1.dense()[: e1.rank], e2.dense()[: e2.rank])
    k1 = kernel_array(m.a, 2, force="generic")
    k2 = kernel_array(m.a, 2, force="gf2")
    assert np.array_equal(k1, k2)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_solve_consistency(data):
    p = data.draw(small_p)
    m = data.draw(random_mat(p=p, max_dim=4))
    b = np.array(data.draw(st.lists(st.integers(0, p - 1), min_size=m.rows, max_size=m.rows)))
    x = m.solve(b)
    sols = brute_solutions(m.a, b, p) if m.cols <= 4 and p <= 3 else None
    if x is None:
        if sols is not None:
            assert sols == []
    else:
        assert np.array_equal(m.a @ x % p, b % p)
        if sols is not None:
            assert len(sols) > 0
