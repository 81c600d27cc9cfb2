import numpy as np
import pytest
from hypothesis import given, strategies as st

from dspread.graphs import distance_profile, is_connected
from dspread.matrices import (
    distance_laplacian,
    distance_signless_laplacian,
    frobenius_sq,
    generalized_distance_matrix,
    is_equitable,
    matrix_to_tsv,
    quotient_eigenvalues,
    quotient_matrix,
    trace,
)

from conftest import graph_from_mask


def test_dalpha_p3_alpha0(zoo):
    p = distance_profile(zoo["P3"])
    m = generalized_distance_matrix(p, 0.0)
    assert m.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]


def test_dalpha_p3_alpha1(zoo):
    p = distance_profile(zoo["P3"])
    m = generalized_distance_matrix(p, 1.0)
    assert m.tolist() == [[3, 0, 0], [0, 2, 0], [0, 0, 3]]


def test_dalpha_p3_half(zoo):
    p = distance_profile(zoo["P3"])
    m = generalized_distance_matrix(p, 0.5)
    assert m.tolist() == [[1.5, 0.5, 1.0], [0.5, 1.0, 0.5], [1.0, 0.5, 1.5]]


def test_dalpha_domain_error(zoo):
    p = distance_profile(zoo["P3"])
    for bad in (-0.1, 1.1):
        with pytest.raises(ValueError, match="alpha"):
            generalized_distance_matrix(p, bad)


def test_laplacians_p3(zoo):
    p = distance_profile(zoo["P3"])
    dq = distance_signless_laplacian(p)
    assert dq.tolist() == [[3, 1, 2], [1, 2, 1], [2, 1, 3]]
    dl = distance_laplacian(p)
    assert np.allclose(dl.sum(axis=1), 0.0)
    assert np.allclose(2 * generalized_distance_matrix(p, 0.5), dq)


@given(
    n=st.integers(2, 8),
    mask=st.integers(0, 2**28 - 1),
    alpha=st.floats(0, 1),
    beta=st.floats(0, 1),
)
def test_dalpha_pencil_identity(n, mask, alpha, beta):
    g = graph_from_mask(n, mask & ((1 << (n * (n - 1) // 2)) - 1))
    if not is_connected(g):
        return
    p = distance_profile(g)
    lhs = generalized_distance_matrix(p, alpha) - generalized_distance_matrix(p, beta)
    rhs = (alpha - beta) * distance_laplacian(p)
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_trace_and_frobenius(zoo):
    p = distance_profile(zoo["P3"])
    assert trace(generalized_distance_matrix(p, 0.5)) == pytest.approx(4.0)  # 2*alpha*W
    assert frobenius_sq(generalized_distance_matrix(p, 0.0)) == pytest.approx(12.0)


@given(n=st.integers(2, 8), mask=st.integers(0, 2**28 - 1), alpha=st.floats(0, 1))
def test_frobenius_formula(n, mask, alpha):
    g = graph_from_mask(n, mask & ((1 << (n * (n - 1) // 2)) - 1))
    if not is_connected(g):
        return
    p = distance_profile(g)
    m = generalized_distance_matrix(p, alpha)
    d = p.dist.astype(float)
    expected = (1 - alpha) ** 2 * (d**2).sum() + alpha**2 * (p.tr.astype(float) ** 2).sum()
    assert frobenius_sq(m) == pytest.approx(expected, rel=1e-12)
    assert trace(m) == pytest.approx(2 * alpha * p.wiener, abs=1e-9)


def test_quotient_bipartition_closed_form(zoo):
    r, s, alpha = 2, 3, 0.5
    p = distance_profile(zoo["K23"])
    m = generalized_distance_matrix(p, alpha)
    b = quotient_matrix(m, [range(r), range(r, r + s)])
    expected = [
        [alpha * s + 2 * r - 2, s * (1 - alpha)],
        [r * (1 - alpha), alpha * r + 2 * s - 2],
    ]
    assert np.allclose(b, expected)


def test_quotient_trivial_partition(zoo):
    m = generalized_distance_matrix(distance_profile(zoo["C4"]), 0.0)
    assert quotient_matrix(m, [range(4)]).tolist() == [[4.0]]


def test_quotient_singletons_identity(zoo):
    m = generalized_distance_matrix(distance_profile(zoo["P3"]), 0.3)
    b = quotient_matrix(m, [[0], [1], [2]])
    assert np.allclose(b, m)


def test_quotient_p3_middle(zoo):
    m = generalized_distance_matrix(distance_profile(zoo["P3"]), 0.0)
    b = quotient_matrix(m, [[0, 2], [1]])
    assert b.tolist() == [[2.0, 1.0], [2.0, 0.0]]
    vals = quotient_eigenvalues(m, [[0, 2], [1]])
    assert np.allclose(vals, [1 + np.sqrt(3), 1 - np.sqrt(3)])


def test_is_equitable(zoo):
    m = generalized_distance_matrix(distance_profile(zoo["K23"]), 0.25)
    assert is_equitable(m, [range(2), range(2, 5)])
    m3 = generalized_distance_matrix(distance_profile(zoo["P3"]), 0.0)
    assert is_equitable(m3, [[0, 2], [1]])
    m4 = generalized_distance_matrix(distance_profile(zoo["P4"]), 0.0)
    assert not is_equitable(m4, [[0, 1], [2, 3]])


def test_equitable_quotient_values_subset_of_parent(zoo):
    # quotient eigenvalues of an equitable partition appear in the parent
    from dspread.eigen import sym_eigen

    m = generalized_distance_matrix(distance_profile(zoo["P3"]), 0.0)
    parent = sym_eigen(m, vectors=False).values
    for q in quotient_eigenvalues(m, [[0, 2], [1]]):
        assert np.min(np.abs(parent - q)) < 1e-9


def test_partition_validation(zoo):
    m = generalized_distance_matrix(distance_profile(zoo["P3"]), 0.0)
    with pytest.raises(ValueError, match="cover"):
        quotient_matrix(m, [[0], [1]])
    with pytest.raises(ValueError, match="two blocks"):
        quotient_matrix(m, [[0, 1], [1, 2]])
    with pytest.raises(ValueError, match="empty"):
        quotient_matrix(m, [[0, 1, 2], []])
    with pytest.raises(ValueError, match="out of range"):
        quotient_matrix(m, [[0, 1], [2, 3]])


def test_matrix_to_tsv(zoo):
    m = generalized_distance_matrix(distance_profile(zoo["P3"]), 0.5)
    lines = matrix_to_tsv(m).splitlines()
    assert lines[0] == "1.5\t0.5\t1"
