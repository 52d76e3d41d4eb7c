import numpy as np
import pytest

from aldous.graphs import complete_graph, random_connected_graph, rw_laplacian
from aldous.permutations import Permutation
from aldous.spectral import is_psd, multiset_equal
from aldous.tableaux import Partition, content, enumerate_partitions, enumerate_syt, f_dim
from aldous.yor import (
    SignedWeightedGraph,
    branching_check,
    irrep_laplacian,
    jucys_murphy,
    rho_adjacent,
    rho_sigma,
    rho_transposition,
    s4_transposition_matrix,
    s4_transposition_vectors,
    transposition_difference,
)


def random_partition(rng, n):
    options = enumerate_partitions(n)
    return options[int(rng.integers(0, len(options)))]


class TestRhoAdjacent:
    def test_trivial_shape_is_plus_one(self):
        for n in range(2, 6):
            for i in range(1, n):
                assert np.array_equal(rho_adjacent(Partition((n,)), i), [[1.0]])

    def test_column_shape_is_minus_one(self):
        for n in range(2, 6):
            for i in range(1, n):
                assert np.array_equal(rho_adjacent(Partition((1,) * n), i), [[-1.0]])

    def test_shape_21_generator_1(self):
        assert np.array_equal(rho_adjacent(Partition((2, 1)), 1), np.diag([1.0, -1.0]))

    def test_shape_21_generator_2_mixed_block(self):
        M = rho_adjacent(Partition((2, 1)), 2)
        expected = np.array([[-0.5, np.sqrt(3) / 2], [np.sqrt(3) / 2, 0.5]])
        assert np.allclose(M, expected, atol=1e-15)

    def test_index_bounds(self):
        with pytest.raises(ValueError):
            rho_adjacent(Partition((2, 1)), 3)

    def test_symmetric_orthogonal_involutive(self):
        for n in range(2, 7):
            for lam in enumerate_partitions(n):
                for i in range(1, n):
                    M = rho_adjacent(lam, i)
                    assert np.abs(M - M.T).max() <= 1e-12
                    assert np.abs(M @ M - np.eye(len(M))).max() <= 1e-12


class TestRhoTransposition:
    def test_adjacent_case(self):
        lam = Partition((3, 2))
        assert np.allclose(rho_transposition(lam, 2, 3), rho_adjacent(lam, 2), atol=1e-14)

    def test_involution_and_orthogonality(self):
        rng = np.random.default_rng(1)
        for _ in range(40):
            n = int(rng.integers(2, 9))
            lam = random_partition(rng, n)
            i = int(rng.integers(1, n))
            j = int(rng.integers(i + 1, n + 1))
            M = rho_transposition(lam, i, j)
            assert np.abs(M - M.T).max() <= 1e-10
            assert np.abs(M @ M - np.eye(len(M))).max() <= 1e-10

    def test_conjugation_consistency(self):
        # (i j) = sigma (j-1, j) sigma^{-1} for the adjacent chain sigma
        lam = Partition((3, 2, 1))
        n, i, j = 6, 2, 5
        sigma = Permutation.identity(n)
        for m in range(i, j - 1):
            sigma = sigma * Permutation.transposition(n, m, m + 1)
        S = rho_sigma(lam, sigma)
        inner = rho_adjacent(lam, j - 1)
        assert np.allclose(rho_transposition(lam, i, j), S @ inner @ S.T, atol=1e-10)

    def test_bad_indices(self):
        with pytest.raises(ValueError):
            rho_transposition(Partition((2, 2)), 2, 2)
        with pytest.raises(ValueError):
            rho_transposition(Partition((2, 2)), 0, 3)
        with pytest.raises(ValueError):
            rho_transposition(Partition((2, 2)), 1, 5)


class TestRhoSigma:
    def test_identity(self):
        lam = Partition((3, 1))
        assert np.array_equal(rho_sigma(lam, Permutation.identity(4)), np.eye(3))

    def test_involution_squares_to_identity(self):
        lam = Partition((3, 1))
        t = Permutation.transposition(4, 1, 2)
        assert np.allclose(rho_sigma(lam, t * t), np.eye(3), atol=1e-14)

    def test_matches_transposition_path(self):
        # two independent constructions of the same matrix
        rng = np.random.default_rng(3)
        for _ in range(30):
            n = int(rng.integers(2, 8))
            lam = random_partition(rng, n)
            i = int(rng.integers(1, n))
            j = int(rng.integers(i + 1, n + 1))
            M1 = rho_sigma(lam, Permutation.transposition(n, i, j))
            M2 = rho_transposition(lam, i, j)
            assert np.abs(M1 - M2).max() <= 1e-10

    def test_homomorphism_s5(self):
        rng = np.random.default_rng(11)
        lam = Partition((3, 2))
        for _ in range(25):
            sigma = Permutation.from_rank(5, int(rng.integers(0, 120)))
            tau = Permutation.from_rank(5, int(rng.integers(0, 120)))
            lhs = rho_sigma(lam, sigma) @ rho_sigma(lam, tau)
            rhs = rho_sigma(lam, sigma * tau)
            assert np.abs(lhs - rhs).max() <= 1e-10

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            rho_sigma(Partition((2, 1)), Permutation.identity(4))

    def test_character_orthogonality(self):
        # independent oracle: sum over the group of chi_a(s) chi_b(s) is
        # n! when a == b (irreducibility) and 0 otherwise
        import math

        for n in range(2, 6):
            shapes = enumerate_partitions(n)
            characters = []
            for lam in shapes:
                characters.append(
                    [
                        float(np.trace(rho_sigma(lam, Permutation.from_rank(n, r))))
                        for r in range(math.factorial(n))
                    ]
                )
            for a, chi_a in enumerate(characters):
                for b, chi_b in enumerate(characters):
                    inner = sum(x * y for x, y in zip(chi_a, chi_b))
                    expected = math.factorial(n) if a == b else 0.0
                    assert inner == pytest.approx(expected, abs=1e-8), (shapes[a], shapes[b])


class TestIrrepLaplacian:
    def test_trivial_shape_is_zero(self):
        rng = np.random.default_rng(0)
        G = random_connected_graph(5, rng)
        assert np.array_equal(irrep_laplacian(Partition((5,)), G), [[0.0]])

    def test_sign_shape_complete_graph(self):
        for n in range(2, 6):
            L = irrep_laplacian(Partition((1,) * n), complete_graph(n))
            assert L.shape == (1, 1)
            assert L[0, 0] == pytest.approx(n * (n - 1), abs=1e-12)

    def test_hook_shape_matches_rw_spectrum(self):
        rng = np.random.default_rng(8)
        for _ in range(10):
            n = int(rng.integers(2, 8))
            G = random_connected_graph(n, rng)
            rw = np.linalg.eigvalsh(rw_laplacian(G))
            block = np.linalg.eigvalsh(irrep_laplacian(Partition((n - 1, 1)), G))
            assert multiset_equal(rw, np.concatenate([[0.0], block]), tol=1e-9)

    def test_differences_are_psd(self):
        for lam in enumerate_partitions(5):
            assert is_psd(transposition_difference(lam, 2, 4), tol=1e-10)

    def test_signed_weights_accepted(self):
        H = SignedWeightedGraph(3, {(1, 3): 1.0, (1, 2): -0.5})
        L = irrep_laplacian(Partition((2, 1)), H)
        assert np.abs(L - L.T).max() == 0.0

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            irrep_laplacian(Partition((2, 1)), complete_graph(4))


class TestSignedWeightedGraph:
    def test_rejects_self_loop_and_duplicates(self):
        with pytest.raises(ValueError):
            SignedWeightedGraph(3, {(2, 2): 1.0})
        with pytest.raises(ValueError):
            SignedWeightedGraph(3, {(1, 2): 1.0, (2, 1): 1.0})

    def test_allows_negative(self):
        H = SignedWeightedGraph(3, {(1, 2): -2.0})
        assert H.weights[(1, 2)] == -2.0


class TestJucysMurphy:
    def test_single_row(self):
        for k in range(2, 6):
            for j in range(2, k + 1):
                X = jucys_murphy(Partition((k,)), j)
                assert X[0, 0] == pytest.approx(j - 1, abs=1e-12)

    def test_single_column(self):
        for k in range(2, 6):
            for j in range(2, k + 1):
                X = jucys_murphy(Partition((1,) * k), j)
                assert X[0, 0] == pytest.approx(-(j - 1), abs=1e-12)

    def test_shape_22_top_value(self):
        X = jucys_murphy(Partition((2, 2)), 4)
        assert np.allclose(X, np.zeros((2, 2)), atol=1e-12)

    def test_diagonal_with_contents_up_to_6(self):
        for n in range(2, 7):
            for lam in enumerate_partitions(n):
                tabs = enumerate_syt(lam)
                for j in range(2, n + 1):
                    X = jucys_murphy(lam, j)
                    off = X - np.diag(np.diag(X))
                    assert np.abs(off).max() <= 1e-10
                    for k, t in enumerate(tabs):
                        assert X[k, k] == pytest.approx(content(t, j), abs=1e-10)

    def test_commute(self):
        lam = Partition((3, 2))
        X3, X4 = jucys_murphy(lam, 3), jucys_murphy(lam, 4)
        assert np.abs(X3 @ X4 - X4 @ X3).max() <= 1e-12

    def test_index_bounds(self):
        with pytest.raises(ValueError):
            jucys_murphy(Partition((2, 1)), 1)
        with pytest.raises(ValueError):
            jucys_murphy(Partition((2, 1)), 4)


class TestBranching:
    def test_trivial_shape(self):
        ok, witness = branching_check(Partition((4,)), 1, 2)
        assert ok and witness == (0,)

    def test_31_and_22(self):
        ok, _ = branching_check(Partition((3, 1)), 1, 2)
        assert ok
        ok, _ = branching_check(Partition((2, 2)), 1, 3)
        assert ok

    def test_exhaustive_small(self):
        for n in range(2, 7):
            for lam in enumerate_partitions(n):
                for i in range(1, n - 1):
                    for j in range(i + 1, n):
                        ok, witness = branching_check(lam, i, j)
                        assert ok, (lam, i, j)
                        assert sorted(witness) == list(range(f_dim(lam)))

    def test_witness_is_real_permutation_similarity(self):
        lam = Partition((3, 2))
        ok, witness = branching_check(lam, 1, 3)
        assert ok
        M = rho_transposition(lam, 1, 3)
        P = np.zeros((5, 5))
        for new, old in enumerate(witness):
            P[new, old] = 1.0
        regrouped = P @ M @ P.T
        # top-left block must be the (2,2) matrix, bottom-right the (3,1) one
        assert np.allclose(regrouped[:2, :2], rho_transposition(Partition((2, 2)), 1, 3), atol=1e-12)
        assert np.allclose(regrouped[2:, 2:], rho_transposition(Partition((3, 1)), 1, 3), atol=1e-12)

    def test_index_bounds(self):
        with pytest.raises(ValueError):
            branching_check(Partition((2, 2)), 1, 4)

    def test_dictionary_order_does_not_group_corners(self):
        # recorded empirical fact: dictionary order interleaves the
        # corner-of-n groups for some shapes, so the explicit witness
        # permutation is load-bearing (it is not always the identity)
        corners = [t.position(5) for t in enumerate_syt(Partition((3, 2)))]
        assert corners == [(2, 2), (2, 2), (1, 3), (2, 2), (1, 3)]
        ok, witness = branching_check(Partition((3, 2)), 1, 2)
        assert ok
        assert witness != tuple(range(5))


class TestS4ReferenceData:
    def test_vector_count(self):
        assert len(s4_transposition_vectors()) == 18

    def test_specific_vectors(self):
        vecs = s4_transposition_vectors()
        assert np.allclose(vecs[((3, 1), 1, 2)], [0.0, 0.0, np.sqrt(2)])
        assert np.allclose(vecs[((2, 2), 3, 4)], [0.0, np.sqrt(2)])

    def test_all_matrices_match_generic_construction(self):
        for parts in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]:
            lam = Partition(parts)
            for i in range(1, 4):
                for j in range(i + 1, 5):
                    golden = s4_transposition_matrix(lam, i, j)
                    generic = rho_transposition(lam, i, j)
                    assert np.abs(golden - generic).max() <= 1e-12, (parts, i, j)

    def test_31_vectors_are_differences(self):
        vecs = s4_transposition_vectors()
        for i in range(1, 3):
            for j in range(i + 1, 4):
                vij = vecs[((3, 1), i, j)]
                diff = vecs[((3, 1), i, 4)] - vecs[((3, 1), j, 4)]
                assert np.allclose(vij, diff, atol=1e-12)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            s4_transposition_matrix(Partition((3, 2)), 1, 2)
        with pytest.raises(ValueError):
            s4_transposition_matrix(Partition((3, 1)), 2, 2)
