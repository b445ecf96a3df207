import random

import pytest

from comatch.core import InputError
from comatch.constructions import gen_torus_grid_complex
from comatch.linalg import rank_exact, rank_mod_prime
from comatch.randsys import random_complex
from comatch.search import SearchBudget
from comatch.simplicial import SimplicialComplex, faces_of_dim, join
from comatch.topology import (
    CollapseSequence,
    boundary_matrix,
    is_d_collapsible,
    is_d_good,
    join_profile_from_factors,
    kunneth_betti_check,
    leray_check,
    leray_number,
    reduced_betti,
    replay_collapse_sequence,
)


@pytest.fixture
def three_cycle():
    return SimplicialComplex.from_labels(
        ["a", "b", "c"], [["a", "b"], ["b", "c"], ["c", "a"]]
    )


@pytest.fixture
def torus():
    return gen_torus_grid_complex(4, 2)


def full_simplex(n):
    labels = [f"v{i}" for i in range(n)]
    return SimplicialComplex.from_labels(labels, [labels])


def _matmul(a, b):
    if not a or not b or not b[0]:
        return []
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


class TestBoundaryMatrix:
    def test_three_cycle_edge_boundary(self, three_cycle):
        m = boundary_matrix(three_cycle, 1)
        assert len(m) == 3 and len(m[0]) == 3
        rows = [{j: v for j, v in enumerate(r) if v} for r in m]
        assert rank_exact(rows) == 2

    def test_column_sign_structure(self, three_cycle):
        m = boundary_matrix(three_cycle, 1)
        for col in range(3):
            entries = sorted(m[row][col] for row in range(3) if m[row][col])
            assert entries == [-1, 1]

    def test_augmentation_row(self, three_cycle):
        m = boundary_matrix(three_cycle, 0)
        assert m == [[1, 1, 1]]

    @pytest.mark.parametrize("seed", range(20))
    def test_boundary_of_boundary_vanishes(self, seed):
        k = random_complex(random.Random(seed + 700), 6, 5)
        for i in range(0, k.dim + 1):
            product = _matmul(boundary_matrix(k, i), boundary_matrix(k, i + 1))
            assert all(v == 0 for row in product for v in row)

    def test_out_of_range_dimension(self, three_cycle):
        with pytest.raises(InputError):
            boundary_matrix(three_cycle, 4)


class TestReducedBetti:
    def test_full_simplex_all_zero(self):
        assert reduced_betti(full_simplex(4)).reduced_betti == (0, 0, 0, 0)

    def test_torus_profile(self, torus):
        profile = reduced_betti(torus)
        assert profile.reduced_betti == (0, 2, 1, 0)
        assert profile.exact and profile.arithmetic_mode == "exact-rational"

    def test_three_cycle_join_three_cycle(self, three_cycle):
        j = join(three_cycle, three_cycle)
        assert reduced_betti(j).reduced_betti == (0, 0, 0, 1)

    def test_empty_complex_flagged(self):
        empty = SimplicialComplex((), ())
        profile = reduced_betti(empty)
        assert profile.reduced_betti == ()
        assert "empty complex" in profile.notes

    def test_two_points(self):
        k = SimplicialComplex.from_labels(["a", "b"], [["a"], ["b"]])
        assert reduced_betti(k).reduced_betti == (1,)

    @pytest.mark.parametrize("seed", range(25))
    def test_prime_field_agrees_on_desk_scale(self, seed):
        k = random_complex(random.Random(seed + 800), 6, 5)
        exact = reduced_betti(k, "exact")
        prime = reduced_betti(k, "prime")
        assert prime.reduced_betti == exact.reduced_betti
        assert not prime.exact and prime.arithmetic_mode.startswith("prime-field(")

    @pytest.mark.parametrize("seed", range(25))
    def test_reduced_euler_characteristic(self, seed):
        k = random_complex(random.Random(seed + 900), 6, 5)
        profile = reduced_betti(k).reduced_betti
        betti_sum = sum((-1) ** i * b for i, b in enumerate(profile))
        face_sum = sum(
            (-1) ** i * len(faces_of_dim(k, i)) for i in range(k.dim + 1)
        )
        assert betti_sum == face_sum - 1

    def test_budget_exhaustion_raises(self, torus):
        from comatch.linalg import RankBudgetExceeded

        with pytest.raises(RankBudgetExceeded):
            reduced_betti(torus, budget=SearchBudget(max_nodes=2))

    @pytest.mark.parametrize("seed", range(30))
    def test_matches_dense_fraction_oracle(self, seed):
        from oracles import oracle_reduced_betti

        k = random_complex(random.Random(seed + 1600), 6, 5)
        assert reduced_betti(k).reduced_betti == oracle_reduced_betti(k)


class TestGoodness:
    def test_torus_is_2_good(self, torus):
        assert is_d_good(torus, 2)
        assert not is_d_good(torus, 3)

    def test_full_simplex_never_good(self):
        k = full_simplex(3)
        assert not any(is_d_good(k, d) for d in range(4))


class TestKunneth:
    def test_cone_sides_vanish(self, three_cycle):
        apex = SimplicialComplex.from_labels(["p"], [["p"]])
        verdict = kunneth_betti_check(three_cycle, apex)
        assert verdict.status == "ok"
        assert all(b == 0 for b in verdict.direct)

    def test_three_cycle_square(self, three_cycle):
        verdict = kunneth_betti_check(three_cycle, three_cycle)
        assert verdict.status == "ok"
        assert verdict.direct[3] == 1

    def test_profile_convolution(self):
        assert join_profile_from_factors((0, 2, 1, 0), (0, 2, 1, 0)) == (
            0,
            0,
            0,
            4,
            4,
            1,
            0,
            0,
            0,
        )

    @pytest.mark.parametrize("seed", range(20))
    def test_identity_on_random_pairs(self, seed):
        rng = random.Random(seed + 1100)
        a = random_complex(rng, 5, 4)
        b = random_complex(rng, 5, 4)
        verdict = kunneth_betti_check(a, b)
        assert verdict.status == "ok", verdict.violations

    def test_empty_factor_degenerates_to_other_side(self, three_cycle):
        empty = SimplicialComplex((), ())
        verdict = kunneth_betti_check(three_cycle, empty)
        assert verdict.status == "ok"
        assert verdict.direct == (0, 1)
        assert kunneth_betti_check(empty, empty).status == "ok"

    def test_budget_exhaustion_in_band(self, torus):
        verdict = kunneth_betti_check(torus, torus, SearchBudget(max_nodes=5))
        assert verdict.status == "budget_exhausted"
        assert verdict.direct is None
        assert verdict.predicted[5] == 1


class TestCollapsibility:
    def test_full_simplex_collapses_at_one(self):
        status, seq = is_d_collapsible(full_simplex(5), 1)
        assert status == "proved"
        assert replay_collapse_sequence(full_simplex(5), seq).ok

    def test_three_cycle_refuted_at_one(self, three_cycle):
        status, seq = is_d_collapsible(three_cycle, 1)
        assert (status, seq) == ("refuted", None)

    def test_three_cycle_proved_at_two(self, three_cycle):
        status, seq = is_d_collapsible(three_cycle, 2)
        assert status == "proved"
        assert replay_collapse_sequence(three_cycle, seq).ok

    def test_torus_not_twocollapsible_or_budget(self, torus):
        status, _ = is_d_collapsible(torus, 2, SearchBudget(max_nodes=30_000))
        assert status in ("refuted", "budget_exhausted")

    def test_strict_mode_still_collapses_simplex(self):
        status, seq = is_d_collapsible(full_simplex(3), 1, strict_size=True)
        assert status == "proved"
        assert replay_collapse_sequence(full_simplex(3), seq).ok

    def test_replay_rejects_tampered_sequence(self, three_cycle):
        status, seq = is_d_collapsible(three_cycle, 2)
        assert status == "proved"
        first_face, first_coface = seq.steps[0]
        tampered = CollapseSequence(
            seq.d,
            seq.strict_size,
            ((first_face, frozenset({0, 1, 2})),) + seq.steps[1:],
        )
        assert not replay_collapse_sequence(three_cycle, tampered).ok

    def test_replay_rejects_incomplete_sequence(self, three_cycle):
        status, seq = is_d_collapsible(three_cycle, 2)
        truncated = CollapseSequence(seq.d, seq.strict_size, seq.steps[:1])
        assert not replay_collapse_sequence(three_cycle, truncated).ok

    @pytest.mark.parametrize("seed", range(15))
    def test_proved_sequences_always_replay(self, seed):
        k = random_complex(random.Random(seed + 1200), 5, 4)
        for d in (1, 2, 3):
            status, seq = is_d_collapsible(k, d, SearchBudget(max_nodes=20_000))
            if status == "proved":
                assert replay_collapse_sequence(k, seq).ok


class TestLeray:
    def test_full_simplex_holds_everywhere(self):
        assert leray_check(full_simplex(4), 1).status == "holds"
        assert leray_number(full_simplex(4)) == (0, True)

    def test_three_cycle(self, three_cycle):
        assert leray_check(three_cycle, 2).status == "holds"
        verdict = leray_check(three_cycle, 1)
        assert verdict.status == "fails"
        vertices, dim = verdict.witness
        assert (len(vertices), dim) == (3, 1)
        assert leray_number(three_cycle) == (2, True)

    def test_torus_fails_at_two_with_full_witness(self, torus):
        verdict = leray_check(torus, 2)
        assert verdict.status == "fails"
        vertices, dim = verdict.witness
        assert len(vertices) == 16 and dim == 2

    def test_budget_exhaustion(self, torus):
        verdict = leray_check(torus, 3, SearchBudget(max_nodes=10))
        assert verdict.status == "budget_exhausted"

    @pytest.mark.parametrize("seed", range(12))
    def test_collapsible_implies_leray(self, seed):
        k = random_complex(random.Random(seed + 1300), 5, 4)
        for d in (1, 2):
            status, _ = is_d_collapsible(k, d, SearchBudget(max_nodes=20_000))
            if status == "proved":
                assert leray_check(k, d).status == "holds"

    @pytest.mark.parametrize("seed", range(20))
    def test_scanner_agrees_with_direct_subcomplex_homology(self, seed):
        from oracles import oracle_max_nonzero_betti_over_subcomplexes

        k = random_complex(random.Random(seed + 1700), 5, 4)
        worst = oracle_max_nonzero_betti_over_subcomplexes(k)
        for d in (0, 1, 2, 3):
            expected = "holds" if worst < d else "fails"
            assert leray_check(k, d).status == expected
        assert leray_number(k) == (worst + 1, True)

    @pytest.mark.parametrize("seed", range(15))
    def test_collapse_search_agrees_with_bfs_oracle(self, seed):
        from oracles import oracle_bfs_collapsible

        k = random_complex(random.Random(seed + 1800), 5, 4)
        for d in (1, 2):
            status, seq = is_d_collapsible(k, d)
            assert status in ("proved", "refuted")
            assert oracle_bfs_collapsible(k, d) == (status == "proved")
            if seq is not None:
                assert replay_collapse_sequence(k, seq).ok

    @pytest.mark.parametrize("seed", range(12))
    def test_leray_witness_reproducible_by_direct_homology(self, seed):
        from comatch.simplicial import induced_subcomplex

        k = random_complex(random.Random(seed + 1400), 6, 5)
        for d in (1, 2):
            verdict = leray_check(k, d)
            if verdict.status == "fails":
                vertices, dim = verdict.witness
                sub = induced_subcomplex(k, vertices)
                profile = reduced_betti(sub).reduced_betti
                assert dim >= d and profile[dim] != 0


class TestDoubleTorusJoin:
    def test_five_good_but_not_five_leray(self):
        from comatch.constructions import gen_good_join_complex
        from comatch.simplicial import complex_comatching_number
        from comatch.search import SearchBudget

        double = gen_good_join_complex(2)
        tau, cert, exact = complex_comatching_number(
            double, SearchBudget(max_millis=120_000)
        )
        assert tau <= 4 if not exact else tau == 4

        torus_profile = reduced_betti(gen_torus_grid_complex(4, 2)).reduced_betti
        predicted = join_profile_from_factors(torus_profile, torus_profile)
        assert predicted[5] == 1 and all(b == 0 for b in predicted[6:])

        # 32 vertices exceeds the exhaustive cap, so the scan samples; the
        # full vertex set is sampled first and already witnesses the failure.
        verdict = leray_check(double, 5, SearchBudget(max_millis=120_000))
        assert verdict.status == "fails"
        vertices, dim = verdict.witness
        assert dim == 5 and len(vertices) == 32


class TestRankKernels:
    @pytest.mark.parametrize("seed", range(20))
    def test_exact_and_prime_agree_on_random_small_matrices(self, seed):
        rng = random.Random(seed + 1500)
        rows = []
        for _ in range(rng.randint(1, 6)):
            row = {
                c: rng.randint(-3, 3)
                for c in range(rng.randint(1, 6))
                if rng.random() < 0.7
            }
            rows.append({c: v for c, v in row.items() if v})
        assert rank_exact(rows) == rank_mod_prime(rows)

    def test_rank_with_non_unit_pivots(self):
        rows = [{0: 2, 1: 4}, {0: 4, 1: 8}, {0: 2, 1: 5}]
        assert rank_exact(rows) == 2
