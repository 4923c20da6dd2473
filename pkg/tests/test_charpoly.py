import pytest

from drinfeld_charpoly import fq_poly
from drinfeld_charpoly.charpoly import (
    AlgorithmError,
    CharPolyError,
    CharPolyResult,
    NotAnEndomorphismError,
    PrecisionError,
    charpoly_endomorphism,
    charpoly_frobenius,
    companion_matrix,
    decompose_phi_basis,
    endo_matrix_euclidean,
    endo_matrix_recurrence,
    frobenius_matrix_bsgs,
    kappa_sequence,
    plan_precision,
    result_from_coefficients,
)
from drinfeld_charpoly.descent import DescentError, a0_prime_field, chi_k, hensel_lift_root, p_power_modulus
from drinfeld_charpoly.ff_tower import FqField
from drinfeld_charpoly.instance_io import parse_instance
from drinfeld_charpoly.instrumentation import count_operations
from drinfeld_charpoly.linalg import berkowitz_charpoly, transpose
from drinfeld_charpoly.oracle import charpoly_linear_system_oracle, verify_charpoly
from drinfeld_charpoly.skew import SkewPoly, skew_add, skew_monomial, skew_mul, skew_zero
from drinfeld_charpoly.wk_ring import WkRing

from conftest import INSTANCES

WORKED_TEXT = "Z^4 + x*Z^2 + x*Z + x^3 + x^2 + 1"
WORKED_A = ((1, 0, 1, 1), (0, 1), (0, 1), ())


def worked_matrix(tower):
    """Rows τ^7, τ^6, τ^5, τ^4 on the basis τ^4, τ^3, τ^2, τ."""
    el = tower.element
    return [
        [el([1]), el([0, 1]), el([1, 1]), el([1])],
        [el([1, 0, 1]), el([1, 0, 1]), el([0, 1, 1]), el([1])],
        [el([1, 0, 1]), el([1, 1, 1]), el([0, 0, 1]), el([0, 0, 1])],
        [el([1]), tower.zero, tower.zero, tower.zero],
    ]


def lifted(matrix):
    return [[entry.coeffs[0] for entry in row] for row in matrix.entries]


class TestWorkedExample:
    @pytest.mark.parametrize("algorithm", ["auto", "recurrence", "euclidean", "bsgs"])
    def test_charpoly_of_frobenius(self, f8_module, algorithm) -> None:
        result = charpoly_frobenius(f8_module, algorithm)
        assert result.a == WORKED_A
        assert result.to_text(f8_module.tower.fq) == WORKED_TEXT
        assert result.k == 1

    def test_auto_picks_bsgs(self, f8_module) -> None:
        assert charpoly_frobenius(f8_module).algorithm == "bsgs"

    @pytest.mark.parametrize("build", [
        lambda module, u: endo_matrix_recurrence(module, u, 1),
        lambda module, u: endo_matrix_recurrence(module, u, 1, banded=True),
        lambda module, u: endo_matrix_euclidean(module, u, 1),
        lambda module, u: frobenius_matrix_bsgs(module, 1),
    ], ids=["recurrence", "banded", "euclidean", "bsgs"])
    def test_frobenius_matrix(self, f8_module, build) -> None:
        matrix = build(f8_module, f8_module.frobenius_endo())
        assert lifted(matrix) == worked_matrix(f8_module.tower)

    def test_kappa_rows(self, f8_module) -> None:
        kappas = kappa_sequence(f8_module, 7, 1)
        expected = worked_matrix(f8_module.tower)
        for row, t in zip(expected, (7, 6, 5, 4)):
            assert [entry.coeffs[0] for entry in kappas[t - 1]] == row

    def test_precision_two_agrees_with_norm_shortcut(self, f8_module) -> None:
        result = charpoly_frobenius(f8_module, "recurrence", k=2)
        assert result.k == 2
        assert result.a == WORKED_A

    def test_norm_formula(self, f8_module) -> None:
        assert a0_prime_field(f8_module) == [1, 0, 1, 1]

    def test_instance_file(self) -> None:
        _, module, endo = parse_instance(INSTANCES / "rank4_f2.json")
        assert charpoly_endomorphism(module, endo).a == WORKED_A

    def test_verify_and_tamper(self, f8_module) -> None:
        u = f8_module.frobenius_endo()
        result = charpoly_frobenius(f8_module)
        assert verify_charpoly(f8_module, u, result)
        tampered = result_from_coefficients([(0, 0, 1, 1), (0, 1), (0, 1), ()], 4, 3)
        assert not verify_charpoly(f8_module, u, tampered)

    def test_linear_system_oracle(self, f8_module) -> None:
        u = f8_module.frobenius_endo()
        expected = charpoly_linear_system_oracle(f8_module, u)
        assert expected is None or expected == charpoly_frobenius(f8_module)

    def test_counts_operations(self, f8_module) -> None:
        with count_operations() as counter:
            charpoly_frobenius(f8_module, "bsgs")
        assert counter.l_muls > 0
        assert counter.frobenius_ops > 0


class TestProperSubfield:
    @pytest.fixture
    def endomorphisms(self, example1_module):
        module = example1_module
        tower = module.tower
        phi_a = module.phi_eval([1, 0, 1])
        return {
            "frobenius": module.frobenius_endo(),
            "phi_a": phi_a,
            "phi_a_frobenius": skew_mul(tower, phi_a, module.frobenius_endo()),
        }

    @pytest.mark.parametrize("name", ["frobenius", "phi_a", "phi_a_frobenius"])
    def test_methods_agree(self, example1_module, endomorphisms, name) -> None:
        u = endomorphisms[name]
        k = plan_precision(example1_module, u).k
        assert endo_matrix_recurrence(example1_module, u, k) == endo_matrix_euclidean(example1_module, u, k)
        results = {charpoly_endomorphism(example1_module, u, algorithm) for algorithm in ("recurrence", "euclidean")}
        if name == "frobenius":
            results.add(charpoly_endomorphism(example1_module, u, "bsgs"))
        assert len(results) == 1
        result = results.pop()
        assert result.satisfies_degree_bounds()
        assert verify_charpoly(example1_module, u, result)

    def test_phi_x_has_charpoly_power_of_linear(self, example1_module) -> None:
        # (Z - x)^3 = Z^3 + 2x Z^2 + 3x^2 Z + 4x^3 over F_5
        result = charpoly_endomorphism(example1_module, example1_module.phi_eval([0, 1]))
        assert result.a == ((0, 0, 0, 4), (0, 0, 3), (0, 2))
        assert charpoly_linear_system_oracle(example1_module, example1_module.phi_eval([0, 1])) is None

    @pytest.mark.parametrize("k", [1, 3])
    def test_companion_steps_kappa_recurrence(self, example1_module, k) -> None:
        module = example1_module
        r = module.r
        ring = WkRing.for_module(module, k)
        kappas = kappa_sequence(module, 9, k, ring)
        for t in range(1, 10 - r):
            matrix = companion_matrix(module, t, k, ring)
            for row in range(1, r):
                assert matrix[row, row - 1] == ring.one
            for b in range(r):
                acc = ring.zero
                for j in range(r):
                    acc = ring.add(acc, ring.mul(matrix[0, j], kappas[t + r - 2 - j][b]))
                assert acc == kappas[t + r - 1][b]

    def test_precision_stability(self, example1_module) -> None:
        base = charpoly_frobenius(example1_module, "recurrence")
        assert base.k == 3
        assert charpoly_frobenius(example1_module, "recurrence", k=4) == base

    def test_charpoly_of_transposed_matrix(self, example1_module) -> None:
        u = example1_module.frobenius_endo()
        matrix = endo_matrix_recurrence(example1_module, u, 3)
        assert berkowitz_charpoly(transpose(matrix)) == berkowitz_charpoly(matrix)

    def test_plan(self, example1_module, f8_module) -> None:
        plan = plan_precision(example1_module, example1_module.frobenius_endo())
        assert (plan.k, plan.d, plan.minimum_k, plan.prime_field_frobenius_shortcut) == (3, 4, 3, False)
        plan = plan_precision(f8_module, f8_module.frobenius_endo())
        assert (plan.k, plan.minimum_k, plan.prime_field_frobenius_shortcut) == (1, 1, True)
        assert not plan_precision(f8_module, f8_module.frobenius_endo(), 2).prime_field_frobenius_shortcut

    def test_norm_formula_needs_prime_field(self, example1_module) -> None:
        with pytest.raises(DescentError):
            a0_prime_field(example1_module)


class TestExample2:
    PRINTED = result_from_coefficients(
        [[2, 4, 3, 0, 2], [2, 4, 2, 1], [3, 4, 2], [0, 1, 4, 1], [3]], r=5, d=4
    )

    def test_printed_polynomial_breaks_degree_bound(self) -> None:
        assert not self.PRINTED.satisfies_degree_bounds()

    def test_cross_method_and_certificate(self) -> None:
        _, module, u = parse_instance(INSTANCES / "example2_f5.json")
        results = [charpoly_endomorphism(module, u, algorithm) for algorithm in ("recurrence", "euclidean", "bsgs")]
        assert results[0] == results[1] == results[2]
        assert results[0].satisfies_degree_bounds()
        assert verify_charpoly(module, u, results[0])
        assert results[0] != self.PRINTED
        oracle = charpoly_linear_system_oracle(module, u)
        assert oracle is None or oracle == results[0]


class TestDescent:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_hensel_root(self, example1_module, k) -> None:
        decomp = example1_module.decomp
        K = example1_module.tower.fq
        root = hensel_lift_root(decomp, k)
        modulus = p_power_modulus(decomp, k)
        assert fq_poly.compose_mod(K, list(decomp.p_poly), root, modulus) == []
        assert fq_poly.mod(K, root, decomp.p_poly) == [0, 1]

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_chi_inverts_inclusion(self, example1_module, f8_module, rng, k) -> None:
        for module in (example1_module, f8_module):
            tower = module.tower
            ring = WkRing.for_module(module, k)
            xhat = hensel_lift_root(module.decomp, k)
            for _ in range(100):
                f = [rng.randrange(tower.q) for _ in range(k * module.m)]
                image = ring.reduce(tuple(tower.from_fq(c) for c in f))
                assert chi_k(module, image, k, xhat) == fq_poly.trim(f)


class TestPhiBasis:
    def test_decomposition_reconstructs(self, example1_module, rng) -> None:
        module = example1_module
        tower = module.tower
        powers = module.phi_x_powers(4)
        for _ in range(20):
            f = SkewPoly.from_coeffs(tower.random_element(rng) for _ in range(rng.randint(1, 3 * module.r + 3)))
            parts = decompose_phi_basis(module, f)
            total = skew_zero()
            for s, part in enumerate(parts):
                assert part.deg < module.r
                total = skew_add(tower, total, skew_mul(tower, part, powers[s]))
            assert total == f


class TestErrors:
    def test_not_an_endomorphism(self, f8_module) -> None:
        tau = skew_monomial(f8_module.tower, f8_module.tower.one, 1)
        with pytest.raises(NotAnEndomorphismError):
            charpoly_endomorphism(f8_module, tau)

    def test_bsgs_needs_frobenius(self, example1_module) -> None:
        with pytest.raises(AlgorithmError):
            charpoly_endomorphism(example1_module, example1_module.phi_eval([0, 1]), "bsgs")

    def test_unknown_algorithm(self, f8_module) -> None:
        with pytest.raises(AlgorithmError):
            charpoly_frobenius(f8_module, "magic")

    def test_zero_endomorphism(self, f8_module) -> None:
        with pytest.raises(CharPolyError):
            charpoly_endomorphism(f8_module, skew_zero())

    def test_precision_below_minimum(self, example1_module) -> None:
        with pytest.raises(PrecisionError, match="minimum precision 3"):
            charpoly_frobenius(example1_module, k=2)


class TestResult:
    def test_text_rendering(self) -> None:
        result = CharPolyResult(a=((2,), (1,), (3, 1)), r=3, d=3)
        assert result.to_text(FqField(5)) == "Z^3 + (x + 3)*Z^2 + Z + 2"

    def test_degree_bounds(self) -> None:
        assert result_from_coefficients([(1, 0, 1, 1), (0, 1), (0, 1), ()], 4, 3).satisfies_degree_bounds()
        assert not result_from_coefficients([(), (), (), (0, 1)], 4, 3).satisfies_degree_bounds()
