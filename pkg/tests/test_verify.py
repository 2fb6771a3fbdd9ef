import numpy as np
import pytest

from harmonic_tutte.codes import LinearCode, weight_enumerator, zeta
from harmonic_tutte.enums.verify import Identity, Verdict
from harmonic_tutte.harmonic import HarmonicFunction, constant_function, harm_basis
from harmonic_tutte.linalg import FieldMatrix
from harmonic_tutte.poly import BivariatePoly
from harmonic_tutte.verify import (
    CorpusOptions,
    Instance,
    compare,
    design_check,
    draw_instances,
    greene_rhs,
    random_generator,
    run_selftest,
    verify_btf,
    verify_complement_relation,
    verify_design_agreement,
    verify_duality,
    verify_greene,
    verify_greene_pointwise,
    verify_harm_dimension,
    verify_lemma_slices,
    verify_macwilliams_classical,
    verify_macwilliams_harmonic,
    verify_oracle_equivalence,
    verify_reinterpretation,
    verify_shortening_tutte,
    verify_sqrt2_reduction,
    verify_tilde_sums,
)
from harmonic_tutte.linalg import rref

x = BivariatePoly.x()
y = BivariatePoly.y()

SMALL = CorpusOptions(corpus_size=4, lemma_triples=20, greene_points=5, oracle_matroids=4)


def test_compare_reports_differences():
    report = compare(Identity.GREENE, Instance(), x + y, x)
    assert report.verdict is Verdict.MISMATCH
    assert report.diff == y
    assert compare(Identity.GREENE, Instance(), x, x).ok


def test_micro_duality(micro_code, f13):
    report = verify_duality(micro_code.matroid, f13)
    assert report.ok
    assert report.lhs == (x - 1) * (y - 1) - 1


def test_micro_greene(micro_code, f13):
    assert greene_rhs(micro_code, f13) == y
    report = verify_greene(micro_code, f13)
    assert report.ok
    assert report.lhs == report.rhs == y


def test_classical_greene_on_hamming(hamming74):
    expected = x**7 + 7 * x**4 * y**3 + 7 * x**3 * y**4 + y**7
    assert greene_rhs(hamming74, constant_function(7)) == expected
    assert verify_greene(hamming74, constant_function(7)).ok


def test_greene_for_zero_code():
    code = LinearCode(FieldMatrix.from_rows(2, [], cols=4))
    assert greene_rhs(code, constant_function(4)) == x**4


def test_greene_over_f3():
    code = LinearCode(FieldMatrix.from_rows(3, [[1, 0, 1, 2], [0, 1, 1, 1]]))
    for d in (0, 1, 2):
        for f in harm_basis(4, d):
            assert verify_greene(code, f).ok


def test_greene_pointwise(hamming74, extended_hamming84):
    rng = np.random.default_rng(7)
    assert verify_greene_pointwise(hamming74, constant_function(7), 50, rng).ok
    for f in harm_basis(8, 2)[:4]:
        assert verify_greene_pointwise(extended_hamming84, f, 10, rng).ok


def test_macwilliams_on_self_dual_code():
    code = LinearCode(FieldMatrix.from_rows(2, [[1, 1]]))
    f = harm_basis(2, 1)[0]
    report = verify_macwilliams_harmonic(code, f)
    assert report.ok
    assert report.lhs.is_zero() and report.rhs.is_zero()


def test_macwilliams_micro(micro_code, f13):
    report = verify_macwilliams_harmonic(micro_code, f13)
    assert report.ok
    assert report.lhs == y - x


def test_classical_macwilliams(hamming74):
    report = verify_macwilliams_classical(hamming74)
    assert report.ok
    assert report.lhs == x**7 + 7 * x**3 * y**4


def test_macwilliams_full_space():
    code = LinearCode(FieldMatrix.identity(2, 3))
    assert verify_macwilliams_harmonic(code, constant_function(3)).ok
    assert weight_enumerator(code) == (x + y) ** 3


def test_macwilliams_over_f5():
    code = LinearCode(FieldMatrix.from_rows(5, [[1, 2, 3, 4]]))
    for d in (0, 1, 2):
        for f in harm_basis(4, d):
            assert verify_macwilliams_harmonic(code, f).ok


def test_sqrt2_reduction(hamming74, extended_hamming84, micro_code, f13):
    assert verify_sqrt2_reduction(hamming74, constant_function(7)).ok
    assert verify_sqrt2_reduction(micro_code, f13).ok
    for f in harm_basis(8, 1)[:2]:
        assert verify_sqrt2_reduction(extended_hamming84, f).ok
    with pytest.raises(ValueError):
        verify_sqrt2_reduction(LinearCode(FieldMatrix.from_rows(3, [[1, 1]])), constant_function(2))


def test_btf_and_reinterpretation(micro_code, f13, hamming74):
    btf = verify_btf(micro_code, f13)
    assert btf.ok
    assert btf.lhs.coefficient(1, 0) == -1
    assert verify_reinterpretation(micro_code, f13).ok
    for d in (0, 1, 2, 3):
        for f in harm_basis(7, d)[:3]:
            assert verify_btf(hamming74, f).ok
            assert verify_reinterpretation(hamming74, f).ok


def test_lemma_slices(f13):
    report = verify_lemma_slices(f13, (1, 2))
    assert report.ok
    assert report.lhs == BivariatePoly.univariate({0: -1, 1: 1})
    for f in harm_basis(6, 3):
        assert verify_lemma_slices(f, (1, 4, 5, 6)).ok


def test_tilde_sums_and_complements():
    assert verify_tilde_sums(constant_function(5)).ok
    for f in harm_basis(6, 2):
        assert verify_tilde_sums(f).ok
        assert verify_complement_relation(f, (2, 5)).ok


def test_shortening_and_oracle(extended_hamming84):
    for f in harm_basis(8, 2)[:3]:
        assert verify_shortening_tutte(extended_hamming84, f).ok
        assert verify_oracle_equivalence(extended_hamming84.matroid, f).ok


def test_harm_dimension_reports():
    assert verify_harm_dimension(10, 3).ok
    assert verify_harm_dimension(5, 3).lhs == BivariatePoly.zero()


def test_design_check_extended_hamming(extended_hamming84):
    report = design_check(extended_hamming84, 3)
    assert report.harmonic_design and report.oracle_design and report.agree
    assert [r.basis_size for r in report.degrees] == [7, 20, 28]
    weight4 = next(w for w in report.weights if w.weight == 4)
    assert (weight4.blocks, weight4.lam) == (14, 1)
    assert report.matroid_vanishes is True
    assert report.implication_holds is True


def test_design_check_micro(micro_code, f13):
    report = design_check(micro_code, 1)
    assert not report.harmonic_design
    assert not report.oracle_design
    assert report.agree
    (degree,) = report.degrees
    assert degree.witness.values == f13.values
    assert degree.witness_enumerator == x * y**2
    assert report.matroid_vanishes is False


def test_design_check_repetition(repetition5):
    report = design_check(repetition5, 1)
    assert report.harmonic_design and report.oracle_design
    assert report.weights[0].lam == 1


def test_design_agreement_report(hamming74):
    assert verify_design_agreement(hamming74, 2).ok


def test_design_strength_above_length_holds_vacuously():
    identity = LinearCode(FieldMatrix.identity(2, 2))
    report = design_check(identity, 3)
    assert [r.basis_size for r in report.degrees] == [1, 0]
    assert report.harmonic_design and report.oracle_design and report.agree
    assert [(w.weight, w.lam) for w in report.weights] == [(1, 0), (2, 1)]
    assert verify_design_agreement(identity, 3).ok


def test_random_generator_has_full_rank():
    rng = np.random.default_rng(3)
    for q, n, k in [(2, 6, 3), (3, 5, 5), (5, 4, 0)]:
        m = random_generator(rng, q, n, k)
        assert (m.rows, m.cols) == (k, n)
        assert rref(m).rank == k


def test_instances_respect_profiles():
    rng = np.random.default_rng(11)
    for inst in draw_instances(rng, "greene-fq", 10):
        assert inst.code.q in (3, 5)
        assert inst.code.n <= 8
        assert 2 * inst.d <= inst.code.n
        assert inst.functions == harm_basis(inst.code.n, inst.d)


def test_instances_cover_every_basis_element():
    rng = np.random.default_rng(2)
    covered = {
        (inst.code.n, f.d, tuple(f.to_vector()))
        for inst in draw_instances(rng, "duality", 2000)
        for f in inst.functions
    }
    expected = {
        (n, d, tuple(f.to_vector()))
        for n in range(1, 11)
        for d in range(min(3, n // 2) + 1)
        for f in harm_basis(n, d)
    }
    assert covered == expected


def test_selftest_small_corpus():
    summary = run_selftest(0, SMALL)
    assert summary.ok
    assert {r.identity for r in summary.results} == set(Identity)
    again = run_selftest(0, SMALL)
    assert [r.checked for r in again.results] == [r.checked for r in summary.results]


def test_selftest_subset():
    summary = run_selftest(5, SMALL, {Identity.DUALITY})
    assert [r.identity for r in summary.results] == [Identity.DUALITY]
    drawn = draw_instances(np.random.default_rng([5, 0]), "duality", 4)
    assert summary.checked == sum(len(inst.functions) for inst in drawn)


def test_selftest_default_corpus():
    summary = run_selftest(0, CorpusOptions())
    assert summary.ok, [(r.identity, len(r.failures)) for r in summary.results if not r.ok]


def test_harmonic_input_is_validated():
    with pytest.raises(ValueError):
        HarmonicFunction(3, 1, {(1,): 1})
    assert zeta(LinearCode(FieldMatrix.from_rows(2, [[1, 1, 1]])), harm_basis(3, 1)[0]).is_zero()
