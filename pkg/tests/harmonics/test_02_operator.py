#
#    Copyright (c) 2026 The Schatten Harmonics Authors.
#    All rights reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.
#

##
#    @file
#       Tests operators: singular values, |A|, polar decomposition,
#       Schatten and Ky Fan norms, spectral calculus, Ky Fan dominance,
#       operator Jensen and the convex-sum inequality.
#

import unittest

import numpy as np
import numpy.testing as npt

from harmonics.Driver import HarmonicsDomainError, HarmonicsUsageError
from harmonics.utils.Operator import NormKind, ScalarFunction, abs_operator, apply_scalar_function, \
    convex_sum_check, kyfan_dominance_check, norm, operator_jensen_check, polar_decomposition, singular_values
from harmonics.utils.Sampling import majorized_pair, random_matrix, random_psd, random_unitary


def all_kinds(d):
    return [NormKind.schatten(p) for p in (0.5, 1, 1.5, 2, 3, 4)] + \
        [NormKind.kyfan(n) for n in range(1, d + 1)] + [NormKind.operator()]


class test_operator(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(2)

    def test_singular_values(self):
        npt.assert_array_equal(singular_values(np.diag([3, 4])).values, [4, 3])
        npt.assert_array_equal(singular_values(np.zeros((3, 3))).values, [0, 0, 0])
        self.assertEqual(len(singular_values(random_matrix(self.rng, 3, 5))), 3)

        A = random_matrix(self.rng, 6)
        oracle = np.sqrt(np.maximum(np.linalg.eigvalsh(A.conj().T @ A), 0))[::-1]
        npt.assert_allclose(singular_values(A).values, oracle, atol=1e-10)

        with self.assertRaises(HarmonicsUsageError):
            singular_values([[np.nan, 0], [0, 1]])

    def test_abs_operator(self):
        P = random_psd(self.rng, 4)
        npt.assert_allclose(abs_operator(P), P, atol=1e-10)
        npt.assert_allclose(abs_operator(-np.eye(3)), np.eye(3), atol=1e-12)

        A = random_matrix(self.rng, 5)
        absA = abs_operator(A)
        npt.assert_allclose(singular_values(absA).values, singular_values(A).values, atol=1e-10)
        npt.assert_allclose(absA @ absA, A.conj().T @ A, atol=1e-9)
        npt.assert_allclose(absA, absA.conj().T, atol=1e-12)
        self.assertGreaterEqual(np.linalg.eigvalsh(absA)[0], -1e-10)

        self.assertEqual(abs_operator(random_matrix(self.rng, 3, 5)).shape, (5, 5))

    def test_polar_decomposition(self):
        U0 = random_unitary(self.rng, 4)
        U, P = polar_decomposition(U0)
        npt.assert_allclose(U, U0, atol=1e-9)
        npt.assert_allclose(P, np.eye(4), atol=1e-9)

        U, P = polar_decomposition(np.diag([-2.0]))
        npt.assert_allclose(U, [[-1]], atol=1e-12)
        npt.assert_allclose(P, [[2]], atol=1e-12)

        A = random_matrix(self.rng, 5)
        U, P = polar_decomposition(A)
        npt.assert_allclose(U.conj().T @ U, np.eye(5), atol=1e-9)
        self.assertLessEqual(norm(A - U @ P, "operator"), 1e-9 * (1 + norm(A, "operator")))
        npt.assert_allclose(P, abs_operator(A), atol=1e-10)

        A = np.diag([3.0, 0.0, 1.0]).astype(complex)
        U, P = polar_decomposition(A)
        npt.assert_allclose(U.conj().T @ U, np.eye(3), atol=1e-9)
        npt.assert_allclose(U @ P, A, atol=1e-9)

        with self.assertRaises(HarmonicsUsageError):
            polar_decomposition(random_matrix(self.rng, 2, 3))

    def test_norm(self):
        for p in (0.5, 1, 2, 3.5):
            self.assertAlmostEqual(norm(np.eye(3), NormKind.schatten(p)), 3 ** (1 / p), delta=1e-12)
        D = np.diag([3.0, 4.0])
        self.assertAlmostEqual(norm(D, NormKind.schatten(2)), 5.0, delta=1e-12)
        self.assertAlmostEqual(norm(D, NormKind.kyfan(1)), 4.0, delta=1e-12)
        self.assertAlmostEqual(norm(D, NormKind.kyfan(2)), 7.0, delta=1e-12)
        self.assertAlmostEqual(norm(D, "operator"), 4.0, delta=1e-12)
        self.assertAlmostEqual(norm(D, "trace"), 7.0, delta=1e-12)

        A = random_matrix(self.rng, 4)
        self.assertAlmostEqual(norm(A, "frobenius"), np.linalg.norm(A), delta=1e-10)
        self.assertAlmostEqual(norm(A, NormKind.kyfan(1)), norm(A, "operator"), delta=1e-12)

        with self.assertRaises(HarmonicsDomainError):
            NormKind.schatten(0)
        with self.assertRaises(HarmonicsDomainError):
            NormKind.kyfan(0)
        with self.assertRaises(HarmonicsUsageError):
            NormKind.parse("nuclear")
        self.assertTrue(NormKind.schatten(0.5).is_quasinorm)
        self.assertEqual(NormKind.parse("kyfan:2"), NormKind.kyfan(2))

    def test_norm_invariants(self):
        for _ in range(50):
            d = int(self.rng.integers(1, 7))
            A = random_matrix(self.rng, d)
            U = random_unitary(self.rng, d)
            V = random_unitary(self.rng, d)
            s = singular_values(A).values

            self.assertAlmostEqual(norm(A, "frobenius") ** 2, float(np.sum(s ** 2)), delta=1e-10)
            for kind in all_kinds(d):
                self.assertAlmostEqual(norm(U @ A @ V, kind), norm(A, kind), delta=1e-9 * (1 + norm(A, kind)))

            kyfan = [norm(A, NormKind.kyfan(n)) for n in range(1, d + 1)]
            self.assertLessEqual(norm(A, "operator"), kyfan[0] + 1e-12)
            self.assertTrue(all(a <= b + 1e-12 for a, b in zip(kyfan, kyfan[1:])))
            self.assertLessEqual(kyfan[-1], norm(A, "trace") + 1e-10)

    def test_scalar_function(self):
        self.assertTrue(ScalarFunction.parse("square").convex)
        self.assertFalse(ScalarFunction.parse("sqrt").convex)
        self.assertEqual(ScalarFunction.parse("power:1.5").tag, "power:1.5")
        with self.assertRaises(HarmonicsUsageError):
            ScalarFunction.parse("log")
        with self.assertRaises(HarmonicsDomainError):
            ScalarFunction(lambda t: t + 1, "convex_zero")
        with self.assertRaises(HarmonicsDomainError):
            ScalarFunction(np.sqrt, "convex_zero")
        with self.assertRaises(HarmonicsDomainError):
            ScalarFunction(lambda t: t ** 2, "concave_zero_inf")
        with self.assertRaises(HarmonicsDomainError):
            ScalarFunction(lambda t: t, "linear")

    def test_apply_scalar_function(self):
        phi = ScalarFunction.power(1.0)
        npt.assert_allclose(apply_scalar_function(np.diag([4.0, 9.0]), phi), np.diag([4, 9]), atol=1e-12)
        npt.assert_allclose(apply_scalar_function(np.diag([2.0, 3.0]), ScalarFunction.parse("square")),
                            np.diag([4, 9]), atol=1e-12)

        A = random_psd(self.rng, 5)
        npt.assert_allclose(apply_scalar_function(A, phi), A, atol=1e-10)
        R = apply_scalar_function(A, ScalarFunction.parse("sqrt"))
        npt.assert_allclose(R @ R, A, atol=1e-8)

        U = random_unitary(self.rng, 5)
        square = ScalarFunction.parse("square")
        npt.assert_allclose(apply_scalar_function(U @ A @ U.conj().T, square),
                            U @ apply_scalar_function(A, square) @ U.conj().T, atol=1e-9)

        with self.assertRaises(HarmonicsDomainError):
            apply_scalar_function(np.array([[0, 1], [0, 0]]), phi)
        with self.assertRaises(HarmonicsDomainError):
            apply_scalar_function(-np.eye(2), phi)

    def test_kyfan_dominance(self):
        A = random_matrix(self.rng, 4)
        self.assertTrue(kyfan_dominance_check(A, A))
        self.assertFalse(kyfan_dominance_check(2 * np.eye(3), np.eye(3)))

        for _ in range(100):
            A = random_psd(self.rng, 4)
            B = A + random_psd(self.rng, 4, rank=2)
            self.assertTrue(kyfan_dominance_check(A, B))

        with self.assertRaises(HarmonicsUsageError):
            kyfan_dominance_check(np.eye(2), np.eye(3))

    def test_majorization_transfers_through_convex_functions(self):
        phis = [ScalarFunction.parse("square"), ScalarFunction.power(1.5), ScalarFunction.power(3)]
        for _ in range(100):
            A, B = majorized_pair(self.rng, 5)
            self.assertTrue(kyfan_dominance_check(A, B))
            for phi in phis:
                self.assertTrue(kyfan_dominance_check(apply_scalar_function(A, phi), apply_scalar_function(B, phi)))

    def test_operator_jensen(self):
        P = random_psd(self.rng, 3)
        report = operator_jensen_check([(1.0, P)], ScalarFunction.parse("square"), "trace")
        self.assertLessEqual(abs(report.margin), 1e-10 * (1 + report.rhs))

        parts = [(0.3, random_psd(self.rng, 3)), (0.7, random_psd(self.rng, 3))]
        report = operator_jensen_check(parts, ScalarFunction.power(1.0), "trace")
        self.assertLessEqual(abs(report.margin), 1e-9 * (1 + report.rhs))

        convex = [ScalarFunction.parse("square"), ScalarFunction.power(1.5)]
        concave = [ScalarFunction.parse("sqrt")]
        for _ in range(1000):
            d = 3
            w = float(self.rng.uniform(0.05, 0.95))
            field = [(w, random_psd(self.rng, d)), (1 - w, random_psd(self.rng, d))]
            for phi in convex + concave:
                for kind in ("trace", NormKind.kyfan(1), NormKind.kyfan(2), NormKind.kyfan(d)):
                    report = operator_jensen_check(field, phi, kind)
                    self.assertTrue(report.holds, report)
                    self.assertEqual(report.direction, "<=" if phi.convex else ">=")

        with self.assertRaises(HarmonicsDomainError):
            operator_jensen_check([(0.5, P), (0.4, P)], ScalarFunction.parse("square"), "trace")
        with self.assertRaises(HarmonicsDomainError):
            operator_jensen_check([(1.0, P)], ScalarFunction.parse("square"), NormKind.schatten(0.5))

    def test_convex_sum(self):
        P = random_psd(self.rng, 3)
        report = convex_sum_check([P], ScalarFunction.parse("square"), "trace")
        self.assertLessEqual(abs(report.margin), 1e-10 * (1 + report.rhs))

        A = np.diag([1.0, 2.0])
        B = np.diag([3.0, 0.5])
        report = convex_sum_check([A, B], ScalarFunction.parse("square"), "trace")
        self.assertTrue(report.holds)
        self.assertAlmostEqual(report.margin, 2 * np.trace(A @ B), delta=1e-10)

        for _ in range(1000):
            parts = [random_psd(self.rng, 3) for _ in range(int(self.rng.integers(2, 5)))]
            for phi in (ScalarFunction.parse("square"), ScalarFunction.power(1.5), ScalarFunction.parse("sqrt")):
                for kind in ("trace", NormKind.kyfan(1), NormKind.kyfan(2), NormKind.kyfan(3)):
                    self.assertTrue(convex_sum_check(parts, phi, kind).holds)

        with self.assertRaises(HarmonicsDomainError):
            convex_sum_check([np.array([[1.0, 0.0], [0.0, -1.0]])], ScalarFunction.parse("square"), "trace")


if __name__ == "__main__":
    unittest.main()
