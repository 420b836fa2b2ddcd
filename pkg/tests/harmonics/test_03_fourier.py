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
#       Tests operator-valued Fourier coefficients, partial sums, the
#       operator Parseval identity, Bessel's inequality, translation
#       covariance and circle quadrature.
#

import unittest

import numpy as np
import numpy.testing as npt

from harmonics.Driver import HarmonicsUsageError
from harmonics.utils.Fourier import OperatorField, bessel_check, circle_coefficient, fourier_coefficients, \
    gram_sum, parseval_check, parseval_residual, parseval_residuals, partial_sum, shift_field, synthesize, \
    trigonometric_field
from harmonics.utils.Group import character_table, character_value, enumerate_characters, enumerate_elements, \
    parse_group
from harmonics.utils.Inequality import check_pp
from harmonics.utils.Operator import norm
from harmonics.utils.Sampling import random_field, random_matrix


class test_fourier(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(5)

    def test_coefficients_match_character_sum(self):
        for text in ("Z2", "Z6", "Z2xZ3", "Z2^3", "Z3xZ4"):
            group = parse_group(text)
            field = random_field(self.rng, group, 3)
            T = character_table(group)
            oracle = np.einsum("kt,tij->kij", T.conj(), field.values) / group.order
            npt.assert_allclose(fourier_coefficients(field).values, oracle, atol=1e-12)

    def test_examples(self):
        M = random_matrix(self.rng, 3)
        group = parse_group("Z5")
        B = fourier_coefficients(OperatorField.constant(group, M)).values
        npt.assert_allclose(B[0], M, atol=1e-12)
        npt.assert_allclose(B[1:], 0, atol=1e-12)

        z2 = parse_group("Z2")
        B = fourier_coefficients(OperatorField(z2, [M, np.zeros((3, 3))])).values
        npt.assert_allclose(B[0], M / 2, atol=1e-12)
        npt.assert_allclose(B[1], M / 2, atol=1e-12)

        group = parse_group("Z2xZ3")
        k0 = group.character((1, 2))
        field = OperatorField.fromFunction(group, lambda theta: character_value(group, k0, theta) * M)
        coeffs = fourier_coefficients(field)
        for k, B in coeffs.items():
            npt.assert_allclose(B, M if k == k0 else 0, atol=1e-12)

    def test_linearity(self):
        group = parse_group("Z2xZ4")
        F = random_field(self.rng, group, 2)
        G = random_field(self.rng, group, 2)
        combined = OperatorField(group, 2.0 * F.values - 1j * G.values)
        npt.assert_allclose(fourier_coefficients(combined).values,
                            2.0 * fourier_coefficients(F).values - 1j * fourier_coefficients(G).values, atol=1e-12)

    def test_partial_sum(self):
        group = parse_group("Z6")
        field = random_field(self.rng, group, 3)
        coeffs = fourier_coefficients(field)
        dual = enumerate_characters(group)

        npt.assert_array_equal(partial_sum(coeffs, [], group.identity), np.zeros((3, 3)))
        for theta, A in field.items():
            npt.assert_allclose(partial_sum(coeffs, dual, theta), A, atol=1e-10)
        npt.assert_allclose(synthesize(coeffs).values, field.values, atol=1e-10)

        M = random_matrix(self.rng, 3)
        constant = fourier_coefficients(OperatorField.constant(group, M))
        npt.assert_allclose(partial_sum(constant, [group.character((0,))], group.element((4,))), M, atol=1e-12)

        with self.assertRaises(HarmonicsUsageError):
            partial_sum(coeffs, [parse_group("Z2xZ2").character((1, 1))], group.identity)

    def test_parseval(self):
        for text in ("Z2", "Z3", "Z6", "Z2^2", "Z2^3"):
            group = parse_group(text)
            for d in (1, 2, 4, 8):
                for _ in range(500):
                    field = random_field(self.rng, group, d, scale=float(self.rng.uniform(0.1, 10.0)))
                    scale = max(norm(A, "operator") ** 2 for A in field.values)
                    self.assertLessEqual(parseval_residual(field), 1e-10 * (1 + scale))

        zero = OperatorField(parse_group("Z4"), np.zeros((4, 2, 2)))
        self.assertEqual(parseval_residual(zero), 0.0)

    def test_scalar_parseval(self):
        group = parse_group("Z6")
        f = self.rng.standard_normal(6) + 1j * self.rng.standard_normal(6)
        field = OperatorField(group, f.reshape(6, 1, 1))
        hat = np.array([np.mean(np.conj(row) * f) for row in character_table(group)])
        self.assertAlmostEqual(np.sum(np.abs(hat) ** 2), np.mean(np.abs(f) ** 2), delta=1e-12)
        self.assertLessEqual(parseval_residual(field), 1e-12)

    def test_parseval_report(self):
        field = random_field(self.rng, parse_group("Z2xZ3"), 4)
        report = parseval_check(field)
        self.assertTrue(report.holds)
        self.assertLessEqual(abs(report.margin), 1e-9 * (1 + report.rhs))
        self.assertIn("residual_operator", report.params)
        self.assertIn("residual_trace", report.params)
        residuals = parseval_residuals(field)
        self.assertLessEqual(residuals["operator"], residuals["trace"] + 1e-15)

        coeffs = fourier_coefficients(field)
        plancherel = sum(norm(B, "frobenius") ** 2 for B in coeffs.values)
        self.assertAlmostEqual(plancherel, np.mean([norm(A, "frobenius") ** 2 for A in field.values]),
                               delta=1e-10 * (1 + plancherel))

    def test_bessel(self):
        group = parse_group("Z4")
        dual = enumerate_characters(group)
        field = random_field(self.rng, group, 3)
        self.assertTrue(bessel_check(field, dual))
        self.assertTrue(bessel_check(field, []))

        for _ in range(1000):
            field = random_field(self.rng, group, 3)
            delta = [k for k in dual if self.rng.random() < 0.5]
            self.assertTrue(bessel_check(field, delta))

    def test_monotone_exhaustion(self):
        group = parse_group("Z2xZ3")
        field = random_field(self.rng, group, 3)
        coeffs = fourier_coefficients(field)
        order = list(enumerate_characters(group))
        self.rng.shuffle(order)
        previous = gram_sum(coeffs, [])
        for i in range(1, len(order) + 1):
            current = gram_sum(coeffs, order[:i])
            self.assertGreaterEqual(np.linalg.eigvalsh(current - previous)[0], -1e-12)
            previous = current

    def test_translation_covariance(self):
        group = parse_group("Z2xZ4")
        field = random_field(self.rng, group, 3)
        coeffs = fourier_coefficients(field)
        for phi in enumerate_elements(group):
            shifted = shift_field(field, phi)
            for theta in enumerate_elements(group):
                npt.assert_array_equal(shifted.value(theta), field.value(group.add(theta, group.negate(phi))))
            moved = fourier_coefficients(shifted)
            for k, B in coeffs.items():
                npt.assert_allclose(moved.coefficient(k), np.conj(character_value(group, k, phi)) * B, atol=1e-12)
                npt.assert_allclose(norm(moved.coefficient(k), "schatten:3"), norm(B, "schatten:3"), atol=1e-10)

    def test_conjugation_permutes_coefficient_norms(self):
        group = parse_group("Z5")
        field = random_field(self.rng, group, 2)
        T = character_table(group)
        conjugated = np.einsum("kt,tij->kij", T, field.values) / group.order
        ours = sorted(norm(B, "schatten:4") for B in fourier_coefficients(field).values)
        theirs = sorted(norm(B, "schatten:4") for B in conjugated)
        npt.assert_allclose(ours, theirs, atol=1e-12)

    def test_circle_quadrature(self):
        K, N = 5, 16
        planted = {k: random_matrix(self.rng, 3) for k in range(-K, K + 1)}
        field = trigonometric_field(N, planted)
        self.assertEqual(str(field.group), "T@16")
        coeffs = fourier_coefficients(field)
        for k, M in planted.items():
            npt.assert_allclose(circle_coefficient(coeffs, k), M, atol=1e-10)
        self.assertTrue(check_pp(field, 4).holds)

        M = random_matrix(self.rng, 2)
        coeffs = fourier_coefficients(trigonometric_field(3, {1: M}))
        npt.assert_allclose(circle_coefficient(coeffs, 1), M, atol=1e-12)
        npt.assert_allclose(circle_coefficient(coeffs, 0), 0, atol=1e-12)

        constant = fourier_coefficients(trigonometric_field(8, {0: M}))
        npt.assert_allclose(constant.values[1:], 0, atol=1e-12)

        with self.assertRaises(HarmonicsUsageError):
            circle_coefficient(fourier_coefficients(random_field(self.rng, parse_group("Z4"), 2)), 1)

    def test_field_validation(self):
        group = parse_group("Z3")
        with self.assertRaises(HarmonicsUsageError):
            OperatorField(group, np.zeros((2, 2, 2)))
        with self.assertRaises(HarmonicsUsageError):
            OperatorField(group, np.zeros((3, 2, 3)))
        values = np.zeros((3, 2, 2))
        values[1, 0, 0] = np.inf
        with self.assertRaises(HarmonicsUsageError):
            OperatorField(group, values)

        field = random_field(self.rng, group, 2)
        with self.assertRaises(ValueError):
            field.values[0, 0, 0] = 1.0
        self.assertEqual(field.digest(), OperatorField(group, field.values.copy()).digest())


if __name__ == "__main__":
    unittest.main()
