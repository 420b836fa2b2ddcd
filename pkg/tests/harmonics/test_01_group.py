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
#       Tests groups: element and character enumeration, character
#       tables, Littlewood matrices, the order cap and circle nodes.
#

import cmath
import math
import unittest
from fractions import Fraction

import numpy as np
import numpy.testing as npt

from harmonics.Driver import HarmonicsCapError, HarmonicsDomainError, HarmonicsUsageError
from harmonics.utils.Group import GroupElement, GroupSpec, character_table, character_value, \
    circle_discretization, enumerate_characters, enumerate_elements, haar_weights, littlewood_matrix, parse_group


class test_group(unittest.TestCase):
    def test_enumerate_elements(self):
        self.assertEqual(enumerate_elements(parse_group("Z2")), [GroupElement((0,)), GroupElement((1,))])
        self.assertEqual([e.coords for e in enumerate_elements(parse_group("Z2xZ2"))],
                         [(0, 0), (0, 1), (1, 0), (1, 1)])
        elements = enumerate_elements(parse_group("Z6"))
        self.assertEqual(len(elements), 6)
        self.assertEqual(elements[0], parse_group("Z6").identity)
        self.assertEqual(len(set(elements)), 6)

    def test_parse_group(self):
        self.assertEqual(parse_group("Z6").order, 6)
        self.assertEqual(parse_group("Z2^3").cyclic_orders, (2, 2, 2))
        self.assertEqual(parse_group("Z2xZ4").cyclic_orders, (2, 4))
        self.assertEqual(parse_group("Z2^2xZ3").cyclic_orders, (2, 2, 3))
        circle = parse_group("T@64")
        self.assertTrue(circle.circle)
        self.assertEqual(circle.order, 64)
        for text in ("Z6", "Z2^3", "Z2xZ4", "T@64"):
            self.assertEqual(str(parse_group(text)), text)

        with self.assertRaises(HarmonicsUsageError):
            parse_group("Y3")
        with self.assertRaises(HarmonicsUsageError):
            parse_group("")
        with self.assertRaises(HarmonicsDomainError):
            parse_group("Z1")

    def test_cap(self):
        with self.assertRaises(HarmonicsCapError):
            parse_group("Z2^7", cap=64)
        with self.assertRaises(HarmonicsCapError):
            littlewood_matrix(7, cap=64)
        self.assertEqual(parse_group("Z2^7", cap=128).order, 128)
        self.assertEqual(parse_group("Z2^6", cap=64).order, 64)

    def test_cap_before_expansion(self):
        with self.assertRaises(HarmonicsCapError):
            parse_group("Z2^100000000", cap=64)
        with self.assertRaises(HarmonicsCapError):
            parse_group("Z3xZ2^100000000")
        with self.assertRaises(HarmonicsDomainError):
            parse_group("Z1^100000000")

    def test_character_value(self):
        z2 = parse_group("Z2")
        self.assertEqual(character_value(z2, z2.character((1,)), z2.element((1,))), -1)
        z3 = parse_group("Z3")
        self.assertAlmostEqual(character_value(z3, z3.character((1,)), z3.element((1,))),
                               cmath.exp(2j * math.pi / 3), delta=1e-12)
        for spec in (z2, z3, parse_group("Z2xZ4")):
            for theta in enumerate_elements(spec):
                self.assertEqual(character_value(spec, spec.character(spec.identity.coords), theta), 1)

        with self.assertRaises(HarmonicsUsageError):
            character_value(z3, z3.character((1,)), GroupElement((1, 0)))

    def test_character_value_large_order(self):
        big = GroupSpec((10 ** 10,))
        self.assertAlmostEqual(character_value(big, big.character((1,)), big.element((1,))),
                               cmath.exp(2j * math.pi / 10 ** 10), delta=1e-12)
        self.assertEqual(character_value(big, big.character((1,)), big.element((2500000000,))), 1j)
        self.assertEqual(character_value(big, big.character((5,)), big.element((10 ** 9,))), -1)

        mixed = GroupSpec((2 ** 40, 3))
        k, theta = mixed.character((2 ** 40 - 1, 2)), mixed.element((2 ** 40 - 1, 1))
        turn = (Fraction((2 ** 40 - 1) ** 2, 2 ** 40) + Fraction(2, 3)) % 1
        self.assertAlmostEqual(character_value(mixed, k, theta), cmath.exp(2j * math.pi * float(turn)), delta=1e-12)

    def test_character_value_matches_table(self):
        spec = parse_group("Z2xZ3xZ4")
        table = character_table(spec)
        for k in enumerate_characters(spec):
            for theta in enumerate_elements(spec):
                self.assertAlmostEqual(character_value(spec, k, theta), table[spec.index_of(k), spec.index_of(theta)],
                                       delta=1e-14)

    def test_homomorphism(self):
        rng = np.random.default_rng(11)
        spec = parse_group("Z2xZ3xZ4")
        for _ in range(200):
            k, l, theta, phi = (spec.element(rng.integers(0, 12, spec.rank)) for _ in range(4))
            k, l = spec.character(k.coords), spec.character(l.coords)
            value = character_value(spec, k, spec.add(theta, phi))
            self.assertAlmostEqual(value, character_value(spec, k, theta) * character_value(spec, k, phi),
                                   delta=1e-12)
            kl = spec.character(spec.add(k.index, l.index).coords)
            self.assertAlmostEqual(character_value(spec, kl, theta),
                                   character_value(spec, k, theta) * character_value(spec, l, theta),
                                   delta=1e-12)
            self.assertAlmostEqual(abs(value), 1.0, delta=1e-12)

    def test_character_table(self):
        npt.assert_array_equal(character_table(parse_group("Z2")), [[1, 1], [1, -1]])

        omega = np.exp(2j * np.pi / 4)
        dft = np.array([[omega ** (j * k) for j in range(4)] for k in range(4)])
        npt.assert_allclose(character_table(parse_group("Z4")), dft, atol=1e-12)

        for text in ("Z2", "Z3", "Z6", "Z2^3", "Z2xZ4", "Z3xZ5", "Z4xZ4", "Z2^6", "Z64", "T@16"):
            spec = parse_group(text)
            T = character_table(spec)
            npt.assert_allclose(T @ T.conj().T / spec.order, np.eye(spec.order), atol=1e-12)
            npt.assert_array_equal(T[0], np.ones(spec.order))

    def test_littlewood(self):
        npt.assert_array_equal(littlewood_matrix(1), [[1, 1], [1, -1]])
        L1 = littlewood_matrix(1)
        npt.assert_array_equal(littlewood_matrix(2), np.block([[L1, L1], [L1, -L1]]))

        for n in range(1, 7):
            L = littlewood_matrix(n)
            self.assertEqual(L.dtype, np.int64)
            npt.assert_array_equal(L @ L.T, (2 ** n) * np.eye(2 ** n, dtype=np.int64))
            npt.assert_array_equal(L.astype(complex), character_table(GroupSpec((2,) * n)))

        with self.assertRaises(HarmonicsDomainError):
            littlewood_matrix(0)

    def test_haar_weights(self):
        for text in ("Z2", "Z6", "Z2^3", "Z3xZ7"):
            spec = parse_group(text)
            self.assertEqual(sum((w.weight for w in haar_weights(spec)), Fraction(0)), Fraction(1))

    def test_characters_follow_elements(self):
        spec = parse_group("Z2xZ3")
        self.assertEqual([k.index for k in enumerate_characters(spec)], enumerate_elements(spec))
        self.assertEqual(spec.conjugate(spec.character((1, 1))).index.coords, (1, 2))

    def test_circle_discretization(self):
        spec, angles = circle_discretization(4)
        self.assertTrue(spec.circle)
        npt.assert_allclose(angles, [0, np.pi / 2, np.pi, 3 * np.pi / 2])
        with self.assertRaises(HarmonicsDomainError):
            circle_discretization(1)


if __name__ == "__main__":
    unittest.main()
