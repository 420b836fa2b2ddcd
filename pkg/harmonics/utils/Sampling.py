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
#       Seeded random matrices, unitaries, PSD matrices, operator fields
#       and rational weight vectors. Every sampler takes an explicit
#       numpy Generator; nothing here touches ambient entropy.
#

from __future__ import annotations

from fractions import Fraction

import numpy as np

from harmonics.Driver import HarmonicsDomainError
from harmonics.utils.Fourier import OperatorField


def random_matrix(rng, rows, cols=None, scale=1.0):
    """Entrywise standard complex Gaussian, E|a_ij|^2 = scale^2."""
    cols = rows if cols is None else cols
    z = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    return (scale / np.sqrt(2.0)) * z


def random_unitary(rng, d):
    """Haar-distributed unitary from the QR factorization of a Gaussian matrix."""
    Q, R = np.linalg.qr(random_matrix(rng, d))
    phases = np.diagonal(R) / np.abs(np.diagonal(R))
    return Q * phases


def random_psd(rng, d, rank=None):
    X = random_matrix(rng, d, d if rank is None else rank)
    P = X @ X.conj().T
    return (P + P.conj().T) / 2


def random_field(rng, group, dim, scale=1.0):
    return OperatorField(group, random_matrix(rng, group.order * dim, dim, scale).reshape(group.order, dim, dim))


def random_tuple(rng, n, dim):
    return [random_matrix(rng, dim) for _ in range(n)]


def random_weights(rng, n, denominator=97):
    """n positive rationals summing to exactly 1."""
    if n < 1:
        raise HarmonicsDomainError("need at least one weight")
    if denominator < n:
        raise HarmonicsDomainError("denominator %d cannot split into %d positive parts" % (denominator, n))
    cuts = np.sort(rng.choice(np.arange(1, denominator), size=n - 1, replace=False))
    parts = np.diff(np.concatenate(([0], cuts, [denominator])))
    return [Fraction(int(m), denominator) for m in parts]


def majorized_pair(rng, d):
    """
    PSD pair (A, B) with spec(A) = D spec(B) for a doubly-stochastic D, so
    ||A||_(n) <= ||B||_(n) for every n.
    """
    s = np.sort(rng.exponential(size=d))[::-1]
    perms = [rng.permutation(d) for _ in range(3)]
    mix = rng.dirichlet(np.ones(len(perms)))
    D = sum(c * np.eye(d)[perm] for c, perm in zip(mix, perms))
    U = random_unitary(rng, d)
    V = random_unitary(rng, d)
    A = (U * (D @ s)) @ U.conj().T
    B = (V * s) @ V.conj().T
    return (A + A.conj().T) / 2, (B + B.conj().T) / 2
