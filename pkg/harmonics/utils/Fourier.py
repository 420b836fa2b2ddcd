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
#       Operator-valued Fourier analysis on finite abelian groups:
#       fields theta -> A_theta, coefficients
#       B_k = (1/|G|) sum_theta conj(k(theta)) A_theta, partial sums,
#       and the operator Parseval identity with its Bessel inequality.
#
#       On a circle discretization T@N the normalized Haar integral is
#       the N-point uniform rule, exact for trigonometric polynomial
#       fields of degree < N/2.
#

from __future__ import annotations

import hashlib
import logging

import numpy as np

from harmonics.Driver import HarmonicsUsageError
from harmonics.utils.Group import Character, GroupElement, character_value, circle_discretization, \
    enumerate_characters, enumerate_elements
from harmonics.utils.Report import LESS_EQUAL, make_report

logger = logging.getLogger(__name__)

BESSEL_TOLERANCE = 1e-10


class OperatorField:
    """
    A total map from group elements to d x d complex matrices, stored as
    an immutable (|G|, d, d) array in lexicographic element order.
    """

    def __init__(self, group, values):
        values = np.array(values, dtype=complex)
        if values.ndim != 3 or values.shape[1] != values.shape[2]:
            raise HarmonicsUsageError("field values must have shape (|G|, d, d), got %s" % (values.shape,))
        if values.shape[0] != group.order:
            raise HarmonicsUsageError("field over %s needs %d matrices, got %d" %
                                      (group, group.order, values.shape[0]))
        if not np.all(np.isfinite(values)):
            raise HarmonicsUsageError("field over %s has non-finite entries" % (group))
        values.flags.writeable = False
        self.group = group
        self.values = values

    @property
    def dim(self):
        return self.values.shape[1]

    @property
    def order(self):
        return self.group.order

    def value(self, theta):
        return self.values[self.group.index_of(theta)]

    def items(self):
        return zip(enumerate_elements(self.group), self.values)

    def digest(self):
        h = hashlib.sha256()
        h.update(str(self.group).encode("ascii"))
        h.update(b"|%d|" % (self.dim))
        h.update(np.ascontiguousarray(self.values, dtype="<c16").tobytes())
        return h.hexdigest()[:16]

    def grid(self):
        """Values reshaped to (n_1, ..., n_m, d, d)."""
        return self.values.reshape(self.group.shape + (self.dim, self.dim))

    @classmethod
    def constant(cls, group, M):
        M = np.asarray(M, dtype=complex)
        return cls(group, np.broadcast_to(M, (group.order,) + M.shape))

    @classmethod
    def fromFunction(cls, group, func):
        return cls(group, [func(theta) for theta in enumerate_elements(group)])

    def scaled(self, c):
        return OperatorField(self.group, c * self.values)

    def transformed(self, U, V):
        """theta -> U A_theta V."""
        return OperatorField(self.group, np.einsum("ij,tjk,kl->til", U, self.values, V))

    def shifted(self, phi):
        return shift_field(self, phi)

    def __eq__(self, other):
        return isinstance(other, OperatorField) and self.group == other.group and \
            np.array_equal(self.values, other.values)

    def __repr__(self):
        return "OperatorField(%s, dim=%d)" % (self.group, self.dim)


class FourierCoefficients:
    """B_k for every character k, (|G|, d, d), lexicographic in k."""

    def __init__(self, group, values):
        values = np.array(values, dtype=complex)
        if values.ndim != 3 or values.shape[0] != group.order:
            raise HarmonicsUsageError("coefficients over %s need shape (%d, d, d), got %s" %
                                      (group, group.order, values.shape))
        values.flags.writeable = False
        self.group = group
        self.values = values

    @property
    def dim(self):
        return self.values.shape[1]

    def coefficient(self, k):
        return self.values[self.group.index_of(k)]

    def items(self):
        return zip(enumerate_characters(self.group), self.values)


def fourier_coefficients(field):
    """B_k = (1/|G|) sum_theta conj(k(theta)) A_theta, one FFT over the group axes."""
    axes = tuple(range(field.group.rank))
    B = np.fft.fftn(field.grid(), axes=axes) / field.order
    return FourierCoefficients(field.group, B.reshape(field.values.shape))


def synthesize(coeffs):
    """The field whose coefficients are coeffs: A_theta = sum_k B_k k(theta)."""
    group = coeffs.group
    axes = tuple(range(group.rank))
    grid = coeffs.values.reshape(group.shape + (coeffs.dim, coeffs.dim))
    A = np.fft.ifftn(grid, axes=axes) * group.order
    return OperatorField(group, A.reshape(coeffs.values.shape))


def _characters(coeffs, delta):
    chars = []
    for k in delta:
        if not isinstance(k, Character):
            k = coeffs.group.character(k)
        if not coeffs.group.contains(k.index):
            raise HarmonicsUsageError("character %s is not in the dual of %s" % (k, coeffs.group))
        chars.append(k)
    return chars


def partial_sum(coeffs, delta, theta):
    """(S_Delta A)_theta = sum_{k in Delta} B_k k(theta)."""
    result = np.zeros((coeffs.dim, coeffs.dim), dtype=complex)
    for k in _characters(coeffs, delta):
        result += coeffs.coefficient(k) * character_value(coeffs.group, k, theta)
    return result


def gram_sum(coeffs, delta=None):
    """sum_{k in Delta} B_k^* B_k, all characters when delta is None."""
    if delta is None:
        B = coeffs.values
    else:
        idx = [coeffs.group.index_of(k) for k in _characters(coeffs, delta)]
        B = coeffs.values[idx] if idx else np.zeros((0, coeffs.dim, coeffs.dim), dtype=complex)
    return np.einsum("kji,kjl->il", B.conj(), B)


def field_gram_mean(field):
    """(1/|G|) sum_theta A_theta^* A_theta."""
    return np.einsum("tji,tjl->il", field.values.conj(), field.values) / field.order


def parseval_residuals(field):
    """Operator and trace norms of sum_k B_k^* B_k - int A_theta^* A_theta."""
    diff = gram_sum(fourier_coefficients(field)) - field_gram_mean(field)
    diff = (diff + diff.conj().T) / 2
    w = np.linalg.eigvalsh(diff)
    return {"operator": float(np.max(np.abs(w), initial=0.0)), "trace": float(np.sum(np.abs(w)))}


def parseval_residual(field):
    return parseval_residuals(field)["operator"]


def parseval_check(field):
    """Trace form of the Parseval identity, with both residuals attached."""
    lhs = float(np.real(np.trace(gram_sum(fourier_coefficients(field)))))
    rhs = float(np.real(np.trace(field_gram_mean(field))))
    residuals = parseval_residuals(field)
    params = {"group": str(field.group), "dim": field.dim,
              "residual_operator": residuals["operator"], "residual_trace": residuals["trace"]}
    return make_report("parseval", lhs, rhs, LESS_EQUAL, params, digest=field.digest())


def bessel_check(field, delta):
    """True iff int A^*A - sum_{k in Delta} B_k^* B_k is PSD up to -1e-10 (scaled)."""
    coeffs = fourier_coefficients(field)
    rhs = field_gram_mean(field)
    diff = rhs - gram_sum(coeffs, delta)
    diff = (diff + diff.conj().T) / 2
    w = np.linalg.eigvalsh(diff)
    scale = 1.0 + float(np.max(np.abs(np.linalg.eigvalsh((rhs + rhs.conj().T) / 2)), initial=0.0))
    return bool(len(w) == 0 or w[0] >= -BESSEL_TOLERANCE * scale)


def shift_field(field, phi):
    """theta -> A_{theta - phi}; multiplies B_k by conj(k(phi))."""
    if not isinstance(phi, GroupElement):
        phi = field.group.element(phi)
    axes = tuple(range(field.group.rank))
    grid = np.roll(field.grid(), shift=phi.coords, axis=axes)
    return OperatorField(field.group, grid.reshape(field.values.shape))


def trigonometric_field(N, coefficients):
    """
    A_theta = sum_k e^{i k theta} M_k sampled on the N circle nodes.

    coefficients maps integer frequencies k to d x d matrices.
    """
    spec, angles = circle_discretization(N)
    items = sorted(coefficients.items())
    if not items:
        raise HarmonicsUsageError("a trigonometric field needs at least one coefficient")
    top = max(abs(k) for k, _ in items)
    if 2 * top >= N:
        logger.warning("[%s] Fourier: degree %d aliases on %d nodes" % (spec, top, N))

    d = np.asarray(items[0][1]).shape[0]
    values = np.zeros((N, d, d), dtype=complex)
    for k, M in items:
        values += np.exp(1j * k * angles)[:, None, None] * np.asarray(M, dtype=complex)[None, :, :]
    return OperatorField(spec, values)


def circle_coefficient(coeffs, k):
    """B_k of a circle field, frequency k read at index k mod N."""
    if not coeffs.group.circle:
        raise HarmonicsUsageError("%s is not a circle discretization" % (coeffs.group))
    return coeffs.values[int(k) % coeffs.group.order]
