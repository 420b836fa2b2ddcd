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
#       Finite-dimensional matrix analysis: singular values, |A|, polar
#       decomposition, Schatten and Ky Fan norms, the spectral calculus
#       phi(A) for PSD A, and the operator Jensen / convex-sum checks.
#

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from harmonics.Driver import HarmonicsDomainError, HarmonicsNumericError, HarmonicsUsageError
from harmonics.utils.Report import GREATER_EQUAL, LESS_EQUAL, make_report

logger = logging.getLogger(__name__)

CLAMP_RELATIVE = 1e-12
HERMITIAN_TOLERANCE = 1e-9

CONVEX_ZERO = "convex_zero"
CONCAVE_ZERO_INF = "concave_zero_inf"
SHAPES = (CONVEX_ZERO, CONCAVE_ZERO_INF)


def as_matrix(A):
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2:
        raise HarmonicsUsageError("expected a 2-D matrix, got shape %s" % (A.shape,))
    if not np.all(np.isfinite(A)):
        raise HarmonicsUsageError("matrix of shape %s has non-finite entries" % (A.shape,))
    return A


def _diagnostics(A):
    try:
        cond = np.linalg.cond(A)
    except np.linalg.LinAlgError:
        cond = float("nan")
    return "shape=%s frobenius=%.6g max_abs=%.6g cond=%.6g" % \
        (A.shape, np.linalg.norm(A), np.max(np.abs(A)) if A.size else 0.0, cond)


@dataclass(frozen=True)
class SingularSpectrum:
    values: np.ndarray

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class NormKind:
    """Schatten p (quasinorm for 0 < p < 1), Ky Fan n, or the operator norm."""
    kind: str
    param: float = None

    def __post_init__(self):
        if self.kind == "schatten":
            if self.param is None or not self.param > 0:
                raise HarmonicsDomainError("Schatten exponent must be > 0, got %r" % (self.param,))
            object.__setattr__(self, "param", float(self.param))
        elif self.kind == "kyfan":
            if self.param is None or int(self.param) != self.param or self.param < 1:
                raise HarmonicsDomainError("Ky Fan index must be a positive integer, got %r" % (self.param,))
            object.__setattr__(self, "param", int(self.param))
        elif self.kind == "operator":
            object.__setattr__(self, "param", None)
        else:
            raise HarmonicsUsageError("unknown norm kind %r" % (self.kind,))

    @classmethod
    def schatten(cls, p):
        return cls("schatten", p)

    @classmethod
    def kyfan(cls, n):
        return cls("kyfan", n)

    @classmethod
    def operator(cls):
        return cls("operator")

    @classmethod
    def parse(cls, text):
        """'schatten:<p>', 'trace', 'frobenius', 'kyfan:<n>' or 'operator'."""
        text = text.strip().lower()
        if text == "operator":
            return cls.operator()
        if text == "trace":
            return cls.schatten(1)
        if text == "frobenius":
            return cls.schatten(2)
        name, _, value = text.partition(":")
        try:
            if name == "schatten":
                return cls.schatten(float(value))
            if name == "kyfan":
                return cls.kyfan(int(value))
        except ValueError:
            pass
        raise HarmonicsUsageError("cannot parse norm %r" % (text,))

    @property
    def is_quasinorm(self):
        return self.kind == "schatten" and self.param < 1

    def __str__(self):
        if self.kind == "operator":
            return "operator"
        return "%s:%s" % (self.kind, self.param)


class ScalarFunction:
    """
    phi: [0, inf) -> [0, inf) with a declared shape. phi(0) = 0 and the
    declared convexity are spot-checked at construction, never inferred.
    """

    def __init__(self, func, shape, tag=None, check=True):
        if shape not in SHAPES:
            raise HarmonicsDomainError("undeclared or unknown function shape %r" % (shape,))
        self.func = func
        self.shape = shape
        self.tag = tag
        if check:
            self.__spot_check()

    def __call__(self, t):
        return np.asarray(self.func(np.asarray(t, dtype=float)), dtype=float)

    @property
    def convex(self):
        return self.shape == CONVEX_ZERO

    def __spot_check(self):
        if abs(float(self(0.0))) > 1e-12:
            raise HarmonicsDomainError("phi(0) = %r, expected 0" % (float(self(0.0)),))

        rng = np.random.default_rng(20260419)
        a = rng.uniform(0.0, 10.0, 64)
        b = rng.uniform(0.0, 10.0, 64)
        lam = rng.uniform(0.0, 1.0, 64)
        mixed = self(lam * a + (1 - lam) * b)
        chord = lam * self(a) + (1 - lam) * self(b)
        slack = 1e-9 * (1 + np.abs(chord))
        if self.convex:
            ok = np.all(mixed <= chord + slack)
        else:
            ok = np.all(mixed >= chord - slack) and self(1e12) > self(1e6)
        if not ok:
            raise HarmonicsDomainError("phi %s does not behave as declared %s" % (self.tag or self.func, self.shape))

    @classmethod
    def power(cls, exponent):
        exponent = float(exponent)
        if exponent <= 0:
            raise HarmonicsDomainError("power exponent must be > 0, got %r" % (exponent,))
        shape = CONVEX_ZERO if exponent >= 1 else CONCAVE_ZERO_INF
        return cls(lambda t: np.power(np.maximum(t, 0.0), exponent), shape, tag="power:%r" % (exponent,))

    @classmethod
    def parse(cls, tag):
        """'power:<exp>', 'sqrt', 'square' or 'identity'."""
        tag = tag.strip().lower()
        if tag == "sqrt":
            return cls.power(0.5)
        if tag == "square":
            return cls.power(2.0)
        if tag == "identity":
            return cls.power(1.0)
        name, _, value = tag.partition(":")
        if name == "power":
            try:
                return cls.power(float(value))
            except ValueError:
                pass
        raise HarmonicsUsageError("cannot parse scalar function %r" % (tag,))

    def __repr__(self):
        return "ScalarFunction(%s, %s)" % (self.tag, self.shape)


def singular_values(A):
    """Nonincreasing singular values; values below 1e-12 * s_1 clamp to 0."""
    A = as_matrix(A)
    if A.size == 0:
        return SingularSpectrum(np.zeros(0))
    try:
        s = scipy.linalg.svdvals(A)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise HarmonicsNumericError("singular value decomposition failed (%s): %s" % (e, _diagnostics(A)))

    s = np.sort(np.maximum(s, 0.0))[::-1]
    if len(s) and s[0] > 0:
        s[s < CLAMP_RELATIVE * s[0]] = 0.0
    return SingularSpectrum(s)


def abs_operator(A):
    """|A| = (A^* A)^{1/2}, cols x cols, Hermitian PSD."""
    A = as_matrix(A)
    try:
        _, s, vh = scipy.linalg.svd(A, full_matrices=False)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise HarmonicsNumericError("singular value decomposition failed (%s): %s" % (e, _diagnostics(A)))

    P = (vh.conj().T * s) @ vh
    return (P + P.conj().T) / 2


def polar_decomposition(A):
    """
    A = U P with P = |A| and U unitary. On rank-deficient A the SVD-based
    factor already completes U on the kernel with an orthonormal basis.
    """
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise HarmonicsUsageError("polar decomposition needs a square matrix, got %s" % (A.shape,))
    try:
        U, _ = scipy.linalg.polar(A, side="right")
    except (np.linalg.LinAlgError, ValueError) as e:
        raise HarmonicsNumericError("polar decomposition failed (%s): %s" % (e, _diagnostics(A)))
    return U, abs_operator(A)


def schatten_power(A, p):
    """||A||_p^p = sum_j s_j(A)^p, without the final root."""
    if not p > 0:
        raise HarmonicsDomainError("Schatten exponent must be > 0, got %r" % (p,))
    s = singular_values(A).values
    s = s[s > 0]
    return float(np.sum(s ** p))


def norm_of_spectrum(s, kind):
    if kind.kind == "operator":
        return float(s[0]) if len(s) else 0.0
    if kind.kind == "kyfan":
        return float(np.sum(s[:kind.param]))
    positive = s[s > 0]
    return float(np.sum(positive ** kind.param) ** (1.0 / kind.param))


def norm(A, kind):
    """||A||_p, ||A||_(n) or ||A||, selected by kind."""
    if not isinstance(kind, NormKind):
        kind = NormKind.parse(kind)
    return norm_of_spectrum(singular_values(A).values, kind)


def is_hermitian(A, tol=HERMITIAN_TOLERANCE):
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        return False
    return bool(np.max(np.abs(A - A.conj().T), initial=0.0) <= tol * (1 + np.max(np.abs(A), initial=0.0)))


def is_psd(A, tol=HERMITIAN_TOLERANCE):
    A = as_matrix(A)
    if not is_hermitian(A, tol):
        return False
    w = scipy.linalg.eigvalsh((A + A.conj().T) / 2)
    return bool(w[0] >= -tol * (1 + abs(w[-1]))) if len(w) else True


def apply_scalar_function(A, phi):
    """phi(A) through the eigendecomposition of a Hermitian PSD A."""
    A = as_matrix(A)
    if not is_hermitian(A):
        raise HarmonicsDomainError("spectral calculus needs a Hermitian matrix: %s" % (_diagnostics(A)))

    H = (A + A.conj().T) / 2
    try:
        w, V = scipy.linalg.eigh(H)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise HarmonicsNumericError("eigendecomposition failed (%s): %s" % (e, _diagnostics(A)))

    if len(w) and w[0] < -HERMITIAN_TOLERANCE * (1 + abs(w[-1])):
        raise HarmonicsDomainError("matrix is not positive semidefinite, smallest eigenvalue %.3g" % (w[0]))

    fw = phi(np.maximum(w, 0.0))
    R = (V * fw) @ V.conj().T
    return (R + R.conj().T) / 2


def kyfan_dominance_check(A, B):
    """True iff ||A||_(n) <= ||B||_(n) for every n."""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise HarmonicsUsageError("dominance needs equal shapes, got %s and %s" % (A.shape, B.shape))
    ca = np.cumsum(singular_values(A).values)
    cb = np.cumsum(singular_values(B).values)
    if len(cb) == 0:
        return True
    tol = 1e-9 * (1 + cb[-1])
    return bool(np.all(ca <= cb + tol))


def _require_norm(kind):
    if not isinstance(kind, NormKind):
        kind = NormKind.parse(kind)
    if kind.is_quasinorm:
        raise HarmonicsDomainError("Schatten p = %g < 1 is a quasinorm, not a unitarily invariant norm" % (kind.param))
    return kind


def _require_psd(parts):
    matrices = []
    for A in parts:
        A = as_matrix(A)
        if not is_psd(A):
            raise HarmonicsDomainError("expected positive semidefinite matrices: %s" % (_diagnostics(A)))
        matrices.append((A + A.conj().T) / 2)
    if not matrices:
        raise HarmonicsUsageError("at least one matrix is required")
    return matrices


def operator_jensen_check(field, phi, kind):
    """
    |||phi(sum_t w_t A_t)||| <= |||sum_t w_t phi(A_t)||| for convex phi,
    reversed for concave phi. field is a list of (weight, PSD matrix).
    """
    kind = _require_norm(kind)
    weights = np.array([float(w) for w, _ in field])
    if np.any(weights <= 0) or abs(weights.sum() - 1.0) > 1e-12:
        raise HarmonicsDomainError("Jensen weights must be positive and sum to 1, got sum %r" % (weights.sum(),))
    matrices = _require_psd([A for _, A in field])

    mean = sum(w * A for w, A in zip(weights, matrices))
    lhs = norm(apply_scalar_function(mean, phi), kind)
    rhs = norm(sum(w * apply_scalar_function(A, phi) for w, A in zip(weights, matrices)), kind)

    direction = LESS_EQUAL if phi.convex else GREATER_EQUAL
    params = {"phi": phi.tag, "norm": str(kind), "points": len(matrices), "dim": matrices[0].shape[0]}
    return make_report("jensen", lhs, rhs, direction, params)


def convex_sum_check(parts, phi, kind):
    """
    |||sum_n phi(A_n)||| <= |||phi(sum_n A_n)||| for convex phi, reversed
    for concave phi.
    """
    kind = _require_norm(kind)
    matrices = _require_psd(parts)

    lhs = norm(sum(apply_scalar_function(A, phi) for A in matrices), kind)
    rhs = norm(apply_scalar_function(sum(matrices), phi), kind)

    direction = LESS_EQUAL if phi.convex else GREATER_EQUAL
    params = {"phi": phi.tag, "norm": str(kind), "parts": len(matrices), "dim": matrices[0].shape[0]}
    return make_report("convex-sum", lhs, rhs, direction, params)
