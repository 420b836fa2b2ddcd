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
#       Checkers for the operator Clarkson-McCarthy family over a finite
#       abelian group with normalized Haar measure, their cyclic, Littlewood,
#       two-point and circle corollaries in published constants, and
#       constructors of the fields on which they are tight.
#
#       Every checker returns an InequalityReport; none of them raises on a
#       violated inequality, only on invalid parameters.
#

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from harmonics.Driver import HarmonicsDomainError, HarmonicsNumericError, HarmonicsUsageError
from harmonics.utils.Fourier import OperatorField, fourier_coefficients, parseval_check
from harmonics.utils.Group import GroupSpec, character_table, check_cap, enumerate_characters, littlewood_matrix, \
    node_angles
from harmonics.utils.Operator import ScalarFunction, _require_norm, abs_operator, apply_scalar_function, norm, \
    schatten_power
from harmonics.utils.Report import GREATER_EQUAL, LESS_EQUAL, make_report

logger = logging.getLogger(__name__)

CROSS_CHECK_RELATIVE = 1e-9


def conjugate_exponent(p):
    if not p > 1:
        raise HarmonicsDomainError("p = %r has no finite conjugate exponent, q = p/(p-1) needs p > 1" % (p,))
    return p / (p - 1.0)


def _schatten_powers(values, p):
    return np.array([schatten_power(A, p) for A in values])


def _params(field, **extra):
    params = {"group": str(field.group), "dim": field.dim}
    params.update(extra)
    return params


def _squared(A):
    return A.conj().T @ A


def check_uin_convex(field, phi, kind):
    """
    |||sum_k phi(|B_k|^2)||| <= |||int phi(|A_theta|^2)||| for convex phi
    with phi(0) = 0, reversed for concave phi with phi(inf) = inf.

    params["middle"] carries |||phi(sum_k |B_k|^2)|||, the term both
    halves of the chain pass through.
    """
    if not isinstance(phi, ScalarFunction):
        raise HarmonicsUsageError("phi must be a ScalarFunction with a declared shape, got %r" % (phi,))
    kind = _require_norm(kind)
    coeffs = fourier_coefficients(field)

    lhs = norm(sum(apply_scalar_function(_squared(B), phi) for B in coeffs.values), kind)
    middle = norm(apply_scalar_function(sum(_squared(B) for B in coeffs.values), phi), kind)
    rhs = norm(sum(apply_scalar_function(_squared(A), phi) for A in field.values) / field.order, kind)

    direction = LESS_EQUAL if phi.convex else GREATER_EQUAL
    return make_report("uin-convex", lhs, rhs, direction,
                       _params(field, phi=phi.tag, norm=str(kind), middle=middle), digest=field.digest())


def check_pp(field, p):
    """
    sum_k ||B_k||_p^p <= int ||A_theta||_p^p for p >= 2; reversed for
    0 < p < 2, where p < 1 is the quasinorm regime.
    """
    if not p > 0:
        raise HarmonicsDomainError("check_pp needs p > 0, got %r" % (p,))
    p = float(p)
    lhs = float(np.sum(_schatten_powers(fourier_coefficients(field).values, p)))
    rhs = float(np.mean(_schatten_powers(field.values, p)))
    direction = LESS_EQUAL if p >= 2 else GREATER_EQUAL
    return make_report("pp", lhs, rhs, direction, _params(field, p=p), digest=field.digest(), quasinorm=p < 1)


def normalize_weights(group, weights):
    """
    Character weights as Fractions in lexicographic character order.

    weights is a sequence in that order or a mapping from Character; every
    weight must be positive and the sum exactly 1 (floats within 1e-12).
    """
    if isinstance(weights, dict):
        lookup = weights
        weights = []
        for k in enumerate_characters(group):
            if k not in lookup:
                raise HarmonicsDomainError("no weight for character %s" % (k))
            weights.append(lookup[k])
    weights = list(weights)
    if len(weights) != group.order:
        raise HarmonicsDomainError("%s has %d characters, got %d weights" % (group, group.order, len(weights)))

    exact = all(isinstance(w, (int, Fraction)) for w in weights)
    if exact:
        weights = [Fraction(w) for w in weights]
        total = sum(weights)
        if total != 1:
            raise HarmonicsDomainError("character weights must sum to exactly 1, got %s" % (total))
    else:
        total = math.fsum(float(w) for w in weights)
        if abs(total - 1.0) > 1e-12:
            raise HarmonicsDomainError("character weights must sum to 1, got %r" % (total))
    if any(w <= 0 for w in weights):
        raise HarmonicsDomainError("character weights must be positive")
    return weights


def uniform_weights(group):
    return [Fraction(1, group.order)] * group.order


def check_alpha(field, p, weights):
    """||int |A_theta| ||_p^p <= sum_k alpha_k^{1 - p/2} ||B_k||_p^p for p >= 2."""
    if not p >= 2:
        raise HarmonicsDomainError("check_alpha needs p >= 2, got %r" % (p,))
    p = float(p)
    weights = normalize_weights(field.group, weights)

    mean_abs = sum(abs_operator(A) for A in field.values) / field.order
    lhs = schatten_power(mean_abs, p)
    alpha = np.array([float(w) for w in weights])
    rhs = float(np.sum(alpha ** (1.0 - p / 2.0) * _schatten_powers(fourier_coefficients(field).values, p)))

    params = _params(field, p=p, alpha=[str(w) for w in weights])
    return make_report("alpha", lhs, rhs, LESS_EQUAL, params, digest=field.digest())


def check_pq(field, p):
    """sum_k ||B_k||_p^q <= (int ||A_theta||_p^p)^{q/p} for 1 < p <= 2."""
    if p == 1:
        raise HarmonicsDomainError("check_pq is undefined at p = 1: the conjugate exponent q = p/(p-1) is infinite")
    if not 1 < p <= 2:
        raise HarmonicsDomainError("check_pq needs 1 < p <= 2, got %r" % (p,))
    p = float(p)
    q = conjugate_exponent(p)

    lhs = float(np.sum(_schatten_powers(fourier_coefficients(field).values, p) ** (q / p)))
    rhs = float(np.mean(_schatten_powers(field.values, p)) ** (q / p))
    return make_report("pq", lhs, rhs, LESS_EQUAL, _params(field, p=p, q=q), digest=field.digest())


def check_qp(field, p):
    """sum_k ||B_k||_p^p <= (int ||A_theta||_p^q)^{p/q} for p >= 2."""
    if not p >= 2:
        raise HarmonicsDomainError("check_qp needs p >= 2, got %r" % (p,))
    p = float(p)
    q = conjugate_exponent(p)

    lhs = float(np.sum(_schatten_powers(fourier_coefficients(field).values, p)))
    rhs = float(np.mean(_schatten_powers(field.values, p) ** (q / p)) ** (p / q))
    return make_report("qp", lhs, rhs, LESS_EQUAL, _params(field, p=p, q=q), digest=field.digest())


@dataclass(frozen=True)
class CheckSpec:
    """A checker name with its exponent, written 'pp@3' on the command line."""
    name: str
    p: float = None

    @classmethod
    def parse(cls, text, default_p=None):
        name, sep, value = text.strip().partition("@")
        name = name.strip().lower()
        if name not in CHECKERS:
            raise HarmonicsUsageError("unknown checker %r, expected one of %s" % (name, ", ".join(sorted(CHECKERS))))
        if sep:
            try:
                p = float(Fraction(value.strip()))
            except (ValueError, ZeroDivisionError):
                raise HarmonicsUsageError("cannot parse exponent in %r" % (text))
        else:
            p = default_p
        if name in EXPONENT_CHECKERS and p is None:
            raise HarmonicsUsageError("checker %r needs an exponent, use %s@<p> or --p" % (name, name))
        return cls(name, None if p is None else float(p))

    def __str__(self):
        return self.name if self.p is None else "%s@%g" % (self.name, self.p)


EXPONENT_CHECKERS = ("pp", "pq", "qp", "alpha")
CHECKERS = EXPONENT_CHECKERS + ("uin-convex", "parseval")


def run_check(spec, field, weights=None, phi=None, kind=None):
    """Dispatches one CheckSpec against a field."""
    if spec.name == "pp":
        return check_pp(field, spec.p)
    if spec.name == "pq":
        return check_pq(field, spec.p)
    if spec.name == "qp":
        return check_qp(field, spec.p)
    if spec.name == "alpha":
        return check_alpha(field, spec.p, uniform_weights(field.group) if weights is None else weights)
    if spec.name == "uin-convex":
        if phi is None:
            phi = ScalarFunction.power(spec.p / 2.0) if spec.p is not None else ScalarFunction.parse("square")
        return check_uin_convex(field, phi, kind or "trace")
    if spec.name == "parseval":
        return parseval_check(field)
    raise HarmonicsUsageError("unknown checker %r" % (spec.name))


@dataclass(frozen=True)
class CorollaryForm:
    """
    One published corollary: the family fixes the group and the transform,
    theorem is the normalized checker it reduces to, and the powers of the
    base (|G| or 2 pi) convert normalized sides into published ones.

    uin-convex forms are one link of a chain through |||phi(sum_j |A_j|^2)|||;
    left selects the link below that middle term.
    """
    name: str
    family: str
    theorem: str
    left: bool = False
    constant: object = None
    rhs_power: object = None
    power_phi: bool = False


COROLLARIES = {
    form.name: form for form in (
        CorollaryForm("cyclic-pp-right", "cyclic", "pp"),
        CorollaryForm("cyclic-pp-left", "cyclic", "pp", left=True),
        CorollaryForm("cyclic-pq", "cyclic", "pq"),
        CorollaryForm("cyclic-qp", "cyclic", "qp"),
        CorollaryForm("cyclic-bk-left", "cyclic", "uin-convex", left=True, power_phi=True),
        CorollaryForm("cyclic-bk-right", "cyclic", "uin-convex", power_phi=True),
        CorollaryForm("cyclic-uin-left", "cyclic", "uin-convex", left=True),
        CorollaryForm("cyclic-uin-right", "cyclic", "uin-convex"),
        CorollaryForm("littlewood-pp", "littlewood", "pp"),
        CorollaryForm("littlewood-pq", "littlewood", "pq"),
        CorollaryForm("littlewood-qp", "littlewood", "qp"),
        CorollaryForm("clarkson-pp-right", "clarkson", "pp"),
        CorollaryForm("clarkson-pp-left", "clarkson", "pp", left=True),
        CorollaryForm("clarkson-qp", "clarkson", "qp"),
        CorollaryForm("clarkson-pq", "clarkson", "pq",
                      constant=lambda base, p, q: 2.0 ** (q - 1), rhs_power=lambda p, q: 2 * q - 2),
        CorollaryForm("circle-pp", "circle", "pp"),
        CorollaryForm("circle-pq", "circle", "pq"),
        CorollaryForm("circle-qp", "circle", "qp"),
        CorollaryForm("circle-alpha", "circle", "alpha"),
    )
}


def _corollary_group(form, n, cap=None):
    check_cap(n, cap)
    if form.family == "cyclic":
        if n < 2:
            raise HarmonicsDomainError("%s needs at least 2 matrices, got %d" % (form.name, n))
        return GroupSpec((n,))
    if form.family == "clarkson":
        if n != 2:
            raise HarmonicsDomainError("%s takes exactly 2 matrices (f, g), got %d" % (form.name, n))
        return GroupSpec((2,))
    if form.family == "littlewood":
        m = n.bit_length() - 1
        if n < 2 or n != 2 ** m:
            raise HarmonicsDomainError("%s needs 2^n matrices, got %d" % (form.name, n))
        return GroupSpec((2,) * m)
    return GroupSpec((n,), circle=True)


def _transform(form, group, A, cap=None):
    """C_k in published normalization, plus the measure of each point."""
    n = group.order
    if form.family == "circle":
        angles = node_angles(group)
        T = np.exp(-1j * np.outer(np.arange(n), angles))
        mass = 2.0 * np.pi / n
        return mass * np.einsum("kj,jab->kab", T, A), mass, 2.0 * np.pi
    if form.family == "littlewood":
        T = littlewood_matrix(group.rank, cap).astype(complex)
    else:
        T = character_table(group, cap)
    return np.einsum("kj,jab->kab", T, A), 1.0, float(n)


def _published(form, p, q, C, A, mass, base, alpha=None):
    if form.left:
        return base * mass * np.sum(_schatten_powers(A, p)), np.sum(_schatten_powers(C, p))
    if form.theorem == "alpha":
        lhs = schatten_power(mass * sum(abs_operator(M) for M in A), p)
        return lhs, np.sum(alpha ** (1.0 - p / 2.0) * _schatten_powers(C, p))
    constant = form.constant(base, p, q) if form.constant else None
    if form.theorem == "pp":
        c = base ** (p - 1) if constant is None else constant
        return np.sum(_schatten_powers(C, p)), c * mass * np.sum(_schatten_powers(A, p))
    c = base if constant is None else constant
    if form.theorem == "pq":
        return np.sum(_schatten_powers(C, p) ** (q / p)), \
            c * (mass * np.sum(_schatten_powers(A, p))) ** (q / p)
    return np.sum(_schatten_powers(C, p)), c * (mass * np.sum(_schatten_powers(A, p) ** (q / p))) ** (p / q)


def _conversion(form, p, q):
    """(lhs, rhs) exponents of the base taking normalized sides to published ones."""
    if form.theorem == "uin-convex":
        return 0.0, 0.0
    if form.left:
        return 1.0, 1.0
    lhs = q if form.theorem == "pq" else p
    rhs = form.rhs_power(p, q) if form.rhs_power else lhs
    return lhs, rhs


def _agrees(a, b):
    return abs(a - b) <= CROSS_CHECK_RELATIVE * max(1.0, abs(a), abs(b))


def _uin_published(form, group, A, C, p, phi, kind):
    """
    Published sides of one uin-convex link, with C_k = sum_j w^{jk} A_j:

        |||sum_k phi(|C_k|^2 / n)||| <= |||phi(sum_j |A_j|^2)||| <= (1/n) |||sum_k phi(|C_k|^2)|||

    The power forms use phi(t) = t^{p/2} written as n^{-p/2} |||sum_k |C_k|^p|||.
    """
    n = group.order
    middle = norm(apply_scalar_function(sum(_squared(M) for M in A), phi), kind)
    if form.power_phi:
        power = ScalarFunction.power(p)
        outer = norm(sum(apply_scalar_function(abs_operator(M), power) for M in C), kind)
        return (n ** (-p / 2.0) * outer, middle) if form.left else (middle, outer / n)
    if form.left:
        return norm(sum(apply_scalar_function(_squared(M) / n, phi) for M in C), kind), middle
    return middle, norm(sum(apply_scalar_function(_squared(M), phi) for M in C), kind) / n


def _uin_normalized(form, group, A, C, phi, kind):
    """
    The link as a step of check_uin_convex: the left link on sqrt(n) A, whose
    coefficients are C_{-k} / sqrt(n); the right link on C, whose coefficients
    are A_j.
    """
    if form.left:
        report = check_uin_convex(OperatorField(group, np.sqrt(group.order) * A), phi, kind)
        return report, report.lhs, report.params["middle"]
    report = check_uin_convex(OperatorField(group, C), phi, kind)
    return report, report.params["middle"], report.rhs


def _uin_phi(form, p, phi):
    if form.power_phi or phi is None:
        if p is None or not p > 0:
            raise HarmonicsDomainError("%s needs p > 0, got %r" % (form.name, p))
        return ScalarFunction.power(p / 2.0)
    if not isinstance(phi, ScalarFunction):
        raise HarmonicsUsageError("phi must be a ScalarFunction with a declared shape, got %r" % (phi,))
    return phi


def _mismatch(name, theorem, group, lhs, lhs_converted, rhs, rhs_converted):
    raise HarmonicsNumericError("[%s] %s disagrees with normalized %s: lhs %.12g vs %.12g, rhs %.12g vs %.12g" %
                                (group, name, theorem, lhs, lhs_converted, rhs, rhs_converted))


def check_corollary(name, matrices, p, weights=None, phi=None, kind=None, cap=None):
    """
    Evaluates a named corollary on a tuple of matrices with its published
    constants and asserts it equals the normalized theorem on the induced
    field after the documented conversion. Raises HarmonicsNumericError when
    the two disagree.

    weights feed circle-alpha (uniform when omitted); phi and kind feed the
    cyclic-uin forms (phi defaults to t^{p/2}, kind to the trace norm).
    """
    form = COROLLARIES.get(name)
    if form is None:
        raise HarmonicsUsageError("unknown corollary %r, expected one of %s" % (name, ", ".join(COROLLARIES)))

    A = np.array([np.asarray(M, dtype=complex) for M in matrices])
    if A.ndim != 3 or A.shape[1] != A.shape[2]:
        raise HarmonicsUsageError("%s needs a tuple of square matrices of one size" % (name))
    if p is None and form.theorem != "uin-convex":
        raise HarmonicsUsageError("corollary %s needs an exponent" % (name))
    group = _corollary_group(form, len(A), cap)
    p = None if p is None else float(p)
    q = conjugate_exponent(p) if p is not None and p > 1 else None

    C, mass, base = _transform(form, group, A, cap)
    lhs_power, rhs_power = _conversion(form, p, q)
    params = {"group": str(group), "dim": A.shape[1], "p": p, "theorem": form.theorem,
              "lhs_power": lhs_power, "rhs_power": rhs_power}

    if form.theorem == "uin-convex":
        phi = _uin_phi(form, p, phi)
        kind = _require_norm(kind or "trace")
        lhs, rhs = _uin_published(form, group, A, C, p, phi, kind)
        normalized, normalized_lhs, normalized_rhs = _uin_normalized(form, group, A, C, phi, kind)
        if not (_agrees(lhs, normalized_lhs) and _agrees(rhs, normalized_rhs)):
            _mismatch(name, form.theorem, group, lhs, normalized_lhs, rhs, normalized_rhs)
        params.update({"phi": phi.tag, "norm": str(kind),
                       "normalized_lhs": normalized_lhs, "normalized_rhs": normalized_rhs})
        logger.debug("[%s] Inequality: %s lhs %.6g rhs %.6g" % (group, name, lhs, rhs))
        return make_report(name, lhs, rhs, normalized.direction, params,
                           digest=OperatorField(group, A).digest())

    alpha = None
    if form.left:
        normalized = check_pp(OperatorField(group, C), p)
    elif form.theorem == "alpha":
        weights = normalize_weights(group, uniform_weights(group) if weights is None else weights)
        normalized = check_alpha(OperatorField(group, A), p, weights)
        alpha = np.array([float(w) for w in weights])
        params["alpha"] = [str(w) for w in weights]
    else:
        normalized = {"pp": check_pp, "pq": check_pq, "qp": check_qp}[form.theorem](OperatorField(group, A), p)

    lhs, rhs = _published(form, p, q, C, A, mass, base, alpha)
    lhs_converted = base ** lhs_power * normalized.lhs
    rhs_converted = base ** rhs_power * normalized.rhs
    if not (_agrees(lhs, lhs_converted) and _agrees(rhs, rhs_converted)):
        _mismatch(name, form.theorem, group, lhs, lhs_converted, rhs, rhs_converted)

    params.update({"normalized_lhs": normalized.lhs, "normalized_rhs": normalized.rhs})
    if q is not None:
        params["q"] = q
    logger.debug("[%s] Inequality: %s lhs %.6g rhs %.6g" % (group, name, lhs, rhs))
    return make_report(name, lhs, rhs, normalized.direction, params, digest=normalized.input_digest,
                       quasinorm=p < 1)


WITNESS_TARGETS = {
    "constant-field": CheckSpec("pp", 4.0),
    "single-character": CheckSpec("qp", 3.0),
    "single-support": CheckSpec("cyclic-pp-left", 4.0),
    "p-equals-2": CheckSpec("pp", 2.0),
}


def _witness_matrix(dim, seed):
    rng = np.random.default_rng(seed)
    return (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)


def equality_witness(name, group, dim, seed=0):
    """A field on which the checker named by WITNESS_TARGETS[name] is tight."""
    if name not in WITNESS_TARGETS:
        raise HarmonicsUsageError("unknown witness %r, expected one of %s" % (name, ", ".join(WITNESS_TARGETS)))
    if dim < 1:
        raise HarmonicsDomainError("dimension must be >= 1, got %r" % (dim,))

    M = _witness_matrix(dim, seed)
    if name == "constant-field":
        return OperatorField.constant(group, M)
    if name == "single-character":
        k0 = character_table(group)[-1]
        return OperatorField(group, k0[:, None, None] * M[None, :, :])
    if name == "single-support":
        if group.rank != 1 or group.circle:
            raise HarmonicsDomainError("single-support witnesses are tuples over a cyclic group, got %s" % (group))
        values = np.zeros((group.order, dim, dim), dtype=complex)
        values[0] = M
        return OperatorField(group, values)
    rng = np.random.default_rng(seed)
    return OperatorField(group, (rng.standard_normal((group.order, dim, dim)) +
                                 1j * rng.standard_normal((group.order, dim, dim))) / np.sqrt(2.0))


def witness_report(name, field, p=None):
    """Runs the checker a witness is built for, p overriding its default exponent."""
    target = WITNESS_TARGETS[name]
    p = target.p if p is None else float(p)
    if name == "p-equals-2":
        p = 2.0
    if target.name in COROLLARIES:
        return check_corollary(target.name, list(field.values), p)
    return run_check(CheckSpec(target.name, p), field)
