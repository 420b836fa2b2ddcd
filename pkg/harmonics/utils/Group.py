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
#       Finite abelian groups as products of cyclic groups: elements,
#       characters, Haar weights, character tables, Littlewood matrices
#       and the uniform discretization of the circle group.
#
#       The dual group is identified with the group itself coordinatewise,
#       k(theta) = exp(2 pi i sum_i k_i theta_i / n_i). Elements and
#       characters are always listed lexicographically in declaration
#       order of the cyclic factors, identity first.
#

from __future__ import annotations

import itertools
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from harmonics.Driver import HarmonicsCapError, HarmonicsDomainError, HarmonicsUsageError, getGroupOrderCap

logger = logging.getLogger(__name__)


_factor_re = re.compile(r"^Z(\d+)(?:\^(\d+))?$", re.IGNORECASE)
_circle_re = re.compile(r"^T@(\d+)$", re.IGNORECASE)


@dataclass(frozen=True)
class GroupElement:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Character:
    """A character of the group, named by an element of the (self-)dual."""
    index: GroupElement

    def __str__(self):
        return "k" + str(self.index)


@dataclass(frozen=True)
class HaarWeight:
    weight: Fraction


@dataclass(frozen=True)
class GroupSpec:
    """
    Z_{n_1} x ... x Z_{n_m}. A circle spec is Z_N whose elements stand for
    the quadrature nodes 2 pi m / N of the circle group.
    """
    cyclic_orders: tuple
    circle: bool = False

    def __post_init__(self):
        orders = tuple(int(n) for n in self.cyclic_orders)
        if len(orders) == 0:
            raise HarmonicsDomainError("a group needs at least one cyclic factor")
        for n in orders:
            if n < 2:
                raise HarmonicsDomainError("cyclic factor Z%d is trivial, orders must be >= 2" % (n))
        if self.circle and len(orders) != 1:
            raise HarmonicsDomainError("a circle discretization has exactly one cyclic factor")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def order(self):
        return math.prod(self.cyclic_orders)

    @property
    def rank(self):
        return len(self.cyclic_orders)

    @property
    def dual(self):
        return self

    @property
    def shape(self):
        return self.cyclic_orders

    def element(self, coords):
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise HarmonicsUsageError("element %r does not match group %s" % (coords, self))
        return GroupElement(tuple(int(c) % n for c, n in zip(coords, self.cyclic_orders)))

    def character(self, coords):
        return Character(self.element(coords))

    @property
    def identity(self):
        return GroupElement((0,) * self.rank)

    def add(self, a, b):
        return self.element(x + y for x, y in zip(a.coords, b.coords))

    def negate(self, a):
        return self.element(-x for x in a.coords)

    def conjugate(self, k):
        """conj(k(theta)) = (-k)(theta)."""
        return Character(self.negate(k.index))

    def contains(self, a):
        return len(a.coords) == self.rank and \
            all(0 <= c < n for c, n in zip(a.coords, self.cyclic_orders))

    def index_of(self, a):
        """Position of an element (or character index) in lexicographic order."""
        if isinstance(a, Character):
            a = a.index
        if not self.contains(a):
            raise HarmonicsUsageError("element %s is not in %s" % (a, self))
        return int(np.ravel_multi_index(a.coords, self.cyclic_orders))

    def __str__(self):
        if self.circle:
            return "T@%d" % (self.cyclic_orders[0])
        orders = self.cyclic_orders
        if len(orders) > 1 and len(set(orders)) == 1:
            return "Z%d^%d" % (orders[0], len(orders))
        return "x".join("Z%d" % (n) for n in orders)


def parse_group(text, cap=None):
    """
    Parses "Z6", "Z2^3", "Z2xZ4", "Z2^2xZ3" or "T@64" (circle, 64 nodes).

    Raises HarmonicsUsageError on syntax errors and HarmonicsCapError when
    the order exceeds the configured cap.
    """
    if not isinstance(text, str) or not text.strip():
        raise HarmonicsUsageError("missing group specification")

    text = text.strip()
    circle = _circle_re.match(text)
    if circle:
        spec = GroupSpec((int(circle.group(1)),), circle=True)
    else:
        limit = getGroupOrderCap(cap)
        orders = []
        order = 1
        for factor in text.split("x") if "x" in text else text.split("X"):
            match = _factor_re.match(factor.strip())
            if match is None:
                raise HarmonicsUsageError("cannot parse group factor %r in %r" % (factor, text))
            power = int(match.group(2)) if match.group(2) is not None else 1
            if power < 1:
                raise HarmonicsUsageError("exponent must be >= 1 in %r" % (text))
            n = int(match.group(1))
            if n < 2:
                raise HarmonicsDomainError("cyclic factor Z%d is trivial, orders must be >= 2" % (n))
            for _ in range(power):
                order *= n
                check_cap(order, limit)
                orders.append(n)
        spec = GroupSpec(tuple(orders))

    check_cap(spec.order, cap)
    logger.debug("[localhost] Group: parsed %r as %s, order %d" % (text, spec, spec.order))
    return spec


def check_cap(order, cap=None):
    limit = getGroupOrderCap(cap)
    if order > limit:
        raise HarmonicsCapError("group order %d exceeds the cap %d" % (order, limit))


def enumerate_elements(spec):
    """All elements in lexicographic order, identity first."""
    return [GroupElement(c) for c in itertools.product(*(range(n) for n in spec.cyclic_orders))]


def enumerate_characters(spec):
    return [Character(e) for e in enumerate_elements(spec.dual)]


def haar_weight(spec):
    return HaarWeight(Fraction(1, spec.order))


def haar_weights(spec):
    w = haar_weight(spec)
    return [w for _ in range(spec.order)]


_QUARTER_TURNS = (1.0 + 0j, 1j, -1.0 + 0j, -1j)


def _roots_of_unity(L):
    """exp(2 pi i s / L) for s = 0..L-1, exact at the quarter turns."""
    roots = np.exp(2j * np.pi * np.arange(L) / L)
    for quarter, value in enumerate(_QUARTER_TURNS):
        if (quarter * L) % 4 == 0:
            roots[(quarter * L) // 4] = value
    return roots


def _root_of_unity(s, L):
    quarter, rem = divmod(4 * s, L)
    if rem == 0:
        return _QUARTER_TURNS[quarter]
    return complex(np.exp(2j * np.pi * s / L))


def _phase_numerators(spec, index_coords, element_coords):
    L = math.lcm(*spec.cyclic_orders)
    scale = np.array([L // n for n in spec.cyclic_orders], dtype=np.int64)
    k = np.asarray(index_coords, dtype=np.int64) * scale
    theta = np.asarray(element_coords, dtype=np.int64)
    return L, np.mod(k @ theta.T, L)


def character_value(spec, k, theta):
    """k(theta) as a complex number on the unit circle."""
    if len(k.index.coords) != spec.rank or len(theta.coords) != spec.rank:
        raise HarmonicsUsageError("character %s and element %s do not match group %s" % (k, theta, spec))

    L = math.lcm(*spec.cyclic_orders)
    s = sum(a * b * (L // n) for a, b, n in zip(k.index.coords, theta.coords, spec.cyclic_orders)) % L
    return _root_of_unity(s, L)


def character_table(spec, cap=None):
    """
    |G| x |G| matrix T with T[k, theta] = k(theta); rows are characters,
    columns elements, both lexicographic. T conj(T)^T = |G| I.
    """
    check_cap(spec.order, cap)
    coords = np.array([e.coords for e in enumerate_elements(spec)], dtype=np.int64)
    L, s = _phase_numerators(spec, coords, coords)
    return _roots_of_unity(L)[s]


def littlewood_matrix(n, cap=None):
    """
    L_1 = [[1, 1], [1, -1]], L_{n+1} = [[L_n, L_n], [L_n, -L_n]].

    Equals character_table(Z_2^n) entrywise.
    """
    n = int(n)
    if n < 1:
        raise HarmonicsDomainError("Littlewood matrices start at n = 1, got %d" % (n))
    check_cap(2 ** n, cap)

    L = np.array([[1, 1], [1, -1]], dtype=np.int64)
    for _ in range(n - 1):
        L = np.block([[L, L], [L, -L]])
    return L


def circle_discretization(N):
    """
    Z_N standing in for the circle group, plus the node angles 2 pi m / N.

    Characters indexed by m mod N alias e^{i k theta}; the N-point rule is
    exact for trigonometric polynomials of degree < N / 2.
    """
    N = int(N)
    if N < 2:
        raise HarmonicsDomainError("a circle discretization needs at least 2 nodes, got %d" % (N))
    return GroupSpec((N,), circle=True), 2.0 * np.pi * np.arange(N) / N


def node_angles(spec):
    if not spec.circle:
        raise HarmonicsUsageError("%s is not a circle discretization" % (spec))
    return circle_discretization(spec.order)[1]
