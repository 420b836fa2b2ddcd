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
#       Implements InequalityReport, the value every checker returns,
#       and the tolerance policy shared by all of them.
#

from __future__ import annotations

import math
from dataclasses import dataclass, field

from harmonics.Driver import HarmonicsUsageError, getTolerance

LESS_EQUAL = "<="
GREATER_EQUAL = ">="


@dataclass(frozen=True)
class InequalityReport:
    """
    Both sides of one inequality evaluated on one input.

    margin is always rhs - lhs; holds is decided against direction with
    the absolute tolerance stored alongside.
    """
    name: str
    lhs: float
    rhs: float
    margin: float
    holds: bool
    tolerance: float
    direction: str
    params: dict = field(default_factory=dict)
    input_digest: str = None

    @property
    def slack(self):
        """margin oriented so that a holding inequality has slack >= -tolerance."""
        if self.direction == LESS_EQUAL:
            return self.margin
        return -self.margin

    @property
    def ratio(self):
        """Smaller side over larger side as the inequality is stated, 1 when tight."""
        if self.direction == LESS_EQUAL:
            num, den = self.lhs, self.rhs
        else:
            num, den = self.rhs, self.lhs
        if abs(den) <= 1e-300:
            return 1.0 if abs(num) <= 1e-300 else math.inf
        return num / den

    def to_dict(self):
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "holds": self.holds,
            "tolerance": self.tolerance,
            "direction": self.direction,
            "params": dict(self.params),
            "input_digest": self.input_digest,
        }


def make_report(name, lhs, rhs, direction, params=None, digest=None, tolerance=None, quasinorm=False):
    if direction not in (LESS_EQUAL, GREATER_EQUAL):
        raise HarmonicsUsageError("unknown inequality direction %r" % (direction))

    params = dict(params or {})
    p = params.get("p")
    q = params.get("q")
    if p is not None and q is not None and p > 1 and not math.isclose(q, p / (p - 1.0), rel_tol=1e-12):
        raise HarmonicsUsageError("q = %r is not conjugate to p = %r" % (q, p))

    lhs = float(lhs)
    rhs = float(rhs)
    if tolerance is None:
        tolerance = getTolerance(quasinorm) * (1.0 + abs(rhs))

    if direction == LESS_EQUAL:
        holds = lhs <= rhs + tolerance
    else:
        holds = lhs >= rhs - tolerance

    return InequalityReport(name=name, lhs=lhs, rhs=rhs, margin=rhs - lhs, holds=bool(holds),
                            tolerance=float(tolerance), direction=direction, params=params,
                            input_digest=digest)
