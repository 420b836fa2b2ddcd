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
#       Implements HarmonicsCommand class, the base of every command, and
#       RunManifest, the validated record of one command invocation.
#
#       Also holds the getopt front end shared by the bin scripts.
#

import contextlib
import getopt
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from harmonics.Driver import Driver, HarmonicsUsageError
from harmonics.ReturnMsg import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION
from harmonics.Utils import hred, parseReal
from harmonics.utils.Codec import field_from_dict, report_to_json, write_summary_csv
from harmonics.utils.Group import parse_group
from harmonics.utils.Inequality import COROLLARIES, CheckSpec, check_corollary, normalize_weights, run_check
from harmonics.utils.Operator import NormKind, ScalarFunction

COMMANDS = ("verify", "fuzz", "sharpness", "chartable", "witness")
FORMATS = ("json", "csv")

INTEGER_OPTIONS = ("dim", "trials", "seed", "cap", "workers", "restarts")
REAL_OPTIONS = ("p", "q", "r", "s", "budget", "scale")
LIST_OPTIONS = ("check", "input")
FLAG_OPTIONS = ("quiet", "list", "no-store")


@dataclass
class RunManifest:
    command: str
    group: str = None
    dim: int = None
    p: float = None
    q: float = None
    r: float = None
    s: float = None
    checks: list = field(default_factory=list)
    trials: int = None
    seed: int = None
    inputs: list = field(default_factory=list)
    output: str = None
    format: str = "json"
    alpha: str = None
    phi: str = None
    norm: str = None
    cap: int = None

    def validate(self):
        if self.command not in COMMANDS:
            raise HarmonicsUsageError("unknown command %r" % (self.command))
        if self.format not in FORMATS:
            raise HarmonicsUsageError("format must be one of %s, got %r" % (", ".join(FORMATS), self.format))
        if self.q is not None:
            if self.p is None:
                raise HarmonicsUsageError("--q needs --p")
            if not self.p > 1 or not math.isclose(self.q, self.p / (self.p - 1.0), rel_tol=1e-12):
                raise HarmonicsUsageError("q = %g is not conjugate to p = %g" % (self.q, self.p))
        if self.command in ("fuzz", "sharpness") and self.seed is None:
            raise HarmonicsUsageError("%s needs an explicit --seed" % (self.command))
        if self.dim is not None and self.dim < 1:
            raise HarmonicsUsageError("--dim must be >= 1, got %d" % (self.dim))
        if self.trials is not None and self.trials < 0:
            raise HarmonicsUsageError("--trials must be >= 0, got %d" % (self.trials))
        return self


class HarmonicsCommand(Driver):
    """
    Common plumbing of the schatten-harmonics commands: manifest, group
    and input parsing, checker resolution and report emission.
    """
    def __init__(self, manifest):
        Driver.__init__(self)
        self.manifest = manifest

    def getGroup(self):
        if self.manifest.group is None:
            raise HarmonicsUsageError("missing --group")
        return parse_group(self.manifest.group, self.manifest.cap)

    def loadField(self, path):
        return field_from_dict(self.readJSON(path), self.manifest.cap)

    def loadWeights(self, group):
        """The --alpha file: {"weights": ["1/6", ...]} in character order."""
        if self.manifest.alpha is None:
            return None
        data = self.readJSON(self.manifest.alpha)
        try:
            weights = [Fraction(str(w)) for w in data["weights"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise HarmonicsUsageError("cannot read weights from %s: %s" % (self.manifest.alpha, e))
        return normalize_weights(group, weights)

    def getScalarFunction(self):
        return None if self.manifest.phi is None else ScalarFunction.parse(self.manifest.phi)

    def getNormKind(self):
        return NormKind.parse(self.manifest.norm or "trace")

    def getChecks(self):
        """--check values as CheckSpecs; corollary names keep their own spec."""
        if not self.manifest.checks:
            raise HarmonicsUsageError("at least one --check is required")
        checks = []
        for text in self.manifest.checks:
            name, sep, value = text.partition("@")
            if name.strip().lower() in COROLLARIES:
                try:
                    p = float(Fraction(value.strip())) if sep else self.manifest.p
                except (ValueError, ZeroDivisionError):
                    raise HarmonicsUsageError("cannot parse exponent in %r" % (text))
                if p is None and COROLLARIES[name.strip().lower()].theorem != "uin-convex":
                    raise HarmonicsUsageError("corollary %s needs an exponent" % (name))
                checks.append(CheckSpec(name.strip().lower(), p))
            else:
                checks.append(CheckSpec.parse(text, self.manifest.p))
        return checks

    def evaluate(self, spec, field, weights=None):
        if spec.name in COROLLARIES:
            return check_corollary(spec.name, list(field.values), spec.p, weights=weights,
                                   phi=self.getScalarFunction(), kind=self.getNormKind(), cap=self.manifest.cap)
        return run_check(spec, field, weights=weights, phi=self.getScalarFunction(), kind=self.getNormKind())

    @contextlib.contextmanager
    def openOutput(self):
        if self.manifest.output is None:
            yield sys.stdout
            return
        try:
            stream = open(self.manifest.output, "w")
        except OSError as e:
            raise HarmonicsUsageError("cannot write %s: %s" % (self.manifest.output, e))
        with stream:
            yield stream

    def emitReports(self, reports, stream, header=True):
        if self.manifest.format == "csv":
            write_summary_csv(reports, stream, header=header)
        else:
            for report in reports:
                stream.write(report_to_json(report) + "\n")
        stream.flush()

    def exitValue(self, reports):
        return EXIT_OK if all(r.holds for r in reports) else EXIT_VIOLATION


def parseOptions(argv, options, usage):
    """
    getopt over the long options present in options. Prints usage and
    exits 0 on -h, exits 2 on malformed flags.
    """
    longopts = ["help"]
    for name in options:
        longopts.append(name if name in FLAG_OPTIONS else name + "=")

    try:
        opts, args = getopt.getopt(argv, "h", longopts)
    except getopt.GetoptError as err:
        print(usage)
        print(hred(str(err)), file=sys.stderr)
        sys.exit(EXIT_USAGE)

    if args:
        print(hred("unexpected arguments: %s" % (" ".join(args))), file=sys.stderr)
        sys.exit(EXIT_USAGE)

    for o, a in opts:
        name = o[2:] if o.startswith("--") else o
        if name in ("-h", "help"):
            print(usage)
            sys.exit(EXIT_OK)

        try:
            if name in FLAG_OPTIONS:
                options[name] = True
            elif name in LIST_OPTIONS:
                options[name] = list(options[name] or []) + [a]
            elif name in INTEGER_OPTIONS:
                options[name] = int(a)
            elif name in REAL_OPTIONS:
                options[name] = parseReal(a)
            else:
                options[name] = a
        except (ValueError, ZeroDivisionError):
            print(hred("invalid value %r for --%s" % (a, name)), file=sys.stderr)
            sys.exit(EXIT_USAGE)

    return options
