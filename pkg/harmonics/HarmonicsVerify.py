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
#       Implements HarmonicsVerify class that evaluates checkers on
#       operator fields read from JSON files.
#

import numpy as np

from harmonics.Driver import HarmonicsUsageError
from harmonics.HarmonicsCommand import HarmonicsCommand, RunManifest
from harmonics.ReturnMsg import ReturnMsg
from harmonics.utils.Sampling import random_field

options = {}
options["group"] = None
options["dim"] = None
options["p"] = None
options["q"] = None
options["check"] = None
options["input"] = None
options["seed"] = None
options["alpha"] = None
options["phi"] = None
options["norm"] = None
options["output"] = None
options["format"] = "json"
options["cap"] = None
options["quiet"] = False


def option():
    return options.copy()


class HarmonicsVerify(HarmonicsCommand):
    """
    Evaluates inequality checkers on operator fields and writes one report
    per (field, checker) as a JSON line, or a CSV summary.

    harmonics-verify [-h --help] [--quiet] --check <name[@p]> [--check ...]
                     [--input <field.json> ...] [--group <spec>] [--dim <d>]
                     [--seed <n>] [--p <p>] [--q <q>] [--alpha <weights.json>]
                     [--phi <power:x|sqrt|square|identity>] [--norm <kind>]
                     [--output <file>] [--format <json|csv>] [--cap <order>]

        --check     pp, pq, qp, alpha, uin-convex, parseval or a corollary
                    such as cyclic-pp-right or cyclic-bk-left; the exponent
                    follows '@' or comes from --p. cyclic-uin-* take --phi
                    and --norm, circle-alpha takes --alpha.
        --input     field file {group, dim, values}; repeatable. Without
                    --input a random field over --group/--dim is drawn
                    from --seed.
        --group     when given with --input, every field must be over it.

    Example:
    $ harmonics-verify --group Z2 --p 4 --check pp --input fields/z2_example.json
        Checks sum_k ||B_k||_4^4 <= int ||A||_4^4 on the bundled field.

    return:
        0    every report holds
        1    some report fails
        2    usage, parse or domain error
    """

    def __init__(self, opts=options):
        manifest = RunManifest(command="verify", group=opts["group"], dim=opts["dim"], p=opts["p"],
                               q=opts["q"], checks=list(opts["check"] or []), seed=opts["seed"],
                               inputs=list(opts["input"] or []), output=opts["output"],
                               format=opts["format"], alpha=opts["alpha"], phi=opts["phi"],
                               norm=opts["norm"], cap=opts["cap"])
        HarmonicsCommand.__init__(self, manifest)
        self.quiet = opts["quiet"]
        self.fields = []
        self.reports = []

    def __pre_check(self):
        self.manifest.validate()
        self.checks = self.getChecks()

        if self.manifest.inputs:
            for path in self.manifest.inputs:
                self.fields.append(self.loadField(path))
            if self.manifest.group is not None:
                group = self.getGroup()
                for path, field in zip(self.manifest.inputs, self.fields):
                    if field.group != group:
                        raise HarmonicsUsageError("%s is over %s, not %s" % (path, field.group, group))
        else:
            if self.manifest.seed is None or self.manifest.dim is None:
                raise HarmonicsUsageError("without --input, --group, --dim and --seed are required")
            rng = np.random.default_rng(self.manifest.seed)
            self.fields.append(random_field(rng, self.getGroup(), self.manifest.dim))

    def __verify(self):
        for field in self.fields:
            weights = self.loadWeights(field.group)
            for spec in self.checks:
                report = self.evaluate(spec, field, weights)
                self.reports.append(report)
                if not report.holds:
                    self.logger.warning("[%s] HarmonicsVerify: %s fails, lhs %.12g rhs %.12g" %
                                        (field.group, spec, report.lhs, report.rhs))
                else:
                    self.logger.debug("[%s] HarmonicsVerify: %s holds, margin %.3g" %
                                      (field.group, spec, report.margin))

        with self.openOutput() as stream:
            self.emitReports(self.reports, stream)

    def __post_check(self):
        failed = [r for r in self.reports if not r.holds]
        if not self.quiet:
            self.logger.info("[localhost] HarmonicsVerify: %d reports, %d failed" % (len(self.reports), len(failed)))

    def run(self):
        self.__pre_check()

        self.__verify()

        self.__post_check()

        return ReturnMsg(self.exitValue(self.reports), self.reports)
