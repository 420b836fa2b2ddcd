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
#       Implements HarmonicsFuzz class that runs checkers on seeded random
#       fields and streams the reports in trial order.
#

import concurrent.futures
import json
import math
import os

import numpy as np
import psutil

from harmonics.Driver import HarmonicsUsageError
from harmonics.HarmonicsCommand import HarmonicsCommand, RunManifest
from harmonics.ReturnMsg import ReturnMsg
from harmonics.utils.Sampling import random_field, random_weights

options = {}
options["group"] = None
options["dim"] = None
options["p"] = None
options["check"] = None
options["trials"] = 100
options["seed"] = None
options["alpha"] = None
options["phi"] = None
options["norm"] = None
options["workers"] = None
options["output"] = None
options["format"] = "json"
options["cap"] = None
options["quiet"] = False


def option():
    return options.copy()


class HarmonicsFuzz(HarmonicsCommand):
    """
    Draws --trials random fields from --seed and runs every --check on each.
    Reports stream as JSON lines ordered by trial; a summary line with the
    trial count, failures, minimum slack and maximum ratio per checker
    comes last.

    harmonics-fuzz [-h --help] [--quiet] --group <spec> --dim <d> --seed <n>
                   --check <name[@p]> [--check ...] [--trials <n>] [--p <p>]
                   [--alpha <weights.json>] [--phi <tag>] [--norm <kind>]
                   [--workers <n>] [--output <file>] [--format <json|csv>]
                   [--cap <order>]

        Trial t uses the generator seeded by (seed, t), so reruns and any
        --workers count give identical streams. alpha checks draw fresh
        rational weights per trial unless --alpha is given.

    Example:
    $ harmonics-fuzz --group Z3 --dim 4 --trials 1000 --seed 7 --check pp@3 --check pq@1.5 --check qp@3
        Fuzzes three proved inequalities over Z_3 with 4x4 matrices.

    return:
        0    every report holds
        1    some report fails
        2    usage, parse or domain error
    """

    def __init__(self, opts=options):
        manifest = RunManifest(command="fuzz", group=opts["group"], dim=opts["dim"], p=opts["p"],
                               checks=list(opts["check"] or []), trials=opts["trials"], seed=opts["seed"],
                               output=opts["output"], format=opts["format"], alpha=opts["alpha"],
                               phi=opts["phi"], norm=opts["norm"], cap=opts["cap"])
        HarmonicsCommand.__init__(self, manifest)
        self.quiet = opts["quiet"]
        self.workers = opts["workers"]
        self.reports = []
        self.summary = {}

    def __pre_check(self):
        self.manifest.validate()
        if self.manifest.dim is None:
            raise HarmonicsUsageError("missing --dim")
        self.group = self.getGroup()
        self.checks = self.getChecks()
        self.weights = self.loadWeights(self.group)
        if self.workers is None:
            self.workers = self.getWorkers()
        self.workers = max(1, min(int(self.workers), psutil.cpu_count() or 1))

    def trial(self, index):
        rng = np.random.default_rng([self.manifest.seed, index])
        field = random_field(rng, self.group, self.manifest.dim)
        reports = []
        for spec in self.checks:
            weights = self.weights
            if spec.name in ("alpha", "circle-alpha") and weights is None:
                weights = random_weights(rng, self.group.order)
            report = self.evaluate(spec, field, weights)
            report.params["trial"] = index
            reports.append((str(spec), report))
        return reports

    def __summarize(self, key, report):
        entry = self.summary.setdefault(key, {"trials": 0, "failures": 0, "min_slack": math.inf,
                                               "max_ratio": -math.inf})
        entry["trials"] += 1
        entry["failures"] += 0 if report.holds else 1
        entry["min_slack"] = min(entry["min_slack"], report.slack)
        entry["max_ratio"] = max(entry["max_ratio"], report.ratio)

    def __fuzz(self):
        trials = range(self.manifest.trials)
        with self.openOutput() as stream:
            with concurrent.futures.ThreadPoolExecutor(max_workers=self.workers) as executor:
                header = True
                for index, reports in enumerate(executor.map(self.trial, trials)):
                    for key, report in reports:
                        self.__summarize(key, report)
                        self.reports.append(report)
                        if not report.holds:
                            self.logger.warning("[%s] HarmonicsFuzz: trial %d %s fails, slack %.3g" %
                                                (self.group, index, key, report.slack))
                    self.emitReports([r for _, r in reports], stream, header=header)
                    header = False
                    self.logger.debug("[%s] HarmonicsFuzz: trial %d done" % (self.group, index))

            if self.manifest.format == "json":
                footer = {"summary": self.summary, "seed": self.manifest.seed, "trials": self.manifest.trials,
                          "group": str(self.group), "dim": self.manifest.dim}
                stream.write(json.dumps(footer, sort_keys=True) + "\n")
                stream.flush()

    def __post_check(self):
        rss = psutil.Process(os.getpid()).memory_info().rss
        failures = sum(entry["failures"] for entry in self.summary.values())
        if not self.quiet:
            self.logger.info("[%s] HarmonicsFuzz: %d trials, %d failures, rss %.1f MiB" %
                             (self.group, self.manifest.trials, failures, rss / 2.0 ** 20))

    def run(self):
        self.__pre_check()

        self.__fuzz()

        self.__post_check()

        return ReturnMsg(self.exitValue(self.reports), self.summary)
