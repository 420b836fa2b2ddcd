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
#       Implements HarmonicsSharpness class that drives the randomized
#       sharpness search and the Boas-Koskela probe.
#

import json

from harmonics.Driver import HarmonicsUsageError
from harmonics.HarmonicsCommand import HarmonicsCommand, RunManifest
from harmonics.ReturnMsg import EXIT_OK, EXIT_VIOLATION, ReturnMsg
from harmonics.WitnessStore import WitnessStore
from harmonics.utils.Codec import field_to_dict
from harmonics.utils.Explorer import SearchConfig, boas_koskela_probe, sharpness_search
from harmonics.utils.Inequality import CheckSpec

options = {}
options["group"] = None
options["dim"] = None
options["check"] = None
options["p"] = None
options["r"] = None
options["s"] = None
options["seed"] = None
options["trials"] = 1000
options["restarts"] = 4
options["scale"] = 0.25
options["budget"] = None
options["workers"] = None
options["store"] = None
options["no-store"] = False
options["output"] = None
options["cap"] = None
options["quiet"] = False


def option():
    return options.copy()


class HarmonicsSharpness(HarmonicsCommand):
    """
    Searches for fields that drive a checker's ratio towards 1, or probes
    (sum_k ||B_k||_p^r)^{1/r} <= (int ||A||_p^s)^{1/s} with
    --check boas-koskela --p <p> --r <r> --s <s>.

    harmonics-sharpness [-h --help] [--quiet] --group <spec> --dim <d> --seed <n>
                        --check <pp|pq|qp|alpha|boas-koskela>[@p] [--p <p>]
                        [--r <r>] [--s <s>] [--trials <n>] [--restarts <n>]
                        [--scale <step>] [--budget <seconds>] [--workers <n>]
                        [--store <dir>] [--no-store] [--output <file>] [--cap <order>]

        Writes one JSON object: the search configuration, best ratio,
        improvement trace and witness field. Witnesses with ratio within
        the configured threshold of 1 go to the witness store.

    Example:
    $ harmonics-sharpness --group Z2 --dim 2 --check pp@4 --seed 1 --trials 2500
        Shows that sum_k ||B_k||_4^4 <= int ||A||_4^4 is tight over Z_2.

    return:
        0    no ratio above 1 + 1e-7
        1    counterexample candidate found
        2    usage, parse or domain error
    """

    def __init__(self, opts=options):
        manifest = RunManifest(command="sharpness", group=opts["group"], dim=opts["dim"], p=opts["p"],
                               r=opts["r"], s=opts["s"], checks=list(opts["check"] or []),
                               trials=opts["trials"], seed=opts["seed"], output=opts["output"], cap=opts["cap"])
        HarmonicsCommand.__init__(self, manifest)
        self.quiet = opts["quiet"]
        self.restarts = opts["restarts"]
        self.scale = opts["scale"]
        self.budget = opts["budget"]
        self.workers = opts["workers"]
        self.store_directory = opts["store"]
        self.no_store = opts["no-store"]
        self.result = None

    def __pre_check(self):
        self.manifest.validate()
        if self.manifest.dim is None:
            raise HarmonicsUsageError("missing --dim")
        if len(self.manifest.checks) != 1:
            raise HarmonicsUsageError("sharpness takes exactly one --check")

        text = self.manifest.checks[0]
        if text.strip().lower() == "boas-koskela":
            target, p = "boas-koskela", self.manifest.p
        else:
            spec = CheckSpec.parse(text, self.manifest.p)
            target, p = spec.name, spec.p

        self.config = SearchConfig(target=target, group=self.getGroup(), dim=self.manifest.dim, p=p,
                                   seed=self.manifest.seed, trials=self.manifest.trials,
                                   restarts=self.restarts, perturbation_scale=self.scale, budget=self.budget,
                                   r=self.manifest.r, s=self.manifest.s,
                                   workers=self.workers if self.workers is not None else self.getWorkers())

        self.store = None
        if not self.no_store:
            store = WitnessStore(self.store_directory, self.witness_threshold, configuration=self.configuration)
            store.lock_manager = self.getWitnessLockManager(store.getDirectory())
            self.store = store

    def __search(self):
        if self.config.target == "boas-koskela":
            self.result = boas_koskela_probe(self.config, self.store)
        else:
            self.result = sharpness_search(self.config, self.store)

        data = {"config": self.config.to_dict(), "result": self.result.to_dict(),
                "witness": field_to_dict(self.result.witness)}
        with self.openOutput() as stream:
            stream.write(json.dumps(data, sort_keys=True) + "\n")
            stream.flush()

    def __post_check(self):
        if not self.quiet:
            self.logger.info("[%s] HarmonicsSharpness: %s best ratio %.12g%s" %
                             (self.config.group, self.config.target, self.result.best_ratio,
                              " (budget exhausted)" if self.result.exhausted else ""))

    def run(self):
        self.__pre_check()

        self.__search()

        self.__post_check()

        return ReturnMsg(EXIT_VIOLATION if self.result.violated else EXIT_OK, self.result)
