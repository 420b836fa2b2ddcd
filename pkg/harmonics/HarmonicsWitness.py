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
#       Implements HarmonicsWitness class that builds equality witnesses
#       and inspects the witness store.
#

from harmonics.Driver import HarmonicsUsageError
from harmonics.HarmonicsCommand import HarmonicsCommand, RunManifest
from harmonics.ReturnMsg import ReturnMsg
from harmonics.WitnessStore import WitnessStore
from harmonics.utils.Codec import dumps_field
from harmonics.utils.Inequality import WITNESS_TARGETS, equality_witness, witness_report

options = {}
options["name"] = None
options["group"] = None
options["dim"] = 2
options["p"] = None
options["seed"] = 0
options["output"] = None
options["format"] = "json"
options["field"] = None
options["list"] = False
options["store"] = None
options["digest"] = None
options["cap"] = None
options["quiet"] = False


def option():
    return options.copy()


class HarmonicsWitness(HarmonicsCommand):
    """
    Builds a field on which an inequality is tight and reports the checker
    it is tight for:

        constant-field     pp (p = 4 unless --p)
        single-character   qp (p = 3 unless --p)
        single-support     cyclic-pp-left (p = 4 unless --p), cyclic groups
        p-equals-2         pp at p = 2

    harmonics-witness [-h --help] [--quiet] --name <witness> --group <spec>
                      [--dim <d>] [--p <p>] [--seed <n>] [--field <file>]
                      [--output <file>] [--format <json|csv>] [--cap <order>]
    harmonics-witness --list [--store <dir>]
    harmonics-witness --digest <sha256> [--store <dir>] [--output <file>]

        --field     where the witness field JSON is written; without it the
                    field itself is printed instead of the report.
        --list      prints the digests held by the witness store.
        --digest    re-reads a stored witness and prints its field.

    Example:
    $ harmonics-witness --name constant-field --group Z5 --field /tmp/w.json
        Writes a constant field over Z_5 and prints its pp@4 report.

    return:
        0    the witness report holds (or the store query succeeded)
        1    the witness report fails
        2    usage error
    """

    def __init__(self, opts=options):
        manifest = RunManifest(command="witness", group=opts["group"], dim=opts["dim"], p=opts["p"],
                               seed=opts["seed"], output=opts["output"], format=opts["format"], cap=opts["cap"])
        HarmonicsCommand.__init__(self, manifest)
        self.quiet = opts["quiet"]
        self.name = opts["name"]
        self.field_file = opts["field"]
        self.list = opts["list"]
        self.store_directory = opts["store"]
        self.digest = opts["digest"]

    def __pre_check(self):
        self.manifest.validate()
        if self.list or self.digest:
            self.store = WitnessStore(self.store_directory, self.witness_threshold, configuration=self.configuration)
            return
        if self.name not in WITNESS_TARGETS:
            raise HarmonicsUsageError("--name must be one of %s" % (", ".join(WITNESS_TARGETS)))
        self.group = self.getGroup()

    def __query_store(self):
        with self.openOutput() as stream:
            if self.list:
                digests = self.store.getDigests()
                for digest in digests:
                    stream.write(digest + "\n")
                return ReturnMsg(0, digests)

            field = self.store.loadField(self.digest)
            stream.write(dumps_field(field) + "\n")
            return ReturnMsg(0, field)

    def __build(self):
        self.field = equality_witness(self.name, self.group, self.manifest.dim, seed=self.manifest.seed)
        self.report = witness_report(self.name, self.field, self.manifest.p)

        with self.openOutput() as stream:
            if self.field_file is None:
                stream.write(dumps_field(self.field) + "\n")
            else:
                try:
                    with open(self.field_file, "w") as ffile:
                        ffile.write(dumps_field(self.field) + "\n")
                except OSError as e:
                    raise HarmonicsUsageError("cannot write %s: %s" % (self.field_file, e))
                self.emitReports([self.report], stream)

    def __post_check(self):
        if not self.quiet:
            self.logger.info("[%s] HarmonicsWitness: %s margin %.3g" % (self.group, self.name, self.report.margin))

    def run(self):
        self.__pre_check()

        if self.list or self.digest:
            return self.__query_store()

        self.__build()

        self.__post_check()

        return ReturnMsg(self.exitValue([self.report]), self.field)
