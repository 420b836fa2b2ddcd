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
#       Implements HarmonicsCharTable class that prints the character
#       table of a finite abelian group.
#

import json

from harmonics.HarmonicsCommand import HarmonicsCommand, RunManifest
from harmonics.ReturnMsg import EXIT_OK, ReturnMsg
from harmonics.utils.Codec import matrix_to_json, write_table_csv
from harmonics.utils.Group import character_table

options = {}
options["group"] = None
options["output"] = None
options["format"] = "csv"
options["cap"] = None
options["quiet"] = False


def option():
    return options.copy()


class HarmonicsCharTable(HarmonicsCommand):
    """
    Prints the character table of a group: one row per character, one
    column per element, both in lexicographic order. For Z2^n this is the
    Littlewood matrix L_n.

    harmonics-chartable [-h --help] [--quiet] --group <spec> [--output <file>]
                        [--format <csv|json>] [--cap <order>]

    Example:
    $ harmonics-chartable --group Z2^1
        1,1
        1,-1

    return:
        0    success
        2    usage error or group order above the cap
    """

    def __init__(self, opts=options):
        manifest = RunManifest(command="chartable", group=opts["group"], output=opts["output"],
                               format=opts["format"], cap=opts["cap"])
        HarmonicsCommand.__init__(self, manifest)
        self.quiet = opts["quiet"]

    def __pre_check(self):
        self.manifest.validate()
        self.group = self.getGroup()

    def __print_table(self):
        self.table = character_table(self.group, self.manifest.cap)
        with self.openOutput() as stream:
            if self.manifest.format == "csv":
                write_table_csv(self.table, stream)
            else:
                stream.write(json.dumps({"group": str(self.group), "table": matrix_to_json(self.table)}) + "\n")
            stream.flush()

    def __post_check(self):
        if not self.quiet:
            self.logger.debug("[%s] HarmonicsCharTable: %d characters" % (self.group, self.group.order))

    def run(self):
        self.__pre_check()

        self.__print_table()

        self.__post_check()

        return ReturnMsg(EXIT_OK, self.table)
