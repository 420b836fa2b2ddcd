#!/usr/bin/env python3

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
#       Dispatcher over the schatten-harmonics commands:
#
#           schatten-harmonics <verify|fuzz|sharpness|chartable|witness> [flags]
#

import importlib
import sys

from harmonics.HarmonicsCommand import COMMANDS, parseOptions
from harmonics.ReturnMsg import EXIT_OK, EXIT_USAGE
from harmonics.Utils import hred

classes = {
    "verify": "HarmonicsVerify",
    "fuzz": "HarmonicsFuzz",
    "sharpness": "HarmonicsSharpness",
    "chartable": "HarmonicsCharTable",
    "witness": "HarmonicsWitness",
}

usage = "schatten-harmonics <%s> [-h --help] [flags]" % ("|".join(COMMANDS))

if __name__ == "__main__":
    if len(sys.argv) < 2 or sys.argv[1] in ("-h", "--help"):
        print(usage)
        sys.exit(EXIT_OK if len(sys.argv) >= 2 else EXIT_USAGE)

    command = sys.argv[1]
    if command not in classes:
        print(usage)
        print(hred("unknown command %r" % (command)), file=sys.stderr)
        sys.exit(EXIT_USAGE)

    module = importlib.import_module("harmonics." + classes[command])
    cls = getattr(module, classes[command])
    options = parseOptions(sys.argv[2:], module.option(), cls.__doc__)

    ret = cls(options).start()
    sys.exit(ret.Value())
