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
#       A schatten-harmonics command line utility that runs inequality checkers on seeded random fields.
#
#       The command is executed by instantiating and running HarmonicsFuzz class.
#

import sys

import harmonics.HarmonicsFuzz
from harmonics.HarmonicsCommand import parseOptions

if __name__ == "__main__":
    options = parseOptions(sys.argv[1:], harmonics.HarmonicsFuzz.option(),
                           harmonics.HarmonicsFuzz.HarmonicsFuzz.__doc__)

    cmd = harmonics.HarmonicsFuzz.HarmonicsFuzz(options)
    ret = cmd.start()
    sys.exit(ret.Value())
