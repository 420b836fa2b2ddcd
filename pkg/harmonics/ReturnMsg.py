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
#       Implements ReturnMsg class.
#
#       ReturnMsg carries the exit value of a command (0 all reports
#       hold, 1 violation, 2 usage/parse error) together with whatever
#       the command produced: reports, a search result, a table.
#

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class ReturnMsg:
    def __init__(self, value=None, data=None):
        self.value = value
        self.Data(data)

    def Value(self, value=None):
        if value is None:
            return self.value
        self.value = value

    def Data(self, data=None):
        if data is None:
            if not hasattr(self, "data"):
                self.data = None
            return self.data
        elif isinstance(data, dict):
            self.data = data.copy()
        elif isinstance(data, list):
            self.data = data[:]
        else:
            self.data = data

    def Succeeded(self):
        return self.value == EXIT_OK

    def __repr__(self):
        return "ReturnMsg(%r)" % (self.value,)
