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
#       Tests harmonics-chartable and the schatten-harmonics dispatcher from
#       the shell.
#

import os
import shutil
import sys
import tempfile
import unittest

import pexpect

REPO = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))


def harmonics(command, args, env):
    script = os.path.join(REPO, "bin", command + ".py")
    return pexpect.run("%s %s %s" % (sys.executable, script, args), withexitstatus=True, env=env, timeout=300)


class test_chartable_shell(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp(prefix="harmonics-shell-")
        self.env = dict(os.environ)
        self.env["PYTHONPATH"] = REPO
        self.env["SCHATTEN_HARMONICS_LOG_DIR"] = self.tmp
        self.env["SCHATTEN_HARMONICS_LOG_LEVEL_CONSOLE"] = "CRITICAL"

    def tearDown(self):
        shutil.rmtree(self.tmp, ignore_errors=True)

    def test_z2(self):
        child = pexpect.spawn(sys.executable, [os.path.join(REPO, "bin", "harmonics-chartable.py"),
                                               "--group", "Z2^1"], env=self.env)
        child.expect("1,1\r\n1,-1\r\n")
        child.expect(pexpect.EOF)
        child.close()
        self.assertEqual(child.exitstatus, 0)

    def test_littlewood_json(self):
        output, status = harmonics("harmonics-chartable", "--group Z2^2 --format json", self.env)
        self.assertEqual(status, 0)
        self.assertIn(b'"group": "Z2^2"', output)

    def test_cap(self):
        output, status = harmonics("harmonics-chartable", "--group Z2^7 --cap 64", self.env)
        self.assertEqual(status, 2)
        output, status = harmonics("harmonics-chartable", "--group Z2^6 --cap 64", self.env)
        self.assertEqual(status, 0)

    def test_usage(self):
        output, status = harmonics("harmonics-chartable", "--help", self.env)
        self.assertEqual(status, 0)
        self.assertIn(b"harmonics-chartable", output)
        output, status = harmonics("harmonics-chartable", "--colour red", self.env)
        self.assertEqual(status, 2)
        output, status = harmonics("harmonics-chartable", "--group Q8", self.env)
        self.assertEqual(status, 2)

    def test_dispatcher(self):
        output, status = harmonics("schatten-harmonics", "chartable --group Z3", self.env)
        self.assertEqual(status, 0)
        self.assertEqual(len(output.strip().splitlines()), 3)
        output, status = harmonics("schatten-harmonics", "transform --group Z3", self.env)
        self.assertEqual(status, 2)


if __name__ == "__main__":
    unittest.main()
