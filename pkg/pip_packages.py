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
#       install all python modules needed by schatten-harmonics and its tests
#
import subprocess
import sys


def pip_install(package):
    subprocess.check_call([sys.executable, '-m', 'pip', 'install', package])

required_packages = [
    'numpy>=1.22',
    'scipy>=1.8',
    'lockfile==0.12.2',
    'psutil>=5.8',
    'pexpect>=4.8',
    'wheel>=0.34.2']

for package in required_packages:
    pip_install(package)
