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
import glob
import os
from setuptools import find_packages, setup

exec(open("harmonics/version.py").read())

here = os.path.abspath(os.path.dirname(__file__))

long_description = open(os.path.join(here, 'README.md')).read()

setup(name="schatten-harmonics",
      version=__version__,

      description="Operator-valued Fourier analysis on finite abelian groups and "
                  "Clarkson-McCarthy inequality checkers",

      long_description=long_description,
      long_description_content_type="text/markdown",

      author="The Schatten Harmonics Authors",

      platforms=["Linux", "MacOS"],

      classifiers=[
          "Development Status :: 4 - Beta",

          "License :: OSI Approved :: Apache Software License",

          "Intended Audience :: Science/Research",
          "Intended Audience :: Education",

          "Operating System :: POSIX",

          "Topic :: Scientific/Engineering :: Mathematics",
          "Topic :: Software Development :: Testing"
      ],

      license="Apache",

      python_requires=">=3.9",

      install_requires=[
          "numpy>=1.22",
          "scipy>=1.8",
          "lockfile>=0.12.2",
          "psutil>=5.8",
      ],

      extras_require={
          "test": ["pexpect>=4.8"],
      },

      packages=find_packages(exclude=["tests", "tests.*"]),

      scripts=glob.glob("bin/*.py"),

      package_data={'harmonics': ['conf/log_config.json', 'conf/main_config.json']},
      )
