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
#       Provides general, low-level utilities used by the command line
#       front ends: terminal colours and number formatting.
#

import math


##
#    Formats input string to print in Red on terminal.
#
#    @param[in]  txt     A string or object that can be coverted to string.
#
#    @return     string with prefixed and suffixed ASCII color formatting.
#
def hred(txt):
    return '\033[31m' + str(txt) + '\033[0m'


##
#    Formats a real number for tables and summaries. Integers print
#    without a fractional part so that +-1 character tables stay exact.
#
#    @param[in]  x        A float.
#    @param[in]  digits   Significant digits for non-integral values.
#
#    @return     string
#
def formatReal(x, digits=12):
    if math.isfinite(x) and x == round(x) and abs(x) < 1e15:
        return str(int(round(x)))
    return "%.*g" % (digits, x)


##
#    Formats a complex scalar, dropping a vanishing imaginary part.
#
#    @param[in]  z        A complex number.
#    @param[in]  digits   Decimal places kept before formatting.
#
#    @return     string such as "1", "-1", "0.5+0.866025403784j"
#
def formatComplex(z, digits=12):
    re = round(z.real, digits) + 0.0
    im = round(z.imag, digits) + 0.0
    if im == 0.0:
        return formatReal(re)
    if re == 0.0:
        return formatReal(im) + "j"
    sign = "+" if im > 0 else "-"
    return formatReal(re) + sign + formatReal(abs(im)) + "j"


##
#    Parses "1/3", "0.25" or 2 into a float for option values.
#
def parseReal(txt):
    if isinstance(txt, (int, float)):
        return float(txt)
    txt = txt.strip()
    if "/" in txt:
        num, den = txt.split("/", 1)
        return float(num) / float(den)
    return float(txt)
