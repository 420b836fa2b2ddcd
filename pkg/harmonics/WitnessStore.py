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
#       Implements WitnessStore class: an append-only directory of JSON
#       files, each named by the sha256 of its content and embedding the
#       search configuration and the witness field.
#

import hashlib
import json
import logging
import os
import tempfile

from harmonics.Driver import HarmonicsUsageError, WitnessLock, WitnessLockManager, getWitnessDirectory, \
    readMainConfig
from harmonics.utils.Codec import field_from_dict, field_to_dict
from harmonics.version import __version__

logger = logging.getLogger(__name__)


class WitnessStore(object):
    """
    Witnesses with ratio >= 1 - threshold are written once and never
    rewritten; writers of one directory are serialized by a file lock.
    """
    def __init__(self, directory=None, threshold=None, lock_manager=None, configuration=None):
        self.directory = getWitnessDirectory(directory, configuration)
        if threshold is None:
            threshold = readMainConfig()["witness_threshold"]
        self.threshold = float(threshold)

        if not os.path.isdir(self.directory):
            os.makedirs(self.directory)

        if lock_manager is None:
            lock_manager = WitnessLockManager(WitnessLock(os.path.join(self.directory, ".store"), logger))
        self.lock_manager = lock_manager

    def getDirectory(self):
        return self.directory

    def getPath(self, digest):
        return os.path.join(self.directory, digest + ".json")

    def qualifies(self, ratio):
        return ratio >= 1.0 - self.threshold

    def offer(self, cfg, result):
        """Persists result when its ratio qualifies; returns the digest or None."""
        if not self.qualifies(result.best_ratio):
            return None
        entry = {
            "config": cfg.to_dict(),
            "field": field_to_dict(result.witness),
            "result": result.to_dict(),
            "version": __version__,
        }
        digest = self.persist(entry)
        logger.warning("[%s] WitnessStore: ratio %.12g persisted as %s" % (cfg.group, result.best_ratio, digest))
        return digest

    def persist(self, entry):
        data = json.dumps(entry, sort_keys=True, indent=4)
        digest = hashlib.sha256(data.encode("utf-8")).hexdigest()
        path = self.getPath(digest)

        with self.lock_manager:
            if os.path.exists(path):
                logger.debug("[localhost] WitnessStore: %s already stored" % (digest))
                return digest

            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as jfile:
                jfile.write(data)
                jfile.flush()
                os.fsync(jfile)
            os.replace(tmp, path)

        return digest

    def getDigests(self):
        return sorted(name[:-len(".json")] for name in os.listdir(self.directory) if name.endswith(".json"))

    def load(self, digest):
        path = self.getPath(digest)
        try:
            with open(path, "r") as jfile:
                data = jfile.read()
        except OSError as e:
            raise HarmonicsUsageError("no witness %s in %s: %s" % (digest, self.directory, e))

        if hashlib.sha256(data.encode("utf-8")).hexdigest() != digest:
            raise HarmonicsUsageError("witness %s does not match its content hash" % (digest))
        return json.loads(data)

    def loadField(self, digest):
        return field_from_dict(self.load(digest)["field"])
