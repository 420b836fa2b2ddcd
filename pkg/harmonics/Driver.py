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
#       Implements Driver class, the set of main tools and mechanisms
#       necessary to run schatten-harmonics commands. Every command class
#       inherits Driver.
#
#       Also hosts the exception hierarchy and the main configuration
#       readers that the numerical library shares with the commands.
#

import json
import logging
import logging.config
import logging.handlers
import os
import sys
import warnings

import lockfile

from harmonics.ReturnMsg import ReturnMsg

log_config = "conf/log_config.json"
main_config = "conf/main_config.json"

harmonics_path = os.path.dirname(os.path.realpath("%s" % (__file__)))


class HarmonicsException(Exception):
    pass


class HarmonicsUsageError(HarmonicsException):
    """Bad flags, malformed input files, inconsistent manifests (exit 2)."""
    pass


class HarmonicsDomainError(HarmonicsUsageError):
    """Parameters outside the range where an inequality is stated."""
    pass


class HarmonicsCapError(HarmonicsDomainError):
    pass


class HarmonicsNumericError(HarmonicsException):
    """A decomposition failed; the message carries matrix diagnostics."""
    pass


g_main_conf = {}


def readMainConfig(main_conf_file=None):
    """
    Loads conf/main_config.json once per process. A broken main
    configuration is fatal, there is nothing sensible to fall back on.
    """
    if main_conf_file is None:
        main_conf_file = harmonics_path + "/" + main_config
        if g_main_conf:
            return g_main_conf

    try:
        with open(main_conf_file, 'r') as jfile:
            json_data = jfile.read()

        conf = json.loads(json_data)
    except Exception:
        print("Failed to load config from %s." % (main_conf_file))
        sys.exit(1)

    if main_conf_file == harmonics_path + "/" + main_config:
        g_main_conf.update(conf)

    return conf


def getGroupOrderCap(cap=None):
    """
    Resolves the group order cap: explicit value, then the environment
    variable named by cap_environ, then group_order_cap.
    """
    if cap is not None:
        return int(cap)

    conf = readMainConfig()
    env_value = os.environ.get(conf["cap_environ"])
    if env_value is not None:
        try:
            return int(env_value)
        except ValueError:
            raise HarmonicsUsageError("%s must be an integer, got %r" % (conf["cap_environ"], env_value))

    return int(conf["group_order_cap"])


def getTolerance(quasinorm=False):
    conf = readMainConfig()
    if quasinorm:
        return float(conf["quasinorm_tolerance"])
    return float(conf["tolerance"])


def getWitnessDirectory(directory=None, configuration=None):
    if directory is not None:
        return os.path.expanduser(directory)

    conf = readMainConfig()
    if conf["witness_environ"] in os.environ:
        return os.path.expanduser(os.environ[conf["witness_environ"]])

    if configuration and "witness_directory" in configuration:
        return os.path.expanduser(configuration["witness_directory"])

    return os.path.expanduser(conf["witness_directory"])


class WitnessLock(object):
    """
    Re-entrant lockfile.FileLock over one witness directory. Nested lock()
    calls from the holder only deepen the count.
    """
    def __init__(self, filename, logger, timeout=10.0, poll=0.1):
        self.filename = filename
        self.filelock = lockfile.FileLock(self.filename)
        self.logger = logger
        self.attempts = max(1, int(round(timeout / poll)))
        self.poll = poll
        self.depth = 0
        warnings.filterwarnings("ignore", category=ResourceWarning)

    def lock(self):
        if self.filelock.i_am_locking():
            self.depth += 1
            return

        for attempt in range(1, self.attempts + 1):
            try:
                self.filelock.acquire(timeout=self.poll)
                return
            except lockfile.LockTimeout:
                pass
            if attempt % 10 == 0:
                self.logger.warning("[localhost] WitnessLock: waiting %.1fs for %s" %
                                    (attempt * self.poll, self.filename))

        raise HarmonicsException("witness store %s stayed locked for %.1fs" %
                                 (self.filename, self.attempts * self.poll))

    def release(self):
        if self.depth > 0:
            self.depth -= 1
            return
        try:
            self.filelock.release()
        except lockfile.UnlockError:
            self.filelock.break_lock()
            self.logger.warning("[localhost] WitnessLock: releasing %s failed, lock broken" % (self.filename))


class WitnessLockManager(object):
    """
    A context manager that wraps a WitnessLock.
    """
    def __init__(self, lock):
        self.witness_lock = lock

    def __enter__(self):
        self.witness_lock.lock()
        return self

    def __exit__(self, *args):
        self.witness_lock.release()
        return None


class Driver:
    """
    Driver init loads configuration base on conf/log_config.json and conf/main_config.json
    """
    def __init__(self):
        self.configuration = {}
        self.log_conf = None
        self.logger = None

        self.log_conf_file = harmonics_path + "/" + log_config
        self.main_conf_file = harmonics_path + "/" + main_config

        self.__configure()
        self.readConfiguration()
        self.__logging()

    def __configure(self):
        self.main_conf = dict(readMainConfig())

        try:
            self.log_name = self.main_conf["log_name"]
            self.log_dir_environ = self.main_conf["log_dir_environ"]
            self.log_dir = os.environ.get(self.log_dir_environ, self.main_conf["default_log_dir"])
            self.configuration_file = os.path.expanduser(self.main_conf["configuration_file"])
            self.tolerance = float(self.main_conf["tolerance"])
            self.witness_threshold = float(self.main_conf["witness_threshold"])
        except Exception:
            print("Failed to parse main configuration: %s" % (self.main_conf_file))
            sys.exit(1)

        try:
            self.log_level_file = os.environ["SCHATTEN_HARMONICS_LOG_LEVEL_FILE"]
        except KeyError:
            self.log_level_file = self.main_conf.get("log_level_file", "DEBUG")

        try:
            self.log_level_console = os.environ["SCHATTEN_HARMONICS_LOG_LEVEL_CONSOLE"]
        except KeyError:
            self.log_level_console = self.main_conf.get("log_level_console", "INFO")

    def __logging(self):
        try:
            with open(self.log_conf_file, 'r') as jfile:
                json_data = jfile.read()

                self.log_conf = json.loads(json_data)
        except Exception:
            print("Failed to load config from %s." % (self.log_conf_file))
            sys.exit(1)

        try:
            if not os.path.exists(self.log_dir):
                os.makedirs(self.log_dir)

            confDict = dict(self.main_conf)
            confDict['log_dir'] = self.log_dir

            self.log_conf['handlers']['file']['filename'] = self.log_conf['handlers']['file']['filename'] % confDict
            self.log_conf['handlers']['file']['level'] = logging.getLevelName(self.log_level_file)
            self.log_conf['handlers']['stream']['level'] = logging.getLevelName(self.log_level_console)

            logging.config.dictConfig(self.log_conf)
            self.logger = logging.getLogger(__name__)

        except (ValueError, TypeError, AttributeError, ImportError, OSError) as e:
            emsg = "Failed to load logging configuration: %s" % (e)
            print(emsg)
            sys.exit(1)

    def __initConfiguration(self):
        self.configuration = {}

    def readConfiguration(self):
        try:
            with open(self.configuration_file, 'r') as jfile:
                json_data = jfile.read()

            self.configuration = json.loads(json_data)

            if not bool(self.configuration):
                self.__initConfiguration()

        except Exception:
            self.__initConfiguration()

    def getWorkers(self):
        workers = self.configuration.get("workers", self.main_conf.get("workers", 1))
        return max(1, int(workers))

    def getWitnessLockManager(self, directory):
        """
        Returns a context manager that serializes writers of one witness
        directory across processes.
        """
        return WitnessLockManager(WitnessLock(os.path.join(directory, ".store"), self.logger))

    def readJSON(self, filename):
        try:
            with open(filename, 'r') as jfile:
                json_data = jfile.read()

            return json.loads(json_data)

        except (OSError, ValueError) as e:
            raise HarmonicsUsageError("Failed to load JSON file %s: %s" % (filename, e))

    def start(self):
        """
        Runs the command and maps failures onto the exit-code contract:
        2 for usage, parse and domain errors, 1 for numeric failures.
        """
        try:
            return self.run()
        except HarmonicsUsageError as e:
            self.logger.error("[localhost] %s: %s" % (self.__class__.__name__, e))
            return ReturnMsg(2, str(e))
        except HarmonicsException as e:
            self.logger.error("[localhost] %s: %s" % (self.__class__.__name__, e))
            return ReturnMsg(1, str(e))
