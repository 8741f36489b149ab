"""
Engine defaults and scenario files.

The defaults live in the packaged yaml file under cloudmesh.hypercomplex and
can be overwritten in ~/.cloudmesh/hypercomplex.yaml. A scenario is a flat
text file::

    # two suites at n = 1
    n = 1
    suite = algebra
    suite = commutator
    seed = 42

Lines are ``key = value``, ``#`` starts a comment, a repeated key forms a
list and rationals are written as "3/4".
"""
import os
from fractions import Fraction

import yaml
from cloudmesh.common.debug import VERBOSE
from cloudmesh.common.util import path_expand

from cloudmesh.hypercomplex.error import ConfigError

DEFAULT_FILE = os.path.join(os.path.dirname(__file__), "etc", "hypercomplex.yaml")
USER_FILE = "~/.cloudmesh/hypercomplex.yaml"
THREADS_VARIABLE = "CLOUDMESH_HYPERCOMPLEX_THREADS"

INTEGER_KEYS = ("n", "rank", "order", "degree", "trials", "seed", "samples", "cap",
                "k", "threads", "max_n", "kappa_depth")
CHOICES = {
    "metric": ("default", "identity", "jet-random", "jet-matrix", "exp-weight"),
    "format": ("text", "records"),
    "arena": ("scalar", "jet", "fourier", "rational"),
    "mutate": ("none", "e-i-sign"),
}
LIST_KEYS = ("suite", "phi", "kappa", "p", "q", "curvature")
SINGLE_KEYS = ("profile", "output")

# the yaml names of the scenario keys
YAML_NAMES = {"order": "jet_order", "degree": "fourier_degree"}


def load_defaults(path=None, user=USER_FILE):
    """
    reads the packaged defaults and the optional user file

    :param path: the defaults file, the packaged one if None
    :param user: the user file, skipped if None or missing
    :return: dict with the keys "default" and "profiles"
    """
    with open(path or DEFAULT_FILE) as stream:
        spec = yaml.safe_load(stream)["cloudmesh"]["hypercomplex"]
    if user is not None:
        user = path_expand(user)
        if os.path.exists(user):
            with open(user) as stream:
                content = yaml.safe_load(stream) or {}
            try:
                extra = content["cloudmesh"]["hypercomplex"]
            except (KeyError, TypeError):
                raise ConfigError(f"{user} has no cloudmesh.hypercomplex section")
            spec["default"].update(extra.get("default") or {})
            spec["profiles"].update(extra.get("profiles") or {})
            VERBOSE(f"defaults updated from {user}")
    return spec


def parse_flat(text):
    """
    :param text: the content of a flat key = value file
    :return: dict key -> list of value strings in file order
    """
    values = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {number}: expected 'key = value', got '{line}'")
        key, value = [part.strip() for part in line.split("=", 1)]
        if not key or not value:
            raise ConfigError(f"line {number}: empty key or value")
        values.setdefault(key, []).append(value)
    return values


def read_flat(filename):
    filename = path_expand(filename)
    if not os.path.exists(filename):
        raise ConfigError(f"file {filename} does not exist")
    with open(filename) as stream:
        return parse_flat(stream.read())


def parse_rational(text, name="value"):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{name} '{text}' is not a rational number")


def parse_integer(text, name="value"):
    try:
        return int(str(text).strip())
    except ValueError:
        raise ConfigError(f"{name} '{text}' is not an integer")


def parse_weight(text):
    """
    a cosine term of an exp-weight, written "m1 m2 ... : amplitude"

    :return: (mode tuple, Fraction)
    """
    if ":" in text:
        mode, amplitude = text.split(":", 1)
    else:
        mode, amplitude = text, "1"
    modes = tuple(parse_integer(m, "phi mode") for m in mode.split())
    if not modes:
        raise ConfigError(f"phi term '{text}' has no mode")
    return modes, parse_rational(amplitude, "phi amplitude")


def kappa_schedule(depth):
    return [Fraction(1, 2 ** e) for e in range(depth + 1)]


class Scenario(object):
    """
    the parsed scenario: settings shared by every job and the list of
    suites, either given directly or through a profile
    """

    def __init__(self, values=None, defaults=None, seed=None, threads=None,
                 suites=True):
        """
        :param values: dict key -> list of strings, from parse_flat
        :param defaults: dict from load_defaults
        :param seed: a seed given on the command line, overrides the file
        :param threads: a thread count given on the command line
        :param suites: the scenario must name suites or a profile
        """
        values = values or {}
        self.defaults = defaults or load_defaults()
        self.values = values
        settings = {}
        for key, value in self.defaults["default"].items():
            settings[key] = value
        for key, name in YAML_NAMES.items():
            if name in settings:
                settings[key] = settings.pop(name)

        for key, texts in values.items():
            if key.startswith("h["):
                continue
            if key in INTEGER_KEYS:
                settings[key] = parse_integer(texts[-1], key)
            elif key in CHOICES:
                if texts[-1] not in CHOICES[key]:
                    raise ConfigError(f"{key} '{texts[-1]}' not in {', '.join(CHOICES[key])}")
                settings[key] = texts[-1]
            elif key in LIST_KEYS:
                continue
            elif key in SINGLE_KEYS:
                settings[key] = texts[-1]
            else:
                raise ConfigError(f"unknown key '{key}'")

        if seed is not None:
            settings["seed"] = parse_integer(seed, "seed")
        if threads is not None:
            settings["threads"] = parse_integer(threads, "threads")
        elif "threads" not in values and os.environ.get(THREADS_VARIABLE):
            settings["threads"] = parse_integer(os.environ[THREADS_VARIABLE],
                                                THREADS_VARIABLE)

        for key in ("n", "rank", "trials", "threads", "cap", "max_n"):
            if parse_integer(settings.get(key, 1), key) < 1:
                raise ConfigError(f"{key} must be at least 1")
        if settings.get("k", 0) < 0:
            raise ConfigError("k must be nonnegative")

        settings.setdefault("mutate", "none")
        settings.setdefault("arena", None)
        settings["suites"] = values.get("suite", [])
        settings["weights"] = [parse_weight(text) for text in values.get("phi", [])]
        if "kappa" in values:
            kappas = [parse_rational(text, "kappa") for text in values["kappa"]]
            if any(kappa <= 0 for kappa in kappas):
                raise ConfigError("kappa must be positive")
            settings["kappas"] = sorted(kappas, reverse=True)
        else:
            settings["kappas"] = kappa_schedule(settings.get("kappa_depth", 20))
        settings["p"] = [parse_integer(text, "p") for text in values.get("p", [])]
        settings["q"] = [parse_integer(text, "q") for text in values.get("q", [])]
        settings["curvature"] = [[parse_rational(x, "curvature") for x in text.split()]
                                 for text in values.get("curvature", [])]
        settings["entries"] = {key: texts[-1] for key, texts in values.items()
                               if key.startswith("h[")}
        if settings["entries"] and settings.get("metric") in (None, "default"):
            settings["metric"] = "jet-matrix"
        if settings["weights"] and settings.get("metric") in (None, "default"):
            settings["metric"] = "exp-weight"
        if suites and not settings["suites"] and not settings.get("profile"):
            raise ConfigError("the scenario names neither a suite nor a profile")
        self.settings = settings

    @classmethod
    def from_file(cls, filename, **kwargs):
        return cls(read_flat(filename), **kwargs)

    @property
    def seed(self):
        return self.settings["seed"]

    @property
    def threads(self):
        return self.settings["threads"]

    def entries(self):
        """
        :return: list of (suite name, settings dict), one per job, in order
        """
        result = []
        profile = self.settings.get("profile")
        if profile:
            if profile not in self.defaults["profiles"]:
                raise ConfigError(f"profile '{profile}' not yet supported")
            for entry in self.defaults["profiles"][profile]:
                ns = entry.get("n", self.settings["n"])
                ranks = entry.get("rank", self.settings["rank"])
                ns = ns if isinstance(ns, list) else [ns]
                ranks = ranks if isinstance(ranks, list) else [ranks]
                for n in ns:
                    for rank in ranks:
                        settings = dict(self.settings)
                        settings.update({key: value for key, value in entry.items()
                                         if key not in ("suite", "n", "rank")})
                        settings["n"] = n
                        settings["rank"] = rank
                        result.append((entry["suite"], settings))
        for suite in self.settings["suites"]:
            result.append((suite, dict(self.settings)))
        return result

    def record(self):
        """the scenario echo of the report header, strings only"""
        echo = {}
        for key, value in self.settings.items():
            if key in ("kappas",):
                echo[key] = [str(kappa) for kappa in value]
            elif key in ("weights",):
                echo[key] = [f"{' '.join(map(str, mode))} : {amplitude}"
                             for mode, amplitude in value]
            elif key in ("curvature",):
                echo[key] = [" ".join(str(x) for x in row) for row in value]
            elif key == "threads":
                continue
            else:
                echo[key] = value if isinstance(value, (list, dict)) else str(value)
        return echo
