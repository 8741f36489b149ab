###############################################################
# pytest -v --capture=no tests/test_config.py
# pytest -v  tests/test_config.py
###############################################################
from fractions import Fraction

import pytest
from cloudmesh.common.util import HEADING

from cloudmesh.hypercomplex.catalog import anchor
from cloudmesh.hypercomplex.catalog import entry
from cloudmesh.hypercomplex.catalog import list_suites
from cloudmesh.hypercomplex.catalog import names
from cloudmesh.hypercomplex.config import Scenario
from cloudmesh.hypercomplex.config import kappa_schedule
from cloudmesh.hypercomplex.config import load_defaults
from cloudmesh.hypercomplex.config import parse_flat
from cloudmesh.hypercomplex.config import parse_weight
from cloudmesh.hypercomplex.error import ConfigError

SCENARIO = """
# two suites at n = 2
n = 2
suite = algebra
suite = commutator   # a trailing comment
seed = 42
kappa = 1/4
kappa = 1
"""


@pytest.mark.incremental
class Test_config:

    def setup_class(self):
        self.defaults = load_defaults(user=None)

    def scenario(self, text, **kwargs):
        return Scenario(parse_flat(text), defaults=self.defaults, **kwargs)

    def test_01_parse_flat(self):
        HEADING()
        values = parse_flat(SCENARIO)
        assert values["suite"] == ["algebra", "commutator"]
        assert values["n"] == ["2"]
        with pytest.raises(ConfigError, match="line 2"):
            parse_flat("n = 1\nsuite algebra\n")
        with pytest.raises(ConfigError):
            parse_flat("n =\n")

    def test_02_defaults(self):
        HEADING()
        assert self.defaults["default"]["n"] == 1
        assert "desk" in self.defaults["profiles"]
        assert "quick" in self.defaults["profiles"]

    def test_03_scenario(self):
        HEADING()
        scenario = self.scenario(SCENARIO, threads=2)
        assert scenario.seed == 42
        assert scenario.threads == 2
        assert scenario.settings["n"] == 2
        assert scenario.settings["order"] == 3
        assert scenario.settings["kappas"] == [1, Fraction(1, 4)]
        assert [name for name, _ in scenario.entries()] == ["algebra", "commutator"]
        assert "threads" not in scenario.record()
        assert scenario.record()["kappas"] == ["1", "1/4"]

    def test_04_overrides(self):
        HEADING()
        scenario = self.scenario(SCENARIO, seed="7")
        assert scenario.seed == 7
        assert scenario.settings["kappas"] == [1, Fraction(1, 4)]
        scenario = self.scenario("suite = certificate\n")
        assert scenario.settings["kappas"] == kappa_schedule(20)
        assert scenario.settings["kappas"][-1] == Fraction(1, 2 ** 20)

    def test_05_profile(self):
        HEADING()
        scenario = self.scenario("profile = quick\nsuite = hodge\n")
        entries = scenario.entries()
        assert [name for name, _ in entries] == ["algebra", "commutator", "rescale", "hodge"]
        assert entries[2][1]["max_n"] == 3
        desk = self.scenario("profile = desk\n").entries()
        connection = [(s["n"], s["rank"]) for name, s in desk if name == "connection"]
        assert connection == [(1, 1), (1, 2), (2, 1), (2, 2)]

    def test_06_errors(self):
        HEADING()
        for text in ("n = 1\n",
                     "suite = algebra\nn = zero\n",
                     "suite = algebra\nn = 0\n",
                     "suite = algebra\ncolour = red\n",
                     "suite = algebra\nformat = xml\n",
                     "suite = algebra\nkappa = -1\n",
                     "suite = algebra\nkappa = 1/0\n"):
            with pytest.raises(ConfigError):
                self.scenario(text)
        with pytest.raises(ConfigError):
            self.scenario("profile = nightly\n").entries()

    def test_07_weights(self):
        HEADING()
        assert parse_weight("1 0 0 0 : 1/2") == ((1, 0, 0, 0), Fraction(1, 2))
        assert parse_weight("0 1 0 0") == ((0, 1, 0, 0), 1)
        scenario = self.scenario("suite = bundle\nphi = 1 0 0 0 : 1\n")
        assert scenario.settings["metric"] == "exp-weight"
        scenario = self.scenario("suite = connection\nh[1,1] = 1 + z1*zb1\n")
        assert scenario.settings["metric"] == "jet-matrix"
        assert scenario.settings["entries"] == {"h[1,1]": "1 + z1*zb1"}

    def test_08_catalog(self):
        HEADING()
        assert len(names()) == 18
        assert names()[0] == "algebra"
        assert anchor("commutator") == "commutator / [ē_pē_q, ī_kī_{k+n}] case table"
        assert entry("bundle")["group"] == "bundle"
        with pytest.raises(ConfigError):
            entry("tensor")
        suites = list_suites()
        assert {"name", "group", "anchor", "arenas"} == set(suites[0])
