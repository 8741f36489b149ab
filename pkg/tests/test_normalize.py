###############################################################
# pytest -v --capture=no tests/test_normalize.py
# pytest -v  tests/test_normalize.py
###############################################################
import random

import pytest
from cloudmesh.common.util import HEADING

from cloudmesh.hypercomplex.config import parse_flat
from cloudmesh.hypercomplex.error import ConfigError
from cloudmesh.hypercomplex.error import NotKahlerJet
from cloudmesh.hypercomplex.normalize import jet_from_text
from cloudmesh.hypercomplex.normalize import metric_from_values
from cloudmesh.hypercomplex.normalize import normalize_metric_jet
from cloudmesh.hypercomplex.normalize import random_kahler_jet
from cloudmesh.hypercomplex.normalize import verify_normalize
from cloudmesh.hypercomplex.scalars import Jet

METRIC = """
# a line metric in one variable
variables = 1
order = 2
g[1,1] = 1 + z1 + zb1
"""


@pytest.mark.incremental
class Test_normalize:

    def test_01_parse_jet(self):
        HEADING()
        jet = jet_from_text("1 + 2*z1 - I*zb2", 2, 2)
        assert jet == Jet(2, 2, {(0, 0, 0, 0): 1, (1, 0, 0, 0): 2, (0, 0, 0, 1): "-i"})
        with pytest.raises(ConfigError):
            jet_from_text("1 + ", 1, 2)

    def test_02_single_variable(self):
        HEADING()
        result = normalize_metric_jet(metric_from_values(parse_flat(METRIC)))
        assert result.b[0][0][0] == -1
        assert result.normal
        record = result.record()
        assert record["b"] == [{"b": "111", "value": "-1"}]
        assert record["normal"] is True

    def test_03_random(self):
        HEADING()
        rng = random.Random(7)
        for _ in range(3):
            signs = [rng.choice((1, -1)) for _ in range(2)]
            assert normalize_metric_jet(random_kahler_jet(2, rng, 2, signs=signs)).normal

    def test_04_rejected(self):
        HEADING()
        one = Jet.constant(1, 2)
        with pytest.raises(NotKahlerJet):
            normalize_metric_jet([[one + Jet.variable(1, 2, 0)]])
        with pytest.raises(NotKahlerJet):
            normalize_metric_jet([[Jet.constant(1, 2, 2)]])
        with pytest.raises(ConfigError):
            metric_from_values(parse_flat("order = 2\ng[1,1] = 1"))

    def test_05_report(self):
        HEADING()
        report = verify_normalize(trials=4, seed=3)
        assert report.passed, [row.record() for row in report.failed()]
