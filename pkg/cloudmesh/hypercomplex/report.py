"""
Report rows and their two renderings: line delimited records with a
fixed key order and a human readable table.
"""
import json

from cloudmesh.common.Printer import Printer

from cloudmesh.hypercomplex.__version__ import version

ROW_KEYS = ["suite", "row", "identity", "arena", "expected", "observed",
            "passed", "witness"]


class Row(object):

    def __init__(self,
                 suite=None,
                 row=None,
                 identity=None,
                 arena=None,
                 expected=None,
                 observed=None,
                 witness=None,
                 negated=False):
        """
        a single checked statement

        :param suite: the suite name
        :param row: the row id, a short formula string
        :param identity: the statement as it is usually written
        :param arena: where it was evaluated, e.g. "jet n=2 order=3"
        :param expected: the expected outcome
        :param observed: the observed outcome
        :param witness: the entry that decided a failing or unexpected outcome
        :param negated: a negative control, passes when observed != expected
        """
        self.suite = suite
        self.row = row
        self.identity = identity
        self.arena = arena
        self.expected = expected
        self.observed = observed
        self.witness = witness
        self.negated = negated

    @property
    def passed(self):
        same = self.observed == self.expected
        return not same if self.negated else same

    def record(self):
        expected = str(self.expected)
        if self.negated:
            expected = "not " + expected
        witness = self.witness
        if witness is None and hasattr(self.observed, "witness"):
            witness = self.observed.witness
        values = [self.suite, self.row, self.identity, self.arena, expected,
                  str(self.observed), self.passed, witness]
        return dict(zip(ROW_KEYS, values))

    def __str__(self):
        return json.dumps(self.record(), ensure_ascii=False)


class Report(object):

    def __init__(self, suite=None):
        self.suite = suite
        self.label = None
        self.rows = []
        self.certificates = []

    def add(self, row):
        if row.suite is None:
            row.suite = self.suite
        self.rows.append(row)
        return row

    def certificate(self, certificate):
        self.certificates.append(certificate)

    def extend(self, other):
        self.rows.extend(other.rows)
        self.certificates.extend(other.certificates)

    @property
    def passed(self):
        return all(row.passed for row in self.rows)

    def failed(self):
        return [row for row in self.rows if not row.passed]

    def records(self):
        result = [row.record() for row in self.rows]
        for certificate in self.certificates:
            record = {"record": "certificate"}
            record.update(certificate.record())
            result.append(record)
        return result


def header_record(config):
    """
    :param config: the scenario as a dict
    :return: dict
    """
    return {"record": "header",
            "engine": f"cloudmesh-hypercomplex {version}",
            "config": {key: config[key] for key in sorted(config)}}


def records_text(header, reports):
    """
    line delimited records, byte identical for equal inputs

    :param header: the header record
    :param reports: Reports in catalog order
    :return: str
    """
    lines = [json.dumps(header, ensure_ascii=False, sort_keys=False)]
    for report in reports:
        for record in report.records():
            lines.append(json.dumps(record, ensure_ascii=False))
    return "\n".join(lines) + "\n"


def summary_table(reports, timings=None):
    """
    human readable summary, one line per suite

    :param reports: Reports
    :param timings: dict label -> seconds
    :return: str
    """
    timings = timings or {}
    table = []
    for report in reports:
        failed = len(report.failed())
        name = report.label or report.suite
        table.append({
            "suite": name,
            "rows": len(report.rows),
            "failed": failed,
            "certificates": len(report.certificates),
            "status": "ok" if failed == 0 else "FAILED",
            "time": timings.get(name, ""),
        })
    return Printer.write(table,
                         order=["suite", "rows", "failed", "certificates",
                                "status", "time"],
                         output="table",
                         sort_keys=False)


def rows_table(report):
    return Printer.write([row.record() for row in report.rows],
                         order=["row", "expected", "observed", "passed"],
                         output="table",
                         sort_keys=False)
