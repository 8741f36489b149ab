from __future__ import print_function

import json
import sys

from cloudmesh.common.Printer import Printer
from cloudmesh.common.console import Console
from cloudmesh.common.debug import VERBOSE
from cloudmesh.common.dotdict import dotdict
from cloudmesh.common.util import path_expand
from cloudmesh.common.util import writefile
from cloudmesh.shell.command import PluginCommand
from cloudmesh.shell.command import command, map_parameters
from docopt import DocoptExit
from docopt import docopt

from cloudmesh.hypercomplex.api.manager import EXIT_CONFIG
from cloudmesh.hypercomplex.api.manager import EXIT_FAILED
from cloudmesh.hypercomplex.api.manager import EXIT_OK
from cloudmesh.hypercomplex.api.manager import Manager
from cloudmesh.hypercomplex.api.manager import certify
from cloudmesh.hypercomplex.api.manager import normalize
from cloudmesh.hypercomplex.catalog import list_suites
from cloudmesh.hypercomplex.config import Scenario
from cloudmesh.hypercomplex.config import read_flat
from cloudmesh.hypercomplex.error import HypercomplexError


def _emit(text, output=None):
    if output:
        writefile(path_expand(output), text)
        Console.ok(f"written to {output}")
    else:
        print(text)


def execute(arguments):
    """
    runs a parsed hyper command

    :param arguments: the docopt arguments as a dotdict
    :return: the exit status, 0 ok, 1 failing rows, 2 bad input
    """
    map_parameters(arguments,
                   "config",
                   "seed",
                   "threads",
                   "output")
    arguments["format"] = arguments.get("--format")
    VERBOSE(arguments)
    kind = arguments.format or "text"
    if kind not in ("text", "records"):
        Console.error(f"format '{kind}' not yet supported")
        return EXIT_CONFIG

    try:
        if arguments["list-suites"]:
            suites = list_suites()
            if kind == "records":
                _emit("\n".join(json.dumps(entry, ensure_ascii=False) for entry in suites),
                      arguments.output)
            else:
                _emit(str(Printer.write(suites,
                                        order=["name", "group", "anchor", "arenas"],
                                        output="table",
                                        sort_keys=False)),
                      arguments.output)
            return EXIT_OK

        elif arguments.run:
            values = read_flat(arguments.config) if arguments.config else {}
            if arguments.SUITE:
                values["suite"] = values.get("suite", []) + list(arguments.SUITE)
            scenario = Scenario(values, seed=arguments.seed, threads=arguments.threads)
            manager = Manager(scenario)
            manager.run()
            manager.write(output=arguments.output or scenario.settings.get("output"),
                          kind=arguments.format or scenario.settings.get("format", "text"))
            return manager.status

        elif arguments.certify:
            scenario = Scenario(read_flat(arguments.config), seed=arguments.seed,
                                suites=False)
            result = certify(scenario)
            if kind == "records":
                record = {"record": "certificate"}
                record.update(result.record())
                _emit(json.dumps(record, ensure_ascii=False), arguments.output)
            else:
                _emit(str(Printer.write(result.fibers,
                                        order=["p", "q", "dimension", "verdict", "kappa",
                                               "min_eigenvalue", "witness"],
                                        output="table",
                                        sort_keys=False)),
                      arguments.output)
                for text, holds in result.claims:
                    (Console.ok if holds else Console.error)(text)
            return EXIT_OK if result.passed else EXIT_FAILED

        elif arguments.normalize:
            result = normalize(arguments.FILE)
            record = result.record()
            if kind == "records":
                _emit(json.dumps(record, ensure_ascii=False), arguments.output)
            else:
                lines = record["coordinates"] + \
                    [f"g({j + 1},{k + 1}) = {entry}"
                     for j, row in enumerate(record["metric"])
                     for k, entry in enumerate(row)]
                _emit("\n".join(lines), arguments.output)
            return EXIT_OK if result.normal else EXIT_FAILED

    except HypercomplexError as e:
        Console.error(str(e))
        return EXIT_CONFIG
    return EXIT_CONFIG


def report_status(status):
    """
    logs a non zero exit status through Console

    :param status: the exit status of execute
    :return: the status
    """
    if status == EXIT_FAILED:
        Console.error(f"hyper: a row failed, exit status {status}")
    elif status != EXIT_OK:
        Console.error(f"hyper: malformed input, exit status {status}")
    return status


# noinspection PyBroadException
class HyperCommand(PluginCommand):

    # noinspection PyUnusedLocal
    @command
    def do_hyper(self, args, arguments):
        """
        ::

          Usage:
                hyper run [SUITE...] [--config=FILE] [--seed=SEED] [--threads=N] [--output=OUTPUT] [--format=FORMAT]
                hyper list-suites [--output=OUTPUT] [--format=FORMAT]
                hyper certify --config=FILE [--seed=SEED] [--output=OUTPUT] [--format=FORMAT]
                hyper normalize FILE [--output=OUTPUT] [--format=FORMAT]

          Exact verification of the operator identities of hypercomplex
          and hyperkähler geometry.

          Arguments:
              SUITE     the name of a suite, see hyper list-suites
              FILE      a flat file with the entries of a metric jet

          Options:
              --config=FILE      a scenario file with key = value lines
              --seed=SEED        the seed, overrides the scenario
              --threads=N        the number of workers
              --output=OUTPUT    the file the records are written to
              --format=FORMAT    text or records, text if not given

          Description:
                hyper run [SUITE...]
                    runs the suites of the scenario and the named suites.
                    The exit status is 0 if every row passes, 1 if a row
                    fails and 2 for a malformed scenario.

                hyper list-suites
                    lists the suites with the statement each one checks

                hyper certify --config=FILE
                    computes the vanishing certificate for the curvature
                    lines of the scenario

                hyper normalize FILE
                    moves a Kähler metric jet to normal coordinates

                The environment variable CLOUDMESH_HYPERCOMPLEX_THREADS
                sets the default number of workers.

          Example:
            hyper run algebra commutator --seed=1
            hyper run --config=desk.txt --threads=8 --output=desk.jsonl
            hyper certify --config=line.txt --format=records

        """
        report_status(execute(arguments))
        return ""


def main(argv=None):
    """the cms-hyper console script"""
    try:
        arguments = docopt(HyperCommand.do_hyper.__doc__,
                           argv=sys.argv[1:] if argv is None else argv)
    except DocoptExit as e:
        Console.error(str(e))
        return EXIT_CONFIG
    return execute(dotdict(arguments))


if __name__ == "__main__":
    sys.exit(main())
