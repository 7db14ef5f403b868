#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# GrandNorms.py
"""
Description: Command-line entry point computing grand and small Lebesgue norms, grand amalgam norms,
power-log membership, verification suites and the divergence demos.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import argparse
import json
import math
import sys

from dataclasses import replace
from typing import List, Optional, Tuple

import numpy as np

from src.libs.amalgam.Amalgam import AmalgamCalculator, AmalgamParams
from src.libs.amalgam.StepFunction import StepFunction
from src.libs.common.Config.Configuration import Configuration
from src.libs.common.Errors.Errors import DivergenceError, GrandNormsError
from src.libs.common.Logger.Logger import Logger
from src.libs.grand_norm.GrandNorm import GrandNormCalculator, GrandParams
from src.libs.operators.MultiplicationOperator import MultiplicationOperator
from src.libs.sequences.GrandSequence import GrandSequence, NormBracket
from src.libs.small_norm.SmallNorm import SmallNormCalculator
from src.libs.verifier.Report import VerificationReport, plain
from src.libs.verifier.Verifier import Verifier

# region Global params
EXIT_OK: int = 0
EXIT_VERIFY_FAIL: int = 1
EXIT_USAGE: int = 2
EXIT_DIVERGENCE: int = 3
OBJECTIVE_EPS: Tuple[float, ...] = tuple(np.geomspace(1e-6, 1e3, 46).tolist())
DEMO_NAMES: Tuple[str, ...] = ('objective', 'alternative-norm', 'remark-sets', 'unboundedness')
DEMO_FAMILIES = {'alternative-norm': 'alternative_norm', 'remark-sets': 'remark_sets'}
# endregion Global params


def _fmt(value: float) -> str:
    return f"{value:.12g}" if math.isfinite(value) else 'inf'


def _bracket_text(bracket: NormBracket) -> str:
    return f"[{_fmt(bracket.lower)}, {_fmt(bracket.upper)}]"


def _line(record: dict) -> str:
    return json.dumps(plain(record), separators=(',', ':')) + '\n'


def _reports_text(reports: List[VerificationReport], fmt: str) -> str:
    return ''.join(r.to_lines() if fmt == 'records' else r.to_human() for r in reports)


def build_parser() -> argparse.ArgumentParser:
    """
    Builds the argument parser with one subcommand per operation.

    *Returns*:
    - argparse.ArgumentParser
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--q', type=float, default=1.0, help="Global exponent q >= 1 (default 1).")
    common.add_argument('--theta', type=float, default=1.0, help="Weight theta > 0 (default 1).")
    common.add_argument('--p', type=float, default=1.0, help="Local exponent p >= 1 (default 1).")
    common.add_argument('--eps0', type=float, default=None,
                        help="Truncation point: norm-seq reports the truncated norm over (0, eps0].")
    common.add_argument('--budget', type=int, default=None,
                        help="Decomposition evaluations of the small-norm search (default from config).")
    common.add_argument('--seed', type=int, default=None, help="Suite seed (default from config).")
    common.add_argument('--cases', type=int, default=None, help="Cases per suite (default from config).")
    common.add_argument('--tolerance', type=float, default=None, help="Absolute slack (default from config).")
    common.add_argument('-i', '--input', type=str, default=None, help="Sequence or step-function JSON file.")
    common.add_argument('-o', '--output', type=str, default=None, help="Also write the results to this file.")
    common.add_argument('-f', '--format', type=str, choices=['human', 'records'], default='human',
                        help="Aligned text or JSON-lines records (default human).")
    common.add_argument('-c', '--config', type=str, default=None,
                        help="Configuration file (default $GRAND_NORMS_CONFIG or ./config.json).")

    parser = argparse.ArgumentParser(description="Grand Lebesgue and grand amalgam norm toolkit.")
    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser('norm-seq', parents=[common], help="Grand norm bracket of a sequence file.")
    commands.add_parser('norm-amalgam', parents=[common], help="Grand amalgam norm bracket of a step function.")
    commands.add_parser('norm-small', parents=[common], help="Small norm bracket of a sequence file.")

    membership = commands.add_parser('membership', parents=[common], help="Power-log family membership.")
    membership.add_argument('--family', type=str, choices=['powerlog'], default='powerlog',
                            help="x_n = n^(-1/q) (ln(n+1))^(-a).")
    membership.add_argument('--a', type=float, default=0.0, help="Logarithmic exponent a (default 0).")
    membership.add_argument('--log-case', action='store_true', help="Use x_n = n^(-1/q), ignoring --a.")

    verify = commands.add_parser('verify', parents=[common], help="Run verification suites.")
    verify.add_argument('--suite', type=str, default='all', help="Suite name or 'all' (default all).")

    demo = commands.add_parser('demo', parents=[common], help="Plot tables and divergence evidence.")
    demo.add_argument('--name', type=str, choices=list(DEMO_NAMES), required=True, help="Demo to run.")
    return parser


class GrandNormsCommand:
    """
    Runs one parsed command.

    *Attributes*:
    - args --> argparse.Namespace : Parsed arguments.
    - logger --> Logger : Instance of the Logger class to log messages.
    - configuration --> Configuration : Settings loaded from the config file.

    *Methods*:
    - run() --> (text, exit code) of the command.
    """

    def __init__(self, args: argparse.Namespace, logger: Logger, configuration: Configuration) -> None:
        self.args = args
        self.logger = logger
        self.configuration = configuration

    def _grand(self) -> GrandNormCalculator:
        c = self.configuration
        return GrandNormCalculator(self.logger, c.optimizer, c.sequence)

    def _amalgam(self) -> AmalgamCalculator:
        c = self.configuration
        return AmalgamCalculator(self.logger, c.optimizer, c.search, c.sequence)

    def _sequence(self) -> GrandSequence:
        if self.args.input is None:
            raise GrandNormsError(f"{self.args.command} needs --input with a sequence file")
        return GrandSequence.load(self.args.input)

    def run(self) -> Tuple[str, int]:
        handler = {
            'norm-seq': self.norm_seq,
            'norm-amalgam': self.norm_amalgam,
            'norm-small': self.norm_small,
            'membership': self.membership,
            'verify': self.verify,
            'demo': self.demo,
        }[self.args.command]
        return handler()

    def _norm_output(self, kind: str, inputs: dict, bracket: NormBracket, extra: dict = None) -> Tuple[str, int]:
        if self.args.format == 'records':
            text = _line({'command': self.args.command, 'norm': kind, 'inputs': inputs, 'bracket': bracket,
                          **(extra or {})})
        else:
            described = ', '.join(f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}" for k, v in inputs.items())
            text = f"{kind} ({described}): {_bracket_text(bracket)}\n"
        if not bracket.is_finite:
            raise DivergenceError(f"{kind} has no finite upper bound, bracket {_bracket_text(bracket)}")
        return text, EXIT_OK

    def norm_seq(self) -> Tuple[str, int]:
        x = self._sequence()
        params = GrandParams(self.args.q, self.args.theta)
        grand = self._grand()
        if self.args.eps0 is not None:
            bracket = grand.grand_norm_truncated(x, params, self.args.eps0)
            return self._norm_output('truncated grand norm', {**params.to_record(), 'eps0': self.args.eps0}, bracket)
        return self._norm_output('grand norm', params.to_record(), grand.grand_norm(x, params))

    def norm_amalgam(self) -> Tuple[str, int]:
        if self.args.input is None:
            raise GrandNormsError("norm-amalgam needs --input with a step-function file")
        g = StepFunction.load(self.args.input)
        params = AmalgamParams(self.args.p, self.args.q, self.args.theta)
        return self._norm_output('grand amalgam norm', params.to_record(),
                                 self._amalgam().amalgam_grand_norm(g, params))

    def norm_small(self) -> Tuple[str, int]:
        y = self._sequence()
        params = GrandParams(self.args.q, self.args.theta)
        c = self.configuration
        small = SmallNormCalculator(self.logger, c.optimizer, c.search, c.sequence)
        estimate = small.small_norm_upper(y, params, self.args.budget)
        return self._norm_output('small norm', params.to_record(), estimate.bracket,
                                 {'estimate': estimate.to_record()})

    def membership(self) -> Tuple[str, int]:
        params = GrandParams(self.args.q, self.args.theta)
        report = self._grand().powerlog_membership(params, self.args.a, self.args.log_case,
                                                   threshold=self.configuration.suite.divergence_threshold)
        if self.args.format == 'records':
            return _line({'command': 'membership', **report.to_record()}), EXIT_OK
        norm = _bracket_text(report.norm) if report.norm is not None else 'n/a'
        text = (f"{report.verdict}\n"
                f"  criterion {report.lower_boundary:.12g} <= a <= {report.upper_boundary:.12g}, a={report.a:g}\n"
                f"  norm {norm}, threshold crossed: {report.threshold_crossed}\n")
        return text, EXIT_OK

    def verify(self) -> Tuple[str, int]:
        verifier = Verifier(self.logger, self.configuration)
        suite_cfg = self.configuration.suite
        overrides = {name: getattr(self.args, name) for name in ('seed', 'cases', 'tolerance')
                     if getattr(self.args, name) is not None}
        if overrides:
            suite_cfg = replace(suite_cfg, **overrides)
        if self.args.suite == 'all':
            reports = verifier.run_all(suite_cfg)
        else:
            reports = [verifier.run_suite(self.args.suite, suite_cfg)]
        code = EXIT_VERIFY_FAIL if any(r.failed for r in reports) else EXIT_OK
        return _reports_text(reports, self.args.format), code

    def demo(self) -> Tuple[str, int]:
        name = self.args.name
        if name == 'objective':
            x = self._sequence()
            params = GrandParams(self.args.q, self.args.theta)
            rows = self._grand().objective_table(x, params, OBJECTIVE_EPS)
            if self.args.format == 'records':
                return ''.join(_line({'eps': e, 'lower': lo, 'upper': hi}) for e, lo, hi in rows), EXIT_OK
            lines = ['# eps objective']
            lines.extend(f"{e:.12g} {hi:.12g}" for e, _, hi in rows)
            return '\n'.join(lines) + '\n', EXIT_OK
        if name == 'unboundedness':
            amalgam = self._amalgam()
            operator = MultiplicationOperator(self.logger, amalgam, self.configuration.operator)
            report = operator.unboundedness_ladder(AmalgamParams(self.args.p, self.args.q, self.args.theta))
        else:
            report = Verifier(self.logger, self.configuration).divergence_demo(DEMO_FAMILIES[name])
        code = EXIT_VERIFY_FAIL if report.failed else EXIT_OK
        return _reports_text([report], self.args.format), code


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main function to parse arguments and run the selected command.

    *Arguments*:
    - argv --> list : Arguments without the program name; sys.argv[1:] when None.

    *Returns*:
    - int : 0 on success, 1 when a verification record fails, 2 on usage, input or domain errors, 3 when a
      norm that has to be finite diverges.

    *Examples*:
    - main(['norm-seq', '--q', '1', '--theta', '1', '--input', 'samples/spike.seq.json'])

    *Notes*:
    - Results go to standard output (and --output), diagnostics to standard error through the Logger.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    config_path = args.config if args.config is not None else Configuration.default_path()
    log = Logger(config_json=config_path)
    try:
        configuration = Configuration.load(config_path)
        log.write_debug(f"Running {args.command} with configuration from '{configuration.source or 'defaults'}'")
        text, code = GrandNormsCommand(args, log, configuration).run()
    except DivergenceError as e:
        log.write_error(f"Divergence: {str(e)}")
        return EXIT_DIVERGENCE
    except (GrandNormsError, OSError) as e:
        log.write_error(f"Error running {args.command}: {str(e)}")
        return EXIT_USAGE

    sys.stdout.write(text)
    if args.output is not None:
        try:
            with open(args.output, 'w') as handle:
                handle.write(text)
        except OSError as e:
            log.write_error(f"Could not write {args.output}: {str(e)}")
            return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
