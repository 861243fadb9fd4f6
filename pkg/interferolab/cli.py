# -*- coding: utf-8 -*-
"""
Command line interface.

    interferolab delta      quantum and hidden variable Delta for one setting
    interferolab sweep      Delta over a phase or polarizer angle sweep (CSV)
    interferolab mc-hv      photon counting estimate of Delta, hidden variables
    interferolab mc-quantum photon counting estimate of p(A1, A2)
    interferolab compile    compile a (sub)unitary operator into a netlist
    interferolab tomo       infer the input density matrix from Delta values

Exit status is 0 on success, 1 on estimation, verification or other runtime
failure and 2 on invalid input.
"""
import argparse
import json
import logging
import os
import re
import sys

import numpy as np

from interferolab import __version__
from interferolab.compilers import TargetOperator, compile_operator, to_netlist, verify
from interferolab.elements import LinearFilter, identity_filter, polarizer
from interferolab.experiments import (
    DensityTomography, delta_hv, delta_quantum, delta_quantum_mixed,
    malus_model, mc_hv, mc_quantum
)
from interferolab.utils.checks_utils import EstimationError, ValidationError
from interferolab.utils.experiments_utils import (
    angle_sweep, crossed_sweep, phase_sweep, read_measurements, write_csv
)
from interferolab.utils.io_utils import (
    array_to_json, dumps_netlist, load_config, load_matrix, loads_matrix
)

LOGGER = logging.getLogger(__name__)

SEED_ENV = 'INTERFEROLAB_SEED'
LOG_FORMAT = "%(asctime)s [%(levelname)8s] %(message)s (%(filename)s:%(lineno)s)"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

DEFAULT_RANGES = {'phase': '0:2pi', 'angle': '0:pi', 'crossed': '0:pi'}

_ANGLE = re.compile(
    r'([+-]?)(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)?\*?(pi)?(?:/(\d+(?:\.\d*)?))?'
)


###############################################################################
#                                                                             #
#                               ARGUMENT TYPES                                #
#                                                                             #
###############################################################################

def parse_angle(text):
    """
    Parse an angle in radians: a decimal number, optionally multiplied by
    pi and divided by a number, as in "0.5", "2pi", "-pi/2", "3*pi/4".
    """
    m = _ANGLE.fullmatch(text.replace(' ', ''))
    if m is None or (m.group(2) is None and m.group(3) is None):
        raise argparse.ArgumentTypeError("invalid angle {!r}".format(text))
    value = float(m.group(2)) if m.group(2) is not None else 1.0
    if m.group(3) is not None:
        value *= np.pi
    if m.group(4) is not None:
        divisor = float(m.group(4))
        if divisor == 0:
            raise argparse.ArgumentTypeError("division by zero in {!r}".format(text))
        value /= divisor
    return -value if m.group(1) == '-' else value


def parse_range(text):
    """Parse LO:HI into two angles."""
    parts = text.split(':')
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("range must read LO:HI, got {!r}".format(text))
    return parse_angle(parts[0]), parse_angle(parts[1])


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got {!r}".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got {}".format(value))
    return value


def _seed(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("seed must be an integer, got {!r}".format(text))
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be non negative, got {}".format(value))
    return value


###############################################################################
#                                                                             #
#                                   PARSER                                    #
#                                                                             #
###############################################################################

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '-v', '--verbose', action='count', default=0,
        help="log progress (-v) or debug information (-vv) on stderr"
    )

    experiment = argparse.ArgumentParser(add_help=False)
    experiment.add_argument(
        '--config', metavar='PATH',
        help="experiment configuration JSON (default: symmetric 50/50 splitters,"
             " q = 1, psi1 = (1, 0))"
    )
    experiment.add_argument('--a1', metavar='JSON', help="filter A1 as a 2x2 matrix (default I)")
    experiment.add_argument('--a2', metavar='JSON', help="filter A2 as a 2x2 matrix (default I)")

    stochastic = argparse.ArgumentParser(add_help=False)
    stochastic.add_argument(
        '--seed', type=_seed,
        help="master seed (default: ${})".format(SEED_ENV)
    )
    stochastic.add_argument(
        '--workers', type=_positive_int, default=1,
        help="number of independent substreams and threads (default 1)"
    )

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--out', metavar='PATH', help="output file (default: stdout)")

    parser = argparse.ArgumentParser(
        prog='interferolab',
        description="Single photon interference experiments and operator compilation.",
        parents=[common],
    )
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    commands.add_parser(
        'delta', parents=[common, experiment],
        help="quantum and hidden variable predictions of Delta(A1, A2)"
    )

    sweep = commands.add_parser(
        'sweep', parents=[common, experiment, stochastic, output],
        help="sweep a phase on A2 or polarizer angles, CSV output"
    )
    sweep.add_argument(
        '--param', choices=sorted(DEFAULT_RANGES), default='phase',
        help="phase: exp(i theta) A2; angle: A2 = polarizer(theta);"
             " crossed: A1 = polarizer(theta), A2 = polarizer(theta + pi/2)"
    )
    sweep.add_argument('--range', type=parse_range, metavar='LO:HI',
                       help="sweep range in radians, pi multiples accepted")
    sweep.add_argument('--steps', type=int, default=64, help="number of settings (default 64)")
    bounds = sweep.add_mutually_exclusive_group()
    bounds.add_argument(
        '--open', dest='open', action='store_const', const=True, default=None,
        help="exclude HI from the range (default for phase sweeps)"
    )
    bounds.add_argument(
        '--closed', dest='open', action='store_const', const=False,
        help="include HI in the range (default for angle and crossed sweeps)"
    )
    sweep.add_argument('--samples', type=_positive_int,
                       help="add photon counting rows with n photons per probability")

    mc_hv_parser = commands.add_parser(
        'mc-hv', parents=[common, experiment, stochastic],
        help="photon counting estimate of Delta under a hidden variable model"
    )
    mc_hv_parser.add_argument('--samples', type=_positive_int, required=True)
    mc_hv_parser.add_argument('--model', choices=['malus'], default='malus')

    mc_q = commands.add_parser(
        'mc-quantum', parents=[common, experiment, stochastic],
        help="photon counting estimate of the quantum p(A1, A2)"
    )
    mc_q.add_argument('--samples', type=_positive_int, required=True)

    comp = commands.add_parser(
        'compile', parents=[common, output],
        help="compile a unitary or subunitary matrix into a netlist"
    )
    comp.add_argument('matrix', help="JSON file holding the matrix as a list of rows")
    comp.add_argument('--check', action='store_true',
                      help="verify the reconstruction, fail above 1e-10")

    tomo = commands.add_parser(
        'tomo', parents=[common],
        help="infer the input density matrix from a measurement CSV"
    )
    tomo.add_argument('measurements', help="CSV with columns a1, a2, delta")
    tomo.add_argument('--config', metavar='PATH', help="apparatus configuration JSON")
    return parser


###############################################################################
#                                                                             #
#                                  COMMANDS                                   #
#                                                                             #
###############################################################################

def _print_json(d, stream=None):
    stream = sys.stdout if stream is None else stream
    stream.write(json.dumps(d, indent=2))
    stream.write('\n')


def _filters(args, default1=None, default2=None):
    a1 = (LinearFilter(loads_matrix(args.a1, name='a1'), label='A1') if args.a1
          else default1 or identity_filter(label='A1'))
    a2 = (LinearFilter(loads_matrix(args.a2, name='a2'), label='A2') if args.a2
          else default2 or identity_filter(label='A2'))
    return a1, a2


def _resolve_seed(args, parser):
    if args.seed is not None:
        return args.seed
    value = os.environ.get(SEED_ENV)
    if value is None:
        parser.error("a seed is required: pass --seed or set ${}".format(SEED_ENV))
    try:
        return _seed(value)
    except argparse.ArgumentTypeError as e:
        parser.error("invalid ${}: {}".format(SEED_ENV, e))


def cmd_delta(args, parser):
    cfg = load_config(args.config)
    a1, a2 = _filters(args)
    result = delta_quantum(cfg, a1, a2) if cfg.is_pure else delta_quantum_mixed(cfg, a1, a2)
    d = result.to_dict()
    d['delta_hv'] = delta_hv(None, a1, a2)
    _print_json(d)
    return 0


def cmd_sweep(args, parser):
    cfg = load_config(args.config)
    lo, hi = args.range if args.range is not None else parse_range(DEFAULT_RANGES[args.param])
    seed = _resolve_seed(args, parser) if args.samples is not None else None
    half_open = args.param == 'phase' if args.open is None else args.open
    kwargs = dict(
        lo=lo, hi=hi, steps=args.steps, endpoint=not half_open,
        n_samples=args.samples, seed=seed, n_jobs=args.workers
    )
    if args.param == 'phase':
        a1, a2 = _filters(args)
        df = phase_sweep(cfg, a1, a2, **kwargs)
    elif args.param == 'angle':
        a1, _ = _filters(args, default1=polarizer(0.0, label='A1'))
        df = angle_sweep(cfg, a1, **kwargs)
    else:
        df = crossed_sweep(cfg, **kwargs)
    LOGGER.info("Sweep of %s over [%r, %r], %d rows", args.param, lo, hi, df.shape[0])
    if args.out is None:
        sys.stdout.write(write_csv(df))
    else:
        write_csv(df, args.out)
    return 0


def cmd_mc_hv(args, parser):
    seed = _resolve_seed(args, parser)
    cfg = load_config(args.config)
    a1, a2 = _filters(args)
    model = malus_model(cfg)
    estimate = mc_hv(model, a1, a2, args.samples, seed, n_jobs=args.workers)
    d = estimate.to_dict()
    d['model'] = model.name
    _print_json(d)
    return 0


def cmd_mc_quantum(args, parser):
    seed = _resolve_seed(args, parser)
    cfg = load_config(args.config)
    a1, a2 = _filters(args)
    estimate = mc_quantum(cfg, a1, a2, args.samples, seed, n_jobs=args.workers)
    _print_json(estimate.to_dict())
    return 0


def cmd_compile(args, parser):
    target = TargetOperator(load_matrix(args.matrix))
    circuit = compile_operator(target)
    text = dumps_netlist(to_netlist(circuit)) + '\n'
    if args.out is None:
        sys.stdout.write(text)
        report_stream = sys.stderr
    else:
        with open(args.out, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        report_stream = sys.stdout
    if not args.check:
        return 0
    report = verify(circuit, target)
    d = report.to_dict()
    d['kind'] = target.kind
    _print_json(d, report_stream)
    if not report.passed:
        LOGGER.error("Reconstruction error %r above %r", report.max_error, report.tolerance)
        return 1
    return 0


def cmd_tomo(args, parser):
    cfg = load_config(args.config)
    measurements = read_measurements(args.measurements)
    estimator = DensityTomography(kappa=cfg.kappa, q=cfg.q).fit(
        [(a1, a2) for a1, a2, _ in measurements], [d for _, _, d in measurements]
    )
    rho = estimator.rho_
    _print_json({
        'rho': array_to_json(rho.m),
        'trace': rho.trace,
        'valid': estimator.validity_.valid,
        'diagnostic': estimator.validity_.diagnostic,
        'rank': estimator.rank_,
        'max_residual': float(np.abs(estimator.residuals_).max()),
    })
    return 0


COMMANDS = {
    'delta': cmd_delta,
    'sweep': cmd_sweep,
    'mc-hv': cmd_mc_hv,
    'mc-quantum': cmd_mc_quantum,
    'compile': cmd_compile,
    'tomo': cmd_tomo,
}


def main(argv=None):
    """
    Run the command line interface.

    Parameters
    ----------
    argv : list of str, optional
        Arguments, sys.argv[1:] by default.

    Returns
    -------
    int
        Exit status.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
        logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)
        return COMMANDS[args.command](args, parser)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except ValidationError as e:
        sys.stderr.write("interferolab: error: {}\n".format(e))
        return 2
    except EstimationError as e:
        sys.stderr.write("interferolab: estimation failed: {}\n".format(e))
        return 1
    except Exception as e:
        LOGGER.debug("Command failed", exc_info=True)
        sys.stderr.write("interferolab: failed: {}: {}\n".format(type(e).__name__, e))
        return 1
