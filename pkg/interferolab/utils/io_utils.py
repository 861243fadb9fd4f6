# -*- coding: utf-8 -*-
"""
JSON file formats: experiment configurations and netlists. Complex scalars
are written as [re, im]; plain real numbers are accepted on input.
"""
import json
import logging
from os.path import dirname, join

import numpy as np

from interferolab.circuits import Netlist, Placement
from interferolab.elements import BeamSplitter, LinearFilter, Mirror, Detector
from interferolab.experiments import ExperimentConfig
from interferolab.states import JonesVector, DensityMatrix
from interferolab.utils.checks_utils import is_int, NetlistError, ValidationError

LOGGER = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = join(dirname(dirname(__file__)), 'data', 'dark_port.json')


###############################################################################
#                                                                             #
#                              COMPLEX VALUES                                 #
#                                                                             #
###############################################################################

def complex_to_json(z):
    z = complex(z)
    return [z.real, z.imag]


def array_to_json(x):
    """Nested lists of [re, im] pairs for a complex vector or matrix."""
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim == 0:
        return complex_to_json(x)
    return [array_to_json(row) for row in x]


def parse_complex(x, name='value'):
    """
    Parse a complex scalar given as a real number or as a [re, im] pair.

    Raises
    ------
    ValidationError
        If x has any other form.

    """
    if isinstance(x, bool):
        raise ValidationError("{} must be a number or a [re, im] pair, but got {!r}".format(name, x))
    if isinstance(x, (int, float, np.integer, np.floating)):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(
        isinstance(v, (int, float, np.integer, np.floating)) and not isinstance(v, bool)
        for v in x
    ):
        return complex(x[0], x[1])
    raise ValidationError(
        "{} must be a number or a [re, im] pair, but got {!r}".format(name, x)
    )


def parse_vector(x, name='vector'):
    """Parse a list of complex scalars into a complex128 array."""
    if not isinstance(x, (list, tuple)) or len(x) == 0:
        raise ValidationError("{} must be a non empty list, but got {!r}".format(name, x))
    return np.array(
        [parse_complex(v, name="{}[{}]".format(name, i)) for i, v in enumerate(x)],
        dtype=np.complex128
    )


def parse_matrix(x, name='matrix'):
    """Parse a list of rows of complex scalars into a complex128 array."""
    if not isinstance(x, (list, tuple)) or len(x) == 0:
        raise ValidationError("{} must be a non empty list of rows, but got {!r}".format(name, x))
    rows = [parse_vector(row, name="{} row {}".format(name, i)) for i, row in enumerate(x)]
    if len({r.shape[0] for r in rows}) != 1:
        raise ValidationError("{} has rows of different lengths".format(name))
    return np.stack(rows)


def loads_matrix(text, name='matrix'):
    """Parse a matrix from a JSON string, as given on the command line."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError("{} is not valid JSON: {}".format(name, e))
    return parse_matrix(value, name=name)


###############################################################################
#                                                                             #
#                           EXPERIMENT CONFIGURATION                          #
#                                                                             #
###############################################################################

def _read_json(path, what):
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ValidationError("{} file {} is not valid JSON: {}".format(what, path, e))
    except OSError as e:
        raise ValidationError("cannot read {} file {}: {}".format(what, path, e))


def config_from_dict(d):
    """
    Build an ExperimentConfig from {"sa", "sb", "q", "psi1" | "rho1"}.

    Raises
    ------
    ValidationError
        On missing keys or invalid values. Element errors name the
        offending splitter.

    """
    if not isinstance(d, dict):
        raise ValidationError("configuration must be a JSON object")
    for key in ('sa', 'sb'):
        if key not in d:
            raise ValidationError("configuration is missing '{}'".format(key))
    unknown = set(d) - {'sa', 'sb', 'q', 'psi1', 'rho1'}
    if unknown:
        raise ValidationError("unknown configuration keys: {}".format(sorted(unknown)))
    sa = BeamSplitter(parse_matrix(d['sa'], name='sa'), label='sa')
    sb = BeamSplitter(parse_matrix(d['sb'], name='sb'), label='sb')
    q = d.get('q', 1.0)
    psi1 = None
    rho1 = None
    if 'psi1' in d:
        psi1 = JonesVector.from_array(parse_vector(d['psi1'], name='psi1'))
    if 'rho1' in d:
        rho1 = DensityMatrix(parse_matrix(d['rho1'], name='rho1'))
    return ExperimentConfig(sa, sb, q=q, psi1=psi1, rho1=rho1)


def config_to_dict(cfg):
    d = {
        'sa': array_to_json(cfg.sa.s),
        'sb': array_to_json(cfg.sb.s),
        'q': cfg.q,
    }
    if cfg.is_pure:
        d['psi1'] = array_to_json(cfg.psi1.amplitudes)
    else:
        d['rho1'] = array_to_json(cfg.rho1.m)
    return d


def load_config(path=None):
    """Load an experiment configuration, the dark port example by default."""
    path = DEFAULT_CONFIG_PATH if path is None else path
    LOGGER.debug("Loading configuration %s", path)
    return config_from_dict(_read_json(path, 'configuration'))


###############################################################################
#                                                                             #
#                                  NETLISTS                                   #
#                                                                             #
###############################################################################

def _placement_to_dict(placement):
    element = placement.element
    if isinstance(element, BeamSplitter):
        params = {'s': array_to_json(element.s)}
    elif isinstance(element, LinearFilter):
        params = {'a': array_to_json(element.a)}
    elif isinstance(element, Mirror):
        params = {'phase': complex_to_json(element.phase)}
    else:
        params = {'q': element.q}
    d = {'type': element.kind, 'beams': list(placement.beams), 'params': params}
    if element.label is not None:
        d['label'] = element.label
    if placement.note is not None:
        d['note'] = placement.note
    return d


def netlist_to_dict(net):
    """Netlist as {"n_beams", "elements"}; detectors come last."""
    return {
        'n_beams': net.n_beams,
        'elements': [_placement_to_dict(p) for p in net.elements + net.detectors],
    }


def _placement_from_dict(position, d):
    if not isinstance(d, dict) or 'type' not in d or 'beams' not in d:
        raise NetlistError(
            "element {} must be an object with 'type' and 'beams'".format(position)
        )
    kind = d['type']
    params = d.get('params', {})
    label = d.get('label')
    where = "element {} ({})".format(position, kind)
    try:
        if kind == 'beamsplitter':
            element = BeamSplitter(parse_matrix(params['s'], name=where + ' s'), label=label)
        elif kind == 'filter':
            element = LinearFilter(parse_matrix(params['a'], name=where + ' a'), label=label)
        elif kind == 'mirror':
            element = Mirror(parse_complex(params.get('phase', 1.0), name=where + ' phase'),
                             label=label)
        elif kind == 'detector':
            element = Detector(params.get('q', 1.0), label=label)
        else:
            raise NetlistError("{} has an unknown type".format(where))
    except KeyError as e:
        raise NetlistError("{} is missing parameter {}".format(where, e))
    beams = d['beams']
    if is_int(beams):
        beams = [beams]
    if not isinstance(beams, list):
        raise NetlistError("{} beams must be a list of indices".format(where))
    return Placement(element, tuple(beams), note=d.get('note'))


def netlist_from_dict(d):
    """Inverse of netlist_to_dict. Detector entries become terminal taps."""
    if not isinstance(d, dict) or 'n_beams' not in d:
        raise NetlistError("netlist must be a JSON object with 'n_beams'")
    placements = [
        _placement_from_dict(i, e) for i, e in enumerate(d.get('elements', []), start=1)
    ]
    elements = [p for p in placements if not isinstance(p.element, Detector)]
    detectors = [p for p in placements if isinstance(p.element, Detector)]
    return Netlist(d['n_beams'], elements=elements, detectors=detectors)


def dumps_netlist(net):
    return json.dumps(netlist_to_dict(net), indent=2)


def dump_netlist(net, path):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(dumps_netlist(net))
        f.write('\n')


def load_netlist(path):
    return netlist_from_dict(_read_json(path, 'netlist'))


def load_matrix(path):
    """Load a complex square matrix from a JSON file (list of rows)."""
    return parse_matrix(_read_json(path, 'matrix'), name=path)
