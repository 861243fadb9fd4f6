import json

import numpy as np
import pytest

from sklearn.utils import check_random_state

from interferolab.circuits import Netlist, Placement
from interferolab.compilers import compile_operator, to_netlist
from interferolab.elements import (
    Detector, Mirror, identity_filter, polarizer,
    symmetric_beamsplitter
)
from interferolab.experiments import ExperimentConfig, interference_netlist
from interferolab.states import unpolarized
from interferolab.utils.checks_utils import (
    InvalidElementError, NetlistError, ValidationError
)
from interferolab.utils.io_utils import (
    array_to_json, config_from_dict, config_to_dict, dump_netlist, dumps_netlist,
    load_config, load_matrix, load_netlist, loads_matrix, netlist_from_dict,
    netlist_to_dict, parse_complex, parse_matrix
)
from interferolab.utils.random_utils import haar_unitary, random_config

##########################################
#                                        #
#           Test complex values          #
#                                        #
##########################################

@pytest.mark.parametrize("x, expected", [
    (1, 1 + 0j),
    (0.5, 0.5 + 0j),
    ([0.0, 1.0], 1j),
    ((2, -3), 2 - 3j),
])
def test_parse_complex(x, expected):
    assert parse_complex(x) == expected


@pytest.mark.parametrize("x", [True, "1", [1], [1, 2, 3], [[1, 0], 0], None])
def test_parse_complex_invalid(x):
    with pytest.raises(ValidationError):
        parse_complex(x)


def test_parse_matrix_mixed_forms():
    m = parse_matrix([[1, [0, 1]], [[0, -1], 0.5]])
    assert np.array_equal(m, np.array([[1, 1j], [-1j, 0.5]]))


def test_parse_matrix_ragged():
    with pytest.raises(ValidationError, match="different lengths"):
        parse_matrix([[1, 0], [0]])


def test_array_to_json_is_exact():
    u = haar_unitary(3, 0)
    assert np.array_equal(loads_matrix(json.dumps(array_to_json(u))), u)


def test_loads_matrix_invalid_json():
    with pytest.raises(ValidationError, match="A1"):
        loads_matrix("[[1, 0], [0, 1]", name='A1')

##########################################
#                                        #
#         Test configuration files       #
#                                        #
##########################################

def test_default_config_is_dark_port():
    cfg = load_config()
    reference = ExperimentConfig.dark_port()
    assert cfg.sa == reference.sa
    assert cfg.sb == reference.sb
    assert cfg.q == 1.0
    assert cfg.psi1 == reference.psi1
    assert abs(cfg.kappa + 0.25) <= 1e-15


@pytest.mark.parametrize("mixed", [False, True])
def test_config_dict_round_trip(mixed):
    rng = check_random_state(int(mixed))
    cfg = random_config(rng, mixed=mixed)
    back = config_from_dict(json.loads(json.dumps(config_to_dict(cfg))))
    assert back.sa == cfg.sa and back.sb == cfg.sb
    assert back.q == cfg.q
    assert np.array_equal(back.rho.m, cfg.rho.m)
    assert back.is_pure == cfg.is_pure


def test_config_names_offending_splitter():
    d = config_to_dict(ExperimentConfig.dark_port())
    d['sa'] = [[1, 0], [0, 2]]
    with pytest.raises(InvalidElementError, match="beamsplitter sa"):
        config_from_dict(d)


def test_config_unknown_key():
    d = config_to_dict(ExperimentConfig.dark_port())
    d['phi'] = 1
    with pytest.raises(ValidationError, match="phi"):
        config_from_dict(d)


def test_config_missing_key():
    d = config_to_dict(ExperimentConfig.dark_port())
    del d['sb']
    with pytest.raises(ValidationError, match="sb"):
        config_from_dict(d)


def test_config_mixed_input():
    d = config_to_dict(ExperimentConfig.dark_port().with_input(rho1=unpolarized()))
    assert 'rho1' in d and 'psi1' not in d
    assert np.allclose(config_from_dict(d).rho.m, np.eye(2) / 2)


def test_load_config_bad_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding='utf-8')
    with pytest.raises(ValidationError, match="not valid JSON"):
        load_config(str(path))
    with pytest.raises(ValidationError, match="cannot read"):
        load_config(str(tmp_path / "missing.json"))

##########################################
#                                        #
#              Test netlists             #
#                                        #
##########################################

def test_netlist_round_trip():
    cfg = ExperimentConfig.dark_port(q=0.9)
    net = interference_netlist(cfg, polarizer(0.3), identity_filter())
    back = netlist_from_dict(json.loads(dumps_netlist(net)))
    assert back == net
    assert [p.element.label for p in back.elements] == [p.element.label for p in net.elements]


def test_netlist_detectors_written_last():
    net = Netlist(
        2,
        elements=[Placement(symmetric_beamsplitter(label='bs'), (1, 2), note='first')],
        detectors=[Placement(Detector(0.5, label='D'), 2)],
    )
    d = netlist_to_dict(net)
    assert [e['type'] for e in d['elements']] == ['beamsplitter', 'detector']
    assert d['elements'][0]['beams'] == [1, 2]
    assert d['elements'][0]['note'] == 'first'
    assert d['elements'][1]['label'] == 'D'
    assert 'note' not in d['elements'][1]


def test_compiled_netlist_file(tmp_path):
    net = to_netlist(compile_operator(haar_unitary(4, 1)))
    path = tmp_path / "net.json"
    dump_netlist(net, str(path))
    text = path.read_bytes()
    assert text.endswith(b"\n") and b"\r" not in text
    back = load_netlist(str(path))
    assert back == net
    assert [p.note for p in back.elements] == [p.note for p in net.elements]


def test_netlist_from_dict_single_beam_index():
    net = netlist_from_dict({
        'n_beams': 1,
        'elements': [{'type': 'mirror', 'beams': 1, 'params': {'phase': [0, 1]}}],
    })
    assert net.elements[0].element == Mirror(1j)


@pytest.mark.parametrize("d", [
    [],
    {'elements': []},
    {'n_beams': 2, 'elements': [{'type': 'lens', 'beams': [1]}]},
    {'n_beams': 2, 'elements': [{'type': 'filter', 'beams': [1]}]},
    {'n_beams': 2, 'elements': [{'beams': [1]}]},
    {'n_beams': 2, 'elements': [{'type': 'mirror', 'beams': 'one'}]},
])
def test_netlist_from_dict_invalid(d):
    with pytest.raises(NetlistError):
        netlist_from_dict(d)


def test_netlist_from_dict_invalid_element():
    with pytest.raises(InvalidElementError):
        netlist_from_dict({
            'n_beams': 2,
            'elements': [{'type': 'beamsplitter', 'beams': [1, 2], 'params': {'s': [[1, 1], [1, 1]]}}],
        })


def test_load_matrix(tmp_path):
    path = tmp_path / "u.json"
    u = haar_unitary(3, 2)
    path.write_text(json.dumps(array_to_json(u)), encoding='utf-8')
    assert np.array_equal(load_matrix(str(path)), u)
