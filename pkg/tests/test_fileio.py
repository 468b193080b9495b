import json

import pytest

from goldie_lab.errors import InputError
from goldie_lab.fileio import load_kernel_samples, load_params, load_sequence, params_to_json, parse_params
from goldie_lab.stable import StableParams


def test_pitman_shape():
    p = load_params('{"c": 1, "y": 0, "lambda": 1, "alpha": 0.5}')
    assert abs(p.kappa - complex(-0.5, 1)) < 1e-15


def test_canonical_shape():
    p = load_params('{"f1": [-1, 0], "kappa": [-0.5, 1], "gamma": -0.5}')
    assert p == StableParams(-1, complex(-0.5, 1), -0.5)


def test_round_trip():
    p = StableParams(-1.25 + 0.5j, 0.3 - 2j, 0.7)
    assert load_params(json.dumps(params_to_json(p))) == p


def test_file_path(tmp_path):
    f = tmp_path / "p.json"
    f.write_text('{"c": 2, "y": 0.5, "lambda": 0, "alpha": 1.5}')
    assert load_params(f).f1 == complex(-2, 0.5)


@pytest.mark.parametrize("text,needle", [
    ('{"c": 1, "y": 0,', "line 1"),
    ('{"c": 1, "y": 0, "lambda": 0}', "alpha"),
    ('{"c": 1, "y": 0, "lambda": 0, "alpha": 1, "beta": 2}', "beta"),
    ('{"c": 1, "y": 0, "lambda": 0, "alpha": 1, "gamma": 2}', "mix"),
    ('{"c": "1", "y": 0, "lambda": 0, "alpha": 1}', "'c'"),
    ('{"c": true, "y": 0, "lambda": 0, "alpha": 1}', "'c'"),
    ('{"f1": [-1], "kappa": [0, 0], "gamma": 0}', "'f1'"),
    ('{"f1": [-1, 0], "kappa": [0, NaN], "gamma": 0}', "kappa[1]"),
    ('{"c": -1, "y": 0, "lambda": 0, "alpha": 1}', "c must be"),
    ('[1, 2]', "object"),
])
def test_diagnostics_name_the_problem(text, needle):
    with pytest.raises(InputError, match=None) as info:
        load_params(text)
    assert needle in str(info.value)


def test_parse_params_accepts_dict():
    assert parse_params({"f1": [-1, 0], "kappa": [0.5, 0], "gamma": 0.5}).alpha == 1.5


def test_kernel_samples():
    rows = load_kernel_samples("x,re,im\n1,3,0\n2,6,0.5\n\n3,9,1\n")
    assert rows == [(1.0, 3 + 0j), (2.0, 6 + 0.5j), (3.0, 9 + 1j)]


def test_sequence():
    assert load_sequence("n,a_n\n1,1\n2,4\n3,9\n") == [1.0, 4.0, 9.0]


@pytest.mark.parametrize("text,needle", [
    ("", "empty"),
    ("x,y\n1,2\n", "header"),
    ("n,a_n\n", "no data"),
    ("n,a_n\n1,1\n2\n", "line 3"),
    ("n,a_n\n1,1\n2,abc\n", "line 3"),
    ("n,a_n\n1,1\n1,2\n", "increasing"),
    ("n,a_n\n1,1\n3,2\n", "n = 2"),
    ("n,a_n\n1,1\n2,inf\n", "non-finite"),
    ("n,a_n\n1,1\n2,\n", "line 3"),
])
def test_table_diagnostics(text, needle):
    with pytest.raises(InputError) as info:
        load_sequence(text)
    assert needle in str(info.value)
