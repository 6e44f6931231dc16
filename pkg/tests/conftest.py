import json

import pytest


def unit(dim, *idx):
    v = [0] * dim
    for i in idx:
        v[i] = 1
    return v


def problem(algebra, gens, t, **search):
    d = {"algebra": algebra, "subalgebra_generators": gens, "cartan_t": t}
    if search:
        d["search"] = search
    return d


# the five standing cases used throughout the suite
CASES = {
    "a1_t": problem("A1", [unit(3, 0)], [unit(3, 0)]),
    "a2_torus": problem(
        "A2", [unit(8, 0), unit(8, 1)], [unit(8, 0), unit(8, 1)]
    ),
    "a2_principal": problem(
        "A2", [unit(8, 0, 1), unit(8, 2, 3), unit(8, 5, 6)], [unit(8, 0, 1)]
    ),
    # A1xA1 basis: h0 h1 e(0,1) e(1,0) f(0,1) f(1,0); k = the (1,0) factor
    "a1a1_factor": problem(
        "A1xA1", [unit(6, 0), unit(6, 3), unit(6, 5)], [unit(6, 0)]
    ),
    # B2 basis: h0 h1 e(0,1) e(1,0) e(1,1) e(1,2) f...; k = sl2 on the
    # first simple root, in the standard position
    "b2_sl2": problem(
        "B2", [unit(10, 0), unit(10, 3), unit(10, 7)], [unit(10, 0)]
    ),
}


@pytest.fixture
def case_inputs():
    return {k: json.loads(json.dumps(v)) for k, v in CASES.items()}


@pytest.fixture
def write_input(tmp_path):
    def _write(name, data):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return str(p)

    return _write
