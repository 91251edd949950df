import hashlib
import json
from fractions import Fraction as Fr
from pathlib import Path

import pytest

from oracles import naive_counting_polynomial
from tourforce import ParseError, Tournament
from tourforce.generators import sample_cliq
from tourforce.poly import RationalPolynomial
from tourforce.report import ENVELOPE_KEYS, analyze, golden_path, parse, read_golden, serialize, write_golden

GOLDEN = Path(__file__).parent / "golden"
C3 = Tournament.cyclic_triangle()


def test_c3_envelope():
    text = serialize(analyze(C3))
    assert '"locally_forcing":true' in text
    assert tuple(json.loads(text)) == ENVELOPE_KEYS


def test_round_trip_random_envelopes():
    by_code = {}
    for s in range(100):
        H = sample_cliq(2 + s % 6, Fr(1, 2), s)
        e = analyze(H, provenance={"seed": s, "model": "cliq"})
        text = serialize(e)
        assert parse(text) == e
        assert serialize(parse(text)) == text
        bare = serialize(analyze(H)).encode()
        by_code.setdefault(H.code, set()).add(hashlib.sha256(bare).hexdigest())
    # one hash per input, and distinct inputs never collide
    assert all(len(v) == 1 for v in by_code.values())
    assert len(set().union(*by_code.values())) == len(by_code)


def test_byte_identical_runs():
    H = sample_cliq(6, Fr(1, 2), 9)
    assert serialize(analyze(H, {"seed": 9})) == serialize(analyze(H, {"seed": 9}))


def test_no_floats_in_decision_fields():
    d = json.loads(serialize(analyze(sample_cliq(6, Fr(1, 2), 2))))

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)

    walk(d)


@pytest.mark.parametrize("code", ["n=1;bits=", "n=2;bits=1", "n=3;bits=101", "n=3;bits=111"])
def test_golden_files(code):
    H = Tournament.from_code(code)
    e = read_golden(GOLDEN, code)
    assert e == analyze(H)
    # the stored p_H agrees with the h! definition, independent of the DP
    stored = RationalPolynomial.from_text(dict(e.polynomials)["p"])
    assert list(stored.coeffs) == naive_counting_polynomial(H)


def test_degenerate_golden_verdicts():
    for code in ("n=1;bits=", "n=2;bits=1"):
        f = read_golden(GOLDEN, code).forcing
        assert not f.cliq_forcing and not f.bip_forcing and f.cliq_offending_root_count == -1


def test_write_golden_layout(tmp_path):
    p = write_golden(analyze(C3), tmp_path)
    assert p == golden_path(tmp_path, "n=3;bits=010")
    assert p.parent.name == "v0" and p.name == "n3_010.json"


def test_parse_errors():
    with pytest.raises(ParseError):
        parse("{not json")
    with pytest.raises(ParseError):
        parse('{"tool_version": "0.1.0"}')
    good = json.loads(serialize(analyze(C3)))
    good["forcing"]["global_status"] = "BOGUS"
    with pytest.raises(ParseError):
        parse(json.dumps(good))
