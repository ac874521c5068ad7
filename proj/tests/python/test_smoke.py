import os
from pathlib import Path

import pytest

import cubocubic as cc

DATA = Path(os.environ.get("CUBOCUBIC_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))
GOLDEN = DATA / "golden_tensor.json"


@pytest.fixture(scope="module")
def golden():
    return cc.Tensor.load(str(GOLDEN))


def test_intersection_matrix():
    assert cc.intersection_matrix() == [[4, 6], [6, 4]]


def test_generate_is_deterministic():
    a, attempt_a = cc.generate(seed=5)
    b, attempt_b = cc.generate(seed=5)
    assert a == b and attempt_a == attempt_b
    assert a.dumps() == b.dumps()


def test_golden_reproduces_from_seed(golden):
    t, _ = cc.generate(seed=golden.seed)
    assert t == golden


def test_zero_range_raises():
    with pytest.raises(cc.CubocubicError) as info:
        cc.generate(seed=1, coeff_lo=0, coeff_hi=0)
    assert info.value.kind == "GenericityExhausted"


def test_hilbert_and_genus(golden):
    assert cc.hilbert(golden, 8) == [6 * d - 2 for d in range(1, 9)]
    assert [cc.hilbert_burch_dim(d) for d in (1, 3, 5)] == [4, 16, 28]
    assert cc.curve_degree_genus(golden) == (6, 3)


def test_maps_are_cubic_and_inverse(golden):
    phi, psi = cc.cubo_cubic_maps(golden)
    assert len(phi) == 4 and len(psi) == 4
    assert cc.inverse_degrees(golden) == (8, 8)


def test_verify_golden(golden):
    report = cc.verify(golden, primes=[7], max_degree=4, threads=1)
    assert report["schema"] == 1
    assert report["verdict"] == "pass"
    names = [c["name"] for c in report["checks"]]
    assert "point_transfer[p=7]" in names


def test_scan_within_weil_bounds(golden):
    res = cc.scan(golden, 7, "curve")
    assert res["within_weil_bounds"]
    assert 0 <= res["count"] <= 23


def test_scan_errors(golden):
    with pytest.raises(cc.CubocubicError) as info:
        cc.scan(golden, 211)
    assert info.value.kind == "PrimeTooLarge"


def test_tensor_parse_error():
    with pytest.raises(cc.CubocubicError) as info:
        cc.Tensor.parse('{"field": "rational", "a": [1, 2, 3]}')
    assert info.value.kind == "ParseError"


def test_tensor_roundtrip(golden):
    assert cc.Tensor.parse(golden.dumps()) == golden
    assert golden.at(0, 0, 0) == "1"
    zero = cc.Tensor([0] * 64)
    with pytest.raises(cc.CubocubicError):
        cc.inverse_degrees(zero)
