import pytest

import wsys


def test_wgl_golden():
    assert wsys.wgl("(1 3 2)") == "C3 + C1^2 - N*C2"
    assert wsys.wgl("(1 2)", m=3) == "C1*C2"


def test_feps_recurrence_matches_direct_sum():
    for p in ["(1 3)(2 4)", "(1,2,3)", "3,1,4,2", "2,5,1,4,3"]:
        assert wsys.feps(p) == wsys.feps_direct(p)
    assert wsys.feps("(1 2)") == "N + 2*eps + N*eps^2"


def test_interlace_and_series():
    assert wsys.interlace_graph("n=3; edges=1-2,1-3,2-3") == "4*x + 4"
    assert wsys.interlace_perm("(1,3,2)") == ("-3*z^3 + 4*z^2", 2)
    assert wsys.series("(1,2,3)", 7) == ["0", "0", "2", "5", "7", "7", "8", "9"]


def test_pivot():
    assert wsys.pivot("3,5,6,7,2,8,4,9,1", (2, 5), (4, 7)) == "6,5,8,7,2,3,4,9,1"
    with pytest.raises(wsys.DomainError):
        wsys.pivot("(1 2)(3 4)", (1, 2), (3, 4))


def test_parse_error():
    with pytest.raises(wsys.ParseError):
        wsys.wgl("1,1")


def test_delta_matroid():
    d = wsys.dmat_of_graph("n=2; edges=1-2")
    assert d == "E=2; phi={},{1,2}"
    assert wsys.interlace_dmat(d) == wsys.interlace_graph("n=2; edges=1-2")


def test_primitive():
    assert wsys.primitive_feps("(1 3)(2 4)") == "1 - N^2"


def test_verify_and_cli():
    assert "tfe" in wsys.suite_names()
    report = wsys.verify("tsr", max_m=4)
    assert report["passed"] and report["count"] == 34
    code, out, _ = wsys.run_cli(["faces", "--perm", "(1 4)(2 5)(3 6)"])
    assert (code, out) == (0, "2\n")
