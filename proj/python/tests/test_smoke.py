import os
import pathlib
from fractions import Fraction

import pytest

import mipcert

GOLDEN = pathlib.Path(
    os.environ.get("MIPCERT_GOLDEN_DIR", pathlib.Path(__file__).resolve().parents[2] / "tests" / "golden")
)

KNAPSACK = """MIPCERT 1
VAR 2
INT 1 2
OBJ -1 -1
CON 1 2 2 <= 3
CON 2 1 0 >= 0
CON 3 1 0 <= 1
CON 4 0 1 >= 0
CON 5 0 1 <= 1
"""


def test_certify_then_verify():
    r = mipcert.certify(KNAPSACK)
    assert r["verdict"] == {"kind": "optimal", "value": Fraction(-1)}
    v = mipcert.verify(r["certificate"])
    assert v["status"] == "verified"
    assert v["exit_code"] == 0
    assert v["verdict"] == r["verdict"]


def test_oracle_agrees():
    o = mipcert.oracle(KNAPSACK)
    assert o["verdict"]["value"] == -1
    assert o["argmin"] == [1, 0]


def test_golden_file_and_rejection():
    text = (GOLDEN / "knapsack.cert").read_text()
    assert mipcert.verify(text)["exit_code"] == 0
    bad = text.replace("LIN 1:1 A1:2", "LIN 1:1 A1:1", 1)
    r = mipcert.verify(bad)
    assert r["status"] == "rejected"
    assert r["rule"] == "IMPLIC"


def test_separate_problem():
    text = (GOLDEN / "knapsack.cert").read_text()
    steps = text[text.index("PROOF\n") + len("PROOF\n"):]
    assert mipcert.verify(steps, problem=KNAPSACK)["exit_code"] == 0


def test_parse_and_errors():
    p = mipcert.parse_problem(KNAPSACK)
    assert p["n"] == 2 and p["integral"] == [1, 2] and p["constraints"] == 5
    with pytest.raises(mipcert.CertError):
        mipcert.parse_problem("VAR x\n")
    assert mipcert.verify("NVARS\n")["exit_code"] == 2
