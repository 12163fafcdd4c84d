import json
import math
import pathlib

import cactop

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_enumeration_counts_agree():
    assert cactop.count_cacti("0:0,0") == len(cactop.enumerate_cacti("0:0,0"))
    assert cactop.count_cacti("1:0", framed=True) >= cactop.count_cacti("1:0")


def test_normalize_is_idempotent():
    nf = cactop.normalize("B[2,1,1] o1 Z[2]")
    assert cactop.normalize(nf) == nf


def test_homology_totals():
    for r in range(4):
        assert sum(cactop.betti(r).values()) == math.factorial(r)
    assert sum(cactop.betti(2, framed=True).values()) == 8


def test_relations_and_bv():
    assert all(r["ok"] for r in cactop.verify_relations(2))
    assert all(r["ok"] for r in cactop.verify_bv())


def test_hochschild_suites():
    assert all(r["ok"] for r in cactop.hochschild_suite("truncated", samples=5))
    text = (DATA / "dual_numbers.json").read_text()
    assert all(r["ok"] for r in cactop.hochschild_suite_json(text, samples=5))


def test_dot_export():
    assert "graph" in cactop.cactus_dot("Z[2]")
    assert json.dumps(cactop.enumerate_cacti("0:1"))
