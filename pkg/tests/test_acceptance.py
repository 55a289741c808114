"""Exit criteria, one test per criterion; a PASS/FAIL line is printed per criterion."""

import json
import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from oracles import invariant_factors_by_minors
from quandle_delta.cli import run
from quandle_delta.fixtures import B2_VECTORS, B3_VECTORS
from quandle_delta.lab import COUNTEREXAMPLE, EVEN_CLAUSE, check_lemmas, verify_theorem_r8
from quandle_delta.lattice import det, hnf, is_hnf, lattice_equal, lattice_from_generators, matmul, snf
from quandle_delta.quandle import make_dihedral
from quandle_delta.ring import Mode, RingElement, augmentation, delta_power, delta_quotient, delta_tower, multiply


@pytest.fixture
def record(request):
    state = {}
    yield state
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {request.node.name}: {state.get('detail', '')}")


def test_1_counterexample_reproduction(record):
    t0 = time.perf_counter()
    status, out = run(["quotient", "dihedral:8", "--k", "2"])
    elapsed = time.perf_counter() - t0
    q = json.loads(out)["results"]["quotient"]
    record["detail"] = f"{q['structure']}, order {q['order']}, {elapsed:.3f}s"
    assert status == 0
    assert q["free_rank"] == 0 and q["torsion"] == [4, 4] and q["order"] == 16
    assert elapsed < 1.0


def test_2_fixture_replay(record):
    rep = verify_theorem_r8()
    record["detail"] = ", ".join(f"{s.name}={'ok' if s.passed else 'FAIL'}" for s in rep.steps)
    assert len(rep.steps) == 5 and rep.passed
    assert rep.steps[0].detail["printed_differs_at"] == ["e2.e3"]
    assert rep.steps[2].detail["printed_differs_at"] == ["u4.e1"]
    q = make_dihedral(8)
    assert lattice_equal(delta_power(q, 2), lattice_from_generators(7, B2_VECTORS.values()))
    assert lattice_equal(delta_power(q, 3), lattice_from_generators(7, B3_VECTORS.values()))


def test_3_lemma_suites(record):
    rep = check_lemmas(24)
    record["detail"] = f"n=4..24 even, {rep.checks} checks, {len(rep.violations)} violations"
    assert rep.n_values == list(range(4, 25, 2))
    assert rep.violations == []


def test_4_odd_case_regression(record):
    t0 = time.perf_counter()
    bad = []
    for n in (3, 5, 7, 9, 11):
        for k in (1, 2, 3, 4):
            r = delta_quotient(make_dihedral(n), k)
            if not (r.free_rank == 0 and r.torsion == (n,)):
                bad.append((n, k, str(r)))
    elapsed = time.perf_counter() - t0
    record["detail"] = f"20 cells, {len(bad)} deviations, {elapsed:.2f}s"
    assert bad == []
    assert elapsed < 30.0


def test_5_n4_clause(record):
    r = delta_quotient(make_dihedral(4), 2)
    record["detail"] = f"Delta^2(R4)/Delta^3(R4) = {r}, order {r.order}"
    assert r.order == 4


def test_6_exact_linear_algebra(record):
    rng = random.Random(6)
    n_snf = 0
    for _ in range(1200):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        d = snf(a)
        assert matmul(matmul(d.U, a), d.V) == d.S
        assert abs(det(d.U)) == 1 and abs(det(d.V)) == 1
        inv = d.invariant_factors
        assert all(inv[i + 1] % inv[i] == 0 for i in range(len(inv) - 1))
        assert inv == invariant_factors_by_minors(a)
        n_snf += 1
    n_hnf = 0
    for _ in range(500):
        dim = rng.randint(1, 5)
        gens = [[rng.randint(-9, 9) for _ in range(dim)] for _ in range(rng.randint(0, 6))]
        h = hnf(gens, dim)
        assert is_hnf(h) and hnf(h, dim) == h
        shuffled = [[-x for x in g] if rng.random() < 0.5 else list(g) for g in gens]
        rng.shuffle(shuffled)
        assert hnf(shuffled, dim) == h
        n_hnf += 1
    record["detail"] = f"{n_snf} SNF checks vs minor oracle, {n_hnf} HNF idempotence/order checks"


def test_7_tower_and_closure(record):
    rng = random.Random(7)
    towers = products = 0
    for n in range(3, 13):
        q = make_dihedral(n)
        for mode in Mode:
            tower = delta_tower(q, 5, mode)
            for k in range(4):
                assert tower[k + 1] <= tower[k]
                towers += 1
        for _ in range(40):
            x = RingElement(q, tuple(rng.randint(-9, 9) for _ in range(n)))
            y = RingElement(q, tuple(rng.randint(-9, 9) for _ in range(n)))
            assert augmentation(multiply(x, y)) == augmentation(x) * augmentation(y)
            products += 1
    record["detail"] = f"{towers} inclusions, {products} products, 0 violations"


def test_8_scan_determinism_and_throughput(record):
    argv = ["scan", "--n", "3..12", "--k", "1..4"]
    t0 = time.perf_counter()
    status, first = run(argv)
    elapsed = time.perf_counter() - t0
    _, second = run(argv)
    a, b = json.loads(first), json.loads(second)
    pa = json.dumps(a["results"], sort_keys=True).encode()
    pb = json.dumps(b["results"], sort_keys=True).encode()
    flagged = [(r["n"], r["k"]) for r in a["results"]["rows"] if r["verdict"] == COUNTEREXAMPLE]
    record["detail"] = f"{elapsed:.2f}s, counterexamples {flagged}"
    assert status == 0
    assert elapsed < 60.0
    assert pa == pb
    assert (8, 2) in flagged
    for r in a["results"]["rows"]:
        is_violation = r["clause"] == EVEN_CLAUSE and r["order"] != r["n"]
        odd_violation = r["clause"] == "odd_clause" and r["torsion"] != [r["n"]]
        assert (r["verdict"] == COUNTEREXAMPLE) == (is_violation or odd_violation)
