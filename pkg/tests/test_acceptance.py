"""Exit criteria.  Each test records one PASS/FAIL line, shown in the terminal summary."""
import csv
import io
import time
from math import factorial

import pytest

from dconsec.asymptotics import empirical_first_order, exact_ratio_scaled, first_order_target, series_bracket
from dconsec.cli import main
from dconsec.combi import binomial, compositions
from dconsec.counts import count_d0_formula, count_exact, q_value_reference
from dconsec.oracle import inverse_condition_count, oracle_count, oracle_count_parallel
from tables import TABLE


def test_01_table_reproduction(capsys, record):
    start = time.perf_counter()
    code = main(["table", "--n-max", "16", "--d-list", "0,1,2,3"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    rows = list(csv.reader(io.StringIO(out)))[1:]
    got = {int(r[0]): tuple(int(x) for x in r[1:]) for r in rows}
    ok = code == 0 and got == TABLE and elapsed < 60
    record("1 table reproduction, 64 values", ok, f"{elapsed:.2f}s")
    assert got[16][2] == 3648471927912 and got[16][3] == 4669727780624
    assert ok


def test_02_oracle_equivalence(record):
    start = time.perf_counter()
    bad = [(n, d) for n in range(1, 11) for d in range(0, n + 2) if count_exact(n, d) != oracle_count(n, d)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    record("2 formula = oracle for n <= 10, 0 <= d <= n+1", ok, f"{elapsed:.1f}s, mismatches={bad}")
    assert ok


def test_03_named_values(record):
    got = (count_exact(8, 0), count_exact(8, 1), count_exact(8, 2))
    ok = got == (2832, 5242, 9512)
    record("3 circle/bar/two-sided values at n=8", ok, str(got))
    assert ok


def test_04_robbins_reduction(record):
    bad = []
    for n in range(1, 13):
        for r in range(1, n + 1):
            for c in range(1, r + 1):
                lhs = sum(q_value_reference(n, 1, comp) for comp in compositions(r, c))
                rhs = binomial(r - 1, c - 1) * binomial(n - r, c) * factorial(c)
                if lhs != rhs:
                    bad.append((n, r, c))
    record("4 Robbins reduction for 1 <= c <= r <= n <= 12", not bad, f"mismatches={bad[:5]}")
    assert not bad


def test_05_d0_validity_domain(record):
    agree = all(count_d0_formula(n) == oracle_count(n, 0) for n in range(3, 11))
    small = (count_d0_formula(1), count_d0_formula(2))
    dispatched = (count_exact(1, 0), count_exact(2, 0))
    ok = agree and small == (-1, -2) and dispatched == (1, 0)
    record("5 circular formula valid for 3 <= n <= 10, -1/-2 below", ok, f"n=1,2 raw {small}, dispatched {dispatched}")
    assert ok


def test_06_free_case(record):
    bad = [(n, d) for n in range(1, 13) for d in range(n, n + 4) if count_exact(n, d) != factorial(n)]
    record("6 a(n, d) = n! for d >= n, n <= 12", not bad)
    assert not bad


@pytest.mark.parametrize("d", [2, 3])
def test_07_first_order_convergence(d, record):
    target = first_order_target(d)
    dist8 = abs(empirical_first_order(8, d, 30) - target)
    dist16 = abs(empirical_first_order(16, d, 30) - target)
    ok = dist16 < dist8  # strict ordering of the rigorous error intervals
    record(f"7 first-order law d={d}: |e16 - {target}| < |e8 - {target}|", ok,
           f"{dist16.to_string(8)} < {dist8.to_string(8)}")
    assert ok


@pytest.mark.parametrize("d", [0, 1])
def test_08_series_decay(d, record):
    errs = {}
    for n in (8, 16):
        errs[n] = abs(exact_ratio_scaled(n, d, 30) - series_bracket(d, n, 5))
    # strict interval test of err(16) <= err(8)/32
    ok = errs[16].value + errs[16].error <= (errs[8].value - errs[8].error) / 32
    ratio = float(errs[8].value / errs[16].value)
    fixed = [abs(exact_ratio_scaled(n, d, 30).value - series_bracket(d, n, 5, corrected=True)) for n in (8, 16)]
    record(f"8 series decay d={d}: err(16) <= err(8)/32", ok,
           f"err(8)/err(16) = {ratio:.2f}; with corrected coefficients {float(fixed[0] / fixed[1]):.2f}")
    assert ok


def test_09_parallel_determinism(record):
    bad = []
    for n in range(1, 10):
        for d in range(0, 5):
            expected = oracle_count(n, d)
            for split in range(4):
                for workers in range(1, 5):
                    if oracle_count_parallel(n, d, split, workers) != expected:
                        bad.append((n, d, split, workers))
    record("9 parallel oracle = sequential over n <= 9, d <= 4", not bad, f"mismatches={bad[:5]}")
    assert not bad


def test_10_inversion_symmetry(record):
    bad = [(n, d) for n in range(1, 10) for d in range(1, n + 1)
           if inverse_condition_count(n, d) != oracle_count(n, d)]
    record("10 inverse-form count = positional count, n <= 9", not bad, f"mismatches={bad}")
    assert not bad
