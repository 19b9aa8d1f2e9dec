"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import math
import random
import time
from dataclasses import dataclass, field

import pytest

from conftest import GOLDEN_CLAUSES, GOLDEN_OUTPUTS, GOLDEN_STRING, random_instance
from permgen import (
    PermittedMatrix,
    alphabet_of,
    count,
    distinct_permutations,
    filter_permutations,
    generate,
    normalize,
    parse_constraints,
    validate,
)
from permgen.cli import main

SWEEP_SEED = 20260809
SWEEP_INSTANCES = 1200

# Σ_{k=0..n} n!/(n-k)! for n = 0..6, frozen from expanding the recurrence
UNCONSTRAINED_CALLS = [1, 2, 5, 16, 65, 326, 1957]


def _report(label, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} {label}")
    assert ok, f"{label}" + (f": {detail}" if detail else "")


def test_criterion_1_golden_instance_exact_and_fast(capsys):
    started = time.perf_counter()
    code = main(["gen", "--string", GOLDEN_STRING,
                 "-c", GOLDEN_CLAUSES[0], "-c", GOLDEN_CLAUSES[1]])
    elapsed = time.perf_counter() - started
    out = capsys.readouterr().out
    expected = "".join(p + "\n" for p in GOLDEN_OUTPUTS)
    with capsys.disabled():
        _report("criterion 1: golden instance emits the 18 lines byte-exact in < 1 s",
                code == 0 and out == expected and elapsed < 1.0,
                f"exit={code} elapsed={elapsed:.3f}s out={out!r}")


def test_criterion_2_normalization_rows_exact():
    cset = parse_constraints("pos 1 in {a,c}\npos 3 not in {d,e}\npos 4 in {b}", 6)
    validate(cset)
    pm = normalize(cset, alphabet_of("abcdae"))
    expected_sets = [{"a", "c"}, {"a", "b", "c", "d", "e"}, {"a", "b", "c"},
                     {"b"}, {"a", "b", "c", "d", "e"}, {"a", "b", "c", "d", "e"}]
    ok = ([set(r) for r in pm.rows] == expected_sets
          and pm.rows == ("ac", "abcde", "abc", "b", "abcde", "abcde"))
    _report("criterion 2: permitted matrix rows normalize exactly", ok, repr(pm.rows))


def test_criterion_3_conflicting_constraints_exit_1(capsys):
    cases = [
        ["gen", "--string", "ab", "-c", "pos 2 in {a}", "-c", "pos 2 not in {b}"],
        ["count", "--string", "abc", "-c", "pos 1 in {a}", "-c", "pos 1 not in {a}"],
        ["gen", "--string", GOLDEN_STRING,
         "-c", "pos 3 not in {c}", "-c", "pos 3 in {a,b}"],
    ]
    codes = [main(argv) for argv in cases]
    capsys.readouterr()
    with capsys.disabled():
        _report("criterion 3: allow+forbid on one position is rejected with exit 1",
                codes == [1, 1, 1], f"codes={codes}")


@dataclass
class SweepOutcome:
    instances: int
    elapsed: float
    mismatches: list = field(default_factory=list)
    non_increasing: list = field(default_factory=list)


@pytest.fixture(scope="module")
def sweep():
    rng = random.Random(SWEEP_SEED)
    outcome = SweepOutcome(SWEEP_INSTANCES, 0.0)
    started = time.perf_counter()
    for i in range(SWEEP_INSTANCES):
        s, cset = random_instance(rng)
        validate(cset)
        pm = normalize(cset, alphabet_of(s))
        got = list(generate(s, pm))
        want = list(filter_permutations(distinct_permutations(s), pm).outputs)
        if got != want:
            outcome.mismatches.append((i, s, pm.rows))
        if any(a >= b for a, b in zip(got, got[1:])):
            outcome.non_increasing.append((i, s, pm.rows))
    outcome.elapsed = time.perf_counter() - started
    return outcome


def test_criterion_4_oracle_equivalence_sweep(sweep):
    ok = (not sweep.mismatches and sweep.instances >= 1000 and sweep.elapsed < 60.0)
    _report(f"criterion 4: {sweep.instances} random instances match the oracle "
            f"exactly in {sweep.elapsed:.1f} s",
            ok, f"mismatches={sweep.mismatches[:3]} elapsed={sweep.elapsed:.1f}s")


def test_criterion_5_outputs_strictly_increase_across_sweep(sweep):
    _report("criterion 5: consecutive outputs strictly increase on every sweep instance",
            not sweep.non_increasing, f"failures={sweep.non_increasing[:3]}")


def test_criterion_6_unconstrained_node_counts_follow_recurrence():
    observed = []
    for n in range(7):
        s = "abcdefg"[:n]
        stream = generate(s, PermittedMatrix((alphabet_of(s),) * n))
        for _ in stream:
            pass
        observed.append(stream.stats().calls)
        assert UNCONSTRAINED_CALLS[n] == sum(
            math.factorial(n) // math.factorial(n - k) for k in range(n + 1))
    _report("criterion 6: unconstrained node counts equal the factorial recurrence, n 0..6",
            observed == UNCONSTRAINED_CALLS, f"observed={observed}")


def test_criterion_7_single_symbol_pin_prunes_nodes():
    s = "abcdefgh"
    alphabet = alphabet_of(s)
    free = generate(s, PermittedMatrix((alphabet,) * 8))
    for _ in free:
        pass
    cset = parse_constraints("pos 1 in {a}", 8)
    pinned = generate(s, normalize(cset, alphabet))
    for _ in pinned:
        pass
    free_calls = free.stats().calls
    pinned_calls = pinned.stats().calls
    ok = ((free_calls, pinned_calls) == (109601, 13701)
          and pinned_calls < free_calls / 4)
    _report("criterion 7: pinning position 1 visits fewer than a quarter of the nodes",
            ok, f"free={free_calls} pinned={pinned_calls}")


def test_criterion_8_unconstrained_count_of_aabbc(capsys):
    api = count("aabbc", PermittedMatrix((alphabet_of("aabbc"),) * 5))
    code = main(["count", "--string", "aabbc"])
    cli_out = capsys.readouterr().out
    oracle_total = len(distinct_permutations("aabbc"))
    with capsys.disabled():
        _report("criterion 8: unconstrained count of 'aabbc' is 30 everywhere",
                api == 30 and code == 0 and cli_out == "30\n" and oracle_total == 30,
                f"api={api} cli={cli_out!r} oracle={oracle_total}")
