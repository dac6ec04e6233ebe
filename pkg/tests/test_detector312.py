from __future__ import annotations

import math
import random
from itertools import permutations

import pytest

from permstream import (
    Detector312,
    InvariantViolation,
    Occurrence,
    StreamMode,
    contains_bruteforce,
    default_window,
    new_detector,
    occurrence_is_valid,
    parse_pattern,
    replay_312_with_invariants,
)
from conftest import perm_instance, random_perm

P312 = parse_pattern("312")


def layered_avoider(n: int, block: int) -> list[int]:
    """Descending blocks in ascending order: 312-free, fills D with pairs."""
    out: list[int] = []
    for lo in range(1, n + 1, block):
        out.extend(range(min(lo + block - 1, n), lo - 1, -1))
    return out


# -- window width ----------------------------------------------------------------


def test_default_window_formula():
    assert default_window(3) == 2  # floor(sqrt(3 * log2 3)) = floor(2.18)
    assert default_window(1) == 1
    for n in (2, 10, 100, 1024, 4097):
        expected = max(1, math.isqrt(int(n * math.log2(n))))
        assert default_window(n) == expected


# -- hand-traced runs ---------------------------------------------------------------


def test_three_element_trace_reports_at_third_push():
    det = Detector312(3)
    assert det.k == 2
    assert not det.push(3)  # becomes h
    assert not det.push(1)  # 1 <= h-k: stored as the pair (3,1)
    assert det.pairs == ((3, 1),)
    assert det.push(2)  # lands strictly inside (3,1)
    rep = det.finish()
    assert rep.verdict
    assert rep.occurrence == Occurrence(positions=(1, 2, 3), values=(3, 1, 2))


def test_window_insert_when_no_value_is_missing():
    det = Detector312(10, k=3)
    det.push(8)
    det.push(10)  # new maximum; window (7, 10] keeps 8
    assert det.h == 10 and det.window_values == {8, 10}
    assert not det.push(9)  # nothing missing between 9 and 10: just insert
    assert det.window_values == {8, 9, 10}


def test_window_report_with_future_witness():
    det = Detector312(9, k=3)
    det.push(6)
    assert det.push(4)  # 5 is in the window yet unseen: (6,4,5) must complete
    rep = det.finish()
    assert rep.occurrence == Occurrence(positions=(1, 2, None), values=(6, 4, 5))
    assert rep.occurrence.has_future


def test_pair_completion_reports_positions():
    det = Detector312(20, k=4)
    det.push(18)
    det.push(5)
    assert det.pairs == ((18, 5),)
    assert det.push(8)
    assert det.occurrence == Occurrence(positions=(1, 2, 3), values=(18, 5, 8))


def test_adjacent_window_values_do_not_report():
    det = Detector312(20, k=4)
    for v in (17, 19, 20):
        assert not det.push(v)
    assert det.window_values == {17, 19, 20}
    assert not det.push(18)  # 19 and 20 are both present: no gap above 18
    assert det.window_values == {17, 18, 19, 20}


def test_window_slides_on_new_maximum():
    det = Detector312(10, k=3)
    det.push(3)
    det.push(10)  # window becomes (7, 10]; the 3 is dropped (not pair-stored)
    assert det.window_values == {10}


def test_undercutting_pairs_merge():
    det = Detector312(12, k=3)
    det.push(12)
    det.push(5)
    assert det.pairs == ((12, 5),)
    assert not det.push(4)  # undercuts (12,5): merged into the wider (12,4)
    assert det.pairs == ((12, 4),)


# -- black-box equivalence -------------------------------------------------------


def test_matches_oracle_on_all_small_permutations():
    for n in range(1, 7):
        for tau in permutations(range(1, n + 1)):
            det = Detector312(n)
            accepted = any(det.push(v) for v in tau)
            verdict = accepted or det.finish().verdict
            want = contains_bruteforce(perm_instance(tau), P312) is not None
            assert verdict == want, tau


def test_reported_occurrences_are_valid():
    rng = random.Random(31)
    checked = future = 0
    for _ in range(300):
        tau = random_perm(24, rng)
        inst = perm_instance(tau)
        det = Detector312(24)
        for v in tau:
            if det.push(v):
                break
        rep = det.finish()
        if rep.occurrence is not None:
            checked += 1
            future += rep.occurrence.has_future
            assert occurrence_is_valid(inst, P312, rep.occurrence)
    assert checked > 200 and future > 10


def test_132_via_complement_adapter_matches_oracle():
    p132 = parse_pattern("132")
    for n in range(1, 7):
        for tau in permutations(range(1, n + 1)):
            det = new_detector(p132, n, StreamMode.PERMUTATION)
            accepted = any(det.push(v) for v in tau)
            verdict = accepted or det.finish().verdict
            want = contains_bruteforce(perm_instance(tau), p132) is not None
            assert verdict == want, tau
            if accepted and det.occurrence is not None:
                assert occurrence_is_valid(perm_instance(tau), p132, det.occurrence)


# -- state invariants and space -----------------------------------------------------


def test_invariant_replay_on_random_and_adversarial_streams():
    rng = random.Random(32)
    for _ in range(40):
        replay_312_with_invariants(random_perm(64, rng), 64)
    replay_312_with_invariants(layered_avoider(64, default_window(64) + 1), 64)
    replay_312_with_invariants(list(range(1, 65)), 64)
    replay_312_with_invariants(list(range(64, 0, -1)), 64)


def test_invariant_checker_flags_corrupted_state():
    det = Detector312(8, k=2)
    det.push(8)
    det.push(5)
    det._h = 7  # violate (i): h must equal the running maximum
    from permstream.streaming.invariants import _check_state

    with pytest.raises(InvariantViolation):
        _check_state(det, [8, 5], [[] for _ in range(9)], 8)


def test_space_stays_within_bounds_on_adversarial_stream():
    n = 1024
    k = default_window(n)
    det = Detector312(n)
    for v in layered_avoider(n, k + 1):
        assert not det.push(v)
    rep = det.finish()
    assert not rep.verdict
    assert rep.structure_peaks["A"] <= k
    assert rep.structure_peaks["D"] <= math.ceil(n / k)
    assert rep.peak_cells == 2 + 2 * rep.structure_peaks["D"]
    assert rep.peak_bits == rep.peak_cells * 10 + k  # ceil(log2 1024) = 10


def test_requires_permutation_mode():
    with pytest.raises(ValueError):
        Detector312(5, StreamMode.DISTINCT_SEQUENCE)
