from __future__ import annotations

import random
from itertools import permutations

import pytest

from permstream import (
    BaselineDetector,
    ComplementAdapter,
    Detector231,
    Detector312,
    MonotoneDetector,
    StreamMode,
    TrivialRejectDetector,
    classify_pattern,
    complement,
    contains_bruteforce,
    new_detector,
    occurrence_is_valid,
    parse_pattern,
    run_detector,
)
from conftest import all_patterns, perm_instance, random_perm, seq_instance

PERM = StreamMode.PERMUTATION
SEQ = StreamMode.DISTINCT_SEQUENCE


# -- routing table -----------------------------------------------------------------


def test_monotone_patterns_route_to_patience_array():
    det = new_detector(parse_pattern("123"), 10, PERM)
    assert isinstance(det, MonotoneDetector)
    det = new_detector(parse_pattern("321"), 10, PERM)
    assert isinstance(det, ComplementAdapter)
    assert isinstance(det.inner, MonotoneDetector)


def test_312_family_routing():
    assert isinstance(new_detector(parse_pattern("312"), 50, PERM), Detector312)
    det = new_detector(parse_pattern("132"), 50, PERM)
    assert isinstance(det, ComplementAdapter)
    assert isinstance(det.inner, Detector312)


def test_231_family_routing():
    assert isinstance(new_detector(parse_pattern("231"), 50, PERM), Detector231)
    det = new_detector(parse_pattern("213"), 50, PERM)
    assert isinstance(det, ComplementAdapter)
    assert isinstance(det.inner, Detector231)


def test_long_nonmonotone_patterns_fall_back_with_warning():
    with pytest.warns(UserWarning, match="linear space"):
        det = new_detector(parse_pattern("4231"), 20, PERM)
    assert isinstance(det, BaselineDetector)


def test_sequence_mode_nonmonotone3_falls_back_with_warning():
    with pytest.warns(UserWarning, match="baseline"):
        det = new_detector(parse_pattern("312"), 12, SEQ)
    assert isinstance(det, BaselineDetector)


def test_monotone_works_in_sequence_mode_without_warning():
    det = new_detector(parse_pattern("12"), 12, SEQ)
    assert isinstance(det, MonotoneDetector)


def test_pattern_longer_than_universe_rejects_trivially():
    det = new_detector(parse_pattern("1234"), 3, PERM)
    assert isinstance(det, TrivialRejectDetector)
    for v in (2, 1, 3):
        assert not det.push(v)
    rep = det.finish()
    assert rep.verdict is False and rep.peak_cells == 0


def test_single_value_pattern_accepts_first_push():
    det = new_detector(parse_pattern("1"), 5, PERM)
    assert det.push(3)


# -- the detector contract ------------------------------------------------------------


def test_push_validation_errors():
    det = Detector312(5)
    det.push(3)
    with pytest.raises(ValueError, match="duplicate"):
        det.push(3)
    with pytest.raises(ValueError, match="range"):
        det.push(6)
    with pytest.raises(ValueError, match="range"):
        det.push(0)
    with pytest.raises(ValueError):
        det.push("3")


def test_finish_is_terminal():
    det = MonotoneDetector(2, 3, SEQ)
    det.push(2)
    det.finish()
    with pytest.raises(ValueError, match="push after finish"):
        det.push(1)
    with pytest.raises(ValueError, match="twice"):
        det.finish()


def test_permutation_mode_requires_all_values_before_finish():
    det = Detector231(4)
    det.push(2)
    with pytest.raises(ValueError, match="permutation mode"):
        det.finish()


def test_finish_without_any_push_rejects():
    det = Detector312(4)
    assert det.finish().verdict is False


def test_pushes_after_acceptance_latch():
    det = MonotoneDetector(2, 4, PERM)
    det.push(1)
    assert det.push(2)
    assert det.push(4)  # latched: keeps returning True, no error
    assert det.push(3)
    assert det.finish().verdict


# -- run_detector ----------------------------------------------------------------------


def test_run_detector_validates_stream():
    bad = perm_instance((1, 1, 2))
    with pytest.raises(ValueError, match="duplicate"):
        run_detector(bad, parse_pattern("12"))


def test_run_detector_round_trip():
    rep = run_detector(perm_instance((3, 1, 2)), parse_pattern("312"))
    assert rep.verdict and rep.occurrence is not None


# -- complement adapter ------------------------------------------------------------------


def test_adapter_recomplements_occurrences():
    inst = perm_instance((1, 6, 3, 4, 5, 2))
    p132 = parse_pattern("132")
    det = new_detector(p132, 6, PERM)
    accepted = any(det.push(v) for v in inst.elements)
    assert accepted
    occ = det.occurrence
    if occ is not None:
        assert occurrence_is_valid(inst, p132, occ)


def test_adapter_matches_direct_complement_run():
    rng = random.Random(51)
    pats = [parse_pattern(p) for p in ("132", "213", "321")]
    for _ in range(100):
        tau = random_perm(20, rng)
        comp = complement(tau, 20)
        for pat in pats:
            cpat = classify_pattern(complement(pat.values, len(pat)))
            a = run_detector(perm_instance(tau), pat).verdict
            b = run_detector(perm_instance(comp), cpat).verdict
            assert a == b


def test_dispatched_detectors_match_oracle_small():
    pats = all_patterns(2, 3)
    for n in range(1, 6):
        for tau in permutations(range(1, n + 1)):
            inst = perm_instance(tau)
            for pat in pats:
                want = contains_bruteforce(inst, pat) is not None
                assert run_detector(inst, pat).verdict == want, (tau, pat)


def test_baseline_on_sequence_mode_matches_oracle():
    rng = random.Random(52)
    p312 = parse_pattern("312")
    for _ in range(50):
        values = rng.sample(range(1, 31), 12)
        inst = seq_instance(tuple(values), n=30)
        with pytest.warns(UserWarning):
            rep = run_detector(inst, p312)
        assert rep.verdict == (contains_bruteforce(inst, p312) is not None)
