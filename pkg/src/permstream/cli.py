"""Command-line harness: detect, oracle, gen, fuzz, and bench subcommands.

Exit codes: 0 on success (and on agreement for the checking commands), 1 when
a verdict disagreement is found (``detect --check``, ``oracle --split``, or a
``fuzz`` counterexample), 2 on usage or I/O errors.

All randomized commands take ``--seed``; identical seed and configuration
reproduce identical results, and ``--json`` reports are byte-identical apart
from the wall-time field.  ``fuzz`` writes any counterexample to a replay
file that ``detect --check`` can re-run directly.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from typing import Sequence

from .core import (
    Pattern,
    PatternKind,
    StreamInstance,
    StreamMode,
    format_stream_text,
    parse_pattern,
    parse_stream_text,
    stream_violation,
)
from .hardgen import (
    DisjInstance,
    extend_stream,
    gen_3142_2143,
    gen_4312,
    gen_monotone_lb,
    gen_pi4_front,
    gen_seq312,
    random_subsets,
)
from .oracle import SplitInput, contains_bruteforce, count_occurrences, split_protocol
from .streaming import (
    BaselineDetector,
    ComplementAdapter,
    Detector,
    Detector231,
    Detector312,
    MonotoneDetector,
    bits_per_cell,
    new_detector,
    run_detector,
)

SCHEMA_VERSION = 1

_EXHAUSTIVE_PERM_CAP = 8
_EXHAUSTIVE_SETS_CAP = 6


class UsageError(Exception):
    """Bad arguments or unusable input files (exit code 2)."""


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------


def _load_stream(args: argparse.Namespace) -> StreamInstance:
    if args.input and args.values:
        raise UsageError("give either --input or --values, not both")
    if args.input:
        try:
            if args.input == "-":
                text = sys.stdin.read()
            else:
                with open(args.input, "r", encoding="utf-8") as fh:
                    text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
        try:
            return parse_stream_text(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.values:
        if args.n is None:
            raise UsageError("--values needs --n to fix the universe size")
        try:
            elements = tuple(int(v) for v in args.values.split(","))
        except ValueError as exc:
            raise UsageError(f"bad --values: {exc}") from exc
        mode = StreamMode.from_token(args.mode)
        return StreamInstance(n=args.n, mode=mode, elements=elements)
    raise UsageError("a stream is required: --input FILE or --values CSV --n N")


def _checked_stream(args: argparse.Namespace) -> StreamInstance:
    inst = _load_stream(args)
    reason = stream_violation(inst)
    if reason is not None:
        raise UsageError(f"invalid stream: {reason}")
    return inst


def _parse_pattern_arg(text: str) -> Pattern:
    try:
        return parse_pattern(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _forced_detector(name: str, pattern: Pattern, inst: StreamInstance) -> Detector:
    values = pattern.values
    if name == "monotone":
        if pattern.kind is PatternKind.INCREASING:
            return MonotoneDetector(len(pattern), inst.n, inst.mode)
        if pattern.kind is PatternKind.DECREASING:
            return ComplementAdapter(MonotoneDetector(len(pattern), inst.n, inst.mode))
        raise UsageError(f"--detector monotone cannot serve the pattern {pattern}")
    if name == "312":
        if inst.mode is not StreamMode.PERMUTATION:
            raise UsageError("--detector 312 needs a permutation stream (mode=perm)")
        if values == (3, 1, 2):
            return Detector312(inst.n, inst.mode)
        if values == (1, 3, 2):
            return ComplementAdapter(Detector312(inst.n, inst.mode))
        raise UsageError("--detector 312 serves only the patterns 312 and 132")
    if name == "231":
        if inst.mode is not StreamMode.PERMUTATION:
            raise UsageError("--detector 231 needs a permutation stream (mode=perm)")
        if values == (2, 3, 1):
            return Detector231(inst.n, inst.mode)
        if values == (2, 1, 3):
            return ComplementAdapter(Detector231(inst.n, inst.mode))
        raise UsageError("--detector 231 serves only the patterns 231 and 213")
    assert name == "baseline"
    return BaselineDetector(pattern, inst.n, inst.mode)


def _occurrence_json(occ) -> dict | None:
    if occ is None:
        return None
    return {
        "positions": [p if p is not None else "future" for p in occ.positions],
        "values": list(occ.values),
    }


def _emit(args: argparse.Namespace, report: dict, human: list[str]) -> None:
    if getattr(args, "json", False):
        report = {"schema": SCHEMA_VERSION, **report}
        report["wall_time_s"] = round(time.monotonic() - args._t0, 6)
        print(json.dumps(report, sort_keys=True))
    else:
        for line in human:
            print(line)


# ---------------------------------------------------------------------------
# detect
# ---------------------------------------------------------------------------


def cmd_detect(args: argparse.Namespace) -> int:
    pattern = _parse_pattern_arg(args.pattern)
    inst = _checked_stream(args)
    if args.detector == "auto":
        detector = new_detector(pattern, inst.n, inst.mode)
    else:
        detector = _forced_detector(args.detector, pattern, inst)

    accepted_at = None
    for idx, value in enumerate(inst.elements, start=1):
        if detector.push(value):
            accepted_at = idx
            break
    rep = detector.finish()

    agree = None
    oracle_verdict = None
    if args.check:
        oracle_verdict = contains_bruteforce(inst, pattern) is not None
        agree = oracle_verdict == rep.verdict

    human = [
        f"pattern {pattern} in stream of {len(inst.elements)} values (n={inst.n}, "
        f"mode={inst.mode.value}): {'CONTAINED' if rep.verdict else 'AVOIDED'}",
        f"detector: {type(detector).__name__}, peak cells {rep.peak_cells}, "
        f"peak bits {rep.peak_bits}, structures {rep.structure_peaks}",
    ]
    if accepted_at is not None:
        human.insert(1, f"accepted after reading {accepted_at} of {len(inst.elements)} values")
    if rep.occurrence is not None:
        pos = ", ".join("future" if p is None else str(p) for p in rep.occurrence.positions)
        human.append(f"occurrence: values {rep.occurrence.values} at positions ({pos})")
    if args.check:
        human.append(f"oracle cross-check: {'agree' if agree else 'DISAGREE'}")

    _emit(
        args,
        {
            "command": "detect",
            "pattern": str(pattern),
            "n": inst.n,
            "mode": inst.mode.value,
            "stream_len": len(inst.elements),
            "detector": type(detector).__name__,
            "verdict": rep.verdict,
            "accepted_after": accepted_at,
            "occurrence": _occurrence_json(rep.occurrence),
            "peak_cells": rep.peak_cells,
            "peak_bits": rep.peak_bits,
            "structure_peaks": rep.structure_peaks,
            "oracle_verdict": oracle_verdict,
            "agree": agree,
        },
        human,
    )
    return 0 if agree in (None, True) else 1


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


def cmd_oracle(args: argparse.Namespace) -> int:
    pattern = _parse_pattern_arg(args.pattern)
    inst = _checked_stream(args)
    occ = contains_bruteforce(inst, pattern)
    payload: dict = {
        "command": "oracle",
        "pattern": str(pattern),
        "n": inst.n,
        "mode": inst.mode.value,
        "verdict": occ is not None,
        "occurrence": _occurrence_json(occ),
    }
    human = [
        f"pattern {pattern}: {'CONTAINED' if occ else 'AVOIDED'}",
    ]
    if occ is not None:
        human.append(f"first occurrence: values {occ.values} at positions {occ.positions}")

    if args.count:
        total = count_occurrences(inst, pattern)
        payload["count"] = total
        human.append(f"occurrences: {total}")

    exit_code = 0
    if args.split is not None:
        if inst.mode is not StreamMode.PERMUTATION:
            raise UsageError("--split needs a permutation stream (mode=perm)")
        if not 0 <= args.split <= len(inst.elements):
            raise UsageError(
                f"--split must be between 0 and {len(inst.elements)}, got {args.split}"
            )
        try:
            split = SplitInput(
                n=inst.n,
                prefix=inst.elements[: args.split],
                suffix=inst.elements[args.split :],
            )
            bit = split_protocol(split, pattern)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        agree = bit == (occ is not None)
        payload["split"] = args.split
        payload["protocol_verdict"] = bit
        payload["agree"] = agree
        human.append(
            f"split protocol at {args.split}: {'CONTAINED' if bit else 'AVOIDED'} "
            f"({'agree' if agree else 'DISAGREE'})"
        )
        if not agree:
            exit_code = 1

    _emit(args, payload, human)
    return exit_code


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def _parse_int_set(text: str | None, what: str) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(v) for v in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad {what}: {exc}") from exc


def _build_construction(
    construction: str, n_sets: int, s: frozenset[int], t: frozenset[int]
) -> DisjInstance:
    try:
        if construction == "seq312":
            return gen_seq312(n_sets, s, t)
        if construction.startswith("front4:"):
            return gen_pi4_front(parse_pattern(construction[7:]), n_sets, s, t)
        if construction == "4312":
            return gen_4312(n_sets, s, t)
        if construction in ("3142", "2143"):
            return gen_3142_2143(parse_pattern(construction), n_sets, s, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(
        f"unknown construction {construction!r} (expected seq312, front4:<pattern>, "
        "4312, 3142, 2143, monotone-lb, or extend)"
    )


def _write_or_print(path: str | None, text: str) -> None:
    if path:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc}") from exc
        print(path)
    else:
        sys.stdout.write(text)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.construction == "extend":
        if not args.input:
            raise UsageError("extend needs --input FILE")
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                source = parse_stream_text(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        reason = stream_violation(source)
        if reason is not None:
            raise UsageError(f"invalid stream: {reason}")
        out = extend_stream(source)
        text = format_stream_text(
            out, comments=[f"extend of {args.input} (n={source.n} -> {out.n})"]
        )
        if args.json:
            _emit(
                args,
                {
                    "command": "gen",
                    "construction": "extend",
                    "n": out.n,
                    "mode": out.mode.value,
                    "stream": list(out.elements),
                },
                [],
            )
            return 0
        _write_or_print(args.out, text)
        return 0

    if args.construction == "monotone-lb":
        if args.k is None or args.n is None or not args.rho:
            raise UsageError("monotone-lb needs --k, --n, and --rho")
        rho = tuple(sorted(_parse_int_set(args.rho, "--rho")))
        sigma = tuple(sorted(_parse_int_set(args.sigma, "--sigma"))) if args.sigma else None
        try:
            result = gen_monotone_lb(args.k, args.n, rho, sigma)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if sigma is None:
            inst = result
            assert isinstance(inst, StreamInstance)
            text = format_stream_text(inst, comments=[f"monotone-lb prefix k={args.k} rho={args.rho}"])
            if args.json:
                _emit(
                    args,
                    {
                        "command": "gen",
                        "construction": "monotone-lb",
                        "k": args.k,
                        "n": args.n,
                        "rho": list(rho),
                        "stream": list(inst.elements),
                    },
                    [],
                )
                return 0
            _write_or_print(args.out, text)
            return 0
        accepting, rejecting = result
        if args.json:
            _emit(
                args,
                {
                    "command": "gen",
                    "construction": "monotone-lb",
                    "k": args.k,
                    "n": args.n,
                    "rho": list(rho),
                    "sigma": list(sigma),
                    "accepting": list(accepting.elements),
                    "rejecting": list(rejecting.elements),
                },
                [],
            )
            return 0
        acc_text = format_stream_text(
            accepting, comments=[f"monotone-lb accepting k={args.k} rho={args.rho} sigma={args.sigma}"]
        )
        rej_text = format_stream_text(
            rejecting, comments=[f"monotone-lb rejecting k={args.k} rho={args.rho} sigma={args.sigma}"]
        )
        if args.out:
            _write_or_print(f"{args.out}-accept.txt", acc_text)
            _write_or_print(f"{args.out}-reject.txt", rej_text)
        else:
            sys.stdout.write(acc_text)
            sys.stdout.write(rej_text)
        return 0

    # disjointness constructions
    if args.nsets is None:
        raise UsageError(f"{args.construction} needs --nsets")
    if args.random_sets:
        rng = random.Random(args.seed)
        s, t = random_subsets(args.nsets, rng)
    else:
        s = _parse_int_set(args.s, "--s")
        t = _parse_int_set(args.t, "--t")
    disj = _build_construction(args.construction, args.nsets, s, t)
    comments = [
        f"construction {args.construction} nsets={args.nsets} "
        f"S={sorted(disj.s)} T={sorted(disj.t)} pattern={disj.pattern}",
    ]
    text = format_stream_text(disj.stream, segments=disj.segments, comments=comments)
    if args.json:
        _emit(
            args,
            {
                "command": "gen",
                "construction": args.construction,
                "pattern": str(disj.pattern),
                "nsets": disj.n_sets,
                "s": sorted(disj.s),
                "t": sorted(disj.t),
                "intersecting": disj.intersecting,
                "n": disj.stream.n,
                "mode": disj.stream.mode.value,
                "stream": list(disj.stream.elements),
                "segments": [list(seg) for seg in disj.segments],
            },
            [],
        )
        return 0
    _write_or_print(args.out, text)
    return 0


# ---------------------------------------------------------------------------
# fuzz
# ---------------------------------------------------------------------------


def _trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def _perm_trial(payload: tuple[int, int, int, str]) -> dict | None:
    """One random-permutation trial; returns a disagreement record or None."""
    seed, trial, n, pattern_text = payload
    pattern = parse_pattern(pattern_text)
    rng = random.Random(_trial_seed(seed, trial))
    tau = list(range(1, n + 1))
    rng.shuffle(tau)
    inst = StreamInstance(n=n, mode=StreamMode.PERMUTATION, elements=tuple(tau))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        detector_verdict = run_detector(inst, pattern).verdict
    oracle_verdict = contains_bruteforce(inst, pattern) is not None
    if detector_verdict == oracle_verdict:
        return None
    return {
        "trial": trial,
        "stream": list(tau),
        "n": n,
        "mode": "perm",
        "detector": detector_verdict,
        "oracle": oracle_verdict,
    }


def _construction_trial(payload: tuple[int, int, str, int]) -> dict | None:
    """One random-subsets construction trial (iff-check plus baseline stress)."""
    seed, trial, construction, nsets = payload
    rng = random.Random(_trial_seed(seed, trial))
    s, t = random_subsets(nsets, rng)
    disj = _build_construction(construction, nsets, s, t)
    oracle_verdict = contains_bruteforce(disj.stream, disj.pattern) is not None
    want = disj.intersecting
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        detector_verdict = run_detector(disj.stream, disj.pattern).verdict
    if oracle_verdict == want and detector_verdict == want:
        return None
    return {
        "trial": trial,
        "stream": list(disj.stream.elements),
        "n": disj.stream.n,
        "mode": disj.stream.mode.value,
        "s": sorted(disj.s),
        "t": sorted(disj.t),
        "intersecting": want,
        "oracle": oracle_verdict,
        "detector": detector_verdict,
    }


def _write_replay(args: argparse.Namespace, record: dict, pattern: Pattern) -> str:
    mode = StreamMode.from_token(record["mode"])
    inst = StreamInstance(n=record["n"], mode=mode, elements=tuple(record["stream"]))
    comments = [
        f"fuzz counterexample: pattern={pattern} seed={args.seed} trial={record['trial']}",
        f"detector={record['detector']} oracle={record.get('oracle')}",
        f"replay: permstream detect --pattern {pattern} --input <this file> --check",
    ]
    if "s" in record:
        comments.insert(1, f"construction sets S={record['s']} T={record['t']}")
    directory = args.replay_dir or "."
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(
        directory, f"permstream-replay-{args.seed}-{record['trial']}.txt"
    )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_stream_text(inst, comments=comments))
    return path


def _run_trials(worker, payloads, jobs: int):
    """Run trials in order, yielding (payload, result). Parallel when jobs > 1."""
    if jobs <= 1:
        for payload in payloads:
            yield payload, worker(payload)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for payload, result in zip(payloads, pool.map(worker, payloads, chunksize=16)):
            yield payload, result


def cmd_fuzz(args: argparse.Namespace) -> int:
    if bool(args.pattern) == bool(args.construction):
        raise UsageError("fuzz needs exactly one of --pattern (with --n) or --construction")

    disagreement: dict | None = None
    trials_run = 0

    if args.pattern:
        pattern = _parse_pattern_arg(args.pattern)
        if args.exhaustive:
            if args.n is None or args.n > _EXHAUSTIVE_PERM_CAP:
                raise UsageError(
                    f"--exhaustive enumerates all n! permutations; n <= {_EXHAUSTIVE_PERM_CAP} "
                    f"required (8! = 40320 streams), got n={args.n}"
                )
            from itertools import permutations

            for tau in permutations(range(1, args.n + 1)):
                trials_run += 1
                inst = StreamInstance(args.n, StreamMode.PERMUTATION, tau)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    det = run_detector(inst, pattern).verdict
                orc = contains_bruteforce(inst, pattern) is not None
                if det != orc:
                    disagreement = {
                        "trial": trials_run - 1,
                        "stream": list(tau),
                        "n": args.n,
                        "mode": "perm",
                        "detector": det,
                        "oracle": orc,
                    }
                    break
        else:
            if args.n is None:
                raise UsageError("--pattern fuzzing needs --n")
            payloads = [
                (args.seed, t, args.n, str(pattern)) for t in range(args.trials)
            ]
            for _, result in _run_trials(_perm_trial, payloads, args.jobs):
                trials_run += 1
                if result is not None:
                    disagreement = result
                    break
        label = f"pattern {pattern}"
    else:
        construction = args.construction
        if args.nsets is None:
            raise UsageError("--construction fuzzing needs --nsets")
        pattern = _build_construction(
            construction, args.nsets, frozenset(), frozenset()
        ).pattern
        if args.exhaustive:
            if args.nsets > _EXHAUSTIVE_SETS_CAP:
                raise UsageError(
                    f"--exhaustive enumerates all 4^nsets subset pairs; nsets <= "
                    f"{_EXHAUSTIVE_SETS_CAP} required (4^6 = 4096 pairs), got {args.nsets}"
                )
            universe = list(range(1, args.nsets + 1))
            from itertools import chain, combinations

            def powerset(xs):
                return chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))

            for s in powerset(universe):
                for t in powerset(universe):
                    trials_run += 1
                    disj = _build_construction(construction, args.nsets, frozenset(s), frozenset(t))
                    orc = contains_bruteforce(disj.stream, disj.pattern) is not None
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore")
                        det = run_detector(disj.stream, disj.pattern).verdict
                    if orc != disj.intersecting or det != disj.intersecting:
                        disagreement = {
                            "trial": trials_run - 1,
                            "stream": list(disj.stream.elements),
                            "n": disj.stream.n,
                            "mode": disj.stream.mode.value,
                            "s": sorted(disj.s),
                            "t": sorted(disj.t),
                            "intersecting": disj.intersecting,
                            "oracle": orc,
                            "detector": det,
                        }
                        break
                if disagreement:
                    break
        else:
            payloads = [
                (args.seed, t, construction, args.nsets) for t in range(args.trials)
            ]
            for _, result in _run_trials(_construction_trial, payloads, args.jobs):
                trials_run += 1
                if result is not None:
                    disagreement = result
                    break
        label = f"construction {construction}"

    replay_path = None
    if disagreement is not None:
        replay_path = _write_replay(args, disagreement, pattern)

    human = [
        f"fuzz {label}: {trials_run} trials, "
        f"{'1 disagreement' if disagreement else 'no disagreements'}"
    ]
    if replay_path:
        human.append(f"replay file: {replay_path}")
    _emit(
        args,
        {
            "command": "fuzz",
            "target": label,
            "seed": args.seed,
            "trials": trials_run,
            "exhaustive": bool(args.exhaustive),
            "disagreement": disagreement,
            "replay_file": replay_path,
        },
        human,
    )
    return 1 if disagreement else 0


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def _layered_312_avoider(n: int, block: int) -> list[int]:
    """Blocks of descending values in ascending block order: avoids 312."""
    out: list[int] = []
    for lo in range(1, n + 1, block):
        hi = min(lo + block - 1, n)
        out.extend(range(hi, lo - 1, -1))
    return out


def _adversary(pattern: Pattern, n: int) -> list[int] | None:
    """A pattern-avoiding permutation that maximizes detector state."""
    values = pattern.values
    if pattern.kind is PatternKind.INCREASING:
        return list(range(n, 0, -1))
    if pattern.kind is PatternKind.DECREASING:
        return list(range(1, n + 1))
    from .streaming.window312 import default_window

    if values == (3, 1, 2):
        return _layered_312_avoider(n, default_window(n) + 1)
    if values == (1, 3, 2):
        return [n + 1 - v for v in _layered_312_avoider(n, default_window(n) + 1)]
    if values == (2, 3, 1):
        return list(range(1, n + 1))
    if values == (2, 1, 3):
        return list(range(n, 0, -1))
    return None


def _space_bound(pattern: Pattern, n: int) -> tuple[str, float]:
    import math

    if pattern.kind in (PatternKind.INCREASING, PatternKind.DECREASING):
        return ("k", float(len(pattern)))
    if pattern.values in ((3, 1, 2), (1, 3, 2)):
        return ("sqrt(n*log2(n))", math.sqrt(n * math.log2(n)) if n > 1 else 1.0)
    if pattern.values in ((2, 3, 1), (2, 1, 3)):
        return ("sqrt(n)", math.sqrt(n))
    return ("n", float(n))


def cmd_bench(args: argparse.Namespace) -> int:
    pattern = _parse_pattern_arg(args.pattern)
    try:
        sizes = [int(v) for v in args.sizes.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --sizes: {exc}") from exc
    if any(n < 1 for n in sizes):
        raise UsageError("--sizes must be positive")

    rows = []
    for n in sizes:
        if len(pattern) > n:
            raise UsageError(f"pattern {pattern} is longer than n={n}")
        bound_name, bound = _space_bound(pattern, n)
        rng = random.Random(args.seed)
        random_peak = 0
        accepts = 0
        t0 = time.monotonic()
        for _ in range(args.trials):
            tau = list(range(1, n + 1))
            rng.shuffle(tau)
            inst = StreamInstance(n=n, mode=StreamMode.PERMUTATION, elements=tuple(tau))
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                rep = run_detector(inst, pattern)
            random_peak = max(random_peak, rep.peak_cells)
            accepts += rep.verdict
        adv = _adversary(pattern, n)
        adv_peak = None
        adv_structures: dict[str, int] = {}
        if adv is not None:
            inst = StreamInstance(n=n, mode=StreamMode.PERMUTATION, elements=tuple(adv))
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                rep = run_detector(inst, pattern)
            if rep.verdict:
                raise AssertionError(f"adversarial instance for {pattern} was accepted")
            adv_peak = rep.peak_cells
            adv_structures = rep.structure_peaks
        rows.append(
            {
                "n": n,
                "trials": args.trials,
                "accept_rate": accepts / args.trials if args.trials else None,
                "bound": bound_name,
                "bound_value": round(bound, 3),
                "random_peak_cells": random_peak,
                "random_ratio": round(random_peak / bound, 4),
                "adversarial_peak_cells": adv_peak,
                "adversarial_ratio": round(adv_peak / bound, 4) if adv_peak else None,
                "adversarial_structures": adv_structures,
                "bits_per_cell": bits_per_cell(n),
                "seconds": round(time.monotonic() - t0, 3),
            }
        )

    human = [f"bench pattern {pattern} ({args.trials} random trials per size)"]
    header = (
        f"{'n':>8} {'bound':>18} {'rand peak':>10} {'ratio':>8} "
        f"{'adv peak':>9} {'ratio':>8} {'sec':>7}"
    )
    human.append(header)
    for row in rows:
        human.append(
            f"{row['n']:>8} {row['bound_value']:>18} {row['random_peak_cells']:>10} "
            f"{row['random_ratio']:>8} "
            f"{row['adversarial_peak_cells'] if row['adversarial_peak_cells'] is not None else '-':>9} "
            f"{row['adversarial_ratio'] if row['adversarial_ratio'] is not None else '-':>8} "
            f"{row['seconds']:>7}"
        )
    _emit(
        args,
        {"command": "bench", "pattern": str(pattern), "seed": args.seed, "rows": rows},
        human,
    )
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_stream_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="stream file ('-' for stdin)")
    p.add_argument("--values", help="inline stream, comma-separated")
    p.add_argument("--n", type=int, help="universe size for --values")
    p.add_argument(
        "--mode", choices=["perm", "seq"], default="perm", help="stream mode for --values"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permstream",
        description="Streaming permutation-pattern detection, oracles, and hard instances.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("detect", help="run the dispatched streaming detector")
    p.add_argument("--pattern", required=True, help="pattern, e.g. 312 or 10,3,2,...")
    _add_stream_args(p)
    p.add_argument(
        "--detector",
        choices=["auto", "monotone", "312", "231", "baseline"],
        default="auto",
        help="force a detector family instead of dispatching",
    )
    p.add_argument("--check", action="store_true", help="cross-check against the oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("oracle", help="brute-force containment / counting / split protocol")
    p.add_argument("--pattern", required=True)
    _add_stream_args(p)
    p.add_argument("--count", action="store_true", help="also count all occurrences")
    p.add_argument(
        "--split",
        type=int,
        help="run the one-bit split protocol with Alice holding this many leading values",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="emit a hard instance")
    p.add_argument(
        "--construction",
        required=True,
        help="seq312 | front4:<4231|4213|4132|4123> | 4312 | 3142 | 2143 | monotone-lb | extend",
    )
    p.add_argument("--nsets", type=int, help="disjointness universe size")
    p.add_argument("--s", help="Alice's set, comma-separated")
    p.add_argument("--t", help="Bob's set, comma-separated")
    p.add_argument("--random-sets", action="store_true", help="draw S and T from --seed")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, help="monotone-lb: pattern length")
    p.add_argument("--n", type=int, help="monotone-lb: universe size (even)")
    p.add_argument("--rho", help="monotone-lb: odd increasing code, comma-separated")
    p.add_argument("--sigma", help="monotone-lb: second code (emits a stream pair)")
    p.add_argument("--input", help="extend: stream file to transform")
    p.add_argument("--out", help="output file (monotone-lb pair: prefix)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="randomized / exhaustive detector-vs-oracle testing")
    p.add_argument("--pattern", help="fuzz random permutations against this pattern")
    p.add_argument("--n", type=int, help="permutation size for --pattern fuzzing")
    p.add_argument("--construction", help="fuzz a hard-instance construction instead")
    p.add_argument("--nsets", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--exhaustive",
        action="store_true",
        help=f"enumerate everything: all n! permutations (n <= {_EXHAUSTIVE_PERM_CAP}) "
        f"or all 4^nsets subset pairs (nsets <= {_EXHAUSTIVE_SETS_CAP})",
    )
    p.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("PERMSTREAM_JOBS", "1")),
        help="worker processes (default: $PERMSTREAM_JOBS or 1)",
    )
    p.add_argument("--replay-dir", help="directory for counterexample replay files")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("bench", help="peak-space measurements on random and adversarial inputs")
    p.add_argument("--pattern", required=True)
    p.add_argument("--sizes", required=True, help="comma-separated universe sizes")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.monotonic()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
