"""Exit criteria for the package.

Each test prints one ``[ACCEPT n] PASS|FAIL`` line (visible with ``-s`` or in
the terminal summary) and fails if its check or its time budget fails.
"""

import json
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest

from nmcoset.analysis import dual_codewords, dual_distance, generalized_weights, oa_strength_holds
from nmcoset.cli import main
from nmcoset.codes import builtin_code, hamming, parity, repetition
from nmcoset.coset import all_messages, decode, encode_all
from nmcoset.distributions import ExactDistribution, statistical_distance
from nmcoset.gf2 import BitVector
from nmcoset.tamper import enumerate_family, format_tamper, parse_tamper
from nmcoset.verifier import (
    df_exact,
    error_only_offset,
    leakage_bits,
    tamper_exact,
    tamper_sampled,
    tightness_witness,
    wiretap_leakage,
)

from . import oracles

GOLDEN = Path(__file__).parent / "golden"
HAM3 = hamming(3)
REP3 = repetition(3)


@contextmanager
def criterion(request, number, title, budget_s):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget_s, f"took {elapsed:.2f}s, budget {budget_s}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"[ACCEPT {number}] {status}: {title} ({elapsed:.2f}s / {budget_s}s)"
        with request.config.pluginmanager.getplugin("capturemanager").global_and_fixture_disabled():
            print(line)


def test_1_round_trip(request):
    with criterion(request, 1, "decode(encode(m)) = m over every coset element", 1.0):
        for code in (HAM3, REP3):
            for m in all_messages(code):
                coset = encode_all(code, m)
                assert len(coset) == 1 << code.k
                for x in coset:
                    assert decode(code, x) == m


def test_2_dual_distance(request):
    with criterion(request, 2, "dual distance vs brute-force row-span enumeration", 1.0):
        cases = [(HAM3, 4), (REP3, 2)] + [(parity(n), n) for n in range(3, 9)]
        for code, expected in cases:
            brute = oracles.min_weight(oracles.row_span(code.H.to_array()))
            assert dual_distance(code) == brute == expected, code.name


def test_3_theorem_exhaustive(request):
    with criterion(request, 3, "hamming(3): tamper law = simulator, SD exactly 0/1, every f with >= 4 constants", 60.0):
        threshold = HAM3.n - dual_distance(HAM3)
        assert threshold == 3
        swept = 0
        checked = 0
        for f in enumerate_family(HAM3.n, 0):
            swept += 1
            if f.fixed_count < 4:
                continue
            df = df_exact(HAM3, f)
            for m in all_messages(HAM3):
                law = tamper_exact(HAM3, f, m)
                assert statistical_distance(law, df) == Fraction(0, 1), (format_tamper(f), str(m))
                assert law == df
            checked += 1
        assert swept == 4**7
        assert checked == 8192


def test_4_error_only(request):
    with criterion(request, 4, "error-only f: point mass on s + He, leakage = r", 5.0):
        for code in (REP3, HAM3):
            for f in enumerate_family(code.n, 0):
                if not f.is_error_only or f.flip_mask == 0:
                    continue
                offset = error_only_offset(code, f)
                assert offset.value == code.syndrome_int(f.flip_mask)
                for s in all_messages(code):
                    assert tamper_exact(code, f, s) == ExactDistribution.point(s ^ offset)
                assert leakage_bits(code, f) == float(code.r)


def test_5_tightness(request):
    with criterion(request, 5, "boundary f with n - d_dual constants leaks the parity lam.m", 1.0):
        f, lam = tightness_witness(HAM3)
        assert f.fixed_count == 3 == HAM3.n - dual_distance(HAM3)
        runs = 0
        for m in all_messages(HAM3):
            for x in encode_all(HAM3, m):
                out = decode(HAM3, BitVector(HAM3.n, f.apply_int(x.value)))
                assert out.dot(lam) == m.dot(lam)
                runs += 1
        assert runs == 128
        assert leakage_bits(HAM3, f) >= 1.0 - 1e-9


def test_6_orthogonal_array_and_wiretap(request):
    with criterion(request, 6, "OA strength 3 on hamming(3); wiretap leakage 0 on 3-subsets, 1 on a dual support", 5.0):
        assert oa_strength_holds(HAM3, 3)
        subsets = list(combinations(range(7), 3))
        assert len(subsets) == 35
        H = HAM3.H.to_array()
        # independent check over all 8 cosets and all 35 subsets
        assert oracles.oa_holds(H, 3)
        for S in subsets:
            assert wiretap_leakage(HAM3, S) == 0.0
        w = next(w for w in dual_codewords(HAM3) if w.bit_count() == 4)
        support = [i for i in range(7) if (w >> i) & 1]
        assert abs(wiretap_leakage(HAM3, support) - 1.0) <= 1e-9


def test_7_generalized_weights(request):
    with criterion(request, 7, "ghw(hamming(3)) = (4,6,7), ghw(rep(3)) = (2,3); d_1 = d_dual, strictly increasing", 10.0):
        assert generalized_weights(HAM3) == [4, 6, 7]
        assert generalized_weights(REP3) == [2, 3]
        codes = [hamming(2), HAM3, REP3, repetition(4), repetition(5)]
        codes += [parity(n) for n in range(2, 7)]
        codes += [builtin_code("random", "8x3", seed=42), builtin_code("random", "7x4", seed=1)]
        for code in codes:
            ghw = generalized_weights(code)
            assert ghw == oracles.ghw_by_subspaces(code.H.to_array()), code.name
            assert ghw[0] == dual_distance(code)
            assert all(a < b for a, b in zip(ghw, ghw[1:]))


def test_8_monte_carlo(request):
    with criterion(request, 8, "sampled vs exact SD <= 0.02 at 1e5 trials", 5.0):
        for code, f, s, seed in [(REP3, "00k", "10", 20240), (HAM3, "0000kkk", "101", 20241)]:
            f = parse_tamper(f)
            s = BitVector.from_str(s)
            sampled = tamper_sampled(code, f, s, seed, 100_000)
            assert sampled.total == 100_000
            assert statistical_distance(sampled, tamper_exact(code, f, s)) <= Fraction(2, 100)


def _cli(argv, capsys):
    status = main(argv)
    out, _ = capsys.readouterr()
    return status, out


def test_9_cli_contract(request, capsys):
    with criterion(request, 9, "CLI golden JSON, byte-identical reruns, exit statuses 0/2/3", 30.0):
        for argv, golden in [
            (["profile", "--builtin", "hamming:3"], "profile_hamming3.json"),
            (["verify", "--builtin", "hamming:3", "--tamper", "0000kkk"], "verify_hamming3_0000kkk.json"),
        ]:
            status, out = _cli(argv, capsys)
            assert status == 0
            assert out == (GOLDEN / golden).read_text()
            data = json.loads(out)
            assert data["d_dual"] == 4 and data["nm_threshold"] == 3

        for argv in (
            ["encode", "--builtin", "hamming:3", "--message", "101", "--seed", "7"],
            ["sample", "--builtin", "hamming:3", "--tamper", "0000kkk", "--message", "101", "--seed", "7", "--trials", "1000"],
            ["verify", "--builtin", "repetition:3", "--tamper", "ffk"],
        ):
            runs = [subprocess.run([sys.executable, "-m", "nmcoset", *argv], capture_output=True) for _ in range(2)]
            assert runs[0].returncode == runs[1].returncode == 0
            assert runs[0].stdout == runs[1].stdout

        assert _cli(["decode", "--builtin", "repetition:3", "--word", "101"], capsys) == (0, "10\n")
        assert _cli(["decode", "--builtin", "repetition:3", "--word", "10"], capsys)[0] == 2
        assert _cli(["verify", "--builtin", "hamming:3", "--tamper", "0000kkk", "--cap", "16"], capsys)[0] == 3
