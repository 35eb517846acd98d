import json

import pytest

from cyclopadic.cli import main

pytestmark = pytest.mark.filterwarnings("ignore")


def run(tmp_path, *argv):
    out = tmp_path / "out.txt"
    code = main(list(argv) + ["--out", str(out)])
    return code, out.read_text()


class TestCompute:
    def test_cycle_index(self, tmp_path):
        code, text = run(tmp_path, "compute", "cycle-index", "3")
        assert code == 0
        obj = json.loads(text)
        assert obj["terms"] == [[[3, 0, 0], "1"], [[1, 1, 0], "3"], [[0, 0, 1], "2"]]

    def test_coeff(self, tmp_path):
        code, text = run(tmp_path, "compute", "coeff", "3", "1,1,0")
        assert code == 0 and text.strip() == "3"

    def test_meixner_q2(self, tmp_path):
        code, text = run(tmp_path, "compute", "meixner-q", "2")
        assert code == 0
        assert json.loads(text) == {"coeffs": ["-1", "0", "1"]}

    def test_meixner_qstar(self, tmp_path):
        code, text = run(tmp_path, "compute", "meixner-qstar", "3")
        assert code == 0
        assert json.loads(text) == {"coeffs": ["0", "-2", "0", "1"]}

    def test_malformed_cycle_type_exit2(self, tmp_path):
        code, _ = run(tmp_path, "compute", "coeff", "3", "2,1,0")
        assert code == 2
        code, _ = run(tmp_path, "compute", "coeff", "3", "a,b")
        assert code == 2

    def test_text_format(self, tmp_path):
        code, text = run(tmp_path, "compute", "cycle-index", "2", "--format", "text")
        assert code == 0 and "X2" in text


class TestVerify:
    def test_prop_poly_sweep_passes(self, tmp_path):
        code, text = run(
            tmp_path,
            "verify", "prop-poly", "--primes", "3",
            "--n-max", "3", "--degree-cap", "12",
        )
        assert code == 0
        reports = [json.loads(line) for line in text.splitlines()]
        assert all(r["violations"] == [] for r in reports)
        assert {r["checker"] for r in reports} == {"prop-poly"}

    def test_all_small_grid(self, tmp_path):
        code, text = run(
            tmp_path,
            "verify", "all", "--primes", "3,5",
            "--n-max", "2", "--degree-cap", "16", "--trials", "25",
        )
        assert code == 0
        checkers = {json.loads(line)["checker"] for line in text.splitlines()}
        assert "carlitz-coeff" in checkers and "corollary2" in checkers

    def test_wilson_sharpness(self, tmp_path):
        code, text = run(
            tmp_path, "verify", "wilson-sharpness", "--primes", "3", "--n-max", "3"
        )
        assert code == 0
        params = [json.loads(line)["params"] for line in text.splitlines()]
        assert [p["n"] for p in params] == [3, 6, 9]

    def test_nonprime_rejected(self, tmp_path):
        code, _ = run(tmp_path, "verify", "prop-poly", "--primes", "9")
        assert code == 2

    def test_p2_needs_flag(self, tmp_path):
        code, _ = run(tmp_path, "verify", "carlitz-poly", "--primes", "2")
        assert code == 2

    def test_p2_advisory_with_flag(self, tmp_path):
        code, text = run(
            tmp_path,
            "verify", "prop-coeff", "--primes", "2", "--allow-p2",
            "--n-max", "3", "--degree-cap", "8",
        )
        # p=2 outcomes are reported but never asserted
        assert code == 0
        for line in text.splitlines():
            assert json.loads(line)["advisory"] is True

    def test_mutation_detected_exit1(self, tmp_path):
        code, text = run(
            tmp_path,
            "verify", "prop-poly", "--primes", "3", "--n-max", "1",
            "--degree-cap", "4", "--mutate", "0:1",
        )
        assert code == 1
        report = json.loads(text.splitlines()[0])
        assert report["violations"]
        wit = report["violations"][0]
        assert wit["observed_vp"] == 0

    def test_thread_count_does_not_change_output(self, tmp_path):
        args = [
            "verify", "all", "--primes", "3,5",
            "--n-max", "2", "--degree-cap", "14", "--trials", "10",
        ]
        _, single = run(tmp_path, *args, "--threads", "1")
        _, many = run(tmp_path, *args, "--threads", "4")
        assert single == many

    def test_rerun_is_byte_identical(self, tmp_path):
        args = ["verify", "junod-lemma", "--primes", "3", "--seed", "7",
                "--trials", "40"]
        _, a = run(tmp_path, *args)
        _, b = run(tmp_path, *args)
        assert a == b
        assert json.loads(a.splitlines()[0])["seed"] == 7

    def test_text_format(self, tmp_path):
        code, text = run(
            tmp_path,
            "verify", "carlitz-coeff", "--primes", "3", "--n-max", "2",
            "--format", "text",
        )
        assert code == 0
        assert text.startswith("PASS")

    def test_timing_flag_adds_elapsed(self, tmp_path):
        _, text = run(
            tmp_path,
            "verify", "carlitz-coeff", "--primes", "3", "--n-max", "1",
            "--timing",
        )
        assert "elapsed_ms" in json.loads(text.splitlines()[0])

    def test_r_range_filter(self, tmp_path):
        code, text = run(
            tmp_path,
            "verify", "prop-poly", "--primes", "5", "--n-max", "1",
            "--degree-cap", "12", "--r-range", "1:2",
        )
        assert code == 0
        rs = [json.loads(line)["params"]["r"] for line in text.splitlines()]
        assert rs == [1, 2]
