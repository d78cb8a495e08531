#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行入口测试：stdout 输出与退出码
"""

import json

import pytest

from cli import run
from src.config.defaults import (
    EXIT_FILE_ERROR,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_RESOURCE_LIMIT,
)
from tests.test_query import SAMPLE_MV_TEXT

BASE_ARGS = ["--threads", "1"]


def invoke(capsys, *argv):
    code = run(list(argv) + BASE_ARGS)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRunOutput:
    """正常输出"""

    def test_count(self, capsys):
        code, out, _ = invoke(capsys, "k (1,2) (3,4)", "--count")
        assert code == EXIT_OK
        assert out.splitlines() == ["V[1,3]*V[2,4] + V[1,4]*V[2,3]", "terms: 2"]

    def test_one_singlet_rule(self, capsys):
        code, out, _ = invoke(capsys, "k 1 (3,4)")
        assert code == EXIT_OK
        assert out.strip() == "0"

    def test_odd_moment(self, capsys):
        code, out, _ = invoke(capsys, "mv 1 2 3")
        assert code == EXIT_OK
        assert out.strip() == "0"

    def test_sample_moment(self, capsys):
        code, out, _ = invoke(capsys, "mv 2 5 2 5 2 8")
        assert code == EXIT_OK
        assert out.strip() == SAMPLE_MV_TEXT

    def test_reordered_invocations_identical(self, capsys):
        code1, out1, _ = invoke(capsys, "k 3 (1,3) (1,3) (1,2,3) (1,2,3,3)", "--std")
        code2, out2, _ = invoke(capsys, "k (3,1) (3,2,1) 3 (2,3,3,1) (1,3)", "--std")
        assert code1 == code2 == EXIT_OK
        assert out1 == out2
        assert out1.startswith("42 + 158*C[1,2]^2")

    def test_latex(self, capsys):
        code, out, _ = invoke(capsys, "k 3 (1,3) (1,3) (1,2,3) (1,2,3,3)", "--std", "--output", "latex")
        assert code == EXIT_OK
        assert "400C_{1,3}^{4}C_{2,3}^{2}" in out

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "k (1,2) (3,4)", "--output", "json", "--count")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["term_count"] == 2
        assert len(data["terms"]) == 2

    def test_expand(self, capsys):
        code, out, _ = invoke(capsys, "k (1,2,3,4) (5,6,7,8)", "--expand", "--count")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[1] == "expansion: mu{1,2,3,4,5,6,7,8} - mu{1,2,3,4}*mu{5,6,7,8}"
        assert lines[2] == "terms: 96"

    def test_unpruned_and_no_rules_agree(self, capsys):
        _, default, _ = invoke(capsys, "k 1 2 (3,4) (1,3)")
        _, reference, _ = invoke(capsys, "k 1 2 (3,4) (1,3)", "--unpruned", "--no-rules")
        assert default == reference

    def test_eval(self, capsys, equicorrelated_cov_file):
        code, out, _ = invoke(capsys, "k (1,2) (3,4)", "--eval", equicorrelated_cov_file)
        assert code == EXIT_OK
        value_line = [line for line in out.splitlines() if line.startswith("value: ")][0]
        assert float(value_line.split(": ")[1]) == pytest.approx(0.18)

    def test_eval_with_mc(self, capsys, equicorrelated_cov_file):
        code, out, _ = invoke(
            capsys, "k (1,2) (3,4)", "--eval", equicorrelated_cov_file, "--mc", "20000:42", "--shards", "2"
        )
        assert code == EXIT_OK
        mc_line = [line for line in out.splitlines() if line.startswith("mc: ")][0]
        assert "samples=20000, seed=42, shards=2" in mc_line

    def test_logs_go_to_stderr(self, capsys):
        code, out, err = invoke(capsys, "k (1,2) (3,4)", "-v")
        assert code == EXIT_OK
        assert out.strip() == "V[1,3]*V[2,4] + V[1,4]*V[2,3]"
        assert "结果 2 项" in err


class TestRunExitCodes:
    """错误映射为退出码"""

    def test_parse_error(self, capsys):
        code, out, err = invoke(capsys, "k (1,2")
        assert code == EXIT_PARSE_ERROR
        assert out == ""
        assert "括号未闭合" in err

    def test_invalid_index(self, capsys):
        code, _, _ = invoke(capsys, "k 0 1")
        assert code == EXIT_PARSE_ERROR

    def test_unknown_flag(self, capsys):
        code, _, _ = invoke(capsys, "k 1 2", "--bogus")
        assert code == EXIT_PARSE_ERROR

    def test_mc_requires_eval(self, capsys):
        code, _, err = invoke(capsys, "k 1 2", "--mc", "100:1")
        assert code == EXIT_PARSE_ERROR
        assert "--eval" in err

    def test_resource_limit(self, capsys):
        code, out, _ = invoke(capsys, "k (1,2) (3,4) (5,6)", "--max-order", "4")
        assert code == EXIT_RESOURCE_LIMIT
        assert out == ""

    def test_missing_covariance_file(self, capsys, tmp_path):
        code, _, _ = invoke(capsys, "k 1 2", "--eval", str(tmp_path / "nope.json"))
        assert code == EXIT_FILE_ERROR

    def test_covariance_too_small(self, capsys, tmp_path):
        path = tmp_path / "cov.json"
        path.write_text(json.dumps({"dim": 1, "entries": [[1.0]]}), encoding="utf-8")
        code, _, _ = invoke(capsys, "k 1 2", "--eval", str(path))
        assert code == EXIT_FILE_ERROR

    def test_bad_mc_spec(self, capsys, equicorrelated_cov_file):
        code, _, _ = invoke(capsys, "k 1 2", "--eval", equicorrelated_cov_file, "--mc", "lots")
        assert code == EXIT_FILE_ERROR

    def test_missing_config(self, capsys, tmp_path):
        code, _, _ = invoke(capsys, "k 1 2", "--config", str(tmp_path / "missing.yaml"))
        assert code == EXIT_FILE_ERROR
