#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
查询解析与输出格式化测试
"""

import json
import math
import random

import pytest

from src.core.cumulants import CumulantEngine, CumulantQuery, Group, moment_expansion
from src.core.moments import MomentCache, moment
from src.core.polyalg import Poly
from src.errors import DataFormatError, InvalidQueryError, QueryParseError
from src.numeric.montecarlo import MonteCarloEstimate
from src.query.formatting import (
    format_expansion,
    format_poly,
    poly_from_json,
    render_report,
)
from src.query.parser import Query, QueryKind, parse_query, render_query
from src.service import QueryReport


def V(i, j):
    return Poly.var(i, j)


SAMPLE_MV_TEXT = "6*V[2,2]*V[2,5]*V[5,8] + 3*V[2,2]*V[2,8]*V[5,5] + 6*V[2,5]^2*V[2,8]"


class TestParseQuery:
    """查询语法"""

    def test_moment(self):
        query = parse_query("mv 2 5 2 5 2 8")
        assert query.kind is QueryKind.MOMENT
        assert query.index_list().indices == (2, 2, 2, 5, 5, 8)
        assert len(query.groups) == 1

    def test_mixed_cumulant(self):
        query = parse_query("k 3 (1,3) (1,3) (1,2,3) (1,2,3,3)")
        assert query.kind is QueryKind.CUMULANT
        assert len(query.groups) == 5
        assert query.groups[0] == Group.of(3)
        assert query.groups[4].indices == (1, 2, 3, 3)

    def test_single_doublet(self):
        query = parse_query("k (1,2)")
        assert query.cumulant_query() == CumulantQuery.of((1, 2))

    def test_whitespace_insensitive(self):
        assert parse_query("k(1, 2)(3 ,4)") == parse_query("k (1,2) (3,4)")
        assert parse_query("  K   1 2 ") == parse_query("k 1 2")

    @pytest.mark.parametrize(
        "text,position",
        [
            ("", 0),
            ("x 1 2", 0),
            ("k", 1),
            ("mv (1,2)", 3),
            ("k (1,2", 2),
            ("k (1 2)", 5),
            ("k ()", 3),
            ("k 0", 2),
            ("k 1)", 3),
            ("k ((1,2))", 3),
            ("k [1,2]", 2),
            ("k {1,2}", 2),
            ("k 1 # 2", 4),
            ("k 1, 2", 3),
            ("k +2 1", 2),
            ("k (1,+2)", 5),
        ],
    )
    def test_errors(self, text, position):
        with pytest.raises(QueryParseError) as excinfo:
            parse_query(text)
        assert excinfo.value.position == position

    def test_error_message_points_at_position(self):
        with pytest.raises(QueryParseError) as excinfo:
            parse_query("k (1,2")
        assert "k (1,2" in str(excinfo.value)
        assert "^" in str(excinfo.value)

    def test_parse_error_is_invalid_query(self):
        with pytest.raises(InvalidQueryError):
            parse_query("k -3")

    @pytest.mark.parametrize(
        "text",
        [
            "mv 2 5 2 5 2 8",
            "k 3 (1,3) (1,3) (1,2,3) (1,2,3,3)",
            "k (3,1) (3,2,1) 3 (2,3,3,1) (1,3)",
            "k 1 2",
        ],
    )
    def test_render_round_trip(self, text):
        query = parse_query(text)
        assert parse_query(render_query(query)) == query

    def test_render_round_trip_random(self):
        rng = random.Random(4242)
        for _ in range(200):
            if rng.random() < 0.3:
                indices = [rng.randint(1, 12) for _ in range(rng.randint(1, 8))]
                query = Query(QueryKind.MOMENT, (Group.of(indices),))
            else:
                groups = tuple(
                    Group.of([rng.randint(1, 12) for _ in range(rng.randint(1, 4))])
                    for _ in range(rng.randint(1, 6))
                )
                query = Query(QueryKind.CUMULANT, groups)
            assert parse_query(render_query(query)) == query

    def test_render_is_canonical(self):
        assert render_query(parse_query("mv 8 2 5")) == "mv 2 5 8"
        assert render_query(parse_query("k (3,1) 2")) == "k (1,3) 2"


class TestFormatPoly:
    """多项式输出格式"""

    def test_sample_moment_text(self):
        assert format_poly(moment((2, 5, 2, 5, 2, 8))) == SAMPLE_MV_TEXT

    def test_zero(self):
        assert format_poly(Poly.zero(), "text") == "0"
        assert format_poly(Poly.zero(), "latex") == "0"
        assert json.loads(format_poly(Poly.zero(), "json")) == {"terms": []}

    def test_signs(self):
        p = V(1, 2) - 2 * V(3, 4) * V(3, 4)
        assert format_poly(p) == "V[1,2] - 2*V[3,4]^2"
        assert format_poly(-p) == "-V[1,2] + 2*V[3,4]^2"
        assert format_poly(p, "latex") == "V_{1,2}-2V_{3,4}^{2}"

    def test_standardized_letter(self):
        p = V(1, 1) * V(2, 2) + 2 * V(1, 2) * V(1, 2)
        assert format_poly(p, "text", standardized=True) == "1 + 2*C[1,2]^2"

    def test_mixed_cumulant_latex(self, mixed_query):
        poly = CumulantEngine(threads=1, cache=MomentCache()).cumulant(mixed_query)
        latex = format_poly(poly, "latex", standardized=True)
        assert latex.startswith("42+")
        assert "158C_{1,2}^{2}" in latex
        assert "400C_{1,3}^{4}C_{2,3}^{2}" in latex

    def test_unknown_style(self):
        with pytest.raises(InvalidQueryError):
            format_poly(V(1, 2), "xml")

    def test_json_round_trip(self, mixed_query):
        for poly in (
            moment((2, 5, 2, 5, 2, 8)),
            V(1, 2) - 3 * V(3, 4),
            Poly.constant(10**40),
            CumulantEngine(threads=1, cache=MomentCache()).cumulant(mixed_query),
        ):
            assert poly_from_json(format_poly(poly, "json")) == poly

    def test_json_coefficients_are_strings(self):
        data = json.loads(format_poly(6 * V(2, 5) * V(2, 8), "json"))
        assert data == {"terms": [{"coeff": "6", "factors": [[2, 5], [2, 8]]}]}

    @pytest.mark.parametrize(
        "payload",
        ["{broken", '{"items": []}', '{"terms": [{"coeff": "x", "factors": []}]}', '{"terms": [{"coeff": "1"}]}'],
    )
    def test_json_invalid(self, payload):
        with pytest.raises(DataFormatError):
            poly_from_json(payload)


class TestFormatExpansion:
    def test_text(self):
        expansion = moment_expansion(CumulantQuery.of((1, 2, 3, 4), (5, 6, 7, 8)))
        assert format_expansion(expansion) == "mu{1,2,3,4,5,6,7,8} - mu{1,2,3,4}*mu{5,6,7,8}"

    def test_latex(self):
        expansion = moment_expansion(CumulantQuery.of((1, 2), (3, 4)))
        assert format_expansion(expansion, "latex") == (
            "\\mu_{\\{1,2,3,4\\}}-\\mu_{\\{1,2\\}}\\mu_{\\{3,4\\}}"
        )

    def test_empty(self):
        assert format_expansion([]) == "0"


class TestRenderReport:
    """完整输出"""

    def test_text_sections(self):
        report = QueryReport(
            poly=V(1, 3) * V(2, 4) + V(1, 4) * V(2, 3),
            term_count=2,
            value=0.18,
            mc=MonteCarloEstimate(0.181, 0.002, 1000, 42, 1),
        )
        lines = render_report(report, "text", False).splitlines()
        assert lines[0] == "V[1,3]*V[2,4] + V[1,4]*V[2,3]"
        assert lines[1] == "terms: 2"
        assert lines[2] == "value: 0.18"
        assert lines[3] == "mc: 0.181 ± 0.002 (samples=1000, seed=42, shards=1)"

    def test_json_single_object(self):
        report = QueryReport(
            poly=V(1, 2),
            term_count=1,
            mc=MonteCarloEstimate(0.5, math.nan, 1, 3, 1),
            expansion=moment_expansion(CumulantQuery.of(1, 2)),
        )
        data = json.loads(render_report(report, "json", False))
        assert data["terms"] == [{"coeff": "1", "factors": [[1, 2]]}]
        assert data["term_count"] == 1
        assert data["mc"]["std_error"] is None
        # μ{1}μ{2} 含奇数块，已被省略
        assert data["expansion"] == [{"coeff": "1", "blocks": [[1, 2]]}]
        assert "value" not in data

    def test_json_non_finite_values_are_null(self):
        report = QueryReport(
            poly=V(1, 2),
            value=math.inf,
            mc=MonteCarloEstimate(math.nan, math.nan, 10, 1, 1),
        )
        text = render_report(report, "json", False)
        assert "Infinity" not in text
        assert "NaN" not in text
        data = json.loads(text)
        assert data["value"] is None
        assert data["mc"]["estimate"] is None
