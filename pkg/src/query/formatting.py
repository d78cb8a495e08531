#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
结果格式化

- text:  6*V[2,5]^2*V[2,8]，项间 " + " / " - "
- latex: 6V_{2,5}^{2}V_{2,8}，项间 "+" / "-"
- json:  {"terms": [{"coeff": "6", "factors": [[2,5],[2,5],[2,8]]}]}，系数为字符串以免丢精度

项的顺序固定为显示顺序（先总次数，再因子字典序）；标准化时符号字母为 C。
"""

import json
import math
from itertools import groupby
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.config.defaults import OUTPUT_STYLES, SYMBOL_RAW, SYMBOL_STANDARDIZED
from src.core.cumulants import MomentProduct
from src.core.polyalg import CovSymbol, Monomial, Poly, substitute_diagonal_one
from src.errors import DataFormatError, InvalidQueryError


def _powers(mono: Monomial) -> List[Tuple[CovSymbol, int]]:
    return [(symbol, len(list(run))) for symbol, run in groupby(mono)]


def _text_term(mono: Monomial, letter: str) -> str:
    parts = []
    for symbol, power in _powers(mono):
        factor = f"{letter}[{symbol.lo},{symbol.hi}]"
        parts.append(f"{factor}^{power}" if power > 1 else factor)
    return "*".join(parts)


def _latex_term(mono: Monomial, letter: str) -> str:
    parts = []
    for symbol, power in _powers(mono):
        factor = f"{letter}_{{{symbol.lo},{symbol.hi}}}"
        parts.append(f"{factor}^{{{power}}}" if power > 1 else factor)
    return "".join(parts)


def _join_signed(items: Sequence[Tuple[int, str]], coefficient_sep: str, plus: str, minus: str) -> str:
    """items: (系数, 主体)，主体为空表示常数项"""
    out = []
    for n, (coeff, body) in enumerate(items):
        magnitude = abs(coeff)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}{coefficient_sep}{body}"
        if n == 0:
            out.append(f"-{text}" if coeff < 0 else text)
        else:
            out.append(f"{minus if coeff < 0 else plus}{text}")
    return "".join(out)


def poly_to_json_obj(p: Poly) -> Dict[str, Any]:
    return {
        "terms": [
            {"coeff": str(coeff), "factors": [[s.lo, s.hi] for s in mono]}
            for mono, coeff in p.sorted_terms()
        ]
    }


def format_poly(p: Poly, style: str = "text", standardized: bool = False) -> str:
    if style not in OUTPUT_STYLES:
        raise InvalidQueryError(f"未知输出格式: {style}")
    if standardized:
        p = substitute_diagonal_one(p)
    if style == "json":
        return json.dumps(poly_to_json_obj(p))
    if p.is_zero():
        return "0"

    letter = SYMBOL_STANDARDIZED if standardized else SYMBOL_RAW
    if style == "latex":
        items = [(c, _latex_term(m, letter)) for m, c in p.sorted_terms()]
        return _join_signed(items, "", "+", "-")
    items = [(c, _text_term(m, letter)) for m, c in p.sorted_terms()]
    return _join_signed(items, "*", " + ", " - ")


def poly_from_json(data: Any) -> Poly:
    """format_poly(json) 的逆；接受 JSON 文本或已解析的对象"""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise DataFormatError(f"多项式 JSON 无法解析: {e}") from e
    if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
        raise DataFormatError('多项式 JSON 必须是含 "terms" 列表的对象')

    terms = []
    for n, term in enumerate(data["terms"]):
        try:
            coeff = int(term["coeff"])
            factors = [CovSymbol.of(int(i), int(j)) for i, j in term["factors"]]
        except (KeyError, TypeError, ValueError) as e:
            raise DataFormatError(f"第 {n} 项格式错误: {e}") from e
        terms.append((tuple(factors), coeff))
    return Poly.from_terms(terms)


# ============================================================
# 矩展开式
# ============================================================
def _moment_text(block: Tuple[int, ...]) -> str:
    return "mu{" + ",".join(str(i) for i in block) + "}"


def _moment_latex(block: Tuple[int, ...]) -> str:
    return "\\mu_{\\{" + ",".join(str(i) for i in block) + "\\}}"


def expansion_to_json_obj(expansion: Sequence[MomentProduct]) -> List[Dict[str, Any]]:
    return [
        {"coeff": str(item.coefficient), "blocks": [list(b) for b in item.blocks]}
        for item in expansion
    ]


def format_expansion(expansion: Sequence[MomentProduct], style: str = "text") -> str:
    """把累积量的矩展开式写成 mu{1,2}*mu{3,4} 形式"""
    if style == "json":
        return json.dumps(expansion_to_json_obj(expansion))
    if not expansion:
        return "0"
    if style == "latex":
        items = [(e.coefficient, "".join(_moment_latex(b) for b in e.blocks)) for e in expansion]
        return _join_signed(items, "", "+", "-")
    items = [(e.coefficient, "*".join(_moment_text(b) for b in e.blocks)) for e in expansion]
    return _join_signed(items, "*", " + ", " - ")


def _finite_or_none(x: float) -> Optional[float]:
    return x if math.isfinite(x) else None


def render_report(report, style: str, standardized: bool) -> str:
    """
    把 QueryReport 渲染为 stdout 输出

    json 为单个对象；text/latex 第一行是多项式，其余各节各占一行。
    """
    if style == "json":
        payload = poly_to_json_obj(
            substitute_diagonal_one(report.poly) if standardized else report.poly
        )
        if report.term_count is not None:
            payload["term_count"] = report.term_count
        if report.value is not None:
            payload["value"] = _finite_or_none(report.value)
        if report.mc is not None:
            payload["mc"] = {
                "estimate": _finite_or_none(report.mc.estimate),
                "std_error": _finite_or_none(report.mc.std_error),
                "samples": report.mc.samples,
                "seed": report.mc.seed,
                "shards": report.mc.shards,
            }
        if report.expansion is not None:
            payload["expansion"] = expansion_to_json_obj(report.expansion)
        return json.dumps(payload, allow_nan=False)

    lines = [format_poly(report.poly, style, standardized)]
    if report.expansion is not None:
        lines.append(f"expansion: {format_expansion(report.expansion, style)}")
    if report.term_count is not None:
        lines.append(f"terms: {report.term_count}")
    if report.value is not None:
        lines.append(f"value: {report.value!r}")
    if report.mc is not None:
        mc = report.mc
        lines.append(
            f"mc: {mc.estimate!r} ± {mc.std_error!r} "
            f"(samples={mc.samples}, seed={mc.seed}, shards={mc.shards})"
        )
    return "\n".join(lines)
