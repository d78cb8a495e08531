# 查询模块
"""查询语法解析与输出格式化"""

from src.query.parser import Query, QueryKind, QueryOptions, parse_query, render_query
from src.query.formatting import format_poly, poly_from_json, format_expansion, render_report

__all__ = [
    "Query",
    "QueryKind",
    "QueryOptions",
    "parse_query",
    "render_query",
    "format_poly",
    "poly_from_json",
    "format_expansion",
    "render_report",
]
