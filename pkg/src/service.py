#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
服务层

提供可被 CLI/测试复用的查询执行入口：求矩/累积量，按选项追加
标准化、项数、数值求值、蒙特卡洛检验与矩展开式。
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from src.config.defaults import (
    DEFAULT_MAX_ORDER,
    DEFAULT_THREADS,
    MC_MAX_ORDER,
    PSD_TOLERANCE,
    SYMMETRY_TOLERANCE,
)
from src.core.cumulants import CumulantEngine, MomentProduct, moment_expansion
from src.core.polyalg import Poly, standardize, term_count
from src.core.rules import cumulant_with_rules
from src.numeric.evaluate import CovMatrix, eval_numeric
from src.numeric.montecarlo import MonteCarloEstimate, mc_estimate_cumulant
from src.query.parser import Query, QueryKind, QueryOptions, render_query
from src.errors import InvalidQueryError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QueryReport:
    """一次查询的全部输出节"""

    poly: Poly
    term_count: Optional[int] = None
    value: Optional[float] = None
    mc: Optional[MonteCarloEstimate] = None
    expansion: Optional[List[MomentProduct]] = None


def create_engine(config: Dict[str, Any]) -> CumulantEngine:
    engine_cfg = config.get("engine", {})
    return CumulantEngine(
        max_order=engine_cfg.get("max_order", DEFAULT_MAX_ORDER),
        threads=engine_cfg.get("threads", DEFAULT_THREADS),
        pruned=engine_cfg.get("pruned", True),
        memoize=engine_cfg.get("memoize", True),
    )


def options_from_config(
    config: Dict[str, Any], eval_cov: Optional[str] = None, mc=None
) -> QueryOptions:
    output_cfg = config.get("output", {})
    return QueryOptions(
        standardize=bool(output_cfg.get("standardize", False)),
        output=output_cfg.get("style", "text"),
        count_only=bool(output_cfg.get("count", False)),
        eval_cov=eval_cov,
        mc=mc,
    )


def execute_query(query: Query, config: Dict[str, Any]) -> QueryReport:
    """
    执行查询

    Args:
        query: 已解析的查询（options 决定附加输出节）
        config: 已合并 CLI 覆盖的配置

    Returns:
        QueryReport
    """
    options = query.options
    engine_cfg = config.get("engine", {})
    mc_cfg = config.get("montecarlo", {})
    engine = create_engine(config)
    text = render_query(query)

    logger.info(
        f"引擎: 上限 {engine.max_order}，线程 {engine.threads}，"
        f"剪枝 {'开' if engine.pruned else '关'}",
        extra={"query": text},
    )

    if options.mc is not None and options.eval_cov is None:
        raise InvalidQueryError("--mc 需要同时指定 --eval 协方差文件")

    if query.kind is QueryKind.MOMENT:
        poly = engine.moment(query.index_list().indices)
    elif engine_cfg.get("use_mixed_rules", True) and engine.pruned:
        poly = cumulant_with_rules(query.cumulant_query(), engine)
    else:
        poly = engine.cumulant(query.cumulant_query())

    if options.standardize:
        poly = standardize(poly)
    logger.info(f"结果 {term_count(poly)} 项", extra={"terms": term_count(poly)})

    count = term_count(poly) if options.count_only else None

    expansion = None
    if config.get("output", {}).get("expand", False) and query.kind is QueryKind.CUMULANT:
        expansion = moment_expansion(query.cumulant_query())

    value = None
    estimate = None
    if options.eval_cov is not None:
        cov = CovMatrix.from_json(
            options.eval_cov,
            symmetry_tolerance=mc_cfg.get("symmetry_tolerance", SYMMETRY_TOLERANCE),
        )
        if options.standardize and not np.allclose(np.diag(cov.entries), 1.0):
            logger.warning("标准化结果假定方差为 1，但协方差矩阵对角线不全为 1")
        value = eval_numeric(poly, cov)

        if options.mc is not None:
            estimate = mc_estimate_cumulant(
                query.cumulant_query(),
                cov,
                options.mc,
                max_order=mc_cfg.get("max_order", MC_MAX_ORDER),
                threads=engine.threads,
                psd_tolerance=mc_cfg.get("psd_tolerance", PSD_TOLERANCE),
            )

    return QueryReport(poly, count, value, estimate, expansion)
