#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
蒙特卡洛交叉检验

抽取联合高斯样本，构造每个分组的乘积 Y_g，再把经验（原点）矩代入划分公式
得到联合累积量的估计；标准误用批均值法。估计是 (seed, samples, shards) 的确定函数。
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional

import numpy as np

from src.config.defaults import (
    MC_DEFAULT_BATCHES,
    MC_DEFAULT_SHARDS,
    MC_MAX_ORDER,
    PSD_TOLERANCE,
)
from src.core.combinat import Partition, enumerate_set_partitions
from src.core.cumulants import CumulantQuery, partition_coefficient
from src.errors import (
    CovarianceError,
    DataFormatError,
    InvalidQueryError,
    ResourceLimitError,
)
from src.numeric.evaluate import CovMatrix, indices_within
from src.scheduler.pool import ordered_map

logger = logging.getLogger(__name__)

SEED_LIMIT = 2**64


@dataclass(frozen=True)
class McConfig:
    """
    samples: 样本总数
    seed: 64 位无符号种子
    shards: 分片数（每片由 SeedSequence.spawn 派生独立种子）
    batches: 批均值标准误的批数
    """

    samples: int
    seed: int
    shards: int = MC_DEFAULT_SHARDS
    batches: int = MC_DEFAULT_BATCHES

    def __post_init__(self):
        if self.samples < 1:
            raise InvalidQueryError(f"样本数必须 >= 1，实际 {self.samples}")
        if not 0 <= self.seed < SEED_LIMIT:
            raise InvalidQueryError(f"种子必须是 64 位无符号整数，实际 {self.seed}")
        if self.shards < 1:
            raise InvalidQueryError(f"分片数必须 >= 1，实际 {self.shards}")
        if self.batches < 1:
            raise InvalidQueryError(f"批数必须 >= 1，实际 {self.batches}")


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    std_error: float
    samples: int
    seed: int
    shards: int

    def within(self, value: float, sigmas: float) -> bool:
        """|估计 - value| <= sigmas 个标准误"""
        return abs(self.estimate - value) <= sigmas * self.std_error


def _shard_sizes(samples: int, shards: int) -> List[int]:
    base, extra = divmod(samples, shards)
    return [base + (1 if s < extra else 0) for s in range(shards)]


def _group_products(x: np.ndarray, query: CumulantQuery) -> np.ndarray:
    columns = [
        np.prod(x[:, [i - 1 for i in group.indices]], axis=1) for group in query.groups
    ]
    return np.column_stack(columns)


def plugin_cumulant(y: np.ndarray, partitions: List[Partition]) -> float:
    """经验原点矩代入划分公式（有 O(1/n) 偏差但一致）"""
    means: Dict[FrozenSet[int], float] = {}

    def block_mean(block) -> float:
        key = frozenset(block)
        if key not in means:
            means[key] = float(np.mean(np.prod(y[:, [p - 1 for p in block]], axis=1)))
        return means[key]

    total = 0.0
    for partition in partitions:
        term = float(partition_coefficient(partition.size))
        for block in partition.blocks:
            term *= block_mean(block)
        total += term
    return total


def mc_estimate_cumulant(
    query: CumulantQuery,
    cov: CovMatrix,
    cfg: McConfig,
    max_order: int = MC_MAX_ORDER,
    threads: int = 1,
    psd_tolerance: float = PSD_TOLERANCE,
) -> MonteCarloEstimate:
    total = query.total_indices
    if total > max_order:
        raise ResourceLimitError(
            f"蒙特卡洛只支持总阶数 <= {max_order}，实际 {total}", limit=max_order
        )
    if not indices_within(query.all_indices(), cov):
        raise CovarianceError(f"查询索引超出协方差矩阵维度 {cov.dim}")

    factor = cov.factor(psd_tolerance)
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.shards)
    sizes = _shard_sizes(cfg.samples, cfg.shards)

    def draw(shard: int) -> np.ndarray:
        rng = np.random.default_rng(seeds[shard])
        z = rng.standard_normal((sizes[shard], cov.dim))
        logger.debug("分片抽样完成", extra={"shard": shard, "samples": sizes[shard]})
        return _group_products(z @ factor.T, query)

    y = np.concatenate(ordered_map(draw, list(range(cfg.shards)), threads), axis=0)
    partitions = list(enumerate_set_partitions(query.order))
    estimate = plugin_cumulant(y, partitions)

    batches = min(cfg.batches, cfg.samples)
    if batches < 2:
        std_error = math.nan
    else:
        batch_estimates = [plugin_cumulant(chunk, partitions) for chunk in np.array_split(y, batches)]
        std_error = float(np.std(batch_estimates, ddof=1) / math.sqrt(batches))

    logger.info(
        f"蒙特卡洛估计 {estimate:.6g} ± {std_error:.3g}",
        extra={"samples": cfg.samples, "shard": cfg.shards},
    )
    return MonteCarloEstimate(estimate, std_error, cfg.samples, cfg.seed, cfg.shards)


def parse_mc_spec(spec: str, shards: Optional[int] = None, batches: Optional[int] = None) -> McConfig:
    """解析 --mc 的 "样本数:种子" 形式"""
    parts = spec.split(":")
    if len(parts) != 2:
        raise DataFormatError(f'--mc 需要 "样本数:种子" 形式，实际 "{spec}"')
    try:
        samples, seed = int(parts[0]), int(parts[1])
    except ValueError:
        raise DataFormatError(f'--mc 的样本数和种子必须是整数，实际 "{spec}"') from None
    try:
        return McConfig(
            samples,
            seed,
            shards if shards is not None else MC_DEFAULT_SHARDS,
            batches if batches is not None else MC_DEFAULT_BATCHES,
        )
    except InvalidQueryError as e:
        raise DataFormatError(str(e)) from e
