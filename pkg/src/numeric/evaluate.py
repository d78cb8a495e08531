#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
数值求值

CovMatrix: 协方差矩阵（对称；用于抽样时需半正定）
eval_numeric: 把多项式中的 V_{i,j} 代换为矩阵元素后按浮点求值
"""

import json
import math
from typing import Any, Mapping, Sequence

import numpy as np

from src.config.defaults import PSD_TOLERANCE, SYMMETRY_TOLERANCE
from src.core.polyalg import Poly
from src.errors import CovarianceError, DataFormatError


class CovMatrix:
    """dim x dim 的对称协方差矩阵，索引从 1 开始"""

    __slots__ = ("dim", "entries")

    def __init__(self, entries: Any, symmetry_tolerance: float = SYMMETRY_TOLERANCE):
        try:
            matrix = np.array(entries, dtype=float)
        except (TypeError, ValueError) as e:
            raise CovarianceError(f"协方差矩阵元素必须是数值: {e}") from e
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
            raise CovarianceError(f"协方差矩阵必须是非空方阵，实际形状 {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise CovarianceError("协方差矩阵含有非有限值")

        scale = max(1.0, float(np.max(np.abs(matrix))))
        asymmetry = float(np.max(np.abs(matrix - matrix.T)))
        if asymmetry > symmetry_tolerance * scale:
            raise CovarianceError(f"协方差矩阵不对称（最大偏差 {asymmetry:.3e}）")

        matrix.setflags(write=False)
        self.dim = matrix.shape[0]
        self.entries = matrix

    @classmethod
    def from_dict(cls, obj: Any, **kwargs) -> "CovMatrix":
        """解析 {"dim": n, "entries": [[...], ...]}"""
        if not isinstance(obj, dict) or "entries" not in obj:
            raise DataFormatError('协方差文件必须是含 "entries" 的 JSON 对象')
        matrix = cls(obj["entries"], **kwargs)
        if "dim" in obj and obj["dim"] != matrix.dim:
            raise DataFormatError(f'"dim"={obj["dim"]} 与矩阵大小 {matrix.dim} 不一致')
        return matrix

    @classmethod
    def from_json(cls, path: str, **kwargs) -> "CovMatrix":
        try:
            with open(path, "r", encoding="utf-8") as f:
                obj = json.load(f)
        except OSError as e:
            raise DataFormatError(f"无法读取协方差文件 {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise DataFormatError(f"协方差文件不是合法 JSON {path}: {e}") from e
        return cls.from_dict(obj, **kwargs)

    def to_dict(self) -> dict:
        return {"dim": self.dim, "entries": self.entries.tolist()}

    def value(self, i: int, j: int) -> float:
        return float(self.entries[i - 1, j - 1])

    def factor(self, tolerance: float = PSD_TOLERANCE) -> np.ndarray:
        """
        对称特征分解 A = Q diag(w) Q^T，返回 L = Q sqrt(w) 使 L L^T = A

        任何特征值低于 -tolerance * scale 视为非半正定；不做自动修补。
        """
        w, q = np.linalg.eigh(self.entries)
        scale = max(1.0, float(np.max(np.abs(w))))
        if w.min() < -tolerance * scale:
            raise CovarianceError(f"协方差矩阵不是半正定的（最小特征值 {w.min():.3e}）")
        return q * np.sqrt(np.clip(w, 0.0, None))

    def is_psd(self, tolerance: float = PSD_TOLERANCE) -> bool:
        try:
            self.factor(tolerance)
        except CovarianceError:
            return False
        return True

    def relabeled(self, mapping: Mapping[int, int]) -> "CovMatrix":
        """按索引置换重排：新矩阵 [σ(i), σ(j)] = 原矩阵 [i, j]"""
        order = [0] * self.dim
        for i in range(1, self.dim + 1):
            order[mapping[i] - 1] = i - 1
        return CovMatrix(self.entries[np.ix_(order, order)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CovMatrix):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.entries, other.entries))

    __hash__ = None

    def __repr__(self) -> str:
        return f"CovMatrix(dim={self.dim})"


def eval_numeric(p: Poly, cov: CovMatrix) -> float:
    """
    按显示顺序逐项浮点求值（顺序固定，结果可复现）

    符号索引超出矩阵维度时抛出 CovarianceError，消息中给出符号。
    """
    total = 0.0
    for mono, coeff in p.sorted_terms():
        factors = []
        for symbol in mono:
            if symbol.hi > cov.dim:
                raise CovarianceError(
                    f"符号 V[{symbol.lo},{symbol.hi}] 超出协方差矩阵维度 {cov.dim}"
                )
            factors.append(cov.value(symbol.lo, symbol.hi))
        total += float(coeff) * math.prod(factors)
    return total


def random_psd_matrix(dim: int, rng: np.random.Generator, rank: int = None) -> CovMatrix:
    """随机半正定矩阵 A A^T / cols，用于统计交叉检验"""
    cols = rank or dim
    a = rng.standard_normal((dim, cols))
    matrix = a @ a.T / cols
    return CovMatrix((matrix + matrix.T) / 2.0)


def indices_within(indices: Sequence[int], cov: CovMatrix) -> bool:
    return all(1 <= i <= cov.dim for i in indices)
