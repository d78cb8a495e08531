#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
异常定义

所有引擎/CLI 错误的统一基类及其子类，CLI 按类型映射退出码。
"""

from typing import Optional


class GaussCumulantError(ValueError):
    """所有领域错误的基类"""


class InvalidQueryError(GaussCumulantError):
    """查询/参数不满足类型约束（索引 < 1、空分组、重复索引等）"""


class QueryParseError(InvalidQueryError):
    """查询字符串语法错误，消息附带出错位置"""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(self._annotate())

    def _annotate(self) -> str:
        if not self.text:
            return f"{self.message} (位置 {self.position})"
        caret = " " * self.position + "^"
        return f"{self.message} (位置 {self.position})\n  {self.text}\n  {caret}"


class ResourceLimitError(GaussCumulantError):
    """超出配置的计算规模上限"""

    def __init__(self, message: str, limit: Optional[int] = None):
        self.limit = limit
        super().__init__(message)


class IndexMappingError(GaussCumulantError, KeyError):
    """relabel 时遇到映射表中没有的索引"""

    def __str__(self) -> str:
        return ValueError.__str__(self)


class CovarianceError(GaussCumulantError):
    """协方差矩阵不合法（不对称、非半正定、维度不足）"""


class DataFormatError(GaussCumulantError):
    """输入文件或参数格式错误"""


class ConfigError(GaussCumulantError):
    """配置文件无法读取或解析"""
