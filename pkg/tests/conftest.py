#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
pytest 配置文件
"""

import copy
import json
import os
import sys
import pytest

# 添加项目根目录到 Python 路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.config.defaults import DEFAULT_CONFIG
from src.core.cumulants import CumulantEngine, CumulantQuery
from src.core.moments import MomentCache


# 五个分组的混合累积量及其重排写法
MIXED_GROUPS = (3, (1, 3), (1, 3), (1, 2, 3), (1, 2, 3, 3))
MIXED_GROUPS_REORDERED = ((3, 1), (3, 2, 1), 3, (2, 3, 3, 1), (1, 3))


@pytest.fixture
def sample_config():
    """返回测试用配置（默认配置的深拷贝，单线程）"""
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["engine"]["threads"] = 1
    return config


@pytest.fixture
def fresh_cache():
    return MomentCache()


@pytest.fixture
def engine(fresh_cache):
    """单线程、独立缓存的引擎"""
    return CumulantEngine(threads=1, cache=fresh_cache)


@pytest.fixture
def mixed_query():
    return CumulantQuery.of(*MIXED_GROUPS)


@pytest.fixture
def equicorrelated_cov_file(tmp_path):
    """4x4，对角 1，非对角 0.3"""
    entries = [[1.0 if i == j else 0.3 for j in range(4)] for i in range(4)]
    path = tmp_path / "cov.json"
    path.write_text(json.dumps({"dim": 4, "entries": entries}), encoding="utf-8")
    return str(path)
