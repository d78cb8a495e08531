#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
默认配置常量

定义引擎、输出、蒙特卡洛与日志的默认值
"""

# ============================================================
# 路径配置
# ============================================================
DEFAULT_LOG_FOLDER = None  # None 表示不写日志文件

# ============================================================
# 引擎配置
# ============================================================
DEFAULT_MAX_ORDER = 16  # 索引总数上限，配对数按 (2k-1)!! 增长
DEFAULT_THREADS = 0  # 0 = min(4, CPU 核数)
STRUCTURAL_MAX_ORDER = 8

# ============================================================
# 输出配置
# ============================================================
OUTPUT_STYLES = ("text", "latex", "json")
DEFAULT_OUTPUT_STYLE = "text"
SYMBOL_RAW = "V"
SYMBOL_STANDARDIZED = "C"

# ============================================================
# 数值/蒙特卡洛配置
# ============================================================
MC_MAX_ORDER = 8  # 超过此阶数时蒙特卡洛精度迅速下降
MC_DEFAULT_SHARDS = 1
MC_DEFAULT_BATCHES = 20  # 批均值标准误的批数
PSD_TOLERANCE = 1e-10
SYMMETRY_TOLERANCE = 1e-12

# ============================================================
# 退出码
# ============================================================
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_FILE_ERROR = 4
EXIT_INTERRUPTED = 130

# ============================================================
# 默认配置字典（用于配置加载）
# ============================================================
DEFAULT_CONFIG = {
    "paths": {
        "log": DEFAULT_LOG_FOLDER,
    },
    "logging": {
        # 结果写 stdout，诊断写 stderr；默认只显示警告以上
        "level": "WARNING",
        "plain": False,
        "json_console": False,
    },
    "engine": {
        "max_order": DEFAULT_MAX_ORDER,
        "threads": DEFAULT_THREADS,
        "pruned": True,
        "use_mixed_rules": True,
        "memoize": True,
    },
    "output": {
        "style": DEFAULT_OUTPUT_STYLE,
        "standardize": False,
        "count": False,
        "expand": False,
    },
    "montecarlo": {
        "max_order": MC_MAX_ORDER,
        "shards": MC_DEFAULT_SHARDS,
        "batches": MC_DEFAULT_BATCHES,
        "psd_tolerance": PSD_TOLERANCE,
        "symmetry_tolerance": SYMMETRY_TOLERANCE,
    },
}
