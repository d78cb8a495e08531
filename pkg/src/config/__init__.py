# 配置模块
"""配置加载和管理"""

from src.config.loader import load_config, apply_cli_overrides, deep_merge
from src.config.defaults import (
    DEFAULT_CONFIG,
    DEFAULT_MAX_ORDER,
    OUTPUT_STYLES,
)

__all__ = [
    "load_config",
    "apply_cli_overrides",
    "deep_merge",
    "DEFAULT_CONFIG",
    "DEFAULT_MAX_ORDER",
    "OUTPUT_STYLES",
]
