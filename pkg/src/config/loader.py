#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
配置加载器

支持从 YAML 文件加载配置，并实现配置优先级合并
优先级: 命令行参数 > 配置文件 > 程序默认值
"""

import os
import logging
import copy
from pathlib import Path
from typing import Dict, Any, Optional

import yaml

from src.config.defaults import DEFAULT_CONFIG, OUTPUT_STYLES
from src.errors import ConfigError


def find_default_config() -> Optional[str]:
    """
    查找默认配置文件

    按以下顺序查找:
    1. 程序同目录下的 config.yaml
    2. 用户目录下的 .gauss_cumulants/config.yaml

    Returns:
        找到的配置文件路径，如果没找到返回 None
    """
    script_dir = Path(__file__).parent.parent.parent
    local_config = script_dir / "config.yaml"
    if local_config.exists():
        return str(local_config)

    home_config = Path.home() / ".gauss_cumulants" / "config.yaml"
    if home_config.exists():
        return str(home_config)

    return None


def deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """
    深度合并两个字典，override 中的值会覆盖 base 中的值

    Args:
        base: 基础字典
        override: 覆盖字典

    Returns:
        合并后的字典
    """
    result = copy.deepcopy(base)
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    加载配置文件

    显式指定的文件不存在或无法解析时抛出 ConfigError；
    自动查找时没有文件则使用默认配置。

    Args:
        config_path: 配置文件路径，如果为 None 则使用默认路径

    Returns:
        配置字典
    """
    config = copy.deepcopy(DEFAULT_CONFIG)

    explicit = config_path is not None
    if config_path is None:
        config_path = find_default_config()
    if config_path is None:
        return config

    if not os.path.exists(config_path):
        if explicit:
            raise ConfigError(f"配置文件不存在: {config_path}")
        return config

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            file_config = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"加载配置文件失败: {config_path}: {e}") from e

    if not isinstance(file_config, dict):
        raise ConfigError(f"配置文件顶层必须是映射: {config_path}")

    logging.info(f"已加载配置文件: {config_path}")
    return deep_merge(config, file_config)


def apply_cli_overrides(config: Dict[str, Any], args) -> Dict[str, Any]:
    """
    将命令行参数覆盖到配置中

    优先级: 命令行参数 > 配置文件 > 程序默认值

    Args:
        config: 配置字典
        args: 命令行参数

    Returns:
        更新后的配置字典
    """
    engine = config.setdefault("engine", {})
    output = config.setdefault("output", {})
    mc_cfg = config.setdefault("montecarlo", {})

    # 引擎覆盖
    if getattr(args, "max_order", None) is not None:
        engine["max_order"] = args.max_order
    if getattr(args, "threads", None) is not None:
        engine["threads"] = args.threads
    if hasattr(args, "unpruned") and args.unpruned:
        engine["pruned"] = False
    if hasattr(args, "no_rules") and args.no_rules:
        engine["use_mixed_rules"] = False

    # 输出覆盖
    if getattr(args, "output", None) is not None:
        if args.output not in OUTPUT_STYLES:
            raise ConfigError(f"未知输出格式: {args.output}")
        output["style"] = args.output
    if hasattr(args, "std") and args.std:
        output["standardize"] = True
    if hasattr(args, "count") and args.count:
        output["count"] = True
    if hasattr(args, "expand") and args.expand:
        output["expand"] = True

    # 蒙特卡洛覆盖
    if getattr(args, "shards", None) is not None:
        mc_cfg["shards"] = args.shards

    # 路径
    if getattr(args, "log_dir", None):
        config.setdefault("paths", {})["log"] = args.log_dir

    # 日志/控制台输出
    config.setdefault("logging", {})
    log_cfg = config["logging"]

    if hasattr(args, "verbose") and args.verbose:
        log_cfg["level"] = "INFO" if args.verbose == 1 else "DEBUG"
    if hasattr(args, "quiet") and args.quiet:
        log_cfg["level"] = "ERROR"
    if hasattr(args, "plain") and args.plain:
        log_cfg["plain"] = True
    if hasattr(args, "json_logs") and args.json_logs:
        log_cfg["json_console"] = True

    return config
