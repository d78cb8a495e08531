#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""日志配置：控制台日志一律写 stderr，stdout 只留给结果；可选 JSON 行与日志文件。"""

import os
import sys
import json
import logging
import datetime
from typing import Any, Dict, Optional

# Windows 需要 colorama 处理 ANSI 转义
try:
    import colorama

    colorama.init()
    COLORAMA_AVAILABLE = True
except Exception:  # pragma: no cover - 可选依赖
    COLORAMA_AVAILABLE = False


LEVEL_COLORS = {
    logging.DEBUG: "\033[90m",
    logging.INFO: "\033[32m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
    logging.CRITICAL: "\033[41m",
}
COLOR_RESET = "\033[0m"

# 引擎通过 extra= 传入的上下文字段
CONTEXT_KEYS = ("query", "partitions", "terms", "shard", "samples")


def _context(record: logging.LogRecord) -> Dict[str, Any]:
    return {
        key: getattr(record, key)
        for key in CONTEXT_KEYS
        if getattr(record, key, None) not in (None, "")
    }


class TextFormatter(logging.Formatter):
    """
    文本格式，上下文字段附在消息尾部: "... (partitions=5 terms=2)"

    控制台用短时间戳与可选颜色；文件额外带日期和 logger 名。
    """

    def __init__(self, detailed: bool = False, enable_color: bool = False):
        super().__init__()
        self.detailed = detailed
        self.enable_color = enable_color

    def format(self, record: logging.LogRecord) -> str:
        created = datetime.datetime.fromtimestamp(record.created)
        context = _context(record)
        tail = " (" + " ".join(f"{k}={v}" for k, v in context.items()) + ")" if context else ""
        if self.detailed:
            return (
                f"{created:%Y-%m-%d %H:%M:%S} | {record.levelname:<7} | "
                f"{record.name} | {record.getMessage()}{tail}"
            )
        line = f"[{created:%H:%M:%S}] {record.levelname:<5} {record.getMessage()}{tail}"
        if self.enable_color:
            return f"{LEVEL_COLORS.get(record.levelno, '')}{line}{COLOR_RESET}"
        return line


class JsonFormatter(logging.Formatter):
    """每条记录一行 JSON，便于 CI 采集"""

    def format(self, record: logging.LogRecord) -> str:
        payload: Dict[str, Any] = {
            "ts": datetime.datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "name": record.name,
            "msg": record.getMessage(),
        }
        for key, value in _context(record).items():
            payload[key] = value if isinstance(value, (int, float, str)) else str(value)
        if record.exc_info:
            payload["exc_info"] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=False)


def _should_use_color(stream, plain: bool) -> bool:
    if plain or not getattr(stream, "isatty", lambda: False)():
        return False
    return sys.platform != "win32" or COLORAMA_AVAILABLE


def setup_logging(
    log_folder: Optional[str] = None,
    level: Any = "WARNING",
    plain: bool = False,
    json_console: bool = False,
) -> Optional[str]:
    """
    配置根 logger：stderr 控制台 + 可选的 DEBUG 级日志文件

    Args:
        log_folder: 日志文件夹路径，None 表示不写文件
        level: 控制台级别（名称或数字，无法识别的名称按 WARNING）
        plain: 控制台禁用彩色
        json_console: 控制台使用 JSON 行输出

    Returns:
        日志文件路径，未写文件时为 None
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    if not isinstance(level, int):
        level = logging.WARNING

    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(logging.DEBUG)

    log_file = None
    if log_folder:
        os.makedirs(log_folder, exist_ok=True)
        timestamp = datetime.datetime.now().strftime("%Y%m%d%H%M%S")
        log_file = os.path.join(log_folder, f"gauss_cumulants_{timestamp}.log")
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(TextFormatter(detailed=True))
        root.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    if json_console:
        console_handler.setFormatter(JsonFormatter())
    else:
        console_handler.setFormatter(
            TextFormatter(enable_color=_should_use_color(sys.stderr, plain))
        )
    root.addHandler(console_handler)

    root.debug("日志初始化完成")
    return log_file
