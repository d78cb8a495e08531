#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
gauss-cumulants - CLI 入口

命令行参数解析、查询执行与退出码映射：
0 成功；2 查询/参数错误；3 超出资源上限；4 文件/格式错误；1 其他错误
"""

import logging
import argparse
import dataclasses
import sys
import traceback
from typing import List, Optional

from src.bootstrap import enforce_utf8_windows, prepare_environment
from src.config import load_config, apply_cli_overrides
from src.config.defaults import (
    DEFAULT_MAX_ORDER,
    EXIT_FAILURE,
    EXIT_FILE_ERROR,
    EXIT_INTERRUPTED,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_RESOURCE_LIMIT,
    OUTPUT_STYLES,
)
from src.errors import (
    ConfigError,
    CovarianceError,
    DataFormatError,
    InvalidQueryError,
    ResourceLimitError,
)
from src.numeric.montecarlo import parse_mc_spec
from src.query.formatting import render_report
from src.query.parser import parse_query
from src.service import execute_query, options_from_config


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """解析命令行参数"""
    parser = argparse.ArgumentParser(
        prog="gauss-cumulants",
        description="gauss-cumulants - 中心化高斯变量乘积的矩与联合累积量（精确符号计算）",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
查询语法:
  mv 2 5 2 5 2 8                       E(X2 X5 X2 X5 X2 X8)
  k (1,2) (3,4)                        κ(X1X2, X3X4)
  k 3 (1,3) (1,3) (1,2,3) (1,2,3,3)    裸整数为单元，括号为乘积分组

使用示例:
  gauss-cumulants "k (1,2) (3,4)" --count
  gauss-cumulants "k 3 (1,3) (1,3) (1,2,3) (1,2,3,3)" --std --output latex
  gauss-cumulants "k (1,2) (3,4)" --eval cov.json --mc 1000000:42
        """,
    )

    parser.add_argument("query", help="mv/k 查询字符串（整体加引号）")

    # 输出选项
    parser.add_argument(
        "--std", action="store_true", help="标准化：V[i,i] -> 1，符号写作 C"
    )
    parser.add_argument(
        "--output",
        choices=OUTPUT_STYLES,
        default=None,
        help="输出格式 (默认: text)",
    )
    parser.add_argument("--count", action="store_true", help="同时输出项数")
    parser.add_argument(
        "--expand", action="store_true", help="同时输出累积量的矩展开式"
    )

    # 数值选项
    parser.add_argument(
        "--eval", metavar="COV_JSON", default=None, help="用协方差 JSON 文件数值求值"
    )
    parser.add_argument(
        "--mc",
        metavar="SAMPLES:SEED",
        default=None,
        help="蒙特卡洛交叉检验（需要 --eval）",
    )
    parser.add_argument(
        "--shards", type=int, default=None, help="蒙特卡洛分片数 (默认: 1)"
    )

    # 引擎选项
    parser.add_argument(
        "--max-order",
        type=int,
        default=None,
        help=f"索引总数上限 (默认: {DEFAULT_MAX_ORDER})",
    )
    parser.add_argument(
        "--unpruned", action="store_true", help="不剪枝的参考模式（仅用于校验）"
    )
    parser.add_argument(
        "--no-rules", action="store_true", help="不使用单元/双元快捷规则"
    )
    parser.add_argument(
        "--threads", type=int, default=None, help="引擎线程数 (默认: min(4, CPU 核数))"
    )

    # 配置文件选项
    parser.add_argument(
        "--config", type=str, default=None, help="配置文件路径 (YAML 格式)"
    )
    parser.add_argument("--log-dir", default=None, help="日志文件夹（默认不写文件）")

    # 日志/输出选项
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="增加日志详细度（-v INFO，-vv DEBUG）",
    )
    parser.add_argument(
        "-q", "--quiet", action="count", default=0, help="只输出错误"
    )
    parser.add_argument("--plain", action="store_true", help="禁用彩色输出/装饰")
    parser.add_argument(
        "--json-logs", action="store_true", help="stderr 输出 JSON 行日志，便于采集/CI"
    )

    args = parser.parse_args(argv)
    if args.mc is not None and args.eval is None:
        parser.error("--mc 需要同时指定 --eval")
    return args


def run(argv: Optional[List[str]] = None) -> int:
    """执行一次命令行调用，返回退出码；结果写 stdout，诊断写 stderr"""
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_PARSE_ERROR

    try:
        config = load_config(args.config)
        config = apply_cli_overrides(config, args)
        config = prepare_environment(config)

        query = parse_query(args.query)
        mc = None
        if args.mc is not None:
            mc_cfg = config.get("montecarlo", {})
            mc = parse_mc_spec(args.mc, mc_cfg.get("shards"), mc_cfg.get("batches"))
        query = dataclasses.replace(
            query, options=options_from_config(config, args.eval, mc)
        )

        report = execute_query(query, config)
        print(render_report(report, query.options.output, query.options.standardize))
        return EXIT_OK

    except InvalidQueryError as e:
        logging.error(f"查询错误: {e}")
        return EXIT_PARSE_ERROR
    except ResourceLimitError as e:
        logging.error(f"超出资源上限: {e}")
        return EXIT_RESOURCE_LIMIT
    except (CovarianceError, DataFormatError, ConfigError) as e:
        logging.error(f"文件/格式错误: {e}")
        return EXIT_FILE_ERROR
    except KeyboardInterrupt:
        logging.warning("用户中断操作")
        return EXIT_INTERRUPTED
    except Exception as e:
        logging.critical(f"程序执行过程中发生严重错误: {e}")
        logging.debug(traceback.format_exc())
        return EXIT_FAILURE


def main() -> int:
    """主函数"""
    enforce_utf8_windows()
    return run()


if __name__ == "__main__":
    sys.exit(main())
