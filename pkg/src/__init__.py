# gauss-cumulants - 高斯乘积的矩与累积量
"""
gauss-cumulants 包

主要模块:
- config: 配置加载
- core: 组合枚举、多项式代数、矩/累积量引擎、快捷规则
- numeric: 数值求值与蒙特卡洛检验
- query: 查询解析与结果格式化
- scheduler: 线程池
- utils: 日志
"""

__version__ = "1.0.0"

from src.config import load_config, apply_cli_overrides
from src.core import CumulantEngine, CumulantQuery, Poly, cumulant, moment_memoized

__all__ = [
    "__version__",
    "load_config",
    "apply_cli_overrides",
    "CumulantEngine",
    "CumulantQuery",
    "Poly",
    "cumulant",
    "moment_memoized",
]
