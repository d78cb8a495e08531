# 数值模块
"""协方差矩阵求值与蒙特卡洛检验"""

from src.numeric.evaluate import CovMatrix, eval_numeric, random_psd_matrix
from src.numeric.montecarlo import McConfig, MonteCarloEstimate, mc_estimate_cumulant, parse_mc_spec

__all__ = [
    "CovMatrix",
    "eval_numeric",
    "random_psd_matrix",
    "McConfig",
    "MonteCarloEstimate",
    "mc_estimate_cumulant",
    "parse_mc_spec",
]
