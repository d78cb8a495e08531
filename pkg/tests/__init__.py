# Tests 模块
"""gauss-cumulants 测试模块"""
