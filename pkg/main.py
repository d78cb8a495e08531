#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
gauss-cumulants - 主入口

简洁的主入口脚本，等价于 python cli.py
"""

import sys

from cli import main


if __name__ == "__main__":
    sys.exit(main())
