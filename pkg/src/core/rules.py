#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
单元/双元混合累积量的快捷规则

仅当所有分组都是单元或双元时适用：
- 恰有一个单元 -> 0
- 三个及以上单元 -> 0
- 恰有两个单元 i, j -> 以双元 (i, j) 替换二者
其余情况不做处理，交给通用引擎。
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.core.cumulants import CumulantEngine, CumulantQuery, Group
from src.core.polyalg import Poly


class RuleKind(Enum):
    ZERO = "zero"
    COLLAPSED = "collapsed"
    NO_RULE = "no_rule"


@dataclass(frozen=True)
class RuleOutcome:
    kind: RuleKind
    query: Optional[CumulantQuery] = None


def apply_mixed_rules(query: CumulantQuery) -> RuleOutcome:
    if any(g.size > 2 for g in query.groups):
        return RuleOutcome(RuleKind.NO_RULE)

    singlets = [g for g in query.groups if g.is_singlet]
    if len(singlets) == 1 or len(singlets) >= 3:
        return RuleOutcome(RuleKind.ZERO)
    if len(singlets) == 2:
        doublet = Group.of(singlets[0].indices + singlets[1].indices)
        others = tuple(g for g in query.groups if not g.is_singlet)
        return RuleOutcome(RuleKind.COLLAPSED, CumulantQuery((doublet,) + others))
    return RuleOutcome(RuleKind.NO_RULE)


def cumulant_with_rules(query: CumulantQuery, engine: Optional[CumulantEngine] = None) -> Poly:
    """先尝试快捷规则，再交给划分公式引擎"""
    engine = engine or CumulantEngine()
    engine.check_limit(query.total_indices)
    outcome = apply_mixed_rules(query)
    if outcome.kind is RuleKind.ZERO:
        return Poly.zero()
    if outcome.kind is RuleKind.COLLAPSED:
        return engine.cumulant(outcome.query)
    return engine.cumulant(query)
