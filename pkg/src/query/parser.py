#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
查询语言解析

语法（空白不敏感）:
    query   := ("mv" | "k") arglist
    arglist := arg+
    arg     := INT | "(" INT ("," INT)* ")"

裸整数是单元，括号列表是一个分组；"mv" 只接受裸整数，整个列表视为一个索引多重集。
与 Mathematica 写法的对应：MV[2, 5, 2, 5, 2, 8] -> "mv 2 5 2 5 2 8"，
K[3, {1,3}, {1,2,3}] -> "k 3 (1,3) (1,2,3)"（花括号换成圆括号，便于 shell 引用）。
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Iterator, List, NamedTuple, Optional, Tuple

from src.config.defaults import DEFAULT_OUTPUT_STYLE
from src.core.cumulants import CumulantQuery, Group
from src.core.moments import IndexList
from src.errors import QueryParseError

if TYPE_CHECKING:
    from src.numeric.montecarlo import McConfig


class QueryKind(Enum):
    MOMENT = "mv"
    CUMULANT = "k"


@dataclass(frozen=True)
class QueryOptions:
    standardize: bool = False
    output: str = DEFAULT_OUTPUT_STYLE
    count_only: bool = False
    eval_cov: Optional[str] = None
    mc: Optional["McConfig"] = None


@dataclass(frozen=True)
class Query:
    kind: QueryKind
    groups: Tuple[Group, ...]
    options: QueryOptions = field(default_factory=QueryOptions)

    def index_list(self) -> IndexList:
        return IndexList.of(i for g in self.groups for i in g.indices)

    def cumulant_query(self) -> CumulantQuery:
        """矩查询视为单一分组的累积量（一个参数的累积量就是它的均值）"""
        return CumulantQuery(self.groups)


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


_TOKEN_RE = re.compile(
    r"(?P<int>-?\d+)|(?P<word>[A-Za-z]+)|(?P<open>[(\[{])|(?P<close>[)\]}])|(?P<comma>,)|(?P<space>\s+)|(?P<bad>.)"
)


def _tokenize(text: str) -> Iterator[_Token]:
    for match in _TOKEN_RE.finditer(text):
        kind = match.lastgroup
        if kind == "space":
            continue
        if kind == "bad":
            raise QueryParseError(f"无法识别的字符 '{match.group()}'", match.start(), text)
        if kind in ("open", "close") and match.group() not in "()":
            raise QueryParseError("分组请使用圆括号 ( )", match.start(), text)
        yield _Token(kind, match.group(), match.start())


def _index(token: _Token, text: str) -> int:
    value = int(token.text)
    if value < 1:
        raise QueryParseError(f"索引必须为正整数，实际 {token.text}", token.position, text)
    return value


def parse_query(text: str) -> Query:
    tokens = list(_tokenize(text))
    if not tokens:
        raise QueryParseError("查询为空", 0, text)

    head = tokens[0]
    if head.kind != "word" or head.text.lower() not in ("mv", "k"):
        raise QueryParseError("查询必须以 mv 或 k 开头", head.position, text)
    kind = QueryKind(head.text.lower())

    groups: List[Group] = []
    i = 1
    while i < len(tokens):
        token = tokens[i]
        if token.kind == "int":
            groups.append(Group.of(_index(token, text)))
            i += 1
        elif token.kind == "open":
            if kind is QueryKind.MOMENT:
                raise QueryParseError("mv 只接受裸整数，不接受分组", token.position, text)
            members, i = _parse_group(tokens, i, text)
            groups.append(Group.of(members))
        elif token.kind == "close":
            raise QueryParseError("多余的右括号", token.position, text)
        else:
            raise QueryParseError(f"意外的 '{token.text}'", token.position, text)

    if not groups:
        raise QueryParseError("参数列表为空", len(text), text)

    if kind is QueryKind.MOMENT:
        merged = Group.of(i for g in groups for i in g.indices)
        return Query(kind, (merged,))
    return Query(kind, tuple(groups))


def _parse_group(tokens: List[_Token], start: int, text: str) -> Tuple[List[int], int]:
    """从 "(" 处开始解析一个分组，返回 (索引列表, 下一个 token 位置)"""
    opening = tokens[start]
    members: List[int] = []
    i = start + 1
    expect_int = True
    while i < len(tokens):
        token = tokens[i]
        if expect_int:
            if token.kind != "int":
                if token.kind == "close" and not members:
                    raise QueryParseError("分组不能为空", token.position, text)
                raise QueryParseError("分组内应为正整数", token.position, text)
            members.append(_index(token, text))
            expect_int = False
        elif token.kind == "comma":
            expect_int = True
        elif token.kind == "close":
            return members, i + 1
        elif token.kind == "open":
            raise QueryParseError("分组不能嵌套", token.position, text)
        else:
            raise QueryParseError("分组内的索引之间需要逗号", token.position, text)
        i += 1
    raise QueryParseError("括号未闭合", opening.position, text)


def render_query(query: Query) -> str:
    """查询的规范文本，parse_query(render_query(q)) == q（选项除外）"""
    if query.kind is QueryKind.MOMENT:
        return "mv " + " ".join(str(i) for i in query.index_list().indices)
    parts = []
    for group in query.groups:
        if group.is_singlet:
            parts.append(str(group.indices[0]))
        else:
            parts.append("(" + ",".join(str(i) for i in group.indices) + ")")
    return "k " + " ".join(parts)
