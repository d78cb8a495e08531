#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
协方差符号上的稀疏精确多项式

- CovSymbol: 无序索引对 V_{i,j}（规范化为 lo <= hi）
- Monomial: 排序后的 CovSymbol 元组，空元组表示常数 1
- Poly: Monomial -> 非零整数系数（Python int，任意精度）

Poly 是不可变值，所有运算返回新对象。
"""

from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Tuple

from src.errors import IndexMappingError, InvalidQueryError


class CovSymbol(NamedTuple):
    """协方差符号 V_{lo,hi}"""

    lo: int
    hi: int

    @classmethod
    def of(cls, i: int, j: int) -> "CovSymbol":
        if i < 1 or j < 1:
            raise InvalidQueryError(f"索引必须为正整数: ({i}, {j})")
        return cls(i, j) if i <= j else cls(j, i)

    @property
    def is_diagonal(self) -> bool:
        return self.lo == self.hi


Monomial = Tuple[CovSymbol, ...]

ONE: Monomial = ()


def monomial(*symbols: Tuple[int, int]) -> Monomial:
    """由任意顺序的符号（或 (i, j) 二元组）构造规范单项式"""
    return tuple(sorted(CovSymbol.of(*s) for s in symbols))


def display_key(mono: Monomial) -> Tuple[int, Monomial]:
    """显示顺序：先按总次数，再按因子字典序"""
    return (len(mono), mono)


def _accumulate(target: Dict[Monomial, int], mono: Monomial, coeff: int) -> None:
    total = target.get(mono, 0) + coeff
    if total:
        target[mono] = total
    else:
        target.pop(mono, None)


class Poly:
    """不可变稀疏多项式"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] = None):
        cleaned: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                _accumulate(cleaned, monomial(*mono), int(coeff))
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, int]) -> "Poly":
        """直接接管已规范化且无零系数的字典（内部使用）"""
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> "Poly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "Poly":
        return cls._wrap({ONE: 1})

    @classmethod
    def constant(cls, value: int) -> "Poly":
        return cls._wrap({ONE: int(value)} if value else {})

    @classmethod
    def var(cls, i: int, j: int) -> "Poly":
        return cls._wrap({(CovSymbol.of(i, j),): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Monomial, int]]) -> "Poly":
        """从 (单项式, 系数) 序列累加构造，同类项合并"""
        collected: Dict[Monomial, int] = {}
        for mono, coeff in terms:
            _accumulate(collected, monomial(*mono), int(coeff))
        return cls._wrap(collected)

    # ------------------------------------------------------------
    # 只读访问
    # ------------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def coefficient(self, mono: Iterable[Tuple[int, int]]) -> int:
        return self._terms.get(monomial(*mono), 0)

    def coefficients(self) -> List[int]:
        """按显示顺序的系数，重复值保留"""
        return [coeff for _, coeff in self.sorted_terms()]

    def sorted_terms(self) -> list:
        """按显示顺序排列的 (单项式, 系数) 列表"""
        return sorted(self._terms.items(), key=lambda item: display_key(item[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({ONE: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "Poly(0)"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = "*".join(f"V[{s.lo},{s.hi}]" for s in mono)
            parts.append(f"{coeff}*{factors}" if factors else str(coeff))
        return f"Poly({' + '.join(parts)})"

    # ------------------------------------------------------------
    # 运算符
    # ------------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return poly_scale(self, -1)

    def __sub__(self, other: "Poly") -> "Poly":
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_add(self, poly_scale(other, -1))

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return poly_scale(self, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__


def poly_add(a: Poly, b: Poly) -> Poly:
    """逐项相加，抵消为零的项被移除"""
    if len(a._terms) < len(b._terms):
        a, b = b, a
    result = dict(a._terms)
    for mono, coeff in b._terms.items():
        _accumulate(result, mono, coeff)
    return Poly._wrap(result)


def poly_mul(a: Poly, b: Poly) -> Poly:
    """分配律展开后规范合并"""
    result: Dict[Monomial, int] = {}
    for mono_a, coeff_a in a._terms.items():
        for mono_b, coeff_b in b._terms.items():
            if not mono_a:
                mono = mono_b
            elif not mono_b:
                mono = mono_a
            else:
                mono = tuple(sorted(mono_a + mono_b))
            _accumulate(result, mono, coeff_a * coeff_b)
    return Poly._wrap(result)


def poly_scale(a: Poly, c: int) -> Poly:
    if not c:
        return Poly.zero()
    return Poly._wrap({mono: coeff * c for mono, coeff in a._terms.items()})


def substitute_diagonal_one(a: Poly) -> Poly:
    """把所有 V_{i,i} 替换为 1（标准化变量），同类项重新合并"""
    result: Dict[Monomial, int] = {}
    for mono, coeff in a._terms.items():
        reduced = tuple(s for s in mono if not s.is_diagonal)
        _accumulate(result, reduced, coeff)
    return Poly._wrap(result)


standardize = substitute_diagonal_one


def term_count(a: Poly) -> int:
    """规范合并后非零系数单项式的个数"""
    return len(a._terms)


def relabel(a: Poly, mapping: Mapping[int, int]) -> Poly:
    """
    按索引映射改写每个符号并重新合并

    映射中缺失的索引抛出 IndexMappingError。
    """
    result: Dict[Monomial, int] = {}
    for mono, coeff in a._terms.items():
        symbols = []
        for symbol in mono:
            try:
                i, j = mapping[symbol.lo], mapping[symbol.hi]
            except KeyError as e:
                raise IndexMappingError(f"索引 {e.args[0]} 没有映射目标") from None
            symbols.append(CovSymbol.of(i, j))
        _accumulate(result, monomial(*symbols), coeff)
    return Poly._wrap(result)
