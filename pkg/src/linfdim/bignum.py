"""Integers too large to write down.

Values stay exact Python ints while their decimal length is below
``DIGIT_LIMIT``.  Beyond that they become :class:`Tower` estimates
N = 10^10^...^val (``level`` exponentiations), carried with mpmath floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Union

import mpmath

mpmath.mp.dps = 30
DIGIT_LIMIT = 100_000
_CAP = mpmath.mpf(10) ** 100


@total_ordering
@dataclass(frozen=True)
class Tower:
    level: int
    val: mpmath.mpf

    @staticmethod
    def make(level: int, val) -> "Tower":
        val = mpmath.mpf(val)
        while val > _CAP:
            level += 1
            val = mpmath.log10(val)
        while level > 0 and val < 100:
            level -= 1
            val = mpmath.power(10, val)
        return Tower(level, val)

    def log10(self) -> "Tower":
        if self.level == 0:
            return Tower.make(0, mpmath.log10(self.val))
        return Tower.make(self.level - 1, self.val)

    def exp10(self) -> "Tower":
        return Tower.make(self.level + 1, self.val)

    def __lt__(self, other) -> bool:
        o = to_tower(other)
        return (self.level, self.val) < (o.level, o.val)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Tower, int)):
            return NotImplemented
        o = to_tower(other)
        return self.level == o.level and self.val == o.val

    def __hash__(self):
        return hash((self.level, str(self.val)))

    def __str__(self) -> str:
        s = mpmath.nstr(self.val, 6)
        for _ in range(self.level):
            s = f"10^({s})"
        return "~" + s


Num = Union[int, Tower]


def to_tower(x: Num) -> Tower:
    if isinstance(x, Tower):
        return x
    if x.bit_length() < 300:
        return Tower.make(0, x)
    # log10 of a big int without float overflow
    return Tower.make(1, mpmath.log10(mpmath.mpf(x)))


def _digits(x: int) -> float:
    return x.bit_length() * math.log10(2)


def add(a: Num, b: Num) -> Num:
    if isinstance(a, int) and isinstance(b, int):
        return a + b
    ta, tb = to_tower(a), to_tower(b)
    hi, lo = (ta, tb) if ta >= tb else (tb, ta)
    if hi.level == 0:
        return Tower.make(0, hi.val + lo.val)
    if lo.level == 0 and lo.val <= 0:
        return Tower.make(hi.level, hi.val) if lo.val == 0 else hi
    lh, ll = hi.log10(), lo.log10()
    if lh.level == 0 and ll.level == 0 and lh.val - ll.val < 200:
        return Tower.make(1, lh.val + mpmath.log10(1 + mpmath.power(10, ll.val - lh.val)))
    return hi


def mul(a: Num, b: Num) -> Num:
    if isinstance(a, int) and isinstance(b, int):
        if _digits(a) + _digits(b) < DIGIT_LIMIT:
            return a * b
    if a == 0 or b == 0:
        return 0
    return to_tower(add(to_tower(a).log10(), to_tower(b).log10())).exp10()


def power(a: Num, b: Num) -> Num:
    if isinstance(a, int) and isinstance(b, int):
        if a in (0, 1):
            return a
        if b * _digits(a) < DIGIT_LIMIT:
            return a ** b
    return to_tower(mul(b, to_tower(a).log10())).exp10()


def maximum(a: Num, b: Num) -> Num:
    return a if to_tower(a) >= to_tower(b) else b


def render(x: Num) -> str:
    return str(x)
