"""Words of the free commutative monoid on x_1..x_n and the degrevlex order.

A :class:`Word` keeps an explicit exponent tuple.  Standard words (every
exponent 0 or 1) also map to an ``n``-bit mask with bit ``i`` standing for
``x_{i+1}``; the bitmask view is what the kernels operate on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_EXPONENT = 2

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True, order=False)
class Word:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        for e in exps:
            if e < 0 or e > MAX_EXPONENT:
                raise ValueError(f"exponent {e} outside [0, {MAX_EXPONENT}]")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> Word:
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> Word:
        """The word ``x_i**power`` (``i`` is 1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        exps = [0] * n
        exps[i - 1] = power
        return cls(tuple(exps))

    @classmethod
    def from_mask(cls, mask: int, n: int) -> Word:
        if mask >> n:
            raise ValueError(f"mask {mask:#x} has bits beyond n={n}")
        # entries are 0/1 by construction, so skip the exponent check
        w = object.__new__(cls)
        object.__setattr__(w, "exponents", tuple((mask >> i) & 1 for i in range(n)))
        return w

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def is_standard(self) -> bool:
        return MAX_EXPONENT not in self.exponents

    @property
    def mask(self) -> int:
        """Packed bit view; only defined for standard words."""
        if MAX_EXPONENT in self.exponents:
            raise ValueError(f"{self} is not standard")
        return int("".join(map(str, reversed(self.exponents))) or "0", 2)

    def __mul__(self, other: Word) -> Word:
        return mul(self, other)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, n={self.n})"

    def __lt__(self, other: Word) -> bool:
        return degrevlex_cmp(self, other) == LESS

    def __le__(self, other: Word) -> bool:
        return degrevlex_cmp(self, other) != GREATER

    def __gt__(self, other: Word) -> bool:
        return degrevlex_cmp(self, other) == GREATER

    def __ge__(self, other: Word) -> bool:
        return degrevlex_cmp(self, other) != LESS


def _check_same_n(u: Word, w: Word) -> None:
    if u.n != w.n:
        raise ValueError(f"words live in different monoids (n={u.n} vs n={w.n})")


def psi(w: Word) -> tuple[int, ...]:
    """Exponents reduced mod 2, as a binary vector."""
    return tuple(e & 1 for e in w.exponents)


def psi_inverse(v: Sequence[int]) -> Word:
    """The standard representation of the binary vector ``v``."""
    return Word(tuple(int(b) & 1 for b in v))


def standard_form(w: Word) -> Word:
    return Word(tuple(e & 1 for e in w.exponents))


def total_degree(w: Word) -> int:
    return sum(w.exponents)


def support(w: Word) -> frozenset[int]:
    """1-based indices of the variables occurring in ``w``."""
    return frozenset(i + 1 for i, e in enumerate(w.exponents) if e)


def mul(u: Word, w: Word) -> Word:
    _check_same_n(u, w)
    return Word(tuple(a + b for a, b in zip(u.exponents, w.exponents)))


def divides(u: Word, w: Word) -> bool:
    _check_same_n(u, w)
    return all(a <= b for a, b in zip(u.exponents, w.exponents))


def quotient(w: Word, u: Word) -> Word:
    """``w / u``; ``u`` must divide ``w``."""
    if not divides(u, w):
        raise ValueError(f"{u} does not divide {w}")
    return Word(tuple(b - a for a, b in zip(u.exponents, w.exponents)))


def degrevlex_cmp(u: Word, w: Word) -> int:
    """Compare under degrevlex with x_1 < x_2 < ... < x_n.

    Total degree decides first.  On a tie, ``u > w`` iff the first nonzero
    entry of ``exponents(u) - exponents(w)`` (lowest variable index) is
    negative.
    """
    _check_same_n(u, w)
    du, dw = total_degree(u), total_degree(w)
    if du != dw:
        return LESS if du < dw else GREATER
    for a, b in zip(u.exponents, w.exponents):
        if a != b:
            return GREATER if a < b else LESS
    return EQUAL


def degrevlex_key(w: Word) -> tuple[int, tuple[int, ...]]:
    """Sort key realising :func:`degrevlex_cmp`."""
    return total_degree(w), tuple(-e for e in w.exponents)


def mask_key(mask: int, n: int) -> tuple[int, int]:
    """Degrevlex sort key for a standard word given as a bitmask.

    Ties are broken by the bit-reversed complement: the lowest differing
    bit decides, and the word that has it set is the smaller one.
    """
    full = (1 << n) - 1
    comp = full & ~mask
    rev = int(format(comp, f"0{n}b")[::-1], 2) if n else 0
    return mask.bit_count(), rev


# ---------------------------------------------------------------- text format

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def format_word(w: Word) -> str:
    parts = []
    for i, e in enumerate(w.exponents):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def parse_word(text: str, n: int) -> Word:
    """Parse ``1``, ``x2*x3`` or ``x1^2`` style text into a word of length ``n``."""
    text = text.strip()
    if text == "1":
        return Word.one(n)
    exps = [0] * n
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if m is None:
            raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        exps[i - 1] += int(m.group(2) or 1)
    return Word(tuple(exps))


def words_of(masks: Iterable[int], n: int) -> list[Word]:
    return [Word.from_mask(m, n) for m in masks]
