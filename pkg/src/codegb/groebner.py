"""The binomial ideal of a binary code and its reduced degrevlex Groebner basis.

The basis is computed by an FGLM-style enumeration of terms in increasing
degrevlex order.  Two words are congruent modulo the ideal exactly when
their syndromes agree, so the congruence test of each enumerated term is a
dictionary lookup keyed by a compact syndrome.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import kernels
from .code import BinaryCode, ResourceLimitError, as_vector, pack, unpack
from .term import (
    Word,
    degrevlex_cmp,
    GREATER,
    mask_key,
    psi,
    psi_inverse,
    quotient,
    standard_form,
    total_degree,
)

DEFAULT_MAX_REDUNDANCY = 16


@dataclass(frozen=True)
class Binomial:
    head: Word
    tail: Word

    def __post_init__(self):
        if degrevlex_cmp(self.head, self.tail) != GREATER:
            raise ValueError(f"head {self.head} must exceed tail {self.tail}")

    @property
    def is_square(self) -> bool:
        return not self.head.is_standard

    @property
    def degree(self) -> int:
        return total_degree(self.head)

    def __str__(self) -> str:
        return f"{self.head} - {self.tail}"


def binomial_codeword(g: Binomial) -> tuple[int, ...]:
    """The codeword ``psi(head) + psi(tail)`` carried by a binomial."""
    return tuple(a ^ b for a, b in zip(psi(g.head), psi(g.tail)))


def ideal_generators(c: BinaryCode) -> list[Binomial]:
    """``w_i - 1`` for each supplied generator row, then ``x_i^2 - 1``."""
    one = Word.one(c.n)
    gens = [Binomial(Word.from_mask(r, c.n), one) for r in c.spanning_rows.rows if r]
    gens += [Binomial(Word.var(i, c.n, 2), one) for i in range(1, c.n + 1)]
    return gens


@dataclass(frozen=True)
class DecodeResult:
    error: tuple[int, ...]
    codeword: tuple[int, ...]
    within_capability: bool


class GroebnerBasis:
    """Reduced degrevlex Groebner basis ``G_T`` of ``I(C)``.

    ``elements`` holds the non-square binomials sorted ascending by head,
    which is also the order the enumeration emits them in.  ``squares``
    holds the ``x_i^2 - 1`` that belong to the reduced basis.
    """

    def __init__(self, code: BinaryCode, squares: list[Binomial], elements: list[Binomial],
                 staircase: list[int], emission: list[Binomial] | None = None,
                 backend: str | None = None):
        self.code = code
        self.squares = squares
        self.elements = elements
        self.staircase = staircase
        self.emission = emission if emission is not None else squares + elements
        self.backend = backend
        self._heads = [g.head.mask for g in elements]
        self._tails = [g.tail.mask for g in elements]
        self.head_index = {h: i for i, h in enumerate(self._heads)}
        self._reducers: dict[str | None, object] = {}

    @classmethod
    def from_binomials(cls, code: BinaryCode, binomials: Sequence[Binomial]) -> GroebnerBasis:
        """Wrap an externally supplied binomial list (e.g. a parsed basis)."""
        squares = [g for g in binomials if g.is_square]
        elements = sorted((g for g in binomials if not g.is_square), key=lambda g: mask_key(g.head.mask, code.n))
        heads = {g.head.mask for g in elements}
        staircase, _ = _irreducible_standard_words(code.n, heads, cap=1 << code.redundancy)
        staircase.sort(key=lambda m: mask_key(m, code.n))
        return cls(code, squares, elements, staircase, list(binomials))

    def __len__(self) -> int:
        return len(self.squares) + len(self.elements)

    def reducer(self, backend: str | None = None):
        """Reduction kernel for this basis' heads and tails (cached per backend)."""
        backend = backend or self.backend
        r = self._reducers.get(backend)
        if r is None:
            r = kernels.reduce_backend(self.n, backend).Reducer(self._heads, self._tails)
            self._reducers[backend] = r
        return r

    def __iter__(self):
        yield from self.squares
        yield from self.elements

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def staircase_size(self) -> int:
        return len(self.staircase)

    @cached_property
    def canon_by_syndrome(self) -> dict[tuple[int, ...], Word]:
        out: dict[tuple[int, ...], Word] = {}
        for m in self.staircase:
            key = unpack(self.code.syndrome_mask(m), self.code.check.ncols)
            if key not in out:
                out[key] = Word.from_mask(m, self.n)
        return out

    def canonical_of_syndrome(self, syn: Sequence[int]) -> Word:
        return self.canon_by_syndrome[tuple(syn)]

    @cached_property
    def error_capability(self) -> int:
        if not self.elements:
            raise ValueError("the zero code has no error-correcting capability")
        return min(g.degree for g in self.elements) - 1

    def serialize(self) -> str:
        return "".join(f"{g}\n" for g in self)

    def __repr__(self) -> str:
        return f"<GroebnerBasis n={self.n} k={self.code.k} |G|={len(self)} |N|={self.staircase_size}>"


def compute_gb(c: BinaryCode, *, max_redundancy: int = DEFAULT_MAX_REDUNDANCY,
               force: bool = False, backend: str | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I(C)`` by degrevlex term enumeration.

    Cost is about ``n * 2**(n-k)`` queue events, so ``n - k`` is capped by
    ``max_redundancy`` unless ``force`` is set.
    """
    if c.redundancy > max_redundancy and not force:
        raise ResourceLimitError(
            f"n - k = {c.redundancy} exceeds the limit {max_redundancy} "
            f"(the staircase has 2^{c.redundancy} words)"
        )
    mod = kernels.fglm_backend(c.n, backend)
    staircase, emitted = mod.fglm(c.n, c.sigma_rows)
    squares, elements, emission = _build_binomials(c.n, emitted)
    return GroebnerBasis(c, squares, elements, list(staircase), emission, backend=mod.NAME)


def _build_binomials(n: int, emitted):
    one = Word.one(n)
    squares, elements, emission = [], [], []
    for head, tail, sq in emitted:
        if sq >= 0:
            g = Binomial(Word.var(sq + 1, n, 2), one)
            squares.append(g)
        else:
            g = Binomial(Word.from_mask(head, n), Word.from_mask(tail, n))
            elements.append(g)
        emission.append(g)
    return squares, elements, emission


def one_step_reduce(w: Word, gb: GroebnerBasis) -> Word:
    """Standard form, then one reduction by the divisor with the smallest head."""
    s = standard_form(w)
    idx = gb.reducer().first_divisor(s.mask)
    if idx < 0:
        return s
    g = gb.elements[idx]
    return quotient(s, g.head) * g.tail


def canonical_form(w: Word, gb: GroebnerBasis) -> Word:
    mask = standard_form(w).mask
    return Word.from_mask(canonical_mask(mask, gb), gb.n)


def canonical_mask(mask: int, gb: GroebnerBasis) -> int:
    return int(gb.reducer().reduce(mask))


def canonical_masks(masks, gb: GroebnerBasis, backend: str | None = None) -> list[int]:
    return [int(m) for m in gb.reducer(backend).reduce_many(masks)]


def decode(gb: GroebnerBasis, y: Sequence[int] | str) -> DecodeResult:
    """Complete decoding by canonical form.

    The returned codeword is always a nearest one.  ``within_capability``
    tells whether the error weight is at most ``t``, i.e. whether the
    correction is guaranteed unique.  The zero code corrects everything.
    """
    y = as_vector(y)
    if len(y) != gb.n:
        raise ValueError(f"received word of length {len(y)} for a code of length {gb.n}")
    e = canonical_mask(pack(y), gb)
    error = unpack(e, gb.n)
    codeword = tuple(a ^ b for a, b in zip(y, error))
    if gb.code.k == 0:
        ok = True
    else:
        ok = e.bit_count() <= gb.error_capability
    return DecodeResult(error, codeword, ok)


def error_capability(gb: GroebnerBasis) -> int:
    """``t`` from the smallest head degree among non-square basis elements."""
    return gb.error_capability


def error_capability_early(c: BinaryCode, backend: str | None = None) -> int:
    """``t`` from the first standard-head binomial of a truncated enumeration."""
    if c.k == 0:
        raise ValueError("the zero code has no error-correcting capability")
    mod = kernels.fglm_backend(c.n, backend)
    _, emitted = mod.fglm(c.n, c.sigma_rows, True)
    for head, _, sq in emitted:
        if sq < 0:
            return int(head).bit_count() - 1
    raise AssertionError("enumeration ended without a standard-head binomial")


# ------------------------------------------------------------ codeword tools

def _require_codeword(c: BinaryCode, v: Sequence[int]) -> None:
    if not c.is_codeword(v):
        raise ValueError(f"{''.join(map(str, v))} is not a codeword")


def reduce_codeword_step(w_c: Word, gb: GroebnerBasis, select: str = "progress") -> tuple[Binomial, Word]:
    """One reduction of a nonzero codeword's standard word.

    Picks ``g1`` among basis elements whose head divides ``w_c`` and has
    degree at most ``(weight - 1) // 2 + 1``.  ``select="progress"`` takes
    the one whose result is smallest, so a single step reaches ``1`` when
    some ``c_g`` equals the codeword.  ``select="smallest"`` takes the
    smallest such head, as an ordinary reduction step would.
    Returns ``g1`` and the standard form of the reduced word.
    """
    if not w_c.is_standard:
        raise ValueError(f"{w_c} is not a standard word")
    c = psi(w_c)
    _require_codeword(gb.code, c)
    w = w_c.mask
    if not w:
        raise ValueError("the zero codeword has nothing to reduce")
    bound = (w.bit_count() - 1) // 2 + 1
    cands = [i for i, h in enumerate(gb._heads) if (w & h) == h and h.bit_count() <= bound]
    if not cands:
        raise AssertionError(f"no basis head of degree <= {bound} divides {w_c}")
    if select == "smallest":
        idx = cands[0]
    elif select == "progress":
        idx = min(cands, key=lambda i: mask_key(w ^ gb._heads[i] ^ gb._tails[i], gb.n))
    else:
        raise ValueError(f"unknown selection rule {select!r}")
    w2 = w ^ gb._heads[idx] ^ gb._tails[idx]
    return gb.elements[idx], Word.from_mask(w2, gb.n)


def decompose(c: Sequence[int] | str, gb: GroebnerBasis, select: str = "smallest") -> list[Binomial]:
    """Write a codeword as a sum of basis codewords ``c_g`` with bounded heads.

    Steps use the smallest-head rule by default; see :func:`reduce_codeword_step`.
    """
    v = as_vector(c)
    if len(v) != gb.n:
        raise ValueError(f"vector of length {len(v)} for a code of length {gb.n}")
    _require_codeword(gb.code, v)
    w = psi_inverse(v)
    out = []
    while w.mask:
        g, w = reduce_codeword_step(w, gb, select)
        out.append(g)
    return out


def min_weight_codewords(gb: GroebnerBasis) -> tuple[int, set[tuple[int, ...]]]:
    """Minimum distance and every minimum-weight codeword, read off ``G_T``.

    Candidates are ``c_g`` for heads of degree ``t + 1`` and, for pairs of
    such binomials sharing a tail, the sum of their heads.
    """
    t = gb.error_capability
    sel = [(h, tl) for h, tl in zip(gb._heads, gb._tails) if h.bit_count() == t + 1]
    cands = {h ^ tl for h, tl in sel}
    by_tail: dict[int, list[int]] = {}
    for h, tl in sel:
        by_tail.setdefault(tl, []).append(h)
    for heads in by_tail.values():
        for i in range(len(heads)):
            for j in range(i + 1, len(heads)):
                cands.add(heads[i] ^ heads[j])
    d = min(m.bit_count() for m in cands)
    return d, {unpack(m, gb.n) for m in cands if m.bit_count() == d}


# ------------------------------------------------------------ self-checks

def _irreducible_standard_words(n: int, heads: set[int], cap: int) -> tuple[list[int], bool]:
    """Order ideal of standard words avoiding ``heads``; stops past ``cap``.

    A word is irreducible iff every predecessor is irreducible and the word
    is not itself a head (the minimal reducible words are the heads).
    """
    found = {0}
    level = [0]
    while level and len(found) <= cap:
        nxt = set()
        for m in level:
            for i in range(n):
                bit = 1 << i
                if m & bit:
                    continue
                cand = m | bit
                if cand in nxt or cand in heads:
                    continue
                rest = cand
                ok = True
                while rest:
                    low = rest & -rest
                    if (cand ^ low) not in found:
                        ok = False
                        break
                    rest ^= low
                if ok:
                    nxt.add(cand)
        found |= nxt
        level = list(nxt)
    return list(found), len(found) <= cap


def structural_report(gb: GroebnerBasis) -> dict[str, bool]:
    """Named structural checks of a basis; all True for a correct ``G_T``."""
    c = gb.code
    n = c.n
    report: dict[str, bool] = {}
    allg = list(gb)
    report["head_exceeds_tail"] = all(degrevlex_cmp(g.head, g.tail) == GREATER for g in allg)
    report["sides_congruent"] = all(
        c.sigma(pack(psi(g.head))) == c.sigma(pack(psi(g.tail))) for g in allg
    )
    report["squares_well_formed"] = all(
        total_degree(g.head) == 2 and len([e for e in g.head.exponents if e]) == 1 and not any(g.tail.exponents)
        for g in gb.squares
    )

    heads = gb._heads
    tails = gb._tails
    square_vars = {g.head.exponents.index(2) for g in gb.squares}
    reduced = len(set(heads)) == len(heads) and len(square_vars) == len(gb.squares)
    if reduced and heads:
        if n <= 64:
            h_arr = np.array(heads, dtype=np.uint64)
            t_arr = np.array(tails, dtype=np.uint64)
            for i, h in enumerate(heads):
                hu = np.uint64(h)
                div_heads = (h_arr & hu) == hu
                div_heads[i] = False
                if div_heads.any() or ((t_arr & hu) == hu).any():
                    reduced = False
                    break
        else:
            for i, h in enumerate(heads):
                if any((o & h) == h for j, o in enumerate(heads) if j != i) or any((t & h) == h for t in tails):
                    reduced = False
                    break
    # a degree-1 head x_j divides x_j^2
    if reduced and any(heads[i] == (1 << j) for i in range(len(heads)) for j in square_vars):
        reduced = False
    report["reduced"] = reduced

    size = 1 << c.redundancy
    stair, within = _irreducible_standard_words(n, set(heads), cap=size)
    count = len(stair)
    # x_i^2 stays irreducible when x_i is and no square head covers it
    count += sum(1 for m in stair if m.bit_count() == 1 and (m.bit_length() - 1) not in square_vars)
    report["staircase_size"] = within and count == size
    report["generators_reduce_to_one"] = all(
        canonical_mask(g.head.mask, gb) == 0 for g in ideal_generators(c) if g.head.is_standard
    )
    return report


def verify_reduced_gb(gb: GroebnerBasis) -> bool:
    return all(structural_report(gb).values())
