"""Binary linear codes over GF(2) with bit-packed rows.

Row ``r`` of a :class:`BinaryMatrix` is an int whose bit ``j`` holds entry
``(r, j)``; column 0 is the leftmost character in the text format.  Binary
vectors in the public API are tuples of 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .term import Word


class ResourceLimitError(RuntimeError):
    """A computation would exceed its configured size guard."""


@dataclass(frozen=True)
class BinaryMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        for r in rows:
            if r < 0 or r >> self.ncols:
                raise ValueError(f"row {r:#x} does not fit in {self.ncols} columns")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str], ncols: int | None = None) -> BinaryMatrix:
        vecs = [as_vector(r) for r in rows]
        if ncols is None:
            if not vecs:
                raise ValueError("ncols is required for an empty row list")
            ncols = len(vecs[0])
        for v in vecs:
            if len(v) != ncols:
                raise ValueError(f"row of length {len(v)} in a matrix with {ncols} columns")
        return cls(tuple(pack(v) for v in vecs), ncols)

    @classmethod
    def from_array(cls, a) -> BinaryMatrix:
        a = np.asarray(a, dtype=np.uint8) % 2
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_rows(a.tolist(), a.shape[1])

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> tuple[int, ...]:
        return unpack(self.rows[i], self.ncols)

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.uint8)
        for i, r in enumerate(self.rows):
            out[i] = unpack(r, self.ncols)
        return out

    def to_strings(self) -> list[str]:
        return [vector_str(self.row(i)) for i in range(self.nrows)]

    def transpose(self) -> BinaryMatrix:
        cols = []
        for j in range(self.ncols):
            c = 0
            for i, r in enumerate(self.rows):
                if (r >> j) & 1:
                    c |= 1 << i
            cols.append(c)
        return BinaryMatrix(tuple(cols), self.nrows)

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


# ------------------------------------------------------------- vector helpers

def as_vector(v: Sequence[int] | str) -> tuple[int, ...]:
    if isinstance(v, str):
        s = "".join(v.split())
        if set(s) - {"0", "1"}:
            raise ValueError(f"not a binary string: {v!r}")
        return tuple(int(ch) for ch in s)
    out = tuple(int(b) for b in v)
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"not a binary vector: {v!r}")
    return out


def pack(v: Sequence[int]) -> int:
    m = 0
    for i, b in enumerate(v):
        if b:
            m |= 1 << i
    return m


def unpack(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def vector_str(v: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in v)


def weight(v: Sequence[int] | str) -> int:
    return sum(as_vector(v))


# --------------------------------------------------------------- elimination

def rref(m: BinaryMatrix) -> tuple[BinaryMatrix, int, list[int]]:
    """Reduced row-echelon form over GF(2); zero rows are dropped."""
    work = list(m.rows)
    pivots: list[int] = []
    r = 0
    for col in range(m.ncols):
        bit = 1 << col
        piv = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return BinaryMatrix(tuple(work[:r]), m.ncols), r, pivots


def rank(m: BinaryMatrix) -> int:
    return rref(m)[1]


def kernel_basis(m: BinaryMatrix) -> BinaryMatrix:
    """Rows spanning ``{v : m v^T = 0}``."""
    red, _, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(red.rows, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return BinaryMatrix(tuple(basis), m.ncols)


class IncrementalSpan:
    """Online GF(2) elimination: tells whether a new vector is independent."""

    def __init__(self):
        self._pivots: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, v: int) -> int:
        while v:
            low = v & -v
            row = self._pivots.get(low)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        self._pivots[v & -v] = v
        return True


# --------------------------------------------------------------------- codes

@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code of length ``n`` and dimension ``k``.

    ``gen_rows`` is the RREF row basis.  ``check`` is an ``n x s`` matrix
    whose left nullspace is the code; syndromes are ``v @ check``.
    ``spanning_rows`` keeps the generator rows exactly as supplied.
    """

    n: int
    k: int
    gen_rows: BinaryMatrix
    check: BinaryMatrix
    spanning_rows: BinaryMatrix
    # compact syndrome map: sigma_rows[i] is the (n-k)-bit syndrome of e_i
    sigma_rows: tuple[int, ...] = field(repr=False, compare=False, default=())

    @classmethod
    def from_generator(cls, rows: BinaryMatrix) -> BinaryCode:
        if rows.ncols < 1:
            raise ValueError("a code needs length n >= 1")
        red, k, _ = rref(rows)
        kern = kernel_basis(red)
        check = kern.transpose()
        return cls(rows.ncols, k, red, check, rows, _sigma_rows(kern, rows.ncols))

    @classmethod
    def from_check(cls, h: BinaryMatrix) -> BinaryCode:
        if h.nrows < 1:
            raise ValueError("a check matrix needs at least one row")
        n = h.nrows
        gens = kernel_basis(h.transpose())
        red, k, _ = rref(gens)
        kern = kernel_basis(red)
        return cls(n, k, red, h, red, _sigma_rows(kern, n))

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def syndrome(self, v: Sequence[int] | str) -> tuple[int, ...]:
        v = as_vector(v)
        if len(v) != self.n:
            raise ValueError(f"vector of length {len(v)} for a code of length {self.n}")
        return unpack(self.syndrome_mask(pack(v)), self.check.ncols)

    def syndrome_mask(self, mask: int) -> int:
        s = 0
        rows = self.check.rows
        while mask:
            low = mask & -mask
            s ^= rows[low.bit_length() - 1]
            mask ^= low
        return s

    def sigma(self, mask: int) -> int:
        """Compact syndrome used as the congruence identifier."""
        s = 0
        rows = self.sigma_rows
        while mask:
            low = mask & -mask
            s ^= rows[low.bit_length() - 1]
            mask ^= low
        return s

    def is_codeword(self, v: Sequence[int] | str) -> bool:
        return not any(self.syndrome(v))

    def codeword_masks(self) -> list[int]:
        """All ``2**k`` codewords as masks, Gray-code order from 0."""
        out = [0]
        cur = 0
        rows = self.gen_rows.rows
        for i in range(1, 1 << self.k):
            cur ^= rows[(i & -i).bit_length() - 1]
            out.append(cur)
        return out

    def codewords(self) -> list[tuple[int, ...]]:
        return [unpack(m, self.n) for m in self.codeword_masks()]


def _sigma_rows(kern: BinaryMatrix, n: int) -> tuple[int, ...]:
    rows = []
    for i in range(n):
        s = 0
        for j, r in enumerate(kern.rows):
            if (r >> i) & 1:
                s |= 1 << j
        rows.append(s)
    return tuple(rows)


def syndrome(c: BinaryCode, v: Sequence[int] | str) -> tuple[int, ...]:
    return c.syndrome(v)


# ------------------------------------------------------------------- oracles
# Brute-force references.  They share nothing with the Groebner machinery
# beyond the code's check matrix.

def _all_words(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.uint64)


def _degrevlex_order(words: np.ndarray, n: int) -> np.ndarray:
    """Indices sorting standard words ascending: weight, then -e_1, -e_2, ..."""
    bits = [((words >> np.uint64(i)) & np.uint64(1)).astype(np.int8) for i in range(n)]
    wt = np.sum(bits, axis=0) if bits else np.zeros(len(words), dtype=np.int64)
    # lexsort: last key is primary
    keys = [-b for b in reversed(bits)] + [wt]
    return np.lexsort(keys)


def _syndromes(c: BinaryCode, words: np.ndarray) -> np.ndarray:
    dtype = np.uint64 if c.check.ncols <= 64 else object
    syn = np.zeros(len(words), dtype=dtype)
    for i, r in enumerate(c.check.rows):
        sel = ((words >> np.uint64(i)) & np.uint64(1)).astype(bool)
        syn[sel] ^= dtype(r) if dtype is np.uint64 else r
    return syn


def oracle_coset_leaders(c: BinaryCode, max_n: int = 20) -> dict[tuple[int, ...], Word]:
    """Degrevlex-minimal standard word of every coset, by exhaustion."""
    if c.n > max_n:
        raise ResourceLimitError(f"exhaustive coset enumeration needs n <= {max_n}, got {c.n}")
    words = _all_words(c.n)
    syn = _syndromes(c, words)
    order = _degrevlex_order(words, c.n)
    leaders: dict[tuple[int, ...], Word] = {}
    for idx in order:
        s = int(syn[idx])
        key = unpack(s, c.check.ncols)
        if key not in leaders:
            leaders[key] = Word.from_mask(int(words[idx]), c.n)
    return leaders


def _codeword_array(c: BinaryCode, max_k: int) -> np.ndarray:
    if c.n > 64:
        raise ResourceLimitError(f"exhaustive codeword enumeration needs n <= 64, got {c.n}")
    if c.k > max_k:
        raise ResourceLimitError(f"exhaustive codeword enumeration needs k <= {max_k}, got {c.k}")
    return np.array(c.codeword_masks(), dtype=np.uint64)


def oracle_min_distance(c: BinaryCode, max_k: int = 20) -> int:
    if c.k == 0:
        raise ValueError("the zero code has no minimum distance")
    cw = _codeword_array(c, max_k)
    return int(np.bitwise_count(cw[cw != 0]).min())


def oracle_min_weight_codewords(c: BinaryCode, max_k: int = 20) -> tuple[int, set[tuple[int, ...]]]:
    if c.k == 0:
        raise ValueError("the zero code has no minimum distance")
    cw = _codeword_array(c, max_k)
    cw = cw[cw != 0]
    wt = np.bitwise_count(cw)
    d = int(wt.min())
    return d, {unpack(int(m), c.n) for m in cw[wt == d]}


def oracle_decode(c: BinaryCode, y: Sequence[int] | str, max_k: int = 20) -> tuple[tuple[int, ...], int]:
    """Nearest codeword to ``y``; ties go to the degrevlex-minimal error word."""
    y = as_vector(y)
    if len(y) != c.n:
        raise ValueError(f"vector of length {len(y)} for a code of length {c.n}")
    cw = _codeword_array(c, max_k)
    err = cw ^ np.uint64(pack(y))
    dist = np.bitwise_count(err)
    best = int(dist.min())
    ties = err[dist == best]
    lead = ties[_degrevlex_order(ties, c.n)[0]]
    return unpack(int(lead) ^ pack(y), c.n), best


def degrevlex_rank_table(n: int) -> np.ndarray:
    """``rank[m]`` = position of standard word ``m`` in ascending degrevlex."""
    words = _all_words(n)
    rank = np.empty(len(words), dtype=np.int64)
    rank[_degrevlex_order(words, n)] = np.arange(len(words))
    return rank


def oracle_decode_table(c: BinaryCode, max_n: int = 16) -> tuple[np.ndarray, np.ndarray]:
    """Nearest codeword and distance for every received word, by exhaustion.

    Entry ``m`` of each array belongs to the received word with mask ``m``.
    Ties go to the degrevlex-minimal error word, as in :func:`oracle_decode`.
    """
    if c.n > max_n:
        raise ResourceLimitError(f"exhaustive decoding table needs n <= {max_n}, got {c.n}")
    rank = degrevlex_rank_table(c.n)
    cw = _codeword_array(c, c.n)
    ys = _all_words(c.n)
    best_rank = np.full(len(ys), np.iinfo(np.int64).max, dtype=np.int64)
    best_cw = np.zeros(len(ys), dtype=np.uint64)
    for word in cw:
        r = rank[(ys ^ word).astype(np.int64)]
        better = r < best_rank
        best_rank[better] = r[better]
        best_cw[better] = word
    return best_cw, np.bitwise_count(best_cw ^ ys).astype(np.int64)
