# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled kernels; same contract as codegb._pykernels.

Terms are enumerated one total degree at a time.  Every candidate of degree
d+1 is a product x_i * w with w a staircase word of degree d, so a level is
complete once the previous one is processed; sorting a level by key gives
the same processing order as the priority queue of the Python version.
"""

from libc.stdint cimport uint64_t, int64_t
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.unordered_map cimport unordered_map
from libcpp.algorithm cimport sort

NAME = "cython"
MAX_FGLM_N = 31
MAX_REDUCE_N = 64


def fglm(int n, sigma_rows, bint early=False):
    if n > MAX_FGLM_N:
        raise ValueError(f"compiled fglm supports n <= {MAX_FGLM_N}")
    cdef vector[uint64_t] rows
    cdef vector[uint64_t] unit
    cdef int i
    for i in range(n):
        rows.push_back(<uint64_t>int(sigma_rows[i]))
        unit.push_back((<uint64_t>1) << (2 * (n - 1 - i)))
    cdef uint64_t one_key = 0
    for i in range(n):
        one_key += 2 * unit[i]

    cdef unordered_map[uint64_t, uint64_t] canon
    cdef vector[uint64_t] lvl_mask, lvl_key, lvl_sig
    cdef vector[uint64_t] nxt_mask, nxt_key, nxt_sig
    cdef vector[pair[uint64_t, uint64_t]] order
    cdef vector[uint64_t] c_mask, c_sig
    cdef vector[int64_t] c_sq
    cdef size_t a, b, j, idx
    cdef uint64_t mask, key, sig, bit
    cdef int deg = 0, count, need
    cdef int64_t sq

    staircase = [0]
    emitted = []
    canon[0] = 0
    lvl_mask.push_back(0)
    lvl_key.push_back(one_key)
    lvl_sig.push_back(0)

    while lvl_mask.size() > 0:
        order.clear()
        c_mask.clear()
        c_sig.clear()
        c_sq.clear()
        for j in range(lvl_mask.size()):
            mask = lvl_mask[j]
            key = lvl_key[j]
            sig = lvl_sig[j]
            for i in range(n):
                bit = (<uint64_t>1) << i
                if mask & bit:
                    if mask == bit:
                        order.push_back(pair[uint64_t, uint64_t](key - unit[i], c_mask.size()))
                        c_mask.push_back(bit)
                        c_sig.push_back(0)
                        c_sq.push_back(i)
                else:
                    order.push_back(pair[uint64_t, uint64_t](key - unit[i], c_mask.size()))
                    c_mask.push_back(mask | bit)
                    c_sig.push_back(sig ^ rows[i])
                    c_sq.push_back(-1)
        sort(order.begin(), order.end())

        nxt_mask.clear()
        nxt_key.clear()
        nxt_sig.clear()
        a = 0
        while a < order.size():
            b = a + 1
            while b < order.size() and order[b].first == order[a].first:
                b += 1
            count = <int>(b - a)
            idx = order[a].second
            sq = c_sq[idx]
            need = 1 if sq >= 0 else deg + 1
            if count == need:
                mask = c_mask[idx]
                if sq >= 0:
                    emitted.append((mask, 0, sq))
                else:
                    sig = c_sig[idx]
                    if canon.count(sig):
                        emitted.append((mask, canon[sig], -1))
                        if early:
                            return staircase, emitted
                    else:
                        canon[sig] = mask
                        staircase.append(mask)
                        nxt_mask.push_back(mask)
                        nxt_key.push_back(order[a].first)
                        nxt_sig.push_back(sig)
            a = b
        lvl_mask.swap(nxt_mask)
        lvl_key.swap(nxt_key)
        lvl_sig.swap(nxt_sig)
        deg += 1
    return staircase, emitted


cdef inline uint64_t _reduce(uint64_t w, vector[uint64_t]& heads, vector[uint64_t]& tails) nogil:
    cdef size_t j
    cdef size_t m = heads.size()
    cdef bint moved = True
    while moved:
        moved = False
        for j in range(m):
            if (w & heads[j]) == heads[j]:
                w ^= heads[j] ^ tails[j]
                moved = True
                break
    return w


cdef class Reducer:
    cdef vector[uint64_t] heads
    cdef vector[uint64_t] tails

    def __init__(self, heads, tails):
        for h in heads:
            self.heads.push_back(<uint64_t>int(h))
        for t in tails:
            self.tails.push_back(<uint64_t>int(t))

    def first_divisor(self, w):
        cdef uint64_t x = <uint64_t>int(w)
        cdef size_t j
        for j in range(self.heads.size()):
            if (x & self.heads[j]) == self.heads[j]:
                return <Py_ssize_t>j
        return -1

    def reduce(self, w):
        return _reduce(<uint64_t>int(w), self.heads, self.tails)

    def reduce_many(self, words):
        cdef vector[uint64_t] wv
        cdef size_t j
        for w in words:
            wv.push_back(<uint64_t>int(w))
        with nogil:
            for j in range(wv.size()):
                wv[j] = _reduce(wv[j], self.heads, self.tails)
        return [wv[j] for j in range(wv.size())]
