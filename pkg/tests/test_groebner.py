import random

import pytest
from hypothesis import given, settings, strategies as st

from codegb.code import BinaryCode, BinaryMatrix, oracle_coset_leaders, oracle_decode_table, oracle_min_distance, unpack
from codegb.groebner import (
    Binomial,
    GroebnerBasis,
    binomial_codeword,
    canonical_form,
    canonical_masks,
    compute_gb,
    decode,
    decompose,
    error_capability,
    error_capability_early,
    ideal_generators,
    min_weight_codewords,
    one_step_reduce,
    reduce_codeword_step,
    structural_report,
    verify_reduced_gb,
)
from codegb.code import ResourceLimitError
from codegb.term import GREATER, Word, degrevlex_cmp, parse_word, psi, psi_inverse, total_degree

from conftest import example1_code, random_code, random_codes, toy_code

EXAMPLE_BASIS = {
    "x1^2 - 1", "x2^2 - 1", "x3^2 - 1", "x4^2 - 1", "x5^2 - 1", "x6^2 - 1",
    "x2*x3 - x6", "x2*x4 - x1*x5", "x2*x5 - x1*x4", "x2*x6 - x3",
    "x3*x6 - x2", "x4*x5 - x1*x2", "x1*x3*x4 - x5*x6", "x1*x3*x5 - x4*x6",
    "x1*x4*x6 - x3*x5", "x1*x5*x6 - x3*x4",
}


def b(text, n=6):
    head, tail = text.split(" - ")
    return Binomial(parse_word(head, n), parse_word(tail, n))


@pytest.fixture(scope="module")
def gb1():
    return compute_gb(example1_code())


def test_ideal_generators():
    assert {str(g) for g in ideal_generators(example1_code())} == {
        "x1*x2*x4*x5 - 1", "x2*x3*x6 - 1", "x1*x3*x4*x5*x6 - 1",
        "x1^2 - 1", "x2^2 - 1", "x3^2 - 1", "x4^2 - 1", "x5^2 - 1", "x6^2 - 1",
    }
    assert {str(g) for g in ideal_generators(toy_code())} == {
        "x1*x3 - 1", "x2*x3 - 1", "x1^2 - 1", "x2^2 - 1", "x3^2 - 1",
    }
    zero = BinaryCode.from_generator(BinaryMatrix((), 3))
    assert all(g.is_square for g in ideal_generators(zero))


def test_example1_basis(backend):
    gb = compute_gb(example1_code(), backend=backend)
    assert {str(g) for g in gb} == EXAMPLE_BASIS
    assert len(gb.squares) == 6
    assert gb.staircase_size == 16


def test_toy_basis(backend):
    gb = compute_gb(toy_code(), backend=backend)
    assert {str(g) for g in gb} == {"x2 - x1", "x3 - x1", "x1^2 - 1"}


def test_full_code_basis(backend):
    for n in (1, 4, 7):
        gb = compute_gb(BinaryCode.from_generator(BinaryMatrix.identity(n)), backend=backend)
        assert gb.squares == []
        assert {str(g) for g in gb.elements} == {f"x{i} - 1" for i in range(1, n + 1)}


def test_resource_guard():
    c = BinaryCode.from_generator(BinaryMatrix((1,), 20))
    with pytest.raises(ResourceLimitError):
        compute_gb(c)
    gb = compute_gb(c, max_redundancy=19)
    assert gb.staircase_size == 1 << 19


def test_binomial_requires_head_above_tail():
    with pytest.raises(ValueError):
        b("x1 - x2")


def test_one_step_reduce(gb1):
    assert one_step_reduce(parse_word("x1^2*x2", 6), gb1) == parse_word("x2", 6)
    w = parse_word("x1*x2*x3*x4*x5", 6)
    step = one_step_reduce(w, gb1)
    assert degrevlex_cmp(w, step) == GREATER
    assert one_step_reduce(parse_word("x3", 6), gb1) == parse_word("x3", 6)


def test_canonical_form_examples(gb1):
    assert canonical_form(parse_word("x1*x2*x3*x4*x5", 6), gb1) == parse_word("x3", 6)
    assert canonical_form(parse_word("x1*x3*x4*x5*x6", 6), gb1) == Word.one(6)
    assert canonical_form(Word.one(6), gb1) == Word.one(6)


def test_canonical_form_iterates_one_step(gb1):
    for m in range(64):
        w = Word.from_mask(m, 6)
        cur = w
        while True:
            nxt = one_step_reduce(cur, gb1)
            if nxt == cur:
                break
            assert degrevlex_cmp(cur, nxt) == GREATER
            cur = nxt
        assert cur == canonical_form(w, gb1)
        assert canonical_form(cur, gb1) == cur


def test_decode_examples(gb1):
    r = decode(gb1, "111110")
    assert (r.error, r.codeword, r.within_capability) == ((0, 0, 1, 0, 0, 0), (1, 1, 0, 1, 1, 0), True)
    r = decode(gb1, "011001")
    assert r.error == (0,) * 6 and r.within_capability
    # coset leader x3*x4 found by brute force, weight 2 > t = 1
    r = decode(gb1, "001100")
    assert r.error == (0, 0, 1, 1, 0, 0) and not r.within_capability
    with pytest.raises(ValueError):
        decode(gb1, "0101")


def test_error_capability(gb1):
    assert error_capability(gb1) == 1
    assert error_capability(compute_gb(toy_code())) == 0
    assert error_capability_early(example1_code()) == 1
    assert error_capability_early(BinaryCode.from_generator(BinaryMatrix.identity(5))) == 0
    zero = BinaryCode.from_generator(BinaryMatrix((), 4))
    with pytest.raises(ValueError):
        error_capability(compute_gb(zero))
    with pytest.raises(ValueError):
        error_capability_early(zero)


def test_binomial_codeword_examples():
    assert binomial_codeword(b("x1*x3*x4 - x5*x6")) == (1, 0, 1, 1, 1, 1)
    assert binomial_codeword(b("x3*x6 - x2")) == (0, 1, 1, 0, 0, 1)
    assert binomial_codeword(b("x4^2 - 1")) == (0,) * 6


def test_reduce_codeword_step(gb1):
    wc = parse_word("x1*x3*x4*x5*x6", 6)
    g1, w2 = reduce_codeword_step(wc, gb1)
    assert str(g1) == "x1*x3*x4 - x5*x6"
    assert w2 == Word.one(6)
    assert total_degree(g1.head) == 3

    g1, _ = reduce_codeword_step(parse_word("x2*x3*x6", 6), gb1)
    assert total_degree(g1.head) <= 2

    for v in example1_code().codewords():
        if not any(v):
            continue
        for sel in ("smallest", "progress"):
            g1, w2 = reduce_codeword_step(psi_inverse(v), gb1, select=sel)
            assert tuple(a ^ c for a, c in zip(binomial_codeword(g1), psi(w2))) == v
            assert degrevlex_cmp(psi_inverse(v), w2) == GREATER
            assert total_degree(w2) <= sum(v)

    # the smallest-head rule goes through x3*x6 - x2 first
    g1, w2 = reduce_codeword_step(wc, gb1, select="smallest")
    assert str(g1) == "x3*x6 - x2" and w2 == parse_word("x1*x2*x4*x5", 6)

    with pytest.raises(ValueError):
        reduce_codeword_step(parse_word("x1", 6), gb1)
    with pytest.raises(ValueError):
        reduce_codeword_step(wc, gb1, select="random")


def test_decompose_examples(gb1):
    parts = decompose("101111", gb1)
    assert [str(g) for g in parts] == ["x3*x6 - x2", "x2*x4 - x1*x5"]
    assert [str(g) for g in decompose("101111", gb1, select="progress")] == ["x1*x3*x4 - x5*x6"]
    assert decompose("000000", gb1) == []
    with pytest.raises(ValueError):
        decompose("100000", gb1)


def test_min_weight_codewords_examples(gb1):
    assert min_weight_codewords(gb1) == (3, {(0, 1, 1, 0, 0, 1)})
    rep = compute_gb(BinaryCode.from_generator(BinaryMatrix.from_rows(["111"])))
    assert min_weight_codewords(rep) == (3, {(1, 1, 1)})


def test_verify_reduced_gb(gb1):
    assert verify_reduced_gb(gb1)
    # tail replaced by a reducible word (x2*x3 is itself a head)
    bad = [g for g in gb1 if str(g) != "x1*x3*x4 - x5*x6"] + [b("x1*x3*x4 - x2*x3")]
    assert not verify_reduced_gb(GroebnerBasis.from_binomials(gb1.code, bad))


@pytest.mark.parametrize("drop", sorted(EXAMPLE_BASIS))
def test_verify_fails_when_an_element_is_missing(gb1, drop):
    kept = [g for g in gb1 if str(g) != drop]
    report = structural_report(GroebnerBasis.from_binomials(gb1.code, kept))
    assert not all(report.values())
    assert not report["staircase_size"] or not report["generators_reduce_to_one"]


def test_from_binomials_roundtrip(gb1):
    again = GroebnerBasis.from_binomials(gb1.code, list(gb1))
    assert verify_reduced_gb(again)
    assert again.staircase_size == 16
    assert again.canon_by_syndrome == gb1.canon_by_syndrome


def test_canon_by_syndrome_is_the_staircase(gb1):
    leaders = oracle_coset_leaders(gb1.code)
    assert gb1.canon_by_syndrome == leaders
    for g in gb1.elements:
        assert gb1.canon_by_syndrome[gb1.code.syndrome(psi(g.tail))] == g.tail


# ----------------------------------------------------------- random codes

CODES = random_codes(seed=20240601, count=60, max_n=10)


@pytest.mark.parametrize("code", CODES, ids=lambda c: f"n{c.n}k{c.k}")
def test_random_code_against_oracles(code):
    gb = compute_gb(code)
    assert verify_reduced_gb(gb)
    leaders = oracle_coset_leaders(code)
    masks = list(range(1 << code.n))
    for m, cf in zip(masks, canonical_masks(masks, gb)):
        assert cf == leaders[code.syndrome(unpack(m, code.n))].mask
    d = oracle_min_distance(code)
    t = (d - 1) // 2
    assert error_capability(gb) == t == error_capability_early(code)
    cws, dists = oracle_decode_table(code)
    for m in range(1 << code.n):
        r = decode(gb, unpack(m, code.n))
        assert r.codeword == unpack(int(cws[m]), code.n)
        assert r.within_capability == (dists[m] <= t)


@pytest.mark.parametrize("code", CODES[:20], ids=lambda c: f"n{c.n}k{c.k}")
def test_head_degree_bounds(code):
    gb = compute_gb(code)
    for g in gb.elements:
        tp = (sum(binomial_codeword(g)) - 1) // 2 + 1
        assert total_degree(g.head) in (tp, tp + 1)


@pytest.mark.parametrize("code", CODES[:20], ids=lambda c: f"n{c.n}k{c.k}")
def test_emission_order_and_tails(code):
    gb = compute_gb(code)
    heads = [g.head for g in gb.emission]
    assert all(degrevlex_cmp(a, b) != GREATER for a, b in zip(heads, heads[1:]))
    for g in gb.elements:
        assert canonical_form(g.tail, gb) == g.tail


def test_divisor_choice_does_not_change_canonical_form():
    rng = random.Random(99)
    for _ in range(15):
        n = rng.randint(3, 9)
        code = random_code(rng, n, rng.randint(1, n - 1))
        gb = compute_gb(code)
        for _ in range(30):
            w = rng.getrandbits(n)
            start = w
            while True:
                divs = [i for i, h in enumerate(gb._heads) if (w & h) == h]
                if not divs:
                    break
                i = rng.choice(divs)
                w ^= gb._heads[i] ^ gb._tails[i]
            assert w == canonical_form(Word.from_mask(start, n), gb).mask


codes = st.integers(1, 9).flatmap(lambda n: st.lists(st.integers(0, (1 << n) - 1), max_size=n).map(
    lambda rows: BinaryCode.from_generator(BinaryMatrix(tuple(rows), n))))


@settings(max_examples=80, deadline=None)
@given(codes, st.data())
def test_basis_invariants(code, data):
    gb = compute_gb(code)
    assert verify_reduced_gb(gb)
    assert gb.staircase_size == 1 << (code.n - code.k)
    m = data.draw(st.integers(0, (1 << code.n) - 1))
    w = Word.from_mask(m, code.n)
    cf = canonical_form(w, gb)
    # same coset, irreducible, and no heavier than the received word
    assert code.syndrome(psi(cf)) == code.syndrome(psi(w))
    assert canonical_form(cf, gb) == cf
    assert total_degree(cf) <= total_degree(w)
    r = decode(gb, psi(w))
    assert code.is_codeword(r.codeword)
    if code.k:
        assert r.within_capability == (sum(r.error) <= error_capability(gb))
