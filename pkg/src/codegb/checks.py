"""Oracle cross-checks of a computed basis, reported per invariant."""

from __future__ import annotations

from .code import (
    BinaryCode,
    oracle_coset_leaders,
    oracle_decode,
    oracle_min_distance,
    oracle_min_weight_codewords,
    unpack,
)
from .cycles import (
    Graph,
    greedy_cycle_basis,
    incidence_check_matrix,
    oracle_minimal_basis_length,
)
from .groebner import (
    GroebnerBasis,
    binomial_codeword,
    canonical_masks,
    decode,
    decompose,
    error_capability_early,
    min_weight_codewords,
    structural_report,
)

# exhaustive checks are skipped above these sizes
MAX_N_EXHAUSTIVE = 16
MAX_K_EXHAUSTIVE = 12
MAX_N_DECODE = 12


def code_report(gb: GroebnerBasis) -> dict[str, bool | None]:
    """Structural checks plus every oracle comparison that fits the size limits.

    ``None`` marks a check skipped for size or because it does not apply.
    """
    c: BinaryCode = gb.code
    out: dict[str, bool | None] = dict(structural_report(gb))
    out["staircase_is_2^(n-k)"] = gb.staircase_size == 1 << c.redundancy
    heads = [g.head for g in gb.emission]
    out["emission_order_nondecreasing"] = all(a <= b for a, b in zip(heads, heads[1:]))

    out["head_degree_bounds"] = all(
        g.degree in (tp, tp + 1)
        for g in gb.elements
        for tp in [(sum(binomial_codeword(g)) - 1) // 2 + 1]
    )

    if c.n <= MAX_N_EXHAUSTIVE:
        leaders = oracle_coset_leaders(c)
        masks = list(range(1 << c.n))
        canon = canonical_masks(masks, gb)
        out["canonical_forms_match_oracle"] = all(
            leaders[unpack(c.syndrome_mask(m), c.check.ncols)].mask == cf for m, cf in zip(masks, canon)
        )
    else:
        out["canonical_forms_match_oracle"] = None

    if c.k == 0:
        for name in ("capability_matches_oracle", "early_capability_matches",
                     "min_weight_codewords_match_oracle", "decomposition_properties",
                     "decoding_matches_oracle"):
            out[name] = None
        return out

    if c.k <= MAX_K_EXHAUSTIVE:
        d = oracle_min_distance(c)
        out["capability_matches_oracle"] = gb.error_capability == (d - 1) // 2
        od, owords = oracle_min_weight_codewords(c)
        out["min_weight_codewords_match_oracle"] = min_weight_codewords(gb) == (od, owords)
        out["decomposition_properties"] = all(_decomposition_ok(gb, v) for v in c.codewords())
    else:
        out["capability_matches_oracle"] = None
        out["min_weight_codewords_match_oracle"] = None
        out["decomposition_properties"] = None
    out["early_capability_matches"] = error_capability_early(c) == gb.error_capability

    if c.n <= MAX_N_DECODE and c.k <= MAX_K_EXHAUSTIVE:
        t = gb.error_capability
        ok = True
        for m in range(1 << c.n):
            y = unpack(m, c.n)
            res = decode(gb, y)
            cw, dist = oracle_decode(c, y)
            if res.codeword != cw or res.within_capability != (dist <= t):
                ok = False
                break
        out["decoding_matches_oracle"] = ok
    else:
        out["decoding_matches_oracle"] = None
    return out


def _decomposition_ok(gb: GroebnerBasis, v: tuple[int, ...]) -> bool:
    parts = decompose(v, gb)
    wt = sum(v)
    bound = (wt - 1) // 2 + 1
    total = [0] * len(v)
    for g in parts:
        cg = binomial_codeword(g)
        if sum(cg) > wt or g.degree > bound:
            return False
        total = [a ^ b for a, b in zip(total, cg)]
    return tuple(total) == tuple(v)


def graph_report(g: Graph, gb: GroebnerBasis) -> dict[str, bool | None]:
    out = code_report(gb)
    c = gb.code
    inc = incidence_check_matrix(g)
    out["dimension_is_betti_number"] = c.k == g.betti_number()
    basis = greedy_cycle_basis(gb)
    out["basis_cycles_satisfy_incidence"] = all(
        not any(c.syndrome(cyc)) for cyc in basis.cycles
    ) and c.check == inc
    out["basis_size_is_betti_number"] = len(basis.cycles) == g.betti_number()
    if c.k <= MAX_K_EXHAUSTIVE:
        out["basis_length_matches_oracle"] = basis.total_length == oracle_minimal_basis_length(c)
    else:
        out["basis_length_matches_oracle"] = None
    return out
