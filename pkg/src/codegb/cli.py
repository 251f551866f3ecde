"""Command-line front end.

Exit status: 0 success, 1 a ``check`` invariant failed, 2 unreadable or
malformed input, 3 precondition violated, 4 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .checks import code_report, graph_report
from .code import BinaryCode, ResourceLimitError, as_vector, vector_str
from .cycles import Graph, cycle_space_code, minimal_cycle_basis, minimal_cycles
from .formats import ParseError, parse_graph, parse_matrix
from .groebner import (
    DEFAULT_MAX_REDUNDANCY,
    binomial_codeword,
    compute_gb,
    decode,
    decompose,
    error_capability,
    error_capability_early,
    min_weight_codewords,
)

SCHEMA = "codegb/1"

EXIT_OK, EXIT_CHECK_FAILED, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 1, 2, 3, 4

MATRIX_COMMANDS = ("gb", "decode", "capability", "minwords", "decompose")
GRAPH_COMMANDS = ("cyclebasis", "mincycles")


@dataclass
class RunConfig:
    command: str
    input_path: str
    received_word: str | None = None
    emit_json: bool = False
    resource_override: bool = False
    from_check: bool = False
    early: bool = False
    graph: bool = False

    def __post_init__(self):
        needs_word = self.command in ("decode", "decompose")
        if needs_word and self.received_word is None:
            raise ValueError(f"{self.command} requires --word")
        if not needs_word and self.received_word is not None:
            raise ValueError(f"--word is not accepted by {self.command}")


class _Fail(Exception):
    def __init__(self, code: int, msg: str):
        self.code = code
        super().__init__(msg)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from exc


def _load_code(cfg: RunConfig) -> BinaryCode:
    m = parse_matrix(_read(cfg.input_path))
    return BinaryCode.from_check(m) if cfg.from_check else BinaryCode.from_generator(m)


def _load_graph(cfg: RunConfig) -> Graph:
    return parse_graph(_read(cfg.input_path))


def _word(cfg: RunConfig, n: int) -> tuple[int, ...]:
    try:
        v = as_vector(cfg.received_word)
    except ValueError:
        raise _Fail(EXIT_PARSE, f"--word {cfg.received_word!r} is not a binary string")
    if len(v) != n:
        raise _Fail(EXIT_PRECONDITION, f"--word has length {len(v)}, the code has length {n}")
    return v


def _gb(cfg: RunConfig, code: BinaryCode):
    return compute_gb(code, force=cfg.resource_override)


def _cycle_entry(g: Graph, cyc) -> dict:
    return {"vector": vector_str(cyc), "edges": [list(e) for e in g.edges_of(cyc)], "length": sum(cyc)}


def _cycle_line(g: Graph, cyc) -> str:
    edges = " ".join(f"({u},{v})" for u, v in g.edges_of(cyc))
    return f"{vector_str(cyc)}  {edges}"


def execute(cfg: RunConfig) -> tuple[int, dict, list[str]]:
    """Run one command; returns exit status, JSON payload and text lines."""
    cmd = cfg.command
    if cmd in MATRIX_COMMANDS or (cmd == "check" and not cfg.graph):
        code = _load_code(cfg)
        if cmd == "capability" and cfg.early:
            t = error_capability_early(code)
            return EXIT_OK, {"t": t, "method": "early"}, [f"t = {t}"]
        gb = _gb(cfg, code)
        if cmd == "gb":
            lines = [f"# n = {code.n}, k = {code.k}, order degrevlex x1 < ... < x{code.n}"]
            lines += [str(g) for g in gb]
            lines.append(f"# |N| = {gb.staircase_size}")
            payload = {
                "n": code.n, "k": code.k,
                "squares": [str(g) for g in gb.squares],
                "binomials": [str(g) for g in gb.elements],
                "staircase_size": gb.staircase_size,
            }
            return EXIT_OK, payload, lines
        if cmd == "decode":
            res = decode(gb, _word(cfg, code.n))
            payload = {
                "error": vector_str(res.error),
                "codeword": vector_str(res.codeword),
                "within_capability": res.within_capability,
            }
            lines = [
                f"error: {payload['error']}",
                f"codeword: {payload['codeword']}",
                f"within_capability: {'true' if res.within_capability else 'false'}",
            ]
            return EXIT_OK, payload, lines
        if cmd == "capability":
            t = error_capability(gb)
            return EXIT_OK, {"t": t, "method": "basis"}, [f"t = {t}"]
        if cmd == "minwords":
            d, words = min_weight_codewords(gb)
            ws = sorted(vector_str(w) for w in words)
            return EXIT_OK, {"d": d, "codewords": ws}, [f"d = {d}", *ws]
        if cmd == "decompose":
            v = _word(cfg, code.n)
            parts = decompose(v, gb)
            total = [0] * code.n
            entries, lines = [], []
            for g in parts:
                cg = binomial_codeword(g)
                total = [a ^ b for a, b in zip(total, cg)]
                entries.append({"binomial": str(g), "codeword": vector_str(cg)})
                lines.append(f"{g}  {vector_str(cg)}")
            ok = tuple(total) == v
            lines.append(f"sum = {vector_str(total)} ({'matches' if ok else 'MISMATCH'})")
            return EXIT_OK, {"terms": entries, "sum": vector_str(total), "sum_matches": ok}, lines
        report = code_report(gb)
        return _report_result(report)

    g = _load_graph(cfg)
    if cmd == "cyclebasis":
        basis = minimal_cycle_basis(g) if g.m else None
        if basis is None or not basis.cycles:
            return EXIT_OK, {"cycles": [], "total_length": 0}, ["cycles: 0", "total_length = 0"]
        lines = [f"cycles: {len(basis.cycles)}"]
        lines += [_cycle_line(g, c) for c in basis.cycles]
        lines.append(f"total_length = {basis.total_length}")
        payload = {"cycles": [_cycle_entry(g, c) for c in basis.cycles], "total_length": basis.total_length}
        return EXIT_OK, payload, lines
    if cmd == "mincycles":
        d, cycles = minimal_cycles(g)
        ordered = sorted(cycles, key=vector_str)
        lines = [f"d = {d}"] + [_cycle_line(g, c) for c in ordered]
        return EXIT_OK, {"d": d, "cycles": [_cycle_entry(g, c) for c in ordered]}, lines
    # check --graph
    code = cycle_space_code(g)
    gb = _gb(cfg, code)
    return _report_result(graph_report(g, gb))


def _report_result(report: dict) -> tuple[int, dict, list[str]]:
    lines = []
    for name, ok in report.items():
        tag = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
        lines.append(f"{tag} {name}")
    failed = any(ok is False for ok in report.values())
    payload = {"checks": {k: v for k, v in report.items()}, "all_passed": not failed}
    return (EXIT_CHECK_FAILED if failed else EXIT_OK), payload, lines


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        status, payload, lines = execute(cfg)
    except _Fail as exc:
        print(f"codegb: error: {exc}", file=err)
        return exc.code
    except ParseError as exc:
        print(f"codegb: parse error: {cfg.input_path}: {exc}", file=err)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"codegb: resource limit: {exc} (use --force to override)", file=err)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"codegb: precondition failed: {exc}", file=err)
        return EXIT_PRECONDITION
    if cfg.emit_json:
        doc = {"schema": SCHEMA, "command": cfg.command, "result": payload}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("".join(f"{line}\n" for line in lines))
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="codegb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, kind):
        sp.add_argument("input_path", metavar=kind)
        sp.add_argument("--json", dest="emit_json", action="store_true", help="structured output")
        sp.add_argument("--force", dest="resource_override", action="store_true",
                        help=f"lift the n-k <= {DEFAULT_MAX_REDUNDANCY} guard")

    for name, helptext in [
        ("gb", "print the reduced Groebner basis and |N|"),
        ("decode", "decode a received word"),
        ("capability", "print the error-correcting capability t"),
        ("minwords", "print d and every minimum-weight codeword"),
        ("decompose", "decompose a codeword into basis codewords"),
    ]:
        sp = sub.add_parser(name, help=helptext)
        common(sp, "MATRIX")
        sp.add_argument("--check", dest="from_check", action="store_true",
                        help="the file holds a check matrix (default: generator rows)")
        if name in ("decode", "decompose"):
            sp.add_argument("--word", dest="received_word", required=True)
        if name == "capability":
            sp.add_argument("--early", action="store_true", help="stop at the first standard-head binomial")

    for name, helptext in [
        ("cyclebasis", "print a minimal cycle basis"),
        ("mincycles", "print the girth and all shortest cycles"),
    ]:
        common(sub.add_parser(name, help=helptext), "GRAPH")

    sp = sub.add_parser("check", help="verify the basis and cross-check it against brute force")
    common(sp, "FILE")
    sp.add_argument("--check", dest="from_check", action="store_true", help="matrix file is a check matrix")
    sp.add_argument("--graph", action="store_true", help="the file is a graph")
    return p


def parse_config(argv=None) -> RunConfig:
    fields = vars(build_parser().parse_args(argv))
    return RunConfig(
        command=fields["command"],
        input_path=fields["input_path"],
        received_word=fields.get("received_word"),
        emit_json=fields["emit_json"],
        resource_override=fields["resource_override"],
        from_check=fields.get("from_check", False),
        early=fields.get("early", False),
        graph=fields.get("graph", False),
    )


def main(argv=None) -> int:
    return run(parse_config(argv))

if __name__ == "__main__":
    sys.exit(main())
