"""Command-line front end: ``mixedlap {matrices,classify,minor,treecount,verify}``.

Exit status is 0 when every check passed, 1 when a check failed and 2 on
usage, parse or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .graph import CycleBudgetExceeded, GraphFormatError, load_graph, simple_cycles
from .matrices import BUILDERS, build_L, build_Q, build_S, build_T
from .minors import offdiag_minor_L, offdiag_minor_Q, tree_count_via_L, tree_count_via_Q
from .structure import classify_cycle, quasi_null_labeling, quasi_witness, sp_labeling, sp_witness
from .verify import SweepConfigError, load_sweep_specs, run_sweep

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_graph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return load_graph(text)
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _vertex_list(text: str, g) -> list[int]:
    try:
        vs = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None
    bad = [x for x in vs if not 1 <= x <= g.n]
    if bad:
        raise UsageError(f"unknown vertices {bad}")
    if len(set(vs)) != len(vs):
        raise UsageError(f"repeated vertex in {text!r}")
    return vs


# commands return (exit status, text, json payload)


def cmd_matrices(args):
    g = _read_graph(args.file)
    which = [w.strip().upper() for w in args.which.split(",") if w.strip()]
    unknown = [w for w in which if w not in BUILDERS]
    if unknown:
        raise UsageError(f"unknown matrices {unknown}; choose from {','.join(BUILDERS)}")
    mats = {w: BUILDERS[w](g) for w in which}
    S, T = build_S(g), build_T(g)
    checks = {"S S* == L": S @ S.H() == build_L(g), "T T* == Q": T @ T.H() == build_Q(g)}
    lines = []
    for w, M in mats.items():
        prefix = "e" if w in ("S", "T") else ""
        lines += [f"{w}:", M.render(col_prefix=prefix), "", f"{w} (complex):", M.render(True, prefix), ""]
    lines += [f"{k}: {'yes' if v else 'NO'}" for k, v in checks.items()]
    payload = {"graph": g.to_json(), "matrices": {w: M.to_json() for w, M in mats.items()}, "checks": checks}
    return (OK if all(checks.values()) else FAILED), "\n".join(lines), payload


def cmd_classify(args):
    g = _read_graph(args.file)
    limit = args.budget if args.budget is not None else 1000
    try:
        reports = [classify_cycle(c, g) for c in simple_cycles(g, limit=limit)]
    except CycleBudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    sp, quasi = sp_labeling(g), quasi_null_labeling(g)
    sp_w, q_w = (None if sp else sp_witness(g)), (None if quasi else quasi_witness(g))
    # the labelings must agree with the cycle classes
    consistent = (sp is not None) == all(r.phi == 4 for r in reports) and (quasi is not None) == all(
        r.psi == 4 for r in reports
    )
    lines = [f"{len(reports)} cycle(s)"]
    for r in reports:
        lines.append(f"  {'-'.join(map(str, r.cycle.vertices))}: a={r.a} b={r.b} c={r.c} Φ{r.phi} Ψ{r.psi}")
    if sp:
        lines.append(f"SP: yes, labels {sp.to_json()}")
    else:
        lines.append(f"SP: no, witness cycle {'-'.join(map(str, sp_w.vertices))}")
    if quasi:
        lines.append(f"quasi-singular (Q): yes, labels {quasi.to_json()}")
    else:
        lines.append(f"quasi-singular (Q): no, witness cycle {'-'.join(map(str, q_w.vertices))}")
    if not consistent:
        lines.append("INCONSISTENT: labelings disagree with cycle classes")
    payload = {
        "graph": g.to_json(),
        "cycles": [r.to_json() for r in reports],
        "sp": {"exists": sp is not None, "labels": sp.to_json() if sp else None,
               "witness": list(sp_w.vertices) if sp_w else None},
        "quasi": {"exists": quasi is not None, "labels": quasi.to_json() if quasi else None,
                  "witness": list(q_w.vertices) if q_w else None},
        "consistent": consistent,
    }
    return (OK if consistent else FAILED), "\n".join(lines), payload


def cmd_minor(args):
    g = _read_graph(args.file)
    V1 = _vertex_list(args.v1, g)
    V2 = _vertex_list(args.v2, g) if args.v2 is not None else V1
    if len(V1) != len(V2):
        raise UsageError(f"|V1| = {len(V1)} but |V2| = {len(V2)}")
    reports = [offdiag_minor_L(g, V1, V2), offdiag_minor_Q(g, V1, V2)]
    lines = []
    for r in reports:
        lines.append(
            f"{r.matrix}[{','.join(map(str, r.V1))} | {','.join(map(str, r.V2))}]: "
            f"det = {r.algebraic} (norm {r.norm_algebraic}), "
            f"sum = {r.combinatorial} (norm {r.norm_combinatorial}), "
            f"{'match' if r.norm_match else 'MISMATCH'}"
        )
    ok = all(r.norm_match for r in reports)
    return (OK if ok else FAILED), "\n".join(lines), {"graph": g.to_json(), "reports": [r.to_json() for r in reports]}


def cmd_treecount(args):
    g = _read_graph(args.file)
    reports = [tree_count_via_L(g), tree_count_via_Q(g)]
    lines = [f"Kirchhoff: {reports[0].kirchhoff}"]
    for r in reports:
        if r.applicable:
            lines.append(f"{r.matrix}-based: {r.count if r.count is not None else 'cofactor norms differ'}")
        else:
            pair = r.witness_pair
            extra = f"; norms differ at {pair[0]} and {pair[1]}" if pair else ""
            lines.append(f"{r.matrix}-based: not applicable (cycle {'-'.join(map(str, r.witness_cycle))}{extra})")
        if not r.consistent:
            lines.append(f"  INCONSISTENT: {r.matrix} cofactor norms do not equal Kirchhoff squared")
    ok = all(r.consistent for r in reports)
    payload = {"graph": g.to_json(), "kirchhoff": reports[0].kirchhoff, "reports": [r.to_json() for r in reports]}
    return (OK if ok else FAILED), "\n".join(lines), payload


def _bundled(name: str) -> bool:
    return resources.files("mixedlap").joinpath("sweeps", f"{name}.json").is_file()


def cmd_verify(args):
    source = args.spec
    path = Path(source)
    if path.is_file():
        source = path.read_text()
    elif not any(c in source for c in "={[\n") and not _bundled(source):
        raise UsageError(f"no spec file or bundled spec named {source!r}")
    try:
        specs = load_sweep_specs(source)
    except SweepConfigError as exc:
        raise UsageError(f"bad sweep spec: {exc}") from None
    for s in specs:
        if args.seed is not None:
            s.seed = args.seed
        if args.budget is not None:
            s.budget = args.budget
        if args.workers is not None:
            s.workers = args.workers
    reports = []
    for s in specs:
        try:
            reports.append(run_sweep(s))
        except SweepConfigError as exc:
            raise UsageError(f"sweep {s.name}: {exc}") from None
    ok = all(r.ok for r in reports)
    text = "\n".join(r.summary() for r in reports)
    text += f"\n{'all sweeps passed' if ok else 'FAILURES'}: {sum(r.failed for r in reports)} failed check(s)"
    payload = {"ok": ok, "sweeps": [r.to_json() for r in reports]}
    return (OK if ok else FAILED), text, payload


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--budget", type=int, help="cycle limit (classify) or orientation budget (verify)")
    common.add_argument("--seed", type=int, help="override the sweep seed (verify)")

    p = argparse.ArgumentParser(prog="mixedlap", description="Exact Laplacians of mixed graphs over Z[w].")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("matrices", parents=[common], help="print N, D, L, Q, S, T")
    s.add_argument("file")
    s.add_argument("--which", default="N,D,L,Q,S,T")
    s.set_defaults(func=cmd_matrices)

    s = sub.add_parser("classify", parents=[common], help="cycle classes and SP / quasi labelings")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("minor", parents=[common], help="a minor of L and Q, both ways")
    s.add_argument("file")
    s.add_argument("--v1", required=True, help="rows, e.g. 2,3,4")
    s.add_argument("--v2", help="columns; defaults to --v1")
    s.set_defaults(func=cmd_minor)

    s = sub.add_parser("treecount", parents=[common], help="spanning trees from cofactors and Kirchhoff")
    s.add_argument("file")
    s.set_defaults(func=cmd_treecount)

    s = sub.add_parser("verify", parents=[common], help="run a sweep spec (file or bundled name)")
    s.add_argument("spec", help="spec file (JSON or key = value) or a bundled name such as 'acceptance'")
    s.add_argument("--workers", type=int)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        status, text, payload = args.func(args)
    except UsageError as exc:
        print(f"mixedlap: {exc}", file=sys.stderr)
        return USAGE
    out = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) if args.format == "json" else text
    if args.output:
        Path(args.output).write_text(out + "\n", encoding="utf-8")
    else:
        print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
