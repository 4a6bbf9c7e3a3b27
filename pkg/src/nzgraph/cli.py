"""Command-line front end.

Exit status: 0 success, 1 a verification row failed, 2 invalid arguments,
3 search budget exhausted. Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .errors import BudgetExceededError, CapExceededError, PreconditionError
from .graph import build_graph, export_graph
from .solver import DEFAULT_BUDGET, check_exchange, enumerate_minimal, min_id, min_ld
from .twins import twin_partition
from .vecspace import DEFAULT_VERTEX_CAP, SpaceParams, class_size
from .verify import DEFAULT_MATRIX, VerifyReport, verify_matrix

log = logging.getLogger("nzgraph")

COMMANDS = ("build", "solve-ld", "solve-id", "twins", "exchange", "verify", "export")
FORMATS = {
    "build": ("text", "json"),
    "solve-ld": ("text", "json"),
    "solve-id": ("text", "json"),
    "twins": ("text", "json"),
    "exchange": ("text", "json"),
    "verify": ("text", "json"),
    "export": ("dot", "json", "adjlist"),
}
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    n: int | None
    q: int | None
    format: str
    budget: int = DEFAULT_BUDGET
    size_cap: int | None = None
    threads: int = 1
    seed: int = 0  # reserved; the exact paths are deterministic
    strict_id_definition: bool = True
    vertex_cap: int = DEFAULT_VERTEX_CAP
    figures: str | None = None


def _bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="dimension of the space")
    common.add_argument("-q", type=int, help="field size")
    common.add_argument("--format", choices=("text", "json", "dot", "adjlist"))
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                        help="candidate subsets an exact search may test")
    common.add_argument("--size-cap", type=int, help="largest set size to enumerate")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--seed", type=int, default=0, help="reserved")
    common.add_argument("--strict-id-definition", type=_bool, default=True,
                        metavar="BOOL", help="require nonempty identifying traces")
    common.add_argument("--vertex-cap", type=_positive, default=DEFAULT_VERTEX_CAP)
    common.add_argument("--figures", metavar="DIR",
                        help="verify: also write PNG figures into DIR")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="nzgraph",
        description="Locating-dominating sets and identifying codes of the "
                    "non-zero component graph of GF(q)^n.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def parse_config(argv=None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    fmt = args.format or FORMATS[args.command][0]
    if fmt not in FORMATS[args.command]:
        parser.error(f"format {fmt!r} not available for {args.command}")
    if args.command == "verify":
        if (args.n is None) != (args.q is None):
            parser.error("verify takes both -n and -q, or neither for the default matrix")
    elif args.n is None or args.q is None:
        parser.error(f"{args.command} requires -n and -q")
    if args.n is not None and args.n < 1:
        parser.error("-n must be >= 1")
    if args.q is not None and args.q < 2:
        parser.error("-q must be >= 2")
    if args.size_cap is not None and args.size_cap < 0:
        parser.error("--size-cap must be >= 0")
    return RunConfig(
        command=args.command, n=args.n, q=args.q, format=fmt, budget=args.budget,
        size_cap=args.size_cap, threads=args.threads, seed=args.seed,
        strict_id_definition=args.strict_id_definition, vertex_cap=args.vertex_cap,
        figures=args.figures,
    )


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _text(pairs) -> str:
    return "".join(f"{key}\t{value}\n" for key, value in pairs)


def _set_text(labels) -> str:
    return "-" if labels is None else ",".join(labels) or "{}"


def _graph(cfg):
    return build_graph(SpaceParams(cfg.n, cfg.q, cfg.vertex_cap))


def cmd_build(cfg):
    g = _graph(cfg)
    sizes = [class_size(g.n, g.q, i) for i in range(1, g.n + 1)]
    if cfg.format == "json":
        return _dump({"n": g.n, "q": g.q, "order": g.order, "size": g.edge_count,
                      "class_sizes": sizes}), EXIT_OK
    pairs = [("n", g.n), ("q", g.q), ("order", g.order), ("size", g.edge_count)]
    pairs += [(f"T{i}", s) for i, s in enumerate(sizes, 1)]
    return _text(pairs), EXIT_OK


def _solve_text(g, report, prefix=""):
    d = report.to_dict(g)
    return _text([
        (prefix + "target", d["target"]),
        (prefix + "optimum", "none" if d["optimum"] is None else d["optimum"]),
        (prefix + "nonexistent", str(d["nonexistent"]).lower()),
        (prefix + "witness", _set_text(d["witness"])),
        (prefix + "lower_bound", d["lower_bound"]),
        (prefix + "candidates", d["candidates"]),
    ])


def cmd_solve(cfg):
    g = _graph(cfg)
    p = twin_partition(g)
    if cfg.command == "solve-ld":
        runs = [("", min_ld(g, budget=cfg.budget, threads=cfg.threads, partition=p))]
    else:
        runs = [("strict", min_id(g, True, budget=cfg.budget, threads=cfg.threads,
                                  partition=p))]
        if not cfg.strict_id_definition:
            runs.append(("literal", min_id(g, False, budget=cfg.budget,
                                           threads=cfg.threads, partition=p)))
    for tag, rep in runs:
        log.info("%s search took %.1f ms", tag or rep.target, rep.elapsed * 1000)
    if cfg.format == "json":
        if len(runs) == 1:
            return _dump(runs[0][1].to_dict(g)), EXIT_OK
        return _dump({tag: rep.to_dict(g) for tag, rep in runs}), EXIT_OK
    if len(runs) == 1:
        return _solve_text(g, runs[0][1]), EXIT_OK
    return "".join(_solve_text(g, rep, tag + ".") for tag, rep in runs), EXIT_OK


def cmd_twins(cfg):
    g = _graph(cfg)
    classes = twin_partition(g).nontrivial()
    if cfg.format == "json":
        return _dump([{"kind": c.kind.value, "size": c.size,
                       "members": g.labels(c.members.bits)} for c in classes]), EXIT_OK
    lines = [" ".join([c.kind.value, str(c.size), *g.labels(c.members.bits)])
             for c in classes]
    return "".join(line + "\n" for line in lines), EXIT_OK


def cmd_exchange(cfg):
    g = _graph(cfg)
    cap = g.order if cfg.size_cap is None else cfg.size_cap
    sets = enumerate_minimal(g, cap, "ld", budget=cfg.budget)
    rep = check_exchange(g, sets)
    doc = {"holds": rep.holds, "minimal_sets": len(sets), "size_cap": cap,
           "sets_examined": rep.sets_examined, "witness": None}
    if rep.witness is not None:
        l1, l2, u1 = rep.witness
        doc["witness"] = {"l1": g.labels(l1.bits), "l2": g.labels(l2.bits),
                          "u1": g.label(u1), "l1_size": l1.card, "l2_size": l2.card}
    if cfg.format == "json":
        return _dump(doc), EXIT_OK
    pairs = [("holds", str(rep.holds).lower()), ("minimal_sets", len(sets)),
             ("size_cap", cap), ("sets_examined", rep.sets_examined)]
    if doc["witness"]:
        w = doc["witness"]
        pairs += [("l1", f"{w['l1_size']}\t{_set_text(w['l1'])}"),
                  ("l2", f"{w['l2_size']}\t{_set_text(w['l2'])}"),
                  ("u1", w["u1"])]
    return _text(pairs), EXIT_OK


VERIFY_HEADER = ("n", "q", "claim", "statement", "expected", "computed", "status")


def render_verify(report: VerifyReport, fmt: str) -> str:
    counts = report.counts()
    if fmt == "json":
        return _dump({"rows": [r.as_dict() for r in report.rows], "summary": counts})
    lines = ["\t".join(VERIFY_HEADER)]
    lines += ["\t".join(str(getattr(r, k)) for k in VERIFY_HEADER) for r in report.rows]
    lines.append(f"# pass {counts['pass']} fail {counts['fail']} skipped {counts['skipped']}")
    return "\n".join(lines) + "\n"


def cmd_verify(cfg):
    instances = [(cfg.n, cfg.q)] if cfg.n is not None else list(DEFAULT_MATRIX)
    rows = []
    for n, q in instances:
        rows.extend(verify_matrix(n, q, budget=cfg.budget, threads=cfg.threads,
                                  vertex_cap=cfg.vertex_cap).rows)
    report = VerifyReport(rows)
    if cfg.figures:
        from .figures import write_verify_figures

        graphs = [build_graph(SpaceParams(n, q, cfg.vertex_cap)) for n, q in instances]
        for path in write_verify_figures(report, graphs, cfg.figures):
            print(f"wrote {path}", file=sys.stderr)
    return render_verify(report, cfg.format), EXIT_FAIL if report.failed else EXIT_OK


def cmd_export(cfg):
    return export_graph(_graph(cfg), cfg.format).decode(), EXIT_OK


HANDLERS = {
    "build": cmd_build,
    "solve-ld": cmd_solve,
    "solve-id": cmd_solve,
    "twins": cmd_twins,
    "exchange": cmd_exchange,
    "verify": cmd_verify,
    "export": cmd_export,
}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        text, status = HANDLERS[cfg.command](cfg)
    except BudgetExceededError as exc:
        print(f"nzgraph: budget exceeded after {exc.examined} candidates; "
              "result unknown", file=sys.stderr)
        return EXIT_BUDGET
    except (CapExceededError, PreconditionError, ValueError) as exc:
        print(f"nzgraph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(text)
    return status


def main(argv=None) -> int:
    cfg = parse_config(argv)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
