"""Command-line front end.

    scrollhankel gen      --g1 L3 --g2 K3
    scrollhankel gb       --g1 L3 --g2 K3 [--order lex]
    scrollhankel betti    --g1 L3 --g2 L3 --output text
    scrollhankel classify --g1 K2 --g2 L4
    scrollhankel verify   --check thm1.1 --g1 L3 --g2 L3
    scrollhankel sweep    --max-m 3 --max-n 3 --check all

Exit status: 0 when nothing failed (flagged checks only warn), 1 on any
failed check, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .closed_graphs import combine, parse_graph_spec
from .errors import CapExceeded, ScrollHankelError
from .hankel import pair_ideal, scroll_ideal
from .polynomial import field_from_name, order_from_name
from .resolution import graded_betti
from . import verifier

CHECK_NAMES = verifier.ALL_CHECKS + ("all",)


def _instance(args):
    g1, g2 = parse_graph_spec(args.g1), parse_graph_spec(args.g2)
    return g1, g2


def _instance_json(g1, g2):
    return {"g1": g1.to_json(), "g2": g2.to_json()}


def cmd_gen(args, fld):
    g1, g2 = _instance(args)
    g = combine(g1, g2)
    pair = pair_ideal(g1, g2, fld)
    scroll = scroll_ideal(g, fld)
    order = order_from_name(args.order)
    doc = {
        "instance": _instance_json(g1, g2),
        "combined": g.to_json(),
        "num_vars": pair.ring.num_vars,
        "pair_generators": [p.to_string(order) for p in pair.generators],
        "scroll_generators": [p.to_string(order) for p in scroll.generators],
    }
    text = "\n".join(
        [f"G = {g.to_spec()} on [{g.n}]", "pair generators:"]
        + [f"  {s}" for s in doc["pair_generators"]]
        + ["scroll generators:"]
        + [f"  {s}" for s in doc["scroll_generators"]]
    )
    return doc, text, 0


def cmd_gb(args, fld):
    g1, g2 = _instance(args)
    order = order_from_name(args.order)
    gb = pair_ideal(g1, g2, fld).groebner_basis(order)
    doc = {"instance": _instance_json(g1, g2), "order": args.order, "field": repr(fld), "gb": gb.to_strings()}
    return doc, "\n".join(doc["gb"]), 0


def cmd_betti(args, fld):
    g1, g2 = _instance(args)
    t = graded_betti(pair_ideal(g1, g2, fld))
    doc = {"instance": _instance_json(g1, g2), **t.to_json()}
    return doc, t.to_text(), 0


def _report_text(rep_json):
    inst = rep_json["instance"]
    head = f"instance g1={_spec(inst['g1'])} g2={_spec(inst['g2'])}"
    lines = [head] + [f"  {c['status']:<7} {c['name']}" for c in rep_json["checks"]]
    return "\n".join(lines)


def _spec(g):
    return ",".join(f"{a}-{b}" for a, b in g["facets"])


def _status(checks):
    if any(c["status"] == verifier.FAIL for c in checks):
        return 1
    return 0


def cmd_classify(args, fld):
    g1, g2 = _instance(args)
    doc = verifier.classification_json(verifier.classify(g1, g2, fld))
    if args.no_timings:
        doc.pop("timings_ms", None)
    c = doc["classification"]
    text = _report_text(doc) + "\n" + "\n".join(
        f"  {k}: claimed={v['claimed']} computed={v['computed']}"
        for k, v in c.items() if isinstance(v, dict) and "claimed" in v
    )
    return doc, text, _status(doc["checks"])


def cmd_verify(args, fld):
    g1, g2 = _instance(args)
    checks = args.check or ["all"]
    rep = verifier.verify_instance(g1, g2, checks, fld)
    doc = rep.to_json(timings=not args.no_timings)
    return doc, _report_text(doc), _status(doc["checks"])


def cmd_sweep(args, fld):
    checks = args.check or ["all"]
    res = verifier.sweep(args.max_m, args.max_n, checks, fld)
    doc = res.to_json(timings=not args.no_timings)
    lines = [f"{doc['instances']} instances"]
    lines += [_report_text(r) for r in doc["results"] if any(c["status"] != "pass" for c in r["checks"])]
    s = doc["summary"]
    lines.append(f"pass={s['pass']} fail={s['fail']} flagged={s['flagged']}")
    status = 0
    if res.aborted is not None:
        lines.append("aborted at:\n" + _report_text(doc["aborted_at"]))
        status = 1
    return doc, "\n".join(lines), status


COMMANDS = {
    "gen": cmd_gen,
    "gb": cmd_gb,
    "betti": cmd_betti,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scrollhankel", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="rational", help="rational | prime | prime:<p>")
    common.add_argument("--order", default="degrevlex", choices=["degrevlex", "lex"])
    common.add_argument("--output", default="json", choices=["json", "text"])
    common.add_argument("--out", help="write the report to this file")
    common.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name != "sweep":
            p.add_argument("--g1", required=True, help="graph spec, e.g. K3, L4, 1-3,2-4")
            p.add_argument("--g2", required=True)
        else:
            p.add_argument("--max-m", type=int, required=True)
            p.add_argument("--max-n", type=int, required=True)
        if name in ("verify", "sweep"):
            p.add_argument("--check", action="append", choices=CHECK_NAMES)
    return parser


def emit(doc, text, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    return (text + "\n").encode()


def _write_atomic(path: str, payload: bytes):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".scrollhankel-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _count_flagged(doc) -> int:
    if "results" in doc:
        return sum(_count_flagged(r) for r in doc["results"])
    return sum(c["status"] == verifier.FLAGGED for c in doc.get("checks", []))


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        fld = field_from_name(args.field)
        doc, text, status = COMMANDS[args.command](args, fld)
    except CapExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (ScrollHankelError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    payload = emit(doc, text, args.output)
    try:
        if args.out:
            _write_atomic(args.out, payload)
        else:
            stdout.write(payload)
            stdout.flush()
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    flagged = _count_flagged(doc)
    if flagged:
        print(f"warning: {flagged} flagged check(s); see report", file=stderr)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
