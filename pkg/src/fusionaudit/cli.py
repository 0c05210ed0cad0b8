"""Command line front end.

Exit codes: 0 = completed and consistent, 2 = input error, 3 = internal
consistency violation (a theorem failed to re-verify, which is a defect in
the artifact, never a property of the input).
"""

import argparse
import json
import sys

from .audit import check_algebra_report, gr_report, render_report, run_audit
from .errors import ConsistencyError, GroupoidError, SpecError
from .groupoid import groupoid_from_spec


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SpecError("cannot read %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise SpecError("%s is not valid JSON: %s" % (path, exc)) from exc


def _dump(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _cmd_audit(args):
    cat = groupoid_from_spec(_load_json(args.category))
    report = run_audit(cat, seed=args.seed, corpus_size=args.corpus,
                       samples=args.samples)
    sys.stdout.write(render_report(report))
    text = _dump(report)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_check_algebra(args):
    cat = groupoid_from_spec(_load_json(args.category))
    doc = check_algebra_report(cat, _load_json(args.algebra))
    sys.stdout.write(_dump(doc))
    return 0


def _cmd_gr(args):
    cat = groupoid_from_spec(_load_json(args.category))
    doc = gr_report(cat, seed=args.seed, corpus_size=args.corpus)
    sys.stdout.write(_dump(doc))
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="fusionaudit",
        description="Audit the separability characterization of "
                    "simple-unit categories over exact rationals.")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("audit", help="run the full fifteen-condition audit")
    pa.add_argument("--category", required=True,
                    help="JSON groupoid spec file")
    pa.add_argument("--seed", type=int, default=1)
    pa.add_argument("--corpus", type=int, default=2,
                    help="random corpus instances per generator family")
    pa.add_argument("--samples", type=int, default=6,
                    help="sample count for the sampled checks")
    pa.add_argument("--report", help="write the JSON report here instead "
                                     "of standard output")
    pa.set_defaults(func=_cmd_audit)

    pc = sub.add_parser("check-algebra",
                        help="validate and analyze a single algebra")
    pc.add_argument("--category", required=True)
    pc.add_argument("--algebra", required=True,
                    help="JSON algebra spec file (explicit or generator)")
    pc.set_defaults(func=_cmd_check_algebra)

    pg = sub.add_parser("gr", help="Grothendieck ring report")
    pg.add_argument("--category", required=True)
    pg.add_argument("--seed", type=int, default=1)
    pg.add_argument("--corpus", type=int, default=2)
    pg.set_defaults(func=_cmd_gr)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, GroupoidError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print("consistency violation: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
