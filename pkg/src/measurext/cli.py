"""Command-line interface.

Nine subcommands: validate, classify, measure, distance, extend, hull,
unique, suite, interval-demo.  Exit status 0 means success (or all checks
passed), 1 means a property or axiom failure, 2 means a usage or input
error.  ``--json`` switches any subcommand to machine output; exact values
are serialized as strings such as "3/4" and "inf", never as JSON numbers.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classify import classify, extend, measurable_hull, uniqueness_report
from . import engine, intervals, testkit
from .errors import InputError, MeasureExtError, PreconditionError, ResourceLimitError
from .instancefile import InstanceFile, document_for_extension
from .premeasure import _parse_raw, _raw_add, validate_premeasure
from .sets import atoms_of, generate_ring


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(path: str) -> tuple[InstanceFile, "object"]:
    doc = InstanceFile.load(path)
    return doc, doc.build()


def _in_out(flag: bool) -> str:
    return "in" if flag else "out"


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_validate(args) -> int:
    doc = InstanceFile.load(args.file)
    ring = generate_ring(
        [doc.point_set(g) for g in doc.generators],
        force_algebra=doc.force_algebra,
        universe_size=doc.size,
    )
    table = {}
    for key, value in doc.measure:
        ps = doc.parse_set_key(key)
        if ps in table:
            raise InputError(f"duplicate measure key {key!r}")
        table[ps] = value
    if doc.measure_kind == "atoms":
        partition = atoms_of(ring)
        if {a.bits for a in partition} != {ps.bits for ps in table}:
            raise InputError(
                "measure.atoms keys must be exactly the ring atoms: "
                + ", ".join(doc.format_set(a) for a in partition)
            )
        raw = {ps: _parse_raw(v) for ps, v in table.items()}
        derived = {}
        for member in ring.members:
            total: Fraction | None = Fraction(0)
            for a, w in raw.items():
                if a.bits & member.bits:
                    total = _raw_add(total, w)
            derived[member] = "inf" if total is None else str(total)
        report = validate_premeasure(ring, derived)
    else:
        report = validate_premeasure(ring, table)
    payload = {
        "command": "validate",
        "ok": report.ok,
        "members": len(ring),
        "issues": [
            {
                "kind": issue.kind,
                "subjects": [doc.format_set(s) for s in issue.subjects],
                "detail": issue.detail,
            }
            for issue in report.issues
        ],
    }
    if report.ok:
        _emit(payload, args.json, f"ok: {len(ring)} members satisfy the pre-measure axioms")
        return 0
    lines = [f"not a pre-measure: {len(report.issues)} violation(s)"]
    lines += [f"  {issue}" for issue in report.issues]
    _emit(payload, args.json, "\n".join(lines))
    return 1


def _cmd_classify(args) -> int:
    doc, m = _load(args.file)
    subject = doc.parse_set_key(args.set)
    kwargs = {}
    if args.cap is not None:
        kwargs["universe_cap"] = args.cap
    c = classify(m, subject, **kwargs)

    def fmt(ps) -> str:
        return doc.format_set(ps)

    evidence: dict = {}
    if c.local_refuter is not None:
        evidence["local_refuter"] = {
            "probe": fmt(c.local_refuter.probe),
            "best_member": fmt(c.local_refuter.best_member),
            "best_distance": str(c.local_refuter.best_distance),
        }
    elif c.local_witnesses:
        evidence["local_witnesses"] = [
            {"probe": fmt(w.probe), "approximant": fmt(w.approximant)}
            for w in c.local_witnesses
        ]
    for name, refuter in (("ca_refuter", c.ca_refuter), ("ca_fin_refuter", c.ca_fin_refuter)):
        if refuter is not None:
            evidence[name] = {
                "probe": fmt(refuter.probe),
                "whole": str(refuter.whole),
                "part_in": str(refuter.part_in),
                "part_out": str(refuter.part_out),
            }
    if c.co_witness is not None:
        evidence["co_witness"] = fmt(c.co_witness)
    elif c.co_best is not None:
        evidence["co_best"] = {
            "member": fmt(c.co_best.best_member),
            "distance": str(c.co_best.best_distance),
        }
    if c.co_fin_refuter is not None:
        evidence["co_fin_refuter"] = fmt(c.co_fin_refuter)

    payload = {
        "command": "classify",
        "set": fmt(subject),
        "verdicts": c.verdicts(),
        "evidence": evidence,
        "probe_verdicts": [
            {
                "probe": fmt(v.probe),
                "outer": str(v.outer),
                "inner": str(v.inner),
                "measurable": v.measurable,
            }
            for v in c.probe_verdicts
        ],
    }
    lines = [f"set {fmt(subject)}"]
    lines.append(f"  locally approximable (M):        {_in_out(c.in_m)}")
    if c.local_refuter is not None:
        r = c.local_refuter
        lines.append(
            f"    refuter: probe {fmt(r.probe)}, best member {fmt(r.best_member)} "
            f"at distance {r.best_distance}"
        )
    lines.append(f"  splitting, all probes (M_Ca):    {_in_out(c.in_m_ca)}")
    if c.ca_refuter is not None:
        r = c.ca_refuter
        lines.append(
            f"    refuter: probe {fmt(r.probe)} has outer measure {r.whole} "
            f"but splits into {r.part_in} + {r.part_out}"
        )
    lines.append(f"  splitting, finite probes:        {_in_out(c.in_m_ca_fin)}")
    lines.append(f"  completion, global (M_Co):       {_in_out(c.in_m_co)}")
    if c.co_witness is not None:
        lines.append(f"    witness: member {fmt(c.co_witness)} at distance 0")
    elif c.co_best is not None:
        lines.append(
            f"    best member {fmt(c.co_best.best_member)} at distance {c.co_best.best_distance}"
        )
    lines.append(f"  completion, localized:           {_in_out(c.in_m_co_fin)}")
    measurable_probes = sum(1 for v in c.probe_verdicts if v.measurable)
    lines.append(
        f"  probe verdicts: measurable inside {measurable_probes} of "
        f"{len(c.probe_verdicts)} finite probes"
    )
    _emit(payload, args.json, "\n".join(lines))
    return 0


def _cmd_measure(args) -> int:
    doc, m = _load(args.file)
    subject = doc.parse_set_key(args.set)
    if args.inner:
        value = engine.inner_measure(m, subject)
        payload = {
            "command": "measure",
            "set": doc.format_set(subject),
            "kind": "inner",
            "value": str(value),
            "witness": None,
        }
        _emit(payload, args.json, f"inner measure of {doc.format_set(subject)} = {value}")
        return 0
    value, witness = engine.outer_measure(m, subject)
    payload = {
        "command": "measure",
        "set": doc.format_set(subject),
        "kind": "outer",
        "value": str(value),
        "witness": None
        if witness is None
        else {
            "cover": [doc.format_set(p) for p in witness.cover],
            "total": str(witness.total),
            "disjoint": witness.disjoint,
        },
    }
    text = f"outer measure of {doc.format_set(subject)} = {value}"
    if witness is not None:
        cover = ", ".join(doc.format_set(p) for p in witness.cover) or "(empty cover)"
        text += f"\n  attained by disjoint cover: {cover}"
    else:
        text += "\n  no ring member covers the set"
    _emit(payload, args.json, text)
    return 0


def _cmd_distance(args) -> int:
    doc, m = _load(args.file)
    e = doc.parse_set_key(args.e)
    f = doc.parse_set_key(args.f)
    if args.local is not None:
        probe = doc.parse_set_key(args.local)
        value = engine.local_distance(m, probe, e, f)
        probe_key = doc.format_set(probe)
        text = f"d_{probe_key}({doc.format_set(e)}, {doc.format_set(f)}) = {value}"
    else:
        probe_key = None
        value = engine.global_distance(m, e, f)
        text = f"d({doc.format_set(e)}, {doc.format_set(f)}) = {value}"
    payload = {
        "command": "distance",
        "e": doc.format_set(e),
        "f": doc.format_set(f),
        "probe": probe_key,
        "value": str(value),
    }
    _emit(payload, args.json, text)
    return 0


def _cmd_extend(args) -> int:
    doc, m = _load(args.file)
    kwargs = {}
    if args.cap is not None:
        kwargs["universe_cap"] = args.cap
    ext = extend(m, **kwargs)
    partition = atoms_of(ext.sigma_algebra)
    written = None
    if args.out:
        document_for_extension(ext, doc.universe).dump(args.out)
        written = args.out
    payload = {
        "command": "extend",
        "members": len(ext),
        "atoms": len(partition),
        "table": {
            doc.format_set(s): str(v) for s, v in zip(ext.members, ext.values)
        },
        "written": written,
    }
    lines = [
        f"extension: {len(ext)} measurable sets over {len(partition)} atoms"
    ]
    for s, v in zip(ext.members, ext.values):
        lines.append(f"  {doc.format_set(s)} -> {v}")
    if written:
        lines.append(f"written to {written}")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def _cmd_hull(args) -> int:
    doc, m = _load(args.file)
    subject = doc.parse_set_key(args.set)
    kwargs = {}
    if args.cap is not None:
        kwargs["universe_cap"] = args.cap
    hull, value = measurable_hull(m, subject, **kwargs)
    payload = {
        "command": "hull",
        "set": doc.format_set(subject),
        "hull": None if hull is None else doc.format_set(hull),
        "value": str(value),
    }
    if hull is None:
        text = f"no covering member: outer measure of {doc.format_set(subject)} is {value}"
    else:
        text = (
            f"hull of {doc.format_set(subject)} is {doc.format_set(hull)} "
            f"with measure {value}"
        )
    _emit(payload, args.json, text)
    return 0


def _cmd_unique(args) -> int:
    doc, m = _load(args.file)
    kwargs = {}
    if args.cap is not None:
        kwargs["universe_cap"] = args.cap
    report = uniqueness_report(m, **kwargs)
    payload = {
        "command": "unique",
        "unique": report.unique,
        "sigma_finite": report.sigma_finite,
        "finite_partition": None
        if report.finite_partition is None
        else [doc.format_set(p) for p in report.finite_partition],
        "free_atoms": [doc.format_set(a) for a in report.free_atoms],
        "alternative": None
        if report.alternative is None
        else {
            doc.format_set(s): str(v)
            for s, v in zip(report.extension.members, report.alternative)
        },
    }
    if report.unique:
        lines = ["unique: every extension agreeing on the ring equals this one"]
        if report.sigma_finite:
            parts = ", ".join(doc.format_set(p) for p in report.finite_partition)
            lines.append(f"  sigma-finite via partition {parts}")
        else:
            lines.append("  not sigma-finite, but every class atom is still forced")
    else:
        lines = ["non_unique: the extension is not determined by the ring values"]
        atoms = ", ".join(doc.format_set(a) for a in report.free_atoms)
        lines.append(f"  free atoms: {atoms}")
        changed = [
            f"{doc.format_set(s)} -> {alt}"
            for s, alt, base in zip(
                report.extension.members, report.alternative, report.extension.values
            )
            if alt != base
        ]
        lines.append("  an alternative differs at: " + "; ".join(changed[:6]))
    _emit(payload, args.json, "\n".join(lines))
    return 0


def _cmd_suite(args) -> int:
    report = testkit.run_suite(args.name, args.n, args.seed)
    payload = report.to_json_dict()
    failures = report.failures()
    lines = [
        f"suite {report.suite}: {report.count} instances, "
        f"{len(report.records)} checks, {'pass' if report.passed else 'FAIL'}"
    ]
    for record in failures[:10]:
        lines.append(
            f"  FAIL instance {record.instance} property {record.property}: "
            + json.dumps(record.witness, sort_keys=True)
        )
    if len(failures) > 10:
        lines.append(f"  ... and {len(failures) - 10} more failures")
    _emit(payload, args.json, "\n".join(lines))
    return 0 if report.passed else 1


def _cmd_interval_demo(args) -> int:
    period = intervals._to_endpoint(args.period)
    if not isinstance(period, Fraction):
        raise InputError("--period must be a finite rational")
    pattern = intervals.parse_interval_set(args.pattern)
    subject = intervals.WindowedSet.periodic(period, pattern)
    probes = [intervals.parse_interval_set(text) for text in args.probes]
    global_probes = (
        [intervals.parse_interval_set(text) for text in args.global_probes]
        if args.global_probes
        else probes
    )
    report = intervals.demo_local_approximability(subject, probes, global_probes)
    payload = {
        "command": "interval-demo",
        "subject": str(subject),
        "ok": report.ok,
        "entries": [
            {
                "probe": str(entry.probe),
                "witness": str(entry.witness),
                "distance": str(entry.distance),
            }
            for entry in report.entries
        ],
        "certificates": [
            {
                "member": str(member),
                "value": str(cert.value),
                "period": str(cert.period),
                "tail_mass_left": str(cert.tail_mass_left),
                "tail_mass_right": str(cert.tail_mass_right),
                "threshold_left": str(cert.threshold_left),
                "threshold_right": str(cert.threshold_right),
                "core": None if cert.core is None else str(cert.core),
            }
            for member, cert in report.certificates
        ],
    }
    lines = [f"subject: {subject}"]
    for entry in report.entries:
        lines.append(
            f"  probe {entry.probe}: witness {entry.witness}, distance {entry.distance}"
        )
    for member, cert in report.certificates:
        lines.append(f"  member {member}: {cert.describe()}")
    if not report.certificates:
        lines.append("  (no global certificates: pattern is empty or fills the period)")
    _emit(payload, args.json, "\n".join(lines))
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="measurext",
        description="Exact measure extension on finite set rings, with an interval-algebra demo.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_cap: bool = False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if with_cap:
            p.add_argument("--cap", type=int, default=None, help="override the universe-size cap")

    p = sub.add_parser("validate", help="check a file against the pre-measure axioms")
    p.add_argument("file")
    add_common(p)

    p = sub.add_parser("classify", help="decide the five measurability classes for a set")
    p.add_argument("file")
    p.add_argument("--set", required=True, help='subject set, e.g. "{1,3}"')
    add_common(p, with_cap=True)

    p = sub.add_parser("measure", help="outer (or inner) measure of a set")
    p.add_argument("file")
    p.add_argument("--set", required=True)
    p.add_argument("--inner", action="store_true", help="inner instead of outer measure")
    add_common(p)

    p = sub.add_parser("distance", help="approximation distance between two sets")
    p.add_argument("file")
    p.add_argument("--e", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--local", default=None, help="localize at this finite-measure member")
    add_common(p)

    p = sub.add_parser("extend", help="materialize the measurable class and its measure")
    p.add_argument("file")
    p.add_argument("--out", default=None, help="write the extension as an instance file")
    add_common(p, with_cap=True)

    p = sub.add_parser("hull", help="measurable hull of a set")
    p.add_argument("file")
    p.add_argument("--set", required=True)
    add_common(p, with_cap=True)

    p = sub.add_parser("unique", help="is the extension the only one agreeing on the ring?")
    p.add_argument("file")
    add_common(p, with_cap=True)

    p = sub.add_parser("suite", help="run a property suite")
    p.add_argument("name", help=f"one of: {', '.join(sorted(testkit.SUITES))}")
    p.add_argument("--n", type=int, default=200, help="instance count (default 200)")
    p.add_argument("--seed", type=int, default=7)
    add_common(p)

    p = sub.add_parser(
        "interval-demo",
        help="periodic-set demonstration: local approximability vs global failure",
    )
    p.add_argument("--period", default="2")
    p.add_argument("--pattern", default="(0,1]")
    p.add_argument(
        "--probes", action="append", required=True,
        help='bounded probe set, repeatable, e.g. "(-6,6]"',
    )
    p.add_argument(
        "--global-probes", action="append", default=None,
        help="members for the global certificates (default: the probes)",
    )
    add_common(p)
    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "classify": _cmd_classify,
    "measure": _cmd_measure,
    "distance": _cmd_distance,
    "extend": _cmd_extend,
    "hull": _cmd_hull,
    "unique": _cmd_unique,
    "suite": _cmd_suite,
    "interval-demo": _cmd_interval_demo,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its choice
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (InputError, PreconditionError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MeasureExtError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
