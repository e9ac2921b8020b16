"""Acceptance gate: ten exact criteria over a shared 200-instance pool.

Every criterion prints one ``PASS``/``FAIL`` line (visible under ``pytest -s``)
and then asserts.  All comparisons are exact — rational arithmetic everywhere,
no tolerances.  The pooled criteria share one seed, so criteria 2-8 quantify
over precisely the instances criterion 1 generated.
"""

import contextlib
import io
import json
import random
import time
from fractions import Fraction

import jsonschema

from measurext import intervals, testkit
from measurext.classify import class_maps, uniqueness_report
from measurext.cli import main
from measurext.premeasure import validate_premeasure
from measurext.quantity import ZERO
from measurext.schemas import CLI_OUTPUTS, INSTANCE_FILE, SUITE_REPORT

POOL_SEED = 1201
POOL_COUNT = 200


def _verdict(num: int, label: str, ok: bool, detail: str = "") -> None:
    mark = "PASS" if ok else "FAIL"
    tail = f" ({detail})" if detail else ""
    print(f"{mark} criterion {num}: {label}{tail}")
    assert ok, f"criterion {num}: {label}{tail}"


def _timed_suite(name: str):
    start = time.perf_counter()
    report = testkit.run_suite(name, POOL_COUNT, POOL_SEED)
    return report, time.perf_counter() - start


def test_criterion_01_extension_agreement():
    report, elapsed = _timed_suite("extension_agreement")
    _verdict(
        1,
        "outer measure restricted to the ring is the pre-measure, and is "
        "additive over 50 random disjoint member families per instance",
        report.passed and elapsed <= 60.0,
        f"{POOL_COUNT} instances, {len(report.records)} checks in {elapsed:.1f}s",
    )


def test_criterion_02_oracle_equivalence():
    report, elapsed = _timed_suite("outer_oracle_equiv")
    _verdict(
        2,
        "hull-route outer measure equals the exhaustive cover oracle and the "
        "table route on every subset of every pooled instance",
        report.passed and elapsed <= 60.0,
        f"{POOL_COUNT} instances in {elapsed:.1f}s",
    )


def test_criterion_03_sigma_algebra_closure():
    report, elapsed = _timed_suite("sigma_algebra_closure")
    _verdict(
        3,
        "the measurable class contains the ring and is closed under "
        "complement and pairwise union",
        report.passed,
        f"{POOL_COUNT} instances in {elapsed:.1f}s",
    )


def test_criterion_04_additivity_on_m():
    report, elapsed = _timed_suite("additivity_on_M")
    _verdict(
        4,
        "the extension is additive on all disjoint measurable pairs and on "
        "50 random disjoint triples per instance",
        report.passed,
        f"{POOL_COUNT} instances in {elapsed:.1f}s",
    )


def test_criterion_05_class_chain(f3):
    report, elapsed = _timed_suite("m_comp_chain")
    profiles_ok = "with_null_sets" in testkit.PROFILES
    maps = class_maps(f3)
    contained = all(not maps.m_co[s] or maps.m[s] for s in range(maps.size))
    strict = contained and bytes(maps.m) != bytes(maps.m_co)
    _verdict(
        5,
        "the four localized classes coincide, completion sits inside them "
        "(collapsing to equality when sigma-finite), and the infinite "
        "two-member fixture keeps the inclusion strict",
        report.passed and profiles_ok and strict,
        f"{POOL_COUNT} instances in {elapsed:.1f}s; strict fixture gap "
        f"{sum(maps.m)} vs {sum(maps.m_co)} sets",
    )


def test_criterion_06_uniqueness(f3):
    report, elapsed = _timed_suite("uniqueness")
    u = uniqueness_report(f3)
    ok_f3 = not u.unique and u.alternative is not None
    verified = False
    if ok_f3:
        table = dict(zip(u.extension.members, u.alternative))
        outcome = validate_premeasure(u.extension.sigma_algebra, table)
        extends = all(
            table[member] == value
            for member, value in zip(f3.ring.members, f3.values)
        )
        differs = tuple(table[s] for s in u.extension.members) != u.extension.values
        verified = outcome.ok and extends and differs
    _verdict(
        6,
        "every sigma-finite pooled instance is uniquely extended, and the "
        "infinite fixture is non-unique with a verified alternative measure",
        report.passed and ok_f3 and verified,
        f"{POOL_COUNT} instances in {elapsed:.1f}s",
    )


def test_criterion_07_measurable_hull():
    report, elapsed = _timed_suite("measurable_hull")
    _verdict(
        7,
        "every subset has a measurable hull: a containing measurable set "
        "whose measure equals the outer measure and is minimal",
        report.passed,
        f"{POOL_COUNT} instances in {elapsed:.1f}s",
    )


def test_criterion_08_distance_properties():
    report, elapsed = _timed_suite("distance_properties")
    samples_per_property = 6 * POOL_COUNT
    _verdict(
        8,
        "localized distances are symmetric pseudometrics respecting "
        "complements and unions, and the outer measure is monotone and "
        "subadditive",
        report.passed and samples_per_property >= 1000,
        f"{samples_per_property} sampled triples per property in {elapsed:.1f}s",
    )


def _random_bounded(rng: random.Random) -> intervals.IntervalSet:
    pieces = []
    for _ in range(rng.randint(1, 3)):
        lo = Fraction(rng.randint(-80, 80), rng.randint(1, 16))
        hi = lo + Fraction(rng.randint(1, 160), 16)
        pieces.append((lo, hi))
    return intervals.IntervalSet.from_pairs(pieces)


def _random_member(rng: random.Random) -> intervals.IntervalSet:
    pieces = list(_random_bounded(rng).components)
    if rng.random() < 0.3:
        pieces.append((intervals.NEG_INF, Fraction(rng.randint(-96, -80), 4)))
    if rng.random() < 0.3:
        pieces.append((Fraction(rng.randint(80, 96), 4), intervals.POS_INF))
    return intervals.IntervalSet.from_pairs(pieces)


def test_criterion_09_interval_demonstration():
    start = time.perf_counter()
    subject = intervals.WindowedSet.periodic(
        2, intervals.IntervalSet.from_pairs([(0, 1)])
    )
    rng = random.Random("acceptance:intervals")
    local_ok = 0
    for _ in range(50):
        probe = _random_bounded(rng)
        witness = intervals.window(subject, probe)
        if intervals.interval_local_distance(probe, subject, witness) == ZERO:
            local_ok += 1
    fixtures = [
        intervals.parse_interval_set("empty"),
        intervals.parse_interval_set("(0,5]"),
        intervals.parse_interval_set("(-10,10]"),
    ]
    members = [_random_member(rng) for _ in range(50)] + fixtures
    global_ok = sum(
        1
        for b in members
        if intervals.global_distance_certificate(subject, b).value.is_infinite()
    )
    elapsed = time.perf_counter() - start
    _verdict(
        9,
        "the period-2 half-open pattern is locally approximable at distance 0 "
        "on every bounded probe yet infinitely far from every algebra member",
        local_ok == 50 and global_ok == len(members) and elapsed <= 10.0,
        f"50/50 local, {global_ok}/{len(members)} global in {elapsed:.2f}s",
    )


def _cli_json(argv: list[str]) -> tuple[int, dict]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = main(argv + ["--json"])
    return code, json.loads(buf.getvalue())


def _cli(argv: list[str]) -> int:
    with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(
        io.StringIO()
    ):
        return main(argv)


def test_criterion_10_cli_contract(fixtures_dir, tmp_path):
    f1 = str(fixtures_dir / "f1.json")
    f2 = str(fixtures_dir / "f2.json")
    f3 = str(fixtures_dir / "f3.json")
    demo = json.loads((fixtures_dir / "interval_demo.json").read_text())
    out_path = tmp_path / "f2-extension.json"
    problems: list[str] = []

    def check(label, argv, schema, expect=0):
        code, payload = _cli_json(argv)
        if code != expect:
            problems.append(f"{label}: exit {code} != {expect}")
            return None
        try:
            jsonschema.validate(payload, schema)
        except jsonschema.ValidationError as exc:
            problems.append(f"{label}: schema violation {exc.message}")
        return payload

    check("validate", ["validate", f1], CLI_OUTPUTS["validate"])
    check("classify", ["classify", f1, "--set", "{1}"], CLI_OUTPUTS["classify"])
    check("measure", ["measure", f1, "--set", "{1,3}"], CLI_OUTPUTS["measure"])
    check(
        "measure-inner",
        ["measure", f1, "--set", "{1}", "--inner"],
        CLI_OUTPUTS["measure"],
    )
    check(
        "distance",
        ["distance", f1, "--e", "{1}", "--f", "{3}", "--local", "{1,2}"],
        CLI_OUTPUTS["distance"],
    )
    first = check(
        "extend", ["extend", f2, "--out", str(out_path)], CLI_OUTPUTS["extend"]
    )
    try:
        jsonschema.validate(json.loads(out_path.read_text()), INSTANCE_FILE)
    except (OSError, ValueError, jsonschema.ValidationError) as exc:
        problems.append(f"extend --out: written file invalid: {exc}")
    second = check("extend-reload", ["extend", str(out_path)], CLI_OUTPUTS["extend"])
    if first and second and first["table"] != second["table"]:
        problems.append("extend round-trip: reloaded extension differs")
    check("hull", ["hull", f1, "--set", "{1}"], CLI_OUTPUTS["hull"])
    unique_payload = check("unique", ["unique", f3], CLI_OUTPUTS["unique"])
    if unique_payload and unique_payload["unique"] is not False:
        problems.append("unique: infinite fixture should be non-unique (still exit 0)")
    check(
        "suite",
        ["suite", "ring_laws", "--n", "3", "--seed", "5"],
        SUITE_REPORT,
    )
    demo_argv = ["interval-demo", "--period", demo["period"], "--pattern", demo["pattern"]]
    for probe in demo["probes"]:
        demo_argv += ["--probes", probe]
    for member in demo["global_probes"]:
        demo_argv += ["--global-probes", member]
    check("interval-demo", demo_argv, CLI_OUTPUTS["interval-demo"])

    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "universe": ["1", "2"],
                "generators": [["1"]],
                "force_algebra": True,
                "measure": {"table": {"{}": "0", "{1}": "2", "{2}": "1", "{1,2}": "1"}},
            }
        )
    )
    if _cli(["validate", str(bad)]) != 1:
        problems.append("validate: axiom violations must exit 1")
    if _cli(["classify", f1, "--set", "{9}"]) != 2:
        problems.append("classify: unknown label must exit 2")
    if _cli(["suite", "nonexistent"]) != 2:
        problems.append("suite: unknown suite must exit 2")

    _verdict(
        10,
        "all nine subcommands round-trip the fixtures with conforming JSON "
        "and the documented exit statuses",
        not problems,
        "; ".join(problems) or "9 subcommands, 3 failure paths",
    )
