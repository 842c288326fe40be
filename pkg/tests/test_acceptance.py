"""Exit criteria; every check is exact (zero tolerance).

Each test records one PASS/FAIL line, repeated in the terminal summary.
"""

import time
from fractions import Fraction

import pytest

from cigenus import closed
from cigenus.cli import main
from cigenus.genus import Genus
from cigenus.oracle import genus_value_oracle
from cigenus.rational import parse_rational
from cigenus.residue import genus_value
from cigenus.space import Space
from cigenus.verify import (
    SweepConfig,
    random_rational,
    run_verify,
    sinh_identity_sides,
    sweep_spaces,
)

SWEEP = sweep_spaces(nmax=8, dmax=5, rmax=3)
EVEN = [sp for sp in SWEEP if sp.n % 2 == 0]
ACCEPTANCE_GENERA = [Genus.todd(), Genus.ahat(), Genus.signature(), Genus.euler(), Genus.ty(Fraction(1, 2)), Genus.ak(3)]
BUILTIN_GENERA = ACCEPTANCE_GENERA + [Genus.ak(2), Genus.ty(2)]


def mismatches(pairs):
    return [(label, a, b) for label, a, b in pairs if a != b]


def test_ac01_engine_equals_oracle(record_criterion):
    start = time.perf_counter()
    bad = mismatches(
        (f"{sp} {g.label}", genus_value(sp, g), genus_value_oracle(sp, g)) for sp in SWEEP for g in ACCEPTANCE_GENERA
    )
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record_criterion("AC1 engine≡oracle", ok, f"{len(SWEEP) * len(ACCEPTANCE_GENERA)} pairs in {elapsed:.1f}s")
    assert not bad, bad[:5]
    assert elapsed < 60


def test_ac02_ahat_closed_equals_residue(record_criterion):
    bad = mismatches((str(sp), closed.ahat_closed(sp), genus_value(sp, Genus.ahat())) for sp in EVEN)
    record_criterion("AC2 closed A-hat = residue A-hat", not bad, f"{len(EVEN)} even-n spaces")
    assert not bad, bad[:5]


def test_ac03_hypersurface(record_criterion):
    pairs = [
        (f"X_{2 * n}({d})", closed.ahat_hypersurface(n, d), closed.ahat_closed(Space(2 * n, (d,))))
        for n in range(5)
        for d in range(1, 9)
    ]
    spots = [
        ("A(X_2(4))", closed.ahat_closed(Space(2, (4,))), Fraction(2)),
        ("A(X_2(3))", closed.ahat_closed(Space(2, (3,))), Fraction(5, 8)),
        ("A(X_2(2))", closed.ahat_closed(Space(2, (2,))), Fraction(0)),
    ]
    bad = mismatches(pairs + spots)
    record_criterion("AC3 hypersurface product formula", not bad, f"{len(pairs)} sweep + {len(spots)} spot")
    assert not bad, bad


def test_ac04_iterated(record_criterion):
    cases = [sp for sp in EVEN if sp.r >= 2]
    bad = mismatches((str(sp), closed.ahat_iterated(sp), closed.ahat_closed(sp)) for sp in cases)
    bad += mismatches([("A(X_2(2,2))", closed.ahat_iterated(Space(2, (2, 2))), Fraction(1, 2))])
    record_criterion("AC4 iterated A-hat recursion", not bad, f"{len(cases)} spaces")
    assert not bad, bad[:5]


def test_ac05_sign_classification(record_criterion):
    cases = [sp for sp in EVEN if sp.spin]
    bad = []
    for sp in cases:
        a = closed.ahat_closed(sp)
        if not ((a == 0) == (sp.c1 > 0) and (a > 0) == (sp.c1 <= 0)):
            bad.append((str(sp), a, sp.c1))
        if closed.ahat_sign_class(sp) is not (closed.SignClass.ZERO if a == 0 else closed.SignClass.POSITIVE):
            bad.append((str(sp), "class", a))
    record_criterion("AC5 A-hat vanishes iff c1 > 0", not bad, f"{len(cases)} spin spaces")
    assert not bad, bad[:5]


def test_ac06_alpha(record_criterion):
    spin = [sp for sp in SWEEP if sp.spin]
    bad = []
    for sp in spin:
        alpha = closed.alpha_invariant(sp)
        if sp.n % 4 == 2:
            a = closed.ahat_closed(sp)
            if a.denominator != 1 or a.numerator % 2:
                bad.append((str(sp), "A-hat not even", a))
        if sp.n % 4 == 1:
            values = {closed.alpha_mod2_sum(sp, i) for i in range(sp.r)} | {int(alpha.value)}
            if len(values) != 1:
                bad.append((str(sp), "excluded-degree dependence", values))
    spots = [
        ("alpha(X_5(3))", closed.alpha_invariant(Space(5, (3,))).value, Fraction(0)),
        ("alpha(X_5(7))", closed.alpha_invariant(Space(5, (7,))).value, Fraction(1)),
    ]
    bad += mismatches(spots)
    record_criterion("AC6 alpha invariant", not bad, f"{len(spin)} spin spaces")
    assert not bad, bad[:5]


def test_ac07_todd(record_criterion):
    bad = []
    for sp in SWEEP:
        t1, t2, engine = closed.todd_t1(sp), closed.todd_t2(sp), genus_value(sp, Genus.todd())
        if not t1 == t2 == engine:
            bad.append((str(sp), t1, t2, engine))
    spots = [(f"Td(CP^{n})", genus_value(Space(n), Genus.todd()), Fraction(1)) for n in range(11)]
    spots += [
        ("Td(X_1(3))", closed.todd_t2(Space(1, (3,))), Fraction(0)),
        ("Td(X_2(4))", closed.todd_t2(Space(2, (4,))), Fraction(2)),
    ]
    bad += mismatches(spots)
    record_criterion("AC7 T1 = T2 = residue Todd", not bad, f"{len(SWEEP)} spaces")
    assert not bad, bad[:5]


def test_ac08_chi_y(record_criterion):
    bad = []
    for sp in SWEEP:
        euler = genus_value(sp, Genus.euler())
        checks = [
            ("y=0", genus_value(sp, Genus.ty(0)), genus_value(sp, Genus.todd())),
            ("y=1", genus_value(sp, Genus.ty(1)), genus_value(sp, Genus.signature())),
            ("y=-1", genus_value(sp, Genus.ty(-1)), euler),
            ("euler closed", closed.euler_closed(sp), euler),
        ]
        bad += mismatches((f"{sp} {label}", a, b) for label, a, b in checks)
    k3 = Space(2, (4,))
    bad += mismatches([
        ("chi(K3)", genus_value(k3, Genus.euler()), Fraction(24)),
        ("chi(X_1(3))", genus_value(Space(1, (3,)), Genus.euler()), Fraction(0)),
        ("tau(K3)", genus_value(k3, Genus.signature()), Fraction(-16)),
    ])
    record_criterion("AC8 chi_y interpolation", not bad, f"{len(SWEEP)} spaces")
    assert not bad, bad[:5]


def test_ac09_ak_bridges(record_criterion):
    bad = []
    for sp in SWEEP:
        bad += mismatches([
            (f"{sp} A1", closed.ak_closed(sp, 1), genus_value(sp, Genus.todd())),
            (f"{sp} A2", closed.ak_closed(sp, 2), 2**sp.n * genus_value(sp, Genus.ahat())),
        ])
    record_criterion("AC9 A_1 = Todd, A_2 = 2^n A-hat", not bad, f"{len(SWEEP)} spaces")
    assert not bad, bad[:5]


def test_ac10_sinh_addition(record_criterion):
    import random

    rng = random.Random(SweepConfig.seed)
    bad = []
    for _ in range(20):
        a, b, c = (random_rational(rng) for _ in range(3))
        lhs, rhs = sinh_identity_sides(a, b, c, 40)
        assert lhs.order == rhs.order == 40
        if lhs != rhs:
            bad.append((a, b, c))
    record_criterion("AC10 sinh addition identity", not bad, "20 triples, order 40")
    assert not bad


def test_ac11_structural(record_criterion):
    from itertools import permutations

    bad = []
    for sp in SWEEP:
        for g in BUILTIN_GENERA:
            base = genus_value(sp, g)
            for p in set(permutations(sp.degrees)):
                if genus_value(sp.with_degrees(p), g) != base:
                    bad.append((str(sp), p, g.label))
            if genus_value(sp.with_degrees(sp.degrees + (1,)), g) != base:
                bad.append((str(sp), "+1", g.label))
        if sp.n % 2 and genus_value(sp, Genus.ahat()) != 0:
            bad.append((str(sp), "odd A-hat"))
    record_criterion("AC11 permutation, degree-1, odd A-hat", not bad, f"{len(SWEEP)} spaces")
    assert not bad, bad[:5]


def test_ac12_cli_contract(record_criterion, capsys):
    code = main(["verify", "--all"])
    _, err = capsys.readouterr()
    verify_ok = code == 0

    argv = ["table", "-n", "0..5", "--dmax", "4", "--rmax", "2", "--genus", "todd,ahat,signature,euler", "--format", "jsonl"]
    main(argv)
    first, _ = capsys.readouterr()
    main(argv)
    second, _ = capsys.readouterr()
    import json

    records = [json.loads(line) for line in first.splitlines()]
    values_ok = all(isinstance(r["value"], str) and parse_rational(r["value"]) is not None for r in records)
    floats = any(isinstance(v, float) for r in records for v in r.values())
    ok = verify_ok and first == second and values_ok and not floats
    record_criterion("AC12 CLI contract", ok, err.strip().split(" (")[0])
    assert verify_ok, err
    assert first == second
    assert values_ok and not floats


def test_full_verify_report_has_no_failures():
    reports = run_verify(SweepConfig(nmax=4, dmax=3, rmax=2))
    assert reports and all(r.passed for r in reports)
