"""Acceptance gate: one test per shipped guarantee, with time budgets.

Each test drives the verify registry at the advertised sizes, asserts that
every law holds, and prints a single PASS line (visible under ``pytest -rA``
or ``-s``).  A failure surfaces the offending law's own report line.
"""

import time

from noncross.verify import run_suite, run_verify


def _drive(criterion, description, budget=None, _suites=(), **overrides):
    start = time.monotonic()
    reports = []
    for name in _suites:
        reports.extend(run_suite(name, **overrides))
    elapsed = time.monotonic() - start
    for r in reports:
        assert r.passed, f"criterion {criterion}: {r.line()}"
    assert reports, f"criterion {criterion}: no laws ran"
    if budget is not None:
        assert elapsed < budget, (
            f"criterion {criterion}: took {elapsed:.1f}s, budget {budget:.0f}s"
        )
    checked = sum(r.checked for r in reports)
    print(
        f"PASS criterion {criterion}: {description} "
        f"({len(reports)} laws, {checked} instances, {elapsed:.2f}s)"
    )


def test_criterion_01_enumeration_counts():
    _drive(
        1,
        "NCP(n) enumeration matches the Catalan counts for n <= 9 in under 5s",
        budget=5.0,
        _suites=("enumeration",),
        n=9,
        oracle_n=6,
    )


def test_criterion_02_partial_monoid():
    _drive(
        2,
        "unit, domain, and associativity laws over all triples for n <= 4 in under 60s",
        budget=60.0,
        _suites=("partial-monoid",),
        n=4,
    )


def test_criterion_03_kreweras_complements():
    _drive(
        3,
        "complement laws for n <= 6 (unique partner via oracle for n <= 5), "
        "bijectivity, strict order reversal",
        _suites=("kreweras",),
        n=6,
        oracle_n=5,
    )


def test_criterion_04_five_pictures():
    _drive(
        4,
        "tuples, k-preserving, multichains, complete and completing pictures "
        "agree and round-trip for n <= 3, k <= 3",
        _suites=("bijections",),
        n=3,
        k=3,
    )


def test_criterion_05_complement_identities():
    _drive(
        5,
        "relative complement and factorization identities, exhaustive for n <= 4",
        _suites=("relative-complements", "compose-identities"),
        n=4,
        pair_n=5,
        tuple_n=3,
        length=3,
    )


def test_criterion_06_coalgebra_laws():
    _drive(
        6,
        "coassociativity/counit for all four coalgebras (n <= 4, bound <= 60), "
        "the reduction morphism, and 100 random reduced evaluations",
        _suites=("coalgebras", "reduction-morphism", "reduced-algebra"),
        n=4,
        bound=60,
        trials=100,
    )


def test_criterion_07_moebius_inversion():
    _drive(
        7,
        "zeta * mu = mu * zeta = delta for n <= 5, inversion round trip, "
        "and integer mu against the classical function up to 100",
        _suites=("moebius",),
        n=5,
        bound=100,
    )


def test_criterion_08_decalage():
    _drive(
        8,
        "decalage comparison isomorphisms through degree 3, the degree-3 "
        "fiber-product squares, and unique lifting for both forgetful maps, "
        "in under 120s",
        budget=120.0,
        _suites=("decalage", "two-segal", "ulf"),
        n=4,
        bound=30,
        depth=3,
    )


def test_criterion_08b_two_segal_at_its_own_size():
    # The fiber-product squares are checked at n <= 3 (the suite builds
    # every bar up to its n argument).
    _drive(
        "8b",
        "degree-3 fiber-product squares for every bar up to NCP(3)",
        _suites=("two-segal",),
        n=3,
        bound=30,
        depth=3,
    )


def test_criterion_09_moment_cumulant():
    _drive(
        9,
        "semicircle moments m_2..m_10 against three independent pairing "
        "counts, free Poisson moments for n <= 8, and 100 random length-8 "
        "round trips",
        _suites=("moment-cumulant",),
        n=8,
        pairs_n=10,
        oracle_n=5,
        trials=100,
    )


def test_criterion_10_full_registry():
    start = time.monotonic()
    reports = run_verify(None)
    elapsed = time.monotonic() - start
    for r in reports:
        assert r.passed, f"criterion 10: {r.line()}"
    assert elapsed < 600.0, f"criterion 10: took {elapsed:.1f}s, budget 600s"
    checked = sum(r.checked for r in reports)
    print(
        f"PASS criterion 10: full registry at default sizes "
        f"({len(reports)} laws, {checked} instances, {elapsed:.2f}s)"
    )
