"""Exhaustive desk-scale checks of every law the package relies on.

Each suite re-verifies a family of identities over complete enumerations at
small sizes (plus seeded random sampling where a law quantifies over
function spaces).  Expected values come from the independent brute-force
implementations in oracles.py or from closed formulas, never from the code
under test.  The CLI exposes the registry as `noncross verify`.

A suite returns a list of VerifyReport, one per law, each carrying the
parameters used, the number of instances checked, and the first
counterexample found (None when the law held everywhere).
"""

import inspect
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from random import Random

from . import backend, oracles
from .incidence import (
    IncidenceFunction,
    convolve,
    cumulants_from_moments,
    delta_unit,
    divisibility_coalgebra,
    interval_complement,
    is_reduced,
    moebius,
    moments_from_cumulants,
    multiplicative_coalgebra,
    ncp_compose_coalgebra,
    ncp_interval_coalgebra,
    reduced_lift,
    reduced_restriction,
    zeta,
)
from .kreweras import (
    complete_tuple,
    completing_to_tuple,
    compose,
    compose_fold,
    compose_many,
    kpreserving_to_tuple,
    kreweras,
    kreweras_order,
    multichain_to_tuple,
    relative_kreweras,
    tuple_to_completing,
    tuple_to_kpreserving,
    tuple_to_multichain,
)
from .lattice import (
    Interval,
    count_ncp,
    divides,
    enumerate_ncp,
    interval_elements,
    iter_ncp,
    join,
    join_many,
    meet,
    meet_many,
    relative_sublattice,
)
from .partition import NoncrossingPartition, one, zero
from .shuffle import (
    consecutive_blocks,
    enumerate_k_completing,
    is_admissible,
    is_admissible_tuple,
    is_k_completing,
    is_k_preserving,
    perfect_shuffle,
    power,
    root,
    shuffle_many,
)
from .simplicial import (
    bar_of_integers,
    bar_of_ncp,
    check_iso,
    check_simplicial_identities,
    check_simplicial_map,
    check_two_segal,
    check_ulf,
    dec_map,
    integer_decalage_comparison,
    lower_decalage,
    ncp_decalage_comparison,
    nerve_of_divisibility,
    nerve_of_ncp,
)

DEFAULT_SEED = 1729


@dataclass
class VerifyReport:
    suite: str
    law: str
    params: dict = field(default_factory=dict)
    checked: int = 0
    counterexample: str = None

    @property
    def passed(self):
        return self.counterexample is None

    def line(self):
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{'PASS' if self.passed else 'FAIL'} {self.suite}: {self.law}"
        tail = f" [{ps}] ({self.checked} checked)"
        if self.passed:
            return head + tail
        return head + tail + f"\n     counterexample: {self.counterexample}"

    def to_json(self):
        return {
            "suite": self.suite,
            "law": self.law,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


def _scan(suite, law, params, cases):
    """Exhaust cases (None for a pass, a description string for a failure);
    stop at the first failure."""
    checked = 0
    for bad in cases:
        checked += 1
        if bad is not None:
            return VerifyReport(suite, law, dict(params), checked, bad)
    return VerifyReport(suite, law, dict(params), checked)


def _from_check(suite, report, params):
    """Adapt a simplicial CheckReport."""
    bad = None
    if report.failures:
        bad = f"{report.subject}: {report.failures[0]}"
    return VerifyReport(suite, f"{report.law} of {report.subject}", dict(params), report.checked, bad)


# --------------------------------------------------------------------------
# Enumeration and lattice structure


def suite_enumeration(n=9, oracle_n=6):
    s, p = "enumeration", {"n": n, "oracle_n": oracle_n}
    reports = [
        _scan(
            s,
            "counts match binom(2n, n)/(n + 1)",
            p,
            (
                None
                if len(enumerate_ncp(m)) == oracles.catalan(m) == count_ncp(m)
                else f"n={m}: {len(enumerate_ncp(m))} enumerated"
                for m in range(n + 1)
            ),
        ),
        _scan(
            s,
            "enumeration is strictly sorted by block tuples",
            p,
            (
                None
                if all(
                    a.blocks < b.blocks
                    for a, b in zip(enumerate_ncp(m), enumerate_ncp(m)[1:])
                )
                else f"n={m} is out of order"
                for m in range(n + 1)
            ),
        ),
        _scan(
            s,
            "streaming and list enumerations agree",
            p,
            (
                None if list(iter_ncp(m)) == enumerate_ncp(m) else f"n={m} differs"
                for m in range(n + 1)
            ),
        ),
    ]

    def oracle_cases():
        for m in range(oracle_n + 1):
            got = sorted(q.blocks for q in enumerate_ncp(m))
            want = sorted(oracles.noncrossing_partitions(m))
            yield None if got == want else f"n={m}: enumerations disagree"

    reports.append(
        _scan(s, "agrees with filtering all set partitions by quadruple scan", p, oracle_cases())
    )
    return reports


def suite_lattice(n=4, bound_n=5):
    s, p = "lattice", {"n": n, "bound_n": bound_n}
    reports = []

    def order_cases():
        for m in range(bound_n + 1):
            for a in enumerate_ncp(m):
                yield None if divides(a, a) else f"not reflexive at {a}"
            for a, b in product(enumerate_ncp(m), repeat=2):
                if divides(a, b) and divides(b, a) and a != b:
                    yield f"antisymmetry fails at {a}, {b}"
                else:
                    yield None

    reports.append(_scan(s, "refinement is reflexive and antisymmetric", p, order_cases()))

    def transitive_cases():
        for m in range(n + 1):
            for a, b, c in product(enumerate_ncp(m), repeat=3):
                if divides(a, b) and divides(b, c) and not divides(a, c):
                    yield f"{a} | {b} | {c} but not {a} | {c}"
                else:
                    yield None

    reports.append(_scan(s, "refinement is transitive", p, transitive_cases()))

    def glb_cases():
        for m in range(n + 1):
            elems = enumerate_ncp(m)
            for a, b in product(elems, repeat=2):
                c = meet(a, b)
                if not (divides(c, a) and divides(c, b)):
                    yield f"meet({a}, {b}) = {c} is not a lower bound"
                    continue
                if any(
                    divides(d, a) and divides(d, b) and not divides(d, c) for d in elems
                ):
                    yield f"meet({a}, {b}) = {c} is not greatest"
                else:
                    yield None

    reports.append(_scan(s, "meet is the greatest lower bound", p, glb_cases()))

    def lub_cases():
        for m in range(n + 1):
            elems = enumerate_ncp(m)
            for a, b in product(elems, repeat=2):
                c = join(a, b)
                if not (divides(a, c) and divides(b, c)):
                    yield f"join({a}, {b}) = {c} is not an upper bound"
                    continue
                if any(
                    divides(a, d) and divides(b, d) and not divides(c, d) for d in elems
                ):
                    yield f"join({a}, {b}) = {c} is not least"
                else:
                    yield None

    reports.append(_scan(s, "join is the least upper bound", p, lub_cases()))

    def oracle_cases():
        for m in range(min(n, 4) + 1):
            for a, b in product(enumerate_ncp(m), repeat=2):
                if meet(a, b).blocks != oracles.meet_by_scan(a.blocks, b.blocks, m):
                    yield f"meet({a}, {b}) disagrees with the scan"
                elif join(a, b).blocks != oracles.join_by_scan(a.blocks, b.blocks, m):
                    yield f"join({a}, {b}) disagrees with the scan"
                else:
                    yield None

    reports.append(_scan(s, "meet and join agree with the whole-lattice scan", p, oracle_cases()))

    def bound_cases():
        for m in range(bound_n + 1):
            z, o = zero(m), one(m)
            for a in enumerate_ncp(m):
                ok = (
                    divides(z, a)
                    and divides(a, o)
                    and meet(a, o) == a
                    and join(a, z) == a
                    and meet(a, z) == z
                    and join(a, o) == o
                )
                yield None if ok else f"bound laws fail at {a}"

    reports.append(_scan(s, "bottom and top behave as lattice bounds", p, bound_cases()))

    def fold_cases():
        for m in range(min(n, 3) + 1):
            for t in product(enumerate_ncp(m), repeat=3):
                if meet_many(t) != meet(meet(t[0], t[1]), t[2]):
                    yield f"meet_many disagrees at {t}"
                elif join_many(t) != join(join(t[0], t[1]), t[2]):
                    yield f"join_many disagrees at {t}"
                else:
                    yield None

    reports.append(_scan(s, "n-ary meet and join fold pairwise", p, fold_cases()))
    return reports


def suite_relative_lattice(n=5):
    s, p = "relative-lattice", {"n": n}
    reports = []

    def fixed_sets(m):
        seen = set()
        for q in enumerate_ncp(m):
            for r in range(1, len(q.blocks) + 1):
                for sub in combinations(q.blocks, r):
                    if sub not in seen:
                        seen.add(sub)
                        yield sub

    def member_cases():
        for m in range(1, n + 1):
            elems = enumerate_ncp(m)
            for sub in fixed_sets(m):
                fixed = set(sub)
                _, members = relative_sublattice(m, sub)
                want = [q for q in elems if fixed <= set(q.blocks)]
                yield None if list(members) == want else f"n={m}, fixed {sub}: members differ"

    reports.append(
        _scan(s, "members are exactly the partitions with the fixed blocks", p, member_cases())
    )

    def count_cases():
        for m in range(1, n + 1):
            for sub in fixed_sets(m):
                rs, members = relative_sublattice(m, sub)
                want = oracles.catalan(len(rs.free))
                for _bi, _gi, cell in rs.gaps:
                    want *= oracles.catalan(len(cell))
                yield (
                    None
                    if len(members) == want
                    else f"n={m}, fixed {sub}: {len(members)} members, formula {want}"
                )

    reports.append(
        _scan(s, "the member count is a product of Catalan numbers over cells", p, count_cases())
    )

    def cell_cases():
        for m in range(1, n + 1):
            for sub in fixed_sets(m):
                rs, _ = relative_sublattice(m, sub)
                cells = [rs.free] + [cell for _bi, _gi, cell in rs.gaps]
                flat = sorted(x for cell in cells for x in cell)
                loose = sorted(set(range(1, m + 1)) - {x for blk in sub for x in blk})
                yield None if flat == loose else f"n={m}, fixed {sub}: cells do not partition"

    reports.append(_scan(s, "free and gap cells partition the loose elements", p, cell_cases()))

    def extreme_cases():
        for m in range(1, n + 1):
            for sub in fixed_sets(m):
                rs, members = relative_sublattice(m, sub)
                ok = (
                    rs.bottom in members
                    and rs.top in members
                    and all(divides(rs.bottom, q) and divides(q, rs.top) for q in members)
                )
                yield None if ok else f"n={m}, fixed {sub}: extremes wrong"

    reports.append(_scan(s, "bottom and top bound every member", p, extreme_cases()))
    return reports


# --------------------------------------------------------------------------
# Shuffles, powers, admissibility


def suite_powers(n=6, k=3):
    s, p = "powers", {"n": n, "k": k}
    reports = [
        _scan(
            s,
            "the root inverts the power",
            p,
            (
                None if root(power(q, e), e) == q else f"{q} to the {e}"
                for m in range(n + 1)
                for q in enumerate_ncp(m)
                for e in range(1, k + 1)
            ),
        ),
        _scan(
            s,
            "powers multiply in the exponent",
            p,
            (
                None if power(power(q, i), j) == power(q, i * j) else f"{q}, {i}, {j}"
                for m in range(min(n, 4) + 1)
                for q in enumerate_ncp(m)
                for i in range(1, k + 1)
                for j in range(1, k + 1)
            ),
        ),
    ]

    def embed_cases():
        for m in range(min(n, 4) + 1):
            for a, b in product(enumerate_ncp(m), repeat=2):
                for e in range(2, k + 1):
                    if divides(a, b) != divides(power(a, e), power(b, e)):
                        yield f"{a}, {b}, exponent {e}"
                    else:
                        yield None

    reports.append(_scan(s, "the power map is an order embedding", p, embed_cases()))

    def domain_cases():
        for e in range(2, k + 1):
            for j in range(0, n // e + 1):
                m = e * j
                cons = consecutive_blocks(m, e)
                for a in enumerate_ncp(m):
                    if (root(a, e) is not None) != divides(cons, a):
                        yield f"{a}, exponent {e}"
                    else:
                        yield None

    reports.append(
        _scan(s, "a root exists exactly when the consecutive blocks refine", p, domain_cases())
    )

    def section_cases():
        for e in range(2, k + 1):
            for j in range(0, n // e + 1):
                for a in enumerate_ncp(e * j):
                    r = root(a, e)
                    if r is not None and power(r, e) != a:
                        yield f"{a}, exponent {e}"
                    else:
                        yield None

    reports.append(_scan(s, "the power of an existing root returns the input", p, section_cases()))
    return reports


def suite_admissibility(n=4, tuple_n=3, length=3):
    s, p = "admissibility", {"n": n, "tuple_n": tuple_n, "length": length}
    reports = []

    def oracle_cases():
        for m in range(1, n + 1):
            for a, b in product(enumerate_ncp(m), repeat=2):
                want = oracles.admissible([a.blocks, b.blocks], [m, m], m)
                yield None if is_admissible(a, b, m) == want else f"{a} with {b}"

    reports.append(_scan(s, "admissibility matches the quadruple-scan oracle", p, oracle_cases()))

    reports.append(
        _scan(
            s,
            "the shuffle is noncrossing exactly on admissible pairs",
            p,
            (
                None
                if perfect_shuffle(a, b, m).is_noncrossing() == is_admissible(a, b, m)
                else f"{a} with {b}"
                for m in range(1, n + 1)
                for a, b in product(enumerate_ncp(m), repeat=2)
            ),
        )
    )

    def pairwise_cases():
        for m in range(1, tuple_n + 1):
            for ln in range(2, length + 1):
                for t in product(enumerate_ncp(m), repeat=ln):
                    want = all(
                        is_admissible(t[i], t[j], m)
                        for i in range(ln)
                        for j in range(i + 1, ln)
                    )
                    yield None if is_admissible_tuple(t, m) == want else f"{t}"

    reports.append(
        _scan(s, "a tuple is admissible exactly when every ordered pair is", p, pairwise_cases())
    )

    def count_cases():
        for m in range(1, n + 1):
            got = sum(
                1
                for a, b in product(enumerate_ncp(m), repeat=2)
                if is_admissible(a, b, m)
            )
            want = oracles.fuss_catalan(m, 2)
            yield None if got == want else f"n={m}: {got} admissible pairs, formula {want}"

    reports.append(
        _scan(s, "admissible pairs are counted by binom(3n, n)/(2n + 1)", p, count_cases())
    )

    def tuple_count_cases():
        for m in range(1, tuple_n + 1):
            for ln in range(1, length + 1):
                got = sum(
                    1
                    for t in product(enumerate_ncp(m), repeat=ln)
                    if is_admissible_tuple(t, m)
                )
                want = oracles.fuss_catalan(m, ln)
                yield None if got == want else f"n={m}, length {ln}: {got} vs {want}"

    reports.append(
        _scan(s, "admissible tuples are counted by binom((k+1)n, n)/(kn + 1)", p, tuple_count_cases())
    )
    return reports


def suite_shuffle_order(n=4, tuple_n=3):
    s, p = "shuffle-order", {"n": n, "tuple_n": tuple_n}
    reports = [
        _scan(
            s,
            "the shuffle of a single operand is the operand",
            p,
            (
                None if shuffle_many([q], m) == q else f"{q}"
                for m in range(1, n + 2)
                for q in enumerate_ncp(m)
            ),
        )
    ]

    def assoc_cases():
        for m in range(1, tuple_n + 1):
            for a, b, c in product(enumerate_ncp(m), repeat=3):
                flat = shuffle_many([a, b, c], m)
                left = shuffle_many([shuffle_many([a, b], m), c], m)
                right = shuffle_many([a, shuffle_many([b, c], m)], m)
                yield None if flat == left == right else f"{a}, {b}, {c}"

    reports.append(_scan(s, "nested shuffles flatten", p, assoc_cases()))

    def monotone_cases():
        for m in range(1, n + 1):
            elems = enumerate_ncp(m)
            pairs = [(a, b) for a in elems for b in elems if divides(a, b)]
            for (a, a2), (b, b2) in product(pairs, repeat=2):
                if not divides(shuffle_many([a, b], m), shuffle_many([a2, b2], m)):
                    yield f"({a} | {a2}) with ({b} | {b2})"
                else:
                    yield None

    reports.append(_scan(s, "the shuffle is monotone in both arguments", p, monotone_cases()))

    def strict_cases():
        for m in range(1, tuple_n + 1):
            seen = {}
            for a, b in product(enumerate_ncp(m), repeat=2):
                sh = shuffle_many([a, b], m)
                if sh in seen:
                    yield f"{seen[sh]} and ({a}, {b}) shuffle alike"
                else:
                    seen[sh] = (a, b)
                    yield None

    reports.append(_scan(s, "the shuffle is injective on pairs", p, strict_cases()))
    return reports


# --------------------------------------------------------------------------
# The partial product and its identities


def suite_partial_monoid(n=4):
    s, p = "partial-monoid", {"n": n}
    reports = [
        _scan(
            s,
            "the discrete partition is a two-sided unit",
            p,
            (
                None
                if compose(zero(m), q) == q and compose(q, zero(m)) == q
                else f"{q}"
                for m in range(n + 2)
                for q in enumerate_ncp(m)
            ),
        ),
        _scan(
            s,
            "the product is defined exactly on admissible pairs",
            p,
            (
                None
                if (compose(a, b) is not None) == is_admissible(a, b, m)
                else f"{a} with {b}"
                for m in range(1, n + 1)
                for a, b in product(enumerate_ncp(m), repeat=2)
            ),
        ),
    ]

    def assoc_cases():
        for m in range(1, n + 1):
            for a, b, c in product(enumerate_ncp(m), repeat=3):
                ab, bc = compose(a, b), compose(b, c)
                lhs = compose(ab, c) if ab is not None else None
                rhs = compose(a, bc) if bc is not None else None
                tri = is_admissible_tuple((a, b, c), m)
                if (lhs is not None) != tri or (rhs is not None) != tri:
                    yield f"definedness mismatch at {a}, {b}, {c}"
                elif lhs != rhs:
                    yield f"{a}, {b}, {c}: {lhs} vs {rhs}"
                elif tri and lhs != compose_many((a, b, c)):
                    yield f"{a}, {b}, {c}: fold disagrees with the closed form"
                else:
                    yield None

    reports.append(
        _scan(s, "the product is associative with matching domains", p, assoc_cases())
    )

    def monotone_cases():
        for m in range(1, n + 1):
            elems = enumerate_ncp(m)
            for a in elems:
                partners = [b for b in elems if is_admissible(a, b, m)]
                for b, b2 in product(partners, repeat=2):
                    if not divides(b, b2):
                        continue
                    x, y = compose(a, b), compose(a, b2)
                    if not divides(x, y):
                        yield f"{a}: {b} | {b2} but {x} does not divide {y}"
                    elif b != b2 and x == y:
                        yield f"{a}: {b} < {b2} collapse to {x}"
                    else:
                        yield None

    reports.append(
        _scan(s, "the product is strictly monotone in the right factor", p, monotone_cases())
    )

    def left_monotone_cases():
        for m in range(1, n + 1):
            elems = enumerate_ncp(m)
            for b in elems:
                lefts = [a for a in elems if is_admissible(a, b, m)]
                for a, a2 in product(lefts, repeat=2):
                    if not divides(a, a2):
                        continue
                    x, y = compose(a, b), compose(a2, b)
                    if not divides(x, y):
                        yield f"{b}: {a} | {a2} but {x} does not divide {y}"
                    elif a != a2 and x == y:
                        yield f"{b}: {a} < {a2} collapse to {x}"
                    else:
                        yield None

    reports.append(
        _scan(s, "the product is strictly monotone in the left factor", p, left_monotone_cases())
    )

    def growth_cases():
        for m in range(1, n + 1):
            for a, b in product(enumerate_ncp(m), repeat=2):
                c = compose(a, b)
                if c is None:
                    yield None
                elif divides(a, c) and divides(b, kreweras(a)):
                    yield None
                else:
                    yield f"{a}, {b}"

    reports.append(
        _scan(
            s,
            "factors divide the product and right factors divide the complement",
            p,
            growth_cases(),
        )
    )
    return reports


def suite_compose_identities(n=4, tuple_n=3, length=3):
    s, p = "compose-identities", {"n": n, "tuple_n": tuple_n, "length": length}
    reports = []

    def sparse_gluer(m):
        blocks = [(3 * i - 1, 3 * i) for i in range(1, m + 1)]
        return NoncrossingPartition(3 * m, blocks + [(3 * i - 2,) for i in range(1, m + 1)])

    def alt_cases():
        for m in range(1, n + 1):
            cons3 = consecutive_blocks(3 * m, 3)
            sparse = sparse_gluer(m)
            for a, b in product(enumerate_ncp(m), repeat=2):
                want = compose(a, b)
                if want is None:
                    yield None
                    continue
                left = root(join(shuffle_many([power(a, 2), b], m).to_noncrossing(), cons3), 3)
                thin = root(join(shuffle_many([power(a, 2), b], m).to_noncrossing(), sparse), 3)
                rght = root(join(shuffle_many([a, power(b, 2)], m).to_noncrossing(), cons3), 3)
                if left != want:
                    yield f"{a}, {b}: squared-left form gives {left}"
                elif thin != want:
                    yield f"{a}, {b}: sparse gluing gives {thin}"
                elif rght != want:
                    yield f"{a}, {b}: squared-right form gives {rght}"
                else:
                    yield None

    reports.append(
        _scan(s, "the three squared reformulations agree with the product", p, alt_cases())
    )

    def fold_cases():
        for m in range(1, tuple_n + 1):
            for ln in range(2, length + 1):
                for t in product(enumerate_ncp(m), repeat=ln):
                    if not is_admissible_tuple(t, m):
                        continue
                    if compose_many(t) != compose_fold(t):
                        yield f"{t}"
                    else:
                        yield None

    reports.append(
        _scan(s, "the one-shot k-fold product equals the pairwise fold", p, fold_cases())
    )
    return reports


# --------------------------------------------------------------------------
# Complements


def suite_kreweras(n=6, oracle_n=5):
    s, p = "kreweras", {"n": n, "oracle_n": oracle_n}
    reports = []

    def unique_cases():
        for m in range(n + 1):
            elems = enumerate_ncp(m)
            top = one(m)
            for a in elems:
                partners = [b for b in elems if compose(a, b) == top]
                if partners != [kreweras(a)]:
                    yield f"{a}: partners {partners}"
                else:
                    yield None

    reports.append(
        _scan(s, "the complement is the unique partner with full product", p, unique_cases())
    )

    def oracle_cases():
        for m in range(1, oracle_n + 1):
            for a in enumerate_ncp(m):
                want = oracles.maximal_admissible_partner(a.blocks, m)
                yield None if kreweras(a).blocks == want else f"{a}"

    reports.append(
        _scan(s, "the complement is the coarsest admissible partner", p, oracle_cases())
    )

    def ideal_cases():
        for m in range(1, min(n, 5) + 1):
            elems = enumerate_ncp(m)
            for a in elems:
                ka = kreweras(a)
                for b in elems:
                    if is_admissible(a, b, m) != divides(b, ka):
                        yield f"{a} with {b}"
                    else:
                        yield None

    reports.append(
        _scan(
            s,
            "admissible right partners are exactly the divisors of the complement",
            p,
            ideal_cases(),
        )
    )

    reports.append(
        _scan(
            s,
            "the complement swaps bottom and top",
            p,
            (
                None
                if kreweras(zero(m)) == one(m) and kreweras(one(m)) == zero(m)
                else f"n={m}"
                for m in range(n + 1)
            ),
        )
    )

    def order_cases():
        for m in range(1, n + 1):
            o = kreweras_order(m)
            yield None if (2 * m) % o == 0 else f"n={m}: order {o} does not divide {2 * m}"

    reports.append(
        _scan(s, "the order of the complement divides 2n", p, order_cases())
    )

    def bijective_cases():
        for m in range(n + 1):
            elems = enumerate_ncp(m)
            image = {kreweras(a) for a in elems}
            yield None if len(image) == len(elems) else f"n={m}: complement not injective"

    reports.append(_scan(s, "the complement is a bijection", p, bijective_cases()))

    def antitone_cases():
        for m in range(1, n + 1):
            table = {a: kreweras(a) for a in enumerate_ncp(m)}
            for a, b in product(table, repeat=2):
                if not divides(a, b):
                    yield None
                elif not divides(table[b], table[a]):
                    yield f"{a} | {b}"
                elif a != b and table[a] == table[b]:
                    yield f"{a} < {b} but the complements coincide"
                else:
                    yield None

    reports.append(_scan(s, "the complement is strictly order reversing", p, antitone_cases()))
    return reports


def suite_relative_complements(n=4, pair_n=5):
    s, p = "relative-complements", {"n": n, "pair_n": pair_n}
    reports = []

    def compose_cases():
        for m in range(pair_n + 1):
            for b in enumerate_ncp(m):
                for a in interval_elements(Interval(zero(m), b)):
                    if compose(a, relative_kreweras(a, b)) != b:
                        yield f"[{a}, {b}]"
                    else:
                        yield None

    reports.append(
        _scan(s, "the relative complement composes back to the upper bound", p, compose_cases())
    )

    def unique_cases():
        for m in range(n + 1):
            elems = enumerate_ncp(m)
            for b in elems:
                for a in elems:
                    if not divides(a, b):
                        continue
                    partners = [c for c in elems if compose(a, c) == b]
                    if partners != [relative_kreweras(a, b)]:
                        yield f"[{a}, {b}]: partners {partners}"
                    else:
                        yield None

    reports.append(
        _scan(s, "the relative complement is the unique cofactor", p, unique_cases())
    )

    def boundary_cases():
        for m in range(pair_n + 1):
            for b in enumerate_ncp(m):
                ok = (
                    relative_kreweras(zero(m), b) == b
                    and relative_kreweras(b, b) == zero(m)
                    and relative_kreweras(b, one(m)) == kreweras(b)
                )
                yield None if ok else f"{b}"

    reports.append(
        _scan(
            s,
            "relative to bottom, itself, and top it gives b, 0, and the complement",
            p,
            boundary_cases(),
        )
    )

    def triple_cases():
        for m in range(1, n + 1):
            for t in product(enumerate_ncp(m), repeat=3):
                if not is_admissible_tuple(t, m):
                    continue
                al, be, ga = t
                ab = compose(al, be)
                abg = compose_many(t)
                if relative_kreweras(ab, abg) != ga:
                    yield f"{t}: cancellation fails"
                    continue
                inner = relative_kreweras(al, abg)
                outer = relative_kreweras(al, ab)
                if not divides(outer, inner):
                    yield f"{t}: iterated complements not nested"
                elif relative_kreweras(outer, inner) != ga:
                    yield f"{t}: iterated complement identity fails"
                else:
                    yield None

    reports.append(
        _scan(s, "products cancel through relative complements", p, triple_cases())
    )

    def factor_cases():
        for m in range(1, n + 1):
            for a, b in product(enumerate_ncp(m), repeat=2):
                ab = compose(a, b)
                if ab is None:
                    yield None
                elif compose(b, kreweras(ab)) != kreweras(a):
                    yield f"{a}, {b}"
                else:
                    yield None

    reports.append(
        _scan(
            s,
            "the complement of a factor is the cofactor times the product complement",
            p,
            factor_cases(),
        )
    )
    return reports


# --------------------------------------------------------------------------
# The five equivalent pictures


def suite_bijections(n=3, k=3):
    s, p = "bijections", {"n": n, "k": k}
    reports = []

    def picture_cases():
        for m in range(1, n + 1):
            elems = enumerate_ncp(m)
            for kk in range(1, k + 1):
                want = oracles.fuss_catalan(m, kk)

                tuples = [
                    t for t in product(elems, repeat=kk) if is_admissible_tuple(t, m)
                ]
                if len(tuples) != want:
                    yield f"n={m}, k={kk}: {len(tuples)} admissible tuples, formula {want}"
                    continue

                preserving = [
                    a for a in enumerate_ncp(kk * m) if is_k_preserving(a, kk)
                ]
                if len(preserving) != want:
                    yield f"n={m}, k={kk}: {len(preserving)} residue-preserving elements"
                    continue

                chains = [
                    c
                    for c in product(elems, repeat=kk)
                    if all(divides(c[i], c[i + 1]) for i in range(kk - 1))
                ]
                if len(chains) != want:
                    yield f"n={m}, k={kk}: {len(chains)} multichains"
                    continue

                complete = [
                    t
                    for t in product(elems, repeat=kk + 1)
                    if is_admissible_tuple(t, m) and compose_many(t) == one(m)
                ]
                if len(complete) != want:
                    yield f"n={m}, k={kk}: {len(complete)} complete tuples"
                    continue

                completing = list(enumerate_k_completing(m, kk + 1))
                if len(completing) != want:
                    yield f"n={m}, k={kk}: {len(completing)} completing elements"
                    continue
                yield None

    reports.append(
        _scan(s, "all five pictures have the same closed-form count", p, picture_cases())
    )

    def residue_cases():
        for m in range(1, n + 1):
            elems = enumerate_ncp(m)
            for kk in range(1, k + 1):
                tuples = [
                    t for t in product(elems, repeat=kk) if is_admissible_tuple(t, m)
                ]
                preserving = {
                    a for a in enumerate_ncp(kk * m) if is_k_preserving(a, kk)
                }
                image = set()
                for t in tuples:
                    a = tuple_to_kpreserving(t)
                    if not is_k_preserving(a, kk):
                        yield f"{t}: shuffle is not residue preserving"
                    elif kpreserving_to_tuple(a, kk) != t:
                        yield f"{t}: unshuffling does not invert"
                    else:
                        image.add(a)
                        yield None
                yield None if image == preserving else f"n={m}, k={kk}: image differs"

    reports.append(
        _scan(s, "tuples correspond to residue-preserving elements", p, residue_cases())
    )

    def chain_cases():
        for m in range(1, n + 1):
            elems = enumerate_ncp(m)
            for kk in range(1, k + 1):
                tuples = [
                    t for t in product(elems, repeat=kk) if is_admissible_tuple(t, m)
                ]
                chains = {
                    c
                    for c in product(elems, repeat=kk)
                    if all(divides(c[i], c[i + 1]) for i in range(kk - 1))
                }
                image = set()
                for t in tuples:
                    c = tuple_to_multichain(t)
                    if c not in chains:
                        yield f"{t}: partial products are not a multichain"
                    elif multichain_to_tuple(c) != t:
                        yield f"{t}: complement deltas do not invert"
                    else:
                        image.add(c)
                        yield None
                yield None if image == chains else f"n={m}, k={kk}: image differs"

    reports.append(_scan(s, "tuples correspond to multichains", p, chain_cases()))

    def complete_cases():
        for m in range(1, n + 1):
            elems = enumerate_ncp(m)
            for kk in range(1, k + 1):
                tuples = [
                    t for t in product(elems, repeat=kk) if is_admissible_tuple(t, m)
                ]
                complete = {
                    t
                    for t in product(elems, repeat=kk + 1)
                    if is_admissible_tuple(t, m) and compose_many(t) == one(m)
                }
                image = set()
                for t in tuples:
                    full = complete_tuple(t)
                    if full[:-1] != t or full not in complete:
                        yield f"{t}: extension is not complete"
                    else:
                        image.add(full)
                        yield None
                yield None if image == complete else f"n={m}, k={kk}: image differs"

    reports.append(
        _scan(s, "appending the product complement completes a tuple", p, complete_cases())
    )

    def completing_cases():
        for m in range(1, n + 1):
            elems = enumerate_ncp(m)
            for kk in range(1, k + 1):
                tuples = [
                    t for t in product(elems, repeat=kk) if is_admissible_tuple(t, m)
                ]
                completing = set(enumerate_k_completing(m, kk + 1))
                image = set()
                for t in tuples:
                    a = tuple_to_completing(t)
                    if not is_k_completing(a, kk + 1):
                        yield f"{t}: shuffle does not complete"
                    elif completing_to_tuple(a, kk + 1) != t:
                        yield f"{t}: recovery does not invert"
                    else:
                        image.add(a)
                        yield None
                yield None if image == completing else f"n={m}, k={kk}: image differs"

    reports.append(
        _scan(s, "tuples correspond to completing elements one level up", p, completing_cases())
    )
    return reports


# --------------------------------------------------------------------------
# Coalgebras and Moebius inversion


def _all_coalgebras(n, bound, lattice=None):
    if lattice in (None, "ncp"):
        for m in range(1, n + 1):
            yield ncp_interval_coalgebra(m)
            yield ncp_compose_coalgebra(m)
    if lattice in (None, "integers"):
        yield divisibility_coalgebra(bound)
        yield multiplicative_coalgebra(bound)


def _tensor3(c, x, left_first):
    out = {}
    for (u, v), c1 in c.delta(x):
        if left_first:
            for (q, r), c2 in c.delta(u):
                key = (q, r, v)
                out[key] = out.get(key, 0) + c1 * c2
        else:
            for (q, r), c2 in c.delta(v):
                key = (u, q, r)
                out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def suite_coalgebras(n=4, bound=60):
    s, p = "coalgebras", {"n": n, "bound": bound}
    reports = []

    def coassoc_cases():
        for c in _all_coalgebras(n, bound):
            for x in c.basis:
                if _tensor3(c, x, True) != _tensor3(c, x, False):
                    yield f"{c.name} at {x}"
                else:
                    yield None

    reports.append(_scan(s, "the comultiplication is coassociative", p, coassoc_cases()))

    def counit_cases():
        for c in _all_coalgebras(n, bound):
            for x in c.basis:
                left = {}
                right = {}
                for (u, v), coeff in c.delta(x):
                    left[v] = left.get(v, 0) + coeff * c.counit(u)
                    right[u] = right.get(u, 0) + coeff * c.counit(v)
                left = {k: v for k, v in left.items() if v}
                right = {k: v for k, v in right.items() if v}
                if left != {x: 1} or right != {x: 1}:
                    yield f"{c.name} at {x}"
                else:
                    yield None

    reports.append(_scan(s, "the counit is a two-sided counit", p, counit_cases()))

    def unit_cases():
        for c in _all_coalgebras(n, bound):
            d = delta_unit(c)
            z = zeta(c)
            if convolve(d, z) != z or convolve(z, d) != z:
                yield f"{c.name}"
            else:
                yield None

    reports.append(
        _scan(s, "the counit is the unit of the convolution algebra", p, unit_cases())
    )

    def conv_assoc_cases():
        rng = Random(DEFAULT_SEED)
        for c in _all_coalgebras(min(n, 3), min(bound, 30)):
            for _ in range(3):
                f, g, h = (
                    IncidenceFunction(
                        c, {x: Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for x in c.basis}
                    )
                    for _ in range(3)
                )
                if convolve(convolve(f, g), h) != convolve(f, convolve(g, h)):
                    yield f"{c.name}"
                else:
                    yield None

    reports.append(_scan(s, "convolution is associative", p, conv_assoc_cases()))
    return reports


def suite_reduction_morphism(n=4):
    s, p = "reduction-morphism", {"n": n}
    reports = []

    def morphism_cases():
        for m in range(1, n + 1):
            ci = ncp_interval_coalgebra(m)
            cc = ncp_compose_coalgebra(m)
            for iv in ci.basis:
                left = {}
                for (u, v), coeff in ci.delta(iv):
                    key = (interval_complement(u), interval_complement(v))
                    left[key] = left.get(key, 0) + coeff
                right = dict(cc.delta(interval_complement(iv)).items())
                if left != right:
                    yield f"{iv}"
                else:
                    yield None

    reports.append(
        _scan(s, "taking relative complements intertwines the comultiplications", p, morphism_cases())
    )

    def counit_cases():
        for m in range(1, n + 1):
            ci = ncp_interval_coalgebra(m)
            cc = ncp_compose_coalgebra(m)
            for iv in ci.basis:
                if ci.counit(iv) != cc.counit(interval_complement(iv)):
                    yield f"{iv}"
                else:
                    yield None

    reports.append(_scan(s, "taking relative complements preserves the counit", p, counit_cases()))

    def onto_cases():
        for m in range(1, n + 1):
            image = {interval_complement(iv) for iv in ncp_interval_coalgebra(m).basis}
            yield None if image == set(enumerate_ncp(m)) else f"n={m}"

    reports.append(_scan(s, "every partition is a relative complement", p, onto_cases()))
    return reports


def suite_reduced_algebra(n=4, trials=100, seed=DEFAULT_SEED):
    s, p = "reduced-algebra", {"n": n, "trials": trials, "seed": seed}
    rng = Random(seed)
    elems = enumerate_ncp(n)

    def rand_table():
        return {q: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for q in elems}

    reports = []

    def lift_cases():
        for _ in range(min(trials, 20)):
            table = rand_table()
            f = reduced_lift(table, n)
            if not is_reduced(f):
                yield "a lifted function is not fiberwise constant"
            elif reduced_restriction(f) != table:
                yield "restriction does not invert the lift"
            else:
                yield None

    reports.append(_scan(s, "lifting and restricting are mutually inverse", p, lift_cases()))

    def closure_cases():
        for _ in range(trials):
            fa, ga = rand_table(), rand_table()
            h = convolve(reduced_lift(fa, n), reduced_lift(ga, n))
            if not is_reduced(h):
                yield "a product of reduced functions is not reduced"
                continue
            hh = reduced_restriction(h)
            for q in elems:
                want = sum(
                    (
                        fa[d] * ga[relative_kreweras(d, q)]
                        for d in interval_elements(Interval(zero(n), q))
                    ),
                    Fraction(0),
                )
                if hh[q] != want:
                    yield f"divisor-sum formula fails at {q}"
                    break
            else:
                yield None

    reports.append(
        _scan(
            s,
            "reduced functions multiply by a complement-indexed divisor sum",
            p,
            closure_cases(),
        )
    )

    def canonical_cases():
        for m in range(1, n + 1):
            ci = ncp_interval_coalgebra(m)
            cc = ncp_compose_coalgebra(m)
            mi, mc = moebius(ci), moebius(cc)
            if not (is_reduced(zeta(ci)) and is_reduced(delta_unit(ci)) and is_reduced(mi)):
                yield f"n={m}: a canonical function is not reduced"
            elif any(mi(iv) != mc(interval_complement(iv)) for iv in ci.basis):
                yield f"n={m}: Moebius does not factor through the complement"
            else:
                yield None

    reports.append(
        _scan(s, "zeta, the unit, and Moebius all factor through complements", p, canonical_cases())
    )
    return reports


def suite_moebius(n=5, bound=100, lattice=None, seed=DEFAULT_SEED):
    s = "moebius"
    p = {"n": n, "bound": bound, "lattice": lattice or "both", "seed": seed}
    rng = Random(seed)
    reports = []

    def inverse_cases():
        for c in _all_coalgebras(n, bound, lattice):
            z, mu, d = zeta(c), moebius(c), delta_unit(c)
            if convolve(z, mu) != d:
                yield f"{c.name}: zeta * mu is not the unit"
            elif convolve(mu, z) != d:
                yield f"{c.name}: mu * zeta is not the unit"
            else:
                yield None

    reports.append(_scan(s, "zeta and Moebius are two-sided convolution inverses", p, inverse_cases()))

    def roundtrip_cases():
        for c in _all_coalgebras(min(n, 4), min(bound, 40), lattice):
            z, mu = zeta(c), moebius(c)
            for _ in range(3):
                f = IncidenceFunction(
                    c, {x: Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for x in c.basis}
                )
                if convolve(convolve(f, z), mu) != f or convolve(convolve(f, mu), z) != f:
                    yield f"{c.name}: summing then inverting does not return the input"
                else:
                    yield None

    reports.append(_scan(s, "Moebius inversion undoes the zeta transform", p, roundtrip_cases()))

    if lattice in (None, "ncp"):

        def recursion_cases():
            for m in range(1, min(n, 4) + 1):
                mu = moebius(ncp_interval_coalgebra(m))
                table = oracles.moebius_ncp(m)
                for (ab, bb), want in table.items():
                    iv = Interval(
                        NoncrossingPartition(m, ab), NoncrossingPartition(m, bb)
                    )
                    if mu(iv) != want:
                        yield f"n={m}, {iv}: {mu(iv)} vs {want}"
                    else:
                        yield None

        reports.append(
            _scan(s, "interval Moebius values match the order-theoretic recursion", p, recursion_cases())
        )

        def catalan_cases():
            for m in range(1, n + 1):
                mu = moebius(ncp_interval_coalgebra(m))
                got = mu(Interval(zero(m), one(m)))
                want = (-1) ** (m - 1) * oracles.catalan(m - 1)
                yield None if got == want else f"n={m}: {got} vs {want}"

        reports.append(
            _scan(s, "the full-interval Moebius value is a signed Catalan number", p, catalan_cases())
        )

    if lattice in (None, "integers"):

        def classical_cases():
            mu_div = moebius(divisibility_coalgebra(bound))
            for a, b in divisibility_coalgebra(bound).basis:
                if mu_div((a, b)) != oracles.classical_moebius(b // a):
                    yield f"({a}, {b})"
                else:
                    yield None
            mu_mul = moebius(multiplicative_coalgebra(bound))
            for m in range(1, bound + 1):
                if mu_mul(m) != oracles.classical_moebius(m):
                    yield f"{m}"
                else:
                    yield None

        reports.append(
            _scan(s, "integer Moebius matches trial-division factorization", p, classical_cases())
        )
    return reports


# --------------------------------------------------------------------------
# Simplicial structure


def suite_decalage(n=4, bound=30, depth=3):
    s, p = "decalage", {"n": n, "bound": bound, "depth": depth}
    reports = []
    bar_n = bar_of_ncp(n, depth + 1)
    bar_i = bar_of_integers(bound, depth + 1)
    spaces = [
        nerve_of_ncp(n, depth),
        nerve_of_divisibility(bound, depth),
        bar_n,
        bar_i,
        lower_decalage(bar_n),
        lower_decalage(bar_i),
    ]
    for x in spaces:
        reports.append(_from_check(s, check_simplicial_identities(x), p))
    for f in (dec_map(bar_n), dec_map(bar_i)):
        reports.append(_from_check(s, check_simplicial_map(f), p))
    for f in (ncp_decalage_comparison(n, depth), integer_decalage_comparison(bound, depth)):
        reports.append(_from_check(s, check_iso(f), p))
    return reports


def suite_two_segal(n=3, bound=30, depth=3):
    s, p = "two-segal", {"n": n, "bound": bound, "depth": depth}
    reports = []
    for m in range(1, n + 1):
        reports.append(_from_check(s, check_two_segal(bar_of_ncp(m, depth)), p))
    reports.append(_from_check(s, check_two_segal(bar_of_integers(bound, depth)), p))
    reports.append(_from_check(s, check_two_segal(nerve_of_ncp(n, depth)), p))
    return reports


def suite_ulf(n=4, bound=30):
    s, p = "ulf", {"n": n, "bound": bound}
    return [
        _from_check(s, check_ulf(dec_map(bar_of_ncp(n, 3))), p),
        _from_check(s, check_ulf(dec_map(bar_of_integers(bound, 3))), p),
    ]


# --------------------------------------------------------------------------
# Moments and cumulants


def suite_moment_cumulant(n=8, pairs_n=10, oracle_n=5, trials=100, seed=DEFAULT_SEED):
    s, p = "moment-cumulant", {
        "n": n,
        "pairs_n": pairs_n,
        "oracle_n": oracle_n,
        "trials": trials,
        "seed": seed,
    }
    rng = Random(seed)
    reports = []

    def semicircle_cases():
        kappa = [Fraction(0), Fraction(1)] + [Fraction(0)] * (pairs_n - 2)
        mom = moments_from_cumulants(kappa)
        for i, m in enumerate(mom, start=1):
            if i % 2 == 1:
                yield None if m == 0 else f"odd moment m_{i} = {m}"
                continue
            if m != oracles.catalan(i // 2):
                yield f"m_{i} = {m}, not the Catalan number"
            elif m != oracles.pairings_by_recursion(i):
                yield f"m_{i} = {m}, not the pairing count"
            elif i <= 8 and m != oracles.count_pairings(i):
                yield f"m_{i} = {m}, not the filtered pairing count"
            elif i <= 8 and m != oracles.moment_by_sum(kappa, i):
                yield f"m_{i} = {m}, not the brute-force block sum"
            else:
                yield None

    reports.append(
        _scan(s, "second-cumulant-only moments count noncrossing pairings", p, semicircle_cases())
    )

    def poisson_cases():
        mom = moments_from_cumulants([Fraction(1)] * n)
        for i, m in enumerate(mom, start=1):
            if m != oracles.catalan(i):
                yield f"m_{i} = {m}, not the Catalan number"
            elif i <= oracle_n + 1 and m != oracles.moment_by_sum([Fraction(1)] * n, i):
                yield f"m_{i} = {m}, not the brute-force block sum"
            else:
                yield None

    reports.append(
        _scan(s, "all-ones cumulants give shifted Catalan moments", p, poisson_cases())
    )

    def roundtrip_cases():
        for _ in range(trials):
            kappa = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)]
            if cumulants_from_moments(moments_from_cumulants(kappa)) != kappa:
                yield f"cumulants {kappa}"
                continue
            mom = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)]
            if moments_from_cumulants(cumulants_from_moments(mom)) != mom:
                yield f"moments {mom}"
            else:
                yield None

    reports.append(_scan(s, "the two transforms are mutually inverse", p, roundtrip_cases()))

    def oracle_cases():
        for _ in range(min(trials, 10)):
            kappa = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(oracle_n)]
            mom = moments_from_cumulants(kappa)
            for m in range(1, oracle_n + 1):
                if mom[m - 1] != oracles.moment_by_sum(kappa, m):
                    yield f"moment sum differs at n={m}"
                    break
            else:
                back = cumulants_from_moments(mom)
                for m in range(1, oracle_n + 1):
                    if back[m - 1] != oracles.cumulant_by_moebius(mom, m):
                        yield f"Moebius-weighted cumulant differs at n={m}"
                        break
                else:
                    yield None

    reports.append(
        _scan(s, "both transforms match their brute-force summation oracles", p, oracle_cases())
    )
    return reports


# --------------------------------------------------------------------------
# Kernel backends


def suite_kernels(n=6, trials=300, seed=DEFAULT_SEED):
    s, p = "kernels", {"n": n, "trials": trials, "seed": seed}
    reports = []

    def oracle_cases():
        for m in range(n + 1):
            for blocks in oracles.set_partitions(m):
                want = oracles.crossing_by_quadruple_scan(blocks, m) is None
                yield None if backend.is_noncrossing(blocks) == want else f"{blocks}"

    reports.append(
        _scan(s, "the pairwise crossing scan matches the quadruple scan", p, oracle_cases())
    )

    try:
        from . import _kernels_c
    except ImportError:
        _kernels_c = None
    from . import _kernels_py

    if _kernels_c is None:
        reports.append(
            VerifyReport(s, "compiled kernels agree with the pure ones (core not built)", dict(p), 0)
        )
        return reports

    def twin_cases():
        rng = Random(seed)
        for m in range(n + 1):
            for blocks in oracles.set_partitions(m):
                if _kernels_py.is_noncrossing(blocks) != _kernels_c.is_noncrossing(blocks):
                    yield f"is_noncrossing at {blocks}"
                    return
                yield None
        for _ in range(trials):
            m = rng.randint(1, 10)
            a = _random_partition(rng, m)
            b = _random_partition(rng, m)
            if _kernels_py.meet_blocks(a, b) != _kernels_c.meet_blocks(a, b):
                yield f"meet_blocks at {a}, {b}"
            elif _kernels_py.join_blocks(a, b, m) != _kernels_c.join_blocks(a, b, m):
                yield f"join_blocks at {a}, {b}"
            else:
                yield None

    reports.append(_scan(s, "compiled kernels agree with the pure ones", p, twin_cases()))
    return reports


def _random_partition(rng, m):
    """A uniform-ish random set partition by random block assignment."""
    labels = [rng.randint(0, m - 1) for _ in range(m)]
    groups = {}
    for x, g in enumerate(labels, start=1):
        groups.setdefault(g, []).append(x)
    return tuple(tuple(blk) for blk in sorted(groups.values()))


# --------------------------------------------------------------------------
# Registry


SUITES = {
    "enumeration": suite_enumeration,
    "lattice": suite_lattice,
    "relative-lattice": suite_relative_lattice,
    "powers": suite_powers,
    "admissibility": suite_admissibility,
    "shuffle-order": suite_shuffle_order,
    "partial-monoid": suite_partial_monoid,
    "compose-identities": suite_compose_identities,
    "kreweras": suite_kreweras,
    "relative-complements": suite_relative_complements,
    "bijections": suite_bijections,
    "coalgebras": suite_coalgebras,
    "reduction-morphism": suite_reduction_morphism,
    "reduced-algebra": suite_reduced_algebra,
    "moebius": suite_moebius,
    "decalage": suite_decalage,
    "two-segal": suite_two_segal,
    "ulf": suite_ulf,
    "moment-cumulant": suite_moment_cumulant,
    "kernels": suite_kernels,
}


def run_suite(name, **overrides):
    """Run one suite, passing only the overrides its signature accepts."""
    fn = SUITES[name]
    accepted = inspect.signature(fn).parameters
    kwargs = {k: v for k, v in overrides.items() if k in accepted and v is not None}
    return fn(**kwargs)


def run_verify(names=None, **overrides):
    """Run the named suites (all of them by default), in registry order."""
    if names is None or names == ["all"] or names == ("all",):
        names = list(SUITES)
    reports = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; see `verify --list`")
        reports.extend(run_suite(name, **overrides))
    return reports
