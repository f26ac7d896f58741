"""Truncated simplicial sets: nerves, bar constructions, decalage.

A TruncatedSimplicialSet stores its simplices degree by degree up to d_max
with all face and degeneracy maps materialized as dicts.  Two families are
built here:

  * the nerve of a finite poset: k-simplices are multichains of k+1
    elements, faces drop an entry, degeneracies repeat one;
  * the bar construction of a (partial) monoid: k-simplices are the
    admissible k-tuples, outer faces drop an end, inner faces multiply two
    adjacent entries, degeneracies insert the unit.

The lower decalage shifts degrees down by one, forgetting d_0 and s_0; the
forgotten d_0 maps assemble into a simplicial map Dec X -> X.  For the bar
construction of the composition monoid this map is checked (not assumed) to
have unique lifting of factorizations, and Dec X is checked isomorphic to
the nerve of the coarsening order via prefix products; the same pair of
checks runs for divisibility of integers.

check_two_segal verifies the two fiber-product squares visible at degree 3
(outer faces against the middle faces).  The third square one might write,
on (d_3, d_0), is the nerve condition: it genuinely fails for partial
monoids and is not part of the check.
"""

from dataclasses import dataclass, field

from .config import guard_depth, guard_n, guard_int_bound
from .errors import InternalInvariantError, TooShallowError
from .kreweras import compose, compose_table
from .lattice import divides, enumerate_ncp
from .partition import zero


class TruncatedSimplicialSet:
    """Simplices in degrees 0..d_max with materialized structure maps.

    faces[(k, i)] : simplices[k] -> simplices[k-1]   for 1 <= k <= d_max, 0 <= i <= k
    degens[(k, i)]: simplices[k] -> simplices[k+1]   for 0 <= k <  d_max, 0 <= i <= k
    """

    __slots__ = ("name", "d_max", "simplices", "faces", "degens")

    def __init__(self, name, d_max, simplices, faces, degens):
        if d_max < 0:
            raise TooShallowError("truncation depth must be nonnegative")
        if len(simplices) != d_max + 1:
            raise ValueError(f"expected {d_max + 1} degrees, got {len(simplices)}")
        self.name = name
        self.d_max = d_max
        self.simplices = tuple(tuple(level) for level in simplices)
        self.faces = dict(faces)
        self.degens = dict(degens)
        self._check_shape()

    def _check_shape(self):
        levels = [set(level) for level in self.simplices]
        for k in range(1, self.d_max + 1):
            for i in range(k + 1):
                m = self.faces.get((k, i))
                if m is None:
                    raise ValueError(f"missing face map ({k}, {i})")
                for x in self.simplices[k]:
                    if x not in m:
                        raise ValueError(f"face ({k}, {i}) undefined at {x!r}")
                    if m[x] not in levels[k - 1]:
                        raise ValueError(f"face ({k}, {i}) leaves the simplex set at {x!r}")
        for k in range(self.d_max):
            for i in range(k + 1):
                m = self.degens.get((k, i))
                if m is None:
                    raise ValueError(f"missing degeneracy map ({k}, {i})")
                for x in self.simplices[k]:
                    if x not in m:
                        raise ValueError(f"degeneracy ({k}, {i}) undefined at {x!r}")
                    if m[x] not in levels[k + 1]:
                        raise ValueError(f"degeneracy ({k}, {i}) leaves the simplex set at {x!r}")

    def face(self, k, i, x):
        return self.faces[(k, i)][x]

    def degeneracy(self, k, i, x):
        return self.degens[(k, i)][x]

    def truncate(self, d):
        """Forget everything above degree d."""
        if d > self.d_max:
            raise TooShallowError(f"{self.name} only reaches degree {self.d_max}")
        return TruncatedSimplicialSet(
            self.name,
            d,
            self.simplices[: d + 1],
            {(k, i): m for (k, i), m in self.faces.items() if k <= d},
            {(k, i): m for (k, i), m in self.degens.items() if k < d},
        )

    def __repr__(self):
        sizes = ", ".join(str(len(level)) for level in self.simplices)
        return f"TruncatedSimplicialSet({self.name}; sizes {sizes})"


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    """A degreewise map commuting with faces and degeneracies.

    Totality and codomains are validated at construction; the commutation
    squares are the business of check_simplicial_map.
    """

    name: str
    source: TruncatedSimplicialSet
    target: TruncatedSimplicialSet
    components: tuple = field(repr=False)

    def __post_init__(self):
        if self.source.d_max != self.target.d_max:
            raise TooShallowError("source and target have different depths")
        if len(self.components) != self.source.d_max + 1:
            raise ValueError("one component per degree is required")
        for k, comp in enumerate(self.components):
            level = set(self.target.simplices[k])
            for x in self.source.simplices[k]:
                if x not in comp:
                    raise ValueError(f"component {k} undefined at {x!r}")
                if comp[x] not in level:
                    raise ValueError(f"component {k} leaves the target at {x!r}")

    def apply(self, k, x):
        return self.components[k][x]


# --------------------------------------------------------------------------
# Builders


def nerve_of_poset(elements, leq, d_max, name):
    """Multichains of k+1 elements as k-simplices."""
    guard_depth(d_max)
    elements = list(elements)
    levels = [[(x,) for x in elements]]
    for _ in range(d_max):
        levels.append(
            [c + (y,) for c in levels[-1] for y in elements if leq(c[-1], y)]
        )
    faces = {}
    for k in range(1, d_max + 1):
        for i in range(k + 1):
            faces[(k, i)] = {c: c[:i] + c[i + 1 :] for c in levels[k]}
    degens = {}
    for k in range(d_max):
        for i in range(k + 1):
            degens[(k, i)] = {c: c[: i + 1] + c[i:] for c in levels[k]}
    return TruncatedSimplicialSet(name, d_max, levels, faces, degens)


def nerve_of_ncp(n, d_max=3):
    """Nerve of the coarsening order on NCP(n)."""
    guard_n(n)
    return nerve_of_poset(enumerate_ncp(n), divides, d_max, f"nerve(NCP({n}))")


def nerve_of_divisibility(bound, d_max=3):
    """Nerve of divisibility on 1..bound."""
    guard_int_bound(bound)
    return nerve_of_poset(
        range(1, bound + 1), lambda a, b: b % a == 0, d_max, f"nerve(div({bound}))"
    )


def _bar_levels(unit, elements, extendable, d_max):
    levels = [[()]]
    for _ in range(d_max):
        levels.append(
            [t + (y,) for t in levels[-1] for y in elements if extendable(t, y)]
        )
    return levels


def _bar_faces(levels, d_max, product):
    faces = {}
    level_sets = [set(level) for level in levels]
    for k in range(1, d_max + 1):
        for i in range(k + 1):
            m = {}
            for t in levels[k]:
                if i == 0:
                    out = t[1:]
                elif i == k:
                    out = t[:-1]
                else:
                    merged = product(t[i - 1], t[i])
                    if merged is None:
                        raise InternalInvariantError(
                            f"inner face of an admissible tuple undefined at {t!r}"
                        )
                    out = t[: i - 1] + (merged,) + t[i + 1 :]
                if out not in level_sets[k - 1]:
                    raise InternalInvariantError(
                        f"face of admissible tuple left the complex at {t!r}"
                    )
                m[t] = out
            faces[(k, i)] = m
    return faces


def _bar_degens(levels, d_max, unit):
    degens = {}
    for k in range(d_max):
        for i in range(k + 1):
            degens[(k, i)] = {t: t[:i] + (unit,) + t[i:] for t in levels[k]}
    return degens


def bar_of_ncp(n, d_max=3):
    """Bar construction of the composition partial monoid on NCP(n).

    k-simplices are the admissible k-tuples; admissibility of a tuple is
    equivalent to admissibility of all its ordered pairs, so the levels are
    built by pairwise extension against the compose table.
    """
    guard_depth(d_max)
    guard_n(n)
    table = compose_table(n)
    elements = enumerate_ncp(n)

    def extendable(t, y):
        return all((x, y) in table for x in t)

    levels = _bar_levels(zero(n), elements, extendable, d_max)
    faces = _bar_faces(levels, d_max, lambda x, y: table.get((x, y)))
    degens = _bar_degens(levels, d_max, zero(n))
    return TruncatedSimplicialSet(f"bar(NCP({n}))", d_max, levels, faces, degens)


def bar_of_integers(bound, d_max=3):
    """Bar construction of positive integers under product, cut at the bound."""
    guard_depth(d_max)
    guard_int_bound(bound)
    elements = list(range(1, bound + 1))

    def prod(t):
        out = 1
        for x in t:
            out *= x
        return out

    def extendable(t, y):
        return prod(t) * y <= bound

    levels = _bar_levels(1, elements, extendable, d_max)
    faces = _bar_faces(levels, d_max, lambda x, y: x * y)
    degens = _bar_degens(levels, d_max, 1)
    return TruncatedSimplicialSet(f"bar(int({bound}))", d_max, levels, faces, degens)


# --------------------------------------------------------------------------
# Decalage


def lower_decalage(x):
    """Shift degrees down by one: Dec_k = X_{k+1}, d_i = old d_{i+1}."""
    if x.d_max < 1:
        raise TooShallowError(f"{x.name} is too shallow to decalage")
    d = x.d_max - 1
    simplices = x.simplices[1:]
    faces = {}
    for k in range(1, d + 1):
        for i in range(k + 1):
            faces[(k, i)] = x.faces[(k + 1, i + 1)]
    degens = {}
    for k in range(d):
        for i in range(k + 1):
            degens[(k, i)] = x.degens[(k + 1, i + 1)]
    return TruncatedSimplicialSet(f"dec({x.name})", d, simplices, faces, degens)


def dec_map(x):
    """The forgotten d_0 maps, as a simplicial map Dec X -> X."""
    dec = lower_decalage(x)
    target = x.truncate(x.d_max - 1)
    components = tuple(x.faces[(k + 1, 0)] for k in range(dec.d_max + 1))
    return SimplicialMap(f"dec({x.name}) -> {x.name}", dec, target, components)


def ncp_decalage_comparison(n, depth=3):
    """The isomorphism Dec bar(NCP(n)) -> nerve(NCP(n)) by prefix products."""
    guard_depth(depth + 1)
    bar = bar_of_ncp(n, depth + 1)
    dec = lower_decalage(bar)
    nerve = nerve_of_ncp(n, depth)
    components = []
    for k in range(depth + 1):
        comp = {}
        for t in dec.simplices[k]:
            chain = [t[0]]
            for y in t[1:]:
                nxt = compose(chain[-1], y)
                if nxt is None:
                    raise InternalInvariantError("prefix product of an admissible tuple undefined")
                chain.append(nxt)
            comp[t] = tuple(chain)
        components.append(comp)
    return SimplicialMap(
        f"dec(bar(NCP({n}))) -> nerve(NCP({n}))", dec, nerve, tuple(components)
    )


def integer_decalage_comparison(bound, depth=3):
    """The isomorphism Dec bar(int) -> nerve(div) by running products."""
    guard_depth(depth + 1)
    bar = bar_of_integers(bound, depth + 1)
    dec = lower_decalage(bar)
    nerve = nerve_of_divisibility(bound, depth)
    components = []
    for k in range(depth + 1):
        comp = {}
        for t in dec.simplices[k]:
            chain = []
            acc = 1
            for y in t:
                acc *= y
                chain.append(acc)
            comp[t] = tuple(chain)
        components.append(comp)
    return SimplicialMap(
        f"dec(bar(int({bound}))) -> nerve(div({bound}))", dec, nerve, tuple(components)
    )


# --------------------------------------------------------------------------
# Checks


@dataclass
class CheckReport:
    """Outcome of one structural check; failures carry coordinates."""

    subject: str
    law: str
    checked: int
    failures: list

    @property
    def passed(self):
        return not self.failures

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.subject}: {self.law} ({self.checked} instances)"
        if self.failures:
            out += f"; first failure: {self.failures[0]}"
        return out

    def to_json(self):
        return {
            "subject": self.subject,
            "law": self.law,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [str(f) for f in self.failures[:10]],
        }


def check_simplicial_identities(x):
    """All face/face, face/degeneracy and degeneracy/degeneracy identities
    that fit inside the truncation."""
    checked = 0
    failures = []

    def note(kind, k, i, j, s):
        failures.append(f"{kind} (k={k}, i={i}, j={j}) at {s!r}")

    for k in range(2, x.d_max + 1):
        for j in range(k + 1):
            for i in range(j):
                for s in x.simplices[k]:
                    checked += 1
                    if x.face(k - 1, i, x.face(k, j, s)) != x.face(k - 1, j - 1, x.face(k, i, s)):
                        note("d_i d_j = d_{j-1} d_i", k, i, j, s)
    for k in range(0, x.d_max - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                for s in x.simplices[k]:
                    checked += 1
                    if x.degeneracy(k + 1, i, x.degeneracy(k, j, s)) != x.degeneracy(
                        k + 1, j + 1, x.degeneracy(k, i, s)
                    ):
                        note("s_i s_j = s_{j+1} s_i", k, i, j, s)
    for k in range(0, x.d_max):
        for j in range(k + 1):
            for i in range(k + 2):
                for s in x.simplices[k]:
                    checked += 1
                    got = x.face(k + 1, i, x.degeneracy(k, j, s))
                    if i == j or i == j + 1:
                        want = s
                    elif i < j:
                        want = x.degeneracy(k - 1, j - 1, x.face(k, i, s))
                    else:
                        want = x.degeneracy(k - 1, j, x.face(k, i - 1, s))
                    if got != want:
                        note("d_i s_j", k, i, j, s)
    return CheckReport(x.name, "simplicial identities", checked, failures)


def check_simplicial_map(f):
    """Commutation of the components with every face and degeneracy."""
    checked = 0
    failures = []
    src, tgt = f.source, f.target
    for k in range(1, src.d_max + 1):
        for i in range(k + 1):
            for s in src.simplices[k]:
                checked += 1
                if f.apply(k - 1, src.face(k, i, s)) != tgt.face(k, i, f.apply(k, s)):
                    failures.append(f"face square (k={k}, i={i}) at {s!r}")
    for k in range(src.d_max):
        for i in range(k + 1):
            for s in src.simplices[k]:
                checked += 1
                if f.apply(k + 1, src.degeneracy(k, i, s)) != tgt.degeneracy(k, i, f.apply(k, s)):
                    failures.append(f"degeneracy square (k={k}, i={i}) at {s!r}")
    return CheckReport(f.name, "simplicial map", checked, failures)


def check_iso(f):
    """check_simplicial_map plus degreewise bijectivity."""
    rep = check_simplicial_map(f)
    for k in range(f.source.d_max + 1):
        src_level = f.source.simplices[k]
        images = {f.apply(k, s) for s in src_level}
        rep.checked += len(src_level)
        if len(images) != len(src_level):
            rep.failures.append(f"degree {k} component is not injective")
        if images != set(f.target.simplices[k]):
            rep.failures.append(f"degree {k} component is not onto")
    rep.law = "simplicial isomorphism"
    return rep


def check_two_segal(x):
    """The two degree-3 fiber-product squares.

    A 3-simplex is determined by, and free over, (d_2, d_0) matching on
    d_0/d_1, and by (d_3, d_1) matching on d_1/d_2.
    """
    if x.d_max < 3:
        raise TooShallowError(f"{x.name} is too shallow for the degree-3 squares")
    checked = 0
    failures = []
    x2, x3 = x.simplices[2], x.simplices[3]

    squares = (
        ("(d2, d0) square", 2, 0, lambda a: x.face(2, 0, a), lambda b: x.face(2, 1, b)),
        ("(d3, d1) square", 3, 1, lambda a: x.face(2, 1, a), lambda b: x.face(2, 2, b)),
    )
    for law, fi, fj, glue_a, glue_b in squares:
        pairs = {(a, b) for a in x2 for b in x2 if glue_a(a) == glue_b(b)}
        images = []
        for s in x3:
            checked += 1
            images.append((x.face(3, fi, s), x.face(3, fj, s)))
        image_set = set(images)
        if len(image_set) != len(images):
            dup = [p for p in image_set if images.count(p) > 1]
            failures.append(f"{law}: not injective, e.g. at {dup[0]!r}")
        extra = image_set - pairs
        missing = pairs - image_set
        if extra:
            failures.append(f"{law}: image leaves the fiber product at {next(iter(extra))!r}")
        if missing:
            failures.append(f"{law}: not onto, missing {next(iter(missing))!r}")
        checked += len(pairs)
    return CheckReport(x.name, "degree-3 fiber-product squares", checked, failures)


def check_ulf(f):
    """Unique lifting of factorizations for a simplicial map.

    For every 2-simplex s of the target and every 1-simplex y of the source
    sitting over the long edge d_1 s, exactly one 2-simplex of the source
    maps to s with middle face y.
    """
    if f.source.d_max < 2:
        raise TooShallowError(f"{f.name} is too shallow for the lifting check")
    checked = 0
    failures = []
    src, tgt = f.source, f.target
    lift_count = {}
    for s2 in src.simplices[2]:
        key = (f.apply(2, s2), src.face(2, 1, s2))
        lift_count[key] = lift_count.get(key, 0) + 1
    over = {}
    for y in src.simplices[1]:
        over.setdefault(f.apply(1, y), []).append(y)
    for s in tgt.simplices[2]:
        edge = tgt.face(2, 1, s)
        for y in over.get(edge, ()):
            checked += 1
            cnt = lift_count.get((s, y), 0)
            if cnt != 1:
                failures.append(f"{cnt} lifts of {s!r} through {y!r}")
    return CheckReport(f.name, "unique lifting of factorizations", checked, failures)
