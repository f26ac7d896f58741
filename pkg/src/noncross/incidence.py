"""Incidence coalgebras and their convolution algebras, over exact rationals.

Four finite coalgebras are materialized:

  * ncp_interval_coalgebra(n): basis = intervals [a, b] of NCP(n), with
    Delta [a, b] = sum over a | c | b of [a, c] (x) [c, b];
  * ncp_compose_coalgebra(n): basis = NCP(n), with Delta p = sum of
    a (x) b over all admissible pairs with a*b = p;
  * divisibility_coalgebra(M): basis = pairs (a, b) with a | b <= M;
  * multiplicative_coalgebra(M): basis = 1..M, Delta m = sum of i (x) j
    over i*j = m.

Convolution of incidence functions, the zeta/delta pair and the Moebius
inverse are generic over these.  The reduction map sending [a, b] to the
relative complement of a in b does for NCP what m/n does for divisibility:
functions lifted through it form a convolution-closed subalgebra, and the
map is a morphism of coalgebras.

The moment/cumulant transforms at the bottom are the single-variable free
relations: m_n is a sum over NCP(n) of products of cumulants indexed by
block sizes, inverted by triangularity.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .config import guard_int_bound, guard_n
from .errors import BasisMismatchError, OutOfBoundError
from .lattice import Interval, divides, enumerate_ncp, interval_elements
from .kreweras import compose_table, relative_kreweras
from .partition import zero


class LinCombo:
    """A finite formal rational combination of hashable basis elements.

    Zero coefficients are dropped eagerly, so equality is plain dict
    equality.
    """

    __slots__ = ("terms",)

    def __init__(self, items=()):
        terms = {}
        it = items.items() if isinstance(items, dict) else items
        for basis, coeff in it:
            coeff = Fraction(coeff)
            if not coeff:
                continue
            acc = terms.get(basis, 0) + coeff
            if acc:
                terms[basis] = acc
            else:
                del terms[basis]
        self.terms = terms

    @classmethod
    def of(cls, basis, coeff=1):
        return cls(((basis, coeff),))

    def items(self):
        return self.terms.items()

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LinCombo):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for basis, coeff in other.terms.items():
            acc = out.get(basis, 0) + coeff
            if acc:
                out[basis] = acc
            else:
                del out[basis]
        res = LinCombo.__new__(LinCombo)
        res.terms = out
        return res

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        res = LinCombo.__new__(LinCombo)
        res.terms = {} if not scalar else {b: c * scalar for b, c in self.terms.items()}
        return res

    __rmul__ = __mul__

    def map_basis(self, f):
        """Push forward along f, merging collisions."""
        return LinCombo((f(b), c) for b, c in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "LinCombo()"
        inner = " + ".join(f"{c}*{b}" for b, c in self.terms.items())
        return f"LinCombo<{inner}>"


@dataclass(frozen=True, eq=False)
class Coalgebra:
    """A finite coalgebra with materialized structure maps."""

    name: str
    basis: tuple
    _delta: dict = field(repr=False)
    _counit: dict = field(repr=False)

    def delta(self, x):
        try:
            return self._delta[x]
        except KeyError:
            raise OutOfBoundError(f"{x} is not in the basis of {self.name}") from None

    def counit(self, x):
        try:
            return self._counit[x]
        except KeyError:
            raise OutOfBoundError(f"{x} is not in the basis of {self.name}") from None

    def __repr__(self):
        return f"Coalgebra({self.name}, {len(self.basis)} basis elements)"


@lru_cache(maxsize=None)
def ncp_interval_coalgebra(n):
    """Splitting of intervals of NCP(n) at their middle elements."""
    guard_n(n)
    basis = []
    delta = {}
    counit = {}
    elems = enumerate_ncp(n)
    for a in elems:
        for b in elems:
            if not divides(a, b):
                continue
            iv = Interval(a, b)
            basis.append(iv)
            delta[iv] = LinCombo(
                ((Interval(a, c), Interval(c, b)), 1) for c in interval_elements(iv)
            )
            counit[iv] = Fraction(a == b)
    return Coalgebra(f"ncp-intervals({n})", tuple(basis), delta, counit)


@lru_cache(maxsize=None)
def ncp_compose_coalgebra(n):
    """Splitting of a partition into admissible compose factors."""
    guard_n(n)
    basis = tuple(enumerate_ncp(n))
    fibers = {p: [] for p in basis}
    for (a, b), c in compose_table(n).items():
        fibers[c].append((a, b))
    delta = {p: LinCombo((pair, 1) for pair in fibers[p]) for p in basis}
    unit = zero(n)
    counit = {p: Fraction(p == unit) for p in basis}
    return Coalgebra(f"ncp-compose({n})", basis, delta, counit)


@lru_cache(maxsize=None)
def divisibility_coalgebra(bound):
    """Intervals (a, b) with a | b <= bound, split at middle divisors."""
    guard_int_bound(bound)
    basis = []
    delta = {}
    counit = {}
    for b in range(1, bound + 1):
        divs = [d for d in range(1, b + 1) if b % d == 0]
        for a in divs:
            q = b // a
            pair = (a, b)
            basis.append(pair)
            delta[pair] = LinCombo(
                (((a, a * k), (a * k, b)), 1) for k in range(1, q + 1) if q % k == 0
            )
            counit[pair] = Fraction(a == b)
    return Coalgebra(f"divisibility({bound})", tuple(basis), delta, counit)


@lru_cache(maxsize=None)
def multiplicative_coalgebra(bound):
    """1..bound with Delta m = sum of i (x) j over ordered factorizations i*j = m."""
    guard_int_bound(bound)
    basis = tuple(range(1, bound + 1))
    delta = {
        m: LinCombo(((i, m // i), 1) for i in range(1, m + 1) if m % i == 0)
        for m in basis
    }
    counit = {m: Fraction(m == 1) for m in basis}
    return Coalgebra(f"multiplicative({bound})", basis, delta, counit)


class IncidenceFunction:
    """A rational-valued function on the basis of a coalgebra."""

    __slots__ = ("coalgebra", "values")

    def __init__(self, coalgebra, values):
        if callable(values):
            values = {x: values(x) for x in coalgebra.basis}
        table = {}
        for x in coalgebra.basis:
            try:
                table[x] = Fraction(values[x])
            except KeyError:
                raise OutOfBoundError(f"no value for basis element {x}") from None
        self.coalgebra = coalgebra
        self.values = table

    def __call__(self, x):
        try:
            return self.values[x]
        except KeyError:
            raise OutOfBoundError(f"{x} is not in the basis of {self.coalgebra.name}") from None

    def __eq__(self, other):
        if not isinstance(other, IncidenceFunction):
            return NotImplemented
        return self.coalgebra is other.coalgebra and self.values == other.values

    def __repr__(self):
        return f"IncidenceFunction on {self.coalgebra.name}"


def convolve(f, g):
    """(f * g)(x) = sum over Delta x of f(left) g(right)."""
    if f.coalgebra is not g.coalgebra:
        raise BasisMismatchError(
            f"convolution across {f.coalgebra.name} and {g.coalgebra.name}"
        )
    c = f.coalgebra
    out = {}
    for x in c.basis:
        acc = Fraction(0)
        for (u, v), coeff in c.delta(x):
            acc += coeff * f(u) * g(v)
        out[x] = acc
    return IncidenceFunction(c, out)


def zeta(coalgebra):
    """Constant 1: counting function of the coalgebra."""
    return IncidenceFunction(coalgebra, {x: Fraction(1) for x in coalgebra.basis})


def delta_unit(coalgebra):
    """The counit as an incidence function: the convolution unit."""
    return IncidenceFunction(coalgebra, {x: coalgebra.counit(x) for x in coalgebra.basis})


def moebius(coalgebra):
    """Convolution inverse of zeta.

    Every basis element x carries exactly one Delta term whose right leg is
    x itself (the left leg is counit-like); peeling it off gives a
    recursion that terminates because all other right legs are strictly
    smaller.
    """
    memo = {}

    def mu(x):
        if x in memo:
            return memo[x]
        acc = coalgebra.counit(x)
        for (_u, v), coeff in coalgebra.delta(x):
            if v != x:
                acc -= coeff * mu(v)
        memo[x] = acc
        return acc

    return IncidenceFunction(coalgebra, {x: mu(x) for x in coalgebra.basis})


# --------------------------------------------------------------------------
# The reduced subalgebra of the NCP interval algebra


def interval_complement(iv):
    """The reduction [a, b] -> relative complement of a in b."""
    return relative_kreweras(iv.lower, iv.upper)


def reduced_lift(values, n):
    """Lift a function on NCP(n) to intervals through the reduction map."""
    if callable(values):
        table = {p: Fraction(values(p)) for p in enumerate_ncp(n)}
    else:
        table = {p: Fraction(v) for p, v in values.items()}
    c = ncp_interval_coalgebra(n)
    return IncidenceFunction(c, {iv: table[interval_complement(iv)] for iv in c.basis})


def is_reduced(f):
    """True when f is constant on the fibers of the reduction map."""
    seen = {}
    for iv in f.coalgebra.basis:
        key = interval_complement(iv)
        if key in seen:
            if seen[key] != f(iv):
                return False
        else:
            seen[key] = f(iv)
    return True


def reduced_restriction(f):
    """The function on NCP(n) a reduced f is lifted from.

    The complement of the bottom inside p is p itself, so evaluate on the
    intervals [0_n, p].
    """
    n = f.coalgebra.basis[0].n
    bot = zero(n)
    return {p: f(Interval(bot, p)) for p in enumerate_ncp(n)}


# --------------------------------------------------------------------------
# Free moments and cumulants (one variable, exact)


def moments_from_cumulants(kappa):
    """m_n = sum over NCP(n) of the product of kappa over block sizes."""
    kappa = [Fraction(v) for v in kappa]
    n_max = len(kappa)
    guard_n(n_max, "moment computation")
    out = []
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for p in enumerate_ncp(n):
            term = Fraction(1)
            for blk in p.blocks:
                term *= kappa[len(blk) - 1]
            acc += term
        out.append(acc)
    return out


def cumulants_from_moments(moments):
    """Inverse of moments_from_cumulants.

    The defining sum is triangular: the full partition contributes kappa_n
    and every other partition only smaller cumulants, so peel and solve.
    """
    moments = [Fraction(v) for v in moments]
    n_max = len(moments)
    guard_n(n_max, "cumulant computation")
    kappa = []
    for n in range(1, n_max + 1):
        acc = moments[n - 1]
        for p in enumerate_ncp(n):
            if len(p.blocks) == 1:
                continue
            term = Fraction(1)
            for blk in p.blocks:
                term *= kappa[len(blk) - 1]
            acc -= term
        kappa.append(acc)
    return kappa
