"""
The centerless topological N=2 superconformal algebra, with exact arithmetic.

The algebra T is spanned by bosonic generators L_n, H_n and fermionic
generators G_n, Q_n (n in Z).  The non-vanishing brackets are

    [L_m, L_n] = (m-n) L_{m+n}        [L_m, H_n] = -n H_{m+n}
    [L_m, G_n] = (m-n) G_{m+n}        [L_m, Q_n] = -n Q_{m+n}
    [H_m, G_n] = G_{m+n}              [H_m, Q_n] = -Q_{m+n}
    [G_m, Q_n] = 2 L_{m+n} - 2n H_{m+n}

together with the super-skew completion [y,x] = -(-1)^{[x][y]} [x,y].
Only the one-sided table above is stored; skew-symmetry is a theorem the
test suite checks, not an input it trusts.

All coefficients are exact rationals (`fractions.Fraction`); there is no
floating point anywhere in the engine.  Values are immutable after
construction, so everything here is safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, NamedTuple

EVEN = 0
ODD = 1

FAMILIES = ("L", "H", "G", "Q")
_FAMILY_ORDER = {f: k for k, f in enumerate(FAMILIES)}
_FAMILY_PARITY = {"L": EVEN, "H": EVEN, "G": ODD, "Q": ODD}


class Generator(NamedTuple):
    """A basis generator: a family letter plus an integer index."""

    family: str
    index: int

    @property
    def parity(self) -> int:
        return _FAMILY_PARITY[self.family]

    @property
    def degree(self) -> int:
        return self.index

    def sort_key(self):
        # family order L < H < G < Q, then index
        return (_FAMILY_ORDER[self.family], self.index)

    def __str__(self):
        return "%s[%d]" % (self.family, self.index)


def L(n: int) -> Generator:
    return Generator("L", n)


def H(n: int) -> Generator:
    return Generator("H", n)


def G(n: int) -> Generator:
    return Generator("G", n)


def Q(n: int) -> Generator:
    return Generator("Q", n)


# A bracket rule maps (m, n) to a tuple of (integer coefficient, Generator).
BracketRule = Callable[[int, int], tuple]


def _t_LL(m, n):
    return ((m - n, Generator("L", m + n)),)


def _t_LH(m, n):
    return ((-n, Generator("H", m + n)),)


def _t_LG(m, n):
    return ((m - n, Generator("G", m + n)),)


def _t_LQ(m, n):
    return ((-n, Generator("Q", m + n)),)


def _t_HG(m, n):
    return ((1, Generator("G", m + n)),)


def _t_HQ(m, n):
    return ((-1, Generator("Q", m + n)),)


def _t_GQ(m, n):
    return ((2, Generator("L", m + n)), (-2 * n, Generator("H", m + n)))


class AlgebraSpec:
    """A graded Lie superalgebra presented by structure-constant rules.

    `table` holds one rule per *ordered* family pair; the missing order is
    derived on the fly from super-skew-symmetry.  Family pairs absent from
    both orders bracket to zero.
    """

    def __init__(self, name: str, families: Iterable[str], table: dict):
        self.name = name
        self.families = tuple(families)
        for f in self.families:
            if f not in _FAMILY_PARITY:
                raise ValueError("unknown family %r" % (f,))
        self._table = dict(table)
        self._cache = {}

    def __repr__(self):
        return "AlgebraSpec(%r)" % (self.name,)

    def zero(self) -> "Element":
        return Element(self, {})

    def monomial(self, gen: Generator, coeff=1) -> "Element":
        return Element(self, {gen: coeff})

    def element(self, pairs) -> "Element":
        """Build an Element from (coeff, Generator) pairs."""
        acc = {}
        for coeff, gen in pairs:
            acc[gen] = acc.get(gen, 0) + Fraction(coeff)
        return Element(self, acc)

    def check_generator(self, gen: Generator):
        if gen.family not in self.families:
            raise ValueError(
                "generator %s does not belong to algebra %r" % (gen, self.name)
            )

    def bracket_terms(self, a: Generator, b: Generator) -> tuple:
        """Structure constants of [a, b] as a tuple of (int coeff, Generator).

        Zero coefficients are dropped, so the empty tuple means [a, b] = 0.
        """
        key = (a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        rule = self._table.get((a.family, b.family))
        if rule is not None:
            raw = rule(a.index, b.index)
        else:
            rule = self._table.get((b.family, a.family))
            if rule is None:
                raw = ()
            else:
                # [a,b] = -(-1)^{[a][b]} [b,a]
                sign = 1 if (a.parity and b.parity) else -1
                raw = tuple((sign * c, g) for c, g in rule(b.index, a.index))
        terms = tuple((c, g) for c, g in raw if c != 0)
        self._cache[key] = terms
        return terms

    def generators(self, lo: int, hi: int) -> list:
        """All generators with index in the inclusive range [lo, hi]."""
        return [Generator(f, n) for f in self.families for n in range(lo, hi + 1)]


TOPOLOGICAL_N2 = AlgebraSpec(
    "topological-n2",
    FAMILIES,
    {
        ("L", "L"): _t_LL,
        ("L", "H"): _t_LH,
        ("L", "G"): _t_LG,
        ("L", "Q"): _t_LQ,
        ("H", "G"): _t_HG,
        ("H", "Q"): _t_HQ,
        ("G", "Q"): _t_GQ,
    },
)

WITT = AlgebraSpec("witt", ("L",), {("L", "L"): _t_LL})

ALGEBRAS = {alg.name: alg for alg in (TOPOLOGICAL_N2, WITT)}


class Element:
    """A finite formal rational-linear combination of generators.

    Canonical form: no stored zero coefficients, no duplicate generators.
    Equality is term-map equality over the same algebra.  Instances are
    immutable by convention; all arithmetic returns new values.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraSpec, terms=None):
        self.algebra = algebra
        clean = {}
        if terms:
            for gen, coeff in terms.items():
                algebra.check_generator(gen)
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[gen] = coeff
        self.terms = clean

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self):
        """The common parity of all terms, or None if mixed (0 if zero)."""
        parities = {g.parity for g in self.terms}
        if not parities:
            return EVEN
        if len(parities) == 1:
            return parities.pop()
        return None

    def is_parity_homogeneous(self) -> bool:
        return self.parity() is not None

    def degree(self):
        """The common index of all terms, or None if mixed (0 if zero)."""
        degrees = {g.index for g in self.terms}
        if not degrees:
            return 0
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def coeff(self, gen: Generator) -> Fraction:
        return self.terms.get(gen, Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    # -- arithmetic ---------------------------------------------------

    def _require_same(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise ValueError(
                "cannot mix elements of %r and %r"
                % (self.algebra.name, other.algebra.name)
            )

    def __add__(self, other: "Element") -> "Element":
        self._require_same(other)
        acc = dict(self.terms)
        for gen, coeff in other.terms.items():
            acc[gen] = acc.get(gen, 0) + coeff
        return Element(self.algebra, acc)

    def __sub__(self, other: "Element") -> "Element":
        self._require_same(other)
        acc = dict(self.terms)
        for gen, coeff in other.terms.items():
            acc[gen] = acc.get(gen, 0) - coeff
        return Element(self.algebra, acc)

    def __neg__(self) -> "Element":
        return Element(self.algebra, {g: -c for g, c in self.terms.items()})

    def scale(self, scalar) -> "Element":
        scalar = Fraction(scalar)
        if scalar == 0:
            return self.algebra.zero()
        return Element(self.algebra, {g: scalar * c for g, c in self.terms.items()})

    def __rmul__(self, scalar) -> "Element":
        return self.scale(scalar)

    def __mul__(self, scalar) -> "Element":
        return self.scale(scalar)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for gen, coeff in self.sorted_terms():
            if coeff == 1:
                bits.append(str(gen))
            elif coeff == -1:
                bits.append("-%s" % gen)
            else:
                bits.append("%s*%s" % (coeff, gen))
        return " + ".join(bits).replace("+ -", "- ")


def bracket(x: Element, y: Element) -> Element:
    """The bracket [x, y], extended bilinearly from the structure constants."""
    x._require_same(y)
    if not x.terms or not y.terms:
        return x.algebra.zero()
    alg = x.algebra
    acc = {}
    for gx, cx in x.terms.items():
        for gy, cy in y.terms.items():
            cxy = cx * cy
            for c, g in alg.bracket_terms(gx, gy):
                acc[g] = acc.get(g, 0) + cxy * c
    return Element(alg, acc)


def jacobi_defect(alg: AlgebraSpec, x: Generator, y: Generator, z: Generator) -> Element:
    """The graded Jacobi combination; zero iff the identity holds at (x,y,z).

    Returns (-1)^{[x][z]}[x,[y,z]] + (-1)^{[y][x]}[y,[z,x]] + (-1)^{[z][y]}[z,[x,y]].
    """
    acc = {}

    def accumulate(sign, a, b, c):
        # sign * [a, [b, c]]
        for c1, g1 in alg.bracket_terms(b, c):
            for c2, g2 in alg.bracket_terms(a, g1):
                acc[g2] = acc.get(g2, 0) + sign * c1 * c2

    accumulate(-1 if x.parity & z.parity else 1, x, y, z)
    accumulate(-1 if y.parity & x.parity else 1, y, z, x)
    accumulate(-1 if z.parity & y.parity else 1, z, x, y)
    return Element(alg, acc)


def skew_defect(alg: AlgebraSpec, x: Generator, y: Generator) -> Element:
    """[x,y] + (-1)^{[x][y]} [y,x]; zero iff super-skew-symmetry holds at (x,y)."""
    sign = -1 if x.parity & y.parity else 1
    acc = {}
    for c, g in alg.bracket_terms(x, y):
        acc[g] = acc.get(g, 0) + c
    for c, g in alg.bracket_terms(y, x):
        acc[g] = acc.get(g, 0) + sign * c
    return Element(alg, acc)


def linear_combine(pairs) -> Element:
    """Canonical-form linear combination of (scalar, Element) pairs."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("linear_combine needs at least one (scalar, Element) pair")
    alg = pairs[0][1].algebra
    acc = {}
    for scalar, elt in pairs:
        if elt.algebra is not alg:
            raise ValueError(
                "cannot mix elements of %r and %r" % (alg.name, elt.algebra.name)
            )
        scalar = Fraction(scalar)
        for gen, coeff in elt.terms.items():
            acc[gen] = acc.get(gen, 0) + scalar * coeff
    return Element(alg, acc)
