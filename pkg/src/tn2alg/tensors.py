"""
Sparse tensor squares and cubes of the algebra, with Koszul-signed operators.

Basis tensors are ordered tuples of generators; no symmetrization is implied
by the storage.  The operators here are the super-twist on two slots, the
super-cyclic map on three slots, and the adjoint diagonal action

    x . (a (x) b) = [x,a] (x) b + (-1)^{[x][a]} a (x) [x,b]

(and its three-slot analogue).  Koszul signs are computed from generator
parities at the moment each term is built and never cached across
reorderings.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraSpec, Element, Generator


class _SparseTensor:
    """Shared machinery for Tensor2/Tensor3: a dict from slot tuples to Fraction."""

    __slots__ = ("algebra", "terms")
    RANK = 0

    def __init__(self, algebra: AlgebraSpec, terms=None):
        self.algebra = algebra
        clean = {}
        if terms:
            for slots, coeff in terms.items():
                if len(slots) != self.RANK:
                    raise ValueError(
                        "expected %d slots, got %r" % (self.RANK, (slots,))
                    )
                for gen in slots:
                    algebra.check_generator(gen)
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[slots] = coeff
        self.terms = clean

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, slots) -> Fraction:
        return self.terms.get(tuple(slots), Fraction(0))

    def parity(self):
        """Common parity (sum of slot parities mod 2), or None if mixed."""
        parities = {sum(g.parity for g in slots) & 1 for slots in self.terms}
        if not parities:
            return 0
        if len(parities) == 1:
            return parities.pop()
        return None

    def degree(self):
        """Common degree (sum of slot indices), or None if mixed."""
        degrees = {sum(g.index for g in slots) for slots in self.terms}
        if not degrees:
            return 0
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_parity_homogeneous(self) -> bool:
        return self.parity() is not None

    def is_degree_homogeneous(self) -> bool:
        return self.degree() is not None

    def support_window(self):
        """(min, max) over all slot indices, or None for the zero tensor."""
        if not self.terms:
            return None
        indices = [g.index for slots in self.terms for g in slots]
        return (min(indices), max(indices))

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: tuple(g.sort_key() for g in kv[0]),
        )

    # -- arithmetic ---------------------------------------------------

    def _require_same(self, other):
        if type(self) is not type(other) or self.algebra is not other.algebra:
            raise ValueError("tensor arithmetic needs matching type and algebra")

    def __add__(self, other):
        self._require_same(other)
        acc = dict(self.terms)
        for slots, coeff in other.terms.items():
            acc[slots] = acc.get(slots, 0) + coeff
        return type(self)(self.algebra, acc)

    def __sub__(self, other):
        self._require_same(other)
        acc = dict(self.terms)
        for slots, coeff in other.terms.items():
            acc[slots] = acc.get(slots, 0) - coeff
        return type(self)(self.algebra, acc)

    def __neg__(self):
        return type(self)(self.algebra, {s: -c for s, c in self.terms.items()})

    def scale(self, scalar):
        scalar = Fraction(scalar)
        if scalar == 0:
            return type(self)(self.algebra, {})
        return type(self)(
            self.algebra, {s: scalar * c for s, c in self.terms.items()}
        )

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __mul__(self, scalar):
        return self.scale(scalar)

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for slots, coeff in self.sorted_terms():
            mono = "(x)".join(str(g) for g in slots)
            if coeff == 1:
                bits.append(mono)
            elif coeff == -1:
                bits.append("-%s" % mono)
            else:
                bits.append("%s*%s" % (coeff, mono))
        return " + ".join(bits).replace("+ -", "- ")


class Tensor2(_SparseTensor):
    RANK = 2


class Tensor3(_SparseTensor):
    RANK = 3


def tensor2(x: Element, y: Element) -> Tensor2:
    """The elementary tensor x (x) y, expanded bilinearly."""
    x._require_same(y)
    acc = {}
    for gx, cx in x.terms.items():
        for gy, cy in y.terms.items():
            acc[(gx, gy)] = acc.get((gx, gy), 0) + cx * cy
    return Tensor2(x.algebra, acc)


def tensor3(x: Element, y: Element, z: Element) -> Tensor3:
    x._require_same(y)
    x._require_same(z)
    acc = {}
    for gx, cx in x.terms.items():
        for gy, cy in y.terms.items():
            for gz, cz in z.terms.items():
                key = (gx, gy, gz)
                acc[key] = acc.get(key, 0) + cx * cy * cz
    return Tensor3(x.algebra, acc)


def wedge(x: Element, y: Element) -> Tensor2:
    """x (x) y - y (x) x (the skew tensors used as r-matrix building blocks)."""
    return tensor2(x, y) - tensor2(y, x)


def twist(t: Tensor2) -> Tensor2:
    """Super-twist: a (x) b -> (-1)^{[a][b]} b (x) a, extended linearly."""
    acc = {}
    for (a, b), coeff in t.terms.items():
        if a.parity & b.parity:
            coeff = -coeff
        key = (b, a)
        acc[key] = acc.get(key, 0) + coeff
    return Tensor2(t.algebra, acc)


def cyclic(t: Tensor3) -> Tensor3:
    """Super-cyclic map: a(x)b(x)c -> (-1)^{[a]([b]+[c])} b(x)c(x)a."""
    acc = {}
    for (a, b, c), coeff in t.terms.items():
        if a.parity & ((b.parity + c.parity) & 1):
            coeff = -coeff
        key = (b, c, a)
        acc[key] = acc.get(key, 0) + coeff
    return Tensor3(t.algebra, acc)


def _require_action_operand(x: Element):
    if x.parity() is None:
        raise ValueError(
            "diagonal action needs a parity-homogeneous element; "
            "decompose %r first" % (x,)
        )


def act2(x: Element, t: Tensor2) -> Tensor2:
    """Adjoint diagonal action of x on a tensor square.

    x . (a (x) b) = [x,a] (x) b + (-1)^{[x][a]} a (x) [x,b].
    """
    _require_action_operand(x)
    if x.algebra is not t.algebra:
        raise ValueError("element and tensor belong to different algebras")
    alg = t.algebra
    acc = {}
    for gx, cx in x.terms.items():
        px = gx.parity
        for (a, b), ct in t.terms.items():
            c0 = cx * ct
            for c, g in alg.bracket_terms(gx, a):
                key = (g, b)
                acc[key] = acc.get(key, 0) + c0 * c
            c1 = -c0 if px & a.parity else c0
            for c, g in alg.bracket_terms(gx, b):
                key = (a, g)
                acc[key] = acc.get(key, 0) + c1 * c
    return Tensor2(alg, acc)


def act3(x: Element, t: Tensor3) -> Tensor3:
    """Adjoint diagonal action of x on a tensor cube (Koszul signs per slot)."""
    _require_action_operand(x)
    if x.algebra is not t.algebra:
        raise ValueError("element and tensor belong to different algebras")
    alg = t.algebra
    acc = {}
    for gx, cx in x.terms.items():
        px = gx.parity
        for (a, b, c), ct in t.terms.items():
            c0 = cx * ct
            for cc, g in alg.bracket_terms(gx, a):
                key = (g, b, c)
                acc[key] = acc.get(key, 0) + c0 * cc
            c1 = -c0 if px & a.parity else c0
            for cc, g in alg.bracket_terms(gx, b):
                key = (a, g, c)
                acc[key] = acc.get(key, 0) + c1 * cc
            c2 = -c1 if px & b.parity else c1
            for cc, g in alg.bracket_terms(gx, c):
                key = (a, b, g)
                acc[key] = acc.get(key, 0) + c2 * cc
    return Tensor3(alg, acc)


def skew_project(t: Tensor2) -> Tensor2:
    """(1 - twist) t; lands in the image of 1 (x) 1 - twist by construction."""
    return t - twist(t)


def is_skew(t: Tensor2) -> bool:
    """Membership in Im(1 (x) 1 - twist), tested as (1 + twist) t = 0.

    The kernel characterization is valid because the twist is an involution
    and the scalars have characteristic zero.
    """
    return (t + twist(t)).is_zero()
