"""
Coboundary cobrackets, the classical Yang-Baxter defect, and the axiom sweeps.

For a parity-homogeneous tensor r the coboundary cobracket is

    Delta_r(x) = (-1)^{[r][x]} x . r

and the classical Yang-Baxter defect of r = sum_i a_i (x) b_i is

    c(r) = [r12, r13] + [r12, r23] + [r13, r23]
         = sum_ij ( (-1)^{[a_j][b_i]} [a_i,a_j] (x) b_i (x) b_j
                  +                    a_i (x) [b_i,a_j] (x) b_j
                  + (-1)^{[a_j][b_i]}  a_i (x) a_j (x) [b_i,b_j] ).

The componentwise signs follow from moving a factor of parity p past one of
parity q at cost (-1)^{pq}; they are cross-validated by the triangular
two-element examples and by the modified-equation falsification sweeps in
the test suite.  r satisfies the modified Yang-Baxter equation when
x . c(r) = 0 for every x; the sweep here checks that for all generators in
a stated index window.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraSpec, Element, Generator
from .tensors import Tensor2, Tensor3, act2, act3, cyclic, is_skew, twist


class RMatrix:
    """A parity-homogeneous candidate r-matrix.

    Bialgebra constructions additionally need r even and skew; those are
    queryable, not enforced, so that falsification tests can exercise bad
    inputs.
    """

    __slots__ = ("tensor", "parity")

    def __init__(self, tensor: Tensor2):
        parity = tensor.parity()
        if parity is None:
            raise ValueError("r-matrix must be parity-homogeneous")
        self.tensor = tensor
        self.parity = parity

    @property
    def algebra(self) -> AlgebraSpec:
        return self.tensor.algebra

    def is_even(self) -> bool:
        return self.parity == 0

    def is_skew(self) -> bool:
        return is_skew(self.tensor)

    def __repr__(self):
        return "RMatrix(%r)" % (self.tensor,)


def cobracket(r: RMatrix, x: Element) -> Tensor2:
    """Delta_r(x) = (-1)^{[r][x]} x . r for parity-homogeneous x."""
    px = x.parity()
    if px is None:
        raise ValueError("cobracket needs a parity-homogeneous element")
    out = act2(x, r.tensor)
    if r.parity & px:
        out = -out
    return out


def cybe_defect(r: RMatrix) -> Tensor3:
    """The classical Yang-Baxter defect c(r); zero iff r is triangular."""
    alg = r.algebra
    terms = list(r.tensor.terms.items())
    acc = {}
    for (ai, bi), ci in terms:
        for (aj, bj), cj in terms:
            c0 = ci * cj
            csig = -c0 if aj.parity & bi.parity else c0
            for c, g in alg.bracket_terms(ai, aj):
                key = (g, bi, bj)
                acc[key] = acc.get(key, 0) + csig * c
            for c, g in alg.bracket_terms(bi, aj):
                key = (ai, g, bj)
                acc[key] = acc.get(key, 0) + c0 * c
            for c, g in alg.bracket_terms(bi, bj):
                key = (ai, aj, g)
                acc[key] = acc.get(key, 0) + csig * c
    return Tensor3(alg, acc)


def cocycle_defect(r: RMatrix, x: Element, y: Element) -> Tensor2:
    """1-cocycle defect of Delta_r at (x, y); identically zero for coboundaries.

    Delta_r is the inner derivation attached to r, so the defect carries the
    derivation-identity signs

        Delta_r([x,y]) - (-1)^{[r][x]} x . Delta_r(y)
                       + (-1)^{[y]([r]+[x])} y . Delta_r(x);

    for even r (the bialgebra case) they reduce to the unsigned form.
    """
    from .algebra import bracket

    px, py = x.parity(), y.parity()
    if px is None or py is None:
        raise ValueError("cocycle defect needs parity-homogeneous elements")
    out = cobracket(r, bracket(x, y))
    term_x = act2(x, cobracket(r, y))
    if r.parity & px:
        term_x = -term_x
    term_y = act2(y, cobracket(r, x))
    if py & ((r.parity + px) & 1):
        term_y = -term_y
    return out - term_x + term_y


def co_jacobi_defect(r: RMatrix, x: Element) -> Tensor3:
    """(1 + cyclic + cyclic^2) (1 (x) Delta_r) Delta_r(x).

    Applying Delta_r in the second slot costs (-1)^{[r] * parity(first slot)}.
    """
    alg = r.algebra
    t = cobracket(r, x)
    acc = {}
    for (a, b), coeff in t.terms.items():
        inner = cobracket(r, alg.monomial(b))
        if r.parity & a.parity:
            coeff = -coeff
        for (u, v), c in inner.terms.items():
            key = (a, u, v)
            acc[key] = acc.get(key, 0) + coeff * c
    once = Tensor3(alg, acc)
    twice = cyclic(once)
    return once + twice + cyclic(twice)


@dataclass
class CheckReport:
    """Result of one windowed axiom sweep, in the CLI's JSON shape."""

    check: str
    window: tuple | None
    violations: list = field(default_factory=list)
    defect_terms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations and self.defect_terms == 0

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "window": list(self.window) if self.window else None,
            "violations": [str(v) for v in self.violations],
            "defect_terms": self.defect_terms,
            "passed": self.passed,
        }


def skewness_check(r: RMatrix) -> CheckReport:
    defect = r.tensor + twist(r.tensor)
    return CheckReport("skew", None, defect_terms=len(defect.terms))


def cybe_check(r: RMatrix) -> CheckReport:
    return CheckReport("cybe", None, defect_terms=len(cybe_defect(r).terms))


def mybe_check(r: RMatrix, gen_window: tuple) -> CheckReport:
    """x . c(r) = 0 for every generator x with index in gen_window."""
    lo, hi = gen_window
    defect = cybe_defect(r)
    violations = []
    if not defect.is_zero():
        for g in r.algebra.generators(lo, hi):
            if not act3(r.algebra.monomial(g), defect).is_zero():
                violations.append(g)
    return CheckReport("mybe", gen_window, violations=violations)


def co_skew_check(r: RMatrix, gen_window: tuple) -> CheckReport:
    """Delta_r(x) lands in Im(1 (x) 1 - twist) for every windowed generator."""
    lo, hi = gen_window
    violations = []
    for g in r.algebra.generators(lo, hi):
        if not is_skew(cobracket(r, r.algebra.monomial(g))):
            violations.append(g)
    return CheckReport("coskew", gen_window, violations=violations)


def co_jacobi_check(r: RMatrix, gen_window: tuple) -> CheckReport:
    lo, hi = gen_window
    violations = []
    for g in r.algebra.generators(lo, hi):
        if not co_jacobi_defect(r, r.algebra.monomial(g)).is_zero():
            violations.append(g)
    return CheckReport("cojacobi", gen_window, violations=violations)


def cocycle_check(r: RMatrix, gen_window: tuple) -> CheckReport:
    """cocycle_defect = 0 over all ordered windowed generator pairs."""
    lo, hi = gen_window
    gens = r.algebra.generators(lo, hi)
    violations = []
    for gx in gens:
        x = r.algebra.monomial(gx)
        for gy in gens:
            if not cocycle_defect(r, x, r.algebra.monomial(gy)).is_zero():
                violations.append((gx, gy))
    return CheckReport(
        "cocycle", gen_window, violations=["%s,%s" % pair for pair in violations]
    )


def run_r_checks(r: RMatrix, gen_window: tuple) -> list:
    """The full battery used by the CLI: skew, CYBE, MYBE, co-axioms, cocycle."""
    return [
        skewness_check(r),
        cybe_check(r),
        mybe_check(r, gen_window),
        co_skew_check(r, gen_window),
        co_jacobi_check(r, gen_window),
        cocycle_check(r, gen_window),
    ]
