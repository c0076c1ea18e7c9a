"""
Window-truncated derivation cohomology for the tensor-square module.

V = T (x) T is Z-graded by the sum of slot indices, and a homogeneous
derivation d of degree i and parity p assigns to each generator x_n a value
d(x_n) in V_{n+i} of parity [x_n]+p, subject to the super-Leibniz identity

    d([x,y]) = (-1)^{p[x]} x . d(y) - (-1)^{[y](p+[x])} y . d(x).

At window scale the unknowns are the coefficients of d(x_n) on basis
tensors with both slot indices inside `value_window`, for generator indices
n inside `gen_window`.  Every bracket relation [x_m, y_n] with m, n, m+n
inside `relation_window` is expanded exactly:  action terms that fall
outside `value_window` still produce rows (with the structurally-zero
contribution of the truncated unknowns), which is what replaces the
infinite-support finiteness arguments with boundary conditions.  The
resulting sparse homogeneous system is solved by exact elimination, and the
solution space is compared against the inner derivations

    u_inn : x -> (-1)^{[u][x]} x . u

generated by window-safe tensors u.  Because truncation can manufacture
phantom solutions that live only near the boundary of `gen_window`, the
dimension comparison is made after restricting all tables to an inner
sub-window of generators (`margin` indices away from the boundary).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import _FAMILY_ORDER, AlgebraSpec, Element, Generator
from .linsolve import SparseLinearSystem, rank_of_vectors
from .tensors import Tensor2, act2, twist


class ClosureError(ValueError):
    """The window configuration cannot support an exactly-assembled system."""


class SupportOverflowError(ValueError):
    """An inner derivation's values leave the value window."""

    def __init__(self, generator: Generator):
        self.generator = generator
        super().__init__(
            "inner derivation overflows the value window at %s" % (generator,)
        )


class WitnessError(ValueError):
    """No inner witness reproduces the table (truncation artifact or genuine)."""

    def __init__(self, generator: Generator):
        self.generator = generator
        super().__init__("inner witness disagrees with the table at %s" % (generator,))


@dataclass(frozen=True)
class WindowConfig:
    """Truncation parameters for one homogeneous derivation problem.

    gen_window       inclusive index range for the generators d is defined on
    value_window     inclusive index range for the tensor slots of d-values
    relation_window  bracket relations [x_m, y_n] are imposed when m, n and
                     m+n all lie here (defaults to gen_window)
    degree / parity  the homogeneity type of d
    margin           how far inside gen_window the phantom-free sub-window
                     starts; dimension comparisons happen there
    """

    gen_window: tuple
    value_window: tuple
    degree: int = 0
    parity: int = 0
    relation_window: tuple = None
    margin: int = 1

    def __post_init__(self):
        object.__setattr__(self, "gen_window", _as_window(self.gen_window))
        object.__setattr__(self, "value_window", _as_window(self.value_window))
        rel = self.relation_window
        object.__setattr__(
            self, "relation_window", self.gen_window if rel is None else _as_window(rel)
        )

    def validate(self):
        g_lo, g_hi = self.gen_window
        v_lo, v_hi = self.value_window
        r_lo, r_hi = self.relation_window
        if self.parity not in (0, 1):
            raise ClosureError("parity must be 0 (even) or 1 (odd)")
        if self.margin < 0:
            raise ClosureError("margin must be nonnegative")
        if not (g_lo <= r_lo and r_hi <= g_hi):
            raise ClosureError("relation_window must lie inside gen_window")
        if g_lo + self.margin > g_hi - self.margin:
            raise ClosureError("margin leaves no generators in the sub-window")
        # Closure: relation rows shift value slots by at most R, and the
        # L_0-witness formula needs action headroom around every image slice,
        # so the value window must dominate the generator window by R plus
        # the degree shift on each side.
        reach = max(abs(r_lo), abs(r_hi))
        need_lo = g_lo + min(0, self.degree) - reach
        need_hi = g_hi + max(0, self.degree) + reach
        if v_lo > need_lo or v_hi < need_hi:
            raise ClosureError(
                "value_window %r too narrow: closure needs [%d, %d]"
                % (self.value_window, need_lo, need_hi)
            )

    def gen_indices(self):
        return range(self.gen_window[0], self.gen_window[1] + 1)

    def inner_gen_indices(self):
        return range(self.gen_window[0] + self.margin, self.gen_window[1] - self.margin + 1)

    def to_dict(self) -> dict:
        return {
            "gen_window": list(self.gen_window),
            "value_window": list(self.value_window),
            "relation_window": list(self.relation_window),
            "degree": self.degree,
            "parity": self.parity,
            "margin": self.margin,
        }


def _as_window(window) -> tuple:
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ClosureError("empty window %r" % ((lo, hi),))
    return (lo, hi)


def _family_pairs(algebra: AlgebraSpec, parity: int) -> tuple:
    return tuple(
        (fa, fb)
        for fa in algebra.families
        for fb in algebra.families
        if ((_parity_of(fa) + _parity_of(fb)) & 1) == parity
    )


def _parity_of(family: str) -> int:
    return Generator(family, 0).parity


def _slice_terms(algebra, degree, parity, window) -> list:
    """Ordered basis of V_degree with the given parity and windowed slots."""
    v_lo, v_hi = window
    pairs = _family_pairs(algebra, parity)
    out = []
    for a in range(max(v_lo, degree - v_hi), min(v_hi, degree - v_lo) + 1):
        b = degree - a
        for fa, fb in pairs:
            out.append((Generator(fa, a), Generator(fb, b)))
    return out


def _term_sort_key(term):
    a, b = term
    return (a.index, _FAMILY_ORDER[a.family], _FAMILY_ORDER[b.family])


class DerivationCoords:
    """Fixed ordering of the unknown coefficients of a windowed derivation."""

    def __init__(self, algebra: AlgebraSpec, cfg: WindowConfig):
        self.algebra = algebra
        self.cfg = cfg
        self.gens = sorted(
            algebra.generators(*cfg.gen_window), key=Generator.sort_key
        )
        self.labels = []
        self.col = {}
        for gen in self.gens:
            slots = _slice_terms(
                algebra,
                gen.index + cfg.degree,
                (gen.parity + cfg.parity) & 1,
                cfg.value_window,
            )
            for term in slots:
                self.col[(gen, term)] = len(self.labels)
                self.labels.append((gen, term))

    @property
    def num_cols(self) -> int:
        return len(self.labels)

    def table_to_vector(self, table: "DerivationTable") -> dict:
        vec = {}
        for gen, tensor in table.values.items():
            for term, coeff in tensor.terms.items():
                col = self.col.get((gen, term))
                if col is None:
                    raise SupportOverflowError(gen)
                vec[col] = coeff
        return vec

    def vector_to_table(self, vec: dict) -> "DerivationTable":
        values = {gen: {} for gen in self.gens}
        for col, coeff in vec.items():
            gen, term = self.labels[col]
            values[gen][term] = coeff
        return DerivationTable(
            self.algebra,
            {g: Tensor2(self.algebra, t) for g, t in values.items()},
            degree=self.cfg.degree,
            parity=self.cfg.parity,
        )

    def subwindow_cols(self) -> set:
        indices = set(self.cfg.inner_gen_indices())
        return {
            c for c, (gen, _) in enumerate(self.labels) if gen.index in indices
        }


class DerivationTable:
    """A windowed derivation: one homogeneous tensor value per generator."""

    __slots__ = ("algebra", "values", "degree", "parity")

    def __init__(self, algebra, values, degree, parity):
        self.algebra = algebra
        self.degree = degree
        self.parity = parity
        self.values = {}
        for gen, tensor in values.items():
            algebra.check_generator(gen)
            if not tensor.is_zero():
                if tensor.degree() != gen.index + degree:
                    raise ValueError(
                        "value at %s has degree %r, expected %d"
                        % (gen, tensor.degree(), gen.index + degree)
                    )
                if tensor.parity() != ((gen.parity + parity) & 1):
                    raise ValueError("value at %s has the wrong parity" % (gen,))
            self.values[gen] = tensor

    def value(self, gen: Generator) -> Tensor2:
        try:
            return self.values[gen]
        except KeyError:
            raise KeyError("generator %s outside the table's window" % (gen,))

    def is_zero(self) -> bool:
        return all(t.is_zero() for t in self.values.values())

    def __eq__(self, other):
        return (
            isinstance(other, DerivationTable)
            and self.algebra is other.algebra
            and self.degree == other.degree
            and self.parity == other.parity
            and self.values == other.values
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "DerivationTable(degree=%d, parity=%d, %d generators)" % (
            self.degree,
            self.parity,
            len(self.values),
        )


@dataclass
class DerivationSystem:
    """The assembled sparse linearization of the derivation identity."""

    coords: DerivationCoords
    system: SparseLinearSystem
    relations: list

    @property
    def num_unknowns(self) -> int:
        return self.coords.num_cols

    @property
    def num_rows(self) -> int:
        return self.system.num_rows


def _relation_pairs(algebra: AlgebraSpec, cfg: WindowConfig) -> list:
    r_lo, r_hi = cfg.relation_window
    gens = sorted(algebra.generators(r_lo, r_hi), key=Generator.sort_key)
    pairs = []
    for i, x in enumerate(gens):
        for y in gens[i:]:
            if r_lo <= x.index + y.index <= r_hi:
                pairs.append((x, y))
    return pairs


def assemble_system(algebra: AlgebraSpec, cfg: WindowConfig) -> DerivationSystem:
    """Linearize the derivation identity over every windowed bracket relation.

    One row is emitted per (relation, tensor basis term) with any nonzero
    coefficient -- including terms outside the value window, whose rows
    encode the truncation boundary conditions.  Identically-cancelling
    relations contribute nothing.
    """
    cfg.validate()
    coords = DerivationCoords(algebra, cfg)
    system = SparseLinearSystem(coords.num_cols)
    p = cfg.parity
    relations = _relation_pairs(algebra, cfg)
    for x, y in relations:
        rows = {}

        def put(term, col, coeff):
            row = rows.get(term)
            if row is None:
                rows[term] = {col: coeff}
            else:
                row[col] = row.get(col, 0) + coeff

        # d([x, y]) contributes the unknowns of the bracket's generators.
        for c, g in algebra.bracket_terms(x, y):
            for term in _gen_terms(coords, g):
                put(term, coords.col[(g, term)], c)
        # -(-1)^{p[x]} x . d(y)
        sx = -1 if (p & x.parity) else 1
        _accumulate_action(algebra, coords, x, y, -sx, put)
        # +(-1)^{[y](p+[x])} y . d(x)
        sy = -1 if (y.parity & ((p + x.parity) & 1)) else 1
        _accumulate_action(algebra, coords, y, x, sy, put)

        for term in sorted(rows, key=_term_sort_key):
            system.add_row(rows[term])
    return DerivationSystem(coords, system, relations)


def _gen_terms(coords: DerivationCoords, g: Generator):
    cfg = coords.cfg
    return _slice_terms(
        coords.algebra,
        g.index + cfg.degree,
        (g.parity + cfg.parity) & 1,
        cfg.value_window,
    )


def _accumulate_action(algebra, coords, actor, arg, sign, put):
    """Rows of sign * (actor . d(arg)), expanded over d(arg)'s unknowns."""
    pa = actor.parity
    for term in _gen_terms(coords, arg):
        col = coords.col[(arg, term)]
        a, b = term
        for c, g in algebra.bracket_terms(actor, a):
            put((g, b), col, sign * c)
        s = -sign if (pa & a.parity) else sign
        for c, g in algebra.bracket_terms(actor, b):
            put((a, g), col, s * c)


def inner_derivation(u: Tensor2, cfg: WindowConfig) -> DerivationTable:
    """The table x -> (-1)^{[u][x]} x . u over the generator window.

    u must be parity- and degree-homogeneous matching cfg, and small enough
    that every action value stays inside the value window; otherwise the
    offending generator is reported.
    """
    algebra = u.algebra
    if not u.is_zero():
        if u.parity() != cfg.parity:
            raise ValueError("inner witness parity %r != config parity %d"
                             % (u.parity(), cfg.parity))
        if u.degree() != cfg.degree:
            raise ValueError("inner witness degree %r != config degree %d"
                             % (u.degree(), cfg.degree))
    v_lo, v_hi = cfg.value_window
    values = {}
    for gen in sorted(algebra.generators(*cfg.gen_window), key=Generator.sort_key):
        value = act2(algebra.monomial(gen), u)
        if cfg.parity & gen.parity:
            value = -value
        window = value.support_window()
        if window is not None and (window[0] < v_lo or window[1] > v_hi):
            raise SupportOverflowError(gen)
        values[gen] = value
    return DerivationTable(algebra, values, degree=cfg.degree, parity=cfg.parity)


def solve_nullspace(dsys: DerivationSystem) -> list:
    """Canonical basis of the windowed derivation space, as tables."""
    return [dsys.coords.vector_to_table(v) for v in dsys.system.nullspace()]


def recover_inner_witness(table: DerivationTable, cfg: WindowConfig) -> Tensor2:
    """Recover u with table = u_inn via u = -(1/i) d(L_0); degree i != 0 only.

    The candidate is verified against the whole generator window; a
    disagreement (or a value-window overflow of the candidate's own table)
    raises WitnessError naming the first bad generator.
    """
    i = table.degree
    if i == 0:
        raise ValueError("the L_0 witness formula needs degree != 0")
    gen_l0 = Generator("L", 0)
    if gen_l0 not in table.values:
        raise ValueError("witness recovery needs L_0 inside the generator window")
    u = table.value(gen_l0).scale(Fraction(-1, i))
    try:
        candidate = inner_derivation(u, cfg)
    except SupportOverflowError as exc:
        raise WitnessError(exc.generator)
    for gen in sorted(candidate.values, key=Generator.sort_key):
        if candidate.values[gen] != table.values.get(gen):
            raise WitnessError(gen)
    return u


def inner_candidate_terms(algebra: AlgebraSpec, cfg: WindowConfig) -> list:
    """Single-term homogeneous tensors u whose inner tables respect the window.

    Safety is structural: both slots keep a full generator-window shift of
    headroom inside the value window, so no action can overflow.
    """
    v_lo, v_hi = cfg.value_window
    reach = max(abs(cfg.gen_window[0]), abs(cfg.gen_window[1]))
    safe = (v_lo + reach, v_hi - reach)
    if safe[0] > safe[1]:
        return []
    return [
        Tensor2(algebra, {term: 1})
        for term in _slice_terms(algebra, cfg.degree, cfg.parity, safe)
    ]


@dataclass
class CohomologyReport:
    """Windowed comparison of derivations against inner derivations.

    The headline dimensions are measured on the inner generator sub-window
    (margin indices inside gen_window) to suppress truncation-boundary
    phantoms; `raw_*` are the unrestricted dimensions.  quotient_dim is the
    window-scale stand-in for dim H^1 at this degree and parity.
    """

    config: WindowConfig
    unknowns: int
    rows: int
    nullspace_dim: int
    inner_dim: int
    quotient_dim: int
    raw_nullspace_dim: int
    raw_inner_dim: int
    inner_contained: bool
    witness_failures: list
    nullspace_basis: list = field(repr=False, default_factory=list)
    inner_basis: list = field(repr=False, default_factory=list)
    witnesses: list = field(repr=False, default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.quotient_dim == 0
            and self.inner_contained
            and not self.witness_failures
        )

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "unknowns": self.unknowns,
            "rows": self.rows,
            "nullspace_dim": self.nullspace_dim,
            "inner_dim": self.inner_dim,
            "quotient_dim": self.quotient_dim,
            "raw_nullspace_dim": self.raw_nullspace_dim,
            "raw_inner_dim": self.raw_inner_dim,
            "inner_contained": self.inner_contained,
            "witness_failures": [str(g) for g in self.witness_failures],
            "passed": self.passed,
        }


def compare_der_vs_inn(algebra: AlgebraSpec, cfg: WindowConfig) -> CohomologyReport:
    """Solve the windowed derivation system and compare with inner tables."""
    dsys = assemble_system(algebra, cfg)
    coords = dsys.coords
    null_vecs = dsys.system.nullspace()

    inner_tables = [
        inner_derivation(u, cfg) for u in inner_candidate_terms(algebra, cfg)
    ]
    inner_vecs = [coords.table_to_vector(t) for t in inner_tables]
    inner_contained = all(dsys.system.is_solution(v) for v in inner_vecs)

    sub = coords.subwindow_cols()
    nullspace_dim = rank_of_vectors(null_vecs, sub)
    inner_dim = rank_of_vectors(inner_vecs, sub)

    tables = [coords.vector_to_table(v) for v in null_vecs]
    witnesses = []
    witness_failures = []
    if cfg.degree != 0:
        for table in tables:
            try:
                witnesses.append(recover_inner_witness(table, cfg))
            except WitnessError as exc:
                witness_failures.append(exc.generator)

    return CohomologyReport(
        config=cfg,
        unknowns=dsys.num_unknowns,
        rows=dsys.num_rows,
        nullspace_dim=nullspace_dim,
        inner_dim=inner_dim,
        quotient_dim=nullspace_dim - inner_dim,
        raw_nullspace_dim=len(null_vecs),
        raw_inner_dim=rank_of_vectors(inner_vecs),
        inner_contained=inner_contained,
        witness_failures=witness_failures,
        nullspace_basis=tables,
        inner_basis=inner_tables,
        witnesses=witnesses,
    )


# -- invariant tensors and the skew-invariance probe ----------------------


def _action_blocks(algebra: AlgebraSpec, cfg: WindowConfig, transform):
    """Per-(degree, parity) nullspaces of {r : transform(x . r) = 0 for all x}.

    transform maps a Tensor2 to a Tensor2 (identity for the invariant
    kernel, 1 + twist for the skew-invariance probe).  Yields tuples
    (degree, parity, basis tensors).
    """
    v_lo, v_hi = cfg.value_window
    gens = sorted(algebra.generators(*cfg.gen_window), key=Generator.sort_key)
    for degree in range(2 * v_lo, 2 * v_hi + 1):
        for parity in (0, 1):
            terms = _slice_terms(algebra, degree, parity, cfg.value_window)
            if not terms:
                continue
            col = {term: k for k, term in enumerate(terms)}
            system = SparseLinearSystem(len(terms))
            for g in gens:
                rows = {}
                x = algebra.monomial(g)
                for term, j in col.items():
                    image = transform(act2(x, Tensor2(algebra, {term: 1})))
                    for out_term, c in image.terms.items():
                        row = rows.setdefault(out_term, {})
                        row[j] = row.get(j, 0) + c
                for out_term in sorted(rows, key=_term_sort_key):
                    system.add_row(rows[out_term])
            basis = [
                Tensor2(algebra, {terms[c]: x for c, x in vec.items()})
                for vec in system.nullspace()
            ]
            yield degree, parity, basis


def _degree_subwindow(cfg: WindowConfig) -> tuple:
    reach = max(abs(cfg.gen_window[0]), abs(cfg.gen_window[1]))
    return (2 * (cfg.value_window[0] + reach), 2 * (cfg.value_window[1] - reach))


@dataclass
class KernelReport:
    """Basis of windowed invariant tensors, restricted to trustable degrees."""

    config: WindowConfig
    degree_window: tuple
    basis: list
    total_dim_all_degrees: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "degree_window": list(self.degree_window),
            "dim": self.dim,
            "total_dim_all_degrees": self.total_dim_all_degrees,
        }


def invariant_kernel(algebra: AlgebraSpec, cfg: WindowConfig) -> KernelReport:
    """Solve x . r = 0 for all windowed generators x, r window-supported."""
    cfg.validate()
    lo, hi = _degree_subwindow(cfg)
    basis = []
    total = 0
    for degree, parity, block in _action_blocks(algebra, cfg, lambda t: t):
        total += len(block)
        if lo <= degree <= hi:
            basis.extend(block)
    return KernelReport(cfg, (lo, hi), basis, total)


@dataclass
class SkewProbeReport:
    """Tensors whose whole orbit is skew, checked to be skew themselves."""

    config: WindowConfig
    degree_window: tuple
    space_dim: int
    violations: list

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "degree_window": list(self.degree_window),
            "space_dim": self.space_dim,
            "violations": [repr(t) for t in self.violations],
            "passed": self.passed,
        }


def skew_invariance_probe(algebra: AlgebraSpec, cfg: WindowConfig) -> SkewProbeReport:
    """Check {r : (1+twist)(x . r) = 0 for all x} lands in ker(1+twist)."""
    cfg.validate()
    lo, hi = _degree_subwindow(cfg)
    space_dim = 0
    violations = []
    for degree, parity, block in _action_blocks(
        algebra, cfg, lambda t: t + twist(t)
    ):
        if not (lo <= degree <= hi):
            continue
        space_dim += len(block)
        for tensor in block:
            if not (tensor + twist(tensor)).is_zero():
                violations.append(tensor)
    return SkewProbeReport(cfg, (lo, hi), space_dim, violations)


def skew_witness(r: Tensor2, gen_window: tuple):
    """First windowed generator x with (1+twist)(x . r) not zero, or None."""
    algebra = r.algebra
    for g in sorted(algebra.generators(*gen_window), key=Generator.sort_key):
        image = act2(algebra.monomial(g), r)
        if not (image + twist(image)).is_zero():
            return g
    return None
