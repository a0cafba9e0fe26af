"""Comodule algebras A and left A-module objects in comodules.

Every A-module object ``M`` has ``action: A⊗M → M`` (a dim M × (dim A · dim M) matrix)
that is colinear for the diagonal coaction on ``A⊗M``. Constructions on comodules
(shifts, cylinders) lift to A-module objects by inducing the action on the
sub- or quotient space.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from tqdm.auto import tqdm

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.comod import (
    ColinearMap,
    Comodule,
    coinvariants,
    colinearity_terms,
    is_colinear,
    is_injective,
    quotient_comodule,
    regular,
    require_same_hopf,
    tensor_diagonal,
    trivial,
    validate_comodule,
)
from hopfcyc.algebra.exactlin import Matrix, Term, VectorSpace
from hopfcyc.algebra.hopf_core import (
    HopfAlgebra,
    IntegralData,
    StructureError,
    ValidationReport,
    algebra_failures,
    check_shape,
    swap,
)
from hopfcyc.algebra.stable_cat import (
    Cocylinder,
    Cylinder,
    Shift,
    desuspend,
    is_stable_equivalence,
    mapping_cocylinder,
    mapping_cylinder,
    suspend,
)
from hopfcyc.logging import TableLogger, logger


@dataclass(frozen=True, eq=False)
class ComoduleAlgebra:
    """An algebra in right H-comodules; bialgebra tables are optional."""

    name: str
    comodule: Comodule
    mult: Matrix
    unit: Matrix
    comult: Optional[Matrix] = None
    counit: Optional[Matrix] = None
    antipode: Optional[Matrix] = None

    @property
    def dim(self) -> int:
        return self.comodule.dim

    @property
    def hopf(self) -> HopfAlgebra:
        return self.comodule.hopf

    @property
    def K(self):
        return self.comodule.K

    @property
    def space(self) -> VectorSpace:
        return self.comodule.space

    @property
    def has_bialgebra(self) -> bool:
        return self.comult is not None and self.counit is not None

    def identity(self) -> Matrix:
        return el.identity(self.dim, self.K)


def regular_algebra(h: HopfAlgebra, name: str = None) -> ComoduleAlgebra:
    """H as an algebra in its own comodules, coaction Δ."""
    return ComoduleAlgebra(
        name or h.name, regular(h), h.mult, h.unit, h.comult, h.counit, h.antipode
    )


def trivial_algebra(h: HopfAlgebra, name: str = "k") -> ComoduleAlgebra:
    one = el.identity(1, h.K)
    return ComoduleAlgebra(name, trivial(h), one, one, one, one, one)


def validate_algebra(a: ComoduleAlgebra) -> ValidationReport:
    report = validate_comodule(a.comodule)
    report.subject = a.name
    check_shape(report, "mult", a.mult, (a.dim, a.dim * a.dim))
    check_shape(report, "unit", a.unit, (a.dim, 1))
    if report.shape_errors:
        return report
    report.failures += algebra_failures(a.mult, a.unit)
    pair = tensor_diagonal(a.comodule, a.comodule)
    if not is_colinear(a.mult, pair, a.comodule):
        report.failures.append("mult_colinear")
    if not is_colinear(a.unit, trivial(a.hopf), a.comodule):
        report.failures.append("unit_colinear")
    return report


@dataclass(frozen=True, eq=False)
class AModObject:
    name: str
    algebra: ComoduleAlgebra
    comodule: Comodule
    action: Matrix

    @property
    def dim(self) -> int:
        return self.comodule.dim

    @property
    def K(self):
        return self.comodule.K

    def identity(self) -> Matrix:
        return self.comodule.identity()


@dataclass(frozen=True, eq=False)
class AModMap:
    source: AModObject
    target: AModObject
    matrix: Matrix

    @property
    def colinear(self) -> ColinearMap:
        return ColinearMap(self.source.comodule, self.target.comodule, self.matrix)

    def is_a_linear(self) -> bool:
        return is_a_linear(self.matrix, self.source, self.target)


def is_a_linear(f: Matrix, M: AModObject, N: AModObject) -> bool:
    I_a = M.algebra.identity()
    return el.equal(f * M.action, N.action * el.kron(I_a, f))


def a_linearity_terms(unknown: str, M: AModObject, N: AModObject) -> List[Term]:
    """Terms of ``F∘act_M − act_N∘(id_A⊗F)``."""
    return [
        Term(unknown, right=M.action),
        Term(unknown, left=N.action, op="left_id", d=M.algebra.dim, coef=-M.K.one),
    ]


def validate_algebra_and_module(a: ComoduleAlgebra, m: AModObject) -> ValidationReport:
    report = validate_algebra(a)
    report.merge(validate_comodule(m.comodule), prefix=f"{m.name}.")
    check_shape(report, f"{m.name}.action", m.action, (m.dim, a.dim * m.dim))
    if report.shape_errors:
        return report
    I_a, I_m = a.identity(), m.identity()
    if not el.equal(m.action * el.kron(a.mult, I_m), m.action * el.kron(I_a, m.action)):
        report.failures.append("action_associativity")
    if not el.equal(m.action * el.kron(a.unit, I_m), I_m):
        report.failures.append("action_unitality")
    if not is_colinear(m.action, tensor_diagonal(a.comodule, m.comodule), m.comodule):
        report.failures.append("action_colinear")
    return report


def require_amodule(m: AModObject):
    report = validate_algebra_and_module(m.algebra, m)
    if not report.ok:
        raise StructureError(f"A-module object '{m.name}'", report)


def regular_amodule(a: ComoduleAlgebra, name: str = None) -> AModObject:
    return AModObject(name or a.name, a, a.comodule, a.mult)


def free_amodule(a: ComoduleAlgebra, v: Comodule, name: str = None) -> AModObject:
    """``A⊗V`` with ``a·(a′⊗v) = aa′⊗v`` and the diagonal coaction."""
    require_same_hopf(a.comodule, v)
    comodule = tensor_diagonal(a.comodule, v, name=name or f"{a.name}*{v.name}")
    return AModObject(comodule.name, a, comodule, el.kron(a.mult, v.identity()))


def tensor_power(a: ComoduleAlgebra, n: int) -> AModObject:
    """``A^{⊗n}`` (n ≥ 1) acted on through its first factor."""
    if n == 1:
        return regular_amodule(a)
    rest = a.comodule
    for _ in range(n - 2):
        rest = tensor_diagonal(rest, a.comodule)
    return free_amodule(a, rest, name=f"{a.name}^{n}")


def with_hopf_factor(X: AModObject) -> AModObject:
    """``X⊗H`` with the diagonal coaction, acted on through X."""
    h = X.comodule.hopf
    comodule = tensor_diagonal(X.comodule, regular(h))
    return AModObject(comodule.name, X.algebra, comodule, el.kron(X.action, h.identity()))


def amod_direct_sum(M: AModObject, N: AModObject, comodule: Comodule) -> AModObject:
    """``M ⊕ N`` over an already assembled sum comodule."""
    a = M.algebra.dim
    m, n = M.dim, N.dim
    entries = {}
    for i, col, value in el.iter_entries(M.action):
        b, j = divmod(col, m)
        entries[(i, b * (m + n) + j)] = value
    for i, col, value in el.iter_entries(N.action):
        b, j = divmod(col, n)
        entries[(m + i, b * (m + n) + m + j)] = value
    action = el.from_entries(entries, (m + n, a * (m + n)), M.K)
    return AModObject(comodule.name, M.algebra, comodule, action)


def induced_quotient(M: AModObject, incl: Matrix, comodule: Comodule, split: el.Quotient) -> AModObject:
    """Action ``π∘act∘(id⊗σ)`` on a quotient by an A-submodule."""
    I_a = M.algebra.identity()
    if not el.contains(incl, M.action * el.kron(I_a, incl)):
        raise ValueError(f"Subspace of '{M.name}' is not an A-submodule.")
    action = split.projection * M.action * el.kron(I_a, split.section)
    return AModObject(comodule.name, M.algebra, comodule, action)


def induced_sub(M: AModObject, incl: Matrix, comodule: Comodule, split: el.Quotient) -> AModObject:
    """Action ``r∘act∘(id⊗ι)`` on an A-submodule with coordinates ``r``."""
    I_a = M.algebra.identity()
    image = M.action * el.kron(I_a, incl)
    if not el.contains(incl, image):
        raise ValueError(f"Subspace of '{M.name}' is not an A-submodule.")
    return AModObject(comodule.name, M.algebra, comodule, split.retraction * image)


def quotient_amodule(M: AModObject, incl: Matrix, name: str = None) -> Tuple[AModObject, el.Quotient]:
    comodule, split = quotient_comodule(M.comodule, incl, name=name)
    return induced_quotient(M, incl, comodule, split), split


@dataclass(frozen=True, eq=False)
class AShift:
    object: AModObject
    ambient: AModObject
    shift: Shift


def a_suspend(X: AModObject) -> AShift:
    shift = suspend(X.comodule)
    ambient = with_hopf_factor(X)
    split = el.Quotient(shift.object.space, shift.projection, shift.section, shift.retraction, ())
    obj = induced_quotient(ambient, shift.inclusion, shift.object, split)
    return AShift(obj, ambient, shift)


def a_desuspend(X: AModObject, integ: Optional[IntegralData] = None) -> AShift:
    shift = desuspend(X.comodule, integ)
    ambient = with_hopf_factor(X)
    split = el.Quotient(shift.object.space, None, None, shift.retraction, ())
    obj = induced_sub(ambient, shift.inclusion, shift.object, split)
    return AShift(obj, ambient, shift)


def a_shift_map(f: Matrix, source: AShift, target: AShift) -> Matrix:
    lifted = el.kron(f, source.object.comodule.hopf.identity())
    return target.shift.projection * lifted * source.shift.section


@dataclass(frozen=True, eq=False)
class ACylinder:
    object: AModObject
    cylinder: Cylinder
    suspension: AShift

    @property
    def inclusion(self) -> Matrix:
        return self.cylinder.inclusion

    @property
    def retraction(self) -> Matrix:
        return self.cylinder.retraction

    def leg(self) -> Matrix:
        """``X⊗H → C_f``, ``w ↦ [0, w]``."""
        y = self.cylinder.inclusion.shape[1]
        w = self.suspension.ambient.dim
        K = self.object.K
        return self.cylinder.quotient.projection * el.vstack(el.zeros(y, w, K), el.identity(w, K))


def a_mapping_cylinder(f: AModMap) -> ACylinder:
    cyl = mapping_cylinder(f.colinear)
    sigma = a_suspend(f.source)
    ambient = amod_direct_sum(f.target, sigma.ambient, cyl.ambient)
    obj = induced_quotient(ambient, cyl.relations, cyl.object, cyl.quotient)
    return ACylinder(obj, cyl, sigma)


@dataclass(frozen=True, eq=False)
class ACocylinder:
    object: AModObject
    cocylinder: Cocylinder


def a_mapping_cocylinder(f: AModMap, integ: Optional[IntegralData] = None) -> ACocylinder:
    cocyl = mapping_cocylinder(f.colinear, integ)
    back = with_hopf_factor(f.target)
    ambient = amod_direct_sum(f.source, back, cocyl.ambient)
    split = el.quotient_and_section(cocyl.embedding)
    obj = induced_sub(ambient, cocyl.embedding, cocyl.object, split)
    return ACocylinder(obj, cocyl)


def hom_A(M: AModObject, N: AModObject) -> List[Matrix]:
    system = el.LinearSystem(M.K).unknown("F", N.dim, M.dim)
    system.equation(a_linearity_terms("F", M, N))
    return [solution["F"] for solution in system.kernel()]


def hom_A_colinear(M: AModObject, N: AModObject) -> List[Matrix]:
    """Hom_A^H(M, N): A-linear and colinear at once."""
    require_same_hopf(M.comodule, N.comodule)
    system = el.LinearSystem(M.K).unknown("F", N.dim, M.dim)
    system.equation(a_linearity_terms("F", M, N))
    system.equation(colinearity_terms("F", M.comodule, N.comodule))
    return [solution["F"] for solution in system.kernel()]


def hstar_action_on_maps(M: Comodule, N: Comodule) -> List[Matrix]:
    """Operators of δ_s on vec Hom_k(M, N): ``(x·f)(m) = x(f(m₀)₁S(m₁)) f(m₀)₀``."""
    h = M.hopf
    d = h.dim
    I_n = N.identity()
    twist = (
        el.kron(I_n, h.mult)
        * el.kron_all(I_n, h.identity(), h.antipode)
        * el.kron(N.coaction, h.identity())
    )
    operators = []
    for s in range(d):
        pick = el.kron(I_n, el.from_entries({(0, s): h.K.one}, (1, d), h.K))
        terms = [Term("F", left=pick * twist, right=M.coaction, op="right_id", d=d)]
        operators.append(el.operator_matrix(N.dim, M.dim, terms, h.K))
    return operators


@dataclass(frozen=True, eq=False)
class HStarActionOnHomA:
    basis: List[Matrix]
    vectors: Matrix
    actions: Optional[List[Matrix]]
    closed: bool
    invariants: List[Matrix]

    @property
    def dim(self) -> int:
        return len(self.basis)


def homA_with_action(M: AModObject, N: AModObject) -> HStarActionOnHomA:
    require_same_hopf(M.comodule, N.comodule)
    K = M.K
    h = M.comodule.hopf
    basis = hom_A(M, N)
    vectors = el.from_columns(
        [el.columns(el.vectorize(f))[0] for f in basis], N.dim * M.dim, K
    )
    operators = hstar_action_on_maps(M.comodule, N.comodule)
    closed = all(el.contains(vectors, op * vectors) for op in operators)
    if not closed:
        logger.warning(
            "Hom_A(%s, %s) is not closed under the H*-action; invariants use Hom_k.",
            M.name,
            N.name,
        )
        actions = None
    else:
        actions = [el.coordinates(vectors, op * vectors) for op in operators]
    # invariants: x·f = x(1) f for all x, inside Hom_A
    blocks = []
    r = len(basis)
    for s, op in enumerate(operators):
        eps = el.entry(h.unit, s, 0)
        blocks.append(op * vectors - el.scale(vectors, eps) if eps else op * vectors)
    if r == 0:
        invariants = []
    else:
        kernel = el.nullspace(el.vstack(*blocks))
        combos = vectors * kernel
        invariants = [
            el.unvectorize(combos, N.dim, M.dim, column=j) for j in range(combos.shape[1])
        ]
    return HStarActionOnHomA(basis, vectors, actions, closed, invariants)


def total_integral(a: ComoduleAlgebra) -> Optional[Matrix]:
    """A colinear ``φ: H → A`` with ``φ(1) = 1``, if one exists."""
    h = a.hopf
    system = el.LinearSystem(a.K).unknown("phi", a.dim, h.dim)
    system.equation(colinearity_terms("phi", regular(h), a.comodule))
    system.equation([Term("phi", right=h.unit)], rhs=a.unit)
    solution, _ = system.solve()
    return None if solution is None else solution["phi"]


def bar_differential(a: ComoduleAlgebra, n: int) -> Matrix:
    """``δ_n = Σ_{i=0}^{n} (−1)^i d_i: A^{⊗(n+2)} → A^{⊗(n+1)}``, d_i multiplying factors i, i+1."""
    K = a.K
    I = a.identity()
    total = el.zeros(a.dim ** (n + 1), a.dim ** (n + 2), K)
    for i in range(n + 1):
        face = el.kron_all(*([I] * i + [a.mult] + [I] * (n - i)))
        total = total + face if i % 2 == 0 else total - face
    return total


@dataclass(frozen=True, eq=False)
class BarStage:
    """Stages ``C_0 ⊂ … ⊂ C_n`` of the bar resolution of A with the filtration data.

    ``filtration[p]`` maps ``F^p`` into ``C_n`` (``F^0 = A``, ``F^{p+1} = C_p``).
    """

    degree: int
    algebra: ComoduleAlgebra
    stages: List[AModObject]
    differentials: List[AModMap]
    cylinders: List[ACylinder]
    filtration: List[Matrix]
    subquotient_dims: List[int]
    expected_dims: List[int]
    composites_vanish: List[bool]
    retractions_split: List[bool]
    retractions_a_linear: List[bool]
    injective: Optional[bool] = None

    @property
    def stage(self) -> AModObject:
        return self.stages[-1]

    @property
    def certified(self) -> bool:
        return (
            self.subquotient_dims == self.expected_dims
            and all(self.composites_vanish)
            and all(self.retractions_split)
            and all(self.retractions_a_linear)
        )

    def table(self) -> TableLogger:
        table = TableLogger(title=f"bar filtration of {self.algebra.name}")
        for p, (got, want) in enumerate(zip(self.subquotient_dims, self.expected_dims)):
            table.log({"p": p, "dim F^p/F^p-1": got, "expected": want})
        return table


def bar_stage(
    a: ComoduleAlgebra,
    n: int,
    truncation: int = 3,
    check_injective: bool = True,
    verbose: bool = False,
) -> BarStage:
    if n < 0:
        raise ValueError(f"Bar stage degree must be non-negative, got {n}.")
    if n > truncation:
        raise ValueError(f"Bar stage {n} exceeds the configured truncation {truncation}.")
    d = a.hopf.dim
    base = regular_amodule(a)
    stages: List[AModObject] = []
    differentials: List[AModMap] = []
    cylinders: List[ACylinder] = []
    composites: List[bool] = []
    # previous X_{n-1} with its suspension chain, and Σ^{n-1} of the differential target
    previous_chain: List[AShift] = []
    previous_diff: Optional[Matrix] = None

    for k in tqdm(range(n + 1), desc="bar stages", disable=not verbose):
        source = tensor_power(a, k + 2)
        delta = bar_differential(a, k)
        chain: List[AShift] = []
        current = source
        for _ in range(k):
            chain.append(a_suspend(current))
            current = chain[-1].object
        X = current
        if k == 0:
            target = base
            delta_bar = delta
        else:
            # Σ^{k-1} δ_k : Σ^{k-1} A^{⊗(k+2)} → X_{k-1}
            shifted = delta
            for src, tgt in zip(chain[: k - 1], previous_chain[: k - 1]):
                shifted = a_shift_map(shifted, src, tgt)
            composites.append(el.is_zero(previous_diff * shifted))
            target = stages[-1]
            leg = cylinders[-1].leg()
            delta_bar = leg * el.kron(shifted, a.hopf.identity()) * chain[-1].shift.section
        f = AModMap(X, target, delta_bar)
        cyl = a_mapping_cylinder(f)
        differentials.append(f)
        cylinders.append(cyl)
        name = f"C{k}({a.name})"
        stages.append(AModObject(name, a, cyl.object.comodule.renamed(name), cyl.object.action))
        previous_chain = chain
        previous_diff = delta_bar
        logger.debug("Bar stage C_%d of %s has dimension %d.", k, a.name, stages[-1].dim)

    # filtration F^0 = A ⊂ C_0 ⊂ … ⊂ C_n
    inclusions = [cyl.inclusion for cyl in cylinders]
    filtration = []
    for p in range(n + 2):
        matrix = el.identity(stages[-1].dim, a.K)
        for q in range(n, p - 1, -1):
            matrix = matrix * inclusions[q]
        filtration.append(matrix)
    dims = [base.dim] + [s.dim for s in stages]
    subquotients = [dims[0]] + [dims[p] - dims[p - 1] for p in range(1, n + 2)]
    expected = [a.dim ** (p + 1) * (d - 1) ** p for p in range(n + 2)]
    splits = [el.is_identity(cyl.retraction * cyl.inclusion) for cyl in cylinders]
    linear = []
    for k, cyl in enumerate(cylinders):
        lower = base if k == 0 else stages[k - 1]
        linear.append(is_a_linear(cyl.retraction, stages[k], lower))
    injective = bool(is_injective(stages[-1].comodule)) if check_injective else None
    return BarStage(
        degree=n,
        algebra=a,
        stages=stages,
        differentials=differentials,
        cylinders=cylinders,
        filtration=filtration,
        subquotient_dims=subquotients,
        expected_dims=expected,
        composites_vanish=composites,
        retractions_split=splits,
        retractions_a_linear=linear,
        injective=injective,
    )


@dataclass(frozen=True, eq=False)
class ReplacementSequence:
    """``A → aA → p̄A`` with ``pA = Σ⁻¹(p̄A)``."""

    resolution: AModObject
    inclusion: Matrix
    cokernel: AModObject
    projection: Matrix
    desuspended: AModObject


def replacement_sequence(stage: BarStage, integ: Optional[IntegralData] = None) -> ReplacementSequence:
    resolution = stage.stage
    inclusion = stage.filtration[0]
    cokernel, split = quotient_amodule(
        resolution, inclusion, name=f"pbar({stage.algebra.name})"
    )
    back = a_desuspend(cokernel, integ)
    return ReplacementSequence(resolution, inclusion, cokernel, split.projection, back.object)


@dataclass(frozen=True, eq=False)
class Witnessed:
    holds: bool
    witness: Optional[Matrix] = None

    def __bool__(self):
        return self.holds


def is_weak_equivalence(f: AModMap) -> Witnessed:
    result = is_stable_equivalence(f.colinear)
    return Witnessed(result.equivalence, result.inverse)


def is_fibration(f: AModMap) -> Witnessed:
    return Witnessed(el.is_surjective(f.matrix))


def is_a_split_mono(f: AModMap) -> Witnessed:
    """Injective with an A-linear retraction, a sufficient condition for a cofibration."""
    if not el.is_injective(f.matrix):
        return Witnessed(False)
    M, N = f.source, f.target
    system = el.LinearSystem(M.K).unknown("R", M.dim, N.dim)
    system.equation(a_linearity_terms("R", N, M))
    system.equation([Term("R", right=f.matrix)], rhs=M.identity())
    solution, _ = system.solve()
    return Witnessed(solution is not None, None if solution is None else solution["R"])


@dataclass(frozen=True, eq=False)
class HopfModule:
    """A left-left Hopf module over the bialgebra tables of A."""

    name: str
    algebra: ComoduleAlgebra
    space: VectorSpace
    action: Matrix
    coaction: Matrix

    @property
    def dim(self) -> int:
        return self.space.dim


def regular_hopf_module(a: ComoduleAlgebra) -> HopfModule:
    return HopfModule(a.name, a, a.space, a.mult, a.comult)


def free_hopf_module(a: ComoduleAlgebra, space: VectorSpace, name: str = None) -> HopfModule:
    """``A⊗V`` with action and coaction on the A factor."""
    I_v = el.identity(space.dim, a.K)
    return HopfModule(
        name or f"{a.name}*V",
        a,
        a.space.tensor(space),
        el.kron(a.mult, I_v),
        el.kron(a.comult, I_v),
    )


def validate_hopf_module(m: HopfModule) -> ValidationReport:
    a = m.algebra
    report = ValidationReport(subject=m.name)
    if not a.has_bialgebra:
        report.shape_errors.append(f"algebra '{a.name}' has no comultiplication")
        return report
    check_shape(report, "action", m.action, (m.dim, a.dim * m.dim))
    check_shape(report, "coaction", m.coaction, (a.dim * m.dim, m.dim))
    if report.shape_errors:
        return report
    K = a.K
    I_a, I_m = a.identity(), el.identity(m.dim, K)
    if not el.equal(m.action * el.kron(a.mult, I_m), m.action * el.kron(I_a, m.action)):
        report.failures.append("action_associativity")
    if not el.equal(m.action * el.kron(a.unit, I_m), I_m):
        report.failures.append("action_unitality")
    if not el.equal(el.kron(a.comult, I_m) * m.coaction, el.kron(I_a, m.coaction) * m.coaction):
        report.failures.append("coaction_coassociativity")
    if not el.equal(el.kron(a.counit, I_m) * m.coaction, I_m):
        report.failures.append("coaction_counitality")
    # λ(a·m) = a₁m₋₁ ⊗ a₂m₀
    rhs = (
        el.kron(a.mult, m.action)
        * el.kron_all(I_a, swap(a.dim, a.dim, K), I_m)
        * el.kron(a.comult, m.coaction)
    )
    if not el.equal(m.coaction * m.action, rhs):
        report.failures.append("hopf_module_compatibility")
    return report


@dataclass(frozen=True, eq=False)
class FundamentalDecomposition:
    coinvariants: Matrix
    comparison: Matrix
    isomorphism: bool
    report: ValidationReport
    shift_dims: Dict[int, Tuple[int, int]] = field(default_factory=dict)


def coinvariants_and_fundamental(m: HopfModule, shifts: int = 3) -> FundamentalDecomposition:
    """``M^{coA} = {m : λ(m) = 1⊗m}`` and the comparison ``A⊗M^{coA} → M``."""
    a = m.algebra
    report = validate_hopf_module(m)
    K = a.K
    I_m = el.identity(m.dim, K)
    if report.shape_errors:
        raise StructureError(f"Hopf module '{m.name}'", report)
    co = el.nullspace(m.coaction - el.kron(a.unit, I_m))
    comparison = m.action * el.kron(a.identity(), co)
    square = comparison.shape[0] == comparison.shape[1]
    isomorphism = report.ok and square and el.rank(comparison) == m.dim
    if not report.ok:
        logger.info("Hopf module %s fails: %s", m.name, ", ".join(report.failures))
    r = co.shape[1]
    shift_dims = {
        n: (a.dim ** n * r, a.dim ** (n - 1) * m.dim) for n in range(1, shifts + 1)
    }
    return FundamentalDecomposition(co, comparison, isomorphism, report, shift_dims)


def algebra_coinvariants(a: ComoduleAlgebra) -> Matrix:
    """``A^{coH}``."""
    return coinvariants(a.comodule)
