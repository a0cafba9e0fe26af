"""The pseudo-para-cyclic comodule T_n(A, M) = A^{⊗(n+1)}⊗M and its cyclic part.

A is a bialgebra in right H-comodules and M a stable pair: a left A-module and left
A-comodule with ``m_M∘ρ_M = id``. Writing ``ρ_M(m) = m₋₁⊗m₀``:

    d_i [a_0|…|a_n]m = [a_0|…|a_i a_{i+1}|…|a_n]m         (i < n)
    d_n [a_0|…|a_n]m = [m₋₁a_n a_0|a_1|…|a_{n-1}]m₀
    s_i [a_0|…|a_n]m = [a_0|…|a_i|1|a_{i+1}|…|a_n]m
    t_n [a_0|…|a_n]m = [m₋₁a_n|a_0|…|a_{n-1}]m₀

and T_n carries the diagonal H-coaction. The A-action of M does not enter the
operators; it only matters through stability.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from tqdm.auto import tqdm

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.amod import AModObject, ComoduleAlgebra, validate_algebra, validate_algebra_and_module
from hopfcyc.algebra.comod import (
    Comodule,
    coinvariants,
    is_colinear,
    is_injective,
    regular,
    tensor_diagonal,
    trivial,
    validate_comodule,
)
from hopfcyc.algebra.exactlin import Matrix, VectorSpace
from hopfcyc.algebra.hopf_core import (
    HopfAlgebra,
    StructureError,
    ValidationReport,
    antipode_failures,
    bialgebra_failures,
    check_shape,
)
from hopfcyc.algebra.stable_cat import stable_hom
from hopfcyc.cyclic.cyclic_cat import (
    FAMILIES,
    PARA_FAMILIES,
    Generator,
    IdentityReport,
    OperatorFamily,
    check_identities,
    cyclic,
    cyclic_identities,
    degeneracy,
    face,
    identity_defect,
)
from hopfcyc.logging import TableLogger, logger, warn_once

DEGREE_LIMIT = 8


@dataclass(frozen=True, eq=False)
class HopfBialgebraInComod:
    """A bialgebra in right H-comodules; ``report`` records the antipode certificates."""

    algebra: ComoduleAlgebra
    report: ValidationReport

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def K(self):
        return self.algebra.K

    @property
    def has_antipode(self) -> bool:
        return self.algebra.antipode is not None and not any(
            f.startswith("antipode") for f in self.report.failures
        )

    @cached_property
    def antipode_inverse(self) -> Optional[Matrix]:
        return el.inverse(self.algebra.antipode) if self.has_antipode else None


def validate_bialgebra_in_comod(a: ComoduleAlgebra) -> ValidationReport:
    report = validate_algebra(a)
    if not a.has_bialgebra:
        report.shape_errors.append(f"algebra '{a.name}' has no comultiplication")
        return report
    d = a.dim
    check_shape(report, "comult", a.comult, (d * d, d))
    check_shape(report, "counit", a.counit, (1, d))
    if a.antipode is not None:
        check_shape(report, "antipode", a.antipode, (d, d))
    if report.shape_errors:
        return report
    report.failures += bialgebra_failures(a.mult, a.unit, a.comult, a.counit)
    pair = tensor_diagonal(a.comodule, a.comodule)
    if not is_colinear(a.comult, a.comodule, pair):
        report.failures.append("comult_colinear")
    if not is_colinear(a.counit, a.comodule, trivial(a.hopf)):
        report.failures.append("counit_colinear")
    if a.antipode is not None:
        report.failures += antipode_failures(a.mult, a.unit, a.comult, a.counit, a.antipode)
        if not is_colinear(a.antipode, a.comodule, a.comodule):
            report.failures.append("antipode_colinear")
        if not el.is_injective(a.antipode):
            report.failures.append("antipode_invertible")
    return report


def hopf_bialgebra(a: ComoduleAlgebra) -> HopfBialgebraInComod:
    """Validates A; antipode failures only withdraw the antipode."""
    report = validate_bialgebra_in_comod(a)
    if report.shape_errors or any(not f.startswith("antipode") for f in report.failures):
        raise StructureError(f"bialgebra '{a.name}'", report)
    return HopfBialgebraInComod(a, report)


def plain_bialgebra(b: HopfAlgebra, h: HopfAlgebra, name: Optional[str] = None) -> ComoduleAlgebra:
    """The Hopf algebra B as a bialgebra in H-comodules with the trivial coaction."""
    if b.field != h.field:
        raise ValueError(f"'{b.name}' and '{h.name}' are defined over different fields.")
    return ComoduleAlgebra(
        name or b.name,
        trivial(h, b.space, name=b.name),
        b.mult,
        b.unit,
        b.comult,
        b.counit,
        b.antipode,
    )


@dataclass(frozen=True, eq=False)
class StableModComod:
    """M with a left A-action, a left A-coaction ``ρ_M: M → A⊗M`` and a right H-coaction."""

    name: str
    algebra: ComoduleAlgebra
    comodule: Comodule
    action: Optional[Matrix]
    coaction: Matrix

    @property
    def dim(self) -> int:
        return self.comodule.dim

    @property
    def K(self):
        return self.comodule.K

    def identity(self) -> Matrix:
        return self.comodule.identity()

    def is_stable(self) -> bool:
        return self.action is not None and el.is_identity(self.action * self.coaction)

    def has_trivial_coaction(self) -> bool:
        return el.equal(self.coaction, el.kron(self.algebra.unit, self.identity()))


def validate_stable_pair(m: StableModComod) -> ValidationReport:
    a = m.algebra
    report = validate_comodule(m.comodule)
    report.subject = m.name
    if m.action is None:
        report.shape_errors.append("no A-action")
        return report
    check_shape(report, "action", m.action, (m.dim, a.dim * m.dim))
    check_shape(report, "coaction", m.coaction, (a.dim * m.dim, m.dim))
    if not a.has_bialgebra:
        report.shape_errors.append(f"algebra '{a.name}' has no comultiplication")
    if report.shape_errors:
        return report
    I_a, I_m = a.identity(), m.identity()
    if not el.equal(m.action * el.kron(a.mult, I_m), m.action * el.kron(I_a, m.action)):
        report.failures.append("action_associativity")
    if not el.equal(m.action * el.kron(a.unit, I_m), I_m):
        report.failures.append("action_unitality")
    if not el.equal(el.kron(a.comult, I_m) * m.coaction, el.kron(I_a, m.coaction) * m.coaction):
        report.failures.append("coaction_coassociativity")
    if not el.equal(el.kron(a.counit, I_m) * m.coaction, I_m):
        report.failures.append("coaction_counitality")
    pair = tensor_diagonal(a.comodule, m.comodule)
    if not is_colinear(m.action, pair, m.comodule):
        report.failures.append("action_colinear")
    if not is_colinear(m.coaction, m.comodule, pair):
        report.failures.append("coaction_colinear")
    if not m.is_stable():
        report.failures.append("stability")
    return report


def trivial_pair(a: ComoduleAlgebra, name: str = "k") -> StableModComod:
    """k with the counit action and the unit coaction."""
    return StableModComod(name, a, trivial(a.hopf), a.counit, a.unit)


def regular_pair(a: ComoduleAlgebra, name: Optional[str] = None) -> StableModComod:
    """A acting on itself by multiplication and coacting by Δ; not stable in general."""
    return StableModComod(name or f"{a.name}_reg", a, a.comodule, a.mult, a.comult)


def coefficients(a: ComoduleAlgebra, name: Optional[str] = None) -> StableModComod:
    """A with the counit action ``a·m = ε(a)m`` and the coaction Δ; always stable."""
    return StableModComod(
        name or f"{a.name}_coeff", a, a.comodule, el.kron(a.counit, a.identity()), a.comult
    )


@dataclass(frozen=True, eq=False)
class ParaCyclicComodule:
    name: str
    operators: OperatorFamily
    comodules: Tuple[Comodule, ...]
    tag: str = "pseudo_para"
    provisional: Tuple[int, ...] = ()
    colinearity_failures: Tuple[str, ...] = ()
    pair: Optional[StableModComod] = None

    @property
    def max_degree(self) -> int:
        return self.operators.max_degree

    @property
    def dims(self) -> Tuple[int, ...]:
        return self.operators.dims

    @property
    def K(self):
        return self.operators.K

    @property
    def hopf(self) -> HopfAlgebra:
        return self.comodules[0].hopf

    def operator(self, g: Generator) -> Matrix:
        return self.operators.operator(g)

    def identity(self, n: int) -> Matrix:
        return self.operators.identity(n)

    def generators(self, n: int) -> List[Generator]:
        """Letters with source degree n available in the built range."""
        letters = [cyclic(n)]
        if n >= 1:
            letters += [face(i, n) for i in range(n + 1)]
        if n < self.max_degree:
            letters += [degeneracy(i, n) for i in range(n + 1)]
        return letters

    def table(self, title: str = "") -> TableLogger:
        table = TableLogger(title or self.name)
        for n in range(self.max_degree + 1):
            table.log(
                {
                    "degree": n,
                    "dim": self.dims[n],
                    "provisional": "yes" if n in self.provisional else "",
                }
            )
        return table


def _identity(dim: int, K) -> Matrix:
    return el.identity(dim, K)


def _degree_data(a: ComoduleAlgebra, m: StableModComod, n: int, top: int):
    K = a.K
    alpha, mu = a.dim, m.dim
    I_m = m.identity()

    comodule = a.comodule
    for _ in range(n):
        comodule = tensor_diagonal(comodule, a.comodule)
    comodule = tensor_diagonal(comodule, m.comodule, name=f"T{n}")

    dims = [alpha] * (n + 2) + [mu]
    spread = el.kron(_identity(alpha ** (n + 1), K), m.coaction)
    order = [n + 1, n] + list(range(n)) + [n + 2]
    t = (
        el.kron_all(a.mult, _identity(alpha**n * mu, K))
        * el.permute_factors(dims, order, K)
        * spread
    )
    faces: Dict[Tuple[int, int], Matrix] = {}
    if n >= 1:
        for i in range(n):
            faces[(i, n)] = el.kron_all(
                _identity(alpha**i, K), a.mult, _identity(alpha ** (n - 1 - i), K), I_m
            )
        faces[(n, n)] = faces[(0, n)] * t
    degeneracies: Dict[Tuple[int, int], Matrix] = {}
    if n < top:
        for i in range(n + 1):
            degeneracies[(i, n)] = el.kron_all(
                _identity(alpha ** (i + 1), K), a.unit, _identity(alpha ** (n - i), K), I_m
            )
    return n, comodule, t, faces, degeneracies


def cyclic_inverse_matrix(a: HopfBialgebraInComod, m: StableModComod, n: int) -> Matrix:
    """``t_n⁻¹[a_0|…|a_n]m = [a_1|…|a_n|S⁻¹(m₋₁)a_0]m₀``."""
    if a.antipode_inverse is None:
        raise ValueError(f"Bialgebra '{a.name}' has no bijective antipode.")
    K = a.K
    alpha, mu = a.dim, m.dim
    dims = [alpha] * (n + 2) + [mu]
    order = list(range(1, n + 2)) + [0, n + 2]
    return (
        el.kron_all(_identity(alpha**n, K), a.algebra.mult, m.identity())
        * el.permute_factors(dims, order, K)
        * el.kron_all(_identity(alpha ** (n + 1), K), a.antipode_inverse, m.identity())
        * el.kron(_identity(alpha ** (n + 1), K), m.coaction)
    )


def colinearity_failures(X: ParaCyclicComodule) -> List[str]:
    failures = []
    for n in range(X.max_degree + 1):
        for g in X.generators(n):
            if not is_colinear(X.operator(g), X.comodules[n], X.comodules[g.target]):
                failures.append(str(g))
    return failures


def build_T(
    a: ComoduleAlgebra,
    m: StableModComod,
    max_degree: int,
    jobs: int = 1,
    verbose: bool = False,
    check_colinear: bool = True,
) -> ParaCyclicComodule:
    if m.algebra is not a:
        raise ValueError(f"Pair '{m.name}' is not over algebra '{a.name}'.")
    report = validate_stable_pair(m).merge(validate_algebra(a), prefix=f"{a.name}.")
    blocking = [f for f in report.failures if f != "stability"]
    if report.shape_errors or blocking:
        raise StructureError(f"stable pair '{m.name}'", report)
    if "stability" in report.failures:
        logger.info("Pair %s is not stable; T is built but cannot be upgraded.", m.name)

    T = assemble_T(a, m, max_degree, jobs, verbose)
    if check_colinear:
        failures = colinearity_failures(T)
        if failures:
            logger.warning("Operators of %s are not colinear: %s", T.name, ", ".join(failures))
            T = replace(T, colinearity_failures=tuple(failures))
    return T


def assemble_T(
    a: ComoduleAlgebra,
    m: StableModComod,
    max_degree: int,
    jobs: int = 1,
    verbose: bool = False,
) -> ParaCyclicComodule:
    """Operator matrices of T(A, M) without validating the inputs."""
    if not 0 <= max_degree <= DEGREE_LIMIT:
        raise ValueError(f"Degree bound {max_degree} is outside 0..{DEGREE_LIMIT}.")
    results = {}
    progress = tqdm(total=max_degree + 1, desc=f"T({a.name},{m.name})", disable=not verbose)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            futures = [
                executor.submit(_degree_data, a, m, n, max_degree)
                for n in range(max_degree + 1)
            ]
            for future in as_completed(futures):
                n, *data = future.result()
                results[n] = data
                progress.update(1)
    else:
        for n in range(max_degree + 1):
            results[n] = _degree_data(a, m, n, max_degree)[1:]
            progress.update(1)
    progress.close()

    faces, degeneracies, cyclic_maps, comodules = {}, {}, {}, []
    for n in range(max_degree + 1):
        comodule, t, f, s = results[n]
        comodules.append(comodule)
        cyclic_maps[n] = t
        faces.update(f)
        degeneracies.update(s)
    name = f"T({a.name},{m.name})"
    operators = OperatorFamily(
        a.K, tuple(c.dim for c in comodules), faces, degeneracies, cyclic_maps, {}, name
    )
    return ParaCyclicComodule(name, operators, tuple(comodules), "pseudo_para", pair=m)


@dataclass
class PseudoParaReport:
    identities: IdentityReport

    @property
    def pseudo_para(self) -> bool:
        return self.identities.family_ok("simplicial") and self.identities.family_ok(
            "pseudo_para"
        )

    @property
    def para(self) -> bool:
        return self.pseudo_para and self.identities.family_ok("para")


def verify_pseudo_para_cyclic(T: ParaCyclicComodule) -> PseudoParaReport:
    report = PseudoParaReport(check_identities(T, PARA_FAMILIES))
    if report.pseudo_para and not report.para:
        logger.info(
            "%s is pseudo-para-cyclic; %d last-face identities fail.",
            T.name,
            report.identities.by_family["para"]["failed"],
        )
    return report


@dataclass(frozen=True, eq=False)
class CyclicUpgrade:
    structure: Optional[ParaCyclicComodule]
    certificates: Dict[str, bool] = field(default_factory=dict)
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.structure is not None


def cyclic_structure(
    T: ParaCyclicComodule, a: HopfBialgebraInComod, m: Optional[StableModComod] = None
) -> CyclicUpgrade:
    """Adds ``t⁻¹`` and certifies ``t t⁻¹ = t⁻¹ t = id`` and ``t^{n+1} = id``; refuses with a reason."""
    m = m or T.pair
    if m is None:
        raise ValueError(f"{T.name} does not record its coefficient pair.")
    if not a.has_antipode:
        return CyclicUpgrade(None, {}, f"bialgebra '{a.name}' has no bijective colinear antipode")
    certificates = {"stability": m.is_stable()}
    inverses = {n: cyclic_inverse_matrix(a, m, n) for n in range(T.max_degree + 1)}
    certificates["inverse"] = all(
        el.is_identity(T.operators.cyclic[n] * inv) and el.is_identity(inv * T.operators.cyclic[n])
        for n, inv in inverses.items()
    )
    certificates["inverse_colinear"] = all(
        is_colinear(inv, T.comodules[n], T.comodules[n]) for n, inv in inverses.items()
    )
    order_failures = [
        n
        for n in range(T.max_degree + 1)
        if not el.is_identity(el.power(T.operators.cyclic[n], n + 1))
    ]
    certificates["order"] = not order_failures
    if not certificates["stability"]:
        reason = "stability violated: m_M∘ρ_M ≠ id"
        if order_failures:
            reason += f"; t^(n+1) ≠ id at degree {order_failures[0]}"
        return CyclicUpgrade(None, certificates, reason)
    ops = T.operators
    family = OperatorFamily(
        ops.K, ops.dims, ops.faces, ops.degeneracies, ops.cyclic, inverses, ops.name
    )
    upgraded = ParaCyclicComodule(
        T.name, family, T.comodules, "cyclic", T.provisional, T.colinearity_failures, m
    )
    certificates["identities"] = check_identities(upgraded, FAMILIES).ok
    if not all(certificates.values()):
        failed = [name for name, ok in certificates.items() if not ok]
        reason = "failed certificates: " + ", ".join(failed)
        if order_failures:
            reason += f"; t^(n+1) ≠ id at degree {order_failures[0]}"
        return CyclicUpgrade(None, certificates, reason)
    return CyclicUpgrade(upgraded, certificates)


def _subcomodule_on(ambient: Comodule, basis: Matrix, name: str) -> Comodule:
    h = ambient.hopf
    r = basis.shape[1]
    space = VectorSpace.standard(r, prefix="q")
    if r == 0:
        return Comodule(name, h, space, el.zeros(0, 0, h.K))
    image = ambient.coaction * basis
    coaction = el.coordinates(el.kron(basis, h.identity()), image)
    return Comodule(name, h, space, coaction)


def restrict_to(
    X: ParaCyclicComodule, bases: Dict[int, Matrix], name: str, tag: str
) -> ParaCyclicComodule:
    """Operators of X restricted to operator-closed subcomodules spanned by ``bases``."""
    faces, degeneracies, cyclic_maps, inverses = {}, {}, {}, {}
    for n in range(X.max_degree + 1):
        for g in X.generators(n):
            restricted = el.restrict(X.operator(g), bases[n], bases[g.target])
            if g.kind == "d":
                faces[(g.index, n)] = restricted
            elif g.kind == "s":
                degeneracies[(g.index, n)] = restricted
            else:
                cyclic_maps[n] = restricted
        if tag == "cyclic":
            inverses[n] = el.inverse(cyclic_maps[n]) if bases[n].shape[1] else cyclic_maps[n]
    comodules = tuple(
        _subcomodule_on(X.comodules[n], bases[n], f"{name}{n}") for n in range(X.max_degree + 1)
    )
    operators = OperatorFamily(
        X.K, tuple(b.shape[1] for b in bases.values()), faces, degeneracies, cyclic_maps, inverses, name
    )
    return ParaCyclicComodule(name, operators, comodules, tag, X.provisional, (), X.pair)


@dataclass(frozen=True, eq=False)
class Coapproximation:
    """The largest operator-closed family ``Q_n ⊆ T_n`` on which every cyclic identity holds."""

    structure: ParaCyclicComodule
    inclusions: Dict[int, Matrix]
    sweeps: int

    @property
    def dims(self) -> Tuple[int, ...]:
        return self.structure.dims

    def table(self, ambient: ParaCyclicComodule) -> TableLogger:
        table = TableLogger(f"coapproximation of {ambient.name}")
        for n, incl in self.inclusions.items():
            table.log(
                {
                    "degree": n,
                    "dim T": ambient.dims[n],
                    "dim Q": incl.shape[1],
                    "provisional": "yes" if n in self.structure.provisional else "",
                }
            )
        return table


def _defects(T: ParaCyclicComodule) -> Dict[int, List[Matrix]]:
    return {
        n: [identity_defect(identity, T) for identity in cyclic_identities(n, T.max_degree)]
        for n in range(T.max_degree + 1)
    }


def coapproximation(T: ParaCyclicComodule, verbose: bool = False) -> Coapproximation:
    N = T.max_degree
    defects = _defects(T)
    W = {n: el.identity(T.dims[n], T.K) for n in range(N + 1)}
    warn_once(
        f"Closure under degeneracies is not imposed at the top degree; Q_{N} is provisional."
    )
    sweeps = 0
    changed = True
    progress = tqdm(desc=f"Q({T.name})", disable=not verbose)
    while changed:
        changed = False
        sweeps += 1
        for n in reversed(range(N + 1)):
            if W[n].shape[1] == 0:
                continue
            rows = list(defects[n])
            rows += [el.modulo(W[g.target]) * T.operator(g) for g in T.generators(n)]
            kernel = el.nullspace(el.vstack(*rows) * W[n])
            if kernel.shape[1] < W[n].shape[1]:
                W[n] = el.column_space(W[n] * kernel)
                changed = True
        progress.update(1)
    progress.close()
    logger.debug("Coapproximation of %s stabilized after %d sweeps.", T.name, sweeps)

    structure = restrict_to(T, W, f"Q{T.name[1:]}", "cyclic")
    structure = ParaCyclicComodule(
        structure.name,
        structure.operators,
        structure.comodules,
        "cyclic",
        (N,),
        (),
        T.pair,
    )
    return Coapproximation(structure, W, sweeps)


def _word_spans(T: ParaCyclicComodule, n: int) -> Dict[int, List[Matrix]]:
    """Spans of all composites of operators starting at degree n, per target degree."""
    spans: Dict[int, List[Matrix]] = {m: [] for m in range(T.max_degree + 1)}
    stacked: Dict[int, Optional[Matrix]] = {m: None for m in spans}

    def add(m: int, X: Matrix) -> bool:
        v = el.vectorize(X)
        candidate = v if stacked[m] is None else el.hstack(stacked[m], v)
        if el.rank(candidate) == len(spans[m]) + 1:
            stacked[m] = candidate
            spans[m].append(X)
            return True
        return False

    add(n, T.identity(n))
    queue = [(n, T.identity(n))]
    while queue:
        m, X = queue.pop()
        for g in T.generators(m):
            Y = T.operator(g) * X
            if add(g.target, Y):
                queue.append((g.target, Y))
    return spans


def coapproximation_oracle(T: ParaCyclicComodule) -> Dict[int, Matrix]:
    """Q_n as the vectors killed by every identity defect after every operator composite."""
    defects = _defects(T)
    result = {}
    for n in range(T.max_degree + 1):
        rows = [
            D * X
            for m, composites in _word_spans(T, n).items()
            for X in composites
            for D in defects[m]
        ]
        result[n] = el.column_space(el.nullspace(el.vstack(*rows)))
    return result


def coinvariant_part(X: ParaCyclicComodule) -> Tuple[ParaCyclicComodule, Dict[int, Matrix]]:
    """The H-coinvariants of each degree, a cyclic module with trivial coaction."""
    bases = {n: coinvariants(X.comodules[n]) for n in range(X.max_degree + 1)}
    return restrict_to(X, bases, f"{X.name}^coH", X.tag), bases


@dataclass(frozen=True, eq=False)
class CharacteristicMap:
    source: Coapproximation
    target: Coapproximation
    ambient: Dict[int, Matrix]
    components: Dict[int, Matrix]
    commutes: bool
    colinear: bool
    coinvariant_components: Dict[int, Matrix]
    coinvariant_commutes: bool = True


def characteristic_map(
    a: HopfBialgebraInComod, max_degree: int, jobs: int = 1, verbose: bool = False
) -> CharacteristicMap:
    """``Q(A,k) → Q(A,A)`` induced by the unit ``k → A``."""
    alg = a.algebra
    if not is_colinear(alg.unit, trivial(alg.hopf), alg.comodule):
        raise StructureError(f"unit of '{alg.name}'", ValidationReport(alg.name, ["unit_colinear"]))
    T_k = build_T(alg, trivial_pair(alg), max_degree, jobs, verbose)
    T_a = build_T(alg, coefficients(alg), max_degree, jobs, verbose)
    Q_k, Q_a = coapproximation(T_k, verbose), coapproximation(T_a, verbose)
    K = alg.K

    ambient = {
        n: el.kron(el.identity(alg.dim ** (n + 1), K), alg.unit) for n in range(max_degree + 1)
    }
    components = {
        n: el.restrict(ambient[n], Q_k.inclusions[n], Q_a.inclusions[n])
        for n in range(max_degree + 1)
    }
    S, R = Q_k.structure, Q_a.structure
    commutes = all(
        el.equal(components[g.target] * S.operator(g), R.operator(g) * components[n])
        for n in range(max_degree + 1)
        for g in S.generators(n)
    )
    colinear = all(
        is_colinear(components[n], S.comodules[n], R.comodules[n]) for n in range(max_degree + 1)
    )
    S_co, co_k = coinvariant_part(S)
    R_co, co_a = coinvariant_part(R)
    coinvariant_components = {
        n: el.restrict(components[n], co_k[n], co_a[n]) for n in range(max_degree + 1)
    }
    coinvariant_commutes = all(
        el.equal(
            coinvariant_components[g.target] * S_co.operator(g),
            R_co.operator(g) * coinvariant_components[n],
        )
        for n in range(max_degree + 1)
        for g in S_co.generators(n)
    )
    return CharacteristicMap(
        Q_k,
        Q_a,
        ambient,
        components,
        commutes,
        colinear,
        coinvariant_components,
        coinvariant_commutes,
    )


@dataclass(frozen=True, eq=False)
class VanishingCheck:
    applicable: bool
    reason: str = ""
    injective: Dict[int, bool] = field(default_factory=dict)
    stable_quotient: Dict[int, int] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return (
            self.applicable
            and all(self.injective.values())
            and not any(self.stable_quotient.values())
        )


def hopf_module_vanishing_check(M: AModObject, max_degree: int) -> VanishingCheck:
    """Each ``T_n(H, M) = H^{⊗(n+1)}⊗M`` is injective and stably zero for a Hopf module M."""
    a = M.algebra
    h = M.comodule.hopf
    if not (el.equal(a.mult, h.mult) and el.equal(a.comodule.coaction, h.comult)):
        return VanishingCheck(False, f"algebra '{a.name}' is not the Hopf algebra '{h.name}'")
    report = validate_algebra_and_module(a, M)
    if not report.ok:
        return VanishingCheck(
            False, f"'{M.name}' is not an H-module/comodule: " + ", ".join(report.failures)
        )
    injective, quotient = {}, {}
    comodule = regular(h)
    for n in range(max_degree + 1):
        T_n = tensor_diagonal(comodule, M.comodule, name=f"T{n}")
        injective[n] = bool(is_injective(T_n))
        quotient[n] = stable_hom(T_n, T_n).quotient_dim
        comodule = tensor_diagonal(comodule, regular(h))
    return VanishingCheck(True, "", injective, quotient)
