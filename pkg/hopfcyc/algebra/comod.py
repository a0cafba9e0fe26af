"""Right H-comodules, colinear maps and the injectivity test.

Comodules over a finite-dimensional H are the same as left H*-modules through
``x·m = (id⊗x)ρ(m)``. Colinear maps out of a cofree comodule V⊗H are computed
through a Frobenius generator t of H (``x ↦ x⇀t`` bijective), which reduces every
factorization through an injective to a linear system in Hom_k(V, N).
"""

import itertools
import weakref
from dataclasses import dataclass, replace
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.exactlin import Matrix, Term, VectorSpace
from hopfcyc.algebra.hopf_core import (
    HopfAlgebra,
    StructureError,
    ValidationReport,
    check_shape,
    dual_hopf,
    integral_space,
    swap,
)
from hopfcyc.logging import debug_once, logger


@dataclass(frozen=True, eq=False)
class Comodule:
    """A right comodule ``ρ: M → M⊗H``, stored as a (dim M · d) × dim M matrix."""

    name: str
    hopf: HopfAlgebra
    space: VectorSpace
    coaction: Matrix

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def K(self):
        return self.hopf.K

    def identity(self) -> Matrix:
        return el.identity(self.dim, self.K)

    def renamed(self, name: str) -> "Comodule":
        return replace(self, name=name)

    @cached_property
    def hstar_action(self) -> List[Matrix]:
        """``Act[s]`` is the action of the dual basis vector δ_s: ``Act[s][a, b] = ρ[a·d + s, b]``."""
        d = self.hopf.dim
        entries: List[dict] = [dict() for _ in range(d)]
        for row, b, value in el.iter_entries(self.coaction):
            a, s = divmod(row, d)
            entries[s][(a, b)] = value
        return [el.from_entries(e, (self.dim, self.dim), self.K) for e in entries]


@dataclass(frozen=True, eq=False)
class ColinearMap:
    source: Comodule
    target: Comodule
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError(
                f"Map of shape {self.matrix.shape} does not go from '{self.source.name}' "
                f"(dim {self.source.dim}) to '{self.target.name}' (dim {self.target.dim})."
            )

    def __matmul__(self, other: "ColinearMap") -> "ColinearMap":
        return ColinearMap(other.source, self.target, self.matrix * other.matrix)

    def is_colinear(self) -> bool:
        return is_colinear(self.matrix, self.source, self.target)


def require_same_hopf(*comodules: Comodule):
    first = comodules[0]
    for other in comodules[1:]:
        if not first.hopf.same_as(other.hopf):
            raise ValueError(
                f"Comodules '{first.name}' and '{other.name}' are over different Hopf "
                f"algebras ('{first.hopf.name}' and '{other.hopf.name}')."
            )


def validate_comodule(c: Comodule) -> ValidationReport:
    h = c.hopf
    report = ValidationReport(subject=c.name)
    check_shape(report, "coaction", c.coaction, (c.dim * h.dim, c.dim))
    if report.shape_errors:
        return report
    I = c.identity()
    if not el.equal(
        el.kron(I, h.comult) * c.coaction,
        el.kron(c.coaction, h.identity()) * c.coaction,
    ):
        report.failures.append("coassociativity")
    if not el.equal(el.kron(I, h.counit) * c.coaction, I):
        report.failures.append("counitality")
    return report


def require_comodule(c: Comodule):
    report = validate_comodule(c)
    if not report.ok:
        raise StructureError(f"Comodule '{c.name}'", report)


def is_colinear(f: Matrix, source: Comodule, target: Comodule) -> bool:
    d = source.hopf.dim
    return el.equal(
        target.coaction * f,
        el.kron(f, el.identity(d, f.domain)) * source.coaction,
    )


def colinearity_terms(unknown: str, source: Comodule, target: Comodule) -> List[Term]:
    """Terms of ``ρ_N F − (F⊗id)ρ_M`` for an unknown ``F: M → N``."""
    K = source.K
    return [
        Term(unknown, left=target.coaction),
        Term(unknown, right=source.coaction, op="right_id", d=source.hopf.dim, coef=-K.one),
    ]


def hom_colinear(M: Comodule, N: Comodule) -> List[Matrix]:
    """Echelon basis of Hom^H(M, N)."""
    require_same_hopf(M, N)
    system = el.LinearSystem(M.K).unknown("F", N.dim, M.dim)
    system.equation(colinearity_terms("F", M, N))
    return [solution["F"] for solution in system.kernel()]


def cofree(space: VectorSpace, hopf: HopfAlgebra, name: str = None) -> Comodule:
    """``V⊗H`` with coaction ``id⊗Δ``."""
    return Comodule(
        name=name or f"cofree({space.dim})",
        hopf=hopf,
        space=space.tensor(hopf.space),
        coaction=el.kron(el.identity(space.dim, hopf.K), hopf.comult),
    )


def regular(hopf: HopfAlgebra, name: str = None) -> Comodule:
    return Comodule(name or hopf.name, hopf, hopf.space, hopf.comult)


def trivial(hopf: HopfAlgebra, space: VectorSpace = None, name: str = "k") -> Comodule:
    space = space or VectorSpace.ground()
    return Comodule(
        name, hopf, space, el.kron(el.identity(space.dim, hopf.K), hopf.unit)
    )


def grouplike(hopf: HopfAlgebra, label: str, name: str = None) -> Comodule:
    """The one-dimensional comodule ``1 ↦ 1⊗g`` for a group-like basis element g."""
    return Comodule(name or f"k_{label}", hopf, VectorSpace.ground(), hopf.basis_vector(label))


def tensor_diagonal(M: Comodule, N: Comodule, name: str = None) -> Comodule:
    """``M⊗N`` with ``m⊗n ↦ m₀⊗n₀⊗m₁n₁``."""
    require_same_hopf(M, N)
    h = M.hopf
    K = h.K
    shuffle = el.kron_all(M.identity(), swap(h.dim, N.dim, K), h.identity())
    merge = el.kron_all(M.identity(), N.identity(), h.mult)
    return Comodule(
        name=name or f"{M.name}*{N.name}",
        hopf=h,
        space=M.space.tensor(N.space),
        coaction=merge * shuffle * el.kron(M.coaction, N.coaction),
    )


def direct_sum(M: Comodule, N: Comodule, name: str = None) -> Comodule:
    require_same_hopf(M, N)
    return Comodule(
        name=name or f"{M.name}+{N.name}",
        hopf=M.hopf,
        space=M.space.direct_sum(N.space),
        coaction=el.block_diagonal(M.coaction, N.coaction),
    )


def untwist_iso(M: Comodule) -> Tuple[ColinearMap, ColinearMap]:
    """``(M⊗H, diagonal) ≅ (M⊗H, id⊗Δ)`` by ``m⊗h ↦ m₀⊗m₁h``, inverse ``m⊗h ↦ m₀⊗S(m₁)h``."""
    h = M.hopf
    diagonal = tensor_diagonal(M, regular(h))
    free = cofree(M.space, h, name=f"{M.name}*{h.name}")
    lift = el.kron(M.coaction, h.identity())
    merge = el.kron(M.identity(), h.mult)
    forward = merge * lift
    backward = merge * el.kron_all(M.identity(), h.antipode, h.identity()) * lift
    return ColinearMap(diagonal, free, forward), ColinearMap(free, diagonal, backward)


def hstar_module_view(M: Comodule, functional: Matrix) -> Matrix:
    """Action matrix of a functional ``x ∈ H*`` (a 1×d row) on M."""
    result = el.zeros(M.dim, M.dim, M.K)
    for s, act in enumerate(M.hstar_action):
        value = el.entry(functional, 0, s)
        if value:
            result = result + el.scale(act, value)
    return result


def hstar_equivariant_maps(M: Comodule, N: Comodule) -> List[Matrix]:
    """Maps commuting with every δ_s action; equal to Hom^H(M, N) as a subspace."""
    require_same_hopf(M, N)
    system = el.LinearSystem(M.K).unknown("F", N.dim, M.dim)
    for act_m, act_n in zip(M.hstar_action, N.hstar_action):
        system.equation([Term("F", left=act_n), Term("F", right=act_m, coef=-M.K.one)])
    return [solution["F"] for solution in system.kernel()]


@dataclass(frozen=True, eq=False)
class FrobeniusGenerator:
    """An element t of H such that ``G: H* → H, x ↦ x⇀t = t₁x(t₂)`` is invertible.

    ``rows[s]`` is the s-th row of ``G⁻¹`` (the δ_s-coordinate of ``G⁻¹(h)``).
    """

    element: Matrix
    rows: Tuple[Matrix, ...]


def _hit_matrix(h: HopfAlgebra, t: Matrix) -> Matrix:
    # G[r, s] = (Δt)[r·d + s]
    delta_t = h.comult * t
    d = h.dim
    entries = {divmod(i, d): value for i, _, value in el.iter_entries(delta_t)}
    return el.from_entries(entries, (d, d), h.K)


def _generator_candidates(h: HopfAlgebra):
    K = h.K
    d = h.dim
    for row in integral_space(dual_hopf(h)):
        t = row.transpose()
        yield t
        yield h.antipode * t
    basis = [el.from_entries({(i, 0): K.one}, (d, 1), K) for i in range(d)]
    yield from basis
    yield el.from_entries({(i, 0): K.one for i in range(d)}, (d, 1), K)
    for pattern in itertools.product((0, 1), repeat=d):
        if 1 < sum(pattern) < d:
            yield el.from_entries(
                {(i, 0): K.one for i in range(d) if pattern[i]}, (d, 1), K
            )


# entries are dropped with their Hopf algebra
_GENERATORS: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def frobenius_generator(h: HopfAlgebra) -> Optional[FrobeniusGenerator]:
    if h not in _GENERATORS:
        _GENERATORS[h] = _find_generator(h)
    return _GENERATORS[h]


def _find_generator(h: HopfAlgebra) -> Optional[FrobeniusGenerator]:
    for t in _generator_candidates(h):
        G = _hit_matrix(h, t)
        if el.rank(G) == h.dim:
            inverse = el.inverse(G)
            return FrobeniusGenerator(
                element=t,
                rows=tuple(el.select_rows(inverse, [s]) for s in range(h.dim)),
            )
    debug_once(f"No Frobenius generator found for '{h.name}'; using direct systems.")
    return None


def out_of_cofree_terms(
    unknown: str,
    target: Comodule,
    source_dim: int,
    generator: FrobeniusGenerator,
    right: Optional[Matrix] = None,
    left: Optional[Matrix] = None,
    coef=None,
) -> List[Term]:
    """Terms of ``left ∘ g_φ ∘ right`` where ``g_φ: V⊗H → N`` is the colinear map with parameter φ."""
    I_v = el.identity(source_dim, target.K)
    terms = []
    for act, row in zip(target.hstar_action, generator.rows):
        r = el.kron(I_v, row)
        terms.append(
            Term(
                unknown,
                left=act if left is None else left * act,
                right=r if right is None else r * right,
                coef=coef,
            )
        )
    return terms


def out_of_cofree_map(
    phi: Matrix, target: Comodule, source_dim: int, generator: FrobeniusGenerator
) -> Matrix:
    K = target.K
    I_v = el.identity(source_dim, K)
    result = el.zeros(target.dim, source_dim * target.hopf.dim, K)
    for act, row in zip(target.hstar_action, generator.rows):
        if el.is_zero(act) or el.is_zero(row):
            continue
        result = result + act * phi * el.kron(I_v, row)
    return result


@dataclass(frozen=True, eq=False)
class InjectivityResult:
    injective: bool
    retraction: Optional[Matrix] = None
    method: str = "frobenius"

    def __bool__(self):
        return self.injective


def factor_through_coaction(f: Matrix, M: Comodule, N: Comodule) -> Optional[Matrix]:
    """A colinear ``g: (M⊗H, id⊗Δ) → N`` with ``g∘ρ_M = f``, if one exists."""
    require_same_hopf(M, N)
    K = M.K
    d = M.hopf.dim
    generator = frobenius_generator(M.hopf)
    if generator is not None:
        system = el.LinearSystem(K).unknown("phi", N.dim, M.dim)
        system.equation(
            out_of_cofree_terms("phi", N, M.dim, generator, right=M.coaction), rhs=f
        )
        solution, _ = system.solve()
        if solution is None:
            return None
        return out_of_cofree_map(solution["phi"], N, M.dim, generator)
    free = cofree(M.space, M.hopf)
    system = el.LinearSystem(K).unknown("G", N.dim, M.dim * d)
    system.equation(colinearity_terms("G", free, N))
    system.equation([Term("G", right=M.coaction)], rhs=f)
    solution, _ = system.solve()
    return None if solution is None else solution["G"]


def is_injective(M: Comodule) -> InjectivityResult:
    """Whether ``ρ_M: M → M⊗H`` has a colinear retraction."""
    if M.dim == 0:
        return InjectivityResult(True, el.zeros(0, 0, M.K))
    retraction = factor_through_coaction(M.identity(), M, M)
    method = "frobenius" if frobenius_generator(M.hopf) is not None else "direct"
    logger.debug(
        "Comodule %s is %sinjective (%s).", M.name, "" if retraction is not None else "not ", method
    )
    return InjectivityResult(retraction is not None, retraction, method)


def subcomodule(
    ambient: Comodule, inclusion: Matrix, labels: Sequence[str] = None, name: str = None
) -> Tuple[Comodule, el.Quotient]:
    """The comodule on the column span of ``inclusion``; raises if it is not invariant."""
    h = ambient.hopf
    split = el.quotient_and_section(inclusion)
    image = ambient.coaction * inclusion
    if not el.contains(el.kron(inclusion, h.identity()), image):
        raise ValueError(f"Subspace of '{ambient.name}' is not a subcomodule.")
    coaction = el.kron(split.retraction, h.identity()) * image
    n = inclusion.shape[1]
    space = VectorSpace(n, tuple(labels) if labels else tuple(f"k{i}" for i in range(n)))
    return Comodule(name or f"sub({ambient.name})", h, space, coaction), split


def quotient_comodule(
    ambient: Comodule, inclusion: Matrix, name: str = None
) -> Tuple[Comodule, el.Quotient]:
    """``ambient / span(inclusion)`` with ``ρ_Q = (π⊗id)ρσ`` on the coordinate complement."""
    h = ambient.hopf
    split = el.quotient_and_section(inclusion, ambient.space.labels)
    if not el.contains(el.kron(inclusion, h.identity()), ambient.coaction * inclusion):
        raise ValueError(f"Subspace of '{ambient.name}' is not a subcomodule.")
    coaction = el.kron(split.projection, h.identity()) * ambient.coaction * split.section
    return Comodule(name or f"quot({ambient.name})", h, split.space, coaction), split


def coinvariants(M: Comodule) -> Matrix:
    """Basis of ``{m : ρ(m) = m⊗1}``."""
    return el.nullspace(M.coaction - el.kron(M.identity(), M.hopf.unit))
