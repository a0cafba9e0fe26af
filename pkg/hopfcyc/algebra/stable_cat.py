"""Stable category of comodules: stably trivial maps, stable homs, shifts and cylinders.

A colinear map is stably trivial when it factors through an injective comodule,
equivalently through ``ρ_M: M → (M⊗H, id⊗Δ)``.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.comod import (
    ColinearMap,
    Comodule,
    colinearity_terms,
    cofree,
    direct_sum,
    factor_through_coaction,
    frobenius_generator,
    hom_colinear,
    out_of_cofree_terms,
    quotient_comodule,
    regular,
    require_same_hopf,
    subcomodule,
    tensor_diagonal,
    trivial,
    untwist_iso,
)
from hopfcyc.algebra.exactlin import Matrix, Term
from hopfcyc.algebra.hopf_core import IntegralData, cofrobenius_data
from hopfcyc.logging import logger


@dataclass(frozen=True, eq=False)
class StablyTrivial:
    trivial: bool
    witness: Optional[Matrix] = None

    def __bool__(self):
        return self.trivial


def stably_trivial(f: ColinearMap) -> StablyTrivial:
    witness = factor_through_coaction(f.matrix, f.source, f.target)
    return StablyTrivial(witness is not None, witness)


def _trivial_operator(M: Comodule, N: Comodule) -> Matrix:
    """Matrix of ``vec φ ↦ vec(g_φ∘ρ_M)``; its image is Hom^H(M, N)₀."""
    K = M.K
    generator = frobenius_generator(M.hopf)
    if generator is not None:
        terms = out_of_cofree_terms("phi", N, M.dim, generator, right=M.coaction)
        return el.operator_matrix(N.dim, M.dim, terms, K)
    # colinear maps out of the cofree comodule, composed with ρ_M
    free = cofree(M.space, M.hopf)
    system = el.LinearSystem(K).unknown("G", N.dim, free.dim)
    system.equation(colinearity_terms("G", free, N))
    basis = system.kernel()
    return el.from_columns(
        [el.columns(el.vectorize(g["G"] * M.coaction))[0] for g in basis],
        N.dim * M.dim,
        K,
    )


@dataclass(frozen=True, eq=False)
class StableHomSpace:
    source: Comodule
    target: Comodule
    ambient: List[Matrix]
    trivial: Matrix  # columns are row-major vectorized maps

    @property
    def ambient_dim(self) -> int:
        return len(self.ambient)

    @property
    def trivial_dim(self) -> int:
        return self.trivial.shape[1]

    @property
    def quotient_dim(self) -> int:
        return self.ambient_dim - self.trivial_dim

    def is_trivial(self, f: Matrix) -> bool:
        return el.contains(self.trivial, el.vectorize(f))

    def trivial_maps(self) -> List[Matrix]:
        return [
            el.unvectorize(self.trivial, self.target.dim, self.source.dim, column=j)
            for j in range(self.trivial_dim)
        ]


def stable_hom(M: Comodule, N: Comodule) -> StableHomSpace:
    require_same_hopf(M, N)
    ambient = hom_colinear(M, N)
    trivial_span = el.column_space(_trivial_operator(M, N))
    logger.debug(
        "Stable hom %s -> %s: %d colinear, %d stably trivial.",
        M.name,
        N.name,
        len(ambient),
        trivial_span.shape[1],
    )
    return StableHomSpace(M, N, ambient, trivial_span)


@dataclass(frozen=True, eq=False)
class StableEquivalence:
    equivalence: bool
    inverse: Optional[Matrix] = None
    source_witness: Optional[Matrix] = None
    target_witness: Optional[Matrix] = None

    def __bool__(self):
        return self.equivalence


def _null_homotopy_terms(unknown: str, M: Comodule, K) -> List[Term]:
    generator = frobenius_generator(M.hopf)
    return out_of_cofree_terms(
        unknown, M, M.dim, generator, right=M.coaction, coef=-K.one
    )


def is_stable_equivalence(f: ColinearMap) -> StableEquivalence:
    """Solves for colinear ``g`` with ``gf − id`` and ``fg − id`` stably trivial, jointly."""
    M, N = f.source, f.target
    require_same_hopf(M, N)
    K = M.K
    if frobenius_generator(M.hopf) is None:
        raise ValueError(
            f"Hopf algebra '{M.hopf.name}' has no Frobenius generator among the tried candidates."
        )
    system = (
        el.LinearSystem(K)
        .unknown("g", M.dim, N.dim)
        .unknown("phi_source", M.dim, M.dim)
        .unknown("phi_target", N.dim, N.dim)
    )
    system.equation(colinearity_terms("g", N, M))
    system.equation(
        [Term("g", right=f.matrix)] + _null_homotopy_terms("phi_source", M, K),
        rhs=M.identity(),
    )
    system.equation(
        [Term("g", left=f.matrix)] + _null_homotopy_terms("phi_target", N, K),
        rhs=N.identity(),
    )
    solution, _ = system.solve()
    if solution is None:
        return StableEquivalence(False)
    return StableEquivalence(
        True, solution["g"], solution["phi_source"], solution["phi_target"]
    )


@dataclass(frozen=True, eq=False)
class Shift:
    """A shifted comodule with the short exact sequence presenting it.

    For a suspension: ``0 → M → ambient → object → 0`` with maps ``inclusion`` and
    ``projection``. For a desuspension: ``0 → object → ambient → M → 0``.
    ``section`` splits the right-hand map k-linearly.
    """

    object: Comodule
    ambient: Comodule
    inclusion: Matrix
    projection: Matrix
    section: Matrix
    retraction: Matrix

    def is_exact(self) -> bool:
        return sequence_is_exact(self.inclusion, self.projection)


def sequence_is_exact(incl: Matrix, proj: Matrix) -> bool:
    """``0 → U → V → W → 0`` is exact, checked by ranks."""
    return (
        el.is_zero(proj * incl)
        and el.is_injective(incl)
        and el.is_surjective(proj)
        and incl.shape[1] + proj.shape[0] == incl.shape[0]
    )


def _integral_or_default(M: Comodule, integ: Optional[IntegralData]) -> IntegralData:
    if integ is None:
        return cofrobenius_data(M.hopf)
    if not integ.right_at_x:
        raise ValueError("The chosen element x must satisfy Λ′(x) ≠ 0.")
    return integ


def unit_embedding(M: Comodule) -> Matrix:
    """``id_M⊗η: M → M⊗H``, colinear for the diagonal coaction."""
    return el.kron(M.identity(), M.hopf.unit)


def suspend(M: Comodule) -> Shift:
    """ΣM as the cokernel of ``id⊗η: M → (M⊗H, diagonal)``; no integral is involved."""
    h = M.hopf
    ambient = tensor_diagonal(M, regular(h))
    incl = unit_embedding(M)
    sigma, split = quotient_comodule(ambient, incl, name=f"S({M.name})")
    return Shift(sigma, ambient, incl, split.projection, split.section, split.retraction)


def desuspend(M: Comodule, integ: Optional[IntegralData] = None) -> Shift:
    """Σ⁻¹M as the kernel of ``id⊗Λ′: (M⊗H, diagonal) → M``; the section is ``m ↦ m⊗x/Λ′(x)``."""
    integ = _integral_or_default(M, integ)
    h = M.hopf
    ambient = tensor_diagonal(M, regular(h))
    proj = el.kron(M.identity(), integ.right)
    incl = el.nullspace(proj)
    labels = [f"k{i}" for i in range(incl.shape[1])]
    obj, split = subcomodule(ambient, incl, labels=labels, name=f"S^-1({M.name})")
    section = el.kron(M.identity(), el.scale(integ.x, h.K.one / integ.right_at_x))
    return Shift(obj, ambient, incl, proj, section, split.retraction)


def cofree_suspension(M: Comodule) -> Shift:
    """``T(M) = (M⊗H, id⊗Δ)/ρ(M)``."""
    ambient = cofree(M.space, M.hopf, name=f"{M.name}*{M.hopf.name}")
    obj, split = quotient_comodule(ambient, M.coaction, name=f"T({M.name})")
    return Shift(obj, ambient, M.coaction, split.projection, split.section, split.retraction)


def cofree_desuspension(M: Comodule, integ: Optional[IntegralData] = None) -> Shift:
    """``T⁻¹(M) = M⊗Ker Λ′`` with the diagonal coaction, inside ``(M⊗H, diagonal)``."""
    integ = _integral_or_default(M, integ)
    h = M.hopf
    kernel = desuspend(trivial(h), integ)
    obj = tensor_diagonal(M, kernel.object, name=f"T^-1({M.name})")
    ambient = tensor_diagonal(M, regular(h))
    incl = el.kron(M.identity(), kernel.inclusion)
    proj = el.kron(M.identity(), integ.right)
    section = el.kron(M.identity(), el.scale(integ.x, h.K.one / integ.right_at_x))
    retraction = el.kron(M.identity(), kernel.retraction)
    return Shift(obj, ambient, incl, proj, section, retraction)


def suspension_comparison(M: Comodule) -> ColinearMap:
    """The isomorphism ΣM → T(M) induced by the untwisting isomorphism."""
    sigma = suspend(M)
    shifted = cofree_suspension(M)
    forward, _ = untwist_iso(M)
    matrix = shifted.projection * forward.matrix * sigma.section
    return ColinearMap(sigma.object, shifted.object, matrix)


def shift_map(f: ColinearMap, source: Shift, target: Shift) -> ColinearMap:
    """Σf, induced by ``f⊗id_H`` on the ambient sequences."""
    lifted = el.kron(f.matrix, f.source.hopf.identity())
    return ColinearMap(
        source.object, target.object, target.projection * lifted * source.section
    )


def lift_along(target_proj: Matrix, target_ambient: Comodule, q: Matrix, source: Comodule) -> Optional[Matrix]:
    """A colinear ``L: source → target_ambient`` with ``target_proj∘L = q``."""
    system = el.LinearSystem(source.K).unknown("L", target_ambient.dim, source.dim)
    system.equation(colinearity_terms("L", source, target_ambient))
    system.equation([Term("L", left=target_proj)], rhs=q)
    solution, _ = system.solve()
    return None if solution is None else solution["L"]


def desuspension_of_suspension_comparison(M: Comodule, integ: Optional[IntegralData] = None) -> ColinearMap:
    """The canonical colinear map ``M → Σ⁻¹ΣM``.

    A colinear lift ``L: M⊗H → ΣM⊗H`` of the cokernel map over ``id⊗Λ′`` sends the
    image of ``id⊗η`` into ``Σ⁻¹ΣM``.
    """
    integ = _integral_or_default(M, integ)
    sigma = suspend(M)
    back = desuspend(sigma.object, integ)
    lift = lift_along(back.projection, back.ambient, sigma.projection, sigma.ambient)
    if lift is None:
        raise ValueError(f"No colinear lift found for the suspension of '{M.name}'.")
    inside = lift * sigma.inclusion
    return ColinearMap(M, back.object, el.coordinates(back.inclusion, inside))


@dataclass(frozen=True, eq=False)
class Cylinder:
    """``C_f = (Y ⊕ X⊗H) / {(f x, −x⊗1)}`` with its structure maps."""

    object: Comodule
    ambient: Comodule
    relations: Matrix
    quotient: el.Quotient
    inclusion: Matrix
    projection: Matrix
    retraction: Matrix
    suspension: Shift

    def is_exact(self) -> bool:
        return sequence_is_exact(self.inclusion, self.projection)

    def is_split(self) -> bool:
        return el.is_identity(self.retraction * self.inclusion)


def mapping_cylinder(f: ColinearMap) -> Cylinder:
    X, Y = f.source, f.target
    require_same_hopf(X, Y)
    K = X.K
    h = X.hopf
    sigma = suspend(X)
    ambient = direct_sum(Y, sigma.ambient, name=f"{Y.name}+{X.name}*{h.name}")
    relations = el.vstack(f.matrix, -sigma.inclusion)
    obj, split = quotient_comodule(ambient, relations, name=f"C({X.name}->{Y.name})")
    inclusion = split.projection * el.vstack(Y.identity(), el.zeros(sigma.ambient.dim, Y.dim, K))
    projection = (
        el.hstack(el.zeros(sigma.object.dim, Y.dim, K), sigma.projection) * split.section
    )
    counit = el.kron(X.identity(), h.counit)
    retraction = el.hstack(Y.identity(), f.matrix * counit) * split.section
    return Cylinder(obj, ambient, relations, split, inclusion, projection, retraction, sigma)


@dataclass(frozen=True, eq=False)
class Cocylinder:
    """``P_f = {(x, w) ∈ X ⊕ Y⊗H : f x = (id⊗Λ′) w}`` with its structure maps."""

    object: Comodule
    ambient: Comodule
    embedding: Matrix
    projection: Matrix
    inclusion: Matrix
    section: Matrix
    desuspension: Shift

    def is_exact(self) -> bool:
        return sequence_is_exact(self.inclusion, self.projection)

    def is_split(self) -> bool:
        return el.is_identity(self.projection * self.section)


def mapping_cocylinder(f: ColinearMap, integ: Optional[IntegralData] = None) -> Cocylinder:
    X, Y = f.source, f.target
    require_same_hopf(X, Y)
    integ = _integral_or_default(X, integ)
    K = X.K
    back = desuspend(Y, integ)
    ambient = direct_sum(X, back.ambient, name=f"{X.name}+{Y.name}*{X.hopf.name}")
    embedding = el.nullspace(el.hstack(f.matrix, -back.projection))
    obj, split = subcomodule(
        ambient,
        embedding,
        labels=[f"p{i}" for i in range(embedding.shape[1])],
        name=f"P({X.name}->{Y.name})",
    )
    projection = el.hstack(X.identity(), el.zeros(X.dim, back.ambient.dim, K)) * embedding
    inclusion = split.retraction * el.vstack(
        el.zeros(X.dim, back.object.dim, K), back.inclusion
    )
    section = split.retraction * el.vstack(X.identity(), back.section * f.matrix)
    return Cocylinder(obj, ambient, embedding, projection, inclusion, section, back)


@dataclass(frozen=True, eq=False)
class Triangle:
    """``X → Y → C_f → ΣX`` from a mapping cylinder."""

    source: Comodule
    target: Comodule
    cone: Comodule
    maps: Tuple[ColinearMap, ColinearMap, ColinearMap]
    shifted: ColinearMap

    def composites(self) -> Dict[str, ColinearMap]:
        f, i, p = self.maps
        return {
            "inclusion_after_map": i @ f,
            "projection_after_inclusion": p @ i,
            "shifted_map_after_projection": self.shifted @ p,
        }

    def check(self) -> Dict[str, bool]:
        return {name: bool(stably_trivial(g)) for name, g in self.composites().items()}


def triangle(f: ColinearMap) -> Triangle:
    cyl = mapping_cylinder(f)
    inclusion = ColinearMap(f.target, cyl.object, cyl.inclusion)
    projection = ColinearMap(cyl.object, cyl.suspension.object, cyl.projection)
    shifted = shift_map(f, cyl.suspension, suspend(f.target))
    return Triangle(f.source, f.target, cyl.object, (f, inclusion, projection), shifted)
