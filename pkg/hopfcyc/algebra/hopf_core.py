"""Finite-dimensional Hopf algebras given by structure-constant tables."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.exactlin import Field, Matrix, Term, VectorSpace
from hopfcyc.logging import logger
from hopfcyc.serializable import Serializable

AXIOMS = (
    "associativity",
    "unitality",
    "coassociativity",
    "counitality",
    "comultiplication_multiplicative",
    "counit_multiplicative",
    "antipode_left",
    "antipode_right",
)


@dataclass
class ValidationReport(Serializable):
    subject: str = ""
    failures: List[str] = field(default_factory=list)
    shape_errors: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.shape_errors

    def merge(self, other: "ValidationReport", prefix: str = "") -> "ValidationReport":
        self.failures += [prefix + f for f in other.failures]
        self.shape_errors += [prefix + s for s in other.shape_errors]
        return self


class StructureError(ValueError):
    """A construction was handed an object whose structure identities fail."""

    def __init__(self, subject: str, report: ValidationReport):
        self.report = report
        problems = report.shape_errors + report.failures
        super().__init__(f"{subject} is not valid: {', '.join(problems)}.")


def swap(m: int, n: int, K) -> Matrix:
    """The flip V⊗W → W⊗V for dim V = m, dim W = n."""
    return el.permutation([j * m + i for i in range(m) for j in range(n)], K)


def check_shape(report: ValidationReport, name: str, M: Matrix, shape: Tuple[int, int]):
    if M.shape != shape:
        report.shape_errors.append(f"{name} has shape {M.shape}, expected {shape}")


def algebra_failures(mult: Matrix, unit: Matrix) -> List[str]:
    d = mult.shape[0]
    I = el.identity(d, mult.domain)
    failures = []
    if not el.equal(mult * el.kron(mult, I), mult * el.kron(I, mult)):
        failures.append("associativity")
    if not (
        el.equal(mult * el.kron(unit, I), I) and el.equal(mult * el.kron(I, unit), I)
    ):
        failures.append("unitality")
    return failures


def coalgebra_failures(comult: Matrix, counit: Matrix) -> List[str]:
    d = comult.shape[1]
    I = el.identity(d, comult.domain)
    failures = []
    if not el.equal(el.kron(comult, I) * comult, el.kron(I, comult) * comult):
        failures.append("coassociativity")
    if not (
        el.equal(el.kron(counit, I) * comult, I)
        and el.equal(el.kron(I, counit) * comult, I)
    ):
        failures.append("counitality")
    return failures


def bialgebra_failures(
    mult: Matrix, unit: Matrix, comult: Matrix, counit: Matrix
) -> List[str]:
    d = mult.shape[0]
    K = mult.domain
    I = el.identity(d, K)
    failures = []
    middle = el.kron_all(I, swap(d, d, K), I)
    lhs = comult * mult
    rhs = el.kron(mult, mult) * middle * el.kron(comult, comult)
    if not (el.equal(lhs, rhs) and el.equal(comult * unit, el.kron(unit, unit))):
        failures.append("comultiplication_multiplicative")
    if not (
        el.equal(counit * mult, el.kron(counit, counit))
        and el.equal(counit * unit, el.identity(1, K))
    ):
        failures.append("counit_multiplicative")
    return failures


def antipode_failures(
    mult: Matrix, unit: Matrix, comult: Matrix, counit: Matrix, antipode: Matrix
) -> List[str]:
    I = el.identity(mult.shape[0], mult.domain)
    failures = []
    target = unit * counit
    if not el.equal(mult * el.kron(antipode, I) * comult, target):
        failures.append("antipode_left")
    if not el.equal(mult * el.kron(I, antipode) * comult, target):
        failures.append("antipode_right")
    return failures


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    """Structure tables of a Hopf algebra H of dimension d.

    ``mult`` is d×d², ``unit`` d×1, ``comult`` d²×d, ``counit`` 1×d and
    ``antipode`` d×d, all in the lexicographic tensor convention.
    """

    name: str
    field: Field
    space: VectorSpace
    mult: Matrix
    unit: Matrix
    comult: Matrix
    counit: Matrix
    antipode: Matrix

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def K(self):
        return self.field.domain

    def same_as(self, other: "HopfAlgebra") -> bool:
        if self is other:
            return True
        return (
            self.name == other.name
            and self.field == other.field
            and self.space == other.space
            and all(
                el.equal(getattr(self, t), getattr(other, t))
                for t in ("mult", "unit", "comult", "counit", "antipode")
            )
        )

    def basis_vector(self, label: str) -> Matrix:
        return el.from_entries({(self.space.index(label), 0): self.K.one}, (self.dim, 1), self.K)

    def identity(self) -> Matrix:
        return el.identity(self.dim, self.K)

    @cached_property
    def mult_table(self) -> Dict[Tuple[int, int], Dict[int, object]]:
        """``(i, j) -> {k: c}`` with e_i e_j = Σ c e_k."""
        table: Dict[Tuple[int, int], Dict[int, object]] = {}
        for k, col, value in el.iter_entries(self.mult):
            table.setdefault(divmod(col, self.dim), {})[k] = value
        return table

    @cached_property
    def antipode_inverse(self) -> Matrix:
        return el.inverse(self.antipode)

    def multiply(self, x: Matrix, y: Matrix) -> Matrix:
        return self.mult * el.kron(x, y)

    def is_commutative(self) -> bool:
        return el.equal(self.mult, self.mult * swap(self.dim, self.dim, self.K))

    def is_cocommutative(self) -> bool:
        return el.equal(self.comult, swap(self.dim, self.dim, self.K) * self.comult)


def validate_hopf(h: HopfAlgebra) -> ValidationReport:
    d = h.dim
    report = ValidationReport(subject=h.name)
    check_shape(report, "mult", h.mult, (d, d * d))
    check_shape(report, "unit", h.unit, (d, 1))
    check_shape(report, "comult", h.comult, (d * d, d))
    check_shape(report, "counit", h.counit, (1, d))
    check_shape(report, "antipode", h.antipode, (d, d))
    if report.shape_errors:
        return report
    report.failures += algebra_failures(h.mult, h.unit)
    report.failures += coalgebra_failures(h.comult, h.counit)
    report.failures += bialgebra_failures(h.mult, h.unit, h.comult, h.counit)
    report.failures += antipode_failures(h.mult, h.unit, h.comult, h.counit, h.antipode)
    if report.failures:
        logger.info("Hopf algebra %s fails: %s", h.name, ", ".join(report.failures))
    return report


def require_valid(h: HopfAlgebra):
    report = validate_hopf(h)
    if not report.ok:
        raise StructureError(f"Hopf algebra '{h.name}'", report)


def dual_hopf(h: HopfAlgebra, name: Optional[str] = None) -> HopfAlgebra:
    """The linear dual H* with transposed tables, on the dual basis δ_i."""
    return HopfAlgebra(
        name=name or f"{h.name}_dual",
        field=h.field,
        space=VectorSpace(h.dim, tuple(f"δ_{label}" for label in h.space.labels)),
        mult=h.comult.transpose(),
        unit=h.counit.transpose(),
        comult=h.mult.transpose(),
        counit=h.unit.transpose(),
        antipode=h.antipode.transpose(),
    )


def integral_space(h: HopfAlgebra) -> List[Matrix]:
    """Basis of the left integrals Λ (as 1×d rows) with (id⊗Λ)∘Δ = η∘Λ."""
    system = el.LinearSystem(h.K).unknown("L", 1, h.dim)
    system.equation(
        [
            Term("L", right=h.comult, op="left_id", d=h.dim),
            Term("L", left=h.unit, coef=-h.K.one),
        ]
    )
    return [solution["L"] for solution in system.kernel()]


def normalize_functional(row: Matrix) -> Matrix:
    """Scales a nonzero row so that its first nonzero entry is 1."""
    for j in range(row.shape[1]):
        value = el.entry(row, 0, j)
        if value:
            return el.scale(row, row.domain.one / value)
    raise ValueError("Cannot normalize the zero functional.")


@dataclass(frozen=True, eq=False)
class IntegralData:
    left: Matrix
    right: Matrix
    x_index: int
    x: Matrix
    is_cofrobenius: bool
    x_label: str = ""

    @property
    def right_at_x(self):
        return el.entry(self.right, 0, self.x_index)


def right_integral_holds(h: HopfAlgebra, functional: Matrix) -> bool:
    """(Λ′⊗id)∘Δ = η∘Λ′."""
    return el.equal(el.kron(functional, h.identity()) * h.comult, h.unit * functional)


def left_integral_holds(h: HopfAlgebra, functional: Matrix) -> bool:
    return el.equal(el.kron(h.identity(), functional) * h.comult, h.unit * functional)


def cofrobenius_data(h: HopfAlgebra) -> IntegralData:
    basis = integral_space(h)
    if len(basis) != 1:
        raise ValueError(
            f"Hopf algebra '{h.name}' has a {len(basis)}-dimensional integral space; "
            "a valid finite-dimensional Hopf algebra has exactly one."
        )
    left = normalize_functional(basis[0])
    right = left * h.antipode
    x_index = next(j for j in range(h.dim) if el.entry(right, 0, j))
    x = el.from_entries({(x_index, 0): h.K.one}, (h.dim, 1), h.K)
    logger.debug("Integral of %s chosen with x = %s", h.name, h.space.labels[x_index])
    return IntegralData(
        left=left,
        right=right,
        x_index=x_index,
        x=x,
        is_cofrobenius=True,
        x_label=h.space.labels[x_index],
    )


def group_algebra(n: int, field: Field, name: Optional[str] = None) -> HopfAlgebra:
    """kC_n on the basis e, g, g2, ..., g{n-1}."""
    K = field.domain
    one = K.one
    labels = tuple(["e", "g"] + [f"g{i}" for i in range(2, n)])[:n]
    mult = el.from_entries(
        {((i + j) % n, i * n + j): one for i in range(n) for j in range(n)}, (n, n * n), K
    )
    return HopfAlgebra(
        name=name or f"kc{n}",
        field=field,
        space=VectorSpace(n, labels),
        mult=mult,
        unit=el.from_entries({(0, 0): one}, (n, 1), K),
        comult=el.from_entries({(i * n + i, i): one for i in range(n)}, (n * n, n), K),
        counit=el.from_entries({(0, i): one for i in range(n)}, (1, n), K),
        antipode=el.permutation([(-i) % n for i in range(n)], K),
    )


def trivial_hopf(field: Field, name: str = "ground") -> HopfAlgebra:
    return group_algebra(1, field, name=name)
