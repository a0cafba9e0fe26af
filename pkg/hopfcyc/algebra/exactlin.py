"""Exact linear algebra over the rationals and prime fields.

Matrices are sympy ``DomainMatrix`` objects in sparse format. Column ``j`` of a
matrix is the image of basis vector ``j``. Tensor products of spaces use the
lexicographic index convention ``(i, j) -> i * dim(W) + j``, which is what
``kron`` implements and what every structure table in the package relies on.
"""

import abc
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from sympy import GF, QQ, isprime
from sympy.polys.matrices import DomainMatrix

from hopfcyc.registrable import Registrable
from hopfcyc.serializable import Serializable

Matrix = DomainMatrix


@dataclass
class FieldConfig(Serializable):
    kind: str = "rational"
    p: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> "FieldConfig":
        """Parses ``rational``, ``prime:3`` or ``prime 3``."""
        kind, _, rest = text.replace(" ", ":").partition(":")
        if kind == "rational" and not rest:
            return cls("rational")
        if kind == "prime":
            try:
                return cls("prime", int(rest))
            except ValueError:
                pass
        raise ValueError(f"Cannot parse field declaration '{text}'.")


class Field(abc.ABC, Registrable):
    """An exact base field, wrapping a sympy domain."""

    def __init__(self, config: FieldConfig):
        self.config = config

    @classmethod
    def from_config(cls, config: FieldConfig) -> "Field":
        return cls.get_class_by_name(config.kind)(config)

    @classmethod
    def from_string(cls, text: str) -> "Field":
        return cls.from_config(FieldConfig.parse(text))

    @property
    @abc.abstractmethod
    def domain(self):
        pass

    @property
    def characteristic(self) -> int:
        return self.domain.characteristic()

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.domain.convert(value.numerator) / self.domain.convert(
                value.denominator
            )
        return self.domain.convert(value)

    def parse(self, text: str):
        text = text.strip()
        num, slash, den = text.partition("/")
        try:
            numerator = int(num)
            denominator = int(den) if slash else 1
        except ValueError:
            raise ValueError(f"'{text}' is not a scalar of {self}.")
        if self.domain.convert(denominator) == self.zero:
            raise ValueError(f"'{text}' has a zero denominator in {self}.")
        return self.domain.convert(numerator) / self.domain.convert(denominator)

    @abc.abstractmethod
    def format(self, value) -> str:
        pass

    def key(self) -> Tuple:
        return (self.config.kind, self.config.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@Field.register("rational")
class RationalField(Field):
    @property
    def domain(self):
        return QQ

    def format(self, value) -> str:
        numerator, denominator = int(QQ.numer(value)), int(QQ.denom(value))
        return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"

    def __repr__(self):
        return "rational"


@Field.register("prime")
class PrimeField(Field):
    def __init__(self, config: FieldConfig):
        super().__init__(config)
        if config.p is None or not isprime(config.p):
            raise ValueError(f"Prime field needs a prime modulus, got {config.p}.")
        self._domain = GF(config.p, symmetric=False)

    @property
    def domain(self):
        return self._domain

    def format(self, value) -> str:
        return str(self._domain.to_int(value))

    def __repr__(self):
        return f"prime {self.config.p}"


def rational() -> Field:
    return Field.from_config(FieldConfig("rational"))


def prime(p: int) -> Field:
    return Field.from_config(FieldConfig("prime", p))


@dataclass(frozen=True)
class VectorSpace:
    dim: int
    labels: Tuple[str, ...]

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"Negative dimension {self.dim}.")
        if len(self.labels) != self.dim:
            raise ValueError(
                f"{len(self.labels)} basis labels given for dimension {self.dim}."
            )

    @classmethod
    def standard(cls, dim: int, prefix: str = "v") -> "VectorSpace":
        return cls(dim, tuple(f"{prefix}{i}" for i in range(dim)))

    @classmethod
    def ground(cls) -> "VectorSpace":
        return cls(1, ("1",))

    def tensor(self, other: "VectorSpace") -> "VectorSpace":
        return VectorSpace(
            self.dim * other.dim,
            tuple(f"{a}*{b}" for a in self.labels for b in other.labels),
        )

    def tensor_power(self, n: int) -> "VectorSpace":
        result = VectorSpace.ground()
        for i in range(n):
            result = self if i == 0 else result.tensor(self)
        return result

    def direct_sum(self, other: "VectorSpace") -> "VectorSpace":
        return VectorSpace(self.dim + other.dim, self.labels + other.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"Unknown basis label '{label}'.")


def zeros(rows: int, cols: int, K) -> Matrix:
    return DomainMatrix.zeros((rows, cols), K)


def identity(n: int, K) -> Matrix:
    return DomainMatrix.eye(n, K).to_sparse()


def from_entries(entries: Dict[Tuple[int, int], object], shape, K) -> Matrix:
    rows: Dict[int, Dict[int, object]] = {}
    for (i, j), value in entries.items():
        if value:
            rows.setdefault(i, {})[j] = value
    return DomainMatrix.from_dod(rows, shape, K)


def from_dod(rows, shape, K) -> Matrix:
    return DomainMatrix.from_dod(rows, shape, K)


def from_columns(columns: Sequence[Dict[int, object]], rows: int, K) -> Matrix:
    entries: Dict[int, Dict[int, object]] = {}
    for j, column in enumerate(columns):
        for i, value in column.items():
            if value:
                entries.setdefault(i, {})[j] = value
    return DomainMatrix.from_dod(entries, (rows, len(columns)), K)


def dod(M: Matrix) -> Dict[int, Dict[int, object]]:
    """Row-wise sparse view of ``M``; callers must not mutate it."""
    rep = M.rep
    if getattr(rep, "fmt", None) == "sparse":
        return rep
    return M.to_dod()


def columns(M: Matrix) -> List[Dict[int, object]]:
    cols: List[Dict[int, object]] = [dict() for _ in range(M.shape[1])]
    for i, row in dod(M).items():
        for j, value in row.items():
            cols[j][i] = value
    return cols


def iter_entries(M: Matrix) -> Iterator[Tuple[int, int, object]]:
    for i, row in dod(M).items():
        for j, value in row.items():
            yield i, j, value


def entry(M: Matrix, i: int, j: int):
    return dod(M).get(i, {}).get(j, M.domain.zero)


def is_zero(M: Matrix) -> bool:
    return M.to_sparse().is_zero_matrix


def equal(A: Matrix, B: Matrix) -> bool:
    return A.shape == B.shape and is_zero(A.to_sparse() - B.to_sparse())


def is_identity(M: Matrix) -> bool:
    return M.shape[0] == M.shape[1] and equal(M, identity(M.shape[0], M.domain))


def kron(A: Matrix, B: Matrix) -> Matrix:
    (ra, ca), (rb, cb) = A.shape, B.shape
    result: Dict[int, Dict[int, object]] = {}
    b_entries = list(iter_entries(B))
    for i, j, a in iter_entries(A):
        for k, l, b in b_entries:
            result.setdefault(i * rb + k, {})[j * cb + l] = a * b
    return DomainMatrix.from_dod(result, (ra * rb, ca * cb), A.domain)


def kron_all(*matrices: Matrix) -> Matrix:
    result = matrices[0]
    for M in matrices[1:]:
        result = kron(result, M)
    return result


def hstack(*matrices: Matrix) -> Matrix:
    rows = matrices[0].shape[0]
    result: Dict[int, Dict[int, object]] = {}
    offset = 0
    for M in matrices:
        if M.shape[0] != rows:
            raise ValueError(f"Cannot stack {M.shape} next to {rows} rows.")
        for i, j, value in iter_entries(M):
            result.setdefault(i, {})[offset + j] = value
        offset += M.shape[1]
    return DomainMatrix.from_dod(result, (rows, offset), matrices[0].domain)


def vstack(*matrices: Matrix) -> Matrix:
    cols = matrices[0].shape[1]
    result: Dict[int, Dict[int, object]] = {}
    offset = 0
    for M in matrices:
        if M.shape[1] != cols:
            raise ValueError(f"Cannot stack {M.shape} under {cols} columns.")
        for i, row in dod(M).items():
            result[offset + i] = dict(row)
        offset += M.shape[0]
    return DomainMatrix.from_dod(result, (offset, cols), matrices[0].domain)


def block_diagonal(*matrices: Matrix) -> Matrix:
    result: Dict[int, Dict[int, object]] = {}
    r_off = c_off = 0
    for M in matrices:
        for i, j, value in iter_entries(M):
            result.setdefault(r_off + i, {})[c_off + j] = value
        r_off += M.shape[0]
        c_off += M.shape[1]
    return DomainMatrix.from_dod(result, (r_off, c_off), matrices[0].domain)


def select_columns(M: Matrix, cols: Sequence[int]) -> Matrix:
    position = {c: k for k, c in enumerate(cols)}
    result: Dict[int, Dict[int, object]] = {}
    for i, j, value in iter_entries(M):
        if j in position:
            result.setdefault(i, {})[position[j]] = value
    return DomainMatrix.from_dod(result, (M.shape[0], len(cols)), M.domain)


def select_rows(M: Matrix, rows: Sequence[int]) -> Matrix:
    view = dod(M)
    result = {k: dict(view[r]) for k, r in enumerate(rows) if r in view}
    return DomainMatrix.from_dod(result, (len(rows), M.shape[1]), M.domain)


def permutation(perm: Sequence[int], K) -> Matrix:
    """Matrix sending basis vector ``j`` to basis vector ``perm[j]``."""
    return DomainMatrix.from_dod(
        {perm[j]: {j: K.one} for j in range(len(perm))}, (len(perm), len(perm)), K
    )


def scale(M: Matrix, c) -> Matrix:
    return M.to_sparse() * c if c != M.domain.one else M


def power(M: Matrix, k: int) -> Matrix:
    result = identity(M.shape[0], M.domain)
    for _ in range(k):
        result = M * result
    return result


def permute_factors(dims: Sequence[int], order: Sequence[int], K) -> Matrix:
    """Reorders tensor factors: new factor ``r`` is old factor ``order[r]``."""
    total = 1
    for d in dims:
        total *= d
    new_dims = [dims[r] for r in order]
    perm = []
    for j in range(total):
        digits, rest = [], j
        for d in reversed(dims):
            rest, digit = divmod(rest, d)
            digits.append(digit)
        digits.reverse()
        index = 0
        for r, d in zip(order, new_dims):
            index = index * d + digits[r]
        perm.append(index)
    return permutation(perm, K)


def rref(M: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    R, pivots = M.to_sparse().rref()
    return R.to_sparse(), tuple(pivots)


def rank(M: Matrix) -> int:
    if 0 in M.shape:
        return 0
    return len(rref(M)[1])


def nullspace(M: Matrix) -> Matrix:
    """Echelon basis of the kernel, one column per free variable."""
    n = M.shape[1]
    K = M.domain
    if n == 0:
        return zeros(0, 0, K)
    if M.shape[0] == 0:
        return identity(n, K)
    R, pivots = rref(M)
    rows = dod(R)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    free_position = {f: k for k, f in enumerate(free)}
    result: Dict[int, Dict[int, object]] = {}
    for k, f in enumerate(free):
        result.setdefault(f, {})[k] = K.one
    for r, p in enumerate(pivots):
        for j, value in rows.get(r, {}).items():
            if j in free_position:
                result.setdefault(p, {})[free_position[j]] = -value
    return DomainMatrix.from_dod(result, (n, len(free)), K)


def column_space(M: Matrix) -> Matrix:
    """Echelon basis of the image: the nonzero rows of rref(Mᵀ), as columns."""
    if 0 in M.shape:
        return zeros(M.shape[0], 0, M.domain)
    R, pivots = rref(M.transpose())
    return select_rows(R, range(len(pivots))).transpose()


def solve(A: Matrix, B: Matrix) -> Tuple[Optional[Matrix], int]:
    """Echelon-canonical particular solution of ``A X = B`` (free variables zero).

    Returns ``(X, freedom)`` where ``freedom`` is the dimension of the affine
    solution space, or ``(None, 0)`` when the system is inconsistent.
    """
    n, m = A.shape
    if B.shape[0] != n:
        raise ValueError(f"Shape mismatch: {A.shape} against right-hand side {B.shape}.")
    k = B.shape[1]
    K = A.domain
    if n == 0 or m + k == 0:
        return zeros(m, k, K), m * k
    R, pivots = rref(hstack(A, B))
    if any(p >= m for p in pivots):
        return None, 0
    rows = dod(R)
    result: Dict[int, Dict[int, object]] = {}
    for r, p in enumerate(pivots):
        for j, value in rows.get(r, {}).items():
            if j >= m:
                result.setdefault(p, {})[j - m] = value
    return DomainMatrix.from_dod(result, (m, k), K), (m - len(pivots)) * k


def inverse(M: Matrix) -> Matrix:
    n = M.shape[0]
    if M.shape[1] != n:
        raise ValueError(f"Cannot invert a {M.shape} matrix.")
    if n == 0:
        return M
    X, freedom = solve(M, identity(n, M.domain))
    if X is None or freedom:
        raise ValueError("Matrix is not invertible.")
    return X


def is_injective(M: Matrix) -> bool:
    return rank(M) == M.shape[1]


def is_surjective(M: Matrix) -> bool:
    return rank(M) == M.shape[0]


def contains(U: Matrix, V: Matrix) -> bool:
    """Whether the column span of ``V`` lies in the column span of ``U``."""
    if V.shape[1] == 0:
        return True
    return rank(hstack(U, V)) == rank(U)


def same_span(U: Matrix, V: Matrix) -> bool:
    return contains(U, V) and contains(V, U)


def coordinates(basis: Matrix, vectors: Matrix) -> Matrix:
    """Coordinates of ``vectors`` in the (independent) columns of ``basis``."""
    X, _ = solve(basis, vectors)
    if X is None:
        raise ValueError("Vectors do not lie in the span of the basis.")
    return X


def restrict(f: Matrix, source: Matrix, target: Matrix) -> Matrix:
    """Matrix of ``f`` from span(source) to span(target), in those bases."""
    return coordinates(target, f * source)


def complement_coordinates(incl: Matrix) -> List[int]:
    """Standard basis vectors completing the columns of ``incl`` to a basis."""
    if incl.shape[1] == 0:
        return list(range(incl.shape[0]))
    _, pivots = rref(incl.transpose())
    pivot_set = set(pivots)
    return [j for j in range(incl.shape[0]) if j not in pivot_set]


def modulo(target: Matrix) -> Matrix:
    """Rows whose kernel is exactly span(target), for a basis ``target``."""
    K = target.domain
    n = target.shape[0]
    comp = complement_coordinates(target)
    basis_change = inverse(hstack(target, select_columns(identity(n, K), comp)))
    return select_rows(basis_change, range(target.shape[1], n))


def preimage(f: Matrix, target: Matrix) -> Matrix:
    """Basis of {v : f v ∈ span(target)} for a basis ``target``."""
    return nullspace(modulo(target) * f)


@dataclass(frozen=True, eq=False)
class LinMap:
    domain: VectorSpace
    codomain: VectorSpace
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            raise ValueError(
                f"Matrix of shape {self.matrix.shape} does not map dimension "
                f"{self.domain.dim} to dimension {self.codomain.dim}."
            )

    @property
    def K(self):
        return self.matrix.domain

    def __matmul__(self, other: "LinMap") -> "LinMap":
        if other.codomain.dim != self.domain.dim:
            raise ValueError("Cannot compose maps with mismatched dimensions.")
        return LinMap(other.domain, self.codomain, self.matrix * other.matrix)

    def __add__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.domain, self.codomain, self.matrix + other.matrix)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.domain, self.codomain, self.matrix - other.matrix)

    def __neg__(self) -> "LinMap":
        return LinMap(self.domain, self.codomain, -self.matrix)

    def tensor(self, other: "LinMap") -> "LinMap":
        return LinMap(
            self.domain.tensor(other.domain),
            self.codomain.tensor(other.codomain),
            kron(self.matrix, other.matrix),
        )

    def equals(self, other: "LinMap") -> bool:
        return equal(self.matrix, other.matrix)

    def is_zero(self) -> bool:
        return is_zero(self.matrix)

    @classmethod
    def identity(cls, space: VectorSpace, K) -> "LinMap":
        return cls(space, space, identity(space.dim, K))


def _as_matrix(f: Union[LinMap, Matrix]) -> Matrix:
    return f.matrix if isinstance(f, LinMap) else f


@dataclass(frozen=True, eq=False)
class KernelImage:
    kernel: Matrix
    image: Matrix
    rank: int


def kernel_image(f: Union[LinMap, Matrix]) -> KernelImage:
    M = _as_matrix(f)
    image = column_space(M)
    return KernelImage(nullspace(M), image, image.shape[1])


@dataclass(frozen=True, eq=False)
class Factorization:
    witness: Optional[Matrix]
    freedom: int = 0

    @property
    def exists(self) -> bool:
        return self.witness is not None


def solve_factorization(
    f: Union[LinMap, Matrix], g: Union[LinMap, Matrix], side: str = "left"
) -> Factorization:
    """Finds ``h`` with ``g∘h = f`` (``side="left"``) or ``h∘g = f`` (``side="right"``)."""
    F, G = _as_matrix(f), _as_matrix(g)
    if side == "left":
        if F.shape[0] != G.shape[0]:
            raise ValueError(f"Codomains differ: {F.shape} against {G.shape}.")
        witness, freedom = solve(G, F)
        return Factorization(witness, freedom)
    if side == "right":
        if F.shape[1] != G.shape[1]:
            raise ValueError(f"Domains differ: {F.shape} against {G.shape}.")
        witness, freedom = solve(G.transpose(), F.transpose())
        return Factorization(
            None if witness is None else witness.transpose(), freedom
        )
    raise ValueError(f"Unknown side '{side}'.")


@dataclass(frozen=True, eq=False)
class Quotient:
    space: VectorSpace
    projection: Matrix
    section: Matrix
    retraction: Matrix
    complement: Tuple[int, ...]


def quotient_and_section(
    incl: Union[LinMap, Matrix], labels: Optional[Sequence[str]] = None
) -> Quotient:
    """Splits ``0 → U → V → V/U → 0`` along the coordinate complement of ``U``.

    The complement is spanned by the standard basis vectors that are not pivots of
    rref(inclᵀ); the four returned maps form a biproduct decomposition.
    """
    M = _as_matrix(incl)
    n, m = M.shape
    K = M.domain
    if rank(M) != m:
        raise ValueError("Inclusion is not injective.")
    comp = complement_coordinates(M)
    section = select_columns(identity(n, K), comp)
    inv = inverse(hstack(M, section))
    if labels is None:
        labels = (
            incl.codomain.labels if isinstance(incl, LinMap) else tuple(f"v{i}" for i in range(n))
        )
    return Quotient(
        space=VectorSpace(len(comp), tuple(labels[j] for j in comp)),
        projection=select_rows(inv, range(m, n)),
        section=section,
        retraction=select_rows(inv, range(m)),
        complement=tuple(comp),
    )


@dataclass
class Term:
    """One summand ``coef · left · op(X) · right`` of a linear matrix equation.

    ``op`` is ``"plain"`` (X), ``"right_id"`` (X ⊗ I_d) or ``"left_id"`` (I_d ⊗ X).
    """

    unknown: str
    left: Optional[Matrix] = None
    right: Optional[Matrix] = None
    op: str = "plain"
    d: int = 1
    coef: object = None


@dataclass
class _Unknown:
    name: str
    rows: int
    cols: int
    offset: int


@dataclass
class LinearSystem:
    """Linear equations whose unknowns are matrices.

    Unknown entries ``X[b, j]`` are numbered row-major after the offsets of the
    previously declared unknowns; every equation block contributes
    ``rows · cols`` scalar equations, numbered row-major as well.
    """

    K: object
    unknowns: Dict[str, _Unknown] = field(default_factory=dict)
    _rows: Dict[int, Dict[int, object]] = field(default_factory=dict)
    _rhs: Dict[int, Dict[int, object]] = field(default_factory=dict)
    n_equations: int = 0

    @property
    def n_unknowns(self) -> int:
        return sum(u.rows * u.cols for u in self.unknowns.values())

    def unknown(self, name: str, rows: int, cols: int) -> "LinearSystem":
        if name in self.unknowns:
            raise ValueError(f"Unknown '{name}' declared twice.")
        self.unknowns[name] = _Unknown(name, rows, cols, self.n_unknowns)
        return self

    def _op_shape(self, term: Term) -> Tuple[int, int]:
        u = self.unknowns[term.unknown]
        if term.op == "plain":
            return u.rows, u.cols
        return u.rows * term.d, u.cols * term.d

    def _positions(self, term: Term, b: int, j: int) -> Iterable[Tuple[int, int]]:
        u = self.unknowns[term.unknown]
        if term.op == "plain":
            return ((b, j),)
        if term.op == "right_id":
            return ((b * term.d + h, j * term.d + h) for h in range(term.d))
        if term.op == "left_id":
            return ((h * u.rows + b, h * u.cols + j) for h in range(term.d))
        raise ValueError(f"Unknown term operation '{term.op}'.")

    def equation(self, terms: Sequence[Term], rhs: Optional[Matrix] = None):
        """Adds the block ``Σ terms = rhs`` (``rhs`` defaults to zero)."""
        shape = None
        for term in terms:
            op_rows, op_cols = self._op_shape(term)
            if term.left is not None and term.left.shape[1] != op_rows:
                raise ValueError(f"Left factor {term.left.shape} does not fit {op_rows} rows.")
            if term.right is not None and term.right.shape[0] != op_cols:
                raise ValueError(f"Right factor {term.right.shape} does not fit {op_cols} columns.")
            out = (
                term.left.shape[0] if term.left is not None else op_rows,
                term.right.shape[1] if term.right is not None else op_cols,
            )
            if shape is not None and out != shape:
                raise ValueError(f"Equation terms have shapes {shape} and {out}.")
            shape = out
        if rhs is not None:
            if shape is not None and rhs.shape != shape:
                raise ValueError(f"Right-hand side {rhs.shape} does not match {shape}.")
            shape = rhs.shape
        if shape is None:
            return self
        out_rows, out_cols = shape
        base = self.n_equations
        K = self.K

        for term in terms:
            u = self.unknowns[term.unknown]
            coef = K.one if term.coef is None else term.coef
            left_cols = columns(term.left) if term.left is not None else None
            right_rows = dod(term.right) if term.right is not None else None
            for b in range(u.rows):
                for j in range(u.cols):
                    var = u.offset + b * u.cols + j
                    for r, c in self._positions(term, b, j):
                        lcol = left_cols[r] if left_cols is not None else {r: K.one}
                        rrow = right_rows.get(c, {}) if right_rows is not None else {c: K.one}
                        for a, lval in lcol.items():
                            for q, rval in rrow.items():
                                row = self._rows.setdefault(base + a * out_cols + q, {})
                                row[var] = row.get(var, K.zero) + coef * lval * rval
        if rhs is not None:
            for a, q, value in iter_entries(rhs):
                self._rhs.setdefault(base + a * out_cols + q, {})[0] = value
        self.n_equations += out_rows * out_cols
        return self

    def matrix(self) -> Matrix:
        return DomainMatrix.from_dod(self._rows, (self.n_equations, self.n_unknowns), self.K)

    def rhs(self) -> Matrix:
        return DomainMatrix.from_dod(self._rhs, (self.n_equations, 1), self.K)

    def unpack(self, vector: Matrix, column: int = 0) -> Dict[str, Matrix]:
        values = {i: row[column] for i, row in dod(vector).items() if column in row}
        result = {}
        for u in self.unknowns.values():
            entries: Dict[int, Dict[int, object]] = {}
            for b in range(u.rows):
                for j in range(u.cols):
                    value = values.get(u.offset + b * u.cols + j)
                    if value:
                        entries.setdefault(b, {})[j] = value
            result[u.name] = DomainMatrix.from_dod(entries, (u.rows, u.cols), self.K)
        return result

    def kernel(self) -> List[Dict[str, Matrix]]:
        basis = self.kernel_matrix()
        return [self.unpack(basis, k) for k in range(basis.shape[1])]

    def kernel_matrix(self) -> Matrix:
        if self.n_equations == 0:
            return identity(self.n_unknowns, self.K)
        return nullspace(self.matrix())

    def solve(self) -> Tuple[Optional[Dict[str, Matrix]], int]:
        if self.n_equations == 0:
            return self.unpack(zeros(self.n_unknowns, 1, self.K)), self.n_unknowns
        x, freedom = solve(self.matrix(), self.rhs())
        if x is None:
            return None, 0
        return self.unpack(x), freedom


def vectorize(M: Matrix) -> Matrix:
    """Row-major flattening of ``M`` into a column."""
    rows, cols = M.shape
    result = {i * cols + j: {0: v} for i, j, v in iter_entries(M)}
    return DomainMatrix.from_dod(result, (rows * cols, 1), M.domain)


def unvectorize(v: Matrix, rows: int, cols: int, column: int = 0) -> Matrix:
    entries: Dict[int, Dict[int, object]] = {}
    for i, row in dod(v).items():
        if column in row:
            entries.setdefault(i // cols, {})[i % cols] = row[column]
    return DomainMatrix.from_dod(entries, (rows, cols), v.domain)


def operator_matrix(rows: int, cols: int, terms: Sequence[Term], K) -> Matrix:
    """Matrix of ``vec(X) ↦ vec(Σ terms)`` for a single unknown ``X`` of shape rows×cols."""
    system = LinearSystem(K).unknown(terms[0].unknown, rows, cols)
    system.equation(terms)
    return system.matrix()
