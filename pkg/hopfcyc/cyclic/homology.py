"""Hochschild and cyclic homology of cyclic modules over an exact field.

Conventions: ``b = Σ_{i=0}^{n} (-1)^i d_i`` including the last face,
``λ_n = (-1)^n t_n``, ``N = Σ_{i=0}^{n} λ_n^i``, the extra degeneracy is
``s = t_{n+1} s_n`` and ``B = (1 - λ_{n+1}) s N``. Cyclic homology is computed
three ways: the (b, B)-bicomplex, the mixed-complex totalization and, in
characteristic zero, Connes' quotient complex ``C_n / (1 - λ)``.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.amod import ComoduleAlgebra
from hopfcyc.algebra.comod import trivial
from hopfcyc.algebra.exactlin import Matrix
from hopfcyc.cyclic.cyclic_cat import cyclic, degeneracy, face
from hopfcyc.cyclic.hopf_cyclic import ParaCyclicComodule, StableModComod, assemble_T
from hopfcyc.logging import TableLogger, logger


@dataclass(frozen=True, eq=False)
class GradedComplex:
    """Spaces ``C_0 … C_N`` with ``d_n: C_n → C_{n-1}`` for 1 ≤ n ≤ N."""

    K: object
    dims: Tuple[int, ...]
    differentials: Dict[int, Matrix]
    name: str = ""

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def squares_to_zero(self) -> bool:
        return all(
            el.is_zero(self.differentials[n - 1] * self.differentials[n])
            for n in range(2, self.top + 1)
        )

    def _rank(self, n: int) -> int:
        return el.rank(self.differentials[n]) if 1 <= n <= self.top else 0

    def homology(self) -> Dict[int, int]:
        """Homology dimensions in degrees 0 … N-1, where both differentials are known."""
        return {
            n: self.dims[n] - self._rank(n) - self._rank(n + 1) for n in range(self.top)
        }


def zero_complex(K, top: int) -> GradedComplex:
    return GradedComplex(
        K, (0,) * (top + 1), {n: el.zeros(0, 0, K) for n in range(1, top + 1)}, "0"
    )


@dataclass(frozen=True, eq=False)
class Bicomplex:
    """First-quadrant double complex with anticommuting squares.

    ``vertical[(p, q)]: B_{pq} → B_{p,q-1}`` and ``horizontal[(p, q)]: B_{pq} → B_{p-1,q}``.
    """

    K: object
    cells: Dict[Tuple[int, int], int]
    vertical: Dict[Tuple[int, int], Matrix]
    horizontal: Dict[Tuple[int, int], Matrix]

    def _map(self, table, key, source, target) -> Matrix:
        if key in table:
            return table[key]
        return el.zeros(self.cells.get(target, 0), self.cells.get(source, 0), self.K)

    def anticommutes(self) -> bool:
        for (p, q) in self.cells:
            if (p - 1, q - 1) not in self.cells:
                continue
            down_left = self._map(self.horizontal, (p, q - 1), (p, q - 1), (p - 1, q - 1)) * self._map(
                self.vertical, (p, q), (p, q), (p, q - 1)
            )
            left_down = self._map(self.vertical, (p - 1, q), (p - 1, q), (p - 1, q - 1)) * self._map(
                self.horizontal, (p, q), (p, q), (p - 1, q)
            )
            if not el.is_zero(down_left + left_down):
                return False
        return True

    def total(self, top: int) -> GradedComplex:
        layout: Dict[int, List[Tuple[int, int]]] = {
            n: sorted(c for c in self.cells if sum(c) == n) for n in range(top + 1)
        }
        dims = tuple(sum(self.cells[c] for c in layout[n]) for n in range(top + 1))
        differentials = {}
        for n in range(1, top + 1):
            offsets, start = {}, 0
            for cell in layout[n - 1]:
                offsets[cell] = start
                start += self.cells[cell]
            entries: Dict[Tuple[int, int], object] = {}
            column = 0
            for (p, q) in layout[n]:
                for key, table, target in (
                    ((p, q), self.vertical, (p, q - 1)),
                    ((p, q), self.horizontal, (p - 1, q)),
                ):
                    if key in table and target in offsets:
                        for i, j, value in el.iter_entries(table[key]):
                            position = (offsets[target] + i, column + j)
                            entries[position] = entries.get(position, self.K.zero) + value
                column += self.cells[(p, q)]
            differentials[n] = el.from_entries(
                {k: v for k, v in entries.items() if v}, (dims[n - 1], dims[n]), self.K
            )
        return GradedComplex(self.K, dims, differentials, "Tot")


@dataclass(frozen=True, eq=False)
class MixedComplex:
    """``b: C_n → C_{n-1}`` for 1 ≤ n ≤ N and ``B: C_n → C_{n+1}`` for n < N."""

    K: object
    dims: Tuple[int, ...]
    b: Dict[int, Matrix]
    B: Dict[int, Matrix]
    name: str = ""

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def identities(self) -> Dict[str, bool]:
        N = self.top
        return {
            "b∘b = 0": all(el.is_zero(self.b[n - 1] * self.b[n]) for n in range(2, N + 1)),
            "B∘B = 0": all(el.is_zero(self.B[n + 1] * self.B[n]) for n in range(N - 1)),
            "b∘B + B∘b = 0": all(
                el.is_zero(self.b[n + 1] * self.B[n] + self.B[n - 1] * self.b[n])
                for n in range(1, N)
            )
            and (N == 0 or el.is_zero(self.b[1] * self.B[0])),
        }

    def total(self, top: Optional[int] = None) -> GradedComplex:
        """``Tot_n = ⊕_{p ≥ 0} C_{n-2p}`` with ``d = b + B``."""
        top = self.top if top is None else top
        pieces = {n: list(range(n, -1, -2)) for n in range(top + 1)}
        dims = tuple(sum(self.dims[k] for k in pieces[n]) for n in range(top + 1))
        differentials = {}
        for n in range(1, top + 1):
            blocks = []
            for target in pieces[n - 1]:
                row = []
                for source in pieces[n]:
                    if target == source - 1 and source >= 1:
                        row.append(self.b[source])
                    elif target == source + 1 and source in self.B:
                        row.append(self.B[source])
                    else:
                        row.append(el.zeros(self.dims[target], self.dims[source], self.K))
                blocks.append(el.hstack(*row))
            differentials[n] = el.vstack(*blocks)
        return GradedComplex(self.K, dims, differentials, f"Tot({self.name})")

    def bicomplex(self) -> Bicomplex:
        """``B_{pq} = C_{q-p}`` for q ≥ p, b vertically and B horizontally."""
        N = self.top
        cells, vertical, horizontal = {}, {}, {}
        for p in range(N // 2 + 1):
            for q in range(p, N - p + 1):
                k = q - p
                cells[(p, q)] = self.dims[k]
                if k >= 1:
                    vertical[(p, q)] = self.b[k]
                if p >= 1 and k in self.B:
                    horizontal[(p, q)] = self.B[k]
        return Bicomplex(self.K, cells, vertical, horizontal)


def alternating_face_sum(X: ParaCyclicComodule, n: int) -> Matrix:
    total = el.zeros(X.dims[n - 1], X.dims[n], X.K)
    for i in range(n + 1):
        term = X.operator(face(i, n))
        total = total + term if i % 2 == 0 else total - term
    return total


def _signed_cyclic(X, n: int) -> Matrix:
    t = X.operator(cyclic(n))
    return t if n % 2 == 0 else el.scale(t, -X.K.one)


def connes_B(X, n: int) -> Matrix:
    """``B = (1 - λ_{n+1}) t_{n+1} s_n Σ_i λ_n^i`` on degree n."""
    lam = _signed_cyclic(X, n)
    norm = el.zeros(X.dims[n], X.dims[n], X.K)
    power = X.identity(n)
    for _ in range(n + 1):
        norm = norm + power
        power = lam * power
    extra = X.operator(cyclic(n + 1)) * X.operator(degeneracy(n, n))
    return (X.identity(n + 1) - _signed_cyclic(X, n + 1)) * extra * norm


def cyclic_bar_construction(
    a: ComoduleAlgebra, max_degree: int, jobs: int = 1, verbose: bool = False
) -> ParaCyclicComodule:
    """``A^{⊗(n+1)}`` with the classical faces and the cyclic permutation."""
    pair = StableModComod("k", a, trivial(a.hopf), a.counit, a.unit)
    X = assemble_T(a, pair, max_degree, jobs, verbose)
    return ParaCyclicComodule(
        f"C({a.name})", X.operators, X.comodules, "cyclic", (), (), pair
    )


def hochschild_b(a: ComoduleAlgebra, n: int) -> Matrix:
    if n < 1:
        raise ValueError("The Hochschild differential starts in degree 1.")
    return alternating_face_sum(cyclic_bar_construction(a, n), n)


def mixed_complex(X: ParaCyclicComodule) -> MixedComplex:
    N = X.max_degree
    return MixedComplex(
        X.K,
        X.dims,
        {n: alternating_face_sum(X, n) for n in range(1, N + 1)},
        {n: connes_B(X, n) for n in range(N)},
        X.name,
    )


def connes_complex(X: ParaCyclicComodule) -> GradedComplex:
    """``C^λ_n = C_n / im(1 - λ_n)`` with the induced b; computes HC in characteristic 0."""
    if X.K.characteristic() != 0:
        raise ValueError("Connes' complex computes cyclic homology only in characteristic 0.")
    N = X.max_degree
    quotients = {}
    for n in range(N + 1):
        image = el.column_space(X.identity(n) - _signed_cyclic(X, n))
        quotients[n] = el.quotient_and_section(image)
    differentials = {
        n: quotients[n - 1].projection * alternating_face_sum(X, n) * quotients[n].section
        for n in range(1, N + 1)
    }
    dims = tuple(quotients[n].space.dim for n in range(N + 1))
    return GradedComplex(X.K, dims, differentials, f"C^λ({X.name})")


def tot_and_homology(bc: Union[Bicomplex, MixedComplex], top: int) -> Dict[int, int]:
    """Homology of the totalization in degrees 0 … top - 1."""
    complex_ = bc.total(top)
    if not complex_.squares_to_zero():
        raise ValueError("Total differential does not square to zero.")
    return complex_.homology()


@dataclass
class CyclicHomology:
    name: str
    mixed: MixedComplex
    identities: Dict[str, bool]
    paths: Dict[str, Dict[int, int]] = field(default_factory=dict)
    hochschild: Dict[int, int] = field(default_factory=dict)

    @property
    def reliable(self) -> int:
        """Largest degree whose homology uses only built data."""
        return self.mixed.top - 1

    @property
    def dims(self) -> Dict[int, int]:
        return self.paths["bicomplex"]

    @property
    def paths_agree(self) -> bool:
        values = list(self.paths.values())
        return all(v == values[0] for v in values)

    def table(self) -> TableLogger:
        table = TableLogger(f"HC({self.name})")
        for n in range(self.reliable + 1):
            row = {"degree": n, "HH": self.hochschild[n]}
            row.update({f"HC[{path}]": dims[n] for path, dims in self.paths.items()})
            table.log(row)
        return table


def cyclic_from_cyclic_module(X: ParaCyclicComodule, connes: Optional[bool] = None) -> CyclicHomology:
    """Mixed complex of a cyclic module and its cyclic homology up to degree N - 1."""
    if X.max_degree < 1:
        raise ValueError("At least degrees 0 and 1 are needed for homology.")
    mixed = mixed_complex(X)
    identities = mixed.identities()
    if not all(identities.values()):
        failed = [name for name, ok in identities.items() if not ok]
        raise ValueError(f"{X.name} is not cyclic: {', '.join(failed)} fails.")
    result = CyclicHomology(X.name, mixed, identities)
    top = X.max_degree
    result.paths["bicomplex"] = tot_and_homology(mixed.bicomplex(), top)
    result.paths["mixed"] = tot_and_homology(mixed, top)
    if connes is None:
        connes = X.K.characteristic() == 0
    if connes:
        result.paths["connes"] = connes_complex(X).homology()
    result.hochschild = GradedComplex(X.K, X.dims, mixed.b, "C").homology()
    if not result.paths_agree:
        logger.warning("Cyclic homology paths disagree for %s: %s", X.name, result.paths)
    return result
