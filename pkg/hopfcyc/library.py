"""Bundled definition files and seeded random instances."""

import os
from importlib.resources import files
from typing import List, Optional

import numpy as np

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.comod import Comodule, direct_sum, grouplike, regular, trivial
from hopfcyc.algebra.exactlin import Matrix
from hopfcyc.algebra.hopf_core import HopfAlgebra
from hopfcyc.cli.definitions import DefinitionError, Definitions, load

EXTENSION = ".alg"


def data_dir() -> str:
    return str(files("hopfcyc").joinpath("data"))


def bundled_names() -> List[str]:
    return sorted(
        name[: -len(EXTENSION)]
        for name in os.listdir(data_dir())
        if name.endswith(EXTENSION)
    )


def resolve(path: str) -> str:
    """A definition file on disk, or the bundled file of that name."""
    if os.path.isfile(path):
        return path
    name = os.path.basename(path)
    if not name.endswith(EXTENSION):
        name += EXTENSION
    bundled = os.path.join(data_dir(), name)
    if os.path.isfile(bundled):
        return bundled
    raise DefinitionError(f"no definition file '{path}' and no bundled file '{name}'")


def load_bundled(name: str, field_override: Optional[str] = None) -> Definitions:
    return load(resolve(name), field_override)


def random_linmap(
    rows: int, cols: int, K, rng: np.random.Generator, low: int = -2, high: int = 2
) -> Matrix:
    values = rng.integers(low, high + 1, size=(rows, cols))
    entries = {
        (i, j): K.convert(int(values[i, j]))
        for i in range(rows)
        for j in range(cols)
        if values[i, j]
    }
    return el.from_entries(entries, (rows, cols), K)


def random_invertible(n: int, K, rng: np.random.Generator, attempts: int = 100) -> Matrix:
    for _ in range(attempts):
        P = random_linmap(n, n, K, rng)
        if el.rank(P) == n:
            return P
    return el.identity(n, K)


def _grouplikes(h: HopfAlgebra) -> List[str]:
    labels = []
    for label in h.space.labels:
        g = h.basis_vector(label)
        if el.equal(h.comult * g, el.kron(g, g)):
            labels.append(label)
    return labels


def random_comodule(
    h: HopfAlgebra, max_dim: int, rng: np.random.Generator, name: str = "M"
) -> Comodule:
    """A random sum of trivial, group-like and regular summands in a random basis."""
    pieces = [trivial(h)] + [grouplike(h, g) for g in _grouplikes(h)]
    if h.dim <= max_dim:
        pieces.append(regular(h))
    target = int(rng.integers(1, max_dim + 1))
    M = None
    while M is None or M.dim < target:
        choices = [p for p in pieces if p.dim <= target - (M.dim if M else 0)]
        if not choices:
            break
        piece = choices[int(rng.integers(0, len(choices)))]
        M = piece if M is None else direct_sum(M, piece)
    P = random_invertible(M.dim, h.K, rng)
    coaction = el.kron(P, h.identity()) * M.coaction * el.inverse(P)
    return Comodule(name, h, el.VectorSpace.standard(M.dim, prefix="m"), coaction)
