"""Words in the simplicial, para-cyclic and cyclic categories.

Words are written in operator form: ``d1@3 . t@3 . s0@2`` applies ``s0@2`` first.
Every letter carries its source degree, so ``d{i}@n`` maps X_n to X_{n-1},
``s{i}@n`` maps X_n to X_{n+1} and ``t@n``, ``t^-1@n`` are endomorphisms of X_n.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.exactlin import Matrix
from hopfcyc.logging import logger

FACE, DEGENERACY, CYCLIC, CYCLIC_INVERSE = "d", "s", "t", "t^-1"

# each tag contains the words of the tags before it
TAGS = ("lambda_plus", "delta", "lambda_nat", "lambda_infty", "lambda")

FAMILIES = ("simplicial", "pseudo_para", "para", "cyclic")
PARA_FAMILIES = ("simplicial", "pseudo_para", "para")

MAX_REWRITES = 200_000

_LETTER = re.compile(r"^(d|s)(\d+)@(\d+)$|^(t\^-1|t)@(\d+)$")
_IDENTITY = re.compile(r"^id@(\d+)$")


@dataclass(frozen=True, order=True)
class Generator:
    kind: str
    degree: int
    index: int = 0

    @property
    def target(self) -> int:
        if self.kind == FACE:
            return self.degree - 1
        if self.kind == DEGENERACY:
            return self.degree + 1
        return self.degree

    @property
    def is_cyclic(self) -> bool:
        return self.kind in (CYCLIC, CYCLIC_INVERSE)

    def is_last_face(self) -> bool:
        return self.kind == FACE and self.index == self.degree

    @classmethod
    def parse(cls, token: str) -> "Generator":
        match = _LETTER.match(token.strip())
        if match is None:
            raise ValueError(f"Malformed letter '{token}'.")
        if match.group(1):
            return cls(match.group(1), int(match.group(3)), int(match.group(2)))
        return cls(match.group(4), int(match.group(5)))

    def __str__(self):
        if self.is_cyclic:
            return f"{self.kind}@{self.degree}"
        return f"{self.kind}{self.index}@{self.degree}"


def face(i: int, n: int) -> Generator:
    return Generator(FACE, n, i)


def degeneracy(i: int, n: int) -> Generator:
    return Generator(DEGENERACY, n, i)


def cyclic(n: int) -> Generator:
    return Generator(CYCLIC, n)


def cyclic_inverse(n: int) -> Generator:
    return Generator(CYCLIC_INVERSE, n)


def _check_letter(letter: Generator, tag: str):
    if letter.kind == FACE and not (letter.degree >= 1 and 0 <= letter.index <= letter.degree):
        raise ValueError(f"Face {letter} is out of range.")
    if letter.kind == DEGENERACY and not (
        letter.degree >= 0 and 0 <= letter.index <= letter.degree
    ):
        raise ValueError(f"Degeneracy {letter} is out of range.")
    if letter.degree < 0:
        raise ValueError(f"Letter {letter} has a negative degree.")
    if letter.is_cyclic and tag in ("delta", "lambda_plus"):
        raise ValueError(f"Letter {letter} is not allowed in {tag}.")
    if letter.kind == CYCLIC_INVERSE and tag == "lambda_nat":
        raise ValueError(f"Letter {letter} is not allowed in {tag}.")
    if tag == "lambda_plus" and letter.is_last_face():
        raise ValueError(f"Last face {letter} is not allowed in lambda_plus.")


@dataclass(frozen=True)
class MorphismWord:
    """A composable sequence of letters, leftmost applied last."""

    source: int
    letters: Tuple[Generator, ...] = ()
    tag: str = "lambda"

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"Unknown category tag '{self.tag}'.")
        degree = self.source
        for letter in reversed(self.letters):
            _check_letter(letter, self.tag)
            if letter.degree != degree:
                raise ValueError(
                    f"Letter {letter} is applied at degree {degree} in '{self}'."
                )
            degree = letter.target

    @property
    def target(self) -> int:
        return self.letters[0].target if self.letters else self.source

    def applied(self) -> Tuple[Generator, ...]:
        return tuple(reversed(self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return f"id@{self.source}"
        return " . ".join(str(letter) for letter in self.letters)


def parse_word(text: str, tag: str = "lambda") -> MorphismWord:
    text = text.strip()
    identity = _IDENTITY.match(text)
    if identity:
        return MorphismWord(int(identity.group(1)), (), tag)
    if not text:
        raise ValueError("Empty word; write id@n for an identity.")
    letters = tuple(Generator.parse(token) for token in text.split("."))
    return MorphismWord(letters[-1].degree, letters, tag)


def word(*letters: Generator, tag: str = "lambda", source: Optional[int] = None):
    if not letters and source is None:
        raise ValueError("An empty word needs an explicit source degree.")
    return MorphismWord(letters[-1].degree if letters else source, letters, tag)


def _wider(tag_a: str, tag_b: str) -> str:
    return TAGS[max(TAGS.index(tag_a), TAGS.index(tag_b))]


def compose(w1: MorphismWord, w2: MorphismWord) -> MorphismWord:
    """``w1 ∘ w2``: w2 is applied first."""
    if w1.source != w2.target:
        raise ValueError(
            f"Cannot compose '{w1}' (source {w1.source}) after '{w2}' (target {w2.target})."
        )
    return MorphismWord(w2.source, w1.letters + w2.letters, _wider(w1.tag, w2.tag))


def _rewrite(x: Generator, y: Generator) -> Optional[Tuple[Generator, ...]]:
    """One left-to-right rule for the written pair ``x . y`` (y applied first)."""
    n = y.degree
    if {x.kind, y.kind} == {CYCLIC, CYCLIC_INVERSE}:
        return ()
    if y.kind == CYCLIC:
        if x.kind == FACE:
            if x.index == 0:
                return (face(n, n),)
            return (cyclic(n - 1), face(x.index - 1, n))
        if x.kind == DEGENERACY:
            if x.index == 0:
                return (cyclic(n + 1), cyclic(n + 1), degeneracy(n, n))
            return (cyclic(n + 1), degeneracy(x.index - 1, n))
        return None
    if y.kind == CYCLIC_INVERSE:
        if x.kind == FACE:
            if x.index == n:
                return (face(0, n),)
            return (cyclic_inverse(n - 1), face(x.index + 1, n))
        if x.kind == DEGENERACY:
            if x.index == n:
                return (cyclic_inverse(n + 1), cyclic_inverse(n + 1), degeneracy(0, n))
            return (cyclic_inverse(n + 1), degeneracy(x.index + 1, n))
        return None
    if x.kind == FACE and y.kind == FACE and x.index >= y.index:
        return (face(y.index, n - 1), face(x.index + 1, n))
    if x.kind == DEGENERACY and y.kind == DEGENERACY and x.index <= y.index:
        return (degeneracy(y.index + 1, n + 1), degeneracy(x.index, n))
    if x.kind == FACE and y.kind == DEGENERACY:
        i, j = x.index, y.index
        if i < j:
            return (degeneracy(j - 1, n - 1), face(i, n))
        if i in (j, j + 1):
            return ()
        return (degeneracy(j, n - 1), face(i - 1, n))
    return None


def _collapse_cycles(letters: List[Generator]) -> bool:
    """Removes one run of n+1 consecutive t@n letters."""
    run = 0
    for k, letter in enumerate(letters):
        if letter.kind == CYCLIC and k and letters[k - 1] == letter:
            run += 1
        else:
            run = 1 if letter.kind == CYCLIC else 0
        if run and run == letter.degree + 1:
            del letters[k - run + 1 : k + 1]
            return True
    return False


@dataclass(frozen=True)
class NormalForm:
    """``t^k · (degeneracies) · (faces)`` in written order.

    ``faces`` and ``degeneracies`` list indices in application order: faces strictly
    decreasing, degeneracies strictly increasing.
    """

    source: int
    target: int
    cyclic_power: int = 0
    faces: Tuple[int, ...] = ()
    degeneracies: Tuple[int, ...] = ()
    tag: str = "lambda"
    steps: int = field(default=0, compare=False)

    def word(self) -> MorphismWord:
        letters: List[Generator] = []
        degree = self.source
        for i in self.faces:
            letters.insert(0, face(i, degree))
            degree -= 1
        for j in self.degeneracies:
            letters.insert(0, degeneracy(j, degree))
            degree += 1
        letter = cyclic(degree) if self.cyclic_power >= 0 else cyclic_inverse(degree)
        letters[:0] = [letter] * abs(self.cyclic_power)
        return MorphismWord(self.source, tuple(letters), self.tag)

    def is_identity(self) -> bool:
        return not (self.cyclic_power or self.faces or self.degeneracies)

    def __str__(self):
        return str(self.word())


def normalize(w: MorphismWord, max_steps: int = MAX_REWRITES) -> NormalForm:
    letters = list(w.letters)
    if w.tag == "lambda":
        expanded: List[Generator] = []
        for letter in letters:
            if letter.kind == CYCLIC_INVERSE:
                expanded += [cyclic(letter.degree)] * letter.degree
            else:
                expanded.append(letter)
        letters = expanded

    steps = 0
    while True:
        for k in range(len(letters) - 1):
            replacement = _rewrite(letters[k], letters[k + 1])
            if replacement is not None:
                letters[k : k + 2] = replacement
                break
        else:
            if not (w.tag == "lambda" and _collapse_cycles(letters)):
                break
        steps += 1
        if steps > max_steps:
            raise RuntimeError(f"Rewriting '{w}' did not terminate in {max_steps} steps.")

    power = sum(
        1 if g.kind == CYCLIC else -1 for g in letters if g.is_cyclic
    )
    if w.tag == "lambda":
        power %= w.target + 1
    applied = [g for g in reversed(letters) if not g.is_cyclic]
    return NormalForm(
        source=w.source,
        target=w.target,
        cyclic_power=power,
        faces=tuple(g.index for g in applied if g.kind == FACE),
        degeneracies=tuple(g.index for g in applied if g.kind == DEGENERACY),
        tag=w.tag,
        steps=steps,
    )


def equivalent(w1: MorphismWord, w2: MorphismWord) -> bool:
    return normalize(w1) == normalize(w2)


@dataclass(frozen=True, eq=False)
class OperatorFamily:
    """Operator matrices of a (para-)cyclic object built up to degree ``len(dims) - 1``.

    Faces exist for 1 ≤ n ≤ N, degeneracies for n ≤ N - 1 and t for n ≤ N.
    """

    K: object
    dims: Tuple[int, ...]
    faces: Dict[Tuple[int, int], Matrix]
    degeneracies: Dict[Tuple[int, int], Matrix]
    cyclic: Dict[int, Matrix] = field(default_factory=dict)
    cyclic_inverse: Dict[int, Matrix] = field(default_factory=dict)
    name: str = ""

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1

    def operator(self, g: Generator) -> Matrix:
        table = {
            FACE: self.faces,
            DEGENERACY: self.degeneracies,
            CYCLIC: self.cyclic,
            CYCLIC_INVERSE: self.cyclic_inverse,
        }[g.kind]
        key = g.degree if g.is_cyclic else (g.index, g.degree)
        if key not in table:
            raise ValueError(f"Operator {g} is outside the built range of {self.name or 'X'}.")
        return table[key]

    def identity(self, n: int) -> Matrix:
        return el.identity(self.dims[n], self.K)

    def with_inverse(self) -> "OperatorFamily":
        return OperatorFamily(
            self.K,
            self.dims,
            self.faces,
            self.degeneracies,
            self.cyclic,
            {n: el.inverse(t) for n, t in self.cyclic.items()},
            self.name,
        )


def evaluate(w: MorphismWord, X) -> Matrix:
    """The matrix of ``w`` on X: the product of the letter matrices in written order."""
    if not 0 <= w.source <= X.max_degree:
        raise ValueError(f"Degree {w.source} is outside the built range of X.")
    result = X.identity(w.source)
    for letter in w.applied():
        result = X.operator(letter) * result
    return result


@dataclass(frozen=True)
class Identity:
    lhs: MorphismWord
    rhs: MorphismWord
    family: str

    @property
    def name(self) -> str:
        return f"{self.lhs} = {self.rhs}"


def _pair(lhs: Sequence[Generator], rhs: Sequence[Generator], family: str, n: int):
    return Identity(
        MorphismWord(n, tuple(lhs), "lambda_infty"),
        MorphismWord(n, tuple(rhs), "lambda_infty"),
        family,
    )


def cyclic_identities(
    n: int, max_degree: int, families: Sequence[str] = FAMILIES
) -> List[Identity]:
    """Defining identities with source degree n whose words stay within max_degree.

    Identities touching a last face, and ``s_0 t = t² s_n``, form the ``para`` family.
    """
    identities: List[Identity] = []
    up = n + 1 <= max_degree
    if n >= 2:
        for j in range(1, n + 1):
            for i in range(j):
                family = "para" if j == n else "simplicial"
                identities.append(
                    _pair([face(i, n - 1), face(j, n)], [face(j - 1, n - 1), face(i, n)], family, n)
                )
    if n + 2 <= max_degree:
        for j in range(n + 1):
            for i in range(j + 1):
                identities.append(
                    _pair(
                        [degeneracy(i, n + 1), degeneracy(j, n)],
                        [degeneracy(j + 1, n + 1), degeneracy(i, n)],
                        "simplicial",
                        n,
                    )
                )
    if up:
        for j in range(n + 1):
            for i in range(n + 2):
                if i < j:
                    rhs = [degeneracy(j - 1, n - 1), face(i, n)]
                elif i in (j, j + 1):
                    rhs = []
                else:
                    rhs = [degeneracy(j, n - 1), face(i - 1, n)]
                family = "para" if i == n + 1 else "simplicial"
                identities.append(_pair([face(i, n + 1), degeneracy(j, n)], rhs, family, n))
    if n >= 1:
        for i in range(1, n):
            identities.append(
                _pair([face(i, n), cyclic(n)], [cyclic(n - 1), face(i - 1, n)], "pseudo_para", n)
            )
        identities.append(
            _pair([face(n, n), cyclic(n)], [cyclic(n - 1), face(n - 1, n)], "para", n)
        )
        identities.append(_pair([face(0, n), cyclic(n)], [face(n, n)], "para", n))
    if up:
        for i in range(1, n + 1):
            identities.append(
                _pair(
                    [degeneracy(i, n), cyclic(n)],
                    [cyclic(n + 1), degeneracy(i - 1, n)],
                    "pseudo_para",
                    n,
                )
            )
        identities.append(
            _pair(
                [degeneracy(0, n), cyclic(n)],
                [cyclic(n + 1), cyclic(n + 1), degeneracy(n, n)],
                "para",
                n,
            )
        )
    identities.append(_pair([cyclic(n)] * (n + 1), [], "cyclic", n))
    return [identity for identity in identities if identity.family in families]


def identity_defect(identity: Identity, X) -> Matrix:
    return evaluate(identity.lhs, X) - evaluate(identity.rhs, X)


@dataclass
class IdentityReport:
    held: List[str] = field(default_factory=list)
    failed: List[str] = field(default_factory=list)
    by_family: Dict[str, Dict[str, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failed

    def family_ok(self, family: str) -> bool:
        return self.by_family.get(family, {}).get("failed", 0) == 0

    def record(self, identity: Identity, holds: bool):
        counts = self.by_family.setdefault(identity.family, {"held": 0, "failed": 0})
        if holds:
            self.held.append(identity.name)
            counts["held"] += 1
        else:
            self.failed.append(identity.name)
            counts["failed"] += 1


def check_identities(X, families: Sequence[str] = FAMILIES) -> IdentityReport:
    report = IdentityReport()
    for n in range(X.max_degree + 1):
        for identity in cyclic_identities(n, X.max_degree, families):
            report.record(identity, el.is_zero(identity_defect(identity, X)))
    if report.failed:
        logger.debug("%d identities fail, first: %s", len(report.failed), report.failed[0])
    return report


@dataclass(frozen=True, eq=False)
class ParaCyclicVerdict:
    holds: bool
    family: OperatorFamily
    report: IdentityReport


def paracyclic_from_t(
    d0: Dict[int, Matrix],
    s0: Dict[int, Matrix],
    t: Dict[int, Matrix],
    K,
    name: str = "",
) -> ParaCyclicVerdict:
    """Generates ``d_i = t^i d_0 t^-i`` and ``s_i = t^i s_0 t^-i`` and checks the para-cyclic relations."""
    max_degree = max(t)
    dims = tuple(t[n].shape[0] for n in range(max_degree + 1))
    t_inv = {}
    for n, matrix in t.items():
        if not el.is_injective(matrix):
            raise ValueError(f"t@{n} is not invertible.")
        t_inv[n] = el.inverse(matrix)

    faces, degeneracies = {}, {}
    for n in range(1, max_degree + 1):
        for i in range(n + 1):
            faces[(i, n)] = el.power(t[n - 1], i) * d0[n] * el.power(t_inv[n], i)
    for n in range(max_degree):
        for i in range(n + 1):
            degeneracies[(i, n)] = el.power(t[n + 1], i) * s0[n] * el.power(t_inv[n], i)
    family = OperatorFamily(K, dims, faces, degeneracies, dict(t), t_inv, name)
    report = check_identities(family, PARA_FAMILIES)
    return ParaCyclicVerdict(report.ok, family, report)


def random_word(
    rng: np.random.Generator, max_degree: int, length: int, tag: str = "lambda"
) -> MorphismWord:
    source = int(rng.integers(0, max_degree + 1))
    letters: List[Generator] = []
    degree = source
    for _ in range(length):
        choices: List[Generator] = []
        last = degree if tag != "lambda_plus" else degree - 1
        choices += [face(i, degree) for i in range(last + 1)] if degree >= 1 else []
        if degree + 1 <= max_degree:
            choices += [degeneracy(i, degree) for i in range(degree + 1)]
        if tag not in ("delta", "lambda_plus"):
            choices.append(cyclic(degree))
            if tag != "lambda_nat":
                choices.append(cyclic_inverse(degree))
        if not choices:
            break
        letter = choices[int(rng.integers(0, len(choices)))]
        letters.insert(0, letter)
        degree = letter.target
    return MorphismWord(source, tuple(letters), tag)
