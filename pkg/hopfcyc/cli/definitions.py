"""Line-oriented definition files for Hopf algebras, comodules and their relatives.

A file declares a field and a sequence of named objects, either as a block

    hopf kc2
    basis e g
    unit = 1 e
    mult g g = 1 e
    ...
    end

or as a one-liner built from already declared objects (``comodule k = trivial kc2``).
Tables are sparse: entries not listed are zero.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.amod import (
    AModObject,
    ComoduleAlgebra,
    free_amodule,
    regular_algebra,
    regular_amodule,
    trivial_algebra,
)
from hopfcyc.algebra.comod import Comodule, regular, trivial
from hopfcyc.algebra.exactlin import Field, FieldConfig, Matrix, VectorSpace
from hopfcyc.algebra.hopf_core import HopfAlgebra, dual_hopf
from hopfcyc.cyclic.hopf_cyclic import (
    StableModComod,
    coefficients,
    plain_bialgebra,
    regular_pair,
    trivial_pair,
)

KINDS = ("hopf", "comodule", "algebra", "module", "stable", "map")

BLOCK_KEYS = {
    "hopf": {"unit": 0, "mult": 2, "comult": 1, "counit": 1, "antipode": 1},
    "comodule": {"coaction": 1},
    "algebra": {"unit": 0, "mult": 2, "comult": 1, "counit": 1, "antipode": 1},
    "module": {"act": 2},
    "stable": {"act": 2, "coact": 1},
    "map": {"send": 1},
}

HEADERS = {
    "hopf": (),
    "comodule": ("over",),
    "algebra": ("on",),
    "module": ("over", "on"),
    "stable": ("over", "on"),
    "map": ("from", "to"),
}

CONSTRUCTORS = {
    "hopf": {"dual": 1},
    "comodule": {"regular": 1, "trivial": 1},
    "algebra": {"regular": 1, "trivial": 1, "plain": 2},
    "module": {"regular": 1, "free": 2},
    "stable": {"trivial": 1, "regular": 1, "coefficients": 1},
}

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([^\W\d][\w']*)|([+\-*=]))")


class DefinitionError(ValueError):
    """A parse error with its position, or a semantic error naming the object."""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        name: Optional[str] = None,
    ):
        self.line = line
        self.column = column
        self.name = name
        where = ""
        if line is not None:
            where = f"line {line}, column {column or 1}: "
        elif name is not None:
            where = f"object '{name}': "
        super().__init__(where + message)


@dataclass
class Entry:
    key: str
    labels: Tuple[str, ...]
    terms: List[Tuple[str, Tuple[str, ...]]]
    line: int
    column: int = 1


@dataclass
class Declaration:
    kind: str
    name: str
    line: int
    refs: Dict[str, str] = field(default_factory=dict)
    basis: Tuple[str, ...] = ()
    entries: List[Entry] = field(default_factory=list)
    constructor: Optional[str] = None
    args: Tuple[str, ...] = ()

    @property
    def is_block(self) -> bool:
        return self.constructor is None


def _tokens(text: str, line: int, offset: int = 0) -> List[Tuple[str, str, int]]:
    tokens, position = [], 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            raise DefinitionError(f"unexpected character '{text[position:].strip()[0]}'", line, offset + position + 1)
        kind = "num" if match.group(1) else "label" if match.group(2) else "op"
        value = match.group(match.lastindex)
        tokens.append((kind, value, offset + match.start(match.lastindex) + 1))
        position = match.end()
    return tokens


def parse_expression(text: str, line: int, offset: int = 0) -> List[Tuple[str, Tuple[str, ...]]]:
    """``term (± term)*`` as a list of ``(coefficient text, tensor labels)``."""
    tokens = _tokens(text, line, offset)
    if not tokens:
        raise DefinitionError("missing right-hand side", line, offset + 1)
    if len(tokens) == 1 and tokens[0][:2] == ("num", "0"):
        return []
    terms = []
    k = 0
    sign = ""
    while k < len(tokens):
        kind, value, column = tokens[k]
        if kind == "op" and value in "+-" and (terms or k == 0):
            sign = "-" if value == "-" else ""
            k += 1
            if k == len(tokens):
                raise DefinitionError("dangling sign", line, column)
            kind, value, column = tokens[k]
        elif terms:
            raise DefinitionError(f"expected '+' or '-' before '{value}'", line, column)
        coefficient = "1"
        if kind == "num":
            coefficient = value
            k += 1
            if k == len(tokens) or tokens[k][0] == "op":
                terms.append((sign + coefficient, ()))
                sign = ""
                continue
            kind, value, column = tokens[k]
        if kind == "op":
            raise DefinitionError(f"expected a basis label, found '{value}'", line, column)
        labels = [value]
        k += 1
        while k + 1 < len(tokens) and tokens[k][1] == "*" and tokens[k + 1][0] != "op":
            labels.append(tokens[k + 1][1])
            k += 2
        if k < len(tokens) and tokens[k][1] == "*":
            raise DefinitionError("dangling '*'", line, tokens[k][2])
        terms.append((sign + coefficient, tuple(labels)))
        sign = ""
    return terms


def _header(kind: str, words: Sequence[str], line: int) -> Declaration:
    expected = HEADERS[kind]
    if len(words) != 2 + 2 * len(expected):
        pattern = " ".join([kind, "NAME"] + [f"{w} NAME" for w in expected])
        raise DefinitionError(f"expected '{pattern}'", line, 1)
    refs = {}
    for k, keyword in enumerate(expected):
        if words[2 + 2 * k] != keyword:
            raise DefinitionError(f"expected '{keyword}'", line, 1)
        refs[keyword] = words[3 + 2 * k]
    return Declaration(kind, words[1], line, refs)


def _entry(kind: str, text: str, line: int) -> Entry:
    lhs, eq, rhs = text.partition("=")
    if not eq:
        raise DefinitionError("expected '='", line, len(text) + 1)
    words = lhs.split()
    if not words:
        raise DefinitionError("missing key", line, 1)
    key, labels = words[0], tuple(words[1:])
    arity = BLOCK_KEYS[kind].get(key)
    if arity is None:
        raise DefinitionError(f"unknown key '{key}' in a {kind} block", line, 1)
    if len(labels) != arity:
        raise DefinitionError(f"'{key}' takes {arity} basis labels", line, 1)
    return Entry(key, labels, parse_expression(rhs, line, len(lhs) + 1), line)


def parse_declarations(text: str) -> Tuple[Optional[FieldConfig], List[Declaration]]:
    field_config = None
    declarations: List[Declaration] = []
    current: Optional[Declaration] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        words = stripped.split()
        if current is not None:
            if words == ["end"]:
                declarations.append(current)
                current = None
            elif words[0] == "basis":
                if current.kind not in ("hopf", "comodule"):
                    raise DefinitionError(f"a {current.kind} block takes no basis", number, 1)
                current.basis = tuple(words[1:])
            else:
                current.entries.append(_entry(current.kind, stripped, number))
            continue
        if words[0] == "field":
            try:
                field_config = FieldConfig.parse(" ".join(words[1:]))
            except ValueError as error:
                raise DefinitionError(str(error), number, 1)
            continue
        if words[0] not in KINDS:
            raise DefinitionError(f"unknown declaration '{words[0]}'", number, 1)
        if len(words) >= 3 and words[2] == "=":
            kind, name = words[0], words[1]
            if len(words) < 4 or words[3] not in CONSTRUCTORS.get(kind, {}):
                raise DefinitionError(f"unknown {kind} constructor", number, 1)
            arity = CONSTRUCTORS[kind][words[3]]
            if len(words) != 4 + arity:
                raise DefinitionError(f"'{words[3]}' takes {arity} arguments", number, 1)
            declarations.append(
                Declaration(kind, name, number, constructor=words[3], args=tuple(words[4:]))
            )
            continue
        current = _header(words[0], words, number)
    if current is not None:
        raise DefinitionError(f"block '{current.name}' is not closed by 'end'", current.line, 1)
    return field_config, declarations


@dataclass(frozen=True, eq=False)
class NamedMap:
    name: str
    source: str
    target: str
    matrix: Matrix


class Definitions:
    """The objects of a definition file, in declaration order."""

    def __init__(self, field_: Field, declarations: List[Declaration]):
        self.field = field_
        self.declarations = declarations
        self.objects: Dict[str, object] = {}
        self.kinds: Dict[str, str] = {}
        for declaration in declarations:
            if declaration.name in self.objects:
                raise DefinitionError(
                    f"'{declaration.name}' is declared twice", declaration.line, 1
                )
            self.objects[declaration.name] = _build(self, declaration)
            self.kinds[declaration.name] = declaration.kind

    @property
    def K(self):
        return self.field.domain

    def get(self, name: str, kind: Optional[str] = None):
        if name not in self.objects:
            raise DefinitionError("is not declared", name=name)
        if kind is not None and self.kinds[name] != kind:
            raise DefinitionError(f"is a {self.kinds[name]}, not a {kind}", name=name)
        return self.objects[name]

    def names(self, kind: Optional[str] = None) -> List[str]:
        return [n for n, k in self.kinds.items() if kind is None or k == kind]

    def first(self, kind: str) -> str:
        names = self.names(kind)
        if not names:
            raise DefinitionError(f"the file declares no {kind}")
        return names[0]

    def comodule_of(self, name: str) -> Comodule:
        obj = self.get(name)
        if isinstance(obj, Comodule):
            return obj
        if isinstance(obj, (ComoduleAlgebra, AModObject, StableModComod)):
            return obj.comodule
        raise DefinitionError(f"is a {self.kinds[name]} without an underlying comodule", name=name)


def _table(
    defs: Definitions,
    decl: Declaration,
    key: str,
    domain_spaces: Sequence[VectorSpace],
    codomain_spaces: Sequence[VectorSpace],
) -> Optional[Matrix]:
    """Matrix with columns indexed by the entry labels and rows by the term tensors."""
    entries = [e for e in decl.entries if e.key == key]
    if not entries:
        return None
    rows = 1
    for space in codomain_spaces:
        rows *= space.dim
    cols = 1
    for space in domain_spaces:
        cols *= space.dim
    values: Dict[Tuple[int, int], object] = {}
    for entry in entries:
        col = _index(domain_spaces, entry.labels, entry, decl)
        for coefficient, tensor in entry.terms:
            if len(tensor) != len(codomain_spaces):
                raise DefinitionError(
                    f"'{key}' expects tensors with {len(codomain_spaces)} factors", entry.line, entry.column
                )
            row = _index(codomain_spaces, tensor, entry, decl)
            try:
                scalar = defs.field(coefficient)
            except ValueError as error:
                raise DefinitionError(str(error), entry.line, entry.column)
            value = values.get((row, col), defs.field.zero) + scalar
            values[(row, col)] = value
    return el.from_entries({k: v for k, v in values.items() if v}, (rows, cols), defs.K)


def _index(spaces: Sequence[VectorSpace], labels: Sequence[str], entry: Entry, decl: Declaration) -> int:
    index = 0
    for space, label in zip(spaces, labels):
        if label not in space.labels:
            raise DefinitionError(f"'{label}' is not a basis label of '{decl.name}'", entry.line, entry.column)
        index = index * space.dim + space.index(label)
    return index


def _ref(defs: Definitions, decl: Declaration, name: str, kind: str):
    if name not in defs.objects:
        raise DefinitionError(f"refers to undeclared '{name}'", decl.line, 1, decl.name)
    return defs.get(name, kind)


def _build(defs: Definitions, decl: Declaration):
    if decl.constructor is not None:
        return _construct(defs, decl)
    K = defs.K
    ground = VectorSpace.ground()
    if decl.kind == "hopf":
        if not decl.basis:
            raise DefinitionError("hopf block needs a basis", decl.line, 1)
        V = VectorSpace(len(decl.basis), decl.basis)
        d = V.dim

        def table(key, domain, codomain, default_shape):
            matrix = _table(defs, decl, key, domain, codomain)
            return matrix if matrix is not None else el.zeros(*default_shape, K)

        return HopfAlgebra(
            decl.name,
            defs.field,
            V,
            table("mult", [V, V], [V], (d, d * d)),
            table("unit", [ground], [V], (d, 1)),
            table("comult", [V], [V, V], (d * d, d)),
            table("counit", [V], [], (1, d)),
            table("antipode", [V], [V], (d, d)),
        )
    if decl.kind == "comodule":
        h = _ref(defs, decl, decl.refs["over"], "hopf")
        V = VectorSpace(len(decl.basis), decl.basis)
        coaction = _table(defs, decl, "coaction", [V], [V, h.space])
        if coaction is None:
            coaction = el.zeros(V.dim * h.dim, V.dim, K)
        return Comodule(decl.name, h, V, coaction)
    if decl.kind == "algebra":
        c = defs.comodule_of(decl.refs["on"])
        V = c.space
        mult = _table(defs, decl, "mult", [V, V], [V])
        unit = _table(defs, decl, "unit", [ground], [V])
        return ComoduleAlgebra(
            decl.name,
            c,
            mult if mult is not None else el.zeros(V.dim, V.dim**2, K),
            unit if unit is not None else el.zeros(V.dim, 1, K),
            _table(defs, decl, "comult", [V], [V, V]),
            _table(defs, decl, "counit", [V], []),
            _table(defs, decl, "antipode", [V], [V]),
        )
    if decl.kind in ("module", "stable"):
        a = _ref(defs, decl, decl.refs["over"], "algebra")
        c = defs.comodule_of(decl.refs["on"])
        action = _table(defs, decl, "act", [a.space, c.space], [c.space])
        if decl.kind == "module":
            if action is None:
                action = el.zeros(c.dim, a.dim * c.dim, K)
            return AModObject(decl.name, a, c, action)
        coaction = _table(defs, decl, "coact", [c.space], [a.space, c.space])
        if coaction is None:
            raise DefinitionError("stable block needs 'coact' entries", decl.line, 1)
        return StableModComod(decl.name, a, c, action, coaction)
    source = defs.comodule_of(decl.refs["from"])
    target = defs.comodule_of(decl.refs["to"])
    matrix = _table(defs, decl, "send", [source.space], [target.space])
    if matrix is None:
        matrix = el.zeros(target.dim, source.dim, K)
    return NamedMap(decl.name, decl.refs["from"], decl.refs["to"], matrix)


def _construct(defs: Definitions, decl: Declaration):
    c, args = decl.constructor, decl.args
    if decl.kind == "hopf":
        return dual_hopf(_ref(defs, decl, args[0], "hopf"), name=decl.name)
    if decl.kind == "comodule":
        h = _ref(defs, decl, args[0], "hopf")
        return regular(h, name=decl.name) if c == "regular" else trivial(h, name=decl.name)
    if decl.kind == "algebra":
        if c == "plain":
            b = _ref(defs, decl, args[0], "hopf")
            return plain_bialgebra(b, _ref(defs, decl, args[1], "hopf"), name=decl.name)
        h = _ref(defs, decl, args[0], "hopf")
        return regular_algebra(h, decl.name) if c == "regular" else trivial_algebra(h, decl.name)
    if decl.kind == "module":
        a = _ref(defs, decl, args[0], "algebra")
        if c == "regular":
            return regular_amodule(a, decl.name)
        return free_amodule(a, defs.comodule_of(args[1]), name=decl.name)
    a = _ref(defs, decl, args[0], "algebra")
    build = {"trivial": trivial_pair, "regular": regular_pair, "coefficients": coefficients}[c]
    return build(a, name=decl.name)


def parse(text: str, field_override: Optional[str] = None) -> Definitions:
    field_config, declarations = parse_declarations(text)
    if field_override:
        field_config = FieldConfig.parse(field_override)
    field_ = Field.from_config(field_config or FieldConfig())
    return Definitions(field_, declarations)


def load(path: str, field_override: Optional[str] = None) -> Definitions:
    with open(path, "r") as fin:
        return parse(fin.read(), field_override)


def _format_terms(defs: Definitions, decl: Declaration, entry: Entry, spaces) -> str:
    """Canonical right-hand side: merged terms in basis order, ``COEF TENSOR`` joined by `` + ``."""
    merged: Dict[Tuple[str, ...], object] = {}
    for coefficient, tensor in entry.terms:
        merged[tensor] = merged.get(tensor, defs.field.zero) + defs.field(coefficient)
    if not spaces:
        return defs.field.format(merged.get((), defs.field.zero))

    def order(tensor):
        return _index(spaces, tensor, entry, decl)

    parts = [
        f"{defs.field.format(value)} {'*'.join(tensor)}"
        for tensor, value in sorted(merged.items(), key=lambda kv: order(kv[0]))
        if value
    ]
    return " + ".join(parts) if parts else "0"


def _codomain(defs: Definitions, decl: Declaration, key: str) -> List[VectorSpace]:
    obj = defs.objects[decl.name]
    if decl.kind in ("hopf", "algebra"):
        V = obj.space
        return {"unit": [V], "mult": [V], "comult": [V, V], "counit": [], "antipode": [V]}[key]
    if decl.kind == "comodule":
        return [obj.space, obj.hopf.space]
    if decl.kind in ("module", "stable"):
        if key == "act":
            return [obj.comodule.space]
        return [obj.algebra.space, obj.comodule.space]
    return [defs.comodule_of(decl.refs["to"]).space]


def serialize(defs: Definitions) -> str:
    """Canonical text of a parsed file; comments and blank lines are dropped."""
    lines = [f"field {defs.field!r}"]
    for decl in defs.declarations:
        if not decl.is_block:
            lines.append(" ".join([decl.kind, decl.name, "=", decl.constructor, *decl.args]))
            continue
        header = [decl.kind, decl.name]
        for keyword in HEADERS[decl.kind]:
            header += [keyword, decl.refs[keyword]]
        lines.append(" ".join(header))
        if decl.basis:
            lines.append("basis " + " ".join(decl.basis))
        for entry in decl.entries:
            lhs = " ".join([entry.key, *entry.labels])
            rhs = _format_terms(defs, decl, entry, _codomain(defs, decl, entry.key))
            lines.append(f"{lhs} = {rhs}")
        lines.append("end")
    return "\n".join(lines) + "\n"
