import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.exactlin import Field, Matrix
from hopfcyc.logging import TableLogger
from hopfcyc.serializable import Serializable

HEADER = "hopfcyc-report"
MACHINE_BEGIN = "--- machine ---"
MACHINE_END = "--- end ---"


def format_matrix(M: Matrix, field_: Field) -> List[List[str]]:
    rows, cols = M.shape
    return [[field_.format(el.entry(M, i, j)) for j in range(cols)] for i in range(rows)]


def format_vector(v: Matrix, labels, field_: Field) -> str:
    """``COEF LABEL`` terms of a column vector, ``0`` when empty."""
    terms = [
        f"{field_.format(value)} {labels[i]}"
        for i, value in sorted(el.columns(v)[0].items())
        if value
    ]
    return " + ".join(terms) if terms else "0"


@dataclass
class Report(Serializable):
    """Outcome of one command: verdicts, scalar values, dimension tables and witnesses.

    The rendered text is deterministic; the trailing machine block holds the same
    content as sorted JSON and is what ``Report.parse`` reads back.
    """

    command: List[str] = field(default_factory=list)
    verdicts: Dict[str, bool] = field(default_factory=dict)
    values: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, List[Dict[str, Any]]] = field(default_factory=dict)
    witnesses: Dict[str, List[List[str]]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    version: int = 1

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def verdict(self, name: str, value: bool) -> "Report":
        self.verdicts[name] = bool(value)
        return self

    def value(self, name: str, value: Any) -> "Report":
        self.values[name] = value
        return self

    def table(self, title: str, table: TableLogger) -> "Report":
        self.tables[title] = table.rows()
        return self

    def witness(self, name: str, M: Matrix, field_: Field) -> "Report":
        self.witnesses[name] = format_matrix(M, field_)
        return self

    def note(self, text: str) -> "Report":
        self.notes.append(text)
        return self

    def to_json(self) -> str:
        return json.dumps(self.asdict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.fromdict(json.loads(text))

    def render(self, verbose: bool = False) -> str:
        lines = [f"{HEADER} {self.version}", "command: " + " ".join(self.command)]
        for name, value in self.verdicts.items():
            lines.append(f"verdict {name}: {'true' if value else 'false'}")
        for name, value in self.values.items():
            lines.append(f"{name}: {_plain(value)}")
        for title, rows in self.tables.items():
            table = TableLogger(title)
            for row in rows:
                table.log(row)
            lines.append(table.render())
        if verbose:
            for name, rows in self.witnesses.items():
                lines.append(f"witness {name} ({len(rows)}x{len(rows[0]) if rows else 0}):")
                lines.extend("  [" + " ".join(row) + "]" for row in rows)
        for text in self.notes:
            lines.append(f"note: {text}")
        lines += [MACHINE_BEGIN, self.to_json(), MACHINE_END]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Report":
        """Reads a report back from its machine block."""
        lines = text.splitlines()
        if not lines or not lines[0].startswith(HEADER + " "):
            raise ValueError("Not a hopfcyc report.")
        try:
            begin, end = lines.index(MACHINE_BEGIN), lines.index(MACHINE_END)
        except ValueError:
            raise ValueError("Report has no machine block.")
        return cls.from_json("\n".join(lines[begin + 1 : end]))


def _plain(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(_plain(v) for v in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
