import logging
import os
from functools import lru_cache

import pandas as pd
import prettytable

# warning if logger is not initialized
logger = logging.getLogger("hopfcyc")


@lru_cache
def warn_once(msg: str, **kwargs):
    logger.warning(msg, **kwargs)


@lru_cache
def debug_once(msg: str, **kwargs):
    logger.debug(msg, **kwargs)


def setup_logging(log_dir: str = None, level: int = logging.INFO):
    logging.basicConfig(
        format="%(asctime)s %(levelname)s --> %(message)s",
        datefmt="%m/%d/%Y %H:%M:%S",
        level=level,
    )
    logger.setLevel(level)

    if log_dir:
        log_file_path = os.path.join(log_dir, "log.txt")
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)

        handler_exists = any(
            isinstance(handler, logging.FileHandler)
            and handler.baseFilename == os.path.abspath(log_file_path)
            for handler in logger.handlers
        )

        if not handler_exists:
            logger.addHandler(logging.FileHandler(log_file_path))
            logger.info("Logging computations to %s", log_file_path)


def _missing(value) -> bool:
    return value is None or (isinstance(value, float) and value != value)


def _cell(value):
    # numpy scalars do not serialize to JSON
    value = value.item() if hasattr(value, "item") else value
    return None if _missing(value) else value


class TableLogger:
    """Collects rows of a dimension table and renders them as plain text.

    Rows may introduce new columns; missing cells render as empty strings so
    that the same table prints identically in logs and in reports.
    """

    def __init__(self, title: str = None):
        self.title = title
        self.df = pd.DataFrame()

    def log(self, row: dict):
        if self.df is None or len(self.df) == 0:
            self.df = pd.DataFrame(columns=list(row.keys()), dtype=object)
        else:
            # Add new columns to the DataFrame if they don't exist
            for column in row.keys():
                if column not in self.df.columns:
                    self.df[column] = None
        self.df.loc[len(self.df.index)] = [row.get(c) for c in self.df.columns]

    def rows(self):
        return [
            {c: _cell(v) for c, v in row.items()}
            for row in self.df.to_dict(orient="records")
        ]

    def render(self) -> str:
        table = prettytable.PrettyTable()
        table.field_names = [str(c) for c in self.df.columns]
        table.align = "r"
        for row in self.rows():
            table.add_row(["" if v is None else str(v) for v in row.values()])
        if self.title:
            table.title = self.title
        return table.get_string()
