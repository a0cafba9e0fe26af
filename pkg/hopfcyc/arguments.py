import ast
import json
import os
from dataclasses import dataclass, fields
from typing import Dict, Optional

from hopfcyc.logging import logger
from hopfcyc.serializable import Serializable


@dataclass
class Args(Serializable):
    @property
    def updated_kwargs(self):
        return {
            k.name: getattr(self, k.name)
            for k in fields(self)
            if getattr(self, k.name) != k.default
        }

    def was_overridden(self, key):
        return key in self.updated_kwargs

    def was_default(self, key):
        return key not in self.updated_kwargs

    @classmethod
    def process_kwargs(cls, kwargs, eval=True, raise_error=True, silent=False):
        overwrites_log = []

        for k, v in kwargs.items():
            if eval and isinstance(v, str):
                try:
                    v = ast.literal_eval(v)
                except (ValueError, SyntaxError):
                    pass

            if not hasattr(cls, k) and raise_error:
                raise ValueError(f"{k} is not in the config")

            if not silent:
                overwrites_log.append(f"Overwriting {k} to {v}")

            kwargs[k] = v
        return overwrites_log

    def to_json(self):
        return json.dumps(self.asdict(), indent=4, sort_keys=False)

    @classmethod
    def from_json(cls, config_file, raise_error=True, **overrides):
        """Loads the config from a JSON file, then applies ``key=value`` overrides."""
        with open(config_file, "r") as fin:
            kwargs = json.load(fin)

        overwrite_logs = cls.process_kwargs(
            kwargs, eval=False, raise_error=raise_error, silent=True
        )
        if overrides:
            overwrite_logs += cls.process_kwargs(overrides, raise_error=raise_error)
            kwargs.update(overrides)

        for log in overwrite_logs:
            logger.warning(log)

        return cls(**kwargs)

    @classmethod
    def from_overrides(cls, overrides: Dict[str, str], raise_error=True):
        overrides = dict(overrides)
        for log in cls.process_kwargs(overrides, raise_error=raise_error):
            logger.warning(log)
        return cls(**overrides)

    def save_config(self, output_dir):
        os.makedirs(output_dir, exist_ok=True)

        with open(os.path.join(output_dir, "config.json"), "w+") as fout:
            fout.write(self.to_json())
            fout.write("\n")


@dataclass
class EngineArgs(Args):
    """Engine-wide knobs shared by the command line and the library entry points."""

    # highest degree built for T_n(A, M) and cyclic modules
    max_degree: int = 4
    # highest bar-resolution stage C_n
    bar_truncation: int = 3
    jobs: int = 1
    verbose: bool = False
    seed: int = 0
    # overrides the definition file's field, e.g. "rational" or "prime:3"
    field: Optional[str] = None

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError(f"max_degree must be non-negative, got {self.max_degree}")
        if self.bar_truncation < 0:
            raise ValueError(
                f"bar_truncation must be non-negative, got {self.bar_truncation}"
            )
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")
