import json
from dataclasses import dataclass

import pytest

from hopfcyc.arguments import Args, EngineArgs


@pytest.fixture
def SimpleArgs():
    @dataclass
    class SimpleConfig(Args):
        algebra: str = "kc2"
        max_degree: int = 3
        field: str = None

    return SimpleConfig


def test_config_dict_like(SimpleArgs):
    config = SimpleArgs(algebra="sweedler", max_degree=5)
    reconstructed = SimpleArgs.fromdict(json.loads(json.dumps(config.asdict())))
    assert reconstructed.algebra == "sweedler"
    assert reconstructed.max_degree == 5
    assert reconstructed.field is None
    assert reconstructed == config


def test_config_was_override_from_kwargs(SimpleArgs):
    config = SimpleArgs(max_degree=6)
    assert config.was_overridden("max_degree")
    assert not config.was_overridden("algebra")
    assert config.was_default("field")


def test_config_was_override_from_file(tmp_path):
    config_file = tmp_path / "config.json"
    config_file.write_text(json.dumps({"max_degree": 2, "jobs": 2}))
    config = EngineArgs.from_json(str(config_file))
    assert config.max_degree == 2
    assert config.jobs == 2
    assert config.was_overridden("jobs")
    assert config.was_default("bar_truncation")


def test_file_values_yield_to_overrides(tmp_path):
    config_file = tmp_path / "config.json"
    config_file.write_text(json.dumps({"max_degree": 2, "field": "rational"}))
    config = EngineArgs.from_json(str(config_file), max_degree="5", field="prime:3")
    assert config.max_degree == 5
    assert config.field == "prime:3"


def test_overrides_are_literal_evaluated():
    config = EngineArgs.from_overrides({"max_degree": "3", "verbose": "True"})
    assert config.max_degree == 3
    assert config.verbose is True
    with pytest.raises(ValueError):
        EngineArgs.from_overrides({"learning_rate": "0.1"})


@pytest.mark.parametrize(
    "kwargs", [{"max_degree": -1}, {"bar_truncation": -2}, {"jobs": 0}]
)
def test_invalid_engine_args(kwargs):
    with pytest.raises(ValueError):
        EngineArgs(**kwargs)


def test_save_config(tmp_path):
    config = EngineArgs(max_degree=3, seed=7)
    config.save_config(str(tmp_path / "run"))
    loaded = EngineArgs.from_json(str(tmp_path / "run" / "config.json"))
    assert loaded == config
