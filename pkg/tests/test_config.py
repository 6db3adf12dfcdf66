import pytest

from config import Settings
from utils.constants import DEFAULT_LINEARIZATION_LIMIT


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
	for name in ("LOG_LEVEL", "LINEARIZATION_LIMIT", "DEFAULT_WORKERS", "DEFAULT_SEED", "FUZZ_MAX_NODES"):
		monkeypatch.delenv(name, raising=False)


def test_defaults():
	s = Settings(_env_file=None)
	assert s.linearization_limit == DEFAULT_LINEARIZATION_LIMIT == 10080
	assert s.default_workers == 4 and s.default_seed == 0
	assert s.log_level == "INFO"


def test_log_level_upper_cased():
	assert Settings(_env_file=None, log_level="debug").log_level == "DEBUG"


@pytest.mark.parametrize("raw", ["abc", "0", "-3", ""])
def test_bad_linearization_limit_falls_back(raw):
	assert Settings(_env_file=None, linearization_limit=raw).linearization_limit == DEFAULT_LINEARIZATION_LIMIT


@pytest.mark.parametrize("raw", ["x", "0", None])
def test_bad_positive_fields_fall_back(raw):
	s = Settings(_env_file=None, default_workers=raw, fuzz_max_nodes=raw)
	assert s.default_workers == 4 and s.fuzz_max_nodes == 4


def test_bad_seed_falls_back():
	assert Settings(_env_file=None, default_seed="seven").default_seed == 0


def test_environment_overrides(monkeypatch):
	monkeypatch.setenv("LINEARIZATION_LIMIT", "500")
	monkeypatch.setenv("DEFAULT_WORKERS", "2")
	s = Settings(_env_file=None)
	assert s.linearization_limit == 500 and s.default_workers == 2


def test_invalid_environment_value_is_ignored(monkeypatch):
	monkeypatch.setenv("DEFAULT_WORKERS", "-1")
	assert Settings(_env_file=None).default_workers == 4
