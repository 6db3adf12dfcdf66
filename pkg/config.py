import logging
from pydantic_settings import BaseSettings
from pydantic import field_validator

from utils.constants import DEFAULT_LINEARIZATION_LIMIT


class Settings(BaseSettings):
    # Core
    log_level: str = "INFO"

    # Analysis
    linearization_limit: int = DEFAULT_LINEARIZATION_LIMIT

    # Parallel runtime
    default_workers: int = 4
    default_seed: int = 0

    # Fuzzing
    fuzz_parallel_seeds: int = 3
    fuzz_max_entities: int = 6
    fuzz_max_labels: int = 3
    fuzz_max_nodes: int = 4

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        return v.upper()

    @field_validator('linearization_limit', mode='before')
    @classmethod
    def validate_linearization_limit(cls, v) -> int:
        if v is None or v == "":
            return DEFAULT_LINEARIZATION_LIMIT
        try:
            n = int(v)
        except (TypeError, ValueError):
            logging.getLogger(__name__).warning(f"Invalid LINEARIZATION_LIMIT '{v}', using default {DEFAULT_LINEARIZATION_LIMIT}")
            return DEFAULT_LINEARIZATION_LIMIT
        if n < 1:
            logging.getLogger(__name__).warning(f"LINEARIZATION_LIMIT must be >= 1, got {n}; using default {DEFAULT_LINEARIZATION_LIMIT}")
            return DEFAULT_LINEARIZATION_LIMIT
        return n

    @field_validator('default_workers', 'fuzz_parallel_seeds', 'fuzz_max_entities', 'fuzz_max_labels', 'fuzz_max_nodes', mode='before')
    @classmethod
    def validate_positive(cls, v, info) -> int:
        fallback = cls.model_fields[info.field_name].default
        if v is None or v == "":
            return fallback
        try:
            n = int(v)
        except (TypeError, ValueError):
            logging.getLogger(__name__).warning(f"Invalid {info.field_name.upper()} '{v}', using default {fallback}")
            return fallback
        if n < 1:
            logging.getLogger(__name__).warning(f"{info.field_name.upper()} must be >= 1, got {n}; using default {fallback}")
            return fallback
        return n

    @field_validator('default_seed', mode='before')
    @classmethod
    def validate_default_seed(cls, v) -> int:
        if v is None or v == "":
            return 0
        try:
            return int(v)
        except (TypeError, ValueError):
            logging.getLogger(__name__).warning(f"Invalid DEFAULT_SEED '{v}', using 0")
            return 0

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }


# Create the settings instance - this will load from .env file
settings = Settings()

log = logging.getLogger(__name__)
log.info(f"Cfg: Log={settings.log_level}, LinLimit={settings.linearization_limit}, Workers={settings.default_workers}, Seed={settings.default_seed}")
log.info(f" Fuzz: seeds={settings.fuzz_parallel_seeds}, ents<={settings.fuzz_max_entities}, labels<={settings.fuzz_max_labels}, nodes<={settings.fuzz_max_nodes}")
