"""
Runtime configuration.

Values come from CLI flags first, then ``HTUTTE_*`` environment variables,
then a ``.env`` file in the working directory, then the defaults below.
"""
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..constants import (
    DEFAULT_CORPUS_SIZE,
    DEFAULT_GREENE_POINTS,
    DEFAULT_LEMMA_TRIPLES,
    DEFAULT_MAX_N,
    DEFAULT_MAX_WORDS,
    DEFAULT_ORACLE_MATROIDS,
    DEFAULT_SEED,
    ENV_PREFIX,
)
from ..enums.system import LogLevel, OutputFormat


class Settings(BaseSettings):
    """Settings shared by the library and the CLI."""

    model_config = SettingsConfigDict(
        env_prefix=ENV_PREFIX,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    max_n: int = Field(default=DEFAULT_MAX_N, gt=0, description="Largest ground set enumerated over 2^n subsets")
    max_words: int = Field(default=DEFAULT_MAX_WORDS, gt=0, description="Largest q^k enumerated codeword by codeword")
    seed: int = Field(default=DEFAULT_SEED, ge=0, description="Seed for the random corpus")
    output_format: OutputFormat = Field(default=OutputFormat.HUMAN)
    log_level: LogLevel = Field(default=LogLevel.WARNING)
    log_json: bool = Field(default=False, description="Emit logs as JSON records")
    corpus_size: int = Field(default=DEFAULT_CORPUS_SIZE, gt=0)
    lemma_triples: int = Field(default=DEFAULT_LEMMA_TRIPLES, gt=0)
    greene_points: int = Field(default=DEFAULT_GREENE_POINTS, gt=0)
    oracle_matroids: int = Field(default=DEFAULT_ORACLE_MATROIDS, gt=0)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()


def resolve_max_n(max_n: int | None) -> int:
    return get_settings().max_n if max_n is None else max_n


def resolve_max_words(max_words: int | None) -> int:
    return get_settings().max_words if max_words is None else max_words
