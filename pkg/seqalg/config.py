"""
Runtime settings.

Read once from the environment (and an optional .env file) at import time.
They tune diagnostics only; results depend on the command line alone.

  SEQALG_LOG_LEVEL         logging level for the CLI             (WARNING)
  SEQALG_RECURSION_LIMIT   interpreter recursion limit for demand (20000)
"""

import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

load_dotenv(verbose=False)


class Settings(BaseModel):
    log_level: str = Field(default="WARNING")
    recursion_limit: int = Field(default=20_000, ge=1_000)

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        return value.strip().upper()


def load_settings() -> Settings:
    return Settings(
        log_level=os.getenv("SEQALG_LOG_LEVEL", "WARNING"),
        recursion_limit=int(os.getenv("SEQALG_RECURSION_LIMIT", "20000")),
    )


settings = load_settings()
