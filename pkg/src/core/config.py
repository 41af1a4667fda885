from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field


class Settings(BaseSettings):
    # Execution
    ADDBASIS_WORKERS: int = Field(
        1, ge=1, description="Worker processes for audits and searches (1 = in-process)"
    )
    ADDBASIS_SEED: int = Field(
        20240607, description="Seed for randomized audits and witness searches"
    )

    # Logging
    ADDBASIS_LOG_LEVEL: str = Field("WARNING", description="Root log level")
    ADDBASIS_LOG_FILE: Optional[str] = Field(
        None, description="Optional JSON-lines log file"
    )

    # Kernel budgets
    ADDBASIS_MAX_PERIOD: int = Field(
        4096, ge=1, description="Largest period a kernel may materialize"
    )
    ADDBASIS_TAIL_SAMPLE: int = Field(
        4, ge=0, description="Tail elements sampled into removal pools"
    )

    # Searches and audits
    ADDBASIS_SEARCH_CUTOFF: int = Field(
        20000,
        ge=1,
        description="Candidates enumerated exhaustively before random sampling",
    )
    ADDBASIS_RANDOM_INSTANCES: int = Field(
        200, ge=1, description="Random instances per density-lemma audit"
    )
    ADDBASIS_FPT_SAMPLES: int = Field(
        500, ge=0, description="Random reconstructions checked by fpt-verify"
    )

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=True
    )


settings = Settings()
