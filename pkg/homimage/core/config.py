from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator


class Settings(BaseSettings):
    # Pydantic v2 settings config; every field can be overridden as HOMIMAGE_<FIELD>
    model_config = SettingsConfigDict(
        env_file=".env", env_prefix="HOMIMAGE_", case_sensitive=False, extra="ignore"
    )

    # App Configuration
    app_name: str = "homimage"
    debug: bool = False
    log_level: str = "INFO"

    # Enumeration bounds (vertex counts)
    max_graph_vertices: int = 7
    max_digraph_vertices: int = 5
    max_tournament_vertices: int = 7

    # Engine bounds
    oracle_max_vertices: int = 7  # brute-force epimorphism oracle
    images_max_vertices: int = 7
    # Standard images add edges to quotients; the closure can reach every class of the kind
    closure_max_graph_vertices: int = 7
    closure_max_digraph_vertices: int = 5
    closure_max_plain_digraph_vertices: int = 4
    engine_max_vertices: int = 12  # antichain member size for pairwise checks

    # Antichain search
    antichain_exact_limit: int = 30
    witness_max_skips: int = 4

    # Randomized checks
    dominance_samples: int = 100
    default_seed: int = 0

    # Process pool size for enumeration; 1 keeps everything in-process
    workers: int = 1

    @field_validator('debug', mode='before')
    @classmethod
    def parse_bool(cls, v):
        if isinstance(v, bool):
            return v
        if isinstance(v, str):
            return v.lower() in ('true', '1', 'yes', 'on')
        return bool(v)

    @field_validator('log_level', mode='before')
    @classmethod
    def normalize_log_level(cls, v):
        return str(v).upper()


# Create settings instance
settings = Settings()
