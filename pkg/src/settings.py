from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="DENDREX_")

    log_level: str = "INFO"
    max_edges: int = 8
    zero_sequence_length: int = 3
    simplex_tolerance: float = 1e-12
    seed: int = 2024
    sample_points: int = 100
    version: int = 1
    sub_version: int = 0

settings = Settings()
