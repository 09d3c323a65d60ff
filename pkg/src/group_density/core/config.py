from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # App Config
    DEBUG: bool = Field(default=False)
    LOG_LEVEL: str = Field(default="WARNING", description="Logging Level (DEBUG, INFO, WARNING, ERROR)")
    EVIDENCE_LOG_FILE: str | None = Field(
        default=None, description="File receiving semi-decision evidence records (disabled when unset)"
    )

    # Fixtures
    FIXTURE_DIR: str | None = Field(
        default=None, description="Directory of problem-spec fixtures; defaults to the bundled fixtures"
    )

    # Groups
    GROUP_ORDER_CAP: int = Field(default=10_000, description="Largest group order accepted by build_group")
    ASSOCIATIVITY_EXHAUSTIVE_MAX: int = Field(
        default=64, description="Largest order for which associativity is checked on every triple"
    )
    ASSOCIATIVITY_SAMPLES: int = Field(default=20_000, description="Sampled triples for larger groups")
    SUBGROUP_ENUMERATION_MAX_ORDER: int = Field(default=24, description="Largest order for subgroup enumeration")

    # Shifts
    BLOCK_LENGTH_CAP: int = Field(default=12, description="Largest block length accepted by higher_block")
    RETURN_WINDOW_CAP: int = Field(default=65_536, description="Return-word scan window cap (letters)")

    # Numerics
    POWER_ITERATION_MAX_STEPS: int = Field(default=1_000_000, description="Power iteration step budget")
    POWER_ITERATION_TOLERANCE: float = Field(default=1e-13, description="Residual bound ||Mv - lv||")
    TOLERANCE: float = Field(default=1e-9, description="Tolerance for floating comparisons in checks")

    # Semi-decisions
    MINIMALITY_MIN_LENGTH: int = Field(default=4, description="First prefix length of the return-subgroup sweep")
    MINIMALITY_MAX_LENGTH: int = Field(default=64, description="Last prefix length of the return-subgroup sweep")
    COBOUNDING_MAX_LENGTH: int = Field(default=8, description="Cylinder-length sweep bound for cobounding maps")
    BIFIX_LENGTH_CAP: int = Field(default=64, description="Longest word considered while enumerating U")

    # Density
    SLICE_EXACT_MAX_LENGTH: int = Field(
        default=160, description="Slices of substitution shifts are exact up to this length"
    )
    ERGODIC_SAMPLE_LENGTH: int = Field(
        default=200_000, description="Fixed-point prefix length used to transport long slices"
    )
    CESARO_HORIZON: int = Field(default=300, description="Default Cesaro horizon")

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore", case_sensitive=True)


settings = Settings()
