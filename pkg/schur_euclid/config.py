from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Logging
    log_level: str = "WARNING"
    log_format: str = "console"  # console | json

    # Command line
    output_format: str = "json"  # json | text
    max_order: int = 64

    # Verification harness
    verify_seed: int = 0
    verify_trials: int = 50
    wronskian_trials: int = 20
    bazin_trials: int = 20
    cfrac_trials: int = 20
    lowk_trials: int = 20
    sign_trials: int = 100
    parallel_workers: int = 4
    max_redraws: int = 200

    # Random letters are p/q with 0 < |p| <= numerator bound, 0 < q <= denominator bound
    letter_numerator_bound: int = 9
    letter_denominator_bound: int = 9

    class Config:
        env_file = ".env"
        env_prefix = "SCHUR_EUCLID_"


settings = Settings()
