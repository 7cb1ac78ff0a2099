"""Application settings and configuration."""
from pathlib import Path
from typing import List, Optional

from pydantic_settings import BaseSettings


PROJECT_ROOT = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    """Engine configuration."""
    
    # Seeds for generic point instantiation (ANTICANON_SEED="4,5,6" overrides)
    seed: Optional[str] = None
    default_seeds: List[int] = [1, 2, 3]
    max_retries: int = 4
    
    # Oracle evaluation
    samples: int = 200
    
    # Linear systems
    peel_round_limit: int = 16
    
    # Runs
    workers: int = 1
    output_format: str = "markdown"
    golden_path: Path = PROJECT_ROOT / "data" / "golden_expectations.csv"
    
    # Application
    log_level: str = "INFO"
    
    class Config:
        env_prefix = "ANTICANON_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False
    
    def seeds(self) -> List[int]:
        """Effective seed list: the environment override wins over the defaults."""
        if self.seed:
            return parse_seeds(self.seed)
        return list(self.default_seeds)


def parse_seeds(text: str) -> List[int]:
    """Parse a comma separated seed list such as ``"1,2,3"``."""
    seeds = [int(part) for part in text.split(",") if part.strip()]
    if not seeds:
        raise ValueError(f"No seeds in {text!r}")
    return seeds


settings = Settings()
