"""
Configuration module for localmodels.
Loads the output-directory override from a .env file and defines RunConfig.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Find the .env file (look in project root)
env_path = Path(__file__).parent.parent / '.env'

# Load environment variables from .env file
load_dotenv(dotenv_path=env_path)

DEFAULT_PRIMES = (3, 5, 7, 11)
DEFAULT_MAX_PAIRS = 20000
DEFAULT_MAX_DEGREE = 24
DEFAULT_SEED = 42


def get_output_dir():
    """
    Get the directory where CLI results are written.

    Returns:
    --------
    Path
        Value of LOCALMODELS_OUTPUT_DIR, or ./output when unset
    """
    return Path(os.getenv('LOCALMODELS_OUTPUT_DIR', 'output'))


@dataclass(frozen=True)
class RunConfig:
    """
    Settings shared by every CLI command and verification suite.

    Attributes:
    -----------
    prime : int or None
        Characteristic of the coefficient field; None means the rationals
    max_pairs : int
        Critical-pair budget for one Buchberger run
    max_degree : int
        Sugar-degree budget for one Buchberger run
    u_precision : int or None
        u-adic precision for relative positions; None means 2n + 2
    output_dir : Path
        Where JSON and SVG files go
    seed : int
        Seed for numpy.random.default_rng in randomised checks
    """
    prime: Optional[int] = 3
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_degree: int = DEFAULT_MAX_DEGREE
    u_precision: Optional[int] = None
    output_dir: Path = field(default_factory=get_output_dir)
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.prime is not None and self.prime not in DEFAULT_PRIMES:
            raise ValueError(f"prime must be one of {DEFAULT_PRIMES} or None, got {self.prime}")
        if self.max_pairs <= 0 or self.max_degree <= 0:
            raise ValueError(f"budgets must be positive, got pairs={self.max_pairs} degree={self.max_degree}")
        if self.u_precision is not None and self.u_precision <= 0:
            raise ValueError(f"u_precision must be positive, got {self.u_precision}")

    def budget(self):
        """Buchberger budget for exactalg."""
        from src.exactalg import Budget
        return Budget(max_pairs=self.max_pairs, max_degree=self.max_degree)

    def field(self):
        """Coefficient field for chart ideals."""
        from src.exactalg import CoefficientField
        return CoefficientField(self.prime)

    def precision_for(self, n):
        """u-adic precision used for rank n lattice work."""
        return self.u_precision if self.u_precision is not None else 2 * n + 2


if __name__ == "__main__":
    print("Configuration Test")
    print("=" * 60)
    config = RunConfig()
    print(f"Output directory: {config.output_dir}")
    print(f"Prime: {config.prime}")
    print(f"Budget: pairs={config.max_pairs}, degree={config.max_degree}")
    print(f"Seed: {config.seed}")
    print("\n" + "=" * 60)
