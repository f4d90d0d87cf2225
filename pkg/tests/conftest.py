import random
from pathlib import Path

from deskrisk import Instance

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def random_instance(
    rng: random.Random,
    n_max: int = 6,
    m_max: int = 6,
    p_low: float = 0.0,
    p_high: float = 1.0,
) -> Instance:
    """Small random instance where every paper has at least one author."""
    n = rng.randint(1, n_max)
    m = rng.randint(1, m_max)
    rows = [sorted(rng.sample(range(1, m + 1), rng.randint(1, m))) for _ in range(n)]
    p = [rng.uniform(p_low, p_high) for _ in range(m)]
    return Instance.from_rows(rows, p)
