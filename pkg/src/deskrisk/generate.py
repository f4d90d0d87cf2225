"""Seeded random instance generator for benchmarks and property tests."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .instance import Instance


@dataclass(frozen=True)
class GeneratorSpec:
    """Shape of a random instance: sizes, authors-per-paper range, p range."""

    n: int
    m: int
    authors_min: int
    authors_max: int
    p_low: float = 0.0
    p_high: float = 1.0
    seed: int = 0

    def check(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError(f"need n >= 1 and m >= 1, got n={self.n}, m={self.m}")
        if not 1 <= self.authors_min <= self.authors_max <= self.m:
            raise ValueError(
                "need 1 <= authors_min <= authors_max <= m, got "
                f"[{self.authors_min}, {self.authors_max}] with m={self.m}"
            )
        if not 0.0 <= self.p_low <= self.p_high <= 1.0:
            raise ValueError(
                f"need 0 <= p_low <= p_high <= 1, got [{self.p_low}, {self.p_high}]"
            )


def generate(spec: GeneratorSpec) -> Instance:
    """Draw an instance; the same spec and seed always give the same instance.

    Each paper samples an author-count uniformly from the configured range,
    then that many distinct authors uniformly; probabilities are uniform on
    ``[p_low, p_high]``.
    """
    spec.check()
    rng = random.Random(spec.seed)
    rows = []
    for _ in range(spec.n):
        size = rng.randint(spec.authors_min, spec.authors_max)
        rows.append(sorted(rng.sample(range(1, spec.m + 1), size)))
    p = [rng.uniform(spec.p_low, spec.p_high) for _ in range(spec.m)]
    return Instance.from_rows(rows, p)
