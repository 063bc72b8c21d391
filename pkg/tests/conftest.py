"""Shared fixtures: the acceptance corpus and cached discharging runs."""

from __future__ import annotations

import pytest

from oneplane.discharging import apply_discharging
from oneplane.generators import GeneratorParams, catalog, catalog_names, random_oneplane

SEEDED_COUNT = 200


def corpus_params(i: int) -> GeneratorParams:
    """Deterministic parameter grid: sizes sweep 4..60, densities cycle
    through the feasible pool for each size (full fills need the
    radial construction, available when size = 2 mod 3)."""
    size = 4 + (i % 57)
    pool = [0.0, 0.25, 0.5, 0.75]
    if size in (5, 6):
        pool = [0.0, 0.25, 0.5]
    elif size >= 8 and size % 3 == 2:
        pool.append(1.0)
    return GeneratorParams(seed=1000 + i, size=size, crossing_density=pool[i % len(pool)])


@pytest.fixture(scope="session")
def corpus():
    """(name, drawing) for every catalog entry and seeded instance."""
    items = [(f"catalog:{name}", catalog(name)) for name in catalog_names()]
    for i in range(SEEDED_COUNT):
        p = corpus_params(i)
        items.append(
            (f"gen:seed={p.seed},size={p.size},density={p.crossing_density}", random_oneplane(p))
        )
    return items


@pytest.fixture(scope="session")
def corpus_runs(corpus):
    """Corpus with one cached discharging run per instance."""
    out = []
    for name, g in corpus:
        final, transfers = apply_discharging(g)
        out.append((name, g, final, transfers))
    return out
