from __future__ import annotations

from pathlib import Path

import pytest

from degbal.formats import parse_graph6
from degbal.graphs import Graph

FIXTURES = Path(__file__).parent / "fixtures"


def load_corpus_file(name: str) -> list[tuple[str, Graph]]:
    path = FIXTURES / name
    return [
        (f"{path.stem}:{i}", parse_graph6(line))
        for i, line in enumerate(path.read_text().splitlines())
        if line.strip()
    ]


def corpus_lines() -> list[str]:
    lines: list[str] = []
    for path in sorted(FIXTURES.glob("*.g6")):
        lines.extend(ln for ln in path.read_text().splitlines() if ln.strip())
    return lines


@pytest.fixture(scope="session")
def catalog_graphs() -> list[tuple[str, Graph]]:
    """Complete catalogs of connected cubic graphs, n in {4, 6, 8, 10}."""
    out = []
    for n in (4, 6, 8, 10):
        out.extend(load_corpus_file(f"connected_cubic_{n:02d}.g6"))
    return out


@pytest.fixture(scope="session")
def connected_corpus(catalog_graphs) -> list[tuple[str, Graph]]:
    """Connected corpus graphs with n <= 12 (catalogs plus random 12s)."""
    return catalog_graphs + load_corpus_file("random_cubic_12.g6")


@pytest.fixture(scope="session")
def full_corpus(connected_corpus) -> list[tuple[str, Graph]]:
    """Everything with n <= 12, including the disconnected unions."""
    return connected_corpus + load_corpus_file("unions_n_le_12.g6")
