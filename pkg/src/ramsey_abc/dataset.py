"""Access to the bundled 40-vertex dataset and the 35-vertex base graph.

Graphs A-D are the best candidates found for the (3, 10, 40) target: each is
claimed triangle-light (fitness 2 or 3) with no 10-independent set, and all
four share the same induced subgraph on vertices 1-35, which is the unique
35-vertex triangle-free graph with independence number 8. That shared base is
what the extension construction starts from, so extract_base() recovers it
from graph A and validates it rather than trusting the file blindly.
"""

from __future__ import annotations

from importlib import resources

from .counting import build_indep_cache, count_cliques, max_independent_set
from .graph import Graph, ParseReport, induced_subgraph, parse_adjacency_list

GRAPH_NAMES = ("A", "B", "C", "D")

BASE_SIZE = 35

# Census of k-independent sets in the 35-vertex base, used to validate any
# claimed copy of it.
BASE_INDEP_CENSUS = {5: 20265, 6: 22995, 7: 13760, 8: 3360}

BASE_DEGREE = 8
BASE_INDEPENDENCE_NUMBER = 8


def dataset_text(name: str) -> str:
    """Raw adjacency-list text of bundled graph A, B, C or D."""
    if name not in GRAPH_NAMES:
        raise ValueError(f"unknown dataset graph {name!r}; have {GRAPH_NAMES}")
    ref = resources.files("ramsey_abc.data") / f"graph_{name.lower()}.adj"
    return ref.read_text()


def load_graph(name: str) -> ParseReport:
    return parse_adjacency_list(dataset_text(name))


def load_all() -> dict[str, ParseReport]:
    return {name: load_graph(name) for name in GRAPH_NAMES}


def extract_base(report: ParseReport | None = None) -> Graph:
    """Induced subgraph on vertices 1-35 of graph A (0-indexed 0..34)."""
    if report is None:
        report = load_graph("A")
    return induced_subgraph(report.graph, range(BASE_SIZE))


def validate_base(base: Graph) -> list[tuple[str, bool, str]]:
    """Checks that a graph really is the expected 35-vertex base.

    Returns (check, passed, detail) rows: regularity, triangle-freeness,
    independence number, and the independent-set census.
    """
    rows: list[tuple[str, bool, str]] = []
    degs = set(base.degrees())
    rows.append(
        (
            f"{BASE_DEGREE}-regular",
            base.n == BASE_SIZE and degs == {BASE_DEGREE},
            f"n={base.n}, degrees={sorted(degs)}",
        )
    )
    triangles = count_cliques(base, 3)
    rows.append(("triangle-free", triangles == 0, f"triangle count {triangles}"))
    alpha, _ = max_independent_set(base)
    rows.append(
        (
            f"independence number {BASE_INDEPENDENCE_NUMBER}",
            alpha == BASE_INDEPENDENCE_NUMBER,
            f"computed {alpha}",
        )
    )
    cache = build_indep_cache(base, BASE_INDEP_CENSUS.keys())
    counts = cache.counts()
    for k, expected in sorted(BASE_INDEP_CENSUS.items()):
        rows.append(
            (
                f"{k}-independent sets = {expected}",
                counts[k] == expected,
                f"computed {counts[k]}",
            )
        )
    return rows


def bases_identical() -> bool:
    """Whether all four bundled graphs induce the same base on vertices 1-35."""
    first = extract_base()
    for name in GRAPH_NAMES[1:]:
        other = induced_subgraph(load_graph(name).graph, range(BASE_SIZE))
        if other.adj != first.adj:
            return False
    return True
