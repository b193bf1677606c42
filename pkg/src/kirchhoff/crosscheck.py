"""End-to-end consistency sweep: closed forms vs. oracle vs. float spectra."""

from __future__ import annotations

from dataclasses import dataclass

from . import closed_forms, oracle, spectral
from .extremal import enumerate_partitions
from .graphs import complete_multipartite


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    passed: bool
    detail: str = ""


def _all_specs(max_n: int):
    for n in range(2, max_n + 1):
        for r in range(2, n + 1):
            yield from enumerate_partitions(n, r)


def run_verification(max_n: int = 8, spectral_tol: float = 1e-9) -> list[CheckResult]:
    """Check every closed form against the brute-force oracle and the float
    eigensolver on all complete multipartite graphs with at most max_n
    vertices.  Exact comparisons are strict equality."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    specs = list(_all_specs(max_n))
    results = []

    failures, label = [], "resistance matrix: closed form vs oracle"
    for spec in specs:
        g = complete_multipartite(spec)
        if closed_forms.resistance_matrix_closed(spec) != oracle.resistance_matrix(g):
            failures.append(str(spec))
    results.append(CheckResult(label, len(specs), not failures, ", ".join(failures)))

    failures, label = [], "Kirchhoff index: closed form vs oracle"
    for spec in specs:
        g = complete_multipartite(spec)
        if closed_forms.kf_closed(spec) != oracle.kirchhoff_index(g):
            failures.append(str(spec))
    results.append(CheckResult(label, len(specs), not failures, ", ".join(failures)))

    # The degree Kirchhoff closed form is only valid on equal-part (regular)
    # partitions; comparing it to the oracle elsewhere would always fail.
    regular = [s for s in specs if len(set(s.parts)) == 1]
    failures, label = [], "degree Kirchhoff index: closed form vs oracle (regular)"
    for spec in regular:
        g = complete_multipartite(spec)
        if closed_forms.dkf_closed(spec) != oracle.degree_kirchhoff_index(g):
            failures.append(str(spec))
    results.append(CheckResult(label, len(regular), not failures, ", ".join(failures)))

    failures, label = [], "spanning trees: closed form vs matrix-tree"
    for spec in specs:
        g = complete_multipartite(spec)
        if closed_forms.spanning_trees(spec) != oracle.spanning_tree_count(g):
            failures.append(str(spec))
    results.append(CheckResult(label, len(specs), not failures, ", ".join(failures)))

    failures, label = [], "Laplacian spectrum: closed form vs eigensolver"
    for spec in specs:
        g = complete_multipartite(spec)
        exact = closed_forms.multipartite_spectrum(spec).values
        approx = spectral.laplacian_spectrum(g).eigenvalues
        if max(abs(float(a) - b) for a, b in zip(exact, approx)) > spectral_tol:
            failures.append(str(spec))
    results.append(CheckResult(label, len(specs), not failures, ", ".join(failures)))

    failures, label = [], "normalized trace identity: 2m sum(1/mu) = Kf'"
    for spec in specs:
        g = complete_multipartite(spec)
        lhs = 2 * g.edge_count() * oracle.normalized_inverse_trace(g)
        if lhs != oracle.degree_kirchhoff_index(g):
            failures.append(str(spec))
    results.append(CheckResult(label, len(specs), not failures, ", ".join(failures)))

    return results


def summary_lines(results: list[CheckResult]) -> list[str]:
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"[{status}] {res.name} ({res.cases} cases)"
        if res.detail:
            line += f": {res.detail}"
        lines.append(line)
    total = "OK" if all(r.passed for r in results) else "FAILED"
    lines.append(f"verification {total}: {sum(r.passed for r in results)}/{len(results)} checks passed")
    return lines
