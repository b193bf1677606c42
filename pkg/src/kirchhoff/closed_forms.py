"""Closed forms for complete multipartite graphs and joins.

Everything here is exact; each formula has a brute-force counterpart in
`kirchhoff.oracle` and the test suite checks the two against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import DisconnectedGraphError, PartitionSpec, VertexLocator
from .linalg import RatMatrix, RatPolynomial

_FLOAT_ZERO_TOL = 1e-7


def _validate_t(spec: PartitionSpec, t: Sequence[int]) -> None:
    if len(t) != spec.r:
        raise ValueError(f"t has {len(t)} entries, expected {spec.r}")
    for tk, pk in zip(t, spec.parts):
        if not 0 <= tk <= pk:
            raise ValueError(f"intersection count {tk} out of range for part {pk}")


@dataclass(frozen=True)
class FactoredMinorPoly:
    """Factored characteristic polynomial of a Laplacian minor of K_{p_1..p_r}.

    Deleting a vertex set that meets part k in t_k vertices leaves a minor
    whose char poly factors into linear terms (n-t_k - x) and (n-p_k - x)
    plus a rational correction 1 - sum (p_k-t_k)/(n-t_k - x).  Parts with
    t_k = p_k contribute nothing.  `expanded` is the cleared-denominator
    expansion, equal to det(minor - xI).
    """

    spec: PartitionSpec
    t: tuple[int, ...]
    rational_terms: tuple[tuple[int, int], ...]  # (t_k - p_k, n - t_k) per active k
    linear_factors: tuple[tuple[int, int], ...]  # (root, multiplicity)
    expanded: RatPolynomial

    def to_dict(self) -> dict:
        return {
            "parts": list(self.spec.parts),
            "t": list(self.t),
            "rational_factor": [list(pair) for pair in self.rational_terms],
            "linear_factors": [list(pair) for pair in self.linear_factors],
            "coefficients": [str(c) for c in self.expanded.coeffs],
        }


def minor_charpoly(spec: PartitionSpec, t: Sequence[int]) -> FactoredMinorPoly:
    _validate_t(spec, t)
    n = spec.n
    t = tuple(t)
    active = [k for k in range(spec.r) if t[k] < spec.parts[k]]

    rational_terms = tuple((t[k] - spec.parts[k], n - t[k]) for k in active)
    linear_factors: list[tuple[int, int]] = []
    for k in active:
        linear_factors.append((n - t[k], 1))
        mult = spec.parts[k] - t[k] - 1
        if mult > 0:
            linear_factors.append((n - spec.parts[k], mult))

    # Clear denominators before expanding: the printed rational factor has
    # removable singularities at x = n - t_k.
    per_k: list[tuple[RatPolynomial, RatPolynomial]] = []  # (R_k, M_k)
    for k in active:
        r_k = RatPolynomial.linear(n - t[k])
        m_k = RatPolynomial.one()
        for _ in range(spec.parts[k] - t[k] - 1):
            m_k = m_k * RatPolynomial.linear(n - spec.parts[k])
        per_k.append((r_k, m_k))

    total = RatPolynomial.one()
    for r_k, m_k in per_k:
        total = total * r_k * m_k
    expanded = total
    for idx, k in enumerate(active):
        term = RatPolynomial([spec.parts[k] - t[k]])
        for jdx, (r_j, m_j) in enumerate(per_k):
            term = term * m_j
            if jdx != idx:
                term = term * r_j
        expanded = expanded - term

    return FactoredMinorPoly(spec, t, rational_terms, tuple(linear_factors), expanded)


def quotient_matrix(spec: PartitionSpec, t: Sequence[int]) -> RatMatrix:
    """Quotient matrix of the equitable partition of the minor: diagonal is the
    part degree n - p_i, column j carries t_j - p_j off the diagonal."""
    _validate_t(spec, t)
    n = spec.n
    return RatMatrix(
        [
            [
                (n - spec.parts[i]) if i == j else (t[j] - spec.parts[j])
                for j in range(spec.r)
            ]
            for i in range(spec.r)
        ]
    )


def _tree_product(spec: PartitionSpec) -> int:
    n = spec.n
    prod = 1
    for p in spec.parts:
        prod *= (n - p) ** (p - 1)
    return prod


def spanning_trees(spec: PartitionSpec) -> int:
    """n^{r-2} * prod (n-p_i)^{p_i-1}.  K_1 has one (empty) spanning tree."""
    if spec.r == 1:
        if spec.parts[0] == 1:
            return 1
        raise DisconnectedGraphError(
            f"K_{spec.parts[0]} with r=1 is an empty graph; no spanning tree"
        )
    n, r = spec.n, spec.r
    value = Fraction(n) ** (r - 2) * _tree_product(spec)
    assert value.denominator == 1
    return value.numerator


def minor_det_two_vertices(
    spec: PartitionSpec, u: VertexLocator, v: VertexLocator
) -> Fraction:
    """det of the Laplacian minor with both u's and v's row/column removed."""
    if u == v:
        raise ValueError("vertices must be distinct")
    if spec.r < 2:
        raise DisconnectedGraphError("r >= 2 required")
    spec.vertex_index(u)
    spec.vertex_index(v)
    n, r = spec.n, spec.r
    prod = _tree_product(spec)
    pl = spec.parts[u.part]
    if u.part == v.part:
        return Fraction(n) ** (r - 2) * Fraction(2, n - pl) * prod
    pl2 = spec.parts[v.part]
    return (
        Fraction(n) ** (r - 3)
        * Fraction((n - 1) * (2 * n - pl - pl2), (n - pl) * (n - pl2))
        * prod
    )


def resistance_closed(
    spec: PartitionSpec, u: VertexLocator, v: VertexLocator
) -> Fraction:
    """Effective resistance between two vertices of K_{p_1,...,p_r}."""
    if spec.r < 2:
        raise DisconnectedGraphError("resistance undefined: r=1 graph is disconnected")
    spec.vertex_index(u)
    spec.vertex_index(v)
    if u == v:
        return Fraction(0)
    n = spec.n
    pi = spec.parts[u.part]
    if u.part == v.part:
        return Fraction(2, n - pi)
    pj = spec.parts[v.part]
    return Fraction((n - 1) * (2 * n - pi - pj), n * (n - pi) * (n - pj))


def resistance_matrix_closed(spec: PartitionSpec) -> RatMatrix:
    if spec.r < 2:
        raise DisconnectedGraphError("resistance undefined: r=1 graph is disconnected")
    locs = [spec.locate(v) for v in range(spec.n)]
    return RatMatrix(
        [[resistance_closed(spec, lu, lv) for lv in locs] for lu in locs]
    )


def kf_closed(spec: PartitionSpec) -> Fraction:
    """Kirchhoff index of K_{p_1,...,p_r}, via both closed forms.

    The trace form -1 - r(n-1) + n(n-1) sum 1/(n-p_i) and the spectral form
    r - 1 + n sum (p_i-1)/(n-p_i) must agree; a mismatch is an arithmetic bug.
    """
    if spec.r < 2:
        raise DisconnectedGraphError("Kirchhoff index undefined for r=1")
    n, r = spec.n, spec.r
    trace_form = (
        -1
        - r * (n - 1)
        + n * (n - 1) * sum(Fraction(1, n - p) for p in spec.parts)
    )
    spectral_form = r - 1 + n * sum(Fraction(p - 1, n - p) for p in spec.parts)
    if trace_form != spectral_form:
        raise RuntimeError(
            f"Kirchhoff closed forms disagree on {spec}: {trace_form} vs {spectral_form}"
        )
    return trace_form


def dkf_closed(spec: PartitionSpec) -> Fraction:
    """Degree Kirchhoff closed form -(2m/n)^2 + 2m(n-1), a function of the
    edge count alone.

    Caution: this equals the definitional degree-weighted resistance sum
    (oracle.degree_kirchhoff_index) only when all parts have the same size;
    for unequal parts the two provably differ (the derivation behind this
    form silently assumes a regular graph).  It is kept because the survey
    tables and the edge-count monotonicity corollary are stated in terms of
    it."""
    if spec.r < 2:
        raise DisconnectedGraphError("degree Kirchhoff index undefined for r=1")
    n = spec.n
    two_m = 2 * spec.edge_count()
    return -Fraction(two_m, n) ** 2 + two_m * (n - 1)


def _split_zero(p: int, spectrum: Sequence) -> list:
    """Drop one zero eigenvalue; returns the remaining p-1 values.

    Connected parts have exactly one zero; empty parts are all zeros and the
    join formulas remain valid for them (the complement-spectrum relation
    behind them does not need connectivity), so extra zeros are kept.
    """
    if len(spectrum) != p:
        raise ValueError(f"spectrum has {len(spectrum)} values, expected {p}")
    vals = sorted(spectrum)
    zero = vals[0]
    if isinstance(zero, float):
        if abs(zero) > _FLOAT_ZERO_TOL:
            raise ValueError("spectrum lacks a (near-)zero eigenvalue")
    elif zero != 0:
        raise ValueError("spectrum lacks a zero eigenvalue")
    return vals[1:]


@dataclass(frozen=True)
class JoinSpectrum:
    """Laplacian spectrum of a join: 0 once, n with multiplicity r-1, and each
    part's nonzero eigenvalues shifted by n - p_i."""

    n: int
    values: tuple  # all n eigenvalues, descending

    def nonzero(self) -> tuple:
        return self.values[:-1]


def join_spectrum(spectra: Sequence[tuple[int, Sequence]]) -> JoinSpectrum:
    if not spectra:
        raise ValueError("need at least one part")
    n = sum(p for p, _ in spectra)
    r = len(spectra)
    if r == 1:
        p, spec = spectra[0]
        if len(spec) != p:
            raise ValueError(f"spectrum has {len(spec)} values, expected {p}")
        return JoinSpectrum(n, tuple(sorted(spec, reverse=True)))
    values: list = [0] + [n] * (r - 1)
    for p, part_spec in spectra:
        values.extend(n - p + lam for lam in _split_zero(p, part_spec))
    return JoinSpectrum(n, tuple(sorted(values, reverse=True)))


def kf_join(spectra: Sequence[tuple[int, Sequence[Fraction]]]) -> Fraction:
    """Kirchhoff index of a join of connected parts from their exact spectra:
    r - 1 + n sum_i sum_j 1/(n - p_i + lambda_j^i)."""
    if len(spectra) < 2:
        raise ValueError("a join needs at least two parts")
    n = sum(p for p, _ in spectra)
    total = Fraction(len(spectra) - 1)
    for p, part_spec in spectra:
        for lam in _split_zero(p, [Fraction(x) for x in part_spec]):
            denom = n - p + lam
            if denom == 0:
                raise ValueError("zero shifted eigenvalue in join spectrum")
            total += Fraction(n, 1) / denom
    return total


def multipartite_spectrum(spec: PartitionSpec) -> JoinSpectrum:
    """Exact Laplacian spectrum of K_{p_1,...,p_r}: join of empty parts."""
    return join_spectrum([(p, [Fraction(0)] * p) for p in spec.parts])
