"""Brute-force invariants for arbitrary connected graphs.

No multipartite formula is used anywhere in this module; it is the ground
truth the closed forms are tested against.  Where two independent routes to
the same value exist (determinant ratios vs. pseudoinverse entries, trace vs.
resistance sum), both are computed and must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import DisconnectedGraphError, Graph
from . import linalg
from .linalg import RatMatrix

#: Full resistance matrices hold n^2 rationals; keep desk-scale runtimes.
ORACLE_SIZE_LIMIT = 64


def _check_size(g: Graph) -> None:
    if g.n > ORACLE_SIZE_LIMIT:
        raise linalg.SizeLimitError(
            f"oracle limited to n <= {ORACLE_SIZE_LIMIT}, got n={g.n}"
        )


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected")


def resistance_matrix(g: Graph) -> RatMatrix:
    """All pairwise effective resistances, computed two independent ways.

    Route one is the determinant ratio det(L(u,v|u,v))/det(L(u|u)); route two
    reads L+ entries as L+_uu + L+_vv - 2 L+_uv.  The routes must agree
    exactly on every pair.
    """
    _check_size(g)
    _require_connected(g)
    if g.n < 2:
        raise ValueError("resistance matrix needs at least two vertices")
    lap = linalg.laplacian(g)
    trees = linalg.det(lap.delete({0}, {0}))
    pinv = linalg.laplacian_pinv(g)
    rows = []
    for u in range(g.n):
        row = []
        for v in range(g.n):
            if u == v:
                row.append(Fraction(0))
                continue
            by_det = linalg.det(lap.delete({u, v}, {u, v})) / trees
            by_pinv = pinv[u, u] + pinv[v, v] - 2 * pinv[u, v]
            if by_det != by_pinv:
                raise RuntimeError(
                    f"resistance routes disagree at ({u},{v}): {by_det} vs {by_pinv}"
                )
            row.append(by_det)
        rows.append(row)
    return RatMatrix(rows)


def kirchhoff_index(g: Graph) -> Fraction:
    """Half the sum of all resistances; must equal n * trace(L+)."""
    _check_size(g)
    _require_connected(g)
    omega = resistance_matrix(g)
    by_sum = sum((x for row in omega.data for x in row), Fraction(0)) / 2
    by_trace = g.n * linalg.laplacian_pinv(g).trace()
    if by_sum != by_trace:
        raise RuntimeError(f"Kirchhoff routes disagree: {by_sum} vs {by_trace}")
    return by_sum


def degree_kirchhoff_index(g: Graph) -> Fraction:
    """Definitional sum over pairs of d_u d_v Omega(u,v)."""
    _check_size(g)
    _require_connected(g)
    if min(g.degrees()) < 1:
        raise ValueError("degree Kirchhoff index needs minimum degree >= 1")
    omega = resistance_matrix(g)
    degs = g.degrees()
    return sum(
        (
            degs[u] * degs[v] * omega[u, v]
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ),
        Fraction(0),
    )


def normalized_inverse_trace(g: Graph) -> Fraction:
    """Sum of reciprocals of the nonzero normalized-Laplacian eigenvalues.

    The normalized Laplacian itself has irrational entries, but D^{-1}L is
    similar to it and rational, so the sum comes exactly out of the
    characteristic polynomial: with char_poly(D^{-1}L) = c1 x + c2 x^2 + ...,
    the value is -c2/c1.
    """
    _check_size(g)
    _require_connected(g)
    degs = g.degrees()
    if min(degs) < 1:
        raise ValueError("normalized Laplacian needs minimum degree >= 1")
    lap = linalg.laplacian(g)
    dinv_l = RatMatrix(
        [[x / degs[i] for x in row] for i, row in enumerate(lap.data)]
    )
    p = linalg.char_poly(dinv_l)
    if p.coeffs[0] != 0:
        raise RuntimeError("connected graph must give zero constant term")
    return -p.coeffs[2] / p.coeffs[1]


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: det of the Laplacian with vertex 0 deleted."""
    _check_size(g)
    if g.n == 1:
        return 1
    value = linalg.det(linalg.laplacian(g).delete({0}, {0}))
    assert value.denominator == 1 and value >= 0
    return value.numerator


@dataclass(frozen=True)
class InvariantReport:
    """Bundle of invariants, tagged with how they were computed."""

    resistance: RatMatrix
    kf: Fraction
    dkf: Fraction
    spanning_trees: int
    normalized_inverse_trace: Fraction
    source: str  # "oracle" or "closed-form"


def invariant_report(g: Graph) -> InvariantReport:
    return InvariantReport(
        resistance=resistance_matrix(g),
        kf=kirchhoff_index(g),
        dkf=degree_kirchhoff_index(g),
        spanning_trees=spanning_tree_count(g),
        normalized_inverse_trace=normalized_inverse_trace(g),
        source="oracle",
    )
