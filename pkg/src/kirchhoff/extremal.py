"""Extremal Kirchhoff indices over complete r-partite graphs on n vertices.

Enumerates all partitions of n into r parts, brute-forces the extremes of
Kf and Kf', compares against the predicted extremal partitions, and
regenerates the survey tables with their monotonicity annotations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .closed_forms import dkf_closed, kf_closed
from .formats import fraction_str, sig_digits
from .graphs import PartitionSpec


def enumerate_partitions(n: int, r: int) -> Iterator[PartitionSpec]:
    """Partitions of n into exactly r positive non-increasing parts.

    Ordered so that the ascending-sorted tuples are in lexicographic order:
    (7,1,1), (6,2,1), ..., (3,3,3) for n=9, r=3.
    """
    if r < 1 or r > n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")

    def gen(remaining: int, parts_left: int, minimum: int):
        if parts_left == 1:
            yield (remaining,)
            return
        for first in range(minimum, remaining // parts_left + 1):
            for rest in gen(remaining - first, parts_left - 1, first):
                yield (first, *rest)

    for ascending in gen(n, r, 1):
        yield PartitionSpec(tuple(reversed(ascending)))


def partition_count(n: int, r: int) -> int:
    """Number of partitions of n into exactly r parts, by the standard
    recurrence P(n,r) = P(n-1,r-1) + P(n-r,r)."""
    if r < 1 or r > n:
        return 0
    table = [[0] * (r + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for nn in range(1, n + 1):
        for rr in range(1, min(r, nn) + 1):
            table[nn][rr] = table[nn - 1][rr - 1] + table[nn - rr][rr]
    return table[n][r]


def predicted_max_kf_spec(n: int, r: int) -> PartitionSpec:
    """One big part: (n-r+1, 1, ..., 1)."""
    return PartitionSpec((n - r + 1,) + (1,) * (r - 1))


def predicted_min_kf_spec(n: int, r: int) -> PartitionSpec:
    """Balanced parts: k parts of size p = floor(n/r)+1 and r-k of p-1."""
    p = n // r + 1
    k = n - r * (n // r)
    return PartitionSpec((p,) * k + (p - 1,) * (r - k))


def predicted_max_kf_value(n: int, r: int) -> Fraction:
    return (
        -1
        - r * (n - 1)
        + n * (n - 1) * (Fraction(1, r - 1) + Fraction(r - 1, n - 1))
    )


def predicted_min_kf_value(n: int, r: int) -> Fraction:
    p = n // r + 1
    k = n - r * (n // r)
    total = Fraction(0)
    if k:  # no parts of size p when n/r is an integer
        total += Fraction(k, n - p)
    if r - k:
        total += Fraction(r - k, n - p + 1)
    return -1 - r * (n - 1) + n * (n - 1) * total


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    r: int
    minimizer: PartitionSpec
    min_value: Fraction
    maximizer: PartitionSpec
    max_value: Fraction
    predicted_min: PartitionSpec
    predicted_max: PartitionSpec
    min_agrees: bool
    max_agrees: bool
    min_tie: bool
    max_tie: bool


def _extremal_search(
    n: int,
    r: int,
    value: Callable[[PartitionSpec], Fraction],
    predicted_min: PartitionSpec,
    predicted_max: PartitionSpec,
) -> ExtremalResult:
    if r < 2 or r > n:
        raise ValueError(f"need 2 <= r <= n, got n={n}, r={r}")
    best_min = best_max = None
    min_spec = max_spec = None
    min_tie = max_tie = False
    for spec in enumerate_partitions(n, r):
        v = value(spec)
        if best_min is None or v < best_min:
            best_min, min_spec, min_tie = v, spec, False
        elif v == best_min and spec != min_spec:
            min_tie = True
            min_spec = min(min_spec, spec, key=lambda s: s.parts)
        if best_max is None or v > best_max:
            best_max, max_spec, max_tie = v, spec, False
        elif v == best_max and spec != max_spec:
            max_tie = True
            max_spec = min(max_spec, spec, key=lambda s: s.parts)
    return ExtremalResult(
        n=n,
        r=r,
        minimizer=min_spec,
        min_value=best_min,
        maximizer=max_spec,
        max_value=best_max,
        predicted_min=predicted_min.canonical(),
        predicted_max=predicted_max.canonical(),
        min_agrees=min_spec == predicted_min.canonical(),
        max_agrees=max_spec == predicted_max.canonical(),
        min_tie=min_tie,
        max_tie=max_tie,
    )


def extremal_kf(n: int, r: int) -> ExtremalResult:
    result = _extremal_search(
        n, r, kf_closed, predicted_min_kf_spec(n, r), predicted_max_kf_spec(n, r)
    )
    if result.max_agrees and result.max_value != predicted_max_kf_value(n, r):
        raise RuntimeError(f"max Kf value mismatch for n={n}, r={r}")
    if result.min_agrees and result.min_value != predicted_min_kf_value(n, r):
        raise RuntimeError(f"min Kf value mismatch for n={n}, r={r}")
    return result


def extremal_dkf(n: int, r: int) -> ExtremalResult:
    """Kf' extremes; the minimizer must have the fewest edges and the
    maximizer the most, since Kf' is increasing in edge count."""
    result = _extremal_search(
        n, r, dkf_closed, predicted_max_kf_spec(n, r), predicted_min_kf_spec(n, r)
    )
    edge_counts = [s.edge_count() for s in enumerate_partitions(n, r)]
    if result.minimizer.edge_count() != min(edge_counts):
        raise RuntimeError("Kf' minimizer does not have the fewest edges")
    if result.maximizer.edge_count() != max(edge_counts):
        raise RuntimeError("Kf' maximizer does not have the most edges")
    return result


def check_exchange_lemma(samples: Sequence[tuple[Fraction, Fraction, Fraction]]) -> bool:
    """Exact check of the reciprocal exchange inequalities on (x, y, alpha)
    samples with x >= y > alpha > 0:
      (1) 1/(x+a) + 1/(y-a) >= 1/x + 1/y
      (2) 1/(x-a) + 1/(y+a) <= 1/x + 1/y   when x - y >= a.
    """
    for x, y, alpha in samples:
        x, y, alpha = Fraction(x), Fraction(y), Fraction(alpha)
        if not (x >= y > alpha > 0):
            raise ValueError(f"sample ({x},{y},{alpha}) violates x >= y > alpha > 0")
        base = Fraction(1) / x + Fraction(1) / y
        if Fraction(1) / (x + alpha) + Fraction(1) / (y - alpha) < base:
            return False
        if x - y >= alpha and Fraction(1) / (x - alpha) + Fraction(1) / (y + alpha) > base:
            return False
    return True


@dataclass(frozen=True)
class TableRow:
    spec: PartitionSpec
    m: int
    dkf: Fraction
    kf: Fraction
    dkf_arrow: str | None  # "up"/"down"/"eq" vs. next row, None on the last
    kf_arrow: str | None


def generate_table(n: int, r: int) -> list[TableRow]:
    """Rows for all complete r-partite graphs on n vertices, sorted by edge
    count (ties keep enumeration order), with monotonicity arrows."""
    if r < 2 or r > n:
        raise ValueError(f"need 2 <= r <= n, got n={n}, r={r}")
    specs = sorted(enumerate_partitions(n, r), key=PartitionSpec.edge_count)
    values = [(s, s.edge_count(), dkf_closed(s), kf_closed(s)) for s in specs]

    def arrow(cur: Fraction, nxt: Fraction | None) -> str | None:
        if nxt is None:
            return None
        return "up" if nxt > cur else ("down" if nxt < cur else "eq")

    rows = []
    for i, (s, m, dkf, kf) in enumerate(values):
        nxt = values[i + 1] if i + 1 < len(values) else None
        rows.append(
            TableRow(
                spec=s,
                m=m,
                dkf=dkf,
                kf=kf,
                dkf_arrow=arrow(dkf, nxt[2] if nxt else None),
                kf_arrow=arrow(kf, nxt[3] if nxt else None),
            )
        )
    return rows


_ARROW_TEXT = {"up": "↗", "down": "↘", "eq": "=", None: ""}
_ARROW_CSV = {"up": "+", "down": "-", "eq": "=", None: ""}


def table_to_text(rows: Sequence[TableRow], digits: int = 5) -> str:
    """Aligned text table: one column per partition, rows m / Kf' / Kf."""
    headers = ["graph", "m", "Kf'", "Kf"]
    cols = [headers]
    for row in rows:
        cols.append(
            [
                f"K_{{{row.spec}}}",
                str(row.m),
                sig_digits(row.dkf, digits) + _ARROW_TEXT[row.dkf_arrow],
                sig_digits(row.kf, digits) + _ARROW_TEXT[row.kf_arrow],
            ]
        )
    widths = [max(len(cell) for cell in col) for col in cols]
    lines = []
    for i in range(4):
        lines.append(
            "  ".join(col[i].rjust(w) for col, w in zip(cols, widths)).rstrip()
        )
    return "\n".join(lines)


def table_to_csv(rows: Sequence[TableRow], digits: int = 5) -> str:
    lines = ["graph,m,dkf,dkf_exact,dkf_arrow,kf,kf_exact,kf_arrow"]
    for row in rows:
        lines.append(
            ",".join(
                [
                    str(row.spec),
                    str(row.m),
                    sig_digits(row.dkf, digits),
                    fraction_str(row.dkf),
                    _ARROW_CSV[row.dkf_arrow],
                    sig_digits(row.kf, digits),
                    fraction_str(row.kf),
                    _ARROW_CSV[row.kf_arrow],
                ]
            )
        )
    return "\n".join(lines) + "\n"


def table_to_json(rows: Sequence[TableRow], digits: int = 5) -> str:
    payload = {
        "schema": 1,
        "rows": [
            {
                "spec": str(row.spec),
                "parts": list(row.spec.parts),
                "m": row.m,
                "dkf": fraction_str(row.dkf),
                "dkf_decimal": sig_digits(row.dkf, digits),
                "dkf_arrow": row.dkf_arrow,
                "kf": fraction_str(row.kf),
                "kf_decimal": sig_digits(row.kf, digits),
                "kf_arrow": row.kf_arrow,
            }
            for row in rows
        ],
    }
    return json.dumps(payload, indent=2)
