"""Batch certification over (n, k) grids and the prime-gap counting chain."""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .certify import Kind, certify
from .modp import DEFAULT_PRIME_BUDGET
from .poly import FnkSpec
from .primes import DEFAULT_FACTOR_BOUND, deltas, gap_stats

CSV_HEADER = ["n", "k", "kind", "scope", "witnesses", "micros"]
HEATH_BROWN_EXPONENT = 23 / 18


@dataclass(frozen=True)
class SurveyRecord:
    n: int
    k: int
    kind: str
    scope: str
    witnesses: str
    micros: int

    def row(self) -> list:
        return [self.n, self.k, self.kind, self.scope, self.witnesses, self.micros]

    def to_json(self) -> dict:
        return dict(zip(CSV_HEADER, self.row()))


def parse_a_option(text: str | None):
    """``ones`` | ``factorial`` | ``csv:<comma list>`` -> certify's ``a``."""
    if text is None or text == "ones":
        return "ones"
    if text == "factorial":
        return "factorial"
    if text.startswith("csv:"):
        vals = [int(t) for t in text[4:].split(",") if t.strip()]
        if not vals:
            raise ValueError("empty csv multiplier list")
        return tuple(vals)
    raise ValueError(f"unknown --a value {text!r}")


def a_for(n: int, k: int, a):
    """Expand a csv list cyclically to length k+1; presets pass through."""
    if isinstance(a, tuple):
        return FnkSpec(n, k, tuple(a[j % len(a)] for j in range(k + 1)))
    return a


def _row_task(args) -> list[SurveyRecord]:
    n, a, prime_budget, factor_bound, timing = args
    out = []
    for k in range(1, n - 1):
        t0 = time.perf_counter_ns()
        cert = certify(n, k, a_for(n, k, a), prime_budget, factor_bound)
        micros = (time.perf_counter_ns() - t0) // 1000 if timing else 0
        out.append(SurveyRecord(n, k, cert.kind.value, cert.scope.value,
                                ";".join(cert.witness_tokens()), micros))
    return out


def survey_records(N: int, a="ones", jobs: int = 1, prime_budget: int = DEFAULT_PRIME_BUDGET,
                   factor_bound: int = DEFAULT_FACTOR_BOUND, timing: bool = True,
                   min_n: int = 3) -> list[SurveyRecord]:
    """Certify every (n, k) with min_n <= n <= N, 1 <= k <= n-2, sorted."""
    if N < 3:
        raise ValueError("need N >= 3")
    tasks = [(n, a, prime_budget, factor_bound, timing) for n in range(max(3, min_n), N + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_row_task, tasks, chunksize=4))
    else:
        chunks = [_row_task(t) for t in tasks]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (r.n, r.k))
    return records


def window_failures(n: int, d: int) -> int:
    """Number of k in [1, n-2] outside ``2 d < k < n - d``."""
    inside = max(0, min(n - 2, n - d - 1) - (2 * d + 1) + 1)
    return (n - 2) - inside


def counting_chain(N: int) -> dict:
    """W(N), the pairs outside the prime-gap window, against its bounds.

    n = 3 has no delta; its single pair counts as a window failure and
    contributes n - 2 = 1 to the capped bound.
    """
    if N < 3:
        raise ValueError("need N >= 3")
    ds = deltas(N)
    W = 1
    sum_3delta = 0
    capped = 1
    worst = 0.0
    for n in range(4, N + 1):
        fails = window_failures(n, ds[n])
        W += fails
        sum_3delta += 3 * ds[n]
        capped += min(n - 2, 3 * ds[n])
        worst = max(worst, fails / (3 * ds[n]))
    gs = gap_stats(N)
    return {
        "N": N,
        "W": W,
        "sum_3delta": sum_3delta,
        "sum_min_n2_3delta": capped,
        "max_window_failures_over_3delta": worst,
        "sum_d2": gs.sum_d2,
        "N_pow_23_18": N**HEATH_BROWN_EXPONENT,
        "gap_stats": gs.to_json(),
    }


def summarize(records: list[SurveyRecord], N: int) -> dict:
    kinds = Counter(r.kind for r in records)
    return {
        "records": len(records),
        "kinds": dict(sorted(kinds.items())),
        "unresolved": kinds.get(Kind.NONE.value, 0),
        "counting_chain": counting_chain(N),
    }


def run_survey(N: int, **kw) -> tuple[list[SurveyRecord], dict]:
    records = survey_records(N, **kw)
    return records, summarize(records, N)


def write_csv(records, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.row())


def write_jsonl(records, fh) -> None:
    for r in records:
        fh.write(json.dumps(r.to_json(), sort_keys=True) + "\n")


def render(records, fmt: str) -> str:
    buf = io.StringIO()
    (write_csv if fmt == "csv" else write_jsonl)(records, buf)
    return buf.getvalue()
