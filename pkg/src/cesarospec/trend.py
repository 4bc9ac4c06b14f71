"""Finite-resolution verdicts for limit and boundedness claims.

Every analytic criterion in this package reduces to a claim about a scalar
sequence: "this tends to zero", "this stays bounded", "this series converges".
None of those claims is decidable from finitely many terms, so instead of a
boolean each check returns a three-state :class:`Verdict` backed by samples
taken along a geometric index ladder.  The classification rules below are
deliberately conservative: a verdict of ``holds`` or ``fails`` means the
sampled evidence is unambiguous at the chosen resolution, and anything
borderline comes back ``inconclusive`` with a reason string.

All classification happens on the natural log of the quantity under test, so
overflow/underflow of the raw values never corrupts a verdict (-inf is a
legitimate log value meaning "exactly zero" or "underflowed").
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"

# Trend labels attached to verdicts as supporting detail.
TO_ZERO = "to_zero"
POSITIVE_LIMIT = "positive_limit"
RISING = "rising"
OSCILLATING = "oscillating"
BOUNDED = "bounded"
UNBOUNDED = "unbounded"
UNDECIDED = "undecided"

# Log-scale value beyond which exp() would overflow float64 with headroom.
LOG_OVERFLOW = 690.0


@dataclass(frozen=True)
class TrendParams:
    """Tuning knobs for the ladder classifiers.

    window: number of trailing ladder samples examined by tail rules.
    zero_rel_tol: relative drop (vs the sample peak) accepted as "reached zero".
    flat_band: max log-spread of a tail considered stabilized.
    decay_step: min mean per-sample log-drop for a clean decay verdict.
    rise_total: min total log-rise over the tail for a clean growth verdict.
    """

    window: int = 5
    zero_rel_tol: float = 1e-3
    flat_band: float = 0.01
    decay_step: float = 0.02
    rise_total: float = 0.1


DEFAULT_PARAMS = TrendParams()


@dataclass(frozen=True)
class Verdict:
    """Outcome of a finite-resolution check.

    outcome is one of ``holds`` / ``fails`` / ``inconclusive``.  evidence is a
    tuple of (index, sampled value) pairs along the ladder; the meaning of the
    value (and its scale) is stated in params["quantity"].  A ``fails`` verdict
    always carries a witness identifying where the claim breaks; an
    ``inconclusive`` one always carries a reason.
    """

    outcome: str
    trend: str
    evidence: tuple = ()
    witness: Any = None
    reason: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.outcome not in (HOLDS, FAILS, INCONCLUSIVE):
            raise ValueError(f"bad outcome {self.outcome!r}")
        if self.outcome == FAILS and self.witness is None:
            raise ValueError("failing verdict must name a witness")
        if self.outcome == INCONCLUSIVE and not self.reason:
            raise ValueError("inconclusive verdict must carry a reason")

    def __bool__(self) -> bool:
        # Deliberately undefined: a three-state verdict must not be used as a
        # boolean, that is exactly the bug this type exists to prevent.
        raise TypeError("Verdict is three-state; test .outcome explicitly")


def ladder(N: int, start: int = 2) -> np.ndarray:
    """Geometric sample indices start <= n <= N, roughly sqrt(2) apart.

    The last entry is always N itself so the final sample sits at full
    resolution.
    """
    if N < 1:
        raise ValueError("N must be positive")
    out: list[int] = []
    j = 0
    while True:
        n = math.ceil(2 ** (j / 2))
        j += 1
        if n >= N:
            break
        if n >= start and (not out or n > out[-1]):
            out.append(n)
    if not out or out[-1] != N:
        if N >= start or not out:
            out.append(N)
    return np.array(out, dtype=np.int64)


def sample_at(ns: np.ndarray, values: np.ndarray, ladder_ns: np.ndarray) -> np.ndarray:
    """Pick values at the ladder indices (ns must be sorted, ladder subset of ns)."""
    pos = np.searchsorted(ns, ladder_ns)
    if np.any(pos >= len(ns)) or np.any(ns[pos] != ladder_ns):
        raise ValueError("ladder indices missing from sample grid")
    return values[pos]


def _tail(a: np.ndarray, window: int) -> np.ndarray:
    return a[-min(window, len(a)):]


def _spread(a: np.ndarray) -> float:
    return float(np.max(a) - np.min(a))


def classify_limit(
    ns: np.ndarray,
    logs: np.ndarray,
    params: TrendParams = DEFAULT_PARAMS,
) -> tuple[str, Any]:
    """Classify the limiting behaviour of a nonnegative quantity from log samples.

    Returns (trend, detail) where trend is one of TO_ZERO, POSITIVE_LIMIT,
    RISING, OSCILLATING, UNDECIDED.  detail is the estimated limit for
    POSITIVE_LIMIT and the witness index for RISING/OSCILLATING.

    Rules are applied in order; -inf entries mean the quantity underflowed or
    is exactly zero there.
    """
    ns = np.asarray(ns)
    logs = np.asarray(logs, dtype=float)
    if len(ns) != len(logs) or len(ns) == 0:
        raise ValueError("need matching nonempty samples")
    if np.any(np.isnan(logs)) or np.any(logs == np.inf):
        raise ValueError("limit samples must be finite or -inf")

    finite = logs[np.isfinite(logs)]
    if len(finite) == 0:
        return TO_ZERO, None
    peak = float(np.max(finite))

    w = params.window
    tail = _tail(logs, w)
    tail_ns = _tail(ns, w)

    # Reached-zero rule: the whole tail is far below the peak and not climbing.
    if np.max(tail) <= peak + math.log(params.zero_rel_tol) and tail[-1] <= tail[0]:
        return TO_ZERO, None

    if not np.all(np.isfinite(tail)):
        # Underflow mixed with large values: no stable reading.
        return UNDECIDED, None

    # Stabilized at a level comparable to the peak.
    if _spread(tail) <= params.flat_band:
        return POSITIVE_LIMIT, float(math.exp(np.mean(tail)))

    steps = np.diff(tail)
    if np.all(steps < 0) and -float(np.mean(steps)) >= params.decay_step:
        return TO_ZERO, None
    if np.all(steps >= 0) and float(tail[-1] - tail[0]) >= params.rise_total:
        return RISING, int(tail_ns[-1])
    if _spread(tail) >= params.rise_total:
        return OSCILLATING, int(tail_ns[int(np.argmax(tail))])
    return UNDECIDED, None


def limit_verdict_zero(
    ns: np.ndarray,
    logs: np.ndarray,
    quantity: str,
    params: TrendParams = DEFAULT_PARAMS,
    extra: dict | None = None,
) -> Verdict:
    """Verdict for the claim "quantity tends to zero"."""
    trend, detail = classify_limit(ns, logs, params)
    ev = tuple((int(n), float(v)) for n, v in zip(ns, logs))
    info = {"quantity": quantity, "scale": "log"}
    if extra:
        info.update(extra)
    if trend == TO_ZERO:
        return Verdict(HOLDS, trend, ev, params=info)
    if trend == POSITIVE_LIMIT:
        info["limit_estimate"] = detail
        return Verdict(FAILS, trend, ev, witness=int(ns[-1]), params=info)
    if trend in (RISING, OSCILLATING):
        return Verdict(FAILS, trend, ev, witness=detail, params=info)
    return Verdict(
        INCONCLUSIVE, UNDECIDED, ev,
        reason="tail neither vanishes, stabilizes, nor grows cleanly at this resolution",
        params=info,
    )


def limit_verdict_positive(
    ns: np.ndarray,
    logs: np.ndarray,
    quantity: str,
    params: TrendParams = DEFAULT_PARAMS,
    extra: dict | None = None,
) -> Verdict:
    """Verdict for the claim "quantity tends to a finite positive limit"."""
    trend, detail = classify_limit(ns, logs, params)
    ev = tuple((int(n), float(v)) for n, v in zip(ns, logs))
    info = {"quantity": quantity, "scale": "log"}
    if extra:
        info.update(extra)
    if trend == POSITIVE_LIMIT:
        info["limit_estimate"] = detail
        return Verdict(HOLDS, trend, ev, params=info)
    if trend == TO_ZERO:
        return Verdict(FAILS, trend, ev, witness=int(ns[-1]), params=info)
    if trend in (RISING, OSCILLATING):
        return Verdict(FAILS, trend, ev, witness=detail, params=info)
    return Verdict(
        INCONCLUSIVE, UNDECIDED, ev,
        reason="tail does not stabilize at this resolution",
        params=info,
    )


def classify_sup(
    ns: np.ndarray,
    logs: np.ndarray,
    params: TrendParams = DEFAULT_PARAMS,
) -> tuple[str, Any]:
    """Classify whether sup of a nonnegative quantity is finite.

    ns/logs are pointwise samples over a dense increasing index grid (log
    scale, -inf allowed).  Internally tracks the running sup at ladder
    checkpoints.  Returns (trend, detail): UNBOUNDED with a witness index,
    BOUNDED with the log of the observed sup, or UNDECIDED.
    """
    ns = np.asarray(ns)
    logs = np.asarray(logs, dtype=float)
    if len(ns) != len(logs) or len(ns) == 0:
        raise ValueError("need matching nonempty samples")
    if np.any(np.isnan(logs)):
        raise ValueError("sup samples must not be NaN")

    if np.any(logs >= LOG_OVERFLOW):
        return UNBOUNDED, int(ns[int(np.argmax(logs >= LOG_OVERFLOW))])

    lad = ladder(int(ns[-1]), start=int(ns[0]))
    lad = lad[lad >= ns[0]]
    running = np.maximum.accumulate(logs)
    pos = np.searchsorted(ns, lad, side="right") - 1
    checkpoints = running[pos]

    w = params.window
    tail = _tail(checkpoints, w)
    if len(tail) >= 2:
        steps = np.diff(tail)
        if np.all(steps > 0) and float(tail[-1] - tail[0]) >= params.rise_total:
            return UNBOUNDED, int(ns[int(np.argmax(logs))])

    # Bounded requires the running sup to be flat over a long trailing stretch,
    # not just the last few checkpoints.
    wb = max(w, len(checkpoints) // 4)
    tail_b = _tail(checkpoints, wb)
    if _spread(tail_b) <= params.flat_band:
        # Guard: a pointwise tail still climbing toward the sup means the
        # flatness may be an artifact of an early transient peak.
        pw_tail = _tail(logs[pos], w)
        pw_steps = np.diff(pw_tail)
        climbing = (
            len(pw_tail) >= 2
            and np.all(pw_steps >= 0)
            and float(pw_tail[-1] - pw_tail[0]) >= params.rise_total
        )
        if climbing:
            return UNDECIDED, None
        return BOUNDED, float(checkpoints[-1])
    return UNDECIDED, None


def sup_verdict_bounded(
    ns: np.ndarray,
    logs: np.ndarray,
    quantity: str,
    params: TrendParams = DEFAULT_PARAMS,
    extra: dict | None = None,
) -> Verdict:
    """Verdict for the claim "sup over all indices is finite".

    Evidence records the running sup at ladder checkpoints (log scale).
    """
    trend, detail = classify_sup(ns, logs, params)
    lad = ladder(int(ns[-1]), start=int(ns[0]))
    running = np.maximum.accumulate(np.asarray(logs, dtype=float))
    pos = np.searchsorted(ns, lad, side="right") - 1
    pos = pos[pos >= 0]
    ev = tuple((int(n), float(v)) for n, v in zip(lad[-len(pos):], running[pos]))
    info = {"quantity": quantity, "scale": "log", "evidence_kind": "running_sup"}
    if extra:
        info.update(extra)
    if trend == BOUNDED:
        info["sup_log"] = detail
        return Verdict(HOLDS, trend, ev, params=info)
    if trend == UNBOUNDED:
        return Verdict(FAILS, trend, ev, witness=detail, params=info)
    return Verdict(
        INCONCLUSIVE, UNDECIDED, ev,
        reason="running sup neither stabilizes nor grows cleanly at this resolution",
        params=info,
    )
