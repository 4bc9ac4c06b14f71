"""Exponent sequences, weight families, and scalar space diagnostics.

The sequence space studied by this package is a weighted intersection space:
fix an increasing positive exponent sequence alpha and let the space consist
of all scalar sequences x such that w_k(n) x_n -> 0 for every k >= 1, where

    w_k(n) = exp(-alpha_n / k).

Growth features of alpha alone decide the operator theory on the space: the
behaviour of log(n)/alpha_n (nuclearity of the space), the infimum of the
gaps alpha_{n+1} - alpha_n, the ratios alpha_{n+1}/alpha_n, and convergence of
the exponential series sum_n exp(alpha_n/k) / n^s.  This module provides a
gallery of alpha generators, the weight family, and finite-resolution
verdicts for those scalar diagnostics.

Every generator can report values beyond the working resolution through
closed or asymptotic forms (``alpha_at`` and ``tail_probes``); the series and
ratio diagnostics use those probes to catch divergence that only shows up far
past any affordable dense range.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import mpmath
import numpy as np

from .errors import InternalConsistencyError, RepresentationError, SkEmptyError
from .trend import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    LOG_OVERFLOW,
    RISING,
    DEFAULT_PARAMS,
    TrendParams,
    Verdict,
    classify_limit,
    ladder,
    limit_verdict_positive,
    limit_verdict_zero,
    sup_verdict_bounded,
)

# Values are saturated here instead of overflowing; everything this large is
# "effectively infinite" for every diagnostic in the package.
ALPHA_SATURATION = 1e300
# log j values in the sparse-block generator are saturated lower so that
# k * log(j) products stay representable.
_LOG_SATURATION = 1e200

_KNOWN_KINDS = (
    "linear", "power", "sqrt", "log", "psum", "tower", "rsw_b", "s1_empty",
    "table",
)

# Largest n with n^n representable in float64.
_TOWER_FLOAT_LIMIT = 143


@dataclass(frozen=True)
class TailProbe:
    """A beyond-resolution sample of alpha.

    log_n is the natural log of the index (the index itself may not be float
    representable); alpha and alpha_prev are the (saturated) values at that
    index and the one before it.
    """

    label: str
    log_n: float
    alpha: float
    alpha_prev: float


def _zeta(beta: float) -> float:
    return float(mpmath.zeta(beta))


def _psum_asymptotic(ns: np.ndarray, beta: float) -> np.ndarray:
    # Euler-Maclaurin for sum_{j<=n} j^-beta, 0 < beta < 1; absolute error is
    # below 1e-8 for n >= 50 and below 1e-11 for n >= 200.
    return (
        ns ** (1.0 - beta) / (1.0 - beta)
        + _zeta(beta)
        + 0.5 * ns ** (-beta)
        - beta / 12.0 * ns ** (-beta - 1.0)
    )


def _sparse_block_table(
    limit_log: float, max_blocks: int = 400
) -> tuple[list[int], list[float]]:
    """Block start indices j(k) and their logs for the sparse-block generator.

    j(1) = 1 and j(k+1) = 2 (k+1) j(k)^k.  Exact ints are kept while they fit
    comfortably; the log recursion continues (saturated) afterwards so block
    positions remain usable far beyond float range.
    """
    js: list[int] = [1]
    logs: list[float] = [0.0]
    while logs[-1] <= limit_log and len(js) < max_blocks:
        k = len(js)
        y = math.log(2 * (k + 1)) + k * logs[-1]
        y = min(y, _LOG_SATURATION)
        logs.append(y)
        if js[-1] is not None and y < 700:
            js.append(2 * (k + 1) * js[-1] ** k)
        else:
            js.append(None)  # type: ignore[arg-type]
    return js, logs


class AlphaSequence:
    """One member of the exponent-sequence gallery.

    Instances are immutable descriptors; dense values are computed on demand
    and cached.  ``values`` is exact-as-float and raises if an entry exceeds
    float range, ``values_saturated`` clips instead, and ``alpha_at`` extends
    the sequence past any dense range through closed or asymptotic forms.
    """

    def __init__(self, kind: str, **params):
        if kind not in _KNOWN_KINDS:
            raise ValueError(f"unknown alpha kind {kind!r}")
        self.kind = kind
        self.params = dict(params)
        self._cache: np.ndarray | None = None
        self.notes: tuple[str, ...] = ()
        self._validate()

    # -- construction helpers -------------------------------------------------

    @classmethod
    def linear(cls) -> "AlphaSequence":
        return cls("linear")

    @classmethod
    def power(cls, beta: float) -> "AlphaSequence":
        return cls("power", beta=float(beta))

    @classmethod
    def sqrt(cls) -> "AlphaSequence":
        return cls("sqrt")

    @classmethod
    def log(cls, beta: float) -> "AlphaSequence":
        return cls("log", beta=float(beta))

    @classmethod
    def psum(cls, beta: float) -> "AlphaSequence":
        return cls("psum", beta=float(beta))

    @classmethod
    def tower(cls) -> "AlphaSequence":
        return cls("tower")

    @classmethod
    def rsw_b(cls) -> "AlphaSequence":
        return cls("rsw_b")

    @classmethod
    def s1_empty(cls) -> "AlphaSequence":
        return cls("s1_empty")

    @classmethod
    def table(cls, values, step=None) -> "AlphaSequence":
        vals = tuple(Fraction(v) for v in values)
        if step is None:
            step = vals[-1] - vals[-2] if len(vals) >= 2 else Fraction(1)
        return cls("table", values=vals, step=Fraction(step))

    _PARAM_NAMES = {
        "power": {"beta"}, "log": {"beta"}, "psum": {"beta"},
        "table": {"values", "step"},
    }

    def _validate(self) -> None:
        notes: list[str] = []
        kind, p = self.kind, self.params
        allowed = self._PARAM_NAMES.get(kind, set())
        if set(p) != allowed:
            raise ValueError(
                f"{kind} takes parameters {sorted(allowed)}, got {sorted(p)}"
            )
        if kind == "power":
            if p["beta"] <= 0:
                raise ValueError("power exponent must be positive")
        elif kind == "log":
            if p["beta"] <= 0:
                raise ValueError("log scale must be positive")
        elif kind == "psum":
            if not 0 < p["beta"] < 1:
                raise ValueError("partial-sum exponent must lie in (0, 1)")
        elif kind == "table":
            vals = p["values"]
            if not vals:
                raise ValueError("table needs at least one value")
            if vals[0] <= 0:
                raise ValueError("table values must be positive")
            if any(b < a for a, b in zip(vals, vals[1:])):
                raise ValueError("table values must be nondecreasing")
            if p["step"] < 0:
                raise ValueError("table tail step must be nonnegative")
            if p["step"] == 0:
                notes.append("constant tail: alpha is bounded, space degenerates")
        a1 = float(self.values(1)[0])
        if a1 <= 1.0:
            # Several bound constants below assume alpha_1 > 1; verdicts stay
            # valid but the note is surfaced in profiles.
            notes.append("alpha_1 <= 1")
        self.notes = tuple(notes)

    # -- identity --------------------------------------------------------------

    def spec_string(self) -> str:
        """Grammar form accepted by parse_alpha (stable across sessions)."""
        kind, p = self.kind, self.params
        if kind in ("linear", "sqrt", "tower", "rsw_b", "s1_empty"):
            return kind
        if kind in ("power", "log", "psum"):
            return f"{kind}:beta={p['beta']:g}"
        vals = ",".join(str(v) for v in p["values"])
        return f"table:[{vals}]:step={p['step']}"

    def __repr__(self) -> str:
        return f"AlphaSequence({self.spec_string()!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlphaSequence)
            and self.kind == other.kind
            and self.params == other.params
        )

    def __hash__(self) -> int:
        return hash(self.spec_string())

    # -- dense values ----------------------------------------------------------

    def _compute(self, N: int) -> np.ndarray:
        ns = np.arange(1, N + 1, dtype=float)
        kind, p = self.kind, self.params
        if kind == "linear":
            return ns
        if kind == "power":
            return ns ** p["beta"]
        if kind == "sqrt":
            return np.sqrt(ns)
        if kind == "log":
            return p["beta"] * np.log(ns + 1.0)
        if kind == "psum":
            return np.cumsum(ns ** (-p["beta"]))
        if kind == "tower":
            out = np.full(N, np.inf)
            m = min(N, _TOWER_FLOAT_LIMIT)
            out[:m] = ns[:m] ** ns[:m]
            return out
        if kind == "rsw_b":
            out = np.where(ns % 2 == 0, 1.5 * ns, 1.5 * ns + 0.5)
            out[0] = 2.0
            return out
        if kind == "s1_empty":
            js, _ = _sparse_block_table(math.log(N) + 1)
            out = np.empty(N)
            for k in range(1, len(js)):
                if js[k - 1] is None or js[k - 1] > N:
                    break
                lo = js[k - 1]
                hi = min(N, (js[k] - 1) if js[k] is not None else N)
                if hi < lo:
                    continue
                beta = float(k * js[k - 1] ** k)
                idx = np.arange(lo, hi + 1, dtype=float)
                out[lo - 1:hi] = np.log(beta + 3.0 - 1.0 / idx)
            return out
        if kind == "table":
            vals, step = p["values"], p["step"]
            out = np.empty(N)
            m = min(N, len(vals))
            out[:m] = [float(v) for v in vals[:m]]
            if N > m:
                out[m:] = float(vals[-1]) + float(step) * np.arange(1, N - m + 1)
            return out
        raise AssertionError(kind)

    def values(self, N: int) -> np.ndarray:
        """alpha_1 .. alpha_N as float64; raises if any entry exceeds float range."""
        if N < 1:
            raise ValueError("N must be positive")
        if self._cache is None or len(self._cache) < N:
            arr = self._compute(max(N, 16))
            arr.flags.writeable = False
            self._cache = arr
        out = self._cache[:N]
        if not np.all(np.isfinite(out)):
            bad = int(np.argmin(np.isfinite(out))) + 1
            raise RepresentationError(
                f"alpha_{bad} of {self.spec_string()} exceeds float64 range; "
                f"use values_saturated or alpha_at"
            )
        return out

    def values_saturated(self, N: int) -> np.ndarray:
        """Like values() but entries beyond float range are clipped, not errors."""
        if self._cache is None or len(self._cache) < N:
            try:
                self.values(N)
            except RepresentationError:
                pass
        assert self._cache is not None
        return np.minimum(self._cache[:N], ALPHA_SATURATION)

    def exact_values(self, N: int) -> Optional[list[Fraction]]:
        """Exact rational alpha prefix, or None when entries are irrational."""
        kind, p = self.kind, self.params
        if kind == "linear":
            return [Fraction(n) for n in range(1, N + 1)]
        if kind == "power" and float(p["beta"]).is_integer():
            b = int(p["beta"])
            return [Fraction(n ** b) for n in range(1, N + 1)]
        if kind == "tower":
            return [Fraction(n ** n) for n in range(1, N + 1)]
        if kind == "rsw_b":
            out = [Fraction(2)]
            for n in range(2, N + 1):
                out.append(Fraction(3 * n, 2) if n % 2 == 0 else Fraction(3 * n + 1, 2))
            return out
        if kind == "table":
            vals, step = p["values"], p["step"]
            out = list(vals[:N])
            while len(out) < N:
                out.append(out[-1] + step)
            return out
        return None

    # -- beyond-resolution forms -------------------------------------------------

    def alpha_at(self, ns) -> np.ndarray:
        """alpha at arbitrary (float) indices via closed/asymptotic forms.

        Saturates at 1e300.  For the partial-sum generator the asymptotic
        form is used from n >= 50 (absolute error < 1e-10); exact below.
        """
        ns = np.atleast_1d(np.asarray(ns, dtype=float))
        kind, p = self.kind, self.params
        if kind == "linear":
            return ns.copy()
        if kind == "power":
            with np.errstate(over="ignore"):
                return np.minimum(ns ** p["beta"], ALPHA_SATURATION)
        if kind == "sqrt":
            return np.sqrt(ns)
        if kind == "log":
            return p["beta"] * np.log(ns + 1.0)
        if kind == "psum":
            out = _psum_asymptotic(np.maximum(ns, 50.0), p["beta"])
            small = ns < 50
            if np.any(small):
                exact = np.cumsum(np.arange(1, 50) ** (-p["beta"]))
                out[small] = exact[ns[small].astype(int) - 1]
            return out
        if kind == "tower":
            expo = ns * np.log(np.maximum(ns, 1.0))
            with np.errstate(over="ignore"):
                return np.where(expo > 690.0, ALPHA_SATURATION, np.exp(expo))
        if kind == "rsw_b":
            out = np.where(np.round(ns) % 2 == 0, 1.5 * ns, 1.5 * ns + 0.5)
            return np.where(ns <= 1.0, 2.0, out)
        if kind == "s1_empty":
            js, ylogs = _sparse_block_table(700.0)
            out = np.empty(len(ns))
            for i, n in enumerate(ns):
                k = 1
                while k < len(js) - 1 and js[k] is not None and js[k] <= n:
                    k += 1
                # block k starts at j(k); beta = k * j(k)^k
                lb = math.log(k) + k * ylogs[k - 1]
                if lb < 690.0:
                    out[i] = math.log(math.exp(lb) + 3.0 - 1.0 / n)
                else:
                    out[i] = min(lb, ALPHA_SATURATION)
            return out
        if kind == "table":
            vals, step = p["values"], p["step"]
            m = len(vals)
            dense = np.array([float(v) for v in vals])
            out = float(vals[-1]) + float(step) * (ns - m)
            small = ns <= m
            if np.any(small):
                out[small] = dense[ns[small].astype(int) - 1]
            return out
        raise AssertionError(kind)

    def tail_probes(self, N: int, count: int = 24) -> list[TailProbe]:
        """Samples of alpha past index N for divergence-at-infinity checks.

        Default: doubling indices N*2^t.  The sparse-block generator instead
        probes the start of every block beyond N, because its interesting
        behaviour is concentrated there.
        """
        if self.kind == "s1_empty":
            _, ylogs = _sparse_block_table(math.inf)
            probes = []
            logN = math.log(N)
            for k in range(2, len(ylogs)):
                y = ylogs[k - 1]  # log j(k)
                if y <= logN:
                    continue
                alpha = min(math.log(k) + k * y, ALPHA_SATURATION)
                prev = min(math.log(k - 1) + (k - 1) * ylogs[k - 2], ALPHA_SATURATION)
                probes.append(TailProbe(f"block k={k}", y, alpha, prev))
            return probes
        probes = []
        for t in range(1, count + 1):
            n = float(N) * 2.0 ** t
            if n > 4e12:
                break
            a, ap = self.alpha_at(np.array([n, n - 1.0]))
            probes.append(TailProbe(f"n={n:.0f}", math.log(n), float(a), float(ap)))
        return probes


_ALPHA_RE = re.compile(r"^(\w+)(:.*)?$")


def parse_alpha(text: str) -> AlphaSequence:
    """Parse a generator description.

    Grammar: ``linear | power:beta=<r> | sqrt | log:beta=<r> | psum:beta=<r> |
    tower | rsw_b | s1_empty | table:[v1,v2,...]`` with an optional
    ``:step=<r>`` suffix for table.  Numbers may be integers, decimals, or
    fractions like 3/2.
    """
    text = text.strip()
    m = _ALPHA_RE.match(text)
    if text.startswith("table:"):
        rest = text[len("table:"):]
        lm = re.match(r"^\[([^\]]*)\](?::step=([^:]+))?$", rest)
        if not lm:
            raise ValueError(f"bad table syntax {text!r}")
        vals = [Fraction(v.strip()) for v in lm.group(1).split(",") if v.strip()]
        step = Fraction(lm.group(2)) if lm.group(2) else None
        return AlphaSequence.table(vals, step=step)
    if not m:
        raise ValueError(f"bad alpha description {text!r}")
    kind, rest = m.group(1), m.group(2)
    kwargs = {}
    if rest:
        for piece in rest[1:].split(":"):
            key, _, val = piece.partition("=")
            if not val:
                raise ValueError(f"bad parameter {piece!r} in {text!r}")
            kwargs[key] = float(Fraction(val))
    return AlphaSequence(kind, **kwargs)


def default_resolution(seq: AlphaSequence) -> int:
    """Working resolution: towers overflow early, everything else gets 1e4."""
    return 30 if seq.kind == "tower" else 10_000


# -- weights ------------------------------------------------------------------


class WeightSystem:
    """The weight family w_k(n) = exp(-alpha_n / k), handled in log scale."""

    def __init__(self, alpha: AlphaSequence):
        self.alpha = alpha

    def log_w(self, k: int, N: int) -> np.ndarray:
        if k < 1:
            raise ValueError("weight index k must be >= 1")
        return -self.alpha.values_saturated(N) / k

    def w(self, k: int, N: int) -> np.ndarray:
        return np.exp(self.log_w(k, N))


def seminorm(w, k: int, x) -> float:
    """Truncated k-th seminorm sup_{n <= len(x)} w_k(n) |x_n|.

    w may be a WeightSystem or an AlphaSequence.  This is the seminorm of the
    truncation only; whether the tail contributes is a separate question the
    caller must settle (e.g. via membership checks).
    """
    if isinstance(w, AlphaSequence):
        w = WeightSystem(w)
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or len(x) == 0:
        raise ValueError("x must be a nonempty 1-d array")
    lw = w.log_w(k, len(x))
    with np.errstate(divide="ignore"):
        logs = lw + np.log(np.abs(x))
    top = float(np.max(logs))
    return math.exp(top) if top > -np.inf else 0.0


# -- scalar diagnostics ---------------------------------------------------------


def nuclearity_check(
    seq: AlphaSequence,
    N: int | None = None,
    trend_params: TrendParams = DEFAULT_PARAMS,
) -> Verdict:
    """Verdict on log(n)/alpha_n -> 0, the growth condition for nuclearity.

    The space built on alpha is nuclear exactly when this limit is zero, so
    downstream criteria treat this verdict as the nuclearity hypothesis.
    """
    N = N or default_resolution(seq)
    lad = ladder(N)
    alphas = seq.values_saturated(N)[lad - 1]
    with np.errstate(divide="ignore"):
        logs = np.log(np.log(lad)) - np.log(alphas)
    return limit_verdict_zero(
        lad, logs, "log(n)/alpha_n", trend_params,
        extra={"alpha": seq.spec_string(), "N": N},
    )


def v_alpha(
    seq: AlphaSequence,
    N: int | None = None,
    trend_params: TrendParams = DEFAULT_PARAMS,
) -> tuple[float, Verdict]:
    """Observed inf of the gaps alpha_{n+1} - alpha_n, with a positivity verdict.

    A positive gap infimum forces log(n)/alpha_n -> 0 (gaps bounded below make
    alpha grow at least linearly), so `holds` here should always co-occur with
    a nuclearity `holds`; classify_space cross-checks that.
    """
    N = N or default_resolution(seq)
    if N < 2:
        raise ValueError("need at least two terms")
    a = seq.values_saturated(N)
    gaps = np.diff(a)
    if np.any(gaps < 0):
        raise ValueError("alpha must be nondecreasing")
    running_min = np.minimum.accumulate(gaps)
    lad = ladder(N - 1)
    sampled = running_min[lad - 1]
    observed = float(running_min[-1])
    with np.errstate(divide="ignore"):
        logs = np.log(np.maximum(sampled, 0.0))
    v = limit_verdict_positive(
        lad, logs, "running min of alpha gaps", trend_params,
        extra={"alpha": seq.spec_string(), "N": N, "observed_inf": observed},
    )
    return observed, v


def shift_stability_check(
    seq: AlphaSequence,
    N: int | None = None,
    trend_params: TrendParams = DEFAULT_PARAMS,
    use_probes: bool = True,
) -> Verdict:
    """Verdict on limsup alpha_{n+1}/alpha_n < infinity.

    Dense ratios up to N are combined with beyond-N probes: generators whose
    ratio spikes only at sparse block boundaries would otherwise look stable
    at any affordable dense resolution.
    """
    N = N or default_resolution(seq)
    a = seq.values_saturated(N)
    ratios = a[1:] / a[:-1]
    ns = np.arange(2, N + 1)
    logs = np.log(ratios)
    verdict = sup_verdict_bounded(
        ns, logs, "alpha_{n+1}/alpha_n", trend_params,
        extra={"alpha": seq.spec_string(), "N": N,
               "sup_ratio_observed": float(np.max(ratios))},
    )
    if not use_probes:
        return verdict
    probes = seq.tail_probes(N)
    if not probes:
        return verdict
    plogs = np.array([
        math.log(p.alpha / p.alpha_prev) if p.alpha_prev > 0 else np.inf
        for p in probes
    ])
    observed_sup = float(np.max(logs))
    beyond = plogs > observed_sup + trend_params.rise_total
    if np.any(beyond) and verdict.outcome != FAILS:
        # Escalate only when the probe ratios keep growing; a single early
        # transient above the dense sup is not evidence of an unbounded limsup.
        # Only the first few exceeding probes are examined: far probes may sit
        # in the saturated regime where ratios flatten artificially.
        idx = np.flatnonzero(beyond)
        lead = plogs[idx][:10]
        if len(lead) >= 2 and np.all(np.diff(lead) > -1e-12):
            return Verdict(
                FAILS, RISING, verdict.evidence,
                witness=probes[int(idx[0])].label,
                params={**verdict.params,
                        "probe_ratios_log": tuple(float(v) for v in plogs)},
            )
        return Verdict(
            INCONCLUSIVE, verdict.trend, verdict.evidence,
            reason="tail probes exceed the dense ratio sup but do not trend",
            params={**verdict.params,
                    "probe_ratios_log": tuple(float(v) for v in plogs)},
        )
    return verdict


def n_over_alpha_check(
    seq: AlphaSequence,
    N: int | None = None,
    trend_params: TrendParams = DEFAULT_PARAMS,
) -> Verdict:
    """Verdict on n/alpha_n -> 0 (the growth side of basis-shift continuity)."""
    N = N or default_resolution(seq)
    lad = ladder(N)
    alphas = seq.values_saturated(N)[lad - 1]
    logs = np.log(lad) - np.log(alphas)
    return limit_verdict_zero(
        lad, logs, "n/alpha_n", trend_params,
        extra={"alpha": seq.spec_string(), "N": N},
    )


def sk_convergence(
    seq: AlphaSequence,
    k: int,
    s: float,
    N: int = 10_000,
    trend_params: TrendParams = DEFAULT_PARAMS,
    use_probes: bool = True,
    slope_margin: float = 0.02,
) -> Verdict:
    """Verdict on convergence of sum_n exp(alpha_n/k) / n^s.

    Works on the log-terms t(n) = alpha_n/k - s log n.  Divergence is called
    on rising or overflowing terms, on a late surge of window mass along the
    sample ladder, on beyond-N probe terms that dwarf everything seen so far,
    or on a decay exponent that stabilizes clearly below 1.  Convergence is
    called only on a decay exponent clearly above 1.  Near the harmonic edge
    the check separates n*t(n) -> c > 0 (divergent) from slower corrections
    (inconclusive).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if N < 100:
        raise ValueError("series verdicts need N >= 100")
    alphas = seq.values_saturated(N)
    ns = np.arange(1, N + 1, dtype=float)
    lt = alphas / k - s * np.log(ns)
    lad = ladder(N)
    lt_l = lt[lad - 1]
    ev = tuple((int(n), float(v)) for n, v in zip(lad, lt_l))
    info = {
        "quantity": "log term of sum exp(alpha_n/k)/n^s",
        "scale": "log", "alpha": seq.spec_string(), "k": k, "s": s, "N": N,
    }
    w = trend_params.window

    if np.max(lt) > LOG_OVERFLOW:
        witness = int(np.argmax(lt > LOG_OVERFLOW)) + 1
        return Verdict(FAILS, RISING, ev, witness=witness,
                       params={**info, "mode": "term_overflow"})

    tail = lt_l[-w:]
    if len(tail) >= 2 and np.all(np.diff(tail) > 0) \
            and tail[-1] - tail[0] >= trend_params.rise_total:
        return Verdict(FAILS, RISING, ev, witness=int(lad[-1]),
                       params={**info, "mode": "rising_terms"})

    # Window mass along the ladder; a late window dominating everything before
    # it means the tail carries unbounded mass even though each term is small.
    t = np.exp(lt)
    starts = np.concatenate([[0], lad[:-1]])
    mass = np.add.reduceat(t, starts)
    w0 = max(1, len(mass) // 3)
    prior = np.maximum.accumulate(mass)
    for j in range(w0, len(mass)):
        if mass[j] > 5.0 * prior[j - 1] and mass[j] > 1e-12 * float(np.max(mass)):
            return Verdict(
                FAILS, "late_mass", ev, witness=int(starts[j] + 1),
                params={**info, "mode": "late_window_mass",
                        "window_mass": tuple(float(v) for v in mass)},
            )

    if use_probes:
        probes = seq.tail_probes(N)
        if probes:
            pe = np.array([
                min(p.alpha / k, ALPHA_SATURATION) - s * p.log_n for p in probes
            ])
            threshold = max(0.0, float(np.max(lt))) + 10.0
            if np.max(pe) > threshold:
                j = int(np.argmax(pe > threshold))
                return Verdict(
                    FAILS, RISING, ev, witness=probes[j].label,
                    params={**info, "mode": "probe_terms",
                            "probe_log_terms": tuple(float(v) for v in pe)},
                )

    dlog = np.diff(np.log(lad))
    theta = -np.diff(lt_l) / dlog
    ttail = theta[-(w - 1):] if len(theta) >= w - 1 else theta
    if len(ttail) == 0:
        return Verdict(INCONCLUSIVE, "undecided", ev,
                       reason="too few ladder samples", params=info)
    spread = float(np.max(ttail) - np.min(ttail))
    info["decay_exponent"] = float(np.mean(ttail))
    if spread <= slope_margin:
        theta_star = float(np.mean(ttail))
        if theta_star >= 1.0 + slope_margin:
            return Verdict(HOLDS, "power_decay", ev, params=info)
        if theta_star <= 1.0 - slope_margin:
            return Verdict(FAILS, "slow_decay", ev, witness=int(lad[-1]),
                           params={**info, "mode": "decay_exponent_below_1"})
        # n * term stabilizing at a positive level pins divergence; a tail
        # that is flat in spread but steadily drifting could still be a
        # slowly-varying correction on either side of the edge.
        u = lt_l[-w:] + np.log(lad[-w:])
        drift = abs(float(u[-1] - u[0]))
        if float(np.max(u) - np.min(u)) <= trend_params.flat_band \
                and drift <= 0.3 * trend_params.flat_band:
            info["harmonic_level"] = float(math.exp(np.mean(u)))
            return Verdict(FAILS, "harmonic", ev, witness=int(lad[-1]),
                           params={**info, "mode": "n_times_term_stabilizes"})
        return Verdict(
            INCONCLUSIVE, "undecided", ev,
            reason="decay exponent within margin of the harmonic edge",
            params=info,
        )
    if float(np.min(ttail)) >= 1.0 + slope_margin:
        return Verdict(HOLDS, "power_decay", ev, params=info)
    if float(np.max(ttail)) <= 1.0 - slope_margin:
        return Verdict(FAILS, "slow_decay", ev, witness=int(lad[-1]),
                       params={**info, "mode": "decay_exponent_below_1"})
    return Verdict(INCONCLUSIVE, "undecided", ev,
                   reason="decay exponent has not stabilized", params=info)


@dataclass(frozen=True)
class SZeroEstimate:
    """Bracketed infimum of the convergent exponents at level k.

    status is "bracketed_to_tol" when bisection reached the requested width
    and "stopped_on_inconclusive" when a borderline exponent halted it early
    (the bracket is still valid, just wider).
    """

    k: int
    lo: float
    hi: float
    estimate: float
    lo_verdict: Verdict
    hi_verdict: Verdict
    probed: tuple = ()
    status: str = "bracketed_to_tol"


_S_GRID = (1.0, 1.25, 1.5, 2.0, 3.0, 4.5, 7.0, 10.0, 15.0, 22.0, 32.0, 50.0)


def s0_estimate(
    seq: AlphaSequence,
    k: int,
    N: int = 10_000,
    tol: float = 0.05,
    s_cap: float = 50.0,
) -> SZeroEstimate:
    """Bracket the critical exponent s0(k) = inf { s : the k-series converges }.

    Scans a coarse grid for the first convergent exponent, then bisects the
    bracket down to width tol.  Raises SkEmptyError when nothing up to s_cap
    converges (for most gallery members that is the true state of affairs:
    only logarithmic alpha admits any convergent exponent).  Inconclusive
    verdicts during bisection stop the refinement at the last decisive
    bracket rather than guessing.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    probed: list[tuple[float, str]] = []
    lo, lo_v = None, None
    hi, hi_v = None, None
    for s in _S_GRID:
        if s > s_cap:
            break
        v = sk_convergence(seq, k, s, N=N)
        probed.append((s, v.outcome))
        if v.outcome == HOLDS:
            hi, hi_v = s, v
            break
        if v.outcome == FAILS:
            lo, lo_v = s, v
    if hi is None:
        raise SkEmptyError(k, s_cap, tuple(probed))
    if lo is None:
        raise InternalConsistencyError(
            f"series at k={k} converges at s={hi} but the grid found no "
            f"divergent exponent below it; s=1 must always diverge"
        )
    status = "bracketed_to_tol"
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        v = sk_convergence(seq, k, mid, N=N)
        probed.append((mid, v.outcome))
        if v.outcome == HOLDS:
            hi, hi_v = mid, v
        elif v.outcome == FAILS:
            lo, lo_v = mid, v
        else:
            status = "stopped_on_inconclusive"
            break
    return SZeroEstimate(
        k=k, lo=lo, hi=hi, estimate=0.5 * (lo + hi),
        lo_verdict=lo_v, hi_verdict=hi_v, probed=tuple(probed), status=status,
    )
