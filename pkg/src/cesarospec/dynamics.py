"""Iterates of the averaging operator: powers, kernel form, means, ergodics.

The m-th power of the running-mean map admits an integral kernel built from
Beta-type integrals against f_m(t) = log^(m-1)(1/t)/(m-1)!.  This module
computes iterates both ways (m running-mean passes, and adaptive quadrature
of the kernel), the envelope constants a_m = sup t f_m(t) that control the
convergence of iterates to the mean-ergodic projection, the Cesaro means of
the iterate sequence, and the explicit splitting of a vector into its
projection onto the constants plus a piece reconstructed from the shifted
inverse, which is the finite-truncation shadow of the closed-range property.

Claims here are deliberately modest: iterates converge to x_1 on every
coordinate and the seminorms never expand, but no convergence *rate* is
asserted anywhere because the underlying statements are qualitative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaln

from .errors import InternalConsistencyError, PreconditionError, QuadratureError
from .exact import compare_seminorms
from .operators import (
    CoordinateVector,
    as_vector,
    b_matrix,
    cesaro_apply,
    logbinom,
)
from .sequences import AlphaSequence, WeightSystem, seminorm
from .trend import FAILS, HOLDS, Verdict

__all__ = [
    "CesaroMeansTrace",
    "IterateTrace",
    "QuadSpec",
    "cesaro_means",
    "ergodic_decomposition_check",
    "gm_sup",
    "iterate_limit_check",
    "iterate_via_kernel",
    "kernel_matrix",
    "power_bound_check",
    "power_iterate",
]


@dataclass(frozen=True)
class QuadSpec:
    """Quadrature budget for the kernel integrals."""

    rel_tol: float = 1e-11
    abs_tol: float = 1e-13
    limit: int = 200


@dataclass(frozen=True)
class IterateTrace:
    """Recorded trajectory of m running-mean passes.

    iterates holds (step, coordinate tuple) pairs including step 0; the
    seminorm history holds (step, ((k, p_k value), ...)) when a weight system
    was supplied.  Every iterate keeps the full trustworthy prefix of x0: the
    map is lower triangular and consumes nothing.
    """

    x0: CoordinateVector
    iterates: tuple
    seminorms: tuple
    limit_prediction: complex | float

    def final(self) -> CoordinateVector:
        return CoordinateVector(list(self.iterates[-1][1]), self.x0.valid_len)

    def write_csv(self, stream) -> None:
        """Rows m,n,value,p_k... with the per-step seminorms repeated."""
        from .serialize import format_entry, format_float

        ks: tuple = ()
        if self.seminorms:
            ks = tuple(k for k, _ in self.seminorms[0][1])
        header = "m,n,value" + "".join(f",p_{k}" for k in ks)
        stream.write(header + "\n")
        sem_by_step = {step: dict(vals) for step, vals in self.seminorms}
        for step, coords in self.iterates:
            sems = sem_by_step.get(step, {})
            tail = "".join(f",{format_float(sems[k])}" for k in ks if k in sems)
            for n, v in enumerate(coords, start=1):
                stream.write(f"{step},{n},{format_entry(v)}{tail}\n")


def power_iterate(
    x,
    m: int,
    w: WeightSystem | AlphaSequence | None = None,
    ks: tuple = (1, 2, 3),
) -> IterateTrace:
    """Apply m running-mean passes, recording every intermediate step.

    O(m N) total.  Exact input stays exact; the seminorm history (float) is
    recorded only when a weight system is given.
    """
    if m < 1:
        raise PreconditionError(f"need m >= 1, got {m}")
    x = as_vector(x)
    if len(x) == 0:
        raise PreconditionError("empty vector")

    def record_sem(vec: CoordinateVector):
        if w is None:
            return None
        mags = np.abs(vec.as_float())
        return tuple((k, seminorm(w, k, mags)) for k in ks)

    iterates = [(0, tuple(x.values))]
    sems = []
    s0 = record_sem(x)
    if s0 is not None:
        sems.append((0, s0))
    y = x
    for step in range(1, m + 1):
        y = cesaro_apply(y)
        iterates.append((step, tuple(y.values)))
        s = record_sem(y)
        if s is not None:
            sems.append((step, s))
    return IterateTrace(
        x0=x,
        iterates=tuple(iterates),
        seminorms=tuple(sems),
        limit_prediction=x.values[0],
    )


def _kernel_cell(n: int, j: int, m: int, spec: QuadSpec) -> float:
    """binom(n-1, j-1) * integral_0^inf e^(-ju) (1-e^(-u))^(n-j) u^(m-1)/(m-1)! du.

    The binomial is folded into the integrand in log scale, so the cell value
    is always of moderate size (the rows of the m-th power sum to one).
    """
    logc = float(logbinom(np.array(float(n - 1)), np.array(float(j - 1))))
    lg = gammaln(m)

    def f(u: float) -> float:
        if u <= 0.0:
            return 0.0
        expu = math.exp(-u)
        if expu >= 1.0:
            return 0.0
        log1m = math.log1p(-expu)
        return math.exp(
            logc - j * u + (n - j) * log1m + (m - 1) * math.log(u) - lg
        )

    peak = (m - 1) / j
    log_peak = -j * peak + (m - 1) * math.log(peak) if peak > 0 else 0.0
    U = max(peak, 1.0)
    # push the cutoff until the bare exponential factor is 1e-16 of its peak
    while -j * U + (m - 1) * math.log(U) > log_peak + math.log(1e-16):
        U *= 1.5
    points = [peak] if 0.0 < peak < U else None
    val, abserr = quad(
        f, 0.0, U, limit=spec.limit, epsabs=spec.abs_tol, epsrel=spec.rel_tol,
        points=points,
    )
    budget = max(spec.abs_tol, spec.rel_tol * abs(val)) * 10.0
    if abserr > budget:
        raise QuadratureError(abserr, budget, where=(n, j, m))
    return val


@lru_cache(maxsize=8)
def kernel_matrix(m: int, N: int, spec: QuadSpec = QuadSpec()) -> np.ndarray:
    """Dense lower-triangular kernel of the m-th power on the truncation.

    m = 1 is the analytic shortcut: every Beta integral collapses and row n
    is constantly 1/n, the running-mean matrix itself.
    """
    if m < 1:
        raise PreconditionError(f"need m >= 1, got {m}")
    if N < 1:
        raise PreconditionError(f"need N >= 1, got {N}")
    out = np.zeros((N, N))
    if m == 1:
        for n in range(1, N + 1):
            out[n - 1, :n] = 1.0 / n
        return out
    for n in range(1, N + 1):
        for j in range(1, n + 1):
            out[n - 1, j - 1] = _kernel_cell(n, j, m, spec)
    return out


def iterate_via_kernel(x, m: int, spec: QuadSpec = QuadSpec()) -> CoordinateVector:
    """Evaluate the m-th iterate through the integral kernel (float only)."""
    if m < 1:
        raise PreconditionError(f"need m >= 1, got {m}")
    x = as_vector(x)
    K = kernel_matrix(m, len(x), spec)
    return CoordinateVector(K @ x.as_float(), x.valid_len)


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(f, lo: float, hi: float, iters: int = 200) -> float:
    """Golden-section maximum of a unimodal f on [lo, hi]."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
        if b - a < 1e-14:
            break
    t = 0.5 * (a + b)
    return max(f(t), fc, fd)


def gm_sup(m: int, method: str = "both") -> float:
    """a_m = sup over (0, 1] of t log^(m-1)(1/t) / (m-1)!.

    Closed form ((m-1)/e)^(m-1)/(m-1)! with the maximum at t = e^-(m-1);
    method "both" (default) also maximizes numerically by golden section and
    insists the two agree to 1e-10.  These constants decrease to zero, which
    is what drives iterates to the projection uniformly on bounded sets.
    """
    if m < 1:
        raise PreconditionError(f"need m >= 1, got {m}")
    if method not in ("both", "closed", "numeric"):
        raise ValueError(f"unknown method {method!r}")

    if m == 1:
        closed = 1.0
    else:
        closed = math.exp((m - 1) * (math.log(m - 1.0) - 1.0) - gammaln(m))
    if method == "closed":
        return closed

    lg = gammaln(m)

    def g(t: float) -> float:
        if t <= 0.0 or t > 1.0:
            return 0.0
        if m == 1:
            return t
        if t == 1.0:
            return 0.0
        return math.exp(math.log(t) + (m - 1) * math.log(-math.log(t)) - lg)

    numeric = _golden_max(g, 1e-12, 1.0)
    if method == "numeric":
        return numeric
    if abs(closed - numeric) > 1e-10:
        raise InternalConsistencyError(
            f"a_{m}: closed form {closed!r} vs numeric maximum {numeric!r}"
        )
    return closed


@dataclass(frozen=True)
class CesaroMeansTrace:
    """Running averages T_n = (1/n) sum_{j<=n} of the first n iterates.

    distances records the seminorm gap to the predicted ergodic limit, the
    constant vector at height x_1, per recorded n and weight index.
    """

    x0: CoordinateVector
    means: tuple
    distances: tuple
    limit_prediction: complex | float


def cesaro_means(
    x,
    nmax: int,
    w: WeightSystem | AlphaSequence | None = None,
    ks: tuple = (1, 2, 3),
) -> CesaroMeansTrace:
    """Incrementally accumulate the first nmax averaged iterates."""
    if nmax < 1:
        raise PreconditionError(f"need nmax >= 1, got {nmax}")
    x = as_vector(x)
    if len(x) == 0:
        raise PreconditionError("empty vector")
    limit = x.values[0]
    means = []
    distances = []
    y = x
    acc: CoordinateVector | None = None
    for j in range(1, nmax + 1):
        y = cesaro_apply(y)
        if acc is None:
            acc = y
        else:
            acc = CoordinateVector(
                [a + b for a, b in zip(acc.values, y.values)]
                if y.exact else np.asarray(acc.values) + np.asarray(y.values),
                y.valid_len,
            )
        tj = CoordinateVector(
            [v / j for v in acc.values] if acc.exact
            else np.asarray(acc.values) / j,
            acc.valid_len,
        )
        means.append((j, tuple(tj.values)))
        if w is not None:
            diff = np.abs(tj.as_float().astype(complex) - complex(limit))
            distances.append(
                (j, tuple((k, seminorm(w, k, diff)) for k in ks))
            )
    return CesaroMeansTrace(
        x0=x, means=tuple(means), distances=tuple(distances),
        limit_prediction=limit,
    )


def power_bound_check(
    w: WeightSystem | AlphaSequence,
    x,
    K: int = 5,
    M: int = 50,
    mode: str = "float",
    tol_float: float = 1e-12,
) -> Verdict:
    """Seminorm contraction p_k(iterate) <= p_k(x) for k <= K, m <= M.

    Float mode allows a relative slack of tol_float; rational mode compares
    exactly (weighted magnitudes against exponentials decided by interval
    arithmetic) and requires a generator with exact rational values.
    """
    if K < 1 or M < 1:
        raise PreconditionError("need K >= 1 and M >= 1")
    if mode not in ("float", "rational"):
        raise ValueError(f"unknown mode {mode!r}")
    x = as_vector(x)
    seq = w.alpha if isinstance(w, WeightSystem) else w
    if not isinstance(seq, AlphaSequence):
        raise PreconditionError("need a weight system or generator")

    evidence = []
    if mode == "rational":
        alphas = seq.exact_values(len(x))
        if alphas is None:
            raise PreconditionError(
                f"generator {seq.spec_string()} has no exact rational values"
            )
        if not x.exact:
            raise PreconditionError("rational mode needs an exact vector")
        y = x
        for m in range(1, M + 1):
            y = cesaro_apply(y)
            for k in range(1, K + 1):
                sign = compare_seminorms(alphas, k, list(y.values),
                                         list(x.values))
                if sign > 0:
                    return Verdict(
                        FAILS, "expansion", tuple(evidence),
                        witness={"k": k, "m": m},
                        params={"alpha": seq.spec_string(), "K": K, "M": M,
                                "mode": mode},
                    )
            evidence.append((m, 0.0))
        return Verdict(HOLDS, "contraction", tuple(evidence),
                       params={"alpha": seq.spec_string(), "K": K, "M": M,
                               "mode": mode})

    ws = w if isinstance(w, WeightSystem) else WeightSystem(w)
    xf = np.abs(x.as_float())
    base = {k: seminorm(ws, k, xf) for k in range(1, K + 1)}
    y = x
    worst = 0.0
    for m in range(1, M + 1):
        y = cesaro_apply(y)
        yf = np.abs(y.as_float())
        for k in range(1, K + 1):
            pk = seminorm(ws, k, yf)
            slack = pk - base[k] * (1.0 + tol_float)
            worst = max(worst, slack)
            if slack > 0.0:
                return Verdict(
                    FAILS, "expansion", tuple(evidence),
                    witness={"k": k, "m": m, "p_k": pk, "bound": base[k]},
                    params={"alpha": seq.spec_string(), "K": K, "M": M,
                            "mode": mode, "tol": tol_float},
                )
        evidence.append((m, worst))
    return Verdict(HOLDS, "contraction", tuple(evidence),
                   params={"alpha": seq.spec_string(), "K": K, "M": M,
                           "mode": mode, "tol": tol_float})


def iterate_limit_check(
    x,
    tol: float = 1e-6,
    m_cap: int = 256,
) -> Verdict:
    """Every coordinate of the iterates eventually sits within tol of x_1.

    Records the first step at which each coordinate enters the tol-band and
    stays there is not required (no rate or monotonicity is claimed); fails
    only if some coordinate has not entered the band by m_cap.
    """
    x = as_vector(x)
    xf = x.as_float().astype(complex)
    limit = xf[0]
    n = len(xf)
    first_entry = np.full(n, -1, dtype=np.int64)
    y = xf.copy()
    close0 = np.abs(y - limit) < tol
    first_entry[close0] = 0
    m = 0
    while m < m_cap and np.any(first_entry < 0):
        m += 1
        y = np.cumsum(y) / np.arange(1, n + 1)
        newly = (first_entry < 0) & (np.abs(y - limit) < tol)
        first_entry[newly] = m
    evidence = tuple((i + 1, int(first_entry[i])) for i in range(n))
    if np.any(first_entry < 0):
        bad = int(np.argmax(first_entry < 0)) + 1
        return Verdict(FAILS, "no_entry", evidence,
                       witness={"n": bad, "m_cap": m_cap, "tol": tol},
                       params={"tol": tol, "m_cap": m_cap})
    return Verdict(HOLDS, "entered_band", evidence,
                   params={"tol": tol, "m_cap": m_cap,
                           "max_steps": int(np.max(first_entry))})


def ergodic_decomposition_check(
    seq: AlphaSequence,
    x,
    N: int | None = None,
    tol_float: float = 1e-12,
) -> Verdict:
    """Split x into x_1 * ones + z and reconstruct z from the range of (I - C).

    z has first coordinate zero; shifting it and applying the exact inverse
    of the shifted difference matrix produces v with (I - C) v = z on every
    truncation coordinate.  Exact input is verified with zero tolerance,
    float input against tol_float; a mismatch in exact mode is an internal
    error because the construction is an identity, not an approximation.
    """
    x = as_vector(x)
    N = N or len(x)
    if N < 2:
        raise PreconditionError("need N >= 2")
    if len(x) < N:
        raise PreconditionError(f"vector of length {len(x)} too short for N={N}")
    x = x.prefix(N)

    if x.exact:
        one = x.values[0]
        z = [v - one for v in x.values]
        shifted = CoordinateVector(z[1:], N - 1)
        u = b_matrix(N - 1).apply(shifted)
        zero = u.values[0] * 0
        v = CoordinateVector([zero] + list(u.values), N)
        cv = cesaro_apply(v)
        residual = [v.values[i] - cv.values[i] - z[i] for i in range(N)]
        if any(r != 0 for r in residual):
            raise InternalConsistencyError(
                "exact ergodic reconstruction left a nonzero residual"
            )
        return Verdict(
            HOLDS, "exact_identity", ((N, 0.0),),
            params={"alpha": seq.spec_string(), "N": N, "mode": "rational"},
        )

    xf = x.as_float()
    z = xf - xf[0]
    u = b_matrix(N - 1).apply(CoordinateVector(z[1:], N - 1))
    v = np.concatenate([[0.0], u.as_float()])
    resid = v - (np.cumsum(v) / np.arange(1, N + 1)) - z
    worst = float(np.max(np.abs(resid)))
    scale = max(1.0, float(np.max(np.abs(z))))
    if worst > tol_float * scale:
        bad = int(np.argmax(np.abs(resid))) + 1
        return Verdict(
            FAILS, "residual", ((N, worst),),
            witness={"n": bad, "residual": worst},
            params={"alpha": seq.spec_string(), "N": N, "mode": "float",
                    "tol": tol_float},
        )
    return Verdict(
        HOLDS, "residual_below_tol", ((N, worst),),
        params={"alpha": seq.spec_string(), "N": N, "mode": "float",
                "tol": tol_float},
    )
