"""Truncated operator matrices on the weighted sequence space.

The averaging operator sends x to its running means, (1/n)(x_1 + ... + x_n).
Everything else here is built around it: the alternating-binomial involution
that diagonalizes it, its inverse recurrence, the resolvent at points off the
reciprocal-integer set, the weight-scaled tail of the resolvent, and the
exact inverse pair used by the ergodic decomposition.

All matrices are N x N truncations.  Three arithmetic modes are supported:

* "rational": exact Fraction / ComplexRational entries,
* "float": float64 / complex128,
* "logmag": sign plus log-magnitude arrays for real-valued matrices whose
  entries overflow float range (binomials, scaled resolvent tails).

Truncation honesty is tracked rather than hidden: a CoordinateVector carries
the length of its trustworthy prefix, and applying an operator adjusts it by
the operator's prefix_shrink (how many trailing coordinates an application
consumes; 0 for lower-triangular matrices).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

import numpy as np
from scipy.special import gammaln, logsumexp

from .errors import PreconditionError, RepresentationError
from .exact import ComplexRational
from .sequences import AlphaSequence, WeightSystem

MODES = ("rational", "float", "logmag")
STRUCTURES = ("diagonal", "lower", "full")

# Points closer than this to a reciprocal integer (or to zero) are treated as
# sitting on the pole set when building resolvents in float mode.
TOL_SIGMA = 1e-9

# Alternating binomial entries stay exactly representable in float64 only for
# small sizes; beyond this the float mode refuses rather than silently round.
_DELTA_FLOAT_LIMIT = 60

Scalar = Union[int, float, complex, Fraction, ComplexRational]


def _is_exact(v) -> bool:
    return isinstance(v, (int, Fraction, ComplexRational))


def logbinom(n, k) -> np.ndarray:
    """log of the binomial coefficient, vectorized, -inf outside the triangle."""
    n = np.asarray(n, dtype=float)
    k = np.asarray(k, dtype=float)
    out = gammaln(n + 1.0) - gammaln(k + 1.0) - gammaln(n - k + 1.0)
    return np.where((k < 0) | (k > n), -np.inf, out)


class CoordinateVector:
    """A finite coordinate block with a trustworthy-prefix marker.

    values may be floats/complex or exact scalars (Fraction, ComplexRational);
    valid_len says how many leading coordinates are meaningful (truncated
    operator applications can consume trailing ones).  Indexing is 0-based.
    """

    def __init__(self, values, valid_len: int | None = None):
        vals = list(values)
        if any(_is_exact(v) for v in vals) and not any(
            isinstance(v, (float, complex)) for v in vals
        ):
            arr = np.empty(len(vals), dtype=object)
            for i, v in enumerate(vals):
                arr[i] = Fraction(v) if isinstance(v, int) else v
        else:
            arr = np.asarray(vals)
            if arr.dtype.kind not in "fc":
                arr = arr.astype(float)
        self.values = arr
        self.valid_len = len(arr) if valid_len is None else int(valid_len)
        if not 0 <= self.valid_len <= len(arr):
            raise ValueError("valid_len out of range")

    @property
    def exact(self) -> bool:
        return self.values.dtype == object

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_float(self) -> np.ndarray:
        if not self.exact:
            return np.asarray(self.values)
        if any(isinstance(v, ComplexRational) for v in self.values):
            return np.array([complex(v) for v in self.values])
        return np.array([float(v) for v in self.values])

    def prefix(self, n: int) -> "CoordinateVector":
        return CoordinateVector(self.values[:n], min(self.valid_len, n))

    def __repr__(self) -> str:
        return f"CoordinateVector(len={len(self)}, valid={self.valid_len})"


def as_vector(x) -> CoordinateVector:
    return x if isinstance(x, CoordinateVector) else CoordinateVector(x)


def basis_vector(j: int, N: int, exact: bool = True) -> CoordinateVector:
    """The j-th unit coordinate vector (1-based) of length N."""
    if not 1 <= j <= N:
        raise ValueError("basis index out of range")
    if exact:
        vals = [Fraction(0)] * N
        vals[j - 1] = Fraction(1)
    else:
        vals = [0.0] * N
        vals[j - 1] = 1.0
    return CoordinateVector(vals)


class TruncOperator:
    """An N x N matrix truncation with mode, structure, and prefix bookkeeping."""

    def __init__(self, name: str, N: int, entries, mode: str,
                 structure: str = "full", prefix_shrink: int = 0):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if structure not in STRUCTURES:
            raise ValueError(f"unknown structure {structure!r}")
        self.name = name
        self.N = int(N)
        self.mode = mode
        self.structure = structure
        self.prefix_shrink = int(prefix_shrink)
        if mode == "logmag":
            sign, logs = entries
            self._sign = np.asarray(sign, dtype=float)
            self._log = np.asarray(logs, dtype=float)
            if self._sign.shape != (N, N) or self._log.shape != (N, N):
                raise ValueError("logmag entries must be two N x N arrays")
        elif mode == "float":
            self._data = np.asarray(entries)
            if self._data.shape != (N, N):
                raise ValueError("entries must be N x N")
        else:
            self._rows = [list(r) for r in entries]
            if len(self._rows) != N or any(len(r) != N for r in self._rows):
                raise ValueError("entries must be N x N")

    # -- access -----------------------------------------------------------

    def entry(self, n: int, m: int):
        """Entry at row n, column m, 1-based (matching coordinate numbering)."""
        if not (1 <= n <= self.N and 1 <= m <= self.N):
            raise IndexError("entry index out of range")
        if self.mode == "logmag":
            s, L = self._sign[n - 1, m - 1], self._log[n - 1, m - 1]
            if L > 700.0:
                raise RepresentationError("logmag entry exceeds float range")
            return float(s * math.exp(L)) if s != 0 else 0.0
        if self.mode == "float":
            return self._data[n - 1, m - 1]
        return self._rows[n - 1][m - 1]

    def dense(self) -> np.ndarray:
        """Materialize as a numpy array (object-dtype in rational mode)."""
        if self.mode == "float":
            return self._data.copy()
        if self.mode == "rational":
            out = np.empty((self.N, self.N), dtype=object)
            for i, row in enumerate(self._rows):
                out[i, :] = row
            return out
        if np.any(self._log > 700.0):
            raise RepresentationError(
                "logmag matrix has entries beyond float range; keep it in log scale"
            )
        with np.errstate(over="ignore"):
            return self._sign * np.exp(self._log)

    def log_abs(self) -> np.ndarray:
        """log|entries| as a float array (exact entries via float conversion)."""
        if self.mode == "logmag":
            return self._log.copy()
        dense = self.dense()
        if dense.dtype == object:
            dense = np.array([[abs(complex(v)) for v in row] for row in dense])
        with np.errstate(divide="ignore"):
            return np.log(np.abs(dense))

    # -- algebra ----------------------------------------------------------

    def apply(self, x) -> CoordinateVector:
        """Matrix-vector product, tracking the trustworthy prefix."""
        x = as_vector(x)
        if len(x) < self.N:
            raise ValueError(f"vector of length {len(x)} too short for N={self.N}")
        xv = x.values[:self.N]
        out_valid = max(0, min(x.valid_len, self.N) - self.prefix_shrink)
        if self.mode == "float":
            data = self._data
            xf = x.prefix(self.N).as_float()
            return CoordinateVector(data @ xf, out_valid)
        if self.mode == "logmag":
            xf = x.prefix(self.N).as_float()
            if np.iscomplexobj(xf):
                raise RepresentationError("logmag apply supports real vectors only")
            with np.errstate(divide="ignore"):
                lx = np.log(np.abs(xf))
            sx = np.sign(xf)
            terms = self._log + lx[None, :]
            signs = self._sign * sx[None, :]
            res_log, res_sign = logsumexp(terms, axis=1, b=signs, return_sign=True)
            if np.any(res_log > 700.0):
                raise RepresentationError("logmag apply result exceeds float range")
            with np.errstate(over="ignore"):
                return CoordinateVector(res_sign * np.exp(res_log), out_valid)
        if not x.exact:
            return TruncOperator(
                self.name, self.N, self.as_float_entries(), "float",
                self.structure, self.prefix_shrink,
            ).apply(x)
        out = []
        for n in range(self.N):
            row = self._rows[n]
            hi = n + 1 if self.structure in ("lower", "diagonal") else self.N
            lo = n if self.structure == "diagonal" else 0
            acc = None
            for m in range(lo, hi):
                term = row[m] * xv[m]
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else Fraction(0))
        return CoordinateVector(out, out_valid)

    def as_float_entries(self) -> np.ndarray:
        d = self.dense()
        if d.dtype != object:
            return d
        if any(isinstance(v, ComplexRational) for row in self._rows for v in row):
            return np.array([[complex(v) for v in row] for row in self._rows])
        return np.array([[float(v) for v in row] for row in self._rows])

    def compose(self, other: "TruncOperator") -> "TruncOperator":
        """Truncated product self @ other (valid where both truncations agree)."""
        if self.N != other.N:
            raise ValueError("size mismatch")
        if self.mode != other.mode:
            raise ValueError("mode mismatch; convert explicitly first")
        N = self.N
        if self.structure == "diagonal" and other.structure == "diagonal":
            structure = "diagonal"
        elif self.structure in ("lower", "diagonal") \
                and other.structure in ("lower", "diagonal"):
            structure = "lower"
        else:
            structure = "full"
        name = f"{self.name}*{other.name}"
        shrink = self.prefix_shrink + other.prefix_shrink
        if self.mode == "float":
            return TruncOperator(name, N, self._data @ other._data, "float",
                                 structure, shrink)
        if self.mode == "logmag":
            raise RepresentationError(
                "logmag composition not supported; compose in float or rational"
            )
        a, b = self._rows, other._rows
        rows = []
        for n in range(N):
            hi_k = n + 1 if self.structure in ("lower", "diagonal") else N
            row = []
            for m in range(N):
                acc = None
                for k in range(m if structure != "full" else 0, hi_k):
                    av = a[n][k]
                    if av == 0:
                        continue
                    bv = b[k][m]
                    if bv == 0:
                        continue
                    term = av * bv
                    acc = term if acc is None else acc + term
                row.append(acc if acc is not None else Fraction(0))
            rows.append(row)
        return TruncOperator(name, N, rows, "rational", structure, shrink)

    def __matmul__(self, other):
        if isinstance(other, TruncOperator):
            return self.compose(other)
        return self.apply(other)

    def __repr__(self) -> str:
        return (f"TruncOperator({self.name!r}, N={self.N}, mode={self.mode}, "
                f"structure={self.structure}, prefix_shrink={self.prefix_shrink})")


def identity(N: int, mode: str = "rational") -> TruncOperator:
    if mode == "float":
        return TruncOperator("identity", N, np.eye(N), "float", "diagonal")
    rows = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
    return TruncOperator("identity", N, rows, "rational", "diagonal")


def cesaro(N: int, mode: str = "rational") -> TruncOperator:
    """The running-mean matrix: 1/n on row n up to the diagonal."""
    if mode == "float":
        data = np.tril(np.ones((N, N)) / np.arange(1, N + 1)[:, None])
        return TruncOperator("cesaro", N, data, "float", "lower")
    rows = [
        [Fraction(1, n) if m < n else Fraction(0) for m in range(N)]
        for n in range(1, N + 1)
    ]
    return TruncOperator("cesaro", N, rows, "rational", "lower")


def cesaro_apply(x) -> CoordinateVector:
    """Running means of x, without materializing the matrix."""
    x = as_vector(x)
    if x.exact:
        out, acc = [], Fraction(0)
        for n, v in enumerate(x.values, start=1):
            acc = acc + v
            out.append(acc / n)
        return CoordinateVector(out, x.valid_len)
    vals = np.asarray(x.values)
    means = np.cumsum(vals) / np.arange(1, len(vals) + 1)
    return CoordinateVector(means, x.valid_len)


def cesaro_inverse_apply(y) -> CoordinateVector:
    """Inverse of the running-mean map: x_n = n y_n - (n-1) y_{n-1}."""
    y = as_vector(y)
    if y.exact:
        out = []
        prev = Fraction(0)
        for n, v in enumerate(y.values, start=1):
            out.append(n * v - (n - 1) * prev)
            prev = v
        return CoordinateVector(out, y.valid_len)
    vals = np.asarray(y.values)
    ns = np.arange(1, len(vals) + 1)
    shifted = np.concatenate([[0.0], vals[:-1]])
    return CoordinateVector(ns * vals - (ns - 1) * shifted, y.valid_len)


def differentiation_apply(x) -> CoordinateVector:
    """The basis-shift derivative: output_n = n * x_{n+1}.

    Consumes one trailing coordinate, so the result is one shorter and the
    trustworthy prefix shrinks by one.
    """
    x = as_vector(x)
    if len(x) < 2:
        raise ValueError("need at least two coordinates")
    if x.exact:
        out = [n * x.values[n] for n in range(1, len(x))]
        return CoordinateVector(out, max(0, min(x.valid_len, len(x)) - 1))
    vals = np.asarray(x.values)
    ns = np.arange(1, len(vals))
    return CoordinateVector(ns * vals[1:], max(0, min(x.valid_len, len(x)) - 1))


def delta(N: int, mode: str = "rational") -> TruncOperator:
    """The alternating-binomial involution: entry (n, m) is (-1)^(m-1) C(n-1, m-1).

    Composing it with itself gives the identity at every truncation size, and
    conjugating the running-mean matrix by it produces the diagonal of
    reciprocals 1/n.  Float mode is limited to small N where the binomials
    are still exactly representable; logmag mode works at any size.
    """
    if mode == "float":
        if N > _DELTA_FLOAT_LIMIT:
            raise RepresentationError(
                f"float binomials are unreliable beyond N={_DELTA_FLOAT_LIMIT}; "
                f"use rational or logmag mode"
            )
        data = np.zeros((N, N))
        for n in range(1, N + 1):
            for m in range(1, n + 1):
                data[n - 1, m - 1] = (-1) ** (m - 1) * math.comb(n - 1, m - 1)
        return TruncOperator("delta", N, data, "float", "lower")
    if mode == "logmag":
        ns = np.arange(N)[:, None]
        ms = np.arange(N)[None, :]
        logs = logbinom(ns, ms)
        signs = np.where(ms <= ns, (-1.0) ** ms, 0.0)
        signs = np.where(np.isfinite(logs), signs, 0.0)
        return TruncOperator("delta", N, (signs, logs), "logmag", "lower")
    rows = [
        [
            Fraction((-1) ** (m - 1) * math.comb(n - 1, m - 1)) if m <= n else Fraction(0)
            for m in range(1, N + 1)
        ]
        for n in range(1, N + 1)
    ]
    return TruncOperator("delta", N, rows, "rational", "lower")


def delta_eigenvector(m: int, N: int) -> CoordinateVector:
    """The m-th column of the involution: an exact eigenvector candidate.

    The running-mean matrix sends it to 1/m times itself at every truncation
    size at least m.
    """
    if not 1 <= m <= N:
        raise ValueError("need 1 <= m <= N")
    sign = (-1) ** (m - 1)
    vals = [Fraction(sign * math.comb(n - 1, m - 1)) for n in range(1, N + 1)]
    return CoordinateVector(vals)


def _pole_distance(lam_f: complex, N: int) -> float:
    ms = np.arange(1, N + 1, dtype=float)
    return float(min(abs(lam_f), np.min(np.abs(lam_f - 1.0 / ms))))


def _check_not_pole(lam, N: int, tol: float) -> None:
    if isinstance(lam, ComplexRational):
        if lam.is_zero():
            raise PreconditionError("resolvent undefined at 0")
        if lam.is_real():
            r = lam.re
            if r.numerator == 1 and 1 <= r.denominator <= N:
                raise PreconditionError(
                    f"{lam} is a reciprocal integer within the truncation"
                )
        return
    lam_f = complex(lam)
    d = _pole_distance(lam_f, N)
    if d < tol:
        raise PreconditionError(
            f"lambda={lam_f} is within {tol} of the reciprocal-integer set"
        )


def _resolvent_scalars(lam, N: int):
    """Exact diagonal d_n and prefix products P_n = prod_{j<=n} (1 - 1/(lambda j)).

    The resolvent of the running-mean matrix at lambda is diagonal-plus-tail:
    entry (n, n) is 1/(1/n - lambda) and entry (n, m) for m < n is
    -(1/lambda^2) * P_{m-1} / (n P_n).
    """
    one = Fraction(1)
    d = []
    P = [one]
    for n in range(1, N + 1):
        d.append(1 / (one / n - lam))
        P.append(P[-1] * (one - one / (lam * n)))
    return d, P


def resolvent(lam, N: int, mode: str = "float",
              tol: float = TOL_SIGMA) -> TruncOperator:
    """Inverse of (averaging matrix minus lambda), at a non-pole lambda.

    Rational mode takes Fraction or ComplexRational lambda and produces exact
    entries.  Float mode takes any complex lambda at distance tol from the
    pole set {0} union {1/m : m <= N}.  Logmag mode requires real lambda.
    """
    if mode == "rational":
        if isinstance(lam, (int, Fraction)):
            lam = Fraction(lam)
        elif not isinstance(lam, ComplexRational):
            raise ValueError("rational mode needs Fraction or ComplexRational lambda")
        if isinstance(lam, ComplexRational) and lam.is_real():
            lam = lam.re
        _check_not_pole(
            lam if isinstance(lam, ComplexRational) else ComplexRational(lam),
            N, tol,
        )
        d, P = _resolvent_scalars(lam, N)
        inv_l2 = 1 / (lam * lam)
        rows = []
        for n in range(1, N + 1):
            row = []
            for m in range(1, N + 1):
                if m == n:
                    row.append(d[n - 1])
                elif m < n:
                    e_nm = P[m - 1] / (n * P[n])
                    row.append(-inv_l2 * e_nm)
                else:
                    row.append(Fraction(0))
            rows.append(row)
        return TruncOperator(f"resolvent(lambda={lam})", N, rows, "rational", "lower")

    lam_f = complex(lam)
    _check_not_pole(lam_f, N, tol)
    if mode == "float":
        ns = np.arange(1, N + 1, dtype=float)
        d = 1.0 / (1.0 / ns - lam_f)
        factors = 1.0 - 1.0 / (lam_f * ns)
        P = np.concatenate([[1.0 + 0j], np.cumprod(factors)])
        e = P[None, :N] / (ns[:, None] * P[1:][:, None])  # e[n-1, m-1]
        data = -(1.0 / lam_f**2) * e
        data[~np.tri(N, k=-1, dtype=bool)] = 0.0
        np.fill_diagonal(data, d)
        if lam_f.imag == 0:
            data = data.real
        return TruncOperator(f"resolvent(lambda={lam_f})", N, data, "float", "lower")
    if mode == "logmag":
        if lam_f.imag != 0:
            raise RepresentationError("logmag resolvent supports real lambda only")
        lr = lam_f.real
        ns = np.arange(1, N + 1, dtype=float)
        factors = 1.0 - 1.0 / (lr * ns)
        signs_f = np.sign(factors)
        with np.errstate(divide="ignore"):
            logs_f = np.log(np.abs(factors))
        Ls = np.concatenate([[0.0], np.cumsum(logs_f)])
        Ss = np.concatenate([[1.0], np.cumprod(signs_f)])
        log_e = Ls[None, :N] - np.log(ns)[:, None] - Ls[1:][:, None]
        sign_e = Ss[None, :N] * Ss[1:][:, None]
        logs = log_e + math.log(1.0 / lr**2)
        signs = -sign_e
        mask = np.tri(N, k=-1, dtype=bool)
        logs = np.where(mask, logs, -np.inf)
        signs = np.where(mask, signs, 0.0)
        dvals = 1.0 / (1.0 / ns - lr)
        idx = np.arange(N)
        logs[idx, idx] = np.log(np.abs(dvals))
        signs[idx, idx] = np.sign(dvals)
        return TruncOperator(
            f"resolvent(lambda={lr})", N, (signs, logs), "logmag", "lower",
        )
    raise ValueError(f"unknown mode {mode!r}")


def resolvent_tail_logs(lam, N: int) -> tuple[np.ndarray, np.ndarray]:
    """Streaming form of the resolvent tail: log|P| prefix sums.

    Returns (L, logn) with L[j] = sum_{i<=j} log|1 - 1/(lambda i)| for
    j = 0..N, so log|e_nm| = L[m-1] - log(n) - L[n].  This avoids an N x N
    array for the spectral checks, which only need row sums and sampled
    columns.
    """
    lam_f = complex(lam)
    _check_not_pole(lam_f, N, TOL_SIGMA)
    ns = np.arange(1, N + 1, dtype=float)
    with np.errstate(divide="ignore"):
        logs_f = np.log(np.abs(1.0 - 1.0 / (lam_f * ns)))
    L = np.concatenate([[0.0], np.cumsum(logs_f)])
    return L, np.log(ns)


def scaled_e_matrix(lam, k: int, w, N: int, mode: str = "logmag") -> TruncOperator:
    """The weight-scaled resolvent tail: entry (n, m) is w_k(n)/w_{k+1}(m) e_nm.

    This is the part of the resolvent whose continuity on the space is at
    stake; its entries routinely overflow float range, so logmag is the
    default mode.
    """
    if isinstance(w, AlphaSequence):
        w = WeightSystem(w)
    if k < 1:
        raise ValueError("k must be >= 1")
    lam_f = complex(lam)
    L, logn = resolvent_tail_logs(lam_f, N)
    lw_k = w.log_w(k, N)
    lw_k1 = w.log_w(k + 1, N)
    # log of scaled magnitude; sign bookkeeping only matters for real lambda
    logs = (lw_k[:, None] - lw_k1[None, :]) \
        + (L[None, :N] - logn[:, None] - L[1:][:, None])
    mask = np.tri(N, k=-1, dtype=bool)
    logs = np.where(mask, logs, -np.inf)
    if mode == "logmag":
        if lam_f.imag == 0:
            ns = np.arange(1, N + 1, dtype=float)
            signs_f = np.sign(1.0 - 1.0 / (lam_f.real * ns))
            Ss = np.concatenate([[1.0], np.cumprod(signs_f)])
            signs = np.where(mask, Ss[None, :N] * Ss[1:][:, None], 0.0)
        else:
            signs = np.where(mask, 1.0, 0.0)
        return TruncOperator(
            f"scaled_e(lambda={lam},k={k})", N, (signs, logs), "logmag", "lower",
        )
    if mode == "float":
        if np.any(logs[mask] > 700.0):
            raise RepresentationError(
                "scaled tail overflows float range; use logmag mode"
            )
        # recompute with phases for complex lambda
        ns = np.arange(1, N + 1, dtype=float)
        factors = 1.0 - 1.0 / (lam_f * ns)
        P = np.concatenate([[1.0 + 0j], np.cumprod(factors)])
        e = P[None, :N] / (ns[:, None] * P[1:][:, None])
        data = np.exp(lw_k)[:, None] * np.exp(-lw_k1)[None, :] * e
        data = np.where(mask, data, 0.0)
        if lam_f.imag == 0:
            data = data.real
        return TruncOperator(
            f"scaled_e(lambda={lam},k={k})", N, data, "float", "lower",
        )
    raise ValueError("scaled tail supports float and logmag modes")


def a_matrix(N: int) -> TruncOperator:
    """Shifted form of (identity minus averaging): n/(n+1) on the diagonal,
    -1/(n+1) strictly below."""
    rows = []
    for n in range(1, N + 1):
        row = []
        for m in range(1, N + 1):
            if m == n:
                row.append(Fraction(n, n + 1))
            elif m < n:
                row.append(Fraction(-1, n + 1))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return TruncOperator("a_matrix", N, rows, "rational", "lower")


def b_matrix(N: int) -> TruncOperator:
    """Exact inverse of a_matrix at every truncation size: (n+1)/n on the
    diagonal, 1/m strictly below."""
    rows = []
    for n in range(1, N + 1):
        row = []
        for m in range(1, N + 1):
            if m == n:
                row.append(Fraction(n + 1, n))
            elif m < n:
                row.append(Fraction(1, m))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return TruncOperator("b_matrix", N, rows, "rational", "lower")


def dump_csv(op: TruncOperator, stream) -> None:
    """Write the operator as CSV: a comment header, then one line per row.

    Header format: ``# op=<name> N=<N> mode=<mode> prefix_shrink=<s>``.
    Entries use the deterministic scalar forms (p/q, 17-digit floats, a+bi).
    Logmag matrices are converted entrywise and refuse on overflow.
    """
    from .serialize import format_entry

    stream.write(
        f"# op={op.name} N={op.N} mode={op.mode} prefix_shrink={op.prefix_shrink}\n"
    )
    if op.mode == "rational":
        rows = op._rows
    else:
        rows = op.dense()
    for row in rows:
        stream.write(",".join(format_entry(v) for v in row) + "\n")


def max_entry_diff(a: TruncOperator, b: TruncOperator) -> float:
    """Max absolute entry difference, via float conversion."""
    if a.N != b.N:
        raise ValueError("size mismatch")
    da = a.as_float_entries() if a.mode == "rational" else a.dense()
    db = b.as_float_entries() if b.mode == "rational" else b.dense()
    return float(np.max(np.abs(da - db)))


def ops_equal_exact(a: TruncOperator, b: TruncOperator) -> bool:
    """Exact entrywise equality for rational-mode operators."""
    if a.mode != "rational" or b.mode != "rational" or a.N != b.N:
        raise ValueError("exact comparison needs two rational operators of equal size")
    return all(
        va == vb
        for ra, rb in zip(a._rows, b._rows)
        for va, vb in zip(ra, rb)
    )
