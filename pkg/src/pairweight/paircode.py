"""Two-nonzero reducible cyclic codes under the symbol-pair metric.

The code of parameters (p, s, m, h, e) lives over GF(q), q = p^s, inside
GF(r), r = q^m.  With alpha the primitive element of GF(r),
g = alpha^((q-1)/h) and beta = alpha^((r-1)/e), the codeword attached to a
pair (a, b) of GF(r) elements is

    c(a, b)_i = Tr(a g^i + b (beta g)^i),   i = 0 .. n-1,  n = h(r-1)/(q-1),

with Tr the trace onto GF(q).  The symbol-pair weight of a word counts the
cyclically adjacent coordinate pairs that are not (0, 0); writing T(a, b) for
the number of adjacent zero pairs gives w_p = n - T.

Exhaustive enumeration exploits the factorisation
a g^i + b (beta g)^i = g^i (a + beta^(i mod e) b): a codeword's zero pattern
is determined by e field elements and the trace-zero indicator along e
arithmetic progressions of exponents.  The engine walks all r^2 pairs (a, b)
in vectorised batches of r and can partition the outer loop across forked
workers; per-worker histograms merge by exact integer addition, so results
are independent of the worker count.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import BudgetError, ParameterError
from .field import DEFAULT_TABLE_CAP, FieldCtx, FieldElement, ZERO, build_field, is_prime

DEFAULT_BUDGET = 1 << 32


class Regime(Enum):
    """Which closed-form weight results apply to a parameter set.

    COPRIME         m > 2 and gcd(m, e(q-1)/h) = 1: full three-weight
                    distribution known.
    QUADRATIC_ODD   e = 2, gcd(m, 2(q-1)/h) = 2, (q-1)/h odd: candidate
                    weight set known; full distribution known for m = 2.
    QUADRATIC_EVEN  as above with (q-1)/h even.
    OTHER           no closed form implemented.
    """

    COPRIME = "coprime"
    QUADRATIC_ODD = "quadratic-odd"
    QUADRATIC_EVEN = "quadratic-even"
    OTHER = "other"


@dataclass(frozen=True)
class CodeParams:
    """Validated parameters and derived data for one code. Immutable."""

    p: int
    s: int
    m: int
    h: int
    e: int
    q: int
    r: int
    n: int
    ctx: FieldCtx
    g: FieldElement
    beta: FieldElement
    regime: Regime
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def label(self) -> str:
        return f"(q={self.q}, m={self.m}, h={self.h}, e={self.e})"


def make_params(
    p: int, s: int, m: int, h: int, e: int, table_cap: int = DEFAULT_TABLE_CAP
) -> CodeParams:
    """Validate (p, s, m, h, e), build the ambient field, classify the regime.

    Every violated constraint is reported by name in a single ParameterError.
    """
    violations = []
    if not is_prime(p):
        violations.append(f"p must be prime (got {p})")
    for name, val in (("s", s), ("m", m), ("h", h)):
        if val < 1:
            violations.append(f"{name} must be >= 1 (got {val})")
    if e <= 1:
        violations.append(f"e must be > 1 (got {e})")
    if violations:
        raise ParameterError(violations)
    q = p**s
    if h % e != 0:
        violations.append(f"e must divide h (e={e}, h={h})")
    if (q - 1) % h != 0:
        violations.append(f"h must divide q-1 (h={h}, q-1={q - 1})")
    if violations:
        raise ParameterError(violations)
    ctx = build_field(p, s * m, table_cap=table_cap)
    r = ctx.r
    n = h * (r - 1) // (q - 1)
    g = ctx.element((q - 1) // h)
    beta = ctx.element((r - 1) // e)

    if m > 2 and math.gcd(m, e * (q - 1) // h) == 1:
        regime = Regime.COPRIME
    elif e == 2 and math.gcd(m, 2 * (q - 1) // h) == 2:
        regime = (
            Regime.QUADRATIC_ODD
            if ((q - 1) // h) % 2 == 1
            else Regime.QUADRATIC_EVEN
        )
    else:
        regime = Regime.OTHER

    params = CodeParams(
        p=p, s=s, m=m, h=h, e=e, q=q, r=r, n=n,
        ctx=ctx, g=g, beta=beta, regime=regime,
    )
    # both follow from the divisibility constraints; cheap sanity
    assert math.gcd(r - 1, g.exp) == (r - 1) // n  # ord(g) = n
    assert math.gcd(r - 1, beta.exp) == (r - 1) // e  # ord(beta) = e
    return params


@dataclass(frozen=True)
class Codeword:
    """A length-n word over the subfield GF(q), symbols carried as GF(r)
    elements known to lie in GF(q)."""

    symbols: tuple[FieldElement, ...]

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class WeightDistribution:
    """Exact weight -> count histogram over all r^2 codeword pairs."""

    counts: dict[int, int]
    total: int

    def __post_init__(self):
        if sum(self.counts.values()) != self.total:
            raise ValueError("distribution counts do not sum to the total")
        if any(c <= 0 for c in self.counts.values()):
            raise ValueError("distribution contains non-positive counts")

    @property
    def support(self) -> list[int]:
        return sorted(self.counts)

    def min_nonzero_weight(self) -> int:
        return min(w for w in self.counts if w > 0)

    def as_pairs(self) -> list[list[int]]:
        return [[w, self.counts[w]] for w in self.support]

    def enumerator(self, var: str = "z") -> str:
        """Polynomial rendering, e.g. '1 + 52z^18 + 104z^21 + 572z^24'."""
        terms = []
        for w in self.support:
            c = self.counts[w]
            terms.append(str(c) if w == 0 else f"{c}{var}^{w}")
        return " + ".join(terms)


# ---------------------------------------------------------------------------
# scalar operations


def _power_seqs(params: CodeParams) -> tuple[list[FieldElement], list[FieldElement]]:
    seqs = params._cache.get("powers")
    if seqs is None:
        ctx = params.ctx
        gpow, bgpow = [], []
        x, y = ctx.one, ctx.one
        bg = ctx.mul(params.beta, params.g)
        for _ in range(params.n):
            gpow.append(x)
            bgpow.append(y)
            x = ctx.mul(x, params.g)
            y = ctx.mul(y, bg)
        seqs = (gpow, bgpow)
        params._cache["powers"] = seqs
    return seqs


def codeword(params: CodeParams, a: FieldElement, b: FieldElement) -> Codeword:
    """c(a, b), evaluated symbol by symbol through the trace table."""
    ctx = params.ctx
    gpow, bgpow = _power_seqs(params)
    tr = ctx.trace_table(params.s)
    symbols = tuple(
        ctx.at_index(tr[ctx.index(ctx.add(ctx.mul(a, gi), ctx.mul(b, bgi)))])
        for gi, bgi in zip(gpow, bgpow)
    )
    return Codeword(symbols)


def hamming_weight(c: Codeword) -> int:
    return sum(1 for x in c.symbols if not x.is_zero)


def symbol_pair_weight(c: Codeword) -> int:
    """Cyclic count of adjacent coordinate pairs that are not (0, 0)."""
    n = len(c.symbols)
    if n < 2:
        raise ParameterError("symbol-pair weight needs length >= 2")
    z = [x.is_zero for x in c.symbols]
    return sum(1 for i in range(n) if not (z[i] and z[(i + 1) % n]))


def t_count(params: CodeParams, a: FieldElement, b: FieldElement) -> int:
    """Number of cyclically adjacent zero pairs of c(a, b).

    Uses the slot factorisation g^i (a + beta^(i mod e) b) rather than the
    symbol construction, so it is an independent route to w_p = n - T.
    """
    ctx = params.ctx
    n, e = params.n, params.e
    n1 = params.r - 1
    gstep = params.g.exp
    tr0 = ctx.trace_zero_exponents(params.s)
    cs = [ctx.add(a, ctx.mul(ctx.pow(params.beta, j), b)) for j in range(e)]

    def zero_at(i: int) -> bool:
        c = cs[i % e]
        return True if c.is_zero else bool(tr0[(c.exp + gstep * i) % n1])

    return sum(1 for i in range(n) if zero_at(i) and zero_at((i + 1) % n))


def is_mds_symbol_pair(n: int, dim: int, d_p: int, q: int) -> bool:
    """Equality in the symbol-pair Singleton bound M <= q^(n - d_p + 2)."""
    if not 2 <= d_p <= n:
        raise ParameterError(f"d_p must satisfy 2 <= d_p <= n (d_p={d_p}, n={n})")
    return dim == n - d_p + 2


# ---------------------------------------------------------------------------
# exhaustive enumeration engine


class _Engine:
    """Vectorised state for walking all r^2 pairs (a, b) in batches of r."""

    def __init__(self, params: CodeParams, punctured: bool):
        ctx = params.ctx
        r, n, e = params.r, params.n, params.e
        n1 = r - 1
        self.params = params
        self.punctured = punctured
        self.n = n
        self.n2 = n // 2
        tr0 = ctx.trace_zero_exponents(params.s)
        self.tr0x2 = np.concatenate([tr0, tr0])
        self.add_table = ctx.add_table()
        self.gstep = params.g.exp
        estep = params.beta.exp
        # index of beta^j * b for every b, one row per slot j
        bidx = np.arange(r, dtype=np.int64)
        bexp = bidx[1:] - 1
        self.beta_mul = np.zeros((e, r), dtype=np.int32)
        for j in range(e):
            self.beta_mul[j, 1:] = (bexp + j * estep) % n1 + 1
        self.slots = [np.arange(j, n, e) for j in range(e)]
        self.phases = [(self.gstep * cols) % n1 for cols in self.slots]
        # trace-zero indicator in index encoding, for the direct route
        self.tr0_idx = np.zeros(r, dtype=bool)
        self.tr0_idx[0] = True
        self.tr0_idx[1:] = tr0

    def zero_pattern(self, a_idx: int) -> np.ndarray:
        """bool[r, n]: row b is the zero indicator of c(a, b)."""
        Z = np.empty((self.params.r, self.n), dtype=bool)
        for j in range(self.params.e):
            cj = self.add_table[a_idx, self.beta_mul[j]]
            block = self.tr0x2[(cj[:, None] - 1) + self.phases[j][None, :]]
            block[cj == 0, :] = True
            Z[:, self.slots[j]] = block
        return Z

    def zero_pattern_direct(self, a_idx: int) -> np.ndarray:
        """Same indicator via termwise addition of the two power sequences."""
        params = self.params
        r, n, n1 = params.r, self.n, params.r - 1
        cache = params._cache
        key = "direct_bidx"
        B = cache.get(key)
        if B is None:
            i = np.arange(n, dtype=np.int64)
            gexp = (self.gstep * i) % n1
            bgexp = ((self.gstep + params.beta.exp) * i) % n1
            B = np.zeros((r, n), dtype=np.int32)
            bexp = np.arange(r - 1, dtype=np.int64)
            B[1:, :] = (bexp[:, None] + bgexp[None, :]) % n1 + 1
            A = np.zeros((r, n), dtype=np.int32)
            A[1:, :] = (bexp[:, None] + gexp[None, :]) % n1 + 1
            cache[key] = B
            cache["direct_aidx"] = A
        A = cache["direct_aidx"]
        U = self.add_table[A[a_idx][None, :], B]
        return self.tr0_idx[U]

    @staticmethod
    def _adjacent_zero_pairs(Z: np.ndarray) -> np.ndarray:
        return np.count_nonzero(Z & np.roll(Z, -1, axis=1), axis=1)

    def reduce_range(self, a_lo: int, a_hi: int) -> dict:
        """Histograms and property violations over a in [a_lo, a_hi)."""
        n, n2 = self.n, self.n2
        t_hist = np.zeros(n + 1, dtype=np.int64)
        zero_hist = np.zeros(n + 1, dtype=np.int64)
        sandwich_bad = 0
        tp_hist = np.zeros(n2 + 1, dtype=np.int64) if self.punctured else None
        halving_bad = 0
        for a_idx in range(a_lo, a_hi):
            Z = self.zero_pattern(a_idx)
            T = self._adjacent_zero_pairs(Z)
            zeros = np.count_nonzero(Z, axis=1)
            t_hist += np.bincount(T, minlength=n + 1)
            zero_hist += np.bincount(zeros, minlength=n + 1)
            wh = n - zeros
            wp = n - T
            mid = (wh > 0) & (wh < n)
            sandwich_bad += int(np.count_nonzero((wp[mid] < wh[mid] + 1) | (wp[mid] > 2 * wh[mid])))
            sandwich_bad += int(np.count_nonzero((wh == 0) & (wp != 0)))
            sandwich_bad += int(np.count_nonzero((wh == n) & (wp != n)))
            if self.punctured:
                Zp = Z[:, :n2]
                Tp = self._adjacent_zero_pairs(Zp)
                tp_hist += np.bincount(Tp, minlength=n2 + 1)
                halving_bad += int(np.count_nonzero((n2 - Tp) * 2 != wp))
        out = {
            "t": t_hist,
            "zeros": zero_hist,
            "sandwich_bad": sandwich_bad,
        }
        if self.punctured:
            out["tp"] = tp_hist
            out["halving_bad"] = halving_bad
        return out

    def identity_violations(self, a_lo: int, a_hi: int) -> int:
        """Pairs where the direct and factorised routes disagree on w_p + T = n."""
        bad = 0
        n = self.n
        for a_idx in range(a_lo, a_hi):
            T = self._adjacent_zero_pairs(self.zero_pattern(a_idx))
            Zd = self.zero_pattern_direct(a_idx)
            wp = n - self._adjacent_zero_pairs(Zd)
            bad += int(np.count_nonzero(wp + T != n))
        return bad


def _check_budget(params: CodeParams, budget: int) -> None:
    required = params.r * params.r * params.n
    if required > budget:
        raise BudgetError(
            f"enumeration of code {params.label()} needs r^2*n symbol operations",
            required=required,
            budget=budget,
        )


_WORKER_ENGINE: _Engine | None = None


def _worker_task(bounds):
    return _WORKER_ENGINE.reduce_range(*bounds)


def _merge(parts: list[dict]) -> dict:
    out = dict(parts[0])
    for part in parts[1:]:
        for key, val in part.items():
            out[key] = out[key] + val
    return out


@dataclass(frozen=True)
class EnumerationSummary:
    """Joint result of one exhaustive pass over all r^2 pairs."""

    params: CodeParams
    t_counts: dict[int, int]
    pair: WeightDistribution
    hamming: WeightDistribution
    sandwich_violations: int
    punctured_pair: WeightDistribution | None = None
    punctured_t_counts: dict[int, int] | None = None
    halving_violations: int | None = None


def _hist_to_counts(hist: np.ndarray) -> dict[int, int]:
    return {int(i): int(c) for i, c in enumerate(hist) if c}


def enumerate_code(
    params: CodeParams,
    workers: int | None = 1,
    budget: int = DEFAULT_BUDGET,
    punctured: bool = False,
) -> EnumerationSummary:
    """Exhaustively enumerate all r^2 pairs (a, b) and histogram the weights.

    ``workers`` > 1 partitions the outer loop over forked processes; the
    merged histograms do not depend on the partitioning.
    """
    _check_budget(params, budget)
    engine = _Engine(params, punctured=punctured)
    r = params.r
    if workers is None:
        workers = os.cpu_count() or 1
    workers = max(1, min(workers, r))
    if workers == 1:
        merged = engine.reduce_range(0, r)
    else:
        import multiprocessing as mp

        try:
            mp_ctx = mp.get_context("fork")
        except ValueError:  # platform without fork: stay serial
            merged = engine.reduce_range(0, r)
        else:
            global _WORKER_ENGINE
            chunks = []
            step = max(1, -(-r // (workers * 4)))
            for lo in range(0, r, step):
                chunks.append((lo, min(r, lo + step)))
            _WORKER_ENGINE = engine
            try:
                with mp_ctx.Pool(processes=workers) as pool:
                    merged = _merge(pool.map(_worker_task, chunks))
            finally:
                _WORKER_ENGINE = None

    n, n2 = params.n, params.n // 2
    t_counts = _hist_to_counts(merged["t"])
    pair = WeightDistribution(
        counts={n - t: c for t, c in t_counts.items()}, total=r * r
    )
    zero_counts = _hist_to_counts(merged["zeros"])
    hamming = WeightDistribution(
        counts={n - z: c for z, c in zero_counts.items()}, total=r * r
    )
    summary = {
        "params": params,
        "t_counts": t_counts,
        "pair": pair,
        "hamming": hamming,
        "sandwich_violations": int(merged["sandwich_bad"]),
    }
    if punctured:
        tp_counts = _hist_to_counts(merged["tp"])
        summary["punctured_t_counts"] = tp_counts
        summary["punctured_pair"] = WeightDistribution(
            counts={n2 - t: c for t, c in tp_counts.items()}, total=r * r
        )
        summary["halving_violations"] = int(merged["halving_bad"])
    return EnumerationSummary(**summary)


def check_pair_identity(
    params: CodeParams, budget: int = DEFAULT_BUDGET
) -> int:
    """Violations of w_p = n - T over all r^2 pairs, with w_p and T computed
    by independent routes (termwise addition vs slot factorisation)."""
    _check_budget(params, budget)
    engine = _Engine(params, punctured=False)
    return engine.identity_violations(0, params.r)


# ---------------------------------------------------------------------------
# public distribution operations


def t_value_distribution(
    params: CodeParams, workers: int | None = 1, budget: int = DEFAULT_BUDGET
) -> dict[int, int]:
    """Exact histogram of T(a, b) over all r^2 pairs, including (0, 0)."""
    return enumerate_code(params, workers=workers, budget=budget).t_counts


def pair_weight_distribution(
    params: CodeParams, workers: int | None = 1, budget: int = DEFAULT_BUDGET
) -> WeightDistribution:
    """Exact symbol-pair weight distribution over all r^2 pairs."""
    return enumerate_code(params, workers=workers, budget=budget).pair


def hamming_weight_distribution(
    params: CodeParams, workers: int | None = 1, budget: int = DEFAULT_BUDGET
) -> WeightDistribution:
    """Exact Hamming weight distribution over all r^2 pairs."""
    return enumerate_code(params, workers=workers, budget=budget).hamming


def dimension_from_distribution(params: CodeParams, dist: WeightDistribution) -> int:
    """log_q of the number of distinct codewords.

    The pair map is GF(q)-linear, so the image size is r^2 divided by the
    number of pairs mapping to the zero codeword.
    """
    kernel = dist.counts.get(0, 0)
    if kernel < 1 or (params.r * params.r) % kernel != 0:
        raise RuntimeError("zero-codeword count is not a subspace size")
    size = params.r * params.r // kernel
    dim, acc = 0, 1
    while acc < size:
        acc *= params.q
        dim += 1
    if acc != size:
        raise RuntimeError("codeword count is not a power of q")
    return dim


def dimension(
    params: CodeParams, workers: int | None = 1, budget: int = DEFAULT_BUDGET
) -> int:
    """Dimension over GF(q), measured by exhaustive enumeration."""
    return dimension_from_distribution(
        params, hamming_weight_distribution(params, workers=workers, budget=budget)
    )


# ---------------------------------------------------------------------------
# puncturing (first half of the coordinates)


@dataclass(frozen=True)
class PuncturedCode:
    """Handle for the half-length code keeping coordinates 0 .. n/2 - 1.

    Exists only for e = 2, q odd and n = 0 (mod 4), where the second half of
    every codeword is the negation of the first half.
    """

    parent: CodeParams
    n: int

    def codeword(self, a: FieldElement, b: FieldElement) -> Codeword:
        full = codeword(self.parent, a, b)
        return Codeword(full.symbols[: self.n])

    def enumerate(
        self, workers: int | None = 1, budget: int = DEFAULT_BUDGET
    ) -> EnumerationSummary:
        return enumerate_code(
            self.parent, workers=workers, budget=budget, punctured=True
        )

    def pair_weight_distribution(
        self, workers: int | None = 1, budget: int = DEFAULT_BUDGET
    ) -> WeightDistribution:
        return self.enumerate(workers=workers, budget=budget).punctured_pair


def puncture_half(params: CodeParams) -> PuncturedCode:
    """Construct the half-length punctured code, after validating the
    antipodal identity c_(i + n/2) = -c_i on a sample of codewords."""
    violations = []
    if params.e != 2:
        violations.append(f"puncturing requires e = 2 (got e={params.e})")
    if params.q % 2 == 0:
        violations.append("puncturing requires odd q")
    if params.n % 4 != 0:
        violations.append(f"puncturing requires n = 0 (mod 4) (n={params.n})")
    if violations:
        raise ParameterError(violations)
    ctx = params.ctx
    n2 = params.n // 2
    sample = [
        (ctx.one, ZERO),
        (ZERO, ctx.one),
        (ctx.alpha, ctx.element(2)),
        (ctx.element(3), ctx.neg(ctx.alpha)),
    ]
    for a, b in sample:
        full = codeword(params, a, b)
        for i in range(n2):
            if full.symbols[i + n2] != ctx.neg(full.symbols[i]):
                raise RuntimeError("antipodal identity failed; cannot puncture")
    return PuncturedCode(parent=params, n=n2)
