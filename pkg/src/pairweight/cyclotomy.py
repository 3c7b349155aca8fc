"""Cyclotomic classes, cyclotomic numbers and Gaussian periods.

For N dividing r-1, the cyclotomic class of index i is the coset
alpha^i <alpha^N> of the index-N subgroup of the multiplicative group, so
class membership is exponent arithmetic modulo N.  Cyclotomic numbers count
|(1 + C_i) /\\ C_j| and are evaluated exactly from the field's Zech table;
the generalized variant mixes two orders l (for the shifted class) and f
(for the classifying class).

Gaussian periods (character sums over one class) are computed numerically as
trace-histogram weighted sums of p-th roots of unity in double precision.
The order-2 periods also have an exact closed form, implemented separately
so the two routes can be cross-checked.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter

import numpy as np

from .errors import NotApplicableError, ParameterError
from .field import FieldCtx, FieldElement, is_prime


def _check_order(ctx: FieldCtx, N: int, name: str = "N") -> None:
    if N < 1 or (ctx.r - 1) % N != 0:
        raise ParameterError(f"{name} must divide r-1: {name}={N}, r-1={ctx.r - 1}")


def class_of(ctx: FieldCtx, N: int, x: FieldElement) -> int:
    """Index of the order-N cyclotomic class containing nonzero x."""
    _check_order(ctx, N)
    if x.is_zero:
        raise ParameterError("zero belongs to no cyclotomic class")
    return x.exp % N


def class_size(ctx: FieldCtx, N: int) -> int:
    _check_order(ctx, N)
    return (ctx.r - 1) // N


def class_exponents(ctx: FieldCtx, N: int, i: int) -> range:
    """Exponents of the elements of the class of index i (order N)."""
    _check_order(ctx, N)
    return range(i % N, ctx.r - 1, N)


def minus_one_class(ctx: FieldCtx, N: int) -> int:
    """Class index of -1 (of +1 in characteristic 2)."""
    _check_order(ctx, N)
    if ctx.p == 2:
        return 0
    return ((ctx.r - 1) // 2) % N


def cyclotomic_number(ctx: FieldCtx, N: int, i: int, j: int) -> int:
    """|(1 + C_i) /\\ C_j| for classes of order N, by exact counting."""
    return generalized_cyclotomic_number(ctx, N, N, i, j)


def generalized_cyclotomic_number(
    ctx: FieldCtx, l: int, f: int, i: int, j: int
) -> int:
    """|(1 + C_i^{(l)}) /\\ C_j^{(f)}|, shifted class of order l, target order f."""
    _check_order(ctx, l, "l")
    _check_order(ctx, f, "f")
    j %= f
    zech = ctx._zech
    count = 0
    for k in range(i % l, ctx.r - 1, l):
        z = zech[k]
        if z is not None and z % f == j:
            count += 1
    return count


def generalized_cyclotomic_table(ctx: FieldCtx, l: int, f: int) -> np.ndarray:
    """All (i, j) numbers of order (l, f) at once, as an int64 l x f array."""
    _check_order(ctx, l, "l")
    _check_order(ctx, f, "f")
    zech = ctx.zech_array()
    ks = np.arange(ctx.r - 1, dtype=np.int64)
    valid = zech >= 0
    cells = (ks[valid] % l) * f + (zech[valid] % f)
    flat = np.bincount(cells, minlength=l * f)
    return flat.reshape(l, f)


def gaussian_period_numeric(ctx: FieldCtx, N: int, i: int) -> complex:
    """Character sum over the class C_i of order N, in double precision.

    Sums p distinct roots of unity with exact integer weights (the histogram
    of absolute traces over the class), so the rounding error is tiny.
    """
    _check_order(ctx, N)
    traces = ctx.prime_trace_ints()
    ks = np.arange(i % N, ctx.r - 1, N)
    hist = np.bincount(traces[ks], minlength=ctx.p)
    return sum(
        int(c) * cmath.exp(2j * cmath.pi * t / ctx.p)
        for t, c in enumerate(hist)
        if c
    )


def gaussian_period_closed_form_n2(p: int, s: int, m: int) -> tuple[complex, complex]:
    """Exact order-2 Gaussian periods (eta_0, eta_1) of GF(p^(s*m)), p odd.

    eta_0 depends on (p mod 4, s*m mod 4); eta_1 = -1 - eta_0.  The magnitude
    q^(m/2) = p^(s*m/2) is an exact integer for even s*m and sqrt(p^(s*m))
    otherwise.
    """
    if p == 2 or not is_prime(p):
        raise ParameterError(f"p must be an odd prime (got {p})")
    if s < 1 or m < 1:
        raise ParameterError("s and m must be >= 1")
    sm = s * m
    if sm % 2 == 0:
        mag = complex(p ** (sm // 2))
    else:
        mag = complex(math.sqrt(p**sm))
    if p % 4 == 1:
        eta0 = (mag - 1) / 2 if sm % 2 else (-1 - mag) / 2
    else:
        rem = sm % 4
        if rem == 0:
            eta0 = (-1 - mag) / 2
        elif rem == 2:
            eta0 = (mag - 1) / 2
        elif rem == 3:
            eta0 = (-1 - 1j * mag) / 2
        else:
            eta0 = (1j * mag - 1) / 2
    return eta0, -1 - eta0


def check_multiset_scaling(ctx: FieldCtx, q_sub_degree: int, e: int, i: int) -> bool:
    """Multiset identity {x*y : x in C_i^{(e)}, y in GF(q)*} against its closed form.

    The closed form is the class C_i of order gcd(m, e) with every element
    repeated gcd(m, e) * (q-1)/e times (m = extension degree of the field over
    GF(q)).  Both multisets are built exactly and compared element by element.
    """
    _check_order(ctx, e, "e")
    if ctx.d % q_sub_degree != 0:
        raise ParameterError("q_sub_degree must divide d")
    q = ctx.p**q_sub_degree
    m = ctx.d // q_sub_degree
    if (q - 1) % e != 0:
        raise ParameterError(f"e must divide q-1: e={e}, q-1={q - 1}")
    n1 = ctx.r - 1
    step = ctx.subfield_exponent_step(q_sub_degree)
    lhs = Counter()
    for k in range(i % e, n1, e):
        for t in range(q - 1):
            lhs[(k + t * step) % n1] += 1
    g = math.gcd(m, e)
    mult = (q - 1) // e * g
    rhs = Counter({k: mult for k in range(i % g, n1, g)})
    return lhs == rhs


def check_subfield_containment(ctx: FieldCtx, q_sub_degree: int, N: int) -> bool:
    """GF(q)* sits inside the zero class of order N, given q = 1 (mod N) and
    N | m.  Raises NotApplicableError when those hypotheses fail."""
    _check_order(ctx, N)
    if ctx.d % q_sub_degree != 0:
        raise ParameterError("q_sub_degree must divide d")
    q = ctx.p**q_sub_degree
    m = ctx.d // q_sub_degree
    if q % N != 1 or m % N != 0:
        raise NotApplicableError(
            f"hypotheses fail: q={q} mod N={N} is {q % N}, m={m} mod N is {m % N}"
        )
    step = ctx.subfield_exponent_step(q_sub_degree)
    return all((t * step) % N == 0 for t in range(q - 1))
