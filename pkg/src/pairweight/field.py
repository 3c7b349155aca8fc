"""Exact arithmetic in GF(p^d) via discrete-log tables.

A field context is built around a deterministically chosen primitive
polynomial: the lexicographically smallest monic primitive polynomial of
degree d over GF(p), coefficients compared from the constant term upward.
Its root ``a`` (alpha) generates the multiplicative group, and every nonzero
element is stored as an exponent of alpha.

Element representation:
  * ``FieldElement(exp=k)`` denotes alpha^k with 0 <= k <= r-2 (r = p^d);
  * the additive zero is the shared sentinel ``ZERO`` (exp is None).

Multiplication and inversion are exponent arithmetic modulo r-1.  Addition
routes through Zech logarithms: alpha^j + alpha^k = alpha^j (1 + alpha^(k-j)),
and the table ``1 + alpha^t`` is precomputed once per field.  Polynomial-basis
coordinates are kept internally as base-p packed integers ("codes") for table
construction and display.

Two integer encodings appear in bulk interfaces:
  * exponent k in [0, r-2] for nonzero elements;
  * "index" in [0, r-1]: 0 is zero, k+1 is alpha^k (used by numpy tables).
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import BudgetError, ParameterError

DEFAULT_TABLE_CAP = 1 << 22

# add_table() materialises an r x r int32 array; cap r so the table stays
# within a few hundred MB.
_ADD_TABLE_MAX_R = 1 << 12


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (fields here are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _poly_mul_mod(a, b, modulus, p):
    # Coefficient lists, constant term first; modulus monic of degree d.
    d = len(modulus) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(d):
                res[i - d + j] = (res[i - d + j] - c * modulus[j]) % p
    res = res[:d]
    return res + [0] * (d - len(res))


def _x_pow_mod(k, modulus, p):
    # x^k reduced modulo the monic polynomial, by square-and-multiply.
    d = len(modulus) - 1
    result = [1] + [0] * (d - 1)
    if d == 1:
        base = [(-modulus[0]) % p]
    else:
        base = [0, 1] + [0] * (d - 2)
    while k:
        if k & 1:
            result = _poly_mul_mod(result, base, modulus, p)
        k >>= 1
        if k:
            base = _poly_mul_mod(base, base, modulus, p)
    return result


def _is_primitive_modulus(modulus, p, d):
    # x must have multiplicative order exactly p^d - 1 in GF(p)[x]/(f).
    # That forces f irreducible, so no separate irreducibility test is run.
    if modulus[0] == 0:
        return False
    r1 = p**d - 1
    one = [1] + [0] * (d - 1)
    if _x_pow_mod(r1, modulus, p) != one:
        return False
    for ell in prime_factors(r1):
        if _x_pow_mod(r1 // ell, modulus, p) == one:
            return False
    return True


def find_primitive_modulus(p: int, d: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree d.

    Coefficients are returned constant term first, monic leading 1 last;
    candidates are ordered by (c_0, c_1, ..., c_{d-1}).
    """
    for lower in itertools.product(range(p), repeat=d):
        candidate = list(lower) + [1]
        if _is_primitive_modulus(candidate, p, d):
            return tuple(candidate)
    raise RuntimeError(f"no primitive polynomial of degree {d} over GF({p})")


class FieldElement:
    """An element of GF(p^d): zero, or a power of the primitive element."""

    __slots__ = ("exp",)

    def __init__(self, exp):
        self.exp = exp

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    def __eq__(self, other):
        return isinstance(other, FieldElement) and self.exp == other.exp

    def __hash__(self):
        return hash(self.exp)

    def __repr__(self):
        return "0" if self.exp is None else f"a^{self.exp}"


ZERO = FieldElement(None)


class FieldCtx:
    """Tables and arithmetic for one GF(p^d).

    Immutable after construction; all operations are pure reads, so a context
    can be shared freely across threads and forked workers.
    """

    def __init__(self, p: int, d: int, table_cap: int = DEFAULT_TABLE_CAP):
        violations = []
        if not is_prime(p):
            violations.append(f"p must be prime (got {p})")
        if d < 1:
            violations.append(f"d must be >= 1 (got {d})")
        if violations:
            raise ParameterError(violations)
        r = p**d
        if r > table_cap:
            raise ParameterError(
                f"table cap exceeded: p^d = {r} > {table_cap}"
            )
        self.p = p
        self.d = d
        self.r = r
        self.modulus = find_primitive_modulus(p, d)

        # antilog: exponent -> packed code; log: packed code -> exponent.
        antilog = [0] * (r - 1)
        digits = [1] + [0] * (d - 1)
        powers = [p**i for i in range(d)]
        for k in range(r - 1):
            antilog[k] = sum(c * w for c, w in zip(digits, powers))
            top = digits[-1]
            digits = [0] + digits[:-1]
            if top:
                for j in range(d):
                    digits[j] = (digits[j] - top * self.modulus[j]) % p
        log = [None] * r
        for k, code in enumerate(antilog):
            if log[code] is not None:
                raise RuntimeError("modulus is not primitive: repeated power")
            log[code] = k
        self._antilog = antilog
        self._log = log

        # Zech logarithms: zech[t] = log(1 + alpha^t), None when the sum is 0.
        zech = [None] * (r - 1)
        for t in range(r - 1):
            code = self._code_add(antilog[t], antilog[0])
            zech[t] = None if code == 0 else log[code]
        self._zech = zech

        self._trace_tables: dict[int, list[int]] = {}
        self._np_cache: dict = {}

    # -- element constructors -------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return ZERO

    @property
    def one(self) -> FieldElement:
        return FieldElement(0)

    @property
    def alpha(self) -> FieldElement:
        """The distinguished primitive element (root of the modulus)."""
        return FieldElement(1 % (self.r - 1))

    def element(self, exp: int) -> FieldElement:
        """alpha^exp, exponent reduced modulo r-1."""
        return FieldElement(exp % (self.r - 1))

    def from_coeffs(self, coeffs) -> FieldElement:
        """Element from polynomial-basis coefficients, constant term first."""
        coeffs = list(coeffs)
        if len(coeffs) > self.d or any(not 0 <= c < self.p for c in coeffs):
            raise ParameterError(
                f"coefficients must be {self.d} integers in [0, {self.p})"
            )
        code = sum(c * self.p**i for i, c in enumerate(coeffs))
        return ZERO if code == 0 else FieldElement(self._log[code])

    def coeffs(self, x: FieldElement) -> tuple[int, ...]:
        """Polynomial-basis coefficients of x, constant term first."""
        code = 0 if x.is_zero else self._antilog[x.exp]
        out = []
        for _ in range(self.d):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def elements(self):
        yield ZERO
        for k in range(self.r - 1):
            yield FieldElement(k)

    def nonzero_elements(self):
        for k in range(self.r - 1):
            yield FieldElement(k)

    # -- index encoding (0 = zero, k+1 = alpha^k), used by bulk tables --------

    def index(self, x: FieldElement) -> int:
        return 0 if x.is_zero else x.exp + 1

    def at_index(self, idx: int) -> FieldElement:
        return ZERO if idx == 0 else FieldElement(idx - 1)

    # -- arithmetic ------------------------------------------------------------

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        if x.is_zero:
            return y
        if y.is_zero:
            return x
        n1 = self.r - 1
        z = self._zech[(y.exp - x.exp) % n1]
        return ZERO if z is None else FieldElement((x.exp + z) % n1)

    def neg(self, x: FieldElement) -> FieldElement:
        if x.is_zero or self.p == 2:
            return x
        return FieldElement((x.exp + (self.r - 1) // 2) % (self.r - 1))

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.add(x, self.neg(y))

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        if x.is_zero or y.is_zero:
            return ZERO
        return FieldElement((x.exp + y.exp) % (self.r - 1))

    def inv(self, x: FieldElement) -> FieldElement:
        if x.is_zero:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return FieldElement((-x.exp) % (self.r - 1))

    def div(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.mul(x, self.inv(y))

    def pow(self, x: FieldElement, n: int) -> FieldElement:
        if x.is_zero:
            if n > 0:
                return ZERO
            if n == 0:
                return self.one
            raise ZeroDivisionError("negative power of zero")
        return FieldElement((x.exp * n) % (self.r - 1))

    # -- subfields and traces ---------------------------------------------------

    def _check_sub_d(self, sub_d: int) -> None:
        if sub_d < 1 or self.d % sub_d != 0:
            raise ParameterError(
                f"sub_d must divide d: sub_d={sub_d}, d={self.d}"
            )

    def subfield_exponent_step(self, sub_d: int) -> int:
        """(r-1)/(p^sub_d - 1): alpha to this power generates the subfield."""
        self._check_sub_d(sub_d)
        return (self.r - 1) // (self.p**sub_d - 1)

    def is_in_subfield(self, x: FieldElement, sub_d: int) -> bool:
        step = self.subfield_exponent_step(sub_d)
        return x.is_zero or x.exp % step == 0

    def trace_table(self, sub_d: int) -> list[int]:
        """index -> index table of the trace onto the subfield of size p^sub_d."""
        self._check_sub_d(sub_d)
        table = self._trace_tables.get(sub_d)
        if table is None:
            u = self.p**sub_d
            terms = self.d // sub_d
            n1 = self.r - 1
            table = [0] * self.r
            for k in range(n1):
                code = 0
                ue = 1
                for _ in range(terms):
                    code = self._code_add(code, self._antilog[(k * ue) % n1])
                    ue = (ue * u) % n1 if n1 > 1 else 0
                idx = 0 if code == 0 else self._log[code] + 1
                table[k + 1] = idx
                # the trace must land in the subfield
                if idx and (idx - 1) % self.subfield_exponent_step(sub_d):
                    raise RuntimeError("trace left the target subfield")
            self._trace_tables[sub_d] = table
        return table

    def trace_to_subfield(self, x: FieldElement, sub_d: int) -> FieldElement:
        """Sum of x^(p^sub_d)^j over j; lands in the subfield of size p^sub_d."""
        return self.at_index(self.trace_table(sub_d)[self.index(x)])

    # -- packed-code helpers -----------------------------------------------------

    def _code_add(self, c1: int, c2: int) -> int:
        p = self.p
        res = 0
        mult = 1
        for _ in range(self.d):
            res += ((c1 + c2) % p) * mult
            c1 //= p
            c2 //= p
            mult *= p
        return res

    # -- bulk numpy views (cached, read-only) -------------------------------------

    def zech_array(self) -> np.ndarray:
        """int64[r-1]: zech[t] = log(1 + alpha^t), -1 where 1 + alpha^t = 0."""
        arr = self._np_cache.get("zech")
        if arr is None:
            arr = np.array(
                [-1 if z is None else z for z in self._zech], dtype=np.int64
            )
            arr.setflags(write=False)
            self._np_cache["zech"] = arr
        return arr

    def trace_zero_exponents(self, sub_d: int) -> np.ndarray:
        """bool[r-1]: True where alpha^k has zero trace onto GF(p^sub_d)."""
        key = ("tr0", sub_d)
        arr = self._np_cache.get(key)
        if arr is None:
            table = self.trace_table(sub_d)
            arr = np.array([table[k + 1] == 0 for k in range(self.r - 1)])
            arr.setflags(write=False)
            self._np_cache[key] = arr
        return arr

    def prime_trace_ints(self) -> np.ndarray:
        """int16[r-1]: absolute trace of alpha^k as an integer in [0, p)."""
        arr = self._np_cache.get("abs_trace")
        if arr is None:
            table = self.trace_table(1)
            out = np.zeros(self.r - 1, dtype=np.int16)
            for k in range(self.r - 1):
                idx = table[k + 1]
                out[k] = 0 if idx == 0 else self._antilog[idx - 1]
            out.setflags(write=False)
            arr = out
            self._np_cache["abs_trace"] = arr
        return arr

    def add_table(self) -> np.ndarray:
        """int32[r, r] addition table in index encoding (0 = zero)."""
        arr = self._np_cache.get("add_table")
        if arr is None:
            r, p, d = self.r, self.p, self.d
            if r > _ADD_TABLE_MAX_R:
                raise BudgetError(
                    "addition table too large", required=r, budget=_ADD_TABLE_MAX_R
                )
            code_of_idx = np.zeros(r, dtype=np.int64)
            code_of_idx[1:] = np.array(self._antilog, dtype=np.int64)
            digs = np.zeros((r, d), dtype=np.int32)
            tmp = code_of_idx.copy()
            for j in range(d):
                digs[:, j] = tmp % p
                tmp //= p
            sums = (digs[:, None, :] + digs[None, :, :]) % p
            weights = (p ** np.arange(d, dtype=np.int64))
            sum_codes = (sums.astype(np.int64) * weights).sum(axis=2)
            idx_of_code = np.zeros(r, dtype=np.int32)
            for k, code in enumerate(self._antilog):
                idx_of_code[code] = k + 1
            arr = idx_of_code[sum_codes]
            arr.setflags(write=False)
            self._np_cache["add_table"] = arr
        return arr

    def __repr__(self):
        return f"FieldCtx(p={self.p}, d={self.d}, r={self.r})"


def build_field(p: int, d: int, table_cap: int = DEFAULT_TABLE_CAP) -> FieldCtx:
    """Build GF(p^d) with fully populated discrete-log tables."""
    return FieldCtx(p, d, table_cap=table_cap)
