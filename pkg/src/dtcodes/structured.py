"""Toeplitz, circulant and negacirculant code constructors.

A double Toeplitz code T(t, a, b) is the [2m, m] code generated by
(I_m | T) where T is the m x m Toeplitz matrix with diagonal ``t``,
upper band ``a`` and lower band ``b``:

    T[i, j] = t        if i == j
              a[j - i] if j > i
              b[i - j] if i > j       (1-based band indices)

Double circulant C(r) and double negacirculant N(r) codes are the
special cases where T is the (nega)circulant matrix with first row r.

The triple space for length n carries a fixed enumeration order: t
varies slowest, then the digits of a, then the digits of b, each vector
counted odometer style with its first entry least significant.  Search
partitioning and checkpointing rely on this order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import GF, gf_matmul, parse_element, parse_vector, render_element, render_vector
from .linear import BudgetExceededError, LinearCode

__all__ = [
    "ToeplitzTriple",
    "CirculantSpec",
    "toeplitz_matrix",
    "circulant_matrix",
    "double_toeplitz_code",
    "double_circulant_code",
    "double_negacirculant_code",
    "triple_of_circulant",
    "classify_triple",
    "contains_vector",
    "count_codes_containing",
    "count_codes_containing_bruteforce",
    "triple_count",
    "enumerate_triples",
    "triple_from_indices",
    "parse_triple",
    "parse_circulant",
]

# Largest n for which the q^(n-1) triple space is brute-forced here.
BRUTE_FORCE_N = {2: 12, 3: 8, 4: 6}


def _as_codes(gf: GF, vec) -> tuple[int, ...]:
    out = tuple(int(x) for x in vec)
    for x in out:
        if not 0 <= x < gf.q:
            raise ValueError(f"element code {x} out of range for F{gf.q}")
    return out


@dataclass(frozen=True)
class ToeplitzTriple:
    """Defining data (t, a, b) of a double Toeplitz code of length 2m."""

    gf: GF
    t: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", _as_codes(self.gf, self.a))
        object.__setattr__(self, "b", _as_codes(self.gf, self.b))
        if not 0 <= self.t < self.gf.q:
            raise ValueError(f"element code {self.t} out of range for F{self.gf.q}")
        if len(self.a) != len(self.b):
            raise ValueError("bands a and b must have equal length m-1")

    @property
    def m(self) -> int:
        return len(self.a) + 1

    @property
    def n(self) -> int:
        return 2 * self.m

    def lex_key(self) -> tuple[int, ...]:
        """Plain lexicographic key on the written-out triple."""
        return (self.t,) + self.a + self.b

    def to_text(self) -> str:
        """Triple literal ``t;a;b``, e.g. ``0;(1,1,0);(1,0,0)``."""
        g = self.gf
        return ";".join(
            (render_element(g, self.t), render_vector(g, self.a), render_vector(g, self.b))
        )


@dataclass(frozen=True)
class CirculantSpec:
    """First row ``r`` and sign ``mu`` of a (nega)circulant matrix."""

    gf: GF
    r: tuple[int, ...]
    mu: int = 1

    def __post_init__(self):
        object.__setattr__(self, "r", _as_codes(self.gf, self.r))
        if self.mu not in (1, -1):
            raise ValueError("mu must be +1 (circulant) or -1 (negacirculant)")
        if len(self.r) < 1:
            raise ValueError("first row must be nonempty")

    @property
    def m(self) -> int:
        return len(self.r)

    def mu_code(self) -> int:
        """The sign as a field element: 1 or -1 = neg(1)."""
        return 1 if self.mu == 1 else int(self.gf.neg_table[1])

    def to_text(self) -> str:
        """Literal ``C:(r)`` or ``N:(r)``."""
        prefix = "C" if self.mu == 1 else "N"
        return f"{prefix}:{render_vector(self.gf, self.r)}"


def parse_triple(gf: GF, text: str) -> ToeplitzTriple:
    """Parse a ``t;a;b`` literal."""
    parts = text.split(";")
    if len(parts) != 3:
        raise ValueError(f"triple literal must have three ';'-separated parts: {text!r}")
    t = parse_element(gf, parts[0])
    a = parse_vector(gf, parts[1])
    b = parse_vector(gf, parts[2])
    return ToeplitzTriple(gf, t, tuple(a), tuple(b))


def parse_circulant(gf: GF, text: str) -> CirculantSpec:
    """Parse a ``C:(r)`` or ``N:(r)`` literal."""
    s = text.strip()
    if len(s) < 2 or s[0] not in "CN" or s[1] != ":":
        raise ValueError(f"circulant literal must look like 'C:(...)' or 'N:(...)': {text!r}")
    r = parse_vector(gf, s[2:])
    return CirculantSpec(gf, tuple(r), 1 if s[0] == "C" else -1)


def band_sequence(T: ToeplitzTriple) -> np.ndarray:
    """The length 2m-1 diagonal sequence (b_{m-1},...,b_1, t, a_1,...,a_{m-1}).

    Row i of the Toeplitz matrix is the window s[m-1-i : 2m-1-i], which
    is what the batched search exploits through sliding windows.
    """
    return np.array(tuple(reversed(T.b)) + (T.t,) + T.a, dtype=np.int8)


def toeplitz_matrix(T: ToeplitzTriple) -> np.ndarray:
    """The m x m Toeplitz matrix of the triple."""
    s = band_sequence(T)
    win = np.lib.stride_tricks.sliding_window_view(s, T.m)
    return np.ascontiguousarray(win[::-1])


def circulant_matrix(spec: CirculantSpec) -> np.ndarray:
    """The (nega)circulant matrix with first row r, built directly.

    Entry (i, j) is r[(j - i) mod m], scaled by mu whenever the index
    wraps (j < i).
    """
    m = spec.m
    gf = spec.gf
    r = np.array(spec.r, dtype=np.int8)
    i, j = np.indices((m, m))
    A = r[(j - i) % m]
    wrapped = j < i
    A[wrapped] = gf.mul_table[spec.mu_code(), A[wrapped]]
    return A


def triple_of_circulant(spec: CirculantSpec) -> ToeplitzTriple:
    """The (t, a, b) whose Toeplitz matrix equals the circulant matrix.

    t = r_1, a = (r_2, ..., r_m), b_i = mu * r_{m-i+1}.
    """
    gf = spec.gf
    r = spec.r
    m = spec.m
    mu = spec.mu_code()
    t = r[0]
    a = r[1:]
    b = tuple(int(gf.mul_table[mu, r[m - i]]) for i in range(1, m))
    return ToeplitzTriple(gf, t, a, b)


def classify_triple(T: ToeplitzTriple) -> str:
    """Which circulant family the triple's matrix belongs to.

    Returns "circulant", "negacirculant", "both" or "neither", testing
    a_i = b_{m-i} and a_i = -b_{m-i}.  Over F2 the two coincide.
    """
    gf = T.gf
    m = T.m
    circ = all(T.a[i - 1] == T.b[m - i - 1] for i in range(1, m))
    nega = all(T.a[i - 1] == gf.neg_table[T.b[m - i - 1]] for i in range(1, m))
    if circ and nega:
        return "both"
    if circ:
        return "circulant"
    if nega:
        return "negacirculant"
    return "neither"


def _identity_block_code(gf: GF, A: np.ndarray) -> LinearCode:
    m = A.shape[0]
    G = np.hstack([np.eye(m, dtype=np.int8), A])
    return LinearCode(gf, G)


def double_toeplitz_code(T: ToeplitzTriple) -> LinearCode:
    """The [2m, m] code with generator (I | T(t,a,b))."""
    return _identity_block_code(T.gf, toeplitz_matrix(T))


def double_circulant_code(spec: CirculantSpec) -> LinearCode:
    """The [2m, m] code with generator (I | circulant(r))."""
    if spec.mu != 1:
        raise ValueError("double_circulant_code needs mu = +1")
    return _identity_block_code(spec.gf, circulant_matrix(spec))


def double_negacirculant_code(spec: CirculantSpec) -> LinearCode:
    """The [2m, m] code with generator (I | negacirculant(r))."""
    if spec.mu != -1:
        raise ValueError("double_negacirculant_code needs mu = -1")
    return _identity_block_code(spec.gf, circulant_matrix(spec))


def contains_vector(T: ToeplitzTriple, u, v) -> bool:
    """Whether (u, v) is a codeword of the double Toeplitz code.

    (u, v) lies in the code exactly when u A = v for A = T(t,a,b),
    since the codeword with message u is (u, uA).
    """
    u = np.asarray(u, dtype=np.int8)
    v = np.asarray(v, dtype=np.int8)
    if u.shape != (T.m,) or v.shape != (T.m,):
        raise ValueError(f"u and v must both have length m = {T.m}")
    return bool(np.array_equal(gf_matmul(T.gf, u, toeplitz_matrix(T)), v))


def _check_halves(gf: GF, n: int, u, v) -> tuple[np.ndarray, np.ndarray]:
    if n % 2 or n < 2:
        raise ValueError(f"length n must be even and positive, got {n}")
    u = np.asarray(u, dtype=np.int8)
    v = np.asarray(v, dtype=np.int8)
    if u.shape != (n // 2,) or v.shape != (n // 2,):
        raise ValueError(f"u and v must both have length n/2 = {n // 2}")
    return u, v


def count_codes_containing(gf: GF, n: int, u, v) -> int:
    """How many of the q^(n-1) double Toeplitz codes contain (u, v).

    Closed form: q^(n-1) when u = v = 0; zero when u = 0 but v != 0;
    q^(n/2-1) when u != 0 (independent of v).
    """
    u, v = _check_halves(gf, n, u, v)
    q = gf.q
    if not u.any():
        return q ** (n - 1) if not v.any() else 0
    return q ** (n // 2 - 1)


def count_codes_containing_bruteforce(gf: GF, n: int, u, v) -> int:
    """The same count by iterating every triple and testing membership."""
    u, v = _check_halves(gf, n, u, v)
    limit = BRUTE_FORCE_N[gf.q]
    if n > limit:
        raise BudgetExceededError(
            f"brute-force count over q^(n-1) codes needs n <= {limit} for F{gf.q}"
        )
    return sum(1 for T in enumerate_triples(gf, n // 2) if contains_vector(T, u, v))


def triple_count(gf: GF, m: int) -> int:
    """Size of the triple space: q^(2m-1)."""
    return gf.q ** (2 * m - 1)


def digits_of_index(idx: int, q: int, length: int) -> tuple[int, ...]:
    """Odometer digits of an index, first digit least significant."""
    out = []
    for _ in range(length):
        idx, d = divmod(idx, q)
        out.append(d)
    return tuple(out)


def index_of_digits(digits, q: int) -> int:
    idx = 0
    for d in reversed(tuple(digits)):
        idx = idx * q + int(d)
    return idx


def triple_from_indices(gf: GF, m: int, t: int, ia: int, ib: int) -> ToeplitzTriple:
    """Triple at position (t, ia, ib) of the enumeration grid."""
    L = m - 1
    return ToeplitzTriple(gf, t, digits_of_index(ia, gf.q, L), digits_of_index(ib, gf.q, L))


def enumerate_triples(gf: GF, m: int):
    """All q^(2m-1) triples in enumeration order.

    t slowest, then a, then b; within a and b the first entry is the
    least significant digit.
    """
    q = gf.q
    L = m - 1
    for t in range(q):
        for ia in range(q**L):
            a = digits_of_index(ia, q, L)
            for ib in range(q**L):
                yield ToeplitzTriple(gf, t, a, digits_of_index(ib, q, L))
