"""Arithmetic in the small finite fields F2, F3 and F4.

Field elements are stored as integer codes ``0 .. q-1``.  For F4 the
codes are ``0 -> 0``, ``1 -> 1``, ``2 -> w``, ``3 -> v`` where ``w`` is
a root of ``x^2 + x + 1`` and ``v = w^2 = w + 1``.

All arithmetic is table driven.  The tables are tiny (at most 4x4) and
a ``GF`` instance is immutable after construction, so one object can be
shared freely across threads and worker processes.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "GF",
    "gf_matmul",
    "parse_element",
    "render_element",
    "parse_vector",
    "render_vector",
]

_ALPHABETS = {
    2: ("0", "1"),
    3: ("0", "1", "2"),
    4: ("0", "1", "w", "v"),
}

# Multiplication table of GF(4) in the basis {1, w} with w^2 = w + 1.
_GF4_MUL = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
]


def _frozen(table) -> np.ndarray:
    arr = np.array(table, dtype=np.int8)
    arr.flags.writeable = False
    return arr


class GF:
    """The finite field with ``q`` elements, ``q`` in ``{2, 3, 4}``.

    Parameters
    ----------
    q : int
        Field size.  Only 2, 3 and 4 are supported; anything else is
        rejected at construction time.

    Attributes
    ----------
    q : int
        Field size.
    add_table, mul_table : ndarray of shape (q, q)
        Lookup tables for addition and multiplication of element codes.
    neg_table : ndarray of shape (q,)
        Additive inverses.
    inv_table : ndarray of shape (q,)
        Multiplicative inverses; index 0 is a filler and must never be
        used (``inv`` guards it).
    alphabet : tuple of str
        Text token for each element code, used by parsing/rendering.

    Examples
    --------
    >>> f4 = GF(4)
    >>> f4.add(2, 3)        # w + v = 1
    1
    >>> f4.mul(2, 2)        # w * w = v
    3
    """

    __slots__ = ("q", "add_table", "mul_table", "neg_table", "inv_table", "alphabet")

    def __init__(self, q: int):
        if q not in (2, 3, 4):
            raise ValueError(f"unsupported field size {q}: only F2, F3 and F4 are available")
        self.q = q
        if q == 4:
            add = [[i ^ j for j in range(4)] for i in range(4)]
            mul = _GF4_MUL
            neg = [0, 1, 2, 3]
            inv = [0, 1, 3, 2]
        else:
            add = [[(i + j) % q for j in range(q)] for i in range(q)]
            mul = [[(i * j) % q for j in range(q)] for i in range(q)]
            neg = [(-i) % q for i in range(q)]
            inv = [0] + [pow(i, q - 2, q) for i in range(1, q)]
        self.add_table = _frozen(add)
        self.mul_table = _frozen(mul)
        self.neg_table = _frozen(neg)
        self.inv_table = _frozen(inv)
        self.alphabet = _ALPHABETS[q]

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    def _check(self, *codes: int) -> None:
        for x in codes:
            if not 0 <= x < self.q:
                raise ValueError(f"element code {x} out of range for F{self.q}")

    def add(self, x: int, y: int) -> int:
        """Field sum of two element codes."""
        self._check(x, y)
        return int(self.add_table[x, y])

    def mul(self, x: int, y: int) -> int:
        """Field product of two element codes."""
        self._check(x, y)
        return int(self.mul_table[x, y])

    def neg(self, x: int) -> int:
        """Additive inverse."""
        self._check(x)
        return int(self.neg_table[x])

    def inv(self, x: int) -> int:
        """Multiplicative inverse of a nonzero element.

        Raises
        ------
        ZeroDivisionError
            If ``x`` is the zero element.
        """
        self._check(x)
        if x == 0:
            raise ZeroDivisionError(f"zero has no multiplicative inverse in F{self.q}")
        return int(self.inv_table[x])


def parse_element(gf: GF, token: str) -> int:
    """Parse one element token against the field alphabet.

    The alphabets are ``0/1`` for F2, ``0/1/2`` for F3 and ``0/1/w/v``
    for F4 (``v`` denotes ``w^2``).
    """
    tok = token.strip()
    try:
        return gf.alphabet.index(tok)
    except ValueError:
        raise ValueError(f"unknown F{gf.q} element token {token!r}") from None


def render_element(gf: GF, x: int) -> str:
    """Text token of one element code."""
    gf._check(x)
    return gf.alphabet[x]


def parse_vector(gf: GF, text: str) -> np.ndarray:
    """Parse a vector written as ``(c1,c2,...)`` into an int8 array.

    ``()`` denotes the empty vector.  Whitespace around tokens is
    ignored.
    """
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"vector literal must be parenthesised: {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return np.zeros(0, dtype=np.int8)
    codes = [parse_element(gf, tok) for tok in inner.split(",")]
    return np.array(codes, dtype=np.int8)


def render_vector(gf: GF, vec) -> str:
    """Render a vector of element codes as ``(c1,c2,...)``."""
    return "(" + ",".join(render_element(gf, int(x)) for x in vec) + ")"


# Exact integer matrix products are computed through float32 BLAS: every
# per-entry product is at most (q-1)^2 <= 9 and float32 represents
# integer sums exactly below 2^24, so the inner dimension may reach
# 2^24 / 9 before exactness is at risk.
_MATMUL_SAFE_INNER = (1 << 24) // 9


def _int_matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.shape[-1] > _MATMUL_SAFE_INNER:
        return np.matmul(x.astype(np.int64), y.astype(np.int64))
    prod = np.matmul(x.astype(np.float32), y.astype(np.float32))
    return prod.astype(np.int64)


def gf_matmul(gf: GF, x, y) -> np.ndarray:
    """Matrix product over the field.

    Follows ``np.matmul`` broadcasting, so batched products such as
    ``(messages, m) @ (blocks, m, m)`` work directly.

    For F2 and F3 this is an integer product reduced mod q.  For F4 the
    operands are split into their two GF(2) coordinate planes
    ``x = x0 + w*x1`` and recombined with ``w^2 = w + 1``:

        z0 = x0 y0 + x1 y1        (mod 2)
        z1 = x0 y1 + x1 y0 + x1 y1 (mod 2)

    Returns an int8 array of element codes.
    """
    x = np.asarray(x)
    y = np.asarray(y)
    if gf.q == 4:
        x0, x1 = x & 1, x >> 1
        y0, y1 = y & 1, y >> 1
        p00 = _int_matmul(x0, y0)
        p01 = _int_matmul(x0, y1)
        p10 = _int_matmul(x1, y0)
        p11 = _int_matmul(x1, y1)
        z0 = (p00 + p11) & 1
        z1 = (p01 + p10 + p11) & 1
        return (z0 + 2 * z1).astype(np.int8)
    return (_int_matmul(x, y) % gf.q).astype(np.int8)
