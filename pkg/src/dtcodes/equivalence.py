"""Monomial equivalence of codes and equivalence-class deduplication.

Two [n, k] codes over F_q are equivalent when an n x n monomial matrix
P (one nonzero entry per row and column, i.e. a column permutation
composed with nonzero column scalings) maps one codeword set onto the
other.

The decision procedure here anchors on low-weight codewords:

1. cheap invariant pre-filter (:func:`signature`);
2. backtracking over column assignments (target column, scale factor),
   constrained by the sets W1, W2 of codewords in the lowest weight
   layers of the two codes.  A monomial map carries W1 bijectively onto
   W2 layer by layer, so every partial assignment propagates candidate
   bitmask sets; an empty candidate set or an unreachable W2 word cuts
   the branch.
3. a completed assignment is accepted only after the mapped generator
   rows of the first code all satisfy the parity checks of the second,
   which makes every "True" answer sound irrespective of the pruning.

The search is exhaustive over consistent assignments, so "False" is
sound as well; running out of the node budget raises
:class:`UndecidedError` instead of answering.

Field automorphisms are NOT part of this relation.  For F4 an
explicitly labelled semimonomial diagnostic widens the test by the
Frobenius map x -> x^2; see :func:`are_equivalent`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import GF, gf_matmul
from .linear import (
    LinearCode,
    _check_budget,
    _message_blocks,
    dual_code,
    weight_enumerator,
)

__all__ = [
    "UndecidedError",
    "MonomialMap",
    "apply_monomial",
    "signature",
    "are_equivalent",
    "find_monomial_map",
    "dedupe_into_classes",
    "frobenius_image",
]

DEFAULT_NODE_CAP = 10**8


class UndecidedError(RuntimeError):
    """The backtracking search hit its node budget before deciding."""


@dataclass(frozen=True)
class MonomialMap:
    """Column permutation plus nonzero column scalings.

    Column j of the source code lands in column ``perm[j]`` of the
    image, multiplied by ``scales[j]``.
    """

    perm: tuple[int, ...]
    scales: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        if len(self.scales) != n:
            raise ValueError("need one scale per column")
        if any(s == 0 for s in self.scales):
            raise ValueError("scales must be nonzero field elements")


def apply_monomial(C: LinearCode, M: MonomialMap) -> LinearCode:
    """The code C P for the monomial matrix P described by M."""
    if len(M.perm) != C.n:
        raise ValueError(f"map acts on {len(M.perm)} columns, code has {C.n}")
    gf = C.gf
    G = np.zeros_like(C.G)
    for j, (p, s) in enumerate(zip(M.perm, M.scales)):
        if not 0 < s < gf.q:
            raise ValueError(f"scale {s} is not a nonzero F{gf.q} element")
        G[:, p] = gf.mul_table[s, C.G[:, j]]
    return LinearCode(gf, G)


def frobenius_image(C: LinearCode) -> LinearCode:
    """Entrywise x -> x^2 image of an F4 code (an F4-linear code again)."""
    if C.gf.q != 4:
        raise ValueError("the Frobenius image is only defined here for F4")
    frob = np.array([0, 1, 3, 2], dtype=np.int8)
    return LinearCode(C.gf, frob[C.G])


def _codewords_by_weight(C: LinearCode) -> dict[int, np.ndarray]:
    """All nonzero codewords grouped by weight (budget-guarded)."""
    _check_budget(C.gf.q, C.k)
    B, perm = C.systematic_right_block()
    inv = np.empty_like(perm)
    inv[perm] = np.arange(C.n)
    groups: dict[int, list[np.ndarray]] = {}
    for msgs in _message_blocks(C.gf.q, C.k):
        right = gf_matmul(C.gf, msgs, B)
        words = np.hstack([msgs, right])[:, inv]
        wts = np.count_nonzero(words, axis=1)
        for w in np.unique(wts):
            if w == 0:
                continue
            groups.setdefault(int(w), []).append(words[wts == w])
    return {w: np.vstack(parts) for w, parts in sorted(groups.items())}


def _anchor_layers(C1: LinearCode, C2: LinearCode):
    """Matching low-weight layers of both codes, as stacked matrices.

    Layers are taken in increasing weight until every column that is
    nonzero somewhere in code 1 is touched by an anchor codeword.
    Returns None when the layer structures already differ.
    """
    g1 = _codewords_by_weight(C1)
    g2 = _codewords_by_weight(C2)
    if sorted(g1) != sorted(g2):
        return None
    nonzero_cols = np.asarray(C1.G != 0).any(axis=0)
    take1, take2, bounds = [], [], []
    covered = np.zeros(C1.n, dtype=bool)
    for w in sorted(g1):
        if len(g1[w]) != len(g2[w]):
            return None
        take1.append(g1[w])
        take2.append(g2[w])
        bounds.append(len(g1[w]))
        covered |= np.asarray(take1[-1] != 0).any(axis=0)
        if np.array_equal(covered & nonzero_cols, nonzero_cols):
            break
    return np.vstack(take1), np.vstack(take2), bounds


def signature(C: LinearCode) -> tuple:
    """Monomial-invariant fingerprint used as an equivalence pre-filter.

    Contains n, k, the full weight enumerator and the sorted multiset
    of per-column value profiles over the minimum-weight codewords.  A
    column profile keeps the zero count and the sorted nonzero value
    counts, both invariant under column permutation and scaling.
    """
    W = weight_enumerator(C)
    groups = _codewords_by_weight(C)
    dmin = W.min_positive_weight()
    M = groups[dmin]
    profiles = []
    for j in range(C.n):
        counts = np.bincount(M[:, j], minlength=C.gf.q)
        profiles.append((int(counts[0]),) + tuple(sorted(int(c) for c in counts[1:])))
    return (C.n, C.k, W.coeffs, tuple(sorted(profiles)))


class _BacktrackState:
    __slots__ = ("nodes", "cap")

    def __init__(self, cap: int):
        self.nodes = 0
        self.cap = cap

    def tick(self):
        self.nodes += 1
        if self.nodes > self.cap:
            raise UndecidedError(
                f"equivalence search exceeded its node budget of {self.cap}"
            )


def _search_map(C1: LinearCode, C2: LinearCode, node_cap: int) -> MonomialMap | None:
    gf = C1.gf
    q = gf.q
    n = C1.n

    zero1 = [j for j in range(n) if not C1.G[:, j].any()]
    zero2 = [j for j in range(n) if not C2.G[:, j].any()]
    if len(zero1) != len(zero2):
        return None

    layers = _anchor_layers(C1, C2)
    if layers is None:
        return None
    W1, W2, bounds = layers
    N = len(W1)

    # Candidate bitmasks: W1 row i may map onto W2 row x only inside
    # its own weight layer.
    layer_masks = []
    full = (1 << N) - 1
    start = 0
    for size in bounds:
        mask = ((1 << size) - 1) << start
        layer_masks.extend([mask] * size)
        start += size
    init_cand = list(layer_masks)

    # mask2[p][v]: which W2 rows hold value v in column p.
    mask2 = [[0] * q for _ in range(n)]
    for i in range(N):
        row = W2[i]
        bit = 1 << i
        for p in range(n):
            mask2[p][int(row[p])] |= bit

    hist1 = [tuple(np.bincount(W1[:, j], minlength=q).tolist()) for j in range(n)]
    hist2 = [tuple(np.bincount(W2[:, j], minlength=q).tolist()) for j in range(n)]

    cols1 = [j for j in range(n) if j not in set(zero1)]
    cols2 = [p for p in range(n) if p not in set(zero2)]
    # Most-constrained first: columns touched by many anchor words
    # propagate the most information.
    cols1.sort(key=lambda j: (hist1[j][0], j))

    H2 = dual_code(C2).G if C2.k < n else None
    scales = range(1, q)
    state = _BacktrackState(node_cap)

    perm = [-1] * n
    scale = [1] * n
    for z1, z2 in zip(zero1, zero2):
        perm[z1] = z2

    used = [False] * n
    for z in zero2:
        used[z] = True

    def verify() -> bool:
        G = np.zeros_like(C1.G)
        for j in range(n):
            G[:, perm[j]] = gf.mul_table[scale[j], C1.G[:, j]]
        if H2 is None:
            return True
        return not gf_matmul(gf, G, H2.T).any()

    def descend(depth: int, cand: list[int]) -> bool:
        if depth == len(cols1):
            return verify()
        j = cols1[depth]
        col_vals = [int(v) for v in W1[:, j]]
        h1 = hist1[j]
        for p in cols2:
            if used[p]:
                continue
            m2p = mask2[p]
            h2p = hist2[p]
            for lam in scales:
                mul_row = gf.mul_table[lam]
                if h1[0] != h2p[0] or any(
                    h1[v] != h2p[mul_row[v]] for v in range(1, q)
                ):
                    continue
                state.tick()
                new_cand = []
                union = 0
                ok = True
                for i in range(N):
                    c = cand[i] & m2p[mul_row[col_vals[i]]]
                    if not c:
                        ok = False
                        break
                    new_cand.append(c)
                    union |= c
                if not ok or union != full:
                    continue
                perm[j] = p
                scale[j] = lam
                used[p] = True
                if descend(depth + 1, new_cand):
                    return True
                used[p] = False
        perm[j] = -1
        return False

    if descend(0, init_cand):
        return MonomialMap(tuple(perm), tuple(scale))
    return None


def find_monomial_map(
    C1: LinearCode, C2: LinearCode, node_cap: int = DEFAULT_NODE_CAP
) -> MonomialMap | None:
    """A monomial map carrying C1 onto C2, or None when none exists."""
    if (C1.gf.q, C1.n, C1.k) != (C2.gf.q, C2.n, C2.k):
        raise ValueError("codes must share field, length and dimension")
    if signature(C1) != signature(C2):
        return None
    return _search_map(C1, C2, node_cap)


def are_equivalent(
    C1: LinearCode,
    C2: LinearCode,
    node_cap: int = DEFAULT_NODE_CAP,
    semimonomial: bool = False,
) -> bool:
    """Whether a monomial matrix maps C1 onto C2.

    With ``semimonomial=True`` (diagnostic switch for F4 only) the test
    additionally allows the Frobenius automorphism, i.e. it also
    accepts C1 P = C2^(Frobenius).
    """
    if find_monomial_map(C1, C2, node_cap) is not None:
        return True
    if semimonomial:
        if C1.gf.q != 4:
            raise ValueError("the semimonomial diagnostic applies to F4 only")
        return find_monomial_map(C1, frobenius_image(C2), node_cap) is not None
    return False


def dedupe_into_classes(
    codes,
    node_cap: int = DEFAULT_NODE_CAP,
    semimonomial: bool = False,
) -> list[list[int]]:
    """Partition codes into equivalence classes.

    Returns index groups in first-seen order; the first index of each
    group is its representative, so feeding codes in ascending origin
    order makes representatives the least originating objects.  An
    undecided pairwise test aborts the whole run (UndecidedError).
    """
    codes = list(codes)
    sigs = [signature(c) for c in codes]
    classes: list[list[int]] = []
    for i, code in enumerate(codes):
        placed = False
        for group in classes:
            rep = group[0]
            if sigs[rep] != sigs[i]:
                continue
            if are_equivalent(codes[rep], code, node_cap, semimonomial):
                group.append(i)
                placed = True
                break
        if not placed:
            classes.append([i])
    return classes
