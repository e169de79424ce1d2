"""Reduced exhaustive search and classification of double Toeplitz codes.

The triple space of length n is scanned in its canonical enumeration
order (t slowest, then a, then b, first vector entries least
significant).  Two symmetry filters shrink the space without losing
equivalence classes:

  C2 (binary):     keep (t, a, b) with f(a) >= f(b), where f is the
                   odometer rank; the swapped triple (t, b, a) spans an
                   equivalent code, so one of each swap pair suffices.
  C3 (nonbinary):  keep triples whose (t, a) part has first nonzero
                   entry 1 (all-zero part accepted); scaling a triple
                   by a nonzero constant gives an equivalent code, so
                   one representative per scalar orbit suffices.

Searches are two phase: phase 1 sweeps every filtered triple and
maintains the best minimum weight found; phase 2 rescans and collects
every filtered triple attaining it.  The prefix space (t, a) is split
into contiguous chunks which can run on worker processes; results are
assembled in chunk order, so output is identical for any worker or
partition count.  Each completed chunk can be checkpointed to JSON.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .equivalence import are_equivalent, dedupe_into_classes, signature
from .gf import GF, gf_matmul
from .linear import (
    BudgetExceededError,
    LinearCode,
    _weight_layer_blocks,
    min_weight_at_least,
    minimum_weight,
)
from .structured import (
    CirculantSpec,
    ToeplitzTriple,
    digits_of_index,
    double_circulant_code,
    double_negacirculant_code,
    double_toeplitz_code,
)

__all__ = [
    "CheckpointError",
    "SearchConfig",
    "ClassRecord",
    "ClassificationReport",
    "vector_rank",
    "passes_reduction",
    "search_dt",
    "search_family",
    "find_dt_optimal",
    "find_family_optimal",
    "classify",
    "verify_reduction_soundness",
]

CHECKPOINT_VERSION = 1

# Cap on the raw candidate-space size of one search call.
DEFAULT_TRIPLE_BUDGET = 1 << 26

_B_BLOCK = 4096
_MATMUL_ELEM_BUDGET = 8 << 20


class CheckpointError(RuntimeError):
    """A checkpoint file does not match the requested search."""


@dataclass(frozen=True)
class SearchConfig:
    """Identity of one search run; stored inside checkpoints."""

    q: int
    n: int
    family: str  # "DT" | "DC" | "NC"
    reduction: str  # "none" | "C2" | "C3"
    mode: str  # "find-optimal" | "collect-at" | "at-least"
    d: int | None
    partitions: int

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "family": self.family,
            "reduction": self.reduction,
            "mode": self.mode,
            "d": self.d,
            "partitions": self.partitions,
        }


def vector_rank(a) -> int:
    """Odometer rank f(a) = sum_i 2^(i-1) a_i of a binary vector."""
    a = np.asarray(a)
    if a.size and (a.min() < 0 or a.max() > 1):
        raise ValueError("vector_rank is defined for binary vectors only")
    return int(sum(int(x) << i for i, x in enumerate(a)))


def _c3_prefix_ok(t: int, a) -> bool:
    for x in (t, *a):
        if x:
            return x == 1
    return True


def passes_reduction(T: ToeplitzTriple, reduction: str) -> bool:
    """Whether a triple survives a symmetry filter.

    "none" keeps everything; "C2" (binary only) keeps f(a) >= f(b);
    "C3" (F3/F4 only) keeps triples whose (t, a) part starts with 1,
    all-zero parts included.
    """
    if reduction == "none":
        return True
    if reduction == "C2":
        if T.gf.q != 2:
            raise ValueError("the C2 filter applies to binary searches only")
        return vector_rank(T.a) >= vector_rank(T.b)
    if reduction == "C3":
        if T.gf.q not in (3, 4):
            raise ValueError("the C3 filter applies to F3 and F4 searches only")
        return _c3_prefix_ok(T.t, T.a)
    raise ValueError(f"unknown reduction {reduction!r}")


def _resolve_reduction(q: int, reduction: str) -> str:
    if reduction == "auto":
        return "C2" if q == 2 else "C3"
    if reduction in ("none", "C2", "C3"):
        return reduction
    raise ValueError(f"unknown reduction {reduction!r}")


# ---------------------------------------------------------------------------
# batched minimum-weight threshold testing


class _MessageCache:
    """Messages of weight 1..T-1 over F_q^m, ascending weight."""

    def __init__(self, q: int, m: int):
        self.q = q
        self.m = m
        self._store: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    def upto(self, T: int) -> tuple[np.ndarray, np.ndarray]:
        if T not in self._store:
            blocks, wts = [], []
            for w in range(1, T):
                for msgs in _weight_layer_blocks(self.q, self.m, w):
                    blocks.append(msgs)
                    wts.append(np.full(len(msgs), w, dtype=np.int64))
            if blocks:
                U = np.vstack(blocks)
                uw = np.concatenate(wts)
            else:
                U = np.zeros((0, self.m), dtype=np.int8)
                uw = np.zeros(0, dtype=np.int64)
            self._store[T] = (U, uw)
        return self._store[T]


def _batch_min_at_least(gf: GF, A: np.ndarray, T: int, cache: _MessageCache) -> np.ndarray:
    """Mask of batch entries whose code (I | A_i) has minimum weight >= T.

    Messages of weight >= T already give codewords of weight >= T, so
    only the cached low-weight messages need checking.
    """
    B = A.shape[0]
    if T <= 1:
        return np.ones(B, dtype=bool)
    U, uw = cache.upto(T)
    if not len(U):
        return np.ones(B, dtype=bool)
    m = A.shape[1]
    step = max(1, _MATMUL_ELEM_BUDGET // (len(U) * m))
    ok = np.empty(B, dtype=bool)
    for lo in range(0, B, step):
        hi = min(lo + step, B)
        right = gf_matmul(gf, U, A[lo:hi])  # (hi-lo, NU, m)
        wts = uw[None, :] + np.count_nonzero(right, axis=2)
        ok[lo:hi] = ~np.any(wts < T, axis=1)
    return ok


def _dt_code(gf: GF, A: np.ndarray) -> LinearCode:
    m = A.shape[0]
    return LinearCode(gf, np.hstack([np.eye(m, dtype=np.int8), A]))


# ---------------------------------------------------------------------------
# candidate-space iteration


def _toeplitz_block(gf: GF, t: int, a, ib_lo: int, ib_hi: int) -> np.ndarray:
    """Toeplitz matrices of prefix (t, a) for b indices [lo, hi)."""
    q = gf.q
    L = len(a)
    m = L + 1
    idx = np.arange(ib_lo, ib_hi, dtype=np.int64)
    S = np.empty((len(idx), 2 * m - 1), dtype=np.int8)
    if L:
        powers = q ** np.arange(L, dtype=np.int64)
        bdig = ((idx[:, None] // powers[None, :]) % q).astype(np.int8)
        S[:, :L] = bdig[:, ::-1]
        S[:, L + 1 :] = np.array(a, dtype=np.int8)
    S[:, L] = t
    win = np.lib.stride_tricks.sliding_window_view(S, m, axis=1)
    return win[:, ::-1, :]


def _circulant_block(gf: GF, m: int, idx_lo: int, idx_hi: int, mu_code: int) -> np.ndarray:
    """(Nega)circulant matrices for first-row indices [lo, hi)."""
    q = gf.q
    idx = np.arange(idx_lo, idx_hi, dtype=np.int64)
    powers = q ** np.arange(m, dtype=np.int64)
    R = ((idx[:, None] // powers[None, :]) % q).astype(np.int8)
    S = np.empty((len(idx), 2 * m - 1), dtype=np.int8)
    S[:, : m - 1] = gf.mul_table[mu_code, R[:, 1:]]
    S[:, m - 1 :] = R
    win = np.lib.stride_tricks.sliding_window_view(S, m, axis=1)
    return win[:, ::-1, :]


def _dt_prefixes(q: int, n: int, reduction: str, lo: int, hi: int):
    """Yield (prefix_index, t, a, b_count) for surviving prefixes in [lo, hi)."""
    m = n // 2
    L = m - 1
    qL = q**L
    for pidx in range(lo, hi):
        t, ia = divmod(pidx, qL)
        a = digits_of_index(ia, q, L)
        if reduction == "C3" and not _c3_prefix_ok(t, a):
            continue
        nb = ia + 1 if reduction == "C2" else qL
        yield pidx, t, a, nb


def _space_layout(q: int, n: int, family: str) -> tuple[int, int]:
    """(prefix count, raw space size) of a search family."""
    m = n // 2
    if family == "DT":
        return q**m, q ** (n - 1)
    return q**m, q**m


def _family_mu_code(gf: GF, family: str) -> int:
    if family == "DC":
        return 1
    if family == "NC":
        return int(gf.neg_table[1])
    raise ValueError(f"unknown family {family!r}")


def _spread(total: int, count: int) -> np.ndarray:
    if total <= count:
        return np.arange(total)
    return np.unique(np.linspace(0, total - 1, count).astype(np.int64))


def _probe_floor(gf: GF, n: int, family: str, reduction: str) -> int:
    """Exact minimum weight of a deterministic sample of candidates.

    Raises the initial phase-1 threshold so that early blocks do not
    drown in exact evaluations; any sampled candidate is a genuine
    member of the filtered space, so the floor is always attained.
    """
    q = gf.q
    m = n // 2
    floor = 1
    if family == "DT":
        L = m - 1
        qL = q**L
        for pidx in _spread(q**m, 16):
            t, ia = divmod(int(pidx), qL)
            a = digits_of_index(ia, q, L)
            if reduction == "C3" and not _c3_prefix_ok(t, a):
                continue
            nb = ia + 1 if reduction == "C2" else qL
            for ib in _spread(nb, 8):
                A = _toeplitz_block(gf, t, a, int(ib), int(ib) + 1)[0]
                floor = max(floor, minimum_weight(_dt_code(gf, A)))
    else:
        mu = _family_mu_code(gf, family)
        for ridx in _spread(q**m, 64):
            A = _circulant_block(gf, m, int(ridx), int(ridx) + 1, mu)[0]
            floor = max(floor, minimum_weight(_dt_code(gf, A)))
    return floor


# ---------------------------------------------------------------------------
# chunk scans (top level so worker processes can import them)


def _chunk_phase1(args) -> int:
    q, n, family, reduction, lo, hi, floor = args
    gf = GF(q)
    m = n // 2
    cache = _MessageCache(q, m)
    best = floor

    def absorb(A_block: np.ndarray) -> None:
        nonlocal best
        ok = _batch_min_at_least(gf, A_block, best + 1, cache)
        if not ok.any():
            return
        for off in np.nonzero(ok)[0]:
            code = _dt_code(gf, np.ascontiguousarray(A_block[off]))
            if min_weight_at_least(code, best + 1):
                best = minimum_weight(code)

    if family == "DT":
        for _, t, a, nb in _dt_prefixes(q, n, reduction, lo, hi):
            for blo in range(0, nb, _B_BLOCK):
                absorb(_toeplitz_block(gf, t, a, blo, min(blo + _B_BLOCK, nb)))
    else:
        mu = _family_mu_code(gf, family)
        for blo in range(lo, hi, _B_BLOCK):
            absorb(_circulant_block(gf, m, blo, min(blo + _B_BLOCK, hi), mu))
    return best


def _chunk_collect(args) -> list:
    q, n, family, reduction, lo, hi, d, mode = args
    gf = GF(q)
    m = n // 2
    cache = _MessageCache(q, m)
    out: list = []

    def sift(A_block: np.ndarray, emit) -> None:
        ok = _batch_min_at_least(gf, A_block, d, cache)
        for off in np.nonzero(ok)[0]:
            code = _dt_code(gf, np.ascontiguousarray(A_block[off]))
            if mode == "at-least":
                emit(int(off), minimum_weight(code))
            elif not min_weight_at_least(code, d + 1):
                emit(int(off), d)

    if family == "DT":
        for _, t, a, nb in _dt_prefixes(q, n, reduction, lo, hi):
            for blo in range(0, nb, _B_BLOCK):
                block = _toeplitz_block(gf, t, a, blo, min(blo + _B_BLOCK, nb))
                sift(
                    block,
                    lambda off, mw, t=t, a=a, blo=blo: out.append(
                        [t, list(a), list(digits_of_index(blo + off, q, m - 1)), mw]
                    ),
                )
    else:
        mu = _family_mu_code(gf, family)
        mu_sign = 1 if family == "DC" else -1
        for blo in range(lo, hi, _B_BLOCK):
            block = _circulant_block(gf, m, blo, min(blo + _B_BLOCK, hi), mu)
            sift(
                block,
                lambda off, mw, blo=blo: out.append(
                    [list(digits_of_index(blo + off, q, m)), mu_sign, mw]
                ),
            )
    return out


# ---------------------------------------------------------------------------
# checkpointing


def _load_checkpoint(path: str, config: SearchConfig) -> dict:
    if not path or not os.path.exists(path):
        return {"version": CHECKPOINT_VERSION, "config": config.to_dict(), "phase1": {}, "phase2": {}}
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("version") != CHECKPOINT_VERSION:
        raise CheckpointError(
            f"checkpoint version {data.get('version')} does not match {CHECKPOINT_VERSION}"
        )
    if data.get("config") != config.to_dict():
        raise CheckpointError("checkpoint was written by a different search configuration")
    data.setdefault("phase1", {})
    data.setdefault("phase2", {})
    return data


def _save_checkpoint(path: str, data: dict) -> None:
    if not path:
        return
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


# ---------------------------------------------------------------------------
# search drivers


def _chunk_ranges(total: int, partitions: int) -> list[tuple[int, int]]:
    if partitions < 1:
        raise ValueError("partitions must be positive")
    bounds = np.linspace(0, total, partitions + 1).astype(np.int64)
    return [(int(bounds[i]), int(bounds[i + 1])) for i in range(partitions)]


def _run_chunks(fn, arg_list, workers: int):
    """Run chunk jobs, yielding (chunk_id, result) as they complete."""
    if workers <= 1 or len(arg_list) <= 1:
        for cid, args in enumerate(arg_list):
            yield cid, fn(args)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {cid: pool.submit(fn, args) for cid, args in enumerate(arg_list)}
        for cid in sorted(futures):
            yield cid, futures[cid].result()


def _payload_to_triple(gf: GF, payload, family: str):
    if family == "DT":
        t, a, b, mw = payload
        return ToeplitzTriple(gf, int(t), tuple(a), tuple(b)), int(mw)
    r, mu, mw = payload
    return CirculantSpec(gf, tuple(r), int(mu)), int(mw)


def _search(
    gf: GF,
    n: int,
    family: str,
    reduction: str,
    mode: str,
    d: int | None,
    partitions: int,
    workers: int,
    checkpoint_path: str | None,
    triple_budget: int,
):
    if n % 2 or n < 2:
        raise ValueError(f"length n must be even and positive, got {n}")
    if mode not in ("find-optimal", "collect-at", "at-least"):
        raise ValueError(f"unknown search mode {mode!r}")
    if mode != "find-optimal" and (d is None or d < 1):
        raise ValueError(f"mode {mode!r} needs a positive target weight d")
    q = gf.q
    reduction = _resolve_reduction(q, reduction) if family == "DT" else "none"
    if family == "DT" and reduction != "none":
        # validate compatibility through the same gate as passes_reduction
        if reduction == "C2" and q != 2:
            raise ValueError("the C2 filter applies to binary searches only")
        if reduction == "C3" and q not in (3, 4):
            raise ValueError("the C3 filter applies to F3 and F4 searches only")

    prefix_total, space = _space_layout(q, n, family)
    if space > triple_budget:
        raise BudgetExceededError(
            f"search space {space} exceeds the budget of {triple_budget} candidates"
        )

    config = SearchConfig(q, n, family, reduction, mode, d, partitions)
    state = _load_checkpoint(checkpoint_path, config) if checkpoint_path else None
    ranges = _chunk_ranges(prefix_total, partitions)

    if mode == "find-optimal":
        floor = _probe_floor(gf, n, family, reduction)
        done1 = {int(k): int(v) for k, v in (state or {}).get("phase1", {}).items()}
        todo = [
            (cid, (q, n, family, reduction, lo, hi, floor))
            for cid, (lo, hi) in enumerate(ranges)
            if cid not in done1
        ]
        for cid, best in _run_chunks(_chunk_phase1, [a for _, a in todo], workers):
            real_cid = todo[cid][0]
            done1[real_cid] = best
            if state is not None:
                state["phase1"] = {str(k): v for k, v in done1.items()}
                _save_checkpoint(checkpoint_path, state)
        threshold = max(done1.values())
    else:
        threshold = d

    done2 = {}
    if state is not None:
        stored = state.get("phase2", {})
        if stored.get("threshold") not in (None, threshold):
            raise CheckpointError("checkpoint phase-2 threshold does not match")
        done2 = {int(k): v for k, v in stored.get("chunks", {}).items()}
    collect_mode = "at-least" if mode == "at-least" else "collect-at"
    todo = [
        (cid, (q, n, family, reduction, lo, hi, threshold, collect_mode))
        for cid, (lo, hi) in enumerate(ranges)
        if cid not in done2
    ]
    for cid, payloads in _run_chunks(_chunk_collect, [a for _, a in todo], workers):
        real_cid = todo[cid][0]
        done2[real_cid] = payloads
        if state is not None:
            state["phase2"] = {
                "threshold": threshold,
                "chunks": {str(k): v for k, v in done2.items()},
            }
            _save_checkpoint(checkpoint_path, state)

    records = []
    for cid in range(partitions):
        for payload in done2.get(cid, []):
            records.append(_payload_to_triple(gf, payload, family))
    return threshold, records


def search_dt(
    gf: GF,
    n: int,
    reduction: str = "auto",
    mode: str = "find-optimal",
    d: int | None = None,
    *,
    partitions: int = 1,
    workers: int = 1,
    checkpoint_path: str | None = None,
    triple_budget: int = DEFAULT_TRIPLE_BUDGET,
):
    """Scan the (filtered) double Toeplitz triple space.

    Returns ``(d_ref, records)`` where records are ``(triple, min_weight)``
    pairs in enumeration order.  In "find-optimal" mode ``d_ref`` is the
    family optimum and the records are exactly the optimal triples.
    """
    return _search(
        gf, n, "DT", reduction, mode, d, partitions, workers, checkpoint_path, triple_budget
    )


def search_family(
    gf: GF,
    n: int,
    family: str,
    mode: str = "find-optimal",
    d: int | None = None,
    *,
    partitions: int = 1,
    workers: int = 1,
    checkpoint_path: str | None = None,
    triple_budget: int = DEFAULT_TRIPLE_BUDGET,
):
    """Scan all first rows r of a circulant family ("DC" or "NC")."""
    if family not in ("DC", "NC"):
        raise ValueError(f"unknown family {family!r}")
    return _search(
        gf, n, family, "none", mode, d, partitions, workers, checkpoint_path, triple_budget
    )


def find_dt_optimal(
    gf: GF,
    n: int,
    reduction: str = "auto",
    *,
    partitions: int = 1,
    workers: int = 1,
    checkpoint_path: str | None = None,
    triple_budget: int = DEFAULT_TRIPLE_BUDGET,
) -> tuple[int, list[ToeplitzTriple]]:
    """Best minimum weight over the filtered triples, and all attainers."""
    d_opt, records = search_dt(
        gf,
        n,
        reduction,
        "find-optimal",
        partitions=partitions,
        workers=workers,
        checkpoint_path=checkpoint_path,
        triple_budget=triple_budget,
    )
    return d_opt, [T for T, _ in records]


def find_family_optimal(
    gf: GF,
    n: int,
    family: str,
    *,
    partitions: int = 1,
    workers: int = 1,
    checkpoint_path: str | None = None,
    triple_budget: int = DEFAULT_TRIPLE_BUDGET,
) -> tuple[int, list[CirculantSpec]]:
    """Best minimum weight over a circulant family, and all attainers."""
    d_opt, records = search_family(
        gf,
        n,
        family,
        "find-optimal",
        partitions=partitions,
        workers=workers,
        checkpoint_path=checkpoint_path,
        triple_budget=triple_budget,
    )
    return d_opt, [s for s, _ in records]


# ---------------------------------------------------------------------------
# classification


@dataclass
class ClassRecord:
    class_id: int
    representative: ToeplitzTriple
    members: int
    structure: str  # "DC" | "NC" | "DT-only"

    def to_dict(self, q: int, n: int, d: int) -> dict:
        return {
            "q": q,
            "n": n,
            "d": d,
            "class_id": self.class_id,
            "representative_triple": self.representative.to_text(),
            "members": self.members,
            "structure": self.structure,
        }


@dataclass
class ClassificationReport:
    """Equivalence classes of the optimal codes of one (q, n) cell."""

    q: int
    n: int
    d_opt: int
    records: list[ClassRecord] = field(default_factory=list)

    @property
    def n_dt(self) -> int:
        return sum(1 for r in self.records if r.structure == "DT-only")

    @property
    def n_dc(self) -> int:
        return sum(1 for r in self.records if r.structure == "DC")

    @property
    def n_nc(self) -> int:
        return sum(1 for r in self.records if r.structure == "NC")

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "d": self.d_opt,
            "counts": {"dt_only": self.n_dt, "dc": self.n_dc, "nc": self.n_nc},
            "classes": [r.to_dict(self.q, self.n, self.d_opt) for r in self.records],
        }


def _equivalent_to_any(code: LinearCode, sig, pool_codes, pool_sigs, semimonomial) -> bool:
    for other, other_sig in zip(pool_codes, pool_sigs):
        if sig == other_sig and are_equivalent(code, other, semimonomial=semimonomial):
            return True
    return False


def classify(
    gf: GF,
    n: int,
    *,
    reduction: str = "auto",
    partitions: int = 1,
    workers: int = 1,
    semimonomial: bool = False,
    checkpoint_path: str | None = None,
    triple_budget: int = DEFAULT_TRIPLE_BUDGET,
) -> ClassificationReport:
    """Classify the optimal double Toeplitz codes of length n.

    Finds every filtered triple attaining the optimal minimum weight,
    splits them into equivalence classes, and labels each class "DC"
    when it contains a double circulant code, "NC" (F3 only; over F2
    and F4 negacirculant equals circulant) when it contains a double
    negacirculant but no double circulant code, and "DT-only"
    otherwise.

    Classes are monomial-equivalence classes by default, for every q;
    the semimonomial diagnostic (F4) merges Frobenius-conjugate classes
    and changes the counts (already at n = 8).
    """
    d_opt, triples = find_dt_optimal(
        gf,
        n,
        reduction,
        partitions=partitions,
        workers=workers,
        checkpoint_path=checkpoint_path,
        triple_budget=triple_budget,
    )
    codes = [double_toeplitz_code(T) for T in triples]
    groups = dedupe_into_classes(codes, semimonomial=semimonomial)

    families: list[tuple[str, list[LinearCode], list]] = []
    for family in ("DC",) + (("NC",) if gf.q == 3 else ()):
        d_fam, specs = find_family_optimal(gf, n, family, triple_budget=triple_budget)
        if d_fam > d_opt:
            raise AssertionError("family optimum exceeded the full-space optimum")
        fam_codes = []
        if d_fam == d_opt:
            build = double_circulant_code if family == "DC" else double_negacirculant_code
            fam_codes = [build(s) for s in specs]
        families.append((family, fam_codes, [signature(c) for c in fam_codes]))

    report = ClassificationReport(gf.q, n, d_opt)
    for class_id, group in enumerate(groups):
        rep_triple = min((triples[i] for i in group), key=ToeplitzTriple.lex_key)
        rep_code = codes[group[0]]
        if minimum_weight(rep_code) != d_opt:
            raise AssertionError("class representative does not attain the optimum")
        sig = signature(rep_code)
        structure = "DT-only"
        for family, fam_codes, fam_sigs in families:
            if _equivalent_to_any(rep_code, sig, fam_codes, fam_sigs, semimonomial):
                structure = family
                break
        report.records.append(ClassRecord(class_id, rep_triple, len(group), structure))
    return report


def verify_reduction_soundness(gf: GF, n: int, *, semimonomial: bool = False) -> bool:
    """Check that the symmetry filter loses no equivalence class.

    Runs the optimal-triple search twice, with the default filter and
    with no filter, and compares: equal optima, equal class counts, and
    a one-to-one equivalence matching between the representatives.
    """
    d_f, triples_f = find_dt_optimal(gf, n)
    d_u, triples_u = find_dt_optimal(gf, n, reduction="none")
    if d_f != d_u:
        return False
    codes_f = [double_toeplitz_code(T) for T in triples_f]
    codes_u = [double_toeplitz_code(T) for T in triples_u]
    groups_f = dedupe_into_classes(codes_f, semimonomial=semimonomial)
    groups_u = dedupe_into_classes(codes_u, semimonomial=semimonomial)
    if len(groups_f) != len(groups_u):
        return False
    reps_u = [codes_u[g[0]] for g in groups_u]
    sigs_u = [signature(c) for c in reps_u]
    for group in groups_f:
        rep = codes_f[group[0]]
        if not _equivalent_to_any(rep, signature(rep), reps_u, sigs_u, semimonomial):
            return False
    return True
