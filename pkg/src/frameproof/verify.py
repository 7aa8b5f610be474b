"""Brute-force oracles for frameproofness and t-determinedness.

Two independent algorithms decide the frameproof property:

* :func:`is_frameproof_naive` enumerates every coalition of at most c
  codewords and intersects its descendant set with the code;
* :func:`is_frameproof_cover` asks, for each codeword x, whether the
  agreement sets of at most c other codewords can cover every position.

They always agree; having both lets each one act as an oracle for the
other and for every construction in the package.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .codes import BudgetExceeded, Code, Witness

NAIVE_BUDGET = 10**8


@dataclass(frozen=True)
class VerifyReport:
    verdict: bool
    witness: Witness | None
    subsets_examined: int
    elapsed: float


def _decode_mask(mask: int, words) -> tuple:
    out = []
    while mask:
        low = mask & -mask
        out.append(words[low.bit_length() - 1])
        mask ^= low
    return tuple(out)


def is_frameproof_naive(code: Code, c: int, budget: int = NAIVE_BUDGET) -> VerifyReport:
    """Decide c-frameproofness by exhaustive coalition enumeration.

    For every subset P of at most c codewords the set desc(P) & C is
    computed (as a bitmask over word indices, one AND per position) and
    compared with P itself.  Subsets are visited in lexicographic order
    of sorted word indices and the first offending (P, x) is returned,
    so reports are deterministic.  Work is metered in (subset,
    candidate) pairs; crossing ``budget`` raises :class:`BudgetExceeded`
    with the partial progress attached.
    """
    if c < 2:
        raise ValueError("c must be at least 2")
    start = time.perf_counter()
    words = code.words
    big_m = len(words)
    length = code.length
    by_pos = [[0] * code.q for _ in range(length)]
    for idx, w in enumerate(words):
        bit = 1 << idx
        for pos, sym in enumerate(w):
            by_pos[pos][sym] |= bit
    # per word, its membership mask at every position
    items = [
        (1 << idx, tuple(by_pos[pos][w[pos]] for pos in range(length)))
        for idx, w in enumerate(words)
    ]
    examined = 0
    used = 0
    for k in range(1, min(c, big_m) + 1):
        per_subset = big_m - k
        for combo in combinations(items, k):
            used += per_subset
            if used > budget:
                raise BudgetExceeded(
                    f"naive verification budget of {budget} (subset, candidate) "
                    f"pairs exceeded after {examined} subsets",
                    examined=examined,
                )
            examined += 1
            if per_subset == 0:
                continue
            pm = 0
            acc = 0
            for bit, masks in combo:
                pm |= bit
                acc |= masks[0]
            # acc only shrinks and always contains pm, so equality is final
            for pos in range(1, length):
                if acc == pm:
                    break
                union = 0
                for _, masks in combo:
                    union |= masks[pos]
                acc &= union
            if acc != pm:
                extra = acc & ~pm
                framed = words[(extra & -extra).bit_length() - 1]
                witness = Witness(
                    kind="framed",
                    coalition=_decode_mask(pm, words),
                    framed_word=framed,
                )
                return VerifyReport(False, witness, examined, time.perf_counter() - start)
    return VerifyReport(True, None, examined, time.perf_counter() - start)


def _scan_cover_range(words, length: int, c: int, lo: int, hi: int):
    """Search x in words[lo:hi] for a <=c agreement-set cover of all positions.

    Returns ``(found, nodes)`` where found is None or
    ``(x_index, coalition_words, x)``.
    """
    full = (1 << length) - 1
    nodes = 0
    for xi in range(lo, hi):
        x = words[xi]
        rep: dict[int, tuple] = {}
        for y in words:
            if y == x:
                continue
            mask = 0
            for pos in range(length):
                if y[pos] == x[pos]:
                    mask |= 1 << pos
            if mask and mask not in rep:
                rep[mask] = y
        union = 0
        for mask in rep:
            union |= mask
        if union != full:
            continue
        masks = sorted(rep)
        by_pos = [[m for m in masks if (m >> pos) & 1] for pos in range(length)]
        chosen: list[int] = []

        def dfs(covered: int) -> bool:
            nonlocal nodes
            nodes += 1
            if covered == full:
                return True
            if len(chosen) == c:
                return False
            pos = ((~covered) & full & -((~covered) & full)).bit_length() - 1
            for m in by_pos[pos]:
                if m & ~covered:
                    chosen.append(m)
                    if dfs(covered | m):
                        return True
                    chosen.pop()
            return False

        if dfs(0):
            coalition = tuple(sorted(rep[m] for m in chosen))
            return (xi, coalition, x), nodes
    return None, nodes


def _cover_chunk(args):
    return _scan_cover_range(*args)


def is_frameproof_cover(code: Code, c: int, jobs: int = 1) -> VerifyReport:
    """Decide c-frameproofness via exact depth-<=c set-cover search.

    A codeword x can be framed iff the agreement sets A_y = {i : y_i =
    x_i} of at most c codewords y != x cover every position.  Agreement
    masks are deduplicated before the search, which keeps the per-word
    cost tiny for the star-structured codes built here.  With ``jobs``
    > 1 the scan over x parallelises across processes; the reported
    witness is then still the one with the smallest x, matching the
    single-worker result.  ``subsets_examined`` counts search nodes.
    """
    if c < 2:
        raise ValueError("c must be at least 2")
    start = time.perf_counter()
    words = code.words
    big_m = len(words)
    if jobs > 1 and big_m > 1:
        step = -(-big_m // jobs)
        chunks = [
            (words, code.length, c, lo, min(lo + step, big_m))
            for lo in range(0, big_m, step)
        ]
        nodes = 0
        best = None
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for found, n in pool.map(_cover_chunk, chunks):
                nodes += n
                if found is not None and (best is None or found[0] < best[0]):
                    best = found
        found = best
    else:
        found, nodes = _scan_cover_range(words, code.length, c, 0, big_m)
    elapsed = time.perf_counter() - start
    if found is None:
        return VerifyReport(True, None, nodes, elapsed)
    _, coalition, x = found
    witness = Witness(kind="framed", coalition=coalition, framed_word=x)
    return VerifyReport(False, witness, nodes, elapsed)


def is_t_determined(code: Code, t: int) -> VerifyReport:
    """Check that any t non-infinity coordinates pin down a codeword.

    Concretely: (a) every word carries at most t-1 infinity entries, and
    (b) no two distinct words agree in t or more positions where both
    are non-infinity.  Clause (b) is decided by hashing every word's
    projection onto each set of t positions, so the check is linear in
    the code size per position subset.
    """
    inf = code.inf_id
    if inf is None:
        raise ValueError("code has no infinity symbol")
    if t < 1:
        raise ValueError("t must be at least 1")
    start = time.perf_counter()
    checks = 0
    for w in code.words:
        checks += 1
        inf_positions = tuple(i for i, v in enumerate(w) if v == inf)
        if len(inf_positions) > t - 1:
            witness = Witness(kind="inf_count", pair=(w,), positions=inf_positions)
            return VerifyReport(False, witness, checks, time.perf_counter() - start)
    for subset in combinations(range(code.length), t):
        seen: dict[tuple, tuple] = {}
        for w in code.words:
            checks += 1
            key = tuple(w[i] for i in subset)
            if inf in key:
                continue
            prev = seen.get(key)
            if prev is not None:
                agree = tuple(
                    i for i in range(code.length) if prev[i] == w[i] and w[i] != inf
                )
                witness = Witness(kind="agreement", pair=(prev, w), positions=agree)
                return VerifyReport(False, witness, checks, time.perf_counter() - start)
            seen[key] = w
    return VerifyReport(True, None, checks, time.perf_counter() - start)
