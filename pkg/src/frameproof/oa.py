"""Orthogonal arrays: strength-2 generator, exhaustive checker, code bridges."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .codes import Code, Witness, make_code
from .gf import is_prime_power, make_field
from .verify import VerifyReport


@dataclass(frozen=True, eq=False)
class OrthogonalArray:
    """A k x N array over s symbols in which every t rows are balanced.

    Balanced means: restricted to any t rows, each of the s**t column
    tuples appears exactly ``index`` = N / s**t times.  The dataclass
    only guarantees the shape bookkeeping; :func:`verify_oa` checks the
    balance property itself.
    """

    levels: int  # s
    strength: int  # t
    array: np.ndarray  # k x N, entries 0..s-1

    @property
    def constraints(self) -> int:
        return self.array.shape[0]

    @property
    def runs(self) -> int:
        return self.array.shape[1]

    @property
    def index(self) -> int:
        return self.runs // self.levels**self.strength

    def __repr__(self) -> str:
        return (
            f"OA(N={self.runs}, k={self.constraints}, s={self.levels}, "
            f"t={self.strength}, lambda={self.index})"
        )


def make_oa(rows, levels: int, strength: int) -> OrthogonalArray:
    arr = np.asarray(rows, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError("array must be two-dimensional")
    k, n = arr.shape
    if levels < 2:
        raise ValueError("levels must be at least 2")
    if not 1 <= strength <= k:
        raise ValueError(f"strength {strength} out of range 1..{k}")
    if arr.min() < 0 or arr.max() >= levels:
        raise ValueError(f"entries must lie in 0..{levels - 1}")
    if n % levels**strength != 0:
        raise ValueError(
            f"run count {n} is not a multiple of {levels}**{strength}"
        )
    arr = arr.copy()
    arr.flags.writeable = False
    return OrthogonalArray(levels, strength, arr)


def build_oa_strength2(s: int) -> OrthogonalArray:
    """The classical strength-2 array with s+1 rows and s**2 columns.

    Columns are indexed by pairs (a, b) of field elements in canonical
    order; the row for each field element alpha holds a*alpha + b and a
    final slope row holds a.  Any two rows determine (a, b) uniquely, so
    every pair of symbols appears exactly once.
    """
    if is_prime_power(s) is None:
        raise ValueError(f"{s} is not a prime power")
    field = make_field(s)
    elements = field.canonical_elements()
    n = s * s
    arr = np.zeros((s + 1, n), dtype=np.int64)
    for col, (a, b) in enumerate(product(elements, elements)):
        for r, alpha in enumerate(elements):
            arr[r, col] = field.add(field.mul(a, alpha), b)
        arr[s, col] = a
    return make_oa(arr, s, 2)


def verify_oa(oa: OrthogonalArray) -> VerifyReport:
    """Exhaustively count column tuples in every t-row submatrix."""
    start = time.perf_counter()
    t = oa.strength
    s = oa.levels
    lam = oa.index
    rows = [oa.array[r].tolist() for r in range(oa.constraints)]
    examined = 0
    for subset in combinations(range(oa.constraints), t):
        examined += 1
        counts = Counter(zip(*(rows[r] for r in subset)))
        if len(counts) == s**t and all(v == lam for v in counts.values()):
            continue
        for tup in product(range(s), repeat=t):
            got = counts.get(tup, 0)
            if got != lam:
                witness = Witness(
                    kind="oa_count",
                    rows=subset,
                    symbols=tup,
                    count=got,
                    expected=lam,
                )
                return VerifyReport(False, witness, examined, time.perf_counter() - start)
    return VerifyReport(True, None, examined, time.perf_counter() - start)


def normalize_column_to_infinity(oa: OrthogonalArray, col: int) -> OrthogonalArray:
    """Make one column all-zero by swapping two symbols within each row.

    Per-row symbol permutations preserve the balance property (they act
    bijectively on column tuples), and symbol 0 plays the infinity role
    downstream.
    """
    if not 0 <= col < oa.runs:
        raise ValueError(f"column {col} out of range 0..{oa.runs - 1}")
    arr = oa.array.copy()
    for r in range(oa.constraints):
        v = int(arr[r, col])
        if v != 0:
            row = arr[r]
            zero_at = row == 0
            v_at = row == v
            row[zero_at] = v
            row[v_at] = 0
    return make_oa(arr, oa.levels, oa.strength)


def oa_to_frameproof(oa: OrthogonalArray, c: int) -> Code:
    """Read the columns as codewords; c-frameproof whenever k > c*(t-1).

    Distinct columns of an index-1 array agree in at most t-1 rows, so
    any coalition of at most c words leaves some position unmatched for
    every outside word.
    """
    if c < 2:
        raise ValueError("c must be at least 2")
    if not oa.constraints > c * (oa.strength - 1):
        raise ValueError(
            f"need more rows than c*(t-1) = {c * (oa.strength - 1)}, have {oa.constraints}"
        )
    words = [tuple(int(v) for v in oa.array[:, j]) for j in range(oa.runs)]
    return make_code(oa.constraints, oa.levels, words)


def oa_to_pt_code(oa: OrthogonalArray) -> Code:
    """Turn an index-1 strength-t array into a t-determined code.

    Column 0 is normalised to all-zero and dropped; the remaining
    s**t - 1 columns, with 0 as the infinity symbol, each carry at most
    t-1 zeros and pairwise agree in at most t-1 positions.
    """
    if oa.index != 1:
        raise ValueError(f"array index must be 1, got {oa.index}")
    norm = normalize_column_to_infinity(oa, 0)
    words = [tuple(int(v) for v in norm.array[:, j]) for j in range(1, norm.runs)]
    return make_code(oa.constraints, oa.levels, words, inf_id=0)


# --- .oa text format --------------------------------------------------------
#
# line 1:    oa1 N=<N> k=<k> s=<s> t=<t>
# lines 2..: k rows of N space-separated symbols.

_OA_MAGIC = "oa1"


def oa_to_text(oa: OrthogonalArray) -> str:
    k, n = oa.array.shape
    lines = [f"{_OA_MAGIC} N={n} k={k} s={oa.levels} t={oa.strength}"]
    for r in range(k):
        lines.append(" ".join(str(int(v)) for v in oa.array[r]))
    return "\n".join(lines) + "\n"


def oa_from_text(text: str) -> OrthogonalArray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty array file")
    parts = lines[0].split()
    if len(parts) != 5 or parts[0] != _OA_MAGIC:
        raise ValueError(f"bad array header: {lines[0]!r}")
    vals = {}
    for part, key in zip(parts[1:], ("N", "k", "s", "t")):
        name, _, raw = part.partition("=")
        if name != key:
            raise ValueError(f"bad array header field {part!r}, expected {key}=...")
        vals[key] = int(raw)
    if len(lines) - 1 != vals["k"]:
        raise ValueError(f"header says k={vals['k']} but file has {len(lines) - 1} rows")
    rows = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != vals["N"]:
            raise ValueError(f"row {ln!r} has {len(toks)} entries, expected {vals['N']}")
        rows.append([int(tok) for tok in toks])
    return make_oa(rows, vals["s"], vals["t"])


def write_oa_file(oa: OrthogonalArray, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(oa_to_text(oa))


def read_oa_file(path) -> OrthogonalArray:
    with open(path, "r", encoding="ascii") as fh:
        return oa_from_text(fh.read())
