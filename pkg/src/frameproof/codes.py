"""Words, codes, descendant semantics, and the ``.fpc`` text format."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Word = tuple[int, ...]

DESCENDANT_CAP = 10**6


class BudgetExceeded(Exception):
    """An exhaustive enumeration would exceed its configured limit."""

    def __init__(self, message: str, examined: int | None = None):
        super().__init__(message)
        self.examined = examined


@dataclass(frozen=True)
class Code:
    """A set of equal-length words over the alphabet ``{0, ..., q-1}``.

    ``words`` is kept lexicographically sorted so that iteration and
    serialisation are reproducible.  ``inf_id`` designates the optional
    infinity (star) symbol used by the star-structured constructions;
    every code built by this package uses id 0 for it.
    """

    length: int
    q: int
    words: tuple[Word, ...]
    inf_id: int | None = None

    @property
    def size(self) -> int:
        return len(self.words)

    def __repr__(self) -> str:
        inf = "none" if self.inf_id is None else self.inf_id
        return f"Code(q={self.q}, l={self.length}, M={self.size}, inf={inf})"


def make_code(length: int, q: int, words, inf_id: int | None = None) -> Code:
    """Validate and canonicalise a word collection into a :class:`Code`.

    Duplicate words, wrong lengths, and out-of-range symbols are all
    rejected with distinct diagnostics.
    """
    if length < 1:
        raise ValueError("length must be a positive integer")
    if q < 2:
        raise ValueError("alphabet size must be at least 2")
    if inf_id is not None and not 0 <= inf_id < q:
        raise ValueError(f"inf_id {inf_id} out of range 0..{q - 1}")
    seen: set[Word] = set()
    out: list[Word] = []
    for w in words:
        tup = tuple(int(v) for v in w)
        if len(tup) != length:
            raise ValueError(f"word {tup} has length {len(tup)}, expected {length}")
        for v in tup:
            if not 0 <= v < q:
                raise ValueError(f"symbol {v} out of range 0..{q - 1} in word {tup}")
        if tup in seen:
            raise ValueError(f"duplicate word {tup}")
        seen.add(tup)
        out.append(tup)
    return Code(length, q, tuple(sorted(out)), inf_id)


def descendant_contains(coalition, word) -> bool:
    """True iff every position of ``word`` matches some coalition member there."""
    pool = [tuple(y) for y in coalition]
    if not pool:
        raise ValueError("coalition must be non-empty")
    x = tuple(word)
    if any(len(y) != len(x) for y in pool):
        raise ValueError("coalition and word must have equal lengths")
    return all(any(y[i] == x[i] for y in pool) for i in range(len(x)))


def enumerate_descendants(coalition, cap: int = DESCENDANT_CAP) -> set[Word]:
    """Materialise the full descendant set of a coalition.

    The set has exactly ``prod_i |{y_i}|`` elements; enumeration refuses
    to run past ``cap`` so callers cannot blow up by accident.
    Membership questions should go through :func:`descendant_contains`,
    which never enumerates.
    """
    pool = [tuple(y) for y in coalition]
    if not pool:
        raise ValueError("coalition must be non-empty")
    length = len(pool[0])
    if any(len(y) != length for y in pool):
        raise ValueError("coalition words must have equal lengths")
    choices = [sorted({y[i] for y in pool}) for i in range(length)]
    total = 1
    for ch in choices:
        total *= len(ch)
        if total > cap:
            raise BudgetExceeded(
                f"descendant set would exceed the cap of {cap} words"
            )
    return set(itertools.product(*choices))


def apply_coordinate_permutation(code: Code, position: int, permutation) -> Code:
    """Apply a symbol permutation to one coordinate of every word.

    Frameproofness is invariant under this operation; the star structure
    at that coordinate may not be, so ``inf_id`` is carried over as-is.
    """
    if not 0 <= position < code.length:
        raise ValueError(f"position {position} out of range 0..{code.length - 1}")
    sigma = tuple(int(v) for v in permutation)
    if sorted(sigma) != list(range(code.q)):
        raise ValueError("permutation must be a bijection on 0..q-1")
    words = [
        w[:position] + (sigma[w[position]],) + w[position + 1 :] for w in code.words
    ]
    return Code(code.length, code.q, tuple(sorted(words)), code.inf_id)


@dataclass(frozen=True)
class PairAlphabet:
    """Bijection between (base symbol, field element) pairs and ``0..q-1``.

    The infinity pair maps to 0; a pair ``(b, y)`` with ``b`` in
    ``1..s-1`` and ``y`` in ``0..m-1`` maps to ``(b-1)*m + y + 1``, so
    the flattened alphabet has ``q = (s-1)*m + 1`` symbols.
    """

    base_size: int  # s: parent alphabet size, infinity included
    field_order: int  # m

    @property
    def q(self) -> int:
        return (self.base_size - 1) * self.field_order + 1

    def flatten(self, b: int, y: int) -> int:
        if not 1 <= b < self.base_size:
            raise ValueError(f"base symbol {b} out of range 1..{self.base_size - 1}")
        if not 0 <= y < self.field_order:
            raise ValueError(f"field element {y} out of range 0..{self.field_order - 1}")
        return (b - 1) * self.field_order + y + 1

    def flatten_infinity(self) -> int:
        return 0

    def unflatten(self, symbol: int) -> tuple[int, int] | None:
        """Inverse map; the infinity symbol 0 comes back as ``None``."""
        if not 0 <= symbol < self.q:
            raise ValueError(f"symbol {symbol} out of range 0..{self.q - 1}")
        if symbol == 0:
            return None
        return (symbol - 1) // self.field_order + 1, (symbol - 1) % self.field_order


def flatten_pair_alphabet(s: int, m: int) -> PairAlphabet:
    if s < 2:
        raise ValueError("base alphabet size must be at least 2")
    if m < 2:
        raise ValueError("field order must be at least 2")
    return PairAlphabet(s, m)


@dataclass(frozen=True)
class Witness:
    """Counterexample certificate returned by the verifiers.

    ``kind`` is one of:

    * ``"framed"``      -- ``coalition`` can produce ``framed_word``;
    * ``"inf_count"``   -- ``pair[0]`` carries too many infinity entries
      (at ``positions``);
    * ``"agreement"``   -- ``pair`` agree in too many non-infinity
      ``positions``;
    * ``"oa_count"``    -- in the array rows ``rows``, the column tuple
      ``symbols`` appears ``count`` times instead of ``expected``.
    """

    kind: str
    coalition: tuple[Word, ...] | None = None
    framed_word: Word | None = None
    pair: tuple[Word, ...] | None = None
    positions: tuple[int, ...] | None = None
    rows: tuple[int, ...] | None = None
    symbols: tuple[int, ...] | None = None
    count: int | None = None
    expected: int | None = None


def framed_witness_holds(witness: Witness) -> bool:
    """Revalidate a framing certificate independently of the search that found it."""
    if witness.kind != "framed":
        raise ValueError(f"not a framing witness: kind={witness.kind!r}")
    if witness.coalition is None or witness.framed_word is None:
        return False
    return witness.framed_word not in witness.coalition and descendant_contains(
        witness.coalition, witness.framed_word
    )


# --- .fpc text format ------------------------------------------------------
#
# line 1:    fpc1 q=<q> l=<l> M=<M> inf=<id|none>
# lines 2..: l space-separated symbol ids, lexicographically sorted; when an
#            infinity id is declared its occurrences are written as `*`, and
#            `*` is accepted on input as an alias for it.

_FPC_MAGIC = "fpc1"
INF_ALIAS = "*"


def code_to_text(code: Code) -> str:
    inf = "none" if code.inf_id is None else str(code.inf_id)
    lines = [f"{_FPC_MAGIC} q={code.q} l={code.length} M={code.size} inf={inf}"]
    for w in code.words:
        toks = [
            INF_ALIAS if code.inf_id is not None and v == code.inf_id else str(v)
            for v in w
        ]
        lines.append(" ".join(toks))
    return "\n".join(lines) + "\n"


def _parse_header(line: str) -> tuple[int, int, int, int | None]:
    parts = line.split()
    if len(parts) != 5 or parts[0] != _FPC_MAGIC:
        raise ValueError(f"bad code header: {line!r}")
    vals = {}
    for part, key in zip(parts[1:], ("q", "l", "M", "inf")):
        name, _, raw = part.partition("=")
        if name != key:
            raise ValueError(f"bad code header field {part!r}, expected {key}=...")
        vals[key] = raw
    q, length, size = int(vals["q"]), int(vals["l"]), int(vals["M"])
    inf_id = None if vals["inf"] == "none" else int(vals["inf"])
    return q, length, size, inf_id


def code_from_text(text: str) -> Code:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code file")
    q, length, size, inf_id = _parse_header(lines[0])
    body = lines[1:]
    if len(body) != size:
        raise ValueError(f"header says M={size} but file has {len(body)} word lines")
    words = []
    for ln in body:
        toks = ln.split()
        if len(toks) != length:
            raise ValueError(f"word line {ln!r} has {len(toks)} symbols, expected {length}")
        word = []
        for tok in toks:
            if tok == INF_ALIAS:
                if inf_id is None:
                    raise ValueError("'*' used but no infinity id is declared")
                word.append(inf_id)
            else:
                word.append(int(tok))
        words.append(tuple(word))
    return make_code(length, q, words, inf_id)


def write_code_file(code: Code, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(code_to_text(code))


def read_code_file(path) -> Code:
    with open(path, "r", encoding="ascii") as fh:
        return code_from_text(fh.read())
