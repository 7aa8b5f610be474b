"""Built-in base codes and the alphabet-expanding composition operators."""

from __future__ import annotations

import itertools

from .codes import Code, flatten_pair_alphabet, make_code
from .gf import is_prime_power, leading_coeff, make_field
from .oa import build_oa_strength2, oa_to_pt_code
from .verify import is_t_determined

# Fixture word patterns.  A plain pattern entry is None for an infinity slot
# or the shift added to the running index i (symbol (i+shift) mod k, encoded
# as value+1 with infinity as 0).  A pair pattern entry is None or
# (shift, point): the symbol is the flattened pair ((i+shift) mod k, f(point))
# where f runs over the degree-<2 polynomials over GF(m); point None takes
# f's degree-1 coefficient instead of an evaluation.
_PLAIN_BASES = {
    "q3": (2, (
        (None, 0, 0, 0),
        (0, None, 0, 1),
        (0, 1, None, 0),
        (0, 0, 1, None),
    )),
    "q4": (3, (
        (None, 0, 0, 0, 0),
        (0, None, 0, 1, 2),
        (0, 0, None, 2, 1),
        (0, 1, 2, None, 0),
        (0, 2, 1, 0, None),
    )),
}
_PAIR_BASES = {
    "q5": (2, 2, (
        (None, (0, 0), (0, 1), (0, None)),
        ((0, 0), None, (0, 1), (1, None)),
        ((0, 0), (1, 1), None, (0, None)),
        ((0, 0), (0, 1), (1, None), None),
    )),
    "q10": (3, 3, (
        (None, (0, 0), (0, 1), (0, 2), (0, None)),
        ((0, 0), None, (0, 1), (1, 2), (2, None)),
        ((0, 0), (0, 1), None, (2, 2), (1, None)),
        ((0, 0), (1, 1), (2, 2), None, (0, None)),
        ((0, 0), (2, 1), (1, 2), (0, None), None),
    )),
}

# name -> (q, length, size, c)
BASE_CODE_INFO = {
    "q3": (3, 4, 8, 2),
    "q4": (4, 5, 15, 3),
    "q5": (5, 4, 32, 2),
    "q10": (10, 5, 135, 3),
}


def _plain_base_words(k: int, patterns) -> list[tuple[int, ...]]:
    words = []
    for pattern in patterns:
        for i in range(k):
            words.append(
                tuple(0 if e is None else (i + e) % k + 1 for e in pattern)
            )
    return words


def _pair_base_words(k: int, m: int, patterns) -> list[tuple[int, ...]]:
    field = make_field(m)
    words = []
    for pattern in patterns:
        for i in range(k):
            for coeffs in itertools.product(range(m), repeat=2):
                word = []
                for entry in pattern:
                    if entry is None:
                        word.append(0)
                        continue
                    shift, point = entry
                    y = (
                        leading_coeff(coeffs, 2)
                        if point is None
                        else field.eval_poly(coeffs, point)
                    )
                    word.append(((i + shift) % k) * m + y + 1)
                words.append(tuple(word))
    return words


def base_code(name: str) -> Code:
    """One of the four hard-coded 2-determined base codes.

    ``q3``/``q4`` are the small hand patterns over {infinity} + Z_k;
    ``q5``/``q10`` tag those patterns with degree-<2 polynomial values
    over GF(2)/GF(3), then flatten the pair alphabet.
    """
    if name in _PLAIN_BASES:
        k, patterns = _PLAIN_BASES[name]
        words = _plain_base_words(k, patterns)
    elif name in _PAIR_BASES:
        k, m, patterns = _PAIR_BASES[name]
        words = _pair_base_words(k, m, patterns)
    else:
        raise ValueError(f"unknown base code {name!r}; choose from {sorted(BASE_CODE_INFO)}")
    q, length, size, _ = BASE_CODE_INFO[name]
    code = make_code(length, q, words, inf_id=0)
    assert code.size == size
    return code


def default_eval_points(m: int, length: int) -> tuple[int | None, ...]:
    """The first ``length`` canonical field elements, infinity last if needed.

    ``None`` stands for the infinity point.  The default is part of the
    reproducibility contract; callers may pass their own distinct points.
    """
    if m < length - 1:
        raise ValueError(f"field order {m} too small for length {length}")
    if length <= m:
        return tuple(range(length))
    return tuple(range(m)) + (None,)


def _check_eval_points(points, m: int, length: int) -> tuple[int | None, ...]:
    pts = tuple(points)
    if len(pts) != length:
        raise ValueError(f"need {length} evaluation points, got {len(pts)}")
    if len(set(pts)) != length:
        raise ValueError("evaluation points must be distinct")
    for p in pts:
        if p is not None and not 0 <= p < m:
            raise ValueError(f"evaluation point {p} out of range 0..{m - 1}")
    return pts


def _check_shape(length: int, c: int, t: int) -> None:
    if c < t:
        raise ValueError(f"need c >= t, got c={c}, t={t}")
    if 2 * t - 1 > length:
        raise ValueError(f"need length >= 2t-1 = {2 * t - 1}, got {length}")
    r = length - c * (t - 1)
    if not t <= r <= c:
        raise ValueError(
            f"length {length} is not c*(t-1)+r with r in {{t..c}} for c={c}, t={t}"
        )


def polynomial_lift(
    code: Code,
    m: int,
    t: int,
    c: int,
    points=None,
    trust: bool = False,
) -> Code:
    """Expand a t-determined code over a larger alphabet with polynomial tags.

    Every non-infinity parent symbol b at position j becomes the
    flattened pair (b, y_j), where for a polynomial f over GF(m) of
    degree < t

        y_j = f(points[j])   at an ordinary evaluation point,
        y_j = lead(f)        when points[j] is the infinity point,

    and infinity positions stay infinity.  Running f over all m**t
    polynomials multiplies the size by m**t and grows the alphabet to
    q = (s-1)*m + 1.  Two distinct output words can agree in at most
    t-1 non-infinity positions (t agreements would force equal parents
    and equal polynomials), so the result is again c-frameproof and
    t-determined whenever length = c*(t-1)+r with r in {t..c}.

    The parent's t-determinedness is re-verified unless ``trust`` is
    set; its frameproofness follows from that check and the length
    arithmetic, so no expensive coalition search runs here.
    """
    s = code.q
    length = code.length
    if code.inf_id != 0:
        raise ValueError("parent code must designate infinity as symbol 0")
    if is_prime_power(m) is None:
        raise ValueError(f"{m} is not a prime power")
    if m < length - 1:
        raise ValueError(f"field order {m} too small: need m >= {length - 1}")
    _check_shape(length, c, t)
    pts = (
        default_eval_points(m, length)
        if points is None
        else _check_eval_points(points, m, length)
    )
    if not trust:
        report = is_t_determined(code, t)
        if not report.verdict:
            raise ValueError(f"parent code is not {t}-determined: {report.witness}")
    field = make_field(m)
    pair = flatten_pair_alphabet(s, m)
    out = []
    for parent in code.words:
        for coeffs in itertools.product(range(m), repeat=t):
            word = []
            for b, alpha in zip(parent, pts):
                if b == 0:
                    word.append(0)
                elif alpha is None:
                    word.append(pair.flatten(b, leading_coeff(coeffs, t)))
                else:
                    word.append(pair.flatten(b, field.eval_poly(coeffs, alpha)))
            out.append(tuple(word))
    lifted = make_code(length, pair.q, out, inf_id=0)
    assert lifted.size == code.size * m**t
    return lifted


def augment_infinity(code: Code, c: int, t: int, trust: bool = False) -> Code:
    """Adjoin the all-infinity word to a t-determined code.

    The enlarged code is still c-frameproof: coalition members carry too
    few infinity entries to assemble the new word, and the new word
    contributes nothing towards framing anybody else.  The output is no
    longer t-determined, so augmentation must come after all lifts.
    """
    if code.inf_id is None:
        raise ValueError("code has no infinity symbol")
    _check_shape(code.length, c, t)
    if not trust:
        report = is_t_determined(code, t)
        if not report.verdict:
            raise ValueError(f"code is not {t}-determined: {report.witness}")
    all_inf = (code.inf_id,) * code.length
    if all_inf in code.words:
        raise ValueError("all-infinity word already present")
    return make_code(code.length, code.q, code.words + (all_inf,), code.inf_id)


def oa_lift(s: int, t: int, length: int, m: int, c: int, points=None) -> Code:
    """Seed a polynomial lift with the code read off an orthogonal array.

    Only the built-in strength-2 arrays are wired up, so t must be 2 and
    length must be s+1.  The seed has s**t - 1 words; the lift then
    yields (s**t - 1) * m**t words over q = (s-1)*m + 1 symbols.
    """
    if t != 2 or length != s + 1:
        raise ValueError(
            "unsupported array parameters: built-in generation needs t=2 and length=s+1"
        )
    seed = oa_to_pt_code(build_oa_strength2(s))
    return polynomial_lift(seed, m, t, c, points=points)


def oa_family_code(c: int, m: int) -> Code:
    """c-frameproof code of length c+2 over q = c*m+1 symbols, size (c+2)/c*(q-1)**2."""
    if c < 2:
        raise ValueError("c must be at least 2")
    if is_prime_power(c + 1) is None:
        raise ValueError(f"c+1 = {c + 1} must be a prime power")
    if is_prime_power(m) is None or m < c + 1:
        raise ValueError(f"m must be a prime power >= {c + 1}, got {m}")
    code = oa_lift(c + 1, 2, c + 2, m, c)
    assert code.q == c * m + 1
    assert c * code.size == (c + 2) * (code.q - 1) ** 2
    return code
