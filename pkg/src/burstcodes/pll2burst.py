"""Period-2-limited encoding, burst localization from a decoded row, window-
bounded two-deletion decoding, and the q-ary two-burst code built from them.
"""
from __future__ import annotations

from dataclasses import dataclass

from .classic import (
    _burst_consistent,
    _one_deletion_candidates,
    _two_deletion_candidates,
    levenshtein_decode,
)
from .seqcore import (
    Interval,
    NotDecodableError,
    ceil_log2,
    check_binary,
    check_symbols,
    from_matrix,
    longest_period2,
    psi,
    psi_inv,
    to_matrix,
    vt_syndrome,
)

# smallest n with ceil(log n) + 5 < n, so a trailer record fits in the payload
PLL_MIN_N = 10


def pll_cap(n: int) -> int:
    """Maximum allowed period-2 substring length after encoding."""
    return ceil_log2(n) + 5


@dataclass(frozen=True)
class PllParams:
    n: int

    def __post_init__(self) -> None:
        if self.n < PLL_MIN_N:
            raise ValueError(f"pll encoding requires n >= {PLL_MIN_N}")

    @property
    def cap(self) -> int:
        return pll_cap(self.n)


def _int_to_bits(value: int, width: int) -> list:
    return [(value >> (width - 1 - i)) & 1 for i in range(width)]


def _bits_to_int(bits) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | b
    return out


def _window_has_period2(y: list, i: int, length: int) -> bool:
    """Does the whole window y[i..i+length-1] (1-based) have period 2?"""
    return all(y[j] == y[j + 2] for j in range(i - 1, i - 1 + length - 2))


def pll_encode(x: tuple) -> tuple:
    """Append the marker 10, then repeatedly cut long period-2 substrings and
    log each cut as a trailer record 0 . ab . b(i) . 11; output length n+2."""
    check_binary(x)
    n = len(x)
    params = PllParams(n)
    clog = ceil_log2(n)
    cap = params.cap
    y = list(x) + [1, 0]
    nn = n
    i = 1
    while i <= nn - clog - 3:
        if _window_has_period2(y, i, cap + 1):
            a, b = y[i - 1], y[i]
            del y[i - 1 : i - 1 + cap]
            y += [0, a, b] + _int_to_bits(i, clog) + [1, 1]
            nn -= cap
            i = 1
        else:
            i += 1
    assert len(y) == n + 2
    return tuple(y)


def pll_decode(y: tuple, n: int) -> tuple:
    """Invert pll_encode: pop trailer records (last bit pattern 11) last to
    first, reinserting the period-2 string abab... at the recorded position."""
    check_binary(y)
    clog = ceil_log2(n)
    cap = pll_cap(n)
    if len(y) != n + 2:
        raise ValueError("pll_decode expects length n+2")
    work = list(y)
    steps = 0
    while work[-2:] == [1, 1]:
        steps += 1
        if steps > n or len(work) < cap + 2:
            raise NotDecodableError("malformed trailer")
        rec = work[-cap:]
        if rec[0] != 0:
            raise NotDecodableError("malformed trailer record")
        a, b = rec[1], rec[2]
        i = _bits_to_int(rec[3 : 3 + clog])
        del work[-cap:]
        if not 1 <= i <= len(work) + 1:
            raise NotDecodableError("trailer position out of range")
        pattern = [(a, b)[j % 2] for j in range(cap)]
        work[i - 1 : i - 1] = pattern
    if work[-2:] != [1, 0]:
        raise NotDecodableError("malformed trailer terminator")
    x = tuple(work[:-2])
    if len(x) != n:
        raise NotDecodableError("decoded payload has wrong length")
    return x


def locate_from_row1(x_decoded: tuple, x_received: tuple) -> Interval:
    """Smallest interval containing every burst position consistent with the
    (decoded, received) pair; length <= cap when x_decoded is period-limited."""
    tlen = len(x_decoded) - len(x_received)
    if tlen < 1:
        raise ValueError("locate_from_row1 requires at least one deletion")
    starts = [
        s
        for s in range(1, len(x_decoded) - tlen + 2)
        if x_decoded[: s - 1] + x_decoded[s - 1 + tlen :] == x_received
    ]
    if not starts:
        raise NotDecodableError("received word is not in the burst ball")
    return Interval(min(starts), max(starts) + tlen - 1)


@dataclass(frozen=True)
class PBoundedParams:
    n: int
    P: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if not 0 <= self.c < 2 * self.P:
            raise ValueError("require c in [0, 2P)")
        if not 0 <= self.d < 3:
            raise ValueError("require d in [0, 3)")


def pbounded_member(x: tuple, params: PBoundedParams) -> bool:
    if len(x) != params.n:
        return False
    y = psi(x)
    return (
        vt_syndrome(y) % (2 * params.P) == params.c
        and sum(y) % 3 == params.d
    )


def _window_burst_consistent(x: tuple, xp: tuple, m: int, P: int) -> bool:
    """Is xp = x minus a burst contained entirely in the window [m, m+P-1]?

    Containment (not just the start position) is required: with only the
    start constrained, two codewords can share a descendant via bursts
    starting P-1 positions apart."""
    d = len(x) - len(xp)
    if d == 0:
        return x == xp
    lo = max(1, m)
    hi = min(len(x) - d + 1, m + P - d)
    return any(x[: s - 1] + x[s - 1 + d :] == xp for s in range(lo, hi + 1))


def pbounded_decode(xp: tuple, params: PBoundedParams, m: int) -> tuple:
    """Correct a burst of <= 2 deletions known to start in [m, m+P-1].

    Candidates come from the one- and two-deletion case analysis with the VT
    residue taken mod 2P; the weight residue mod 3 and the window consistency
    check then pin down the unique codeword.
    """
    check_binary(xp)
    n, P = params.n, params.P
    t = n - len(xp)
    if t not in (0, 1, 2):
        raise ValueError("pbounded_decode expects a burst of <= 2 deletions")
    if t == 0:
        if not pbounded_member(xp, params):
            raise NotDecodableError("input is not a codeword")
        return xp
    yp = psi(xp)
    delta = (params.c - vt_syndrome(yp)) % (2 * P)
    if t == 1:
        ys = _one_deletion_candidates(yp, delta, modulus=2 * P)
    else:
        ys = _two_deletion_candidates(yp, delta, modulus=2 * P)
    found = set()
    for y in ys:
        if len(y) != n or sum(y) % 3 != params.d:
            continue
        x = psi_inv(y)
        if _window_burst_consistent(x, xp, m, P):
            found.add(x)
    if len(found) != 1:
        raise NotDecodableError("no unique window-consistent codeword")
    return found.pop()


@dataclass(frozen=True)
class C2BParams:
    """Two-burst q-ary code: row 1 period-limited + VT mod 2n, other rows
    window-bounded with P = cap."""

    n: int
    q: int
    a: int
    rows: tuple  # (c_i, d_i) for matrix rows 2..ceil(log q)

    def __post_init__(self) -> None:
        if self.q % 2 != 0:
            raise ValueError("require q even")
        if not 0 <= self.a < 2 * self.n:
            raise ValueError("require a in [0, 2n)")
        nrows = max(1, (self.q - 1).bit_length())
        if len(self.rows) != nrows - 1:
            raise ValueError("need residues for every row but the first")

    @property
    def cap(self) -> int:
        return pll_cap(self.n)

    def row_params(self, idx: int) -> PBoundedParams:
        c, d = self.rows[idx]
        return PBoundedParams(self.n, self.cap, c, d)


def c2b_member(u: tuple, params: C2BParams) -> bool:
    if len(u) != params.n:
        return False
    check_symbols(u, params.q)
    rows = to_matrix(u, params.q)
    row1 = rows[0]
    if longest_period2(row1) > params.cap:
        return False
    if vt_syndrome(psi(row1)) % (2 * params.n) != params.a:
        return False
    return all(
        pbounded_member(rows[i], params.row_params(i - 1))
        for i in range(1, len(rows))
    )


def c2b_decode(up: tuple, params: C2BParams) -> tuple:
    """Decode row 1, localize the burst from it, then window-decode the
    remaining rows of the bit matrix and reassemble."""
    check_symbols(up, params.q)
    n = params.n
    t = n - len(up)
    if t not in (0, 1, 2):
        raise ValueError("c2b_decode expects a burst of <= 2 deletions")
    if t == 0:
        if not c2b_member(up, params):
            raise NotDecodableError("input is not a codeword")
        return up
    rows_rx = to_matrix(up, params.q)
    row1 = levenshtein_decode(rows_rx[0], params.a, n)
    if longest_period2(row1) > params.cap:
        raise NotDecodableError("row 1 decodes outside the period limit")
    interval = locate_from_row1(row1, rows_rx[0])
    if len(interval) > params.cap:
        raise NotDecodableError("burst interval exceeds the window length")
    m = interval.lo
    rows = [row1]
    for i in range(1, len(rows_rx)):
        rows.append(pbounded_decode(rows_rx[i], params.row_params(i - 1), m))
    u = from_matrix(tuple(rows), params.q)
    if not _burst_consistent(u, up, 2):
        raise NotDecodableError("reassembled word is not burst-consistent")
    return u
