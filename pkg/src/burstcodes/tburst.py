"""Dense-pattern machinery for bursts of up to t deletions: indicator/gap
vectors, localization syndromes, pattern-free compression, dense encoding,
brute-force syndrome oracles, and the block-parity t-burst code.

Per-block protection does not rely on external systematic codes; a
brute-force syndrome oracle provides the same contract: any two blocks
confusable under the declared error model receive distinct labels.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Optional

from .seqcore import (
    Interval,
    NotDecodableError,
    ceil_log2,
    check_binary,
    check_symbols,
    from_matrix,
    to_matrix,
    vt_syndrome,
)


def default_delta(n: int, t: int, perm: bool = False) -> int:
    """Window length delta: t * 2^(2t+1) * ceil(log n), one power of two more
    for the permutation variant."""
    return t * (1 << (2 * t + (2 if perm else 1))) * ceil_log2(n)


@dataclass(frozen=True)
class DensityParams:
    n: int
    t: int
    delta: int

    def __post_init__(self) -> None:
        if self.delta < 2 * self.t:
            raise ValueError("delta must be at least |w| = 2t")

    @property
    def w(self) -> tuple:
        return (0,) * self.t + (1,) * self.t

    @property
    def out_len(self) -> int:
        return self.delta - ceil_log2(self.n) - 4 * self.t - 2


def indicator_alpha(x: tuple, dp: DensityParams) -> tuple:
    """Occurrence indicator of w in x and the gap vector of (1, 1_w, 1)."""
    t, w = dp.t, dp.w
    if len(x) < 2 * t:
        raise ValueError("sequence shorter than the pattern")
    ind = tuple(
        1 if x[i : i + 2 * t] == w else 0 for i in range(len(x) - 2 * t + 1)
    )
    padded = (1,) + ind + (1,)
    ones = [i for i, b in enumerate(padded) if b]
    alpha = tuple(b - a for a, b in zip(ones, ones[1:]))
    return ind, alpha


def is_dense(x: tuple, dp: DensityParams) -> bool:
    _, alpha = indicator_alpha(x, dp)
    return max(alpha) <= dp.delta


def loc_member(x: tuple, c0: int, c1: int, dp: DensityParams) -> bool:
    """Membership in the localization code: dense, pattern count mod 4,
    VT of the gap vector mod 2n."""
    if len(x) != dp.n:
        return False
    ind, alpha = indicator_alpha(x, dp)
    if max(alpha) > dp.delta:
        return False
    return sum(ind) % 4 == c0 and vt_syndrome(alpha) % (2 * dp.n) == c1


def locate_burst(
    xp: tuple,
    c0: int,
    c1: int,
    dp: DensityParams,
    extra_check: Optional[Callable[[tuple], bool]] = None,
) -> Interval:
    """Interval covering every burst position consistent with the syndromes.

    Scans all candidate bursts of the observed length whose reinsertion lands
    back in the localization code; the code design keeps all consistent
    starts within a window of length delta.
    """
    check_binary(xp)
    tprime = dp.n - len(xp)
    if tprime == 0:
        if not loc_member(xp, c0, c1, dp):
            raise NotDecodableError("input is not a codeword")
        return Interval(1, 1)
    if not 1 <= tprime <= dp.t:
        raise ValueError("burst longer than t")
    starts = []
    for s in range(1, len(xp) + 2):
        for bits in product((0, 1), repeat=tprime):
            cand = xp[: s - 1] + bits + xp[s - 1 :]
            if loc_member(cand, c0, c1, dp) and (
                extra_check is None or extra_check(cand)
            ):
                starts.append(s)
                break
    if not starts:
        raise NotDecodableError("localization syndromes inconsistent")
    return Interval(min(starts), max(starts) + tprime - 1)


# ---------------------------------------------------------------------------
# pattern-free compression (base 2^{2t}-1 re-encoding of 2t-bit chunks)


def _int_to_bits(value: int, width: int) -> tuple:
    return tuple((value >> (width - 1 - i)) & 1 for i in range(width))


def _bits_to_int(bits) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | b
    return out


def _check_capacity(dp: DensityParams) -> None:
    t = dp.t
    if dp.delta % (2 * t) != 0:
        raise ValueError("delta must be a multiple of 2t for compression")
    if dp.out_len <= 0:
        raise ValueError("compressed length would be non-positive")
    chunks = dp.delta // (2 * t)
    if ((1 << (2 * t)) - 1) ** chunks > (1 << dp.out_len):
        raise ValueError(
            "parameters violate the compression capacity precondition"
        )


def contains_pattern(s: tuple, w: tuple) -> bool:
    return any(s[i : i + len(w)] == w for i in range(len(s) - len(w) + 1))


def compress_g(s: tuple, dp: DensityParams) -> tuple:
    """Compress a pattern-free string of length delta to out_len bits by
    treating each 2t-bit chunk as a digit in base 2^{2t}-1 (w excluded)."""
    _check_capacity(dp)
    t = dp.t
    if len(s) != dp.delta:
        raise ValueError("compress_g expects length delta")
    if contains_pattern(s, dp.w):
        raise ValueError("input contains the pattern w")
    w_val = (1 << t) - 1  # value of the excluded chunk 0^t 1^t
    base = (1 << (2 * t)) - 1
    value = 0
    for i in range(0, dp.delta, 2 * t):
        chunk = _bits_to_int(s[i : i + 2 * t])
        digit = chunk if chunk < w_val else chunk - 1
        value = value * base + digit
    return _int_to_bits(value, dp.out_len)


def decompress_g(bits: tuple, dp: DensityParams) -> tuple:
    """Inverse of compress_g."""
    _check_capacity(dp)
    t = dp.t
    if len(bits) != dp.out_len:
        raise ValueError("decompress_g expects out_len bits")
    w_val = (1 << t) - 1
    base = (1 << (2 * t)) - 1
    value = _bits_to_int(bits)
    chunks = dp.delta // (2 * t)
    digits = []
    for _ in range(chunks):
        value, digit = divmod(value, base)
        digits.append(digit)
    if value:
        raise NotDecodableError("compressed value out of range")
    out = []
    for digit in reversed(digits):
        chunk = digit if digit < w_val else digit + 1
        out.extend(_int_to_bits(chunk, 2 * t))
    return tuple(out)


# ---------------------------------------------------------------------------
# dense encoding (cut pattern-free windows, log them in trailer records)


def _closing(e: int, t: int) -> tuple:
    """Closing half-pattern of a trailer record padded by e zeros: when 2t-e
    is odd the two halves are left unbalanced by one (deviation from the
    half/half split, which is fractional for odd e)."""
    a = (2 * t - e) // 2
    b = (2 * t - e) - a
    return (0,) * a + (1,) * b


def _record_tail(e: int, dp: DensityParams) -> tuple:
    return (1,) + dp.w + _closing(e, dp.t) + (0,)


def _no_occurrence(E: list, i: int, j_hi: int, w: tuple) -> bool:
    """No occurrence of w starts in [i, j_hi] (1-based, bounds-safe)."""
    wl = len(w)
    for j in range(i - 1, j_hi):
        if tuple(E[j : j + wl]) == w:
            return False
    return True


def dense_encode(x: tuple, dp: DensityParams) -> tuple:
    """Make every delta-window of x contain w = 0^t 1^t; output length n+4t.

    Repeatedly finds the leftmost pattern-free window of the working core,
    deletes it and appends a fixed-length record (position, compressed
    window, separator, closing pattern, 0); initialization appends w w."""
    check_binary(x)
    _check_capacity(dp)
    n, t, delta = dp.n, dp.t, dp.delta
    if len(x) != n:
        raise ValueError("dense_encode expects length n")
    clog = ceil_log2(n)
    E = list(x) + list(dp.w + dp.w)
    nn = n
    while True:
        found = None
        for i in range(1, nn + 1):
            if _no_occurrence(E, i, i + delta - 2 * t, dp.w):
                found = i
                break
        if found is None:
            break
        i = found
        if i <= nn - delta + 1:
            s = tuple(E[i - 1 : i - 1 + delta])
            del E[i - 1 : i - 1 + delta]
            rec = (
                _int_to_bits(i, clog) + compress_g(s, dp) + _record_tail(0, dp)
            )
            E.extend(rec)
            nn -= delta
        else:
            e = i + delta - nn - 1
            assert 1 <= e <= 2 * t - 1
            s = tuple(E[i - 1 : nn]) + (0,) * e
            del E[i - 1 : nn]
            rec = (
                _int_to_bits(i, clog) + compress_g(s, dp) + _record_tail(e, dp)
            )
            E.extend(rec)
            nn = i - 1
    out = tuple(E)
    assert len(out) == n + 4 * t
    return out


def dense_decode(y: tuple, dp: DensityParams) -> tuple:
    """Invert dense_encode: walk trailer records keyed on the last bit
    (0 = record, 1 = the initialization marker w w), with backtracking over
    the record's pad amount."""
    check_binary(y)
    _check_capacity(dp)
    n, t, delta = dp.n, dp.t, dp.delta
    if len(y) != n + 4 * t:
        raise ValueError("dense_decode expects length n+4t")
    clog = ceil_log2(n)
    out_len = dp.out_len

    def rec_walk(cur: tuple, depth: int) -> Optional[tuple]:
        if depth > n:
            return None
        if cur[-1] == 1:
            if len(cur) == n + 4 * t and cur[n:] == dp.w + dp.w:
                return cur[:n]
            return None
        for e in range(0, 2 * t):
            rec_len = delta - e
            if len(cur) < rec_len + 4 * t:
                continue
            rec = cur[-rec_len:]
            tail = _record_tail(e, dp)
            if rec[-len(tail) :] != tail:
                continue
            i = _bits_to_int(rec[:clog])
            if i < 1:
                continue
            try:
                s_full = decompress_g(rec[clog : clog + out_len], dp)
            except NotDecodableError:
                continue
            if e and any(s_full[delta - e :]):
                continue
            rest = cur[:-rec_len]
            if i - 1 > len(rest) - 4 * t:
                continue
            cand = rest[: i - 1] + s_full[: delta - e] + rest[i - 1 :]
            got = rec_walk(cand, depth + 1)
            if got is not None:
                return got
        return None

    x = rec_walk(y, 0)
    if x is None:
        raise NotDecodableError("malformed trailer")
    return x


# ---------------------------------------------------------------------------
# brute-force syndrome oracles


@dataclass
class SyndromeOracle:
    """Exchangeable labeling of binary blocks of a fixed length: confusable
    blocks (their error balls intersect) always receive distinct labels."""

    k: int
    t: int
    model: str  # "burst" (<= t consecutive deletions) or "edit"
    labels: dict = field(repr=False)
    label_space: int = 0

    def label(self, block: tuple) -> int:
        return self.labels[block]


def _descendants(v: tuple, t: int, model: str) -> set:
    out = set()
    k = len(v)
    if model == "burst":
        for tp in range(1, t + 1):
            for s in range(k - tp + 1):
                out.add(v[:s] + v[s + tp :])
    elif model == "edit":
        # replace a substring of length l1 <= 2t by any string of length
        # l2 <= 2t (identity included)
        for l1 in range(0, 2 * t + 1):
            for s in range(k - l1 + 1):
                head, tail = v[:s], v[s + l1 :]
                for l2 in range(0, 2 * t + 1):
                    for m in product((0, 1), repeat=l2):
                        out.add(head + m + tail)
    else:
        raise ValueError(f"unknown error model {model!r}")
    return out


ORACLE_MAX_K = 20


@lru_cache(maxsize=None)
def oracle_build_brute(k: int, t: int, model: str) -> SyndromeOracle:
    """Greedy coloring of the confusability graph over all binary blocks of
    length k, in lexicographic vertex order (deterministic)."""
    if k > ORACLE_MAX_K:
        raise ValueError(f"oracle build limited to k <= {ORACLE_MAX_K}")
    labels = {}
    colors_at = {}  # descendant -> set of labels already using it
    top = 0
    for v in product((0, 1), repeat=k):
        descs = _descendants(v, t, model)
        forbidden = set()
        for d in descs:
            got = colors_at.get(d)
            if got:
                forbidden |= got
        label = 0
        while label in forbidden:
            label += 1
        labels[v] = label
        top = max(top, label + 1)
        for d in descs:
            colors_at.setdefault(d, set()).add(label)
    return SyndromeOracle(k=k, t=t, model=model, labels=labels, label_space=top)


_ORACLE_MAGIC = b"BCOR1"
_MODEL_TAGS = {"burst": 0, "edit": 1}


def oracle_save(oracle: SyndromeOracle, path: str) -> None:
    """Serialize a binary-block oracle: versioned header + uint32 table."""
    with open(path, "wb") as fh:
        fh.write(_ORACLE_MAGIC)
        fh.write(
            struct.pack(
                "<BBBI",
                oracle.k,
                oracle.t,
                _MODEL_TAGS[oracle.model],
                oracle.label_space,
            )
        )
        table = [0] * (1 << oracle.k)
        for v, lab in oracle.labels.items():
            table[_bits_to_int(v)] = lab
        fh.write(struct.pack(f"<{len(table)}I", *table))


def oracle_load(path: str) -> SyndromeOracle:
    with open(path, "rb") as fh:
        if fh.read(5) != _ORACLE_MAGIC:
            raise ValueError("not an oracle file")
        k, t, tag, space = struct.unpack("<BBBI", fh.read(7))
        model = {v: k_ for k_, v in _MODEL_TAGS.items()}[tag]
        table = struct.unpack(f"<{1 << k}I", fh.read(4 * (1 << k)))
    labels = {
        v: table[_bits_to_int(v)] for v in product((0, 1), repeat=k)
    }
    return SyndromeOracle(k=k, t=t, model=model, labels=labels, label_space=space)


class BlockLabeler:
    """Label lookup for binary blocks of the lengths appearing in a split."""

    q = 2

    def __init__(self, oracles: dict):
        self.oracles = oracles
        self.modulus = max(o.label_space for o in oracles.values())

    @property
    def alphabet(self) -> tuple:
        return (0, 1)

    def label(self, block: tuple) -> int:
        return self.oracles[len(block)].labels[block]


class QaryBlockLabeler:
    """Per-row composition: a q-ary block is labeled by the tuple of labels
    of its bit-matrix rows, packed into one integer.  A substring edit of the
    block is a same-window substring edit of every row, so confusable q-ary
    blocks differ in some row and receive distinct labels."""

    def __init__(self, q: int, oracles: dict, alphabet: Optional[tuple] = None):
        self.q = q
        self.nrows = max(1, (q - 1).bit_length())
        self.oracles = oracles
        self.modulus = max(
            o.label_space ** self.nrows for o in oracles.values()
        )
        self._alphabet = alphabet if alphabet is not None else tuple(range(q))

    @property
    def alphabet(self) -> tuple:
        return self._alphabet

    def label(self, block: tuple) -> int:
        oracle = self.oracles[len(block)]
        rows = to_matrix(block, 1 << self.nrows)
        lab = 0
        for row in rows:
            lab = lab * oracle.label_space + oracle.labels[row]
        return lab


# ---------------------------------------------------------------------------
# block split and the window-bounded block code


def block_layout(length: int, P: int) -> tuple:
    """Even and odd block spans (1-based, inclusive) over the padded length.

    Even blocks partition [1, 2sP] into length-2P pieces; odd blocks are the
    two boundary pieces of length P plus the shifted interior pieces, so any
    interval of length <= P lies inside at least one block."""
    if length % (2 * P) != 0:
        raise ValueError("length must be padded to a multiple of 2P")
    s = length // (2 * P)
    even = [Interval(2 * i * P + 1, 2 * (i + 1) * P) for i in range(s)]
    odd = [Interval(1, P)]
    for i in range(2, s + 1):
        odd.append(Interval((2 * i - 3) * P + 1, (2 * i - 1) * P))
    odd.append(Interval(length - P + 1, length))
    return even, odd


def padded_length(n: int, P: int) -> int:
    blocks = -(-n // (2 * P))
    return 2 * P * blocks


def block_syndromes(x: tuple, P: int, labeler) -> tuple:
    """((d1, e1), (d2, e2)): sums of block labels and of their squares, taken
    mod the labeler modulus, over the even and the odd blocks."""
    L = padded_length(len(x), P)
    xpad = x + (0,) * (L - len(x))
    even, odd = block_layout(L, P)
    M = labeler.modulus
    sums = []
    for spans in (even, odd):
        labs = [labeler.label(xpad[sp.lo - 1 : sp.hi]) for sp in spans]
        sums.append((sum(labs) % M, sum(l * l for l in labs) % M))
    return tuple(sums)


def _edit_candidates(z, rel_lo, rel_hi, tprime, t, alphabet, block_len):
    """Inverse substring edits: re-insert a replaced substring of length
    l1 = l2 + tprime (l1 <= 2t) inside the window."""
    for a in range(rel_lo, rel_hi + 1):
        for l1 in range(tprime, 2 * t + 1):
            l2 = l1 - tprime
            if a + l1 - 1 > rel_hi or a - 1 + l2 > len(z):
                continue
            for m in product(alphabet, repeat=l1):
                cand = z[: a - 1] + m + z[a - 1 + l2 :]
                if len(cand) == block_len:
                    yield cand


def _burst_candidates(z, rel_lo, rel_hi, tprime, alphabet, block_len):
    """Inverse bursts: re-insert tprime consecutive symbols with the burst
    kept inside the window."""
    for a in range(rel_lo, min(rel_hi - tprime + 1, len(z) + 1) + 1):
        for m in product(alphabet, repeat=tprime):
            cand = z[: a - 1] + m + z[a - 1 :]
            if len(cand) == block_len:
                yield cand


def cpb_decode(
    xp: tuple,
    n: int,
    window: Interval,
    sums: tuple,
    labeler,
    P: int,
    model: str = "burst",
    t: Optional[int] = None,
) -> tuple:
    """Correct a burst (or one substring edit) confined to `window` using the
    stored block-label sums: every block outside the window is intact, the
    damaged block's label is solved from the residue equations and inverted
    through the oracle."""
    tprime = n - len(xp)
    if tprime == 0:
        if block_syndromes(xp, P, labeler) != sums:
            raise NotDecodableError("stored sums do not match")
        return xp
    if len(window) > P:
        raise NotDecodableError("window exceeds the block cover length")
    L = padded_length(n, P)
    xpad = xp + (0,) * (L - tprime - len(xp))
    even, odd = block_layout(L, P)
    for parity, spans in ((0, even), (1, odd)):
        hit = [j for j, sp in enumerate(spans) if sp.contains(window)]
        if hit:
            damaged = hit[0]
            break
    else:
        raise NotDecodableError("window not covered by any block")
    d_sum, e_sum = sums[parity]
    M = labeler.modulus
    intact_labels = []
    for j, sp in enumerate(spans):
        if j == damaged:
            continue
        if sp.hi <= spans[damaged].lo:
            seg = xpad[sp.lo - 1 : sp.hi]
        else:
            seg = xpad[sp.lo - 1 - tprime : sp.hi - tprime]
        intact_labels.append(labeler.label(seg))
    missing = (d_sum - sum(intact_labels)) % M
    if (e_sum - sum(l * l for l in intact_labels)) % M != (missing * missing) % M:
        raise NotDecodableError("block syndromes inconsistent")
    sp = spans[damaged]
    block_len = sp.hi - sp.lo + 1
    z = xpad[sp.lo - 1 : sp.hi - tprime]
    rel_lo = max(1, window.lo - sp.lo + 1)
    rel_hi = min(block_len, window.hi - sp.lo + 1)
    if model == "burst":
        gen = _burst_candidates(
            z, rel_lo, rel_hi, tprime, labeler.alphabet, block_len
        )
    else:
        if t is None:
            raise ValueError("edit model requires t")
        gen = _edit_candidates(
            z, rel_lo, rel_hi, tprime, t, labeler.alphabet, block_len
        )
    found = {cand for cand in gen if labeler.label(cand) == missing}
    if len(found) != 1:
        raise NotDecodableError("no unique block consistent with the sums")
    block = found.pop()
    xrec = xpad[: sp.lo - 1] + block + xpad[sp.hi - tprime :]
    x = xrec[:n]
    if block_syndromes(x, P, labeler) != sums:
        raise NotDecodableError("reconstruction fails the stored sums")
    return x


# ---------------------------------------------------------------------------
# overall q-ary <= t burst code


@dataclass(frozen=True)
class CtbParams:
    """Row 1 of the bit matrix lies in the localization code; every row
    carries block-label sums for window-bounded correction."""

    n: int
    q: int
    t: int
    delta: int
    P: int
    c0: int
    c1: int
    row_sums: tuple  # one ((d1,e1),(d2,e2)) entry per matrix row

    def __post_init__(self) -> None:
        if self.q % 2 != 0:
            raise ValueError("require q even")
        if self.delta + self.t - 1 > self.P:
            raise ValueError(
                "require delta + t - 1 <= P so located windows fit a block"
            )

    @property
    def density(self) -> DensityParams:
        return DensityParams(self.n, self.t, self.delta)

    @property
    def nrows(self) -> int:
        return max(1, (self.q - 1).bit_length())


def ctb_oracles(params: CtbParams) -> dict:
    lengths = {2 * params.P, params.P}
    return {k: oracle_build_brute(k, params.t, "burst") for k in lengths}


def ctb_member(u: tuple, params: CtbParams, labeler: BlockLabeler) -> bool:
    if len(u) != params.n:
        return False
    check_symbols(u, params.q)
    rows = to_matrix(u, params.q)
    if len(rows) != len(params.row_sums):
        return False
    if not loc_member(rows[0], params.c0, params.c1, params.density):
        return False
    return all(
        block_syndromes(rows[i], params.P, labeler) == params.row_sums[i]
        for i in range(len(rows))
    )


def ctb_decode(up: tuple, params: CtbParams, labeler: BlockLabeler) -> tuple:
    """Localize the burst from row 1 of the bit matrix, then block-decode
    every row with the shared window and reassemble."""
    check_symbols(up, params.q)
    n = params.n
    tprime = n - len(up)
    if tprime == 0:
        if not ctb_member(up, params, labeler):
            raise NotDecodableError("input is not a codeword")
        return up
    if not 1 <= tprime <= params.t:
        raise ValueError("burst longer than t")
    rows_rx = to_matrix(up, params.q)
    window = locate_burst(rows_rx[0], params.c0, params.c1, params.density)
    rows = [
        cpb_decode(
            rows_rx[i], n, window, params.row_sums[i], labeler, params.P
        )
        for i in range(len(rows_rx))
    ]
    u = from_matrix(tuple(rows), params.q)
    if not any(
        u[: s - 1] + u[s - 1 + tprime :] == up
        for s in range(1, n - tprime + 2)
    ):
        raise NotDecodableError("reassembled word is not burst-consistent")
    return u
