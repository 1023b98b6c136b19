"""Permutation burst-deletion codes: the balanced half-indicator map,
localization, overlapping ranking sequences, and the end-to-end decoder.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .seqcore import Interval, NotDecodableError, vt_syndrome
from .tburst import (
    DensityParams,
    QaryBlockLabeler,
    block_syndromes,
    cpb_decode,
    indicator_alpha,
    locate_burst,
    oracle_build_brute,
)


def check_permutation(pi: tuple) -> None:
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError("not a permutation of [n]")


def bp_map(pi: tuple) -> tuple:
    """Half indicator: bit i = 1 iff pi_i > n/2.  Balanced (one extra 1 for
    odd n)."""
    n = len(pi)
    return tuple(1 if v > n / 2 else 0 for v in pi)


def is_balanced(b: tuple, n: int) -> bool:
    return sum(b) == (n + 1) // 2


def perm_locate(bp: tuple, c0: int, c1: int, dp: DensityParams) -> Interval:
    """Localize a burst from the (possibly shortened) half-indicator string;
    candidate reinsertions must land in the balanced localization code."""
    return locate_burst(
        bp, c0, c1, dp, extra_check=lambda x: is_balanced(x, dp.n)
    )


def prj(u: tuple) -> tuple:
    """Relative-order pattern of a window of distinct values."""
    if len(set(u)) != len(u):
        raise ValueError("prj requires distinct entries")
    return tuple(sum(1 for x in u if x < v) + 1 for v in u)


def lex_rank(pi: tuple) -> int:
    """1-based lexicographic rank of a permutation of [k] (factorial number
    system)."""
    check_permutation(pi)
    k = len(pi)
    rank = 0
    seen = []
    for i, v in enumerate(pi):
        smaller = sum(1 for x in pi[i + 1 :] if x < v)
        rank += smaller * factorial(k - 1 - i)
    del seen
    return rank + 1


def lex_unrank(rank: int, k: int) -> tuple:
    if not 1 <= rank <= factorial(k):
        raise ValueError("rank out of range")
    rank -= 1
    avail = list(range(1, k + 1))
    out = []
    for i in range(k):
        f = factorial(k - 1 - i)
        idx, rank = divmod(rank, f)
        out.append(avail.pop(idx))
    return tuple(out)


def overlap_ranks(pi: tuple, t: int) -> tuple:
    """Ranks of all consecutive (t+1)-windows; length n - t."""
    n = len(pi)
    if n <= t:
        raise ValueError("need n > t")
    return tuple(
        lex_rank(prj(pi[i : i + t + 1])) for i in range(n - t)
    )


def reconstruct(pip: tuple, missing: tuple, p: tuple, t: int) -> tuple:
    """The unique permutation obtained by reinserting the missing symbols
    consecutively into pip whose ranking sequence equals p."""
    tprime = len(missing)
    if tprime == 0:
        if overlap_ranks(pip, t) != p:
            raise NotDecodableError("ranking sequence mismatch")
        return pip
    found = set()
    for pos in range(1, len(pip) + 2):
        for order in permutations(sorted(missing)):
            cand = pip[: pos - 1] + tuple(order) + pip[pos - 1 :]
            if overlap_ranks(cand, t) == p:
                found.add(cand)
    if len(found) != 1:
        raise NotDecodableError("no unique consecutive reinsertion matches")
    return found.pop()


@dataclass(frozen=True)
class PermCodeParams:
    n: int
    t: int
    delta: int
    P: int
    c0: int
    c1: int
    sums: tuple  # ((d1,e1),(d2,e2)) over the ranking sequence blocks

    def __post_init__(self) -> None:
        if min(self.n - self.t, self.delta + 2 * self.t - 1) > self.P:
            raise ValueError(
                "require P >= min(n - t, delta + 2t - 1) so the ranking "
                "window fits a block"
            )

    @property
    def density(self) -> DensityParams:
        return DensityParams(self.n, self.t, self.delta)

    @property
    def rank_alphabet(self) -> tuple:
        return tuple(range(1, factorial(self.t + 1) + 1))


def perm_labeler(params: PermCodeParams) -> QaryBlockLabeler:
    """Substring-edit oracle over the ranking alphabet via per-row binary
    composition."""
    q = factorial(params.t + 1) + 1  # symbols 1..(t+1)!, 0 reserved for pad
    nrows = max(1, (q - 1).bit_length())
    lengths = {2 * params.P, params.P}
    oracles = {
        k: oracle_build_brute(k, params.t, "edit") for k in lengths
    }
    return QaryBlockLabeler(
        1 << nrows, oracles, alphabet=params.rank_alphabet
    )


def perm_member(pi: tuple, params: PermCodeParams, labeler) -> bool:
    if len(pi) != params.n or sorted(pi) != list(range(1, params.n + 1)):
        return False
    b = bp_map(pi)
    dp = params.density
    ind, alpha = indicator_alpha(b, dp)
    if max(alpha) > dp.delta:
        return False
    if sum(ind) % 4 != params.c0 or vt_syndrome(alpha) % (2 * params.n) != params.c1:
        return False
    p = overlap_ranks(pi, params.t)
    return block_syndromes(p, params.P, labeler) == params.sums


def c2t_decode(
    pp: tuple,
    window: Interval,
    sums: tuple,
    labeler,
    P: int,
    t: int,
    full_len: int,
) -> tuple:
    """Recover the ranking sequence after one substring edit of length <= 2t
    inside the window (block scheme shared with the binary block code)."""
    return cpb_decode(pp, full_len, window, sums, labeler, P, model="edit", t=t)


def pleqt_decode(pip: tuple, params: PermCodeParams, labeler) -> tuple:
    """End-to-end decoder: identify missing symbols, localize on the half
    indicator, repair the ranking sequence, reinsert."""
    n, t = params.n, params.t
    tprime = n - len(pip)
    if tprime == 0:
        if not perm_member(pip, params, labeler):
            raise NotDecodableError("input is not a codeword")
        return pip
    if not 1 <= tprime <= t:
        raise ValueError("burst longer than t")
    missing = tuple(sorted(set(range(1, n + 1)) - set(pip)))
    if len(missing) != tprime:
        raise ValueError("received word is not a permutation minus a burst")
    b_rx = tuple(1 if v > n / 2 else 0 for v in pip)
    window = perm_locate(b_rx, params.c0, params.c1, params.density)
    # the substring edit on the ranking sequence spans [s - t, s + t' - 1]
    # for a burst starting at s
    p_window = Interval(
        max(1, window.lo - t), max(1, min(n - t, window.hi))
    )
    pp = overlap_ranks(pip, t)
    p = c2t_decode(pp, p_window, params.sums, labeler, params.P, t, n - t)
    pi = reconstruct(pip, missing, p, t)
    if not any(
        pi[: s - 1] + pi[s - 1 + tprime :] == pip
        for s in range(1, n - tprime + 2)
    ):
        raise NotDecodableError("reconstruction is not burst-consistent")
    return pi
