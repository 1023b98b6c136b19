"""Classical single-burst codes: VT, Tenengol'ts, the psi-form two-deletion
code, and the induced-deletion code over alternating q-ary sequences.

Decoders raise NotDecodableError instead of ever returning a wrong answer;
every reconstruction is validated against the residues and the burst channel
before being returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .seqcore import (
    NotDecodableError,
    check_binary,
    check_symbols,
    phi,
    psi,
    psi_inv,
    vt_syndrome,
)

FAMILIES = ("vt", "tenengolts", "levenshtein", "induced")


@dataclass(frozen=True)
class ClassicParams:
    family: str
    n: int
    q: int = 2
    a: int = 0
    b: Optional[int] = None
    c: Optional[int] = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        n, q = self.n, self.q
        if self.family == "vt":
            if not 0 <= self.a <= n:
                raise ValueError("vt requires a in [0, n]")
        elif self.family == "tenengolts":
            if not 0 <= self.a < n or self.b is None or not 0 <= self.b < q:
                raise ValueError("tenengolts requires a in [0,n), b in [0,q)")
        elif self.family == "levenshtein":
            if not 0 <= self.a < 2 * n:
                raise ValueError("levenshtein requires a in [0, 2n)")
        else:
            if (
                not 0 <= self.a < 2 * n
                or self.b is None
                or self.c is None
                or not 0 <= self.b < q
                or not 0 <= self.c < q
            ):
                raise ValueError("induced requires a in [0,2n), b,c in [0,q)")


def is_alternating(u: tuple) -> bool:
    return all(a != b for a, b in zip(u, u[1:]))


def ascent_indicator(u: tuple) -> tuple:
    """Non-strict adjacent ascent bits, length n-1: bit i = [u_{i+1} >= u_i].

    This is the indicator the q-ary single-deletion code is built on; the
    strict variant with a leading 1 (phi) does not yield a deletion-
    correcting residue."""
    return tuple(1 if b >= a else 0 for a, b in zip(u, u[1:]))


def interleaved_psi(u: tuple) -> tuple:
    """psi of the interleaving of phi(u at odd positions) with phi(u at
    even positions)."""
    return psi(_interleave(phi(u[0::2]), phi(u[1::2])))


def member(params: ClassicParams, u: tuple) -> bool:
    """True iff u satisfies every residue constraint of the named code."""
    n = params.n
    if len(u) != n:
        return False
    if params.family in ("vt", "levenshtein"):
        check_binary(u)
    else:
        check_symbols(u, params.q)
    if params.family == "vt":
        return vt_syndrome(u) % (n + 1) == params.a
    if params.family == "tenengolts":
        return (
            vt_syndrome(ascent_indicator(u)) % n == params.a
            and sum(u) % params.q == params.b
        )
    if params.family == "levenshtein":
        return vt_syndrome(psi(u)) % (2 * n) == params.a
    # induced: alternating ambient with three residues on the interleaved image
    if not is_alternating(u):
        return False
    q = params.q
    return (
        vt_syndrome(interleaved_psi(u)) % (2 * n) == params.a
        and sum(u[0::2]) % q == params.b
        and sum(u[1::2]) % q == params.c
    )


def _burst_consistent(x: tuple, xp: tuple, t_max: int) -> bool:
    """Is xp obtainable from x by a burst of <= t_max deletions (or equal)?"""
    d = len(x) - len(xp)
    if d == 0:
        return x == xp
    if not 1 <= d <= t_max:
        return False
    return any(x[:s] + x[s + d :] == xp for s in range(len(x) - d + 1))


def vt_decode(xp: tuple, a: int, n: int) -> tuple:
    """Recover the VT_a(n) codeword from which one bit was deleted."""
    check_binary(xp)
    if len(xp) != n - 1:
        raise ValueError("vt_decode expects length n-1")
    w = sum(xp)
    delta = (a - vt_syndrome(xp)) % (n + 1)
    if delta <= w:
        # a 0 was deleted with delta ones to its right
        x = _insert_zero_before_ones(xp, delta, (0,))
    else:
        # a 1 was deleted with delta - w - 1 zeros to its left
        zeros_left = delta - w - 1
        seen = 0
        pos = len(xp)
        for i, s in enumerate(xp):
            if s == 0:
                seen += 1
            if seen == zeros_left and zeros_left > 0:
                pos = i + 1
                break
        if zeros_left == 0:
            pos = 0
        x = xp[:pos] + (1,) + xp[pos:]
    if vt_syndrome(x) % (n + 1) != a or not _burst_consistent(x, xp, 1):
        raise NotDecodableError("no VT codeword consistent with input")
    return x


def _insert_zero_before_ones(xp: tuple, r1: int, bits: tuple) -> tuple:
    """Insert `bits` so exactly r1 ones of xp lie to their right."""
    ones_total = sum(xp)
    if r1 > ones_total:
        raise NotDecodableError("insertion point out of range")
    # rightmost position with exactly r1 ones to its right
    seen = 0
    pos = len(xp)
    for i in range(len(xp) - 1, -1, -1):
        if seen == r1 and xp[i] == 1:
            break
        pos = i
        if xp[i] == 1:
            seen += 1
    if seen < r1:
        pos = 0
    return xp[:pos] + bits + xp[pos:]


def tenengolts_decode(up: tuple, a: int, b: int, n: int, q: int) -> tuple:
    """Two-stage decoding: deleted value from the sum residue, position class
    from the VT residue of the ascent image."""
    check_symbols(up, q)
    if len(up) != n - 1:
        raise ValueError("tenengolts_decode expects length n-1")
    value = (b - sum(up)) % q
    matches = set()
    for pos in range(n):
        cand = up[:pos] + (value,) + up[pos:]
        if vt_syndrome(ascent_indicator(cand)) % n == a:
            matches.add(cand)
    if len(matches) != 1:
        raise NotDecodableError("syndromes identify no unique codeword")
    return matches.pop()


def _one_deletion_candidates(yp: tuple, delta: int, modulus: int = 0) -> list:
    """Reconstructions of y from y'
 after one deletion in the underlying x.

    One deletion in x replaces an adjacent pair of y by its xor (or drops
    y_1).  Dispatch on delta = VT(y) - VT(y') vs w = wt(y'); with a modulus
    the comparison is done per candidate residue instead.
    """
    w = sum(yp)
    out = []

    def hit(value: int) -> bool:
        return value % modulus == delta if modulus else value == delta

    # a 0 of y was deleted: delta = R1 (ones right of it)
    for r1 in range(w + 1):
        if hit(r1):
            out.append(_insert_zero_before_ones(yp, r1, (0,)))
    # first bit 1 of y deleted: delta = w + 1
    if hit(w + 1):
        out.append((1,) + yp)
    # a pair 11 of y collapsed to 0: delta = 2p + 1 + R1(p)
    r1 = 0
    for p in range(len(yp), 0, -1):
        if yp[p - 1] == 0:
            if hit(2 * p + 1 + r1):
                out.append(yp[: p - 1] + (1, 1) + yp[p:])
        else:
            r1 += 1
    return out


def _two_deletion_candidates(
    yp: tuple, delta: int, modulus: int = 0, prefix_cases: bool = True
) -> list:
    """Reconstructions of y from y' after two consecutive deletions in x.

    Two consecutive deletions replace an adjacent triple of y by its xor
    (or drop a length-2 prefix).  Cases keyed on parity of delta vs 2w.
    """
    w = sum(yp)
    out = []

    def hit(value: int) -> bool:
        return value % modulus == delta if modulus else value == delta

    # 010 collapsed to 1: delta = 2*R1 + 1, replace a 1 by 010
    r1 = 0
    for p in range(len(yp), 0, -1):
        if yp[p - 1] == 1:
            if hit(2 * r1 + 1):
                out.append(yp[: p - 1] + (0, 1, 0) + yp[p:])
            r1 += 1
    # 00 deleted (covers 000->0, 001->1, 100->1): delta = 2*R1
    for r1 in range(w + 1):
        if hit(2 * r1):
            out.append(_insert_zero_before_ones(yp, r1, (0, 0)))
    if prefix_cases:
        # prefix 10 / 01 of y deleted
        if hit(2 * w + 1):
            out.append((1, 0) + yp)
        if hit(2 * w + 2):
            out.append((0, 1) + yp)
    # 11 inserted back (covers 011/110/111 collapses): delta = 2p + 1 + 2*R1(p)
    r1 = 0
    for p in range(len(yp) + 1, 0, -1):
        if hit(2 * p + 1 + 2 * r1):
            out.append(yp[: p - 1] + (1, 1) + yp[p - 1 :])
        if p >= 2 and yp[p - 2] == 1:
            r1 += 1
    # 101 collapsed to 0: delta = 2p + 2 + 2*R1(p), replace a 0 by 101
    r1 = 0
    for p in range(len(yp), 0, -1):
        if yp[p - 1] == 0:
            if hit(2 * p + 2 + 2 * r1):
                out.append(yp[: p - 1] + (1, 0, 1) + yp[p:])
        else:
            r1 += 1
    return out


def levenshtein_decode(xp: tuple, a: int, n: int) -> tuple:
    """Recover x with VT(psi(x)) = a (mod 2n) after a burst of <= 2 deletions."""
    check_binary(xp)
    if len(xp) not in (n, n - 1, n - 2):
        raise ValueError("levenshtein_decode expects length in {n, n-1, n-2}")
    t = n - len(xp)
    if t == 0:
        if vt_syndrome(psi(xp)) % (2 * n) != a:
            raise NotDecodableError("input is not a codeword")
        return xp
    yp = psi(xp)
    delta = (a - vt_syndrome(yp)) % (2 * n)
    if t == 1:
        ys = _one_deletion_candidates(yp, delta)
    else:
        ys = _two_deletion_candidates(yp, delta)
    found = set()
    for y in ys:
        x = psi_inv(y)
        if vt_syndrome(y) % (2 * n) == a and _burst_consistent(x, xp, 2):
            found.add(x)
    if len(found) != 1:
        raise NotDecodableError("no unique codeword consistent with input")
    return found.pop()


def induced_deletions(u: tuple) -> list:
    """All results of replacing a substring aba by a in u (positions kept)."""
    out = []
    for i in range(len(u) - 2):
        if u[i] == u[i + 2]:
            out.append((i + 1, u[: i + 1] + u[i + 3 :]))
    return out


def induced_decode(up: tuple, a: int, b: int, c: int, n: int, q: int) -> tuple:
    """Recover the alternating codeword after one induced deletion aba -> a.

    Four-step procedure: repair psi of the interleaved ascent image (the
    change is one of: delete 11, delete 00, 010->1, 101->0), split into the
    odd/even ascent images, recover the two deleted values from the sum
    residues, then reinsert them Tenengol'ts-style in each half.
    """
    check_symbols(up, q)
    if len(up) != n - 2:
        raise ValueError("induced_decode expects length n-2")
    yp = interleaved_psi(up)
    delta = (a - vt_syndrome(yp)) % (2 * n)
    # induced deletions never produce the prefix cases of the general decoder
    candidates = _two_deletion_candidates(yp, delta, prefix_cases=False)
    v_odd = (b - sum(up[0::2])) % q
    v_even = (c - sum(up[1::2])) % q
    found = set()
    for y in candidates:
        if vt_syndrome(y) % (2 * n) != a or len(y) != n:
            continue
        x = psi_inv(y)
        half = _reinsert_by_phi(up[0::2], v_odd, x[0::2])
        other = _reinsert_by_phi(up[1::2], v_even, x[1::2])
        for uo in half:
            for ue in other:
                u = _interleave(uo, ue)
                if member(ClassicParams("induced", n, q, a, b, c), u) and any(
                    res == up for _, res in induced_deletions(u)
                ):
                    found.add(u)
    if len(found) != 1:
        raise NotDecodableError("no unique codeword consistent with input")
    return found.pop()


def _reinsert_by_phi(half: tuple, value: int, target_phi: tuple) -> set:
    """Insertions of value into half whose ascent image equals target_phi."""
    out = set()
    for pos in range(len(half) + 1):
        cand = half[:pos] + (value,) + half[pos:]
        if phi(cand) == target_phi:
            out.add(cand)
    return out


def _interleave(uo: tuple, ue: tuple) -> tuple:
    out = []
    for i in range(len(uo) + len(ue)):
        out.append(uo[i // 2] if i % 2 == 0 else ue[i // 2])
    return tuple(out)
