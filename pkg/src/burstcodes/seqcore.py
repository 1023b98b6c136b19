"""Sequences, syndromes, derivative mappings, burst channels and deletion balls.

Sequences are plain tuples of small non-negative integers.  Binary sequences
are tuples of 0/1.  All positions in public APIs are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence as Seq

MAX_Q = 1 << 16
BALL_MAX_N = 32


class NotDecodableError(Exception):
    """Raised when a decoder cannot identify a unique consistent codeword."""


@dataclass(frozen=True)
class Burst:
    """A burst of consecutive deletions: 1-based start, length >= 1."""

    start: int
    length: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.length < 1:
            raise ValueError("burst start and length must be >= 1")


@dataclass(frozen=True)
class Interval:
    """1-based inclusive interval of positions."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not (1 <= self.lo <= self.hi):
            raise ValueError("require 1 <= lo <= hi")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def contains(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def check_symbols(u: Seq[int], q: int) -> None:
    if not (2 <= q <= MAX_Q):
        raise ValueError(f"alphabet size q must be in [2, {MAX_Q}]")
    for s in u:
        if not (0 <= s < q):
            raise ValueError(f"symbol {s} out of range for q={q}")


def check_binary(x: Seq[int]) -> None:
    for s in x:
        if s not in (0, 1):
            raise ValueError("sequence is not binary")


def apply_burst(u: tuple, b: Burst) -> tuple:
    """Delete symbols at positions [b.start, b.start+b.length-1] (1-based)."""
    if b.start + b.length - 1 > len(u):
        raise ValueError("burst exceeds sequence")
    return u[: b.start - 1] + u[b.start - 1 + b.length :]


def bursts(n: int, t: int, upto: bool = False) -> Iterable[Burst]:
    """All bursts of length t (or of every length in [1, t] when upto)."""
    lengths = range(1, t + 1) if upto else (t,)
    for length in lengths:
        for start in range(1, n - length + 2):
            yield Burst(start, length)


def deletion_ball(u: tuple, t: int, upto: bool = False) -> set:
    """Exact D_t(u) (or D_{<=t}(u) when upto), as a set of tuples."""
    n = len(u)
    if n > BALL_MAX_N:
        raise ValueError(f"deletion_ball refuses n > {BALL_MAX_N}")
    if not (1 <= t <= n):
        raise ValueError("require 1 <= t <= |u|")
    return {apply_burst(u, b) for b in bursts(n, t, upto)}


def burst_ball_size(u: tuple, t: int) -> int:
    """|D_t(u)| via the run-count formula over the t x (n/t) array.

    Row j of the array is (u_j, u_{j+t}, u_{j+2t}, ...); the ball size is
    (sum of run counts over rows) - t + 1.
    """
    n = len(u)
    if t < 1 or n % t != 0:
        raise ValueError("formula requires t >= 1 and t | n")
    total = 0
    for j in range(t):
        row = u[j::t]
        runs = 1 + sum(1 for a, b in zip(row, row[1:]) if a != b)
        total += runs
    return total - t + 1


def vt_syndrome(w: Seq[int]) -> int:
    """VT(w) = sum of i * w_i with 1-based i; exact integer, no modulus."""
    return sum(i * s for i, s in enumerate(w, start=1))


def run_syndrome(x: tuple) -> tuple:
    """Return (r, VTr): 0-based run indices of x and their sum."""
    check_binary(x)
    r = []
    idx = 0
    for i, s in enumerate(x):
        if i > 0 and s != x[i - 1]:
            idx += 1
        r.append(idx)
    return tuple(r), sum(r)


def psi(x: tuple) -> tuple:
    """Derivative map: psi(x)_i = x_i xor x_{i+1} for i < n, psi(x)_n = x_n."""
    check_binary(x)
    n = len(x)
    return tuple(x[i] ^ x[i + 1] if i < n - 1 else x[i] for i in range(n))


def psi_inv(y: tuple) -> tuple:
    """Inverse of psi: suffix-xor from the right."""
    check_binary(y)
    out = []
    acc = 0
    for s in reversed(y):
        acc ^= s
        out.append(acc)
    return tuple(reversed(out))


def phi(u: tuple) -> tuple:
    """Ascent indicator: first bit 1, bit i = 1 iff u_i > u_{i-1}."""
    if not u:
        raise ValueError("phi requires a nonempty sequence")
    return (1,) + tuple(1 if b > a else 0 for a, b in zip(u, u[1:]))


def longest_period2(x: tuple) -> int:
    """Length of the longest substring s of x with s_i = s_{i+2} throughout.

    Substrings of length <= 2 vacuously have period 2, so the result is
    min(|x|, 2) at least (and |x| itself for |x| <= 2).
    """
    n = len(x)
    if n <= 2:
        return n
    best = 2
    run = 2
    for i in range(2, n):
        if x[i] == x[i - 2]:
            run += 1
        else:
            run = 2
        if run > best:
            best = run
    return best


def to_matrix(u: tuple, q: int) -> tuple:
    """Rows of the bit matrix A(u): row 1 is the LSB of every symbol."""
    check_symbols(u, q)
    nrows = max(1, (q - 1).bit_length())
    return tuple(tuple((s >> r) & 1 for s in u) for r in range(nrows))


def from_matrix(rows: Seq[tuple], q: int) -> tuple:
    """Inverse of to_matrix; errors if a column decodes to a value >= q."""
    if not rows:
        raise ValueError("empty matrix")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    u = []
    for j in range(n):
        val = sum(rows[r][j] << r for r in range(len(rows)))
        if val >= q:
            raise ValueError(f"column {j + 1} decodes to {val} >= q={q}")
        u.append(val)
    return tuple(u)


def ceil_log2(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return (n - 1).bit_length()


def parse_sequence(text: str, q: Optional[int] = None) -> tuple:
    """Parse comma-separated decimals; plain 0/1 strings are accepted as
    binary shorthand.  Symbols are validated against q when given."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        u = tuple(int(part) for part in text.rstrip(",").split(","))
    elif set(text) <= {"0", "1"}:
        u = tuple(int(ch) for ch in text)
    else:
        u = (int(text),)
    if q is not None:
        check_symbols(u, q)
    return u


def format_sequence(u: Seq[int]) -> str:
    """Inverse of parse_sequence: 0/1 shorthand when possible, else commas."""
    if u and all(s in (0, 1) for s in u):
        return "".join(str(s) for s in u)
    out = ",".join(str(s) for s in u)
    # a lone multi-digit symbol would otherwise read back as binary shorthand
    if "," not in out:
        out += ","
    return out
