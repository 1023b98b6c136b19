"""Ground-truth machinery: codebook sieving, confusability checking, exact
maximum-code computation, and round-trip sweeps.

A sieve enumerates an ambient space (or, for spaces beyond the budget, a
structured random sample, flagged as sampled), groups words by their residue
tuple, and keeps the largest group (ties to the lexicographically smallest
parameter tuple).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product
from math import log2
from typing import Callable, Iterable, Optional

from . import classic, perm as perm_mod, pll2burst, tburst
from .bounds import measured_redundancy
from .seqcore import (
    Burst,
    Interval,
    NotDecodableError,
    apply_burst,
    bursts,
    deletion_ball,
    longest_period2,
    psi,
    vt_syndrome,
)

SCHEMA_VERSION = 1
DEFAULT_BUDGET = 1 << 24


@dataclass(frozen=True)
class CodeSpec:
    family: str
    n: int
    q: int
    t: int
    params: dict = field(default_factory=dict)


@dataclass
class Codebook:
    spec: CodeSpec
    words: list
    redundancy_bits: float
    sampled: bool = False
    full_size: Optional[int] = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": SCHEMA_VERSION,
                "spec": {
                    "family": self.spec.family,
                    "n": self.spec.n,
                    "q": self.spec.q,
                    "t": self.spec.t,
                    "params": self.spec.params,
                },
                "words": [list(w) for w in self.words],
                "redundancy_bits": self.redundancy_bits,
                "sampled": self.sampled,
                "full_size": self.full_size,
            },
            indent=1,
        )

    @staticmethod
    def from_json(text: str) -> "Codebook":
        raw = json.loads(text)
        if raw.get("schema_version") != SCHEMA_VERSION:
            raise ValueError("unsupported codebook schema version")
        sp = raw["spec"]
        params = _params_from_json(sp.get("params", {}))
        spec = CodeSpec(sp["family"], sp["n"], sp["q"], sp["t"], params)
        return Codebook(
            spec=spec,
            words=[tuple(w) for w in raw["words"]],
            redundancy_bits=raw["redundancy_bits"],
            sampled=raw.get("sampled", False),
            full_size=raw.get("full_size"),
        )


def _params_to_json(params: dict) -> dict:
    def conv(v):
        if isinstance(v, tuple):
            return [conv(x) for x in v]
        return v

    return {k: conv(v) for k, v in params.items()}


def _params_from_json(params: dict) -> dict:
    def conv(v):
        if isinstance(v, list):
            return tuple(conv(x) for x in v)
        return v

    return {k: conv(v) for k, v in params.items()}


def _best_group(groups: dict):
    """Largest group; ties broken by smallest parameter tuple."""
    best_key = min(groups, key=lambda k: (-len(groups[k]), k))
    return best_key, groups[best_key]


def _binary_space(n: int, budget: int) -> Iterable[tuple]:
    if 2**n > budget:
        raise ValueError(f"ambient space 2^{n} exceeds budget {budget}")
    return product((0, 1), repeat=n)


def _qary_space(n: int, q: int, budget: int) -> Iterable[tuple]:
    if q**n > budget:
        raise ValueError(f"ambient space {q}^{n} exceeds budget {budget}")
    return product(range(q), repeat=n)


def _alternating_space(n: int, q: int, budget: int) -> Iterable[tuple]:
    total = q * (q - 1) ** (n - 1)
    if total > budget:
        raise ValueError(f"alternating space of size {total} exceeds budget")

    def rec(prefix):
        if len(prefix) == n:
            yield prefix
            return
        for s in range(q):
            if not prefix or s != prefix[-1]:
                yield from rec(prefix + (s,))

    return rec(())


def sieve(
    family: str,
    n: int,
    q: int = 2,
    t: int = 1,
    budget: int = DEFAULT_BUDGET,
    max_words: int = 1 << 14,
    samples: int = 3000,
    seed: int = 0,
    **extra,
) -> Codebook:
    """Build the largest codebook of the family at the given size by
    parameter sieving.  See module docstring for the strategy."""
    if family == "vt":
        groups = {}
        for x in _binary_space(n, budget):
            groups.setdefault(vt_syndrome(x) % (n + 1), []).append(x)
        a, words = _best_group(groups)
        return _book(family, n, 2, 1, {"a": a}, words, 2**n)
    if family == "levenshtein":
        groups = {}
        for x in _binary_space(n, budget):
            groups.setdefault(vt_syndrome(psi(x)) % (2 * n), []).append(x)
        a, words = _best_group(groups)
        return _book(family, n, 2, 2, {"a": a}, words, 2**n)
    if family == "tenengolts":
        groups = {}
        for u in _qary_space(n, q, budget):
            key = (vt_syndrome(classic.ascent_indicator(u)) % n, sum(u) % q)
            groups.setdefault(key, []).append(u)
        (a, b), words = _best_group(groups)
        return _book(family, n, q, 1, {"a": a, "b": b}, words, q**n)
    if family == "induced":
        groups = {}
        total = q * (q - 1) ** (n - 1)
        for u in _alternating_space(n, q, budget):
            key = (
                vt_syndrome(classic.interleaved_psi(u)) % (2 * n),
                sum(u[0::2]) % q,
                sum(u[1::2]) % q,
            )
            groups.setdefault(key, []).append(u)
        (a, b, c), words = _best_group(groups)
        return _book(family, n, q, 2, {"a": a, "b": b, "c": c}, words, total)
    if family == "pbounded":
        P = extra["P"]
        groups = {}
        for x in _binary_space(n, budget):
            y = psi(x)
            key = (vt_syndrome(y) % (2 * P), sum(y) % 3)
            groups.setdefault(key, []).append(x)
        (c, d), words = _best_group(groups)
        return _book(family, n, 2, 2, {"P": P, "c": c, "d": d}, words, 2**n)
    if family == "pll_lev":
        cap = pll2burst.pll_cap(n)
        groups = {}
        total = 0
        for x in _binary_space(n, budget):
            if longest_period2(x) > cap:
                continue
            total += 1
            groups.setdefault(vt_syndrome(psi(x)) % (2 * n), []).append(x)
        a, words = _best_group(groups)
        return _book(family, n, 2, 2, {"a": a}, words, 2**n)
    if family == "c2b":
        return _sieve_c2b(n, q, budget, max_words)
    if family == "loc":
        return _sieve_loc(n, t, extra["delta"], budget, samples, seed)
    if family == "ctb":
        return _sieve_ctb(
            n, q, t, extra["delta"], extra["P"], budget, samples, seed, max_words
        )
    if family == "perm":
        return _sieve_perm(n, t, extra["delta"], extra["P"], budget)
    raise ValueError(f"unknown family {family!r}")


def _book(family, n, q, t, params, words, ambient, sampled=False, full=None):
    size = full if full is not None else len(words)
    return Codebook(
        spec=CodeSpec(family, n, q, t, params),
        words=sorted(words),
        redundancy_bits=measured_redundancy(ambient, size),
        sampled=sampled,
        full_size=full,
    )


def _sieve_c2b(n: int, q: int, budget: int, max_words: int) -> Codebook:
    """Row-separable sieve: row 1 over the period-limited two-deletion code,
    remaining rows over the window-bounded code; the codebook is the product
    of the row books (materialized up to max_words)."""
    if q % 2 != 0:
        raise ValueError("c2b requires q even")
    nrows = max(1, (q - 1).bit_length())
    cap = pll2burst.pll_cap(n)
    row1 = sieve("pll_lev", n, budget=budget)
    others = [sieve("pbounded", n, budget=budget, P=cap) for _ in range(nrows - 1)]
    full = len(row1.words)
    for bk in others:
        full *= len(bk.words)
    params = {
        "a": row1.spec.params["a"],
        "rows": tuple(
            (bk.spec.params["c"], bk.spec.params["d"]) for bk in others
        ),
    }
    words = []
    for combo in product(row1.words, *(bk.words for bk in others)):
        if len(words) >= max_words:
            break
        words.append(tuple(sum(bits[j] << r for r, bits in enumerate(combo)) for j in range(n)))
    return _book("c2b", n, q, 2, params, words, q**n, full=full)


def _dense_sample(n: int, dp: tburst.DensityParams, rng, count: int) -> list:
    """Structured sampler for dense strings: drop pattern occurrences with
    admissible gaps, fill the remaining bits randomly, keep actual members."""
    t, delta, w = dp.t, dp.delta, dp.w
    out = set()
    attempts = 0
    while len(out) < count and attempts < count * 60:
        attempts += 1
        x = [None] * n
        pos = rng.randint(1, max(1, delta - 2 * t + 1))
        ok = True
        while pos + 2 * t - 1 <= n:
            x[pos - 1 : pos + 2 * t - 1] = list(w)
            nxt = pos + rng.randint(2 * t, delta)
            if nxt + 2 * t - 1 > n:
                break
            pos = nxt
        for i in range(n):
            if x[i] is None:
                x[i] = rng.randint(0, 1)
        cand = tuple(x)
        if ok and tburst.is_dense(cand, dp):
            out.add(cand)
    return sorted(out)


def _sieve_loc(n, t, delta, budget, samples, seed) -> Codebook:
    dp = tburst.DensityParams(n, t, delta)
    sampled = 2**n > budget
    if sampled:
        pool = _dense_sample(n, dp, random.Random(seed), samples)
    else:
        pool = [x for x in _binary_space(n, budget) if tburst.is_dense(x, dp)]
    groups = {}
    for x in pool:
        ind, alpha = tburst.indicator_alpha(x, dp)
        key = (sum(ind) % 4, vt_syndrome(alpha) % (2 * n))
        groups.setdefault(key, []).append(x)
    if not groups:
        raise ValueError("no dense strings found")
    (c0, c1), words = _best_group(groups)
    return _book(
        "loc", n, 2, t, {"delta": delta, "c0": c0, "c1": c1}, words, 2**n,
        sampled=sampled,
    )


def _sieve_ctb(n, q, t, delta, P, budget, samples, seed, max_words) -> Codebook:
    """Row-separable sieve with sampled row pools when 2^n is out of budget;
    parameters are the residues of the best (most frequent) tuple."""
    dp = tburst.DensityParams(n, t, delta)
    labeler = tburst.BlockLabeler(
        {k: tburst.oracle_build_brute(k, t, "burst") for k in {P, 2 * P}}
    )
    rng = random.Random(seed)
    sampled = 2**n > budget
    if sampled:
        dense_pool = _dense_sample(n, dp, rng, samples)
        plain_pool = sorted(
            {
                tuple(rng.randint(0, 1) for _ in range(n))
                for _ in range(samples)
            }
        )
    else:
        space = list(_binary_space(n, budget))
        dense_pool = [x for x in space if tburst.is_dense(x, dp)]
        plain_pool = space
    groups1 = {}
    for x in dense_pool:
        ind, alpha = tburst.indicator_alpha(x, dp)
        key = (
            sum(ind) % 4,
            vt_syndrome(alpha) % (2 * n),
            tburst.block_syndromes(x, P, labeler),
        )
        groups1.setdefault(key, []).append(x)
    if not groups1:
        raise ValueError("no dense strings found for row 1")
    (c0, c1, sums1), row1_words = _best_group(groups1)
    nrows = max(1, (q - 1).bit_length())
    row_books = [row1_words]
    row_sums = [sums1]
    groups = {}
    for x in plain_pool:
        groups.setdefault(tburst.block_syndromes(x, P, labeler), []).append(x)
    for _ in range(nrows - 1):
        key, words = _best_group(groups)
        row_books.append(words)
        row_sums.append(key)
    full = 1
    for bk in row_books:
        full *= len(bk)
    params = {
        "delta": delta,
        "P": P,
        "c0": c0,
        "c1": c1,
        "row_sums": tuple(row_sums),
    }
    words = []
    for combo in product(*row_books):
        if len(words) >= max_words:
            break
        words.append(
            tuple(
                sum(bits[j] << r for r, bits in enumerate(combo))
                for j in range(n)
            )
        )
    return _book(
        "ctb", n, q, t, params, words, q**n, sampled=sampled, full=full
    )


def _sieve_perm(n, t, delta, P, budget) -> Codebook:
    from itertools import permutations
    from math import factorial

    if factorial(n) > budget:
        raise ValueError("permutation space exceeds budget")
    dp = tburst.DensityParams(n, t, delta)
    dummy = perm_mod.PermCodeParams(
        n, t, delta, P, 0, 0, (((0, 0), (0, 0)))
    )
    labeler = perm_mod.perm_labeler(dummy)
    groups = {}
    for pi in permutations(range(1, n + 1)):
        b = perm_mod.bp_map(pi)
        ind, alpha = tburst.indicator_alpha(b, dp)
        if max(alpha) > delta:
            continue
        p = perm_mod.overlap_ranks(pi, t)
        key = (
            sum(ind) % 4,
            vt_syndrome(alpha) % (2 * n),
            tburst.block_syndromes(p, P, labeler),
        )
        groups.setdefault(key, []).append(pi)
    (c0, c1, sums), words = _best_group(groups)
    params = {"delta": delta, "P": P, "c0": c0, "c1": c1, "sums": sums}
    return _book("perm", n, 0, t, params, words, factorial(n))


# ---------------------------------------------------------------------------
# confusability and exact maximum codes


def confusability_check(words, t: int):
    """None if all pairs of words have disjoint D_{<=t} balls, else a witness
    (word1, word2, common descendant)."""
    seen = {}
    for w in words:
        for d in deletion_ball(w, t, upto=True):
            other = seen.get(d)
            if other is not None and other != w:
                return (other, w, d)
            seen[d] = w
    return None


def _adjacency(words, ball: Callable[[tuple], set]) -> list:
    index = {w: i for i, w in enumerate(words)}
    groups = {}
    for w in words:
        for d in ball(w):
            groups.setdefault(d, []).append(index[w])
    adj = [0] * len(words)
    for members in groups.values():
        if len(members) < 2:
            continue
        for i in members:
            for j in members:
                if i != j:
                    adj[i] |= 1 << j
    return adj


def _greedy_independent(adj: list, cand: int) -> int:
    """Greedy minimum-degree independent set size (lower bound / seed)."""
    size = 0
    while cand:
        rem = cand
        pick, pick_deg = -1, None
        while rem:
            v = rem & -rem
            vi = v.bit_length() - 1
            deg = (adj[vi] & cand).bit_count()
            if pick_deg is None or deg < pick_deg:
                pick, pick_deg = vi, deg
            rem ^= v
        cand &= ~adj[pick] & ~(1 << pick)
        size += 1
    return size


def _max_independent_set(adj: list, node_budget: int = 20_000_000) -> int:
    """Exact MIS: branch and bound on the complement graph (max clique) with
    a greedy-coloring upper bound, seeded by a greedy lower bound.

    Raises RuntimeError when the search exceeds ``node_budget`` branch nodes,
    so intractable instances fail loudly instead of running unbounded.
    """
    import sys

    n = len(adj)
    full = (1 << n) - 1
    comp = [~adj[i] & full & ~(1 << i) for i in range(n)]
    best = _greedy_independent(adj, full)
    nodes = 0

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 10 * n + 100))

    def expand(size: int, cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise RuntimeError("independent-set search exceeded node budget")
        # color the candidates greedily; a clique can take at most one
        # vertex per color class, so the class index bounds the extension
        order = []
        bounds = []
        rest = cand
        color = 0
        while rest:
            color += 1
            cls = rest
            while cls:
                v = cls & -cls
                vi = v.bit_length() - 1
                order.append(vi)
                bounds.append(color)
                cls &= ~comp[vi]
                cls &= ~v
                rest ^= v
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            vi = order[idx]
            cand &= ~(1 << vi)
            nxt = cand & comp[vi]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1

    try:
        expand(0, full)
    finally:
        sys.setrecursionlimit(old_limit)
    return best


def max_code_exact(n: int, q: int, t: int, budget: int = 1 << 14) -> int:
    """Exact maximum size of a t-burst code in Sigma_q^n."""
    if q**n > budget:
        raise ValueError("space exceeds budget")
    words = list(product(range(q), repeat=n))
    adj = _adjacency(words, lambda w: deletion_ball(w, t, upto=True))
    return _max_independent_set(adj)


def max_perm_code_exact(n: int, t: int, budget: int = 1 << 14) -> int:
    """Exact maximum size of a t-burst permutation code on S_n."""
    from itertools import permutations
    from math import factorial

    if factorial(n) > budget:
        raise ValueError("space exceeds budget")
    words = list(permutations(range(1, n + 1)))
    adj = _adjacency(words, lambda w: deletion_ball(w, t, upto=True))
    return _max_independent_set(adj)


def exists_perm_code(
    n: int, t: int, size: int, budget: int = 1 << 14, node_budget: int = 20_000_000
) -> bool:
    """Complete search deciding whether S_n contains ``size`` permutations
    whose D_{<=t} burst-deletion balls are pairwise disjoint.

    Every permutation owns exactly n-t+1 descendants under a burst of
    exactly t deletions, and no two codewords may share one, so a code of
    the target size must own size*(n-t+1) distinct such cells.  The search
    branches on the unresolved cell with the fewest remaining candidate
    words: either one of those words joins the code, or the cell is owned
    by nobody (counted as waste against the quota above).  This prunes far
    harder than vertex-by-vertex branching on the confusability graph and
    can refute sizes on instances whose exact maximum is out of reach.

    Raises RuntimeError when the search exceeds ``node_budget`` nodes.
    """
    import sys
    from itertools import permutations
    from math import factorial

    if t < 1 or t >= n:
        raise ValueError("need 1 <= t < n")
    if factorial(n) > budget:
        raise ValueError("space exceeds budget")
    if size <= 1:
        return True

    words = list(permutations(range(1, n + 1)))
    nrows = len(words)
    per_word = n - t + 1

    # primary cells: descendants under a burst of exactly t deletions
    cell_id: dict = {}
    row_prim = []
    for w in words:
        ids = []
        for d in deletion_ball(w, t, upto=False):
            ids.append(cell_id.setdefault(d, len(cell_id)))
        row_prim.append(ids)
    ncells = len(cell_id)
    if size * per_word > ncells:
        return False

    # conflict mask: rows sharing any descendant at any level 1..t (incl self)
    adj = _adjacency(words, lambda w: deletion_ball(w, t, upto=True))
    conflict = [adj[i] | (1 << i) for i in range(nrows)]

    cell_rows: list = [[] for _ in range(ncells)]
    for r, ids in enumerate(row_prim):
        for c in ids:
            cell_rows[c].append(r)

    ALIVE, COVERED, DISCARDED = 0, 1, 2
    state = [ALIVE] * ncells
    cnt = [len(cell_rows[c]) for c in range(ncells)]
    alive = ncells
    dead0 = 0
    nodes = 0

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 10 * ncells + 100))

    def remove_rows(mask: int) -> None:
        nonlocal dead0
        while mask:
            b = mask & -mask
            r = b.bit_length() - 1
            mask ^= b
            for c in row_prim[r]:
                cnt[c] -= 1
                if cnt[c] == 0 and state[c] == ALIVE:
                    dead0 += 1

    def restore_rows(mask: int) -> None:
        nonlocal dead0
        while mask:
            b = mask & -mask
            r = b.bit_length() - 1
            mask ^= b
            for c in row_prim[r]:
                if cnt[c] == 0 and state[c] == ALIVE:
                    dead0 -= 1
                cnt[c] += 1

    def cover(r: int) -> list:
        nonlocal alive, dead0
        prev = []
        for c in row_prim[r]:
            prev.append(state[c])
            if state[c] == ALIVE:
                alive -= 1
                if cnt[c] == 0:
                    dead0 -= 1
            state[c] = COVERED
        return prev

    def uncover(r: int, prev: list) -> None:
        nonlocal alive, dead0
        for c, st in zip(row_prim[r], prev):
            state[c] = st
            if st == ALIVE:
                alive += 1
                if cnt[c] == 0:
                    dead0 += 1

    def search(s: int, live: int) -> bool:
        nonlocal nodes, alive, dead0
        nodes += 1
        if nodes > node_budget:
            raise RuntimeError("packing search exceeded node budget")
        if s >= size:
            return True
        if s + (alive - dead0) // per_word < size:
            return False
        # unresolved cell with fewest candidates
        c_pick, m = -1, 1 << 30
        for c in range(ncells):
            if state[c] == ALIVE and cnt[c] < m:
                m = cnt[c]
                c_pick = c
                if m == 0:
                    break
        if c_pick < 0:
            return False
        if m > 0:
            for r in cell_rows[c_pick]:
                if not live >> r & 1:
                    continue
                removed = live & conflict[r]
                remove_rows(removed)
                prev = cover(r)
                found = search(s + 1, live & ~conflict[r])
                uncover(r, prev)
                restore_rows(removed)
                if found:
                    return True
        # nobody owns this cell
        state[c_pick] = DISCARDED
        alive -= 1
        if m == 0:
            dead0 -= 1
        found = search(s, live)
        state[c_pick] = ALIVE
        alive += 1
        if m == 0:
            dead0 += 1
        return found

    # the conflict structure is invariant under relabelling values, which
    # acts transitively on S_n, so any code can be mapped to one containing
    # the identity: anchor it.
    try:
        full = (1 << nrows) - 1
        removed = full & conflict[0]
        remove_rows(removed)
        prev = cover(0)
        return search(1, full & ~conflict[0])
    finally:
        sys.setrecursionlimit(old_limit)


# ---------------------------------------------------------------------------
# round-trip sweeps


@dataclass
class SweepReport:
    total: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def roundtrip_sweep(
    book: Codebook,
    decoder: Callable[[tuple, tuple, Burst], tuple],
    t: int,
    upto: bool = True,
    channel: str = "burst",
    jobs: int = 1,
) -> SweepReport:
    """Apply every admissible corruption to every codeword and decode.

    decoder(codeword, corrupted, burst) may use the burst only as window
    side information.  `channel` is "burst" or "induced"."""
    tasks = []
    for w in book.words:
        if channel == "burst":
            for b in bursts(len(w), t, upto):
                tasks.append((w, apply_burst(w, b), b))
        else:
            for pos, res in classic.induced_deletions(w):
                tasks.append((w, res, Burst(pos, 2)))

    def run(task):
        w, corrupted, b = task
        try:
            got = decoder(w, corrupted, b)
        except NotDecodableError as exc:
            return (w, b, f"not decodable: {exc}")
        return None if got == w else (w, b, got)

    failures = []
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as ex:
            for res in ex.map(run, tasks):
                if res is not None:
                    failures.append(res)
    else:
        for task in tasks:
            res = run(task)
            if res is not None:
                failures.append(res)
    return SweepReport(total=len(tasks), failures=failures)


def book_decoder(book: Codebook) -> Callable[[tuple, tuple, Burst], tuple]:
    """Decoder closure for a sieved codebook, keyed by family."""
    spec = book.spec
    fam, n, q, p = spec.family, spec.n, spec.q, spec.params
    if fam == "vt":
        return lambda w, rx, b: classic.vt_decode(rx, p["a"], n)
    if fam in ("levenshtein", "pll_lev"):
        return lambda w, rx, b: classic.levenshtein_decode(rx, p["a"], n)
    if fam == "tenengolts":
        return lambda w, rx, b: classic.tenengolts_decode(
            rx, p["a"], p["b"], n, q
        )
    if fam == "induced":
        return lambda w, rx, b: classic.induced_decode(
            rx, p["a"], p["b"], p["c"], n, q
        )
    if fam == "pbounded":
        params = pll2burst.PBoundedParams(n, p["P"], p["c"], p["d"])
        return lambda w, rx, b: pll2burst.pbounded_decode(rx, params, b.start)
    if fam == "c2b":
        params = pll2burst.C2BParams(n, q, p["a"], tuple(p["rows"]))
        return lambda w, rx, b: pll2burst.c2b_decode(rx, params)
    if fam == "ctb":
        params = tburst.CtbParams(
            n, q, spec.t, p["delta"], p["P"], p["c0"], p["c1"],
            tuple(p["row_sums"]),
        )
        labeler = tburst.BlockLabeler(tburst.ctb_oracles(params))
        return lambda w, rx, b: tburst.ctb_decode(rx, params, labeler)
    if fam == "perm":
        params = perm_mod.PermCodeParams(
            n, spec.t, p["delta"], p["P"], p["c0"], p["c1"], tuple(p["sums"])
        )
        labeler = perm_mod.perm_labeler(params)
        return lambda w, rx, b: perm_mod.pleqt_decode(rx, params, labeler)
    raise ValueError(f"no decoder for family {fam!r}")
