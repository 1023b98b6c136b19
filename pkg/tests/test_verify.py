"""Tests for sieving, confusability checking, exact maximum codes, codebook
serialization, and round-trip sweeps."""
import itertools

import pytest

from burstcodes.seqcore import Burst, apply_burst, vt_syndrome, psi
from burstcodes.verify import (
    Codebook,
    book_decoder,
    confusability_check,
    exists_perm_code,
    max_code_exact,
    max_perm_code_exact,
    roundtrip_sweep,
    sieve,
)
from burstcodes.bounds import lp_bound, perm_bound


class TestSieve:
    def test_levenshtein_size_at_least_pigeonhole(self):
        # 2n residue classes partition 2^n words
        book = sieve("levenshtein", 8)
        assert len(book.words) >= 2**8 // 16

    def test_vt_trivial_n1(self):
        book = sieve("vt", 1)
        assert len(book.words) == 1

    def test_words_are_members(self):
        book = sieve("levenshtein", 8)
        a = book.spec.params["a"]
        for x in book.words:
            assert vt_syndrome(psi(x)) % 16 == a

    def test_budget_enforced(self):
        with pytest.raises(ValueError):
            sieve("vt", 30, budget=1 << 10)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            sieve("nope", 8)

    def test_deterministic(self):
        a = sieve("tenengolts", 5, q=3)
        b = sieve("tenengolts", 5, q=3)
        assert a.words == b.words
        assert a.spec == b.spec


class TestConfusability:
    def test_codebook_passes(self):
        book = sieve("levenshtein", 8)
        assert confusability_check(book.words, 2) is None

    def test_witness_found(self):
        # two words sharing a burst descendant yield a concrete witness
        words = [(0, 0, 0, 0), (0, 0, 0, 1)]
        witness = confusability_check(words, 1)
        assert witness is not None
        u, v, d = witness
        assert {u, v} == set(words)
        assert d == (0, 0, 0)

    def test_single_word_passes(self):
        assert confusability_check([(0, 1, 0, 1)], 2) is None


class TestExactMax:
    def test_single_deletion_n2(self):
        # [DERIVED] {00, 11} is optimal
        assert max_code_exact(2, 2, 1) == 2

    def test_two_burst_n4(self):
        # [DERIVED] exhaustive search gives 3, below the bound of 4
        got = max_code_exact(4, 2, 2)
        assert got == 3
        assert got <= lp_bound(4, 2, 2).floor

    def test_perm_small(self):
        # [DERIVED] exhaustive: 12 of 120 permutations, bound 15
        got = max_perm_code_exact(5, 2)
        assert got == 12
        assert got <= perm_bound(5, 2).floor

    def test_budget_enforced(self):
        with pytest.raises(ValueError):
            max_code_exact(20, 2, 2)
        with pytest.raises(ValueError):
            max_perm_code_exact(9, 2)


class TestExistsPermCode:
    def test_matches_exact_max_n5(self):
        # [DERIVED] the decision procedure brackets max_perm_code_exact(5,2)=12
        assert exists_perm_code(5, 2, 12) is True
        assert exists_perm_code(5, 2, 13) is False

    def test_matches_exact_max_n4(self):
        # [DERIVED] max_perm_code_exact(4,2)=4, bound floor(24/6)=4
        got = max_perm_code_exact(4, 2)
        assert exists_perm_code(4, 2, got) is True
        assert exists_perm_code(4, 2, got + 1) is False

    def test_trivial_sizes(self):
        # [TRIVIAL] a single codeword is always a valid code
        assert exists_perm_code(5, 2, 1) is True
        assert exists_perm_code(5, 2, 0) is True

    def test_counting_shortcut(self):
        # [TRIVIAL] size*(n-t+1) exceeds the number of burst-t descendants
        assert exists_perm_code(5, 2, 16) is False

    def test_domain_and_budget(self):
        with pytest.raises(ValueError):
            exists_perm_code(4, 0, 2)
        with pytest.raises(ValueError):
            exists_perm_code(9, 2, 5)
        with pytest.raises(RuntimeError):
            exists_perm_code(5, 2, 13, node_budget=10)


class TestCodebookJson:
    def test_roundtrip(self):
        book = sieve("pbounded", 10, P=4)
        text = book.to_json()
        loaded = Codebook.from_json(text)
        assert loaded.spec == book.spec
        assert loaded.words == book.words
        assert loaded.redundancy_bits == book.redundancy_bits
        assert loaded.sampled == book.sampled

    def test_tuple_params_survive(self):
        book = sieve("c2b", 12, q=4, max_words=8)
        loaded = Codebook.from_json(book.to_json())
        assert loaded.spec.params["rows"] == book.spec.params["rows"]

    def test_schema_version_checked(self):
        book = sieve("vt", 4)
        import json

        raw = json.loads(book.to_json())
        raw["schema_version"] = 99
        with pytest.raises(ValueError):
            Codebook.from_json(json.dumps(raw))


class TestSweep:
    def test_vt_sweep_ok(self):
        book = sieve("vt", 8)
        report = roundtrip_sweep(book, book_decoder(book), 1)
        assert report.ok
        assert report.total == len(book.words) * 8

    def test_negative_control(self):
        # a deliberately wrong decoder is reported, not hidden
        book = sieve("vt", 6)

        def bad(w, rx, b):
            return (0,) * 6

        report = roundtrip_sweep(book, bad, 1)
        assert not report.ok
        assert len(report.failures) > 0

    def test_parallel_matches_serial(self):
        book = sieve("levenshtein", 8)
        dec = book_decoder(book)
        serial = roundtrip_sweep(book, dec, 2)
        parallel = roundtrip_sweep(book, dec, 2, jobs=4)
        assert serial.ok and parallel.ok
        assert serial.total == parallel.total

    def test_induced_channel(self):
        book = sieve("induced", 6, q=3)
        report = roundtrip_sweep(
            book, book_decoder(book), 2, channel="induced"
        )
        assert report.ok
