"""Codes correcting bursts of deletions over binary, q-ary, and permutation
alphabets, with sieving and verification tooling."""

__version__ = "0.1.0"

from .seqcore import Burst, Interval, NotDecodableError

__all__ = ["Burst", "Interval", "NotDecodableError", "__version__"]
