"""Exact formal power series: a lazy sequence engine and what is built on it."""

from seqalg.coeff import I, Gaussian
from seqalg.seq_core import X, Seq, compose, converse, fix, sqroot, take

__all__ = ["Gaussian", "I", "Seq", "X", "compose", "converse", "fix", "sqroot", "take"]
