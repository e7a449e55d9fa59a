"""Desk-scale quantum computation toolkit: a seeded state-vector simulator,
Deutsch-Jozsa, reversible logic over Z2 and Turing-machine interpreters."""

__version__ = "0.1.0"
