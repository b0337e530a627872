"""Numerical core: special functions, the truncated Fock oracle and the coherent-state families."""
