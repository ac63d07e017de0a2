"""Exact chromatic polynomials and DP color functions of hypergraphs."""
