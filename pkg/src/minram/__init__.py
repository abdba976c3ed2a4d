"""Constructive minimal-ramification realizations of finite groups as Aut(K/F)."""

__version__ = "0.1.0"
