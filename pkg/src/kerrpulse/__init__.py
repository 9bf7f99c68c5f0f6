"""Quantum self-action of ultrashort pulses in a relaxing Kerr medium."""

__version__ = "0.1.0"
