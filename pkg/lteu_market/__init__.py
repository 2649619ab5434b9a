"""
Market equilibria of a licensed incumbent and unlicensed entrants with LTE-U.
"""

__version__ = "1.0.0"
