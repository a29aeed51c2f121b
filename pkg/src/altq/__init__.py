"""Exact computations for the alternating presentation of the q-Onsager algebra."""

from __future__ import annotations

__version__ = "0.1.0"
