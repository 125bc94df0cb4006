"""Shared error types and enumeration limits."""

from __future__ import annotations

# Subset enumeration and Graver completion are exponential in the number of
# quantities; the cap keeps accidental large inputs from hanging a session.
DEFAULT_MAX_N = 20


class SizeLimitError(Exception):
    """Raised when a matrix exceeds the configured quantity-count cap."""

    def __init__(self, n: int, limit: int):
        super().__init__(
            f"matrix has {n} quantities, exceeding the configured cap of {limit}"
        )
        self.n = n
        self.limit = limit
