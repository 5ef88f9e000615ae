"""Exception types shared across the package."""


class DomainError(ValueError):
    """A mathematically invalid argument (wrong parity, out of range, ...)."""


class UnsupportedEmbedding(Exception):
    """Requested values live in a proper extension of Q_p and cannot be embedded."""


class PrecisionError(Exception):
    """An operation cannot guarantee the requested number of p-adic digits."""

    def __init__(self, message: str, digits_guaranteed: int | None = None):
        super().__init__(message)
        self.digits_guaranteed = digits_guaranteed
