"""Exception types. Each carries a short ``kind`` tag used by the CLI."""

from __future__ import annotations


class CodingError(ValueError):
    kind = "error"


class ShapeError(CodingError):
    kind = "shape"


class FormatError(CodingError):
    """Malformed text input; ``line`` / ``position`` are 1-based when known."""

    kind = "format"

    def __init__(self, message: str, line: int | None = None, position: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.position = position


class RedundantRowsError(CodingError):
    kind = "redundant-rows"

    def __init__(self, rank: int, rows: int):
        super().__init__(
            f"parity-check matrix has {rows} rows but rank {rank}; "
            "use reduce_parity_check() to drop dependent rows"
        )
        self.rank = rank
        self.rows = rows


class BadParamsError(CodingError):
    kind = "bad-params"


class EmptyCodeError(CodingError):
    kind = "empty-code"


class NotErrorOnlyError(CodingError):
    kind = "not-error-only"


class TooLargeError(CodingError):
    """An exhaustive enumeration would exceed the configured cap."""

    kind = "too-large"

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} items exceeds enumeration cap {cap}")
        self.size = size
        self.cap = cap


DEFAULT_CAP = 1 << 20


def check_cap(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise TooLargeError(what, size, cap)
