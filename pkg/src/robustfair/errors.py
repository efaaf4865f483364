"""Exception types shared across the toolkit."""


class InputError(ValueError):
    """Malformed or out-of-range input (bad ids, bad files, bad parameters)."""


class PreconditionError(ValueError):
    """An operation was called on data that violates its contract."""


class MalformedStreamError(ValueError):
    """A pairwise stream contradicts itself for some clustering index."""

    def __init__(self, index: int, pair: tuple[int, int]):
        self.index = index
        self.pair = pair
        super().__init__(
            f"stream for clustering {index} marks pair {pair} as separated "
            f"but its union records place both endpoints in one cluster"
        )
