class SpcobError(Exception):
    exit_code: int = 1


class DomainError(SpcobError):
    exit_code = 2


class ParseError(DomainError):
    pass


class RingMismatchError(DomainError):
    def __init__(self, left: object, right: object):
        self.left = left
        self.right = right
        super().__init__(f"Ring mismatch: {left} vs {right}")


class ConsistencyError(SpcobError):
    """An identity that must hold failed to hold in computation."""

    exit_code = 1

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        note = f": {detail}" if detail else ""
        super().__init__(f"Consistency failure in {check}{note}")


class UsageError(SpcobError):
    exit_code = 2
