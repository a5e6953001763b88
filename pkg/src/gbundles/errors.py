"""Exception hierarchy shared by the library and the CLI."""


class GBundlesError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class ComplexError(GBundlesError):
    """A cell complex violates one of its structural invariants.

    ``code`` is a stable machine-readable tag such as ``"dangling-reference"``.
    """

    def __init__(self, code, message):
        super().__init__(f"[{code}] {message}")
        self.code = code
        self.message = message


class DisconnectedError(ComplexError):
    def __init__(self, message):
        super().__init__("disconnected", message)


class DimensionError(ComplexError):
    def __init__(self, message):
        super().__init__("dimension", message)


class GroupSpecError(GBundlesError):
    """Unparseable or unsupported structure-group / coefficient expression."""


class HypothesisViolation(GBundlesError):
    """The structure group does not satisfy the classification hypotheses.

    ``flag`` names the offending descriptor field.
    """

    def __init__(self, flag, message):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


class EnumerationLimitError(GBundlesError):
    """A brute-force oracle refused to run because the search space is too large."""
