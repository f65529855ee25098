"""Exception hierarchy shared across the toolchain.

Every error the pipeline can raise deliberately derives from
CommitGaugeError so the CLI can map failures onto its exit-code
contract (2 repository, 3 schema/format, 4 data sufficiency).
"""


class CommitGaugeError(Exception):
    """Base class for all deliberate commitgauge failures."""


# -- repository access ----------------------------------------------------

class NotARepository(CommitGaugeError):
    pass


class UnresolvableRevision(CommitGaugeError):
    pass


class ObjectMissing(CommitGaugeError):
    pass


# -- schemas and formats ---------------------------------------------------

class SchemaViolation(CommitGaugeError):
    """A feature vector broke the canonical schema (e.g. non-finite value)."""


class SchemaMismatch(CommitGaugeError):
    """Two artifacts disagree on their schema version."""


class MalformedRow(CommitGaugeError):
    def __init__(self, line: int, message: str = "malformed row"):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidValue(CommitGaugeError):
    def __init__(self, line: int, question: str, message: str = "invalid value"):
        super().__init__(f"line {line}, {question}: {message}")
        self.line = line
        self.question = question


class DuplicateResponse(CommitGaugeError):
    pass


# -- data sufficiency ------------------------------------------------------

class IncompleteDesign(CommitGaugeError):
    pass


class InsufficientData(CommitGaugeError):
    pass


class InsufficientCorpus(CommitGaugeError):
    pass


class DegenerateVariance(CommitGaugeError):
    pass


class ConstantSeries(CommitGaugeError):
    pass


class LengthMismatch(CommitGaugeError):
    pass


# -- domain violations -----------------------------------------------------

class OutOfRange(CommitGaugeError):
    pass


class NonPositiveInput(CommitGaugeError):
    pass


class UnknownQuestion(CommitGaugeError):
    pass
