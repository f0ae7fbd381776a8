"""Exception types shared across the package."""


class BvmError(Exception):
    """Base class for every error raised by this library."""


class AlgebraMismatch(BvmError):
    """Operands belong to different Boolean algebras."""


class BadSpec(BvmError):
    """Malformed construction request (bad permutation, unknown atom, ...)."""


class LengthMismatch(BvmError):
    """Parallel sequences have different lengths."""


class NotAutomorphism(BvmError):
    """A homomorphism was required to be an automorphism and is not."""


class CapExceeded(BvmError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, message, count):
        super().__init__(message)
        self.count = count


class SearchExhausted(BvmError):
    """A search that must succeed by theorem found nothing; signals a bug."""


class FormulaSyntaxError(BvmError):
    """Formula text does not match the grammar."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownSymbol(BvmError):
    """Identifier is not declared in the active signature."""


class ArityError(BvmError):
    """Symbol applied to the wrong number of arguments."""


class UnboundedQuantifier(BvmError):
    """Carrier quantifier used where no finite carrier is available."""


class UnboundVariable(BvmError):
    """Free variable missing from the assignment."""


class NotRestricted(BvmError):
    """Operation requires a formula with bounded quantifiers only."""


class EmptyFragment(BvmError):
    """A nonempty universe fragment is required."""


class NotExtensional(BvmError):
    """Map fails the extensionality inequality."""


class NotAFunction(BvmError):
    """Internal object is not a function with truth value one."""


class RankInsufficient(BvmError):
    """Rank budget too small for the requested construction."""


class MetricAxiomViolation(BvmError):
    """A candidate Boolean metric breaks one of the three axioms."""

    def __init__(self, axiom, witness):
        super().__init__(f"metric axiom {axiom!r} fails at {witness!r}")
        self.axiom = axiom
        self.witness = witness


class MemNotInSignature(BvmError):
    """Membership atoms have no meaning in an algebraic system."""


class SignatureMismatch(BvmError):
    """Two systems were expected to share a signature."""


class NotBoolean(BvmError):
    """Band lattice failed the Boolean checks; must never fire."""


class InternalInconsistency(BvmError):
    """Conditions proved equivalent disagreed; must never fire."""


class SizeOverflow(BvmError):
    """Requested combinatorial object exceeds the size cap."""


class ScriptError(BvmError):
    """Error in a workbench script, with its source line."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
