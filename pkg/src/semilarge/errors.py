"""Exception types shared across the package."""


class SemilargeError(Exception):
    """Base class for every package-specific error."""


class AssociativityViolation(SemilargeError):
    """A multiplication table fails associativity; carries a witness triple."""

    def __init__(self, triple, message=None):
        x, y, z = triple
        super().__init__(message or f"associativity fails at ({x}, {y}, {z})")
        self.triple = (x, y, z)


class IndexOutOfRange(SemilargeError):
    """A carrier or phase index (or table cell) is outside its range."""


class CarrierMismatch(SemilargeError):
    """Operands live over carriers of different orders."""


class UnsupportedSpec(SemilargeError):
    """A family description or enumeration request is not recognized."""


class SizeLimitExceeded(SemilargeError):
    """A construction or exhaustive sweep would exceed its hard cap."""


class EmptyGeneratorSet(SemilargeError):
    """A generated-subsemigroup request received no generators."""


class NotIdempotent(SemilargeError):
    """An element required to be idempotent is not."""


class NotAMember(SemilargeError):
    """An element required to lie in a given set does not."""


class NotMinimalIdeal(SemilargeError):
    """A set passed as a minimal one-sided ideal is not one."""


class NotASubsemigroup(SemilargeError):
    """A subset required to be product-closed is not."""


class EmptyMemberSet(SemilargeError):
    """A filter (or family meant to generate one) would contain the empty set."""


class NotUpwardClosed(SemilargeError):
    """An exact member list violates upward closure or intersection closure."""


class NoFIP(SemilargeError):
    """A family lacks the finite intersection property; carries a witness."""

    def __init__(self, witness, message=None):
        super().__init__(message or "family has a finite subfamily with empty intersection")
        self.witness = tuple(witness)


class HypothesisFails(SemilargeError):
    """The directed-family hypothesis fails; carries a witness (member, element)."""

    def __init__(self, witness, message=None):
        super().__init__(message or f"no member B with x*B inside the set, witness {witness}")
        self.witness = witness


class FamilyNotDirected(SemilargeError):
    """A family is not downward directed; carries a witness pair of members."""

    def __init__(self, witness, message=None):
        super().__init__(message or "no member below the witness pair")
        self.witness = witness


class AlgebraicFormUndefined(SemilargeError):
    """The algebraic route needs an idempotent filter and none was given."""


class FilterNotIdempotent(SemilargeError):
    """A predicate defined only for idempotent filters got a non-idempotent one."""


class SearchBoundExceeded(SemilargeError):
    """A bounded witness search hit its hard cap instead of guessing."""


class NotVSFC(SemilargeError):
    """A witness was requested for a set that is not very strongly central."""


class HomomorphismViolation(SemilargeError):
    """An action table breaks the composition law; carries a witness (s, t, x)."""

    def __init__(self, witness, message=None):
        s, t, x = witness
        super().__init__(message or f"composition law fails at s={s}, t={t}, x={x}")
        self.witness = (s, t, x)


class PreconditionFailed(SemilargeError):
    """A stated operation precondition does not hold for the given inputs."""


class TheoremViolation(SemilargeError):
    """Two routes that must agree disagreed; this is a falsification, not a bug guard."""


class ParseError(SemilargeError):
    """A text input could not be parsed; carries a 1-based line number."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
