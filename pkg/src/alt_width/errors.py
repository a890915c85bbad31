"""Exception hierarchy shared by every module of the package."""


class AltWidthError(ValueError):
    """Base class for all errors raised by alt_width."""


class CycleSyntaxError(AltWidthError):
    """Malformed cycle-notation text, repeated point, or out-of-range point."""


class TypeMismatch(AltWidthError):
    """Two permutations were expected to share a cycle type and do not."""


class IdentityInput(AltWidthError):
    """An operation that needs a nontrivial permutation received the identity."""


class NotACycle(AltWidthError):
    pass


class OddPermutation(AltWidthError):
    pass


class ParityObstruction(OddPermutation):
    """The target is odd while the base class is even, so no finite product exists."""


class KTooSmall(AltWidthError):
    pass


class InvalidArgument(AltWidthError):
    pass


class InvalidRange(AltWidthError):
    pass


class UniverseTooSmall(AltWidthError):
    pass


class Unreachable(AltWidthError):
    """Raised by operations that need a finite exact width but got none."""
