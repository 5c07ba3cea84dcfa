"""Exception types.  Every error raised on bad input derives from InputError."""


class LieToriError(Exception):
    pass


class InputError(LieToriError, ValueError):
    """Raised for malformed or invariant-violating input; the CLI maps it to exit 2."""


class DivisionByZero(LieToriError, ZeroDivisionError):
    pass


class InvalidConductor(InputError):
    pass


class NotRootOfUnity(InputError):
    pass


class ParseError(InputError):
    pass


class Inconsistent(LieToriError):
    pass


class UnsupportedType(InputError):
    pass


class ZeroRoot(InputError):
    pass


class RankMismatch(InputError):
    pass


class InvalidQuantumMatrix(InputError):
    pass


class NonRootOfUnityParameter(InputError):
    pass


class BadSemilattice(InputError):
    pass


class AlgebraMismatch(LieToriError):
    pass


class NotHomogeneous(InputError):
    pass


class ZeroElement(InputError):
    pass


class IncompatibleKind(InputError):
    pass


class IncompatibleVariety(LieToriError):
    pass


class InvalidTable(InputError):
    pass


class NotTransposeClosed(InputError):
    pass


class NotAssociative(InputError):
    pass


class RankTooSmall(InputError):
    pass


class NotAlternative(InputError):
    pass


class NotJordan(InputError):
    pass


class BadPeirce(InputError):
    pass


class OctonionRankNot3(InputError):
    pass


class BadTauList(InputError):
    pass


class NonCommutingAutomorphisms(InputError):
    pass


class NotDiagonalizable(InputError):
    pass


class TorusMismatch(LieToriError):
    pass


class MissingAntiInvolution(InputError):
    pass


class HypothesisViolated(InputError):
    pass


class UnsupportedCentroidDegree(LieToriError):
    pass


class NotPermissible(InputError):
    pass


class InvalidCocycle(InputError):
    pass


class NotPreChevalley(LieToriError):
    pass


class NotSkew(InputError):
    """A term chi^mu d_theta with theta(mu) != 0."""
