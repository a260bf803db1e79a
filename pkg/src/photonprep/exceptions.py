"""Exception hierarchy for the synthesis toolkit."""


class PhotonPrepError(Exception):
    """Base class for all toolkit errors."""


class ConvergenceFailure(PhotonPrepError):
    """An iterative numerical kernel failed to converge."""


class NotSymmetric(PhotonPrepError):
    """A matrix expected to be complex symmetric is not."""


class ZeroMatrix(PhotonPrepError):
    """The zero matrix was passed where a nonzero one is required."""


class ZeroState(PhotonPrepError):
    """A state matrix with no weight cannot be normalized."""


class TooLarge(PhotonPrepError):
    """Permanent requested beyond the supported photon number."""


class PhotonNumberMismatch(PhotonPrepError):
    """Input and output Fock states carry different photon totals."""


class DimensionMismatch(PhotonPrepError):
    """Matrix or vector dimensions are inconsistent."""


class MultiplicityMismatch(PhotonPrepError):
    """Herald-row multiplicities do not sum to the required photon count."""


class SignalMismatch(PhotonPrepError):
    """A heralding signal is inconsistent with the photon budget."""


class SupportMismatch(PhotonPrepError):
    """Diagonal rescaling impossible: target support exceeds source support."""


class InfeasibleRank(PhotonPrepError):
    """The rank rule forbids the requested preparation."""


class VerificationFailure(PhotonPrepError):
    """A constructed circuit failed its independent oracle check. This is a bug."""


class DocumentError(PhotonPrepError):
    """Malformed JSON document."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
