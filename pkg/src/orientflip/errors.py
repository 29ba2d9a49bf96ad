"""Exception hierarchy shared by every module of the package."""


class OrientFlipError(Exception):
    """Base class for all errors raised by orientflip."""


class SelfLoop(OrientFlipError, ValueError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.vertex = u


class VertexOutOfRange(OrientFlipError, ValueError):
    pass


class EdgeOutOfRange(OrientFlipError, IndexError):
    pass


class GraphMismatch(OrientFlipError, ValueError):
    pass


class ParseError(OrientFlipError, ValueError):
    pass


class SameVertex(OrientFlipError, ValueError):
    pass


class TooSmall(OrientFlipError, ValueError):
    pass


class NotStronglyConnected(OrientFlipError, ValueError):
    pass


class NotKConnected(OrientFlipError, ValueError):
    pass


class UnderlyingConnectivityTooLow(OrientFlipError, ValueError):
    pass


class NotMinimalTightSet(OrientFlipError, ValueError):
    pass


class PreconditionConnectivity(OrientFlipError, ValueError):
    pass


class AlreadyTight(OrientFlipError, ValueError):
    """Raised when every tight family is trivial, i.e. D is already (k+1)-edge-connected."""


class NotAPath(OrientFlipError, ValueError):
    pass


class NotKPlus1Connected(OrientFlipError, ValueError):
    pass


class InternalInvariantViolated(OrientFlipError, AssertionError):
    """A proven invariant failed to hold. Always a bug."""


class MiddleSearchTooLarge(OrientFlipError):
    """The oracle search between two (k+1)-connected orientations hit its node cap.

    ``partial`` holds the flips already found for the two outer segments and
    the two (k+1)-edge-connected endpoints.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class Obstructed(OrientFlipError, ValueError):
    def __init__(self, obstruction):
        super().__init__(f"2-edge-cut obstruction on edges {obstruction.cut_edges}")
        self.obstruction = obstruction


class TooLarge(OrientFlipError, ValueError):
    pass


class NodeNotFound(OrientFlipError, KeyError):
    pass
