"""Exception types shared across the package."""


class DPCoverError(Exception):
    """Base class for all dpcover errors."""


class EmptyGraph(DPCoverError):
    """Operation requires a nonempty graph."""


class DisconnectedGraph(DPCoverError):
    """Operation requires a connected graph."""


class NotABlock(DPCoverError):
    """The given vertex subset is not a block of the graph."""


class MultigraphInput(DPCoverError):
    """Operation requires a simple graph but got parallel edges."""


class VertexNotFound(DPCoverError):
    """Referenced vertex does not exist."""


class ColorNotInList(DPCoverError):
    """Referenced color is not in the vertex's list."""


class ColorOutsideNk(DPCoverError):
    """A signed list contains a color outside the declared N_k palette."""


class NotDegreeList(DPCoverError):
    """Lists do not satisfy |L(u)| >= deg(u), required by the decision procedure."""


class GuardExceeded(DPCoverError):
    """Input is beyond the hard feasibility guard of an enumeration."""


class InvalidInstance(DPCoverError):
    """The instance fails validation; carries the violation list."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(v.message for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"invalid instance: {lines}{more}")
