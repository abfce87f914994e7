"""Exception hierarchy.

Every domain failure raised by the package derives from :class:`BareoError`,
so callers (and the CLI) can separate domain errors from programming errors.
"""


class BareoError(ValueError):
    """Base class for all domain errors."""


# graph construction and lookup
class LoopEdge(BareoError):
    pass


class UnknownEndpoint(BareoError):
    pass


class DuplicateVertex(BareoError):
    pass


class UnknownVertex(BareoError):
    pass


class UnknownEdge(BareoError):
    pass


class NotDisjoint(BareoError):
    pass


class BadParameter(BareoError):
    pass


class PartialMap(BareoError):
    pass


# topology
class UnknownPoint(BareoError):
    pass


class AmbientMismatch(BareoError):
    pass


class TooLarge(BareoError):
    pass


class EmptyGraph(BareoError):
    pass


# point maps
class DomainMismatch(BareoError):
    pass


class NotHomomorphism(BareoError):
    pass


class NotWeakHomomorphism(BareoError):
    pass


class SameVertex(BareoError):
    pass


class NameClash(BareoError):
    pass


class StaleEdge(BareoError):
    pass


class NotASubdivision(BareoError):
    pass


class NotContinuous(BareoError):
    pass


# factorization
class NotVertexMap(BareoError):
    pass


class FoldedEdge(BareoError):
    """A continuous vertex map sends an edge to an edge although both of its
    endpoints land on the same vertex; such maps admit no factorization
    through a contraction followed by an incidence map."""


class Disconnected(BareoError):
    pass


class NotInjective(BareoError):
    pass


class IsolatedVertexPresent(BareoError):
    pass


class NotBijective(BareoError):
    pass


class InverseNotContinuous(BareoError):
    pass


# invariants
class NotColorable(BareoError):
    pass


class NoEdges(BareoError):
    pass
