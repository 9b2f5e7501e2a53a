"""Exception hierarchy shared by every module of the package."""


class BipturanError(Exception):
    """Base class for all errors raised by bipturan."""


class IndexOutOfRange(BipturanError, IndexError):
    pass


class DuplicateEdge(BipturanError, ValueError):
    pass


class OverlappingSets(BipturanError, ValueError):
    pass


class DisconnectedInput(BipturanError, ValueError):
    pass


class NotConnectivityOne(BipturanError, ValueError):
    pass


class GraphFormatError(BipturanError, ValueError):
    """Raised by the graph file parser on malformed input."""


class BadLength(BipturanError, ValueError):
    pass


class NotBalanced(BipturanError, ValueError):
    pass


class Acyclic(BipturanError, ValueError):
    pass


class XLargerThanY(BipturanError, ValueError):
    pass


class InvalidParams(BipturanError, ValueError):
    pass


class PreconditionViolated(BipturanError, ValueError):
    pass


class TooLarge(BipturanError, ValueError):
    """An exhaustive computation would exceed its feasibility guard."""


class UnknownTheorem(BipturanError, KeyError):
    pass


class LemmaFalsified(BipturanError):
    """No witness exists although every hypothesis of the lemma holds.

    This should never happen.  The offending instance is kept on the
    exception so that it can be written out and inspected.
    """

    def __init__(self, lemma: str, graph, **anchors):
        self.lemma = lemma
        self.graph = graph
        self.anchors = anchors
        super().__init__(f"{lemma}: no witness found for {graph!r} with anchors {anchors}")


class InvalidPath(BipturanError, ValueError):
    pass
