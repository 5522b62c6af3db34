""" Exceptions raised by extlab. """


class ExtlabError(Exception):
    pass


class PosetError(ExtlabError, ValueError):
    pass


class CycleError(PosetError):
    """ Relations whose closure is not irreflexive or not antisymmetric. """


class WidthError(PosetError):
    """ An operation that needs a poset of width at most two got a wider one. """


class TotalOrderError(PosetError):
    pass


class PosetParseError(PosetError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = "line %d: %s" % (lineno, message)
        super().__init__(message)
        self.lineno = lineno


class ChainIndexError(ExtlabError, IndexError):
    pass


class CapError(ExtlabError):
    """ Refuses an enumeration whose size bound exceeds the configured cap. """


class EmptyError(ExtlabError):
    pass


class EmptyChainError(ExtlabError):
    pass


class DimError(ExtlabError, ValueError):
    pass


class OutOfRegionError(ExtlabError, ValueError):
    pass


class PreconditionError(ExtlabError, ValueError):
    pass


class GeometryError(ExtlabError, ValueError):
    pass


class ConfigError(ExtlabError):
    pass
