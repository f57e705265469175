"""Exception hierarchy shared by all modules."""


class HGError(Exception):
    """Base class for every error raised by hgpingpong."""


class DimensionMismatch(HGError, ValueError):
    pass


class SingularMatrix(HGError, ValueError):
    pass


class SingularBasis(SingularMatrix):
    """The generators of a cone do not form a basis."""


class DegenerateCone(HGError, ValueError):
    """Cone generators are linearly dependent (or too few for the operation)."""


class NotUnipotent(HGError, ValueError):
    pass


class ZeroVector(HGError, ValueError):
    pass


class InvalidOrder(HGError, ValueError):
    pass


class OrderMismatch(HGError, ValueError):
    pass


class OnProjectionHorizon(HGError, ValueError):
    """The point lies on the plane x - y + z = 0 and has no image."""


class TPoleHit(HGError, ValueError):
    """The planar action of T is undefined on the line 2a + 2b = 3."""


class ThetaZero(HGError, ValueError):
    pass


class EmptyGrid(HGError, ValueError):
    pass
