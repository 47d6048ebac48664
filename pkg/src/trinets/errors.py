"""Exception types shared across the package."""


class TrinetsError(Exception):
    """Base class for all mathematical validation errors."""


# -- field / geometry ---------------------------------------------------------

class NotADivisor(TrinetsError):
    """Requested subgroup order does not divide p - 1."""


class CoincidentArguments(TrinetsError):
    """join/meet called with equal points/lines."""


class DegenerateFrame(TrinetsError):
    """Three of the four frame points are collinear (or lines concurrent)."""


# -- cubics -------------------------------------------------------------------

class PointNotOnCurve(TrinetsError):
    pass


class SingularPointInvolved(TrinetsError):
    pass


class CuspidalUnsupported(TrinetsError):
    """The smooth locus of a cuspidal cubic carries the additive group of
    order p, which the p > n convention rules out as a net source."""


# -- groups -------------------------------------------------------------------

class NotAGroup(TrinetsError):
    pass


class NotASubgroup(TrinetsError):
    pass


class NotNormal(TrinetsError):
    pass


class NotACoset(TrinetsError):
    pass


# -- nets ---------------------------------------------------------------------

class SizeMismatch(TrinetsError):
    """Components are empty or of unequal sizes."""


class ComponentsOverlap(TrinetsError):
    """A point occurs twice within or across components."""


class NotANet(TrinetsError):
    pass


# -- families -----------------------------------------------------------------

class CosetClash(TrinetsError):
    """Conic-line parameters u, v lie in the same coset of the chosen subgroup."""


class CosetsOverlap(TrinetsError):
    """The three curve-group cosets are not pairwise disjoint."""


class NoSuchSubgroup(TrinetsError):
    pass


class DegenerateProjection(TrinetsError):
    """Two spatial points project to the same plane point or onto a vertex."""


class NotTriangular(TrinetsError):
    pass


# -- symmetries ---------------------------------------------------------------

class CenterOnAxis(TrinetsError):
    pass


# -- search -------------------------------------------------------------------

class FieldTooSmall(TrinetsError):
    """Search requires p > |G|."""
