"""Exception hierarchy shared by every module of the package."""


class GeometryError(ValueError):
    """Base class for invalid algebraic or geometric input."""


class SignatureMismatch(GeometryError):
    pass


class NullBlade(GeometryError):
    """The blade squares to zero and has no inverse."""


class PointAtInfinity(GeometryError):
    pass


class DegeneratePair(GeometryError):
    """Two points coincide."""


class FlatPencil(GeometryError):
    """A point-pair blade whose carrier vanishes, so no round can be read off."""


class CollinearPoints(GeometryError):
    pass


class CoplanarPoints(GeometryError):
    pass


class CenterOffPlane(GeometryError):
    pass


class NotCoplanar(GeometryError):
    pass


class Unsupported(GeometryError):
    pass


class Concentric(GeometryError):
    """Centers coincide; the center distance appears as a divisor."""


class ConcentricCircles(Concentric):
    pass


class ConcentricSpheres(Concentric):
    pass


class NotTangent(GeometryError):
    pass
