"""Exception hierarchy shared by every module of the package."""


class TetraQuarticError(Exception):
    """Base class for all errors raised by this package."""


# exact arithmetic
class ZeroPolynomial(TetraQuarticError, ValueError):
    pass


class DegreeZero(TetraQuarticError, ValueError):
    pass


class NonRational(TetraQuarticError, ValueError):
    pass


class PositiveDimensionalLocus(TetraQuarticError):
    """A polynomial system expected to have finitely many solutions does not."""


# lattices
class LatticeMismatch(TetraQuarticError, ValueError):
    pass


class UnknownName(TetraQuarticError, KeyError):
    pass


class OddSquare(TetraQuarticError, ValueError):
    pass


class NoCanonicalClass(TetraQuarticError, ValueError):
    pass


class IdentityFailed(TetraQuarticError):
    def __init__(self, name, residual):
        super().__init__(f"identity {name!r} failed, residual {residual}")
        self.name = name
        self.residual = residual


class DegenerateLattice(TetraQuarticError, ValueError):
    pass


class LiftMismatch(TetraQuarticError):
    def __init__(self, name, detail=""):
        super().__init__(f"lift {name!r} does not match: {detail}")
        self.name = name


# isometries
class NotIsometry(TetraQuarticError, ValueError):
    pass


class IsometryCheckFailed(TetraQuarticError):
    def __init__(self, name, entry, defect):
        super().__init__(f"{name}: Gram defect {defect} at entry {entry}")
        self.name = name
        self.entry = entry
        self.defect = defect


class ImageMismatch(TetraQuarticError):
    def __init__(self, name, expected, computed):
        super().__init__(f"image of {name}: expected {expected}, got {computed}")
        self.name = name
        self.expected = expected
        self.computed = computed


# geometry
class PointNotOnSurface(TetraQuarticError, ValueError):
    pass


class PointNotOnCurve(TetraQuarticError, ValueError):
    pass


class DegenerateCoefficient(TetraQuarticError, ValueError):
    pass


class NotANode(TetraQuarticError):
    pass


class ParametrizationFailure(TetraQuarticError):
    pass


class UnexpectedFactor(TetraQuarticError):
    pass


class InfiniteFamily(PositiveDimensionalLocus):
    pass


# cli
class InputParseError(TetraQuarticError, ValueError):
    def __init__(self, message, field=None, line=None):
        where = []
        if field is not None:
            where.append(f"field {field!r}")
        if line is not None:
            where.append(f"line {line}")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(prefix + message)
        self.field = field
        self.line = line
