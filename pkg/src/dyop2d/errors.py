"""Exception types shared across the package."""


class DegenerateInput(ValueError):
    """A triangle with (near-)zero area was passed to an algorithm that requires proper triangles."""


class ZeroVelocity(ValueError):
    """A zero relative velocity gives no movement axis; the caller must supply one."""


class ZeroDirection(ValueError):
    """A zero direction vector has no extremal vertex."""


class Penetrating(RuntimeError):
    """The closest-feature walk was asked about overlapping shapes, which it does not handle."""


class PlacementFailure(RuntimeError):
    """Scene placement could not realize the requested separation distance."""


class IncompleteRecords(ValueError):
    """Benchmark records are missing required coverage for report building."""


class SceneFormatError(ValueError):
    """A scene or report document failed structural validation."""
