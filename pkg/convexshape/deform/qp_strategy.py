import enum


@enum.unique
class QpStrategy(enum.Enum):
    """Keep the coupled (V, F) system or eliminate V = E^-1 N F"""
    COUPLED = "coupled"
    REDUCED = "reduced"
