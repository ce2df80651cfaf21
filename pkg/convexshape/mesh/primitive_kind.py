import enum

@enum.unique
class PrimitiveKind(enum.Enum):
    UNIT_DISK = "unit_disk"
    UNIT_SQUARE = "unit_square"
    UNIT_CUBE_CENTERED = "unit_cube_centered"
