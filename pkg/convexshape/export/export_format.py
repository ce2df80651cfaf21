import enum


@enum.unique
class ExportFormat(enum.Enum):
    NATIVE = "native"
    VTK_LEGACY = "vtk_legacy"
    SVG2D = "svg2d"

    @property
    def suffix(self) -> str:
        return {ExportFormat.NATIVE: ".mesh", ExportFormat.VTK_LEGACY: ".vtk", ExportFormat.SVG2D: ".svg"}[self]
