import enum


@enum.unique
class BoundaryCondition(enum.Enum):
    """Homogeneous Dirichlet Poisson or Neumann reaction-diffusion (-lap u + u = f)"""
    DIRICHLET_ZERO = "dirichlet_zero"
    NEUMANN_REACTION = "neumann_reaction"

    def stringify(self, **kwargs):
        return self.value.replace("_", " ")
