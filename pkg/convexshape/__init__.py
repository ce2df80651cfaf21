"""Shape optimization over convex polygonal and polyhedral domains"""

__version__ = "0.1.1"


from .exception import *
from .mesh import *
from .fem import *
from .expression import *
from .shapecalc import *
from .convexity import *
from .deform import *
from .qp import *
from .optimize import *
from .config import *
from .export import *
