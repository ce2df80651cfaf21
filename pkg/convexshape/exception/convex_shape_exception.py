class ConvexShapeException(Exception):
    """ Base class for all other custom exceptions """
    pass
