"""Constants"""

# Identifiers an expression may reference: position, state value and state gradient
VARIABLES = ('x1', 'x2', 'x3', 'u', 'g1', 'g2', 'g3')
