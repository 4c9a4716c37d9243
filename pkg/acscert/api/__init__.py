from .controller import isoparametric, group, grassmannian, catalog, clifford, constants, certify_family
from .report import emit, render_text
