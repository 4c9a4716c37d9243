from .curvature import Multiplicities, CurvatureNormalSystem, minimal_angle, volume_profile, volume_profile_derivative, \
    curvature_normals, focal_normals, focal_section_bound, ALPHAS
from .acs import acs_prime, acs_prime_general, vertex_program, max_acs, MaxAcsResult, simple_upper_bound, m1_four_threshold
from .sff import SffTensor, build_sff, acs_from_sff, ricci_from_sff, realize_pair, distribution_weights, mixed_normal
from .diagnostics import ricci_eigenvalues, extreme_sectional, focal_acs_upper, focal_ricci_lower, focal_acs_negative
