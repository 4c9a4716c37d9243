from .families import EmbeddingFamily, SU, SP, GRASSMANN
from .acs import acs_value, acs_values, acs_via_sff, build_group_sff, build_grassmann_sff, mean_curvature, check_pair
from .minimizers import MinimizerWitness, explicit_even_minimizer, a_n_closed, estimate_a_n, b_n_closed, b_n_bracket, positive_witness
from .sweep import SweepResult, sample_min_acs
