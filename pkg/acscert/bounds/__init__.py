from .index import IndexBoundConstant, acs_index_constant, robust_index_constant, veronese_dim, index_bound_constant
