from .quaternion import Quaternion, HAMILTON
from .matrix import Matrix, REAL, COMPLEX, QUATERNION
from .killing import KillingMetric, killing_inner
from .lie import LieAlgebra, project_lie_algebra
from .sampling import UnitPairSampler, GrassmannPairSampler, sample_unit_pair, grassmann_sample_pair
