from .fkm import delta, fkm_multiplicities, FkmMultiplicities
from .clifford import CliffordSystem, clifford_system, fkm_polynomial, clifford_stiefel_point, on_clifford_stiefel

# import here to avoid circular imports
from . import providers

# provide single instance and API
from .providerbase import ExampleFamily, FamilyLookupService, FamilyProvider
from .conditions import check_conditions, ConditionVerdict

family_service = FamilyLookupService()

get_families = family_service.get_families
by_tag = family_service.by_tag
set_config_path = family_service.set_config_path
