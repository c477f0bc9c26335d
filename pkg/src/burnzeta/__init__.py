"""Exact Burnside-ring invariants of finite group actions."""

from .acampo import (PairClass, ResolutionData, StratumRecord, acampo_zeta, fermat_s3_strata,
                     orbifold_reduce, quasihomogeneous_zeta, stratum_from_total_euler, validate_stratum)
from .burnside import (BurnsideElement, RationalBurnside, burnside_class, character, equivariant_euler,
                       equivariant_euler_from_strata, from_marks, marks, mul, orbifold_euler, phi)
from .dynamics import (EquivariantMap, LefschetzSequence, direct_period_counts, divisibility_check,
                       lefschetz_G, lefschetz_sequence, lefschetz_tilde_G, s_sequence, zeta_G,
                       zeta_nonequivariant, zeta_orb, zeta_tilde_G, character_series)
from .errors import (BurnzetaError, CapacityError, LatticeMismatchError, NonIntegralMarksError,
                     NotDivisibleError, RationalExponentError, StratumError, ValidationError)
from .groups import (Group, Subgroup, SubgroupLattice, ConjClass, TableOfMarks, element_classes,
                     group_from_generators, named_group, subgroup_lattice, table_of_marks)
from .gsets import (GSet, OrbitDecomposition, coset_gset, disjoint_union, empty_gset, fixed_set,
                    isotropy_stratum, orbit_decomposition, orbit_multiplicities, point_gset, product,
                    quotient, symmetric_power)
from .series import (BurnsideSeries, CyclotomicFactorization, RationalCoefficientFunction,
                     binomial_rational_form, expand, factorize, one_minus_t_power, power,
                     sigma_series, to_marks_series)

__version__ = "0.1.0"
