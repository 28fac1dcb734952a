"""
Finite-dimensional quantum objects: operators with subsystem labels,
support-restricted matrix functions, partial traces and channels.
"""
from .operators import HermitianOperator, DensityOperator, PureState, as_matrix
from .linalg import (hermitian_eig, support_power, support_power_array,
                     schatten_norm, conjugate_by, kron_array, dagger)
from .subsystems import (tensor, partial_trace, partial_trace_array, gamma_vector,
                         gamma_projector, maximally_entangled)
from .channels import (KrausMap, KrausChannel, ReplacerSpec, apply_channel,
                       as_kraus_map, identity_channel, unitary_channel,
                       dephasing_channel, depolarizing_channel,
                       amplitude_damping_channel, replacer_channel, thermal_state,
                       illumination_toy, PAULIS)
from .sampling import (random_state, random_pure, random_unitary, random_channel,
                       random_povm, rng_for)
