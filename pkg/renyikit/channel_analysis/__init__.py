"""
Channel divergences, channel mutual information and the exponents of
adaptive channel discrimination and feedback-assisted communication.
"""
from .objectives import (ChannelDivergenceQuery, induced_state_array,
                         state_parameterization_identity, norm_chain_identity)
from .divergence import (channel_renyi_divergence, channel_relative_entropy,
                         channel_max_divergence, cb_one_to_alpha_norm,
                         replacer_divergence_via_cb, finiteness_check, FinitenessResult)
from .information import channel_mutual_information, channel_mutual_information_geometric
from .exponents import (stein_exponent, strong_converse_exponent, feedback_sc_exponent,
                        composite_stein_exponent, composite_sc_bounds, CompositeBounds)
