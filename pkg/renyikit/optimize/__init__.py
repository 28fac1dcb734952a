"""
Numerical optimizers over states and Renyi orders.
"""
from .states import (StateOptimum, params_to_density, density_to_params, params_to_pure,
                     pure_to_params, central_gradient, optimize_state, sup_inf_states,
                     inf_sup_states)
from .bloch import bloch_grid, bloch_state, bloch_states, GridOptimum, grid_search
from .chart import ChartOptimum, alpha_from_u, u_from_alpha, maximize_in_chart
