"""
State-level divergences, the optimal binary test and the error exponents
built from them.
"""
from .values import DivergenceValue, ExponentReport
from .renyi import (relative_entropy, petz_renyi, sandwiched_renyi, max_relative_entropy,
                    renyi_auto, divergence_array, FAMILIES)
from .hypothesis import (BinaryTest, HypothesisTestResult, hypothesis_testing,
                         random_binary_test, nagaoka_bound_check, htre_bound_check,
                         BoundCheck)
from .exponents import hoeffding_divergence, hoeffding_anti_divergence
from .mutual_information import renyi_mutual_information, sibson_mutual_information
