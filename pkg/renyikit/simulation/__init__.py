"""
Executable models of adaptive channel discrimination, feedback-assisted
codes and classical i.i.d. hypothesis testing.
"""
from .adaptive import (AdaptiveStrategy, StrategyOutcome, run_adaptive, renyi_cb_bound_check,
                       nagaoka_bound_check, optimal_final_test, canonical_purification,
                       tensor_power_strategy, random_strategy)
from .feedback import (FeedbackProtocol, run_feedback, run_feedback_replacer,
                       feedback_bound_check, superdense_coding_protocol, random_protocol)
from .classical import classical_iid_stein, compositions, type_class_log_masses
