"""
Result types shared by the divergence and exponent computations.
"""
import math

import numpy as np

__all__ = ['DivergenceValue', 'ExponentReport']


class DivergenceValue(float):
    """
    A divergence in bits.  Plain ``float`` arithmetic applies, so ``inf``
    (a failed support condition) dominates sums and compares above every
    finite value.
    """

    @property
    def value(self):
        return float(self)

    @property
    def finite(self):
        return math.isfinite(self)

    def __repr__(self):
        return "DivergenceValue({0!r})".format(float(self))


def _matrix_or_none(state):
    if state is None:
        return None
    return np.asarray(getattr(state, 'matrix', state))


class ExponentReport(object):
    """
    Value of an optimized quantity together with the witnesses that
    reproduce it.

    Attributes
    ----------
    value : float
        Bits (or bits per channel use); may be ``inf``.
    alpha_star : float or None
        Optimal Renyi order; ``inf`` or ``1`` when the supremum is a limit.
    rho_star : DensityOperator or None
        Optimal input state on A'.
    sigma_star : DensityOperator or None
        Optimal output state on B.
    gap_certificate : float
        Disagreement between two independent evaluations (grid against
        descent, or sup-inf against inf-sup).
    iterations : int
    tolerance : float
        The tolerance ``gap_certificate`` is held to.
    flags : set of str
        ``attained_at_boundary``, ``heuristic``, ``infinite``,
        ``support_condition_fails``, ``below_threshold``, ...
    seed : int or None
        Multi-start seed that produced the optimum.
    """

    def __init__(self, value, alpha_star=None, rho_star=None, sigma_star=None,
                 gap_certificate=0.0, iterations=0, tolerance=0.0, flags=(),
                 seed=None, extra=None):
        self.value = float(value)
        self.alpha_star = alpha_star
        self.rho_star = rho_star
        self.sigma_star = sigma_star
        self.gap_certificate = float(gap_certificate)
        self.iterations = int(iterations)
        self.tolerance = float(tolerance)
        self.flags = set(flags)
        self.seed = seed
        self.extra = dict(extra or {})

    @property
    def certified(self):
        return self.gap_certificate <= self.tolerance

    def __float__(self):
        return self.value

    def to_dict(self):
        from ..writers import matrix_to_json
        out = dict(value=self.value,
                   alpha_star=self.alpha_star,
                   gap_certificate=self.gap_certificate,
                   iterations=self.iterations,
                   tolerance=self.tolerance,
                   flags=sorted(self.flags),
                   seed=self.seed)
        for name in ('rho_star', 'sigma_star'):
            m = _matrix_or_none(getattr(self, name))
            out[name] = None if m is None else matrix_to_json(m)
        out.update(self.extra)
        return out

    def __repr__(self):
        return ("ExponentReport(value={0!r}, alpha_star={1!r}, gap={2:.3g}, flags={3})"
                .format(self.value, self.alpha_star, self.gap_certificate,
                        sorted(self.flags)))
