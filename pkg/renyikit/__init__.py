"""
renyikit computes Renyi divergences of quantum states and channels, the
error exponents of adaptive channel discrimination and of feedback-assisted
communication, and checks the bounds relating them on executable models.
"""
try:
    from .version import version as __version__
except ImportError:
    __version__ = ''

__all__ = ['qmat', 'divergences', 'channel_analysis', 'simulation', 'readers', 'writers',
           'presets', 'suites']

from . import rkwarnings
from . import qmat
from . import divergences
from . import channel_analysis
from . import simulation
from . import readers
from . import writers
from . import presets
from . import suites
from .qmat import *  # noqa
from .divergences import *  # noqa
from .channel_analysis import *  # noqa
