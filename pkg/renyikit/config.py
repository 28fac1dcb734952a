"""
==================
renyikit config system
==================

Tolerances and optimizer settings shared by every module, with user
overrides read from ~/.renyikit/config.

To see what values exist in config file, do:
    from renyikit.config import mycfg
    mycfg.keys()

The config file holds one ``key = value`` pair per line, e.g.::

    # looser certification on a slow laptop
    grid_resolution = 24
    multistart_seeds = 4

To let a function pick up config values for keyword arguments left as
``None``, do:
    from renyikit.config import ConfigDescriptor as cfgdec

    @cfgdec
    def solve(rho, gtol=None, maxiter=None):
        pass    # gtol and maxiter now come from mycfg unless given
"""

import os
import inspect
import functools
import multiprocessing


class dotdictify(dict):
    """
    dict allowing "dot" access to its keys, recursively.
    """
    marker = object()

    def __init__(self, value=None):
        if value is None:
            pass
        elif isinstance(value, dict):
            for key in value:
                self.__setitem__(key, value[key])
        else:
            raise TypeError('expected dict')

    def __setitem__(self, key, value):
        if isinstance(value, dict) and not isinstance(value, dotdictify):
            value = dotdictify(value)
        dict.__setitem__(self, key, value)

    def __getitem__(self, key):
        found = self.get(key, dotdictify.marker)
        if found is dotdictify.marker:
            raise KeyError(key)
        return found

    def __getattr__(self, key):
        try:
            return self[key]
        except KeyError:
            raise AttributeError(key)

    __setattr__ = __setitem__


def _default_threads():
    env = os.environ.get('RENYIKIT_THREADS')
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    try:
        return multiprocessing.cpu_count()
    except NotImplementedError:
        return 1


cfgDefaults = dotdictify(dict(
    # operator invariants
    hermiticity_tol = 1e-10,
    psd_tol = 1e-10,
    trace_tol = 1e-10,
    tp_tol = 1e-9,
    pure_tol = 1e-12,
    test_tol = 1e-10,
    povm_tol = 1e-9,
    # support handling (cutoff is relative to the largest eigenvalue)
    support_cutoff = 1e-12,
    support_tol = 1e-10,
    alpha_one_window = 1e-6,
    np_gap = 1e-9,
    # state optimizers
    fd_step = 1e-6,
    gtol = 1e-6,
    inner_gtol = 1e-8,
    maxiter = 500,
    multistart_seeds = 8,
    minimax_seeds = 2,
    grid_resolution = 40,
    minimax_grid_resolution = 5,
    certificate_tol = 1e-3,
    # u = (alpha-1)/alpha chart
    chart_lower = 1e-4,
    chart_upper = 1 - 1e-4,
    chart_grid = 16,
    chart_xatol = 1e-6,
    # simulators
    factorization_tol = 1e-9,
    composite_samples = 6,
    threads = _default_threads(),
    ))


def _parse_value(token):
    if token == 'True':
        return True
    elif token == 'False':
        return False
    elif token == 'None':
        return None
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        return str(token)


class ConfigParser:
    def __init__(self, fn=None):
        """
        Initialize cfg dictionary from the defaults, then the file ``fn``.
        """
        return_dict = dotdictify(dict(cfgDefaults))
        if fn is not None:
            with open(fn) as f:
                for line in f:
                    if not line.strip():
                        continue
                    if line.lstrip()[0] == '#':
                        continue
                    key, sep, value = line.partition('=')
                    if not sep:
                        continue
                    return_dict[key.strip()] = _parse_value(value.strip())

        self.cfg = return_dict


__fn = os.path.expanduser("~/.renyikit/config")
if os.path.exists(__fn):
    mycfg = dotdictify(ConfigParser(__fn).cfg)
else:
    mycfg = dotdictify(ConfigParser().cfg)


def ConfigDescriptor(f):
    """
    Fill keyword arguments that default to ``None`` from ``mycfg`` when the
    caller leaves them out.  Only arguments whose name is a config key are
    touched.
    """
    signature = inspect.signature(f)
    configurable = [name for name, par in signature.parameters.items()
                    if par.default is None and name in cfgDefaults]

    @functools.wraps(f)
    def decorator(*args, **kwargs):
        bound = signature.bind_partial(*args, **kwargs)
        for name in configurable:
            if bound.arguments.get(name) is None and name in mycfg:
                bound.arguments[name] = mycfg[name]
        return f(*bound.args, **bound.kwargs)

    return decorator
