"""
Ordered parallel map over independent instances (seeds, grid points).
"""
import numpy
import warnings
from astropy import log

from ..config import mycfg

try:
    import joblib
    _multi = True
    _ncpus = joblib.cpu_count()
except ImportError as ex:
    pmap_exception = ex
    _multi = False
    _ncpus = 1


__all__ = ('parallel_map',)


def parallel_map(function, sequence, numcores=None):
    """
    A parallelized version of the native Python map function.  Results come
    back in the order of ``sequence`` whatever the number of workers, so
    reductions over them are reproducible.

    parallel_map does not support multiple argument sequences.

    Parameters
    ----------
    function : callable
        Accepts one element of ``sequence``.
    sequence : iterable
    numcores : int, optional
        Number of workers.  Defaults to ``mycfg.threads``, which honours the
        ``RENYIKIT_THREADS`` environment variable.

    Returns
    -------
    list
    """
    if not callable(function):
        raise TypeError("input function '%s' is not callable" %
                        repr(function))

    if not numpy.iterable(sequence):
        raise TypeError("input '%s' is not iterable" %
                        repr(sequence))

    sequence = list(sequence)
    size = len(sequence)

    if numcores is None:
        numcores = int(mycfg.threads)

    if not _multi or size <= 1 or numcores <= 1:
        return [function(item) for item in sequence]

    if numcores > _ncpus:
        warnings.warn("Number of requested cores is greater than the "
                      "number of available CPUs.")

    if size < numcores:
        log.info("Reduced number of cores to {0}".format(size))
        numcores = size

    return joblib.Parallel(n_jobs=numcores)(
        joblib.delayed(function)(item) for item in sequence)
