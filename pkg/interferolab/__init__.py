__author__ = 'interferolab developers'
__version__ = "0.1.0"

__all__ = ['states', 'elements', 'circuits', 'experiments', 'compilers', 'utils']

__USE_NUMBA_CACHE__ = True
__USE_NUMBA_FASTMATH__ = False
__USE_NUMBA_NOGIL__ = True
__USE_NUMBA_PARALLEL__ = True
