# -*- coding: utf-8 -*-

import numpy as np
from os import cpu_count

from scipy.linalg import eigvalsh

# Structural tolerance for 2x2 element checks
ELEMENT_TOL = 1e-12
# Tolerance for compiler targets and reconstruction
OPERATOR_TOL = 1e-10


class ValidationError(ValueError):
    """Raised when an input violates a documented invariant."""


class InvalidElementError(ValidationError):
    """Raised when an optical element is built from an unphysical matrix."""


class NetlistError(ValidationError):
    """Raised when a netlist is structurally invalid."""


class EstimationError(RuntimeError):
    """
    Raised when an estimation problem is not identifiable.

    Parameters
    ----------
    message : str
        Human readable description.
    null_directions : list of array, optional
        Directions of the parameter space that the data cannot determine.
    """

    def __init__(self, message, null_directions=None):
        super().__init__(message)
        self.null_directions = [] if null_directions is None else null_directions


def is_int(x):
    """Check if x is of integer type, but not boolean."""
    # boolean are subclasses of integers in Python, so explicitly exclude them
    return isinstance(x, (int, np.integer)) and not isinstance(x, bool)


def check_is_numeric(x):
    if (isinstance(x, (int, np.integer)) or isinstance(x, (float, np.floating))) and not isinstance(x, bool):
        return x
    else:
        raise ValidationError('Expected a numerical value, but got {}'.format(type(x)))


def check_is_boolean(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    else:
        raise ValidationError('Expected a boolean, but got {}'.format(type(x)))


def check_n_jobs(n_jobs):
    """Check `n_jobs` parameter according to the scikit-learn convention.

    Parameters
    ----------
    n_jobs : int, positive or -1
        The number of jobs for parallelization.

    Returns
    -------
    n_jobs : int
        Checked number of jobs.
    """
    if n_jobs is None:
        return 1
    elif not is_int(n_jobs):
        raise ValidationError(f"`n_jobs` must be None or an integer, but found: {n_jobs}")
    elif n_jobs == 0:
        raise ValidationError("`n_jobs` cannot be 0")
    elif n_jobs < 0:
        return max(1, cpu_count() + n_jobs + 1)
    else:
        return n_jobs


def check_n_samples(n_samples, name='n_samples'):
    """Check that a sample count is an integer greater or equal to 1."""
    if not is_int(n_samples) or n_samples < 1:
        raise ValidationError(
            "`{}` must be an integer >= 1, but found: {}".format(name, n_samples)
        )
    return int(n_samples)


def check_probability(x, name='q'):
    """
    Check that x is a real number in [0, 1].

    Parameters
    ----------
    x : float
        Value to check.
    name : str, optional
        Name used in the error message. The default is 'q'.

    Raises
    ------
    ValidationError

    Returns
    -------
    float
        The checked value.

    """
    x = float(check_is_numeric(x))
    if not np.isfinite(x) or x < 0 or x > 1:
        raise ValidationError(
            "`{}` must be a probability in [0, 1], but found: {}".format(name, x)
        )
    return x


def check_complex_vector(x, size=None, name='vector'):
    """
    Perform checks on the input to verify if it is a finite 1D complex
    vector, and convert it to complex128.

    Parameters
    ----------
    x : array-like, shape=(size,)
        Input vector.
    size : int, optional
        Expected number of components. The default is None (any size).
    name : str, optional
        Name used in error messages.

    Raises
    ------
    ValidationError

    Returns
    -------
    x : array, shape=(size,)
        A complex128 copy of the input.

    """
    try:
        x = np.array(x, dtype=np.complex128)
    except (TypeError, ValueError):
        raise ValidationError(
            "{} must be convertible to a complex array, but got {}".format(name, type(x))
        )
    if x.ndim != 1:
        raise ValidationError(
            "{} must be a 1-dimensional array, but found shape: {}".format(name, x.shape)
        )
    if size is not None and x.shape[0] != size:
        raise ValidationError(
            "{} must have {} components, but found {}".format(name, size, x.shape[0])
        )
    if not np.all(np.isfinite(x)):
        raise ValidationError("{} contains non finite values".format(name))
    return x


def check_complex_matrix(m, shape=None, square=True, name='matrix'):
    """
    Perform checks on the input to verify if it is a finite 2D complex
    matrix, and convert it to complex128.

    Parameters
    ----------
    m : array-like, shape=(n_rows, n_cols)
        Input matrix.
    shape : tuple, optional
        Expected shape. The default is None.
    square : bool, optional
        If True, the matrix must be square. The default is True.
    name : str, optional
        Name used in error messages.

    Raises
    ------
    ValidationError

    Returns
    -------
    m : array, shape=(n_rows, n_cols)
        A complex128 copy of the input.

    """
    try:
        m = np.array(m, dtype=np.complex128)
    except (TypeError, ValueError):
        raise ValidationError(
            "{} must be convertible to a complex array, but got {}".format(name, type(m))
        )
    if m.ndim != 2:
        raise ValidationError(
            "{} must be a 2-dimensional array, but found shape: {}".format(name, m.shape)
        )
    if m.size == 0:
        raise ValidationError(
            "{} is empty, found shape: {}".format(name, m.shape)
        )
    if shape is not None and m.shape != tuple(shape):
        raise ValidationError(
            "{} must have shape {}, but found shape: {}".format(name, tuple(shape), m.shape)
        )
    if square and m.shape[0] != m.shape[1]:
        raise ValidationError(
            "{} must be square, but found shape: {}".format(name, m.shape)
        )
    if not np.all(np.isfinite(m)):
        raise ValidationError("{} contains non finite values".format(name))
    return m


def unitarity_error(m):
    """Return max|m* m - I|."""
    m = np.asarray(m)
    return float(np.abs(m.conj().T @ m - np.eye(m.shape[1])).max())


def gram_max_eigenvalue(m):
    """Return the largest eigenvalue of m* m (squared largest singular value)."""
    m = np.asarray(m)
    return float(eigvalsh(m.conj().T @ m).max())


def is_unitary_matrix(m, tol=ELEMENT_TOL):
    return unitarity_error(m) <= tol


def is_subunitary_matrix(m, tol=ELEMENT_TOL):
    return gram_max_eigenvalue(m) <= 1 + tol
