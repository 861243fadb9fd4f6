from interferolab.utils.checks_utils import (
    check_complex_matrix, check_complex_vector, check_n_jobs, check_n_samples,
    check_probability, is_int, is_subunitary_matrix, is_unitary_matrix,
    gram_max_eigenvalue, unitarity_error, ValidationError, EstimationError
)
import numpy as np
import pytest


def init_numpy(dims):
    return np.random.random_sample(dims) + 1j * np.random.random_sample(dims)

##########################################
#                                        #
#           Test matrix checks           #
#                                        #
##########################################

@pytest.mark.parametrize("dims", [
    ((2, 2)),
    ((5, 5)),
])
def test_check_matrix_numpy_no_change(dims):
    X = init_numpy(dims)
    X2 = check_complex_matrix(X)
    assert np.array_equal(X, X2)
    assert X2.dtype == np.complex128


@pytest.mark.parametrize("dims", [
    ((2, 2, 2)),
    ((2)),
])
def test_check_matrix_wrong_dimensions(dims):
    X = init_numpy(dims)
    with pytest.raises(ValueError):
        check_complex_matrix(X)


@pytest.mark.parametrize("dims", [
    ((0, 2)),
    ((2, 0)),
])
def test_check_matrix_empty_dimensions(dims):
    X = init_numpy(dims)
    with pytest.raises(ValueError):
        check_complex_matrix(X, square=False)


def test_check_matrix_shape_and_square():
    with pytest.raises(ValidationError):
        check_complex_matrix(init_numpy((2, 3)))
    with pytest.raises(ValidationError):
        check_complex_matrix(init_numpy((3, 3)), shape=(2, 2))
    assert check_complex_matrix(init_numpy((2, 3)), square=False).shape == (2, 3)


def test_check_matrix_non_finite():
    X = init_numpy((2, 2))
    X[0, 1] = np.nan
    with pytest.raises(ValidationError):
        check_complex_matrix(X)


def test_check_matrix_message_names_parameter():
    with pytest.raises(ValidationError, match="filter A1"):
        check_complex_matrix(init_numpy((3, 3)), shape=(2, 2), name='filter A1')

##########################################
#                                        #
#           Test vector checks           #
#                                        #
##########################################

@pytest.mark.parametrize("dims", [
    ((2)),
    ((7)),
])
def test_check_vector_numpy_no_change(dims):
    X = init_numpy(dims)
    assert np.array_equal(X, check_complex_vector(X))


@pytest.mark.parametrize("dims", [
    ((2, 2)),
    ((2, 1)),
])
def test_check_vector_wrong_dimensions(dims):
    with pytest.raises(ValueError):
        check_complex_vector(init_numpy(dims))


def test_check_vector_size():
    with pytest.raises(ValidationError):
        check_complex_vector(init_numpy(3), size=2)

##########################################
#                                        #
#           Test scalar checks           #
#                                        #
##########################################

@pytest.mark.parametrize("x, expected", [
    (1, True),
    (np.int64(3), True),
    (True, False),
    (1.0, False),
])
def test_is_int(x, expected):
    assert is_int(x) == expected


@pytest.mark.parametrize("n_jobs, expected", [
    (None, 1),
    (1, 1),
    (4, 4),
])
def test_check_n_jobs(n_jobs, expected):
    assert check_n_jobs(n_jobs) == expected


def test_check_n_jobs_negative():
    assert check_n_jobs(-1) >= 1


@pytest.mark.parametrize("n_jobs", [0, 1.5, 'a'])
def test_check_n_jobs_invalid(n_jobs):
    with pytest.raises(ValueError):
        check_n_jobs(n_jobs)


@pytest.mark.parametrize("n", [0, -3, 2.0, True])
def test_check_n_samples_invalid(n):
    with pytest.raises(ValidationError):
        check_n_samples(n)


@pytest.mark.parametrize("q", [0, 0.5, 1, 1.0])
def test_check_probability(q):
    assert check_probability(q) == float(q)


@pytest.mark.parametrize("q", [-0.1, 1.01, np.nan, np.inf])
def test_check_probability_out_of_range(q):
    with pytest.raises(ValidationError):
        check_probability(q)


def test_check_probability_type():
    with pytest.raises(ValidationError):
        check_probability('0.5')

##########################################
#                                        #
#         Test operator properties       #
#                                        #
##########################################

def test_unitarity():
    h = np.sqrt(0.5)
    s = np.array([[h, 1j * h], [1j * h, h]])
    assert unitarity_error(s) < 1e-15
    assert is_unitary_matrix(s)
    assert not is_unitary_matrix(2 * s)


@pytest.mark.parametrize("m, expected", [
    (np.eye(2), True),
    (2 * np.eye(2), False),
    (np.array([[1, 1], [0, 0]]) / np.sqrt(2), True),
    (np.zeros((2, 2)), True),
])
def test_is_subunitary_matrix(m, expected):
    assert is_subunitary_matrix(m) == expected


def test_gram_max_eigenvalue():
    assert gram_max_eigenvalue(2 * np.eye(3)) == pytest.approx(4.0)


def test_estimation_error_carries_directions():
    e = EstimationError("rank deficient", null_directions=[np.eye(2)])
    assert isinstance(e, RuntimeError)
    assert len(e.null_directions) == 1
    assert EstimationError("no directions").null_directions == []
