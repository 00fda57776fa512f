from .checking import check_numerical_return_array
from .checking import check_ndim_return_array
from .exceptions import DimensionError
import numpy as np
import math

# Scalars

def validate_positive(a, name):
    """
        Checks that the value 'a' is a valid positive quantity, meaning:

            It must be a scalar greater than zero
            It must be finite and defined

        If successful, returns 'a' as a float
    """
    a = check_numerical_return_array(a)
    a = check_ndim_return_array(a, 0)
    if not np.isfinite(a):
        msg = f"Non-finite scalar; positive finite value expected for {name}."
        raise ValueError(msg)
    if a <= 0:
        msg = f"Non-positive scalar; positive finite value expected for {name}."
        raise ValueError(msg)
    return float(a)

def validate_nonnegative(a, name):
    """
        Checks that the value 'a' is a finite scalar greater than or equal to
        zero, and returns it as a float
    """
    a = check_numerical_return_array(a)
    a = check_ndim_return_array(a, 0)
    if not np.isfinite(a) or a < 0:
        msg = (f"Invalid scalar {float(a):g}; non-negative finite value "
               f"expected for {name}.")
        raise ValueError(msg)
    return float(a)

def validate_probability(a, name):
    """
        Checks that the value 'a' lies in the open interval (0,1), as needed
        by false-alarm rates, levels and confidence parameters
    """
    a = check_numerical_return_array(a)
    a = check_ndim_return_array(a, 0)
    if not (0 < a < 1):
        msg = f"Value {float(a):g} for {name} must lie strictly between 0 and 1."
        raise ValueError(msg)
    return float(a)

def validate_gamma(a):
    """
        Checks that the value 'a' is a valid interaction strength, meaning:

            It must be a scalar greater than zero
            It may be +inf (a level where no edge ever flips)

        If successful, returns 'a' as a float
    """
    a = check_numerical_return_array(a)
    a = check_ndim_return_array(a, 0)
    if math.isnan(a) or a <= 0:
        msg = (f"Interaction strength {float(a):g} is invalid; the model "
               f"requires gamma > 0 (gamma = inf is allowed).")
        raise ValueError(msg)
    return float(a)

def validate_count(a, name, minimum = 1):
    """
        Checks that 'a' is an integer no smaller than 'minimum'
    """
    if isinstance(a, bool) or not isinstance(a, (int, np.integer)):
        msg = f"Argument '{name}' must be an integer, got {str(type(a))}."
        raise TypeError(msg)
    if a < minimum:
        msg = f"Argument '{name}' must be at least {minimum:d}, got {a:d}."
        raise ValueError(msg)
    return int(a)

# Arrays

def validate_vector(a, size = None):
    """
        Checks that the array 'a' is a valid signal vector, meaning:

            It must be a 1-D array of numbers
            It must only contain finite and defined values
            It must have 'size' entries, if 'size' is given

        If successful, returns 'a' as a float64 array
    """
    a = check_numerical_return_array(a)
    a = check_ndim_return_array(a, 1)
    if size is not None and a.shape[0] != size:
        raise DimensionError(size, a.shape[0])
    if not np.all(np.isfinite(a)):
        msg = "Sequence contains non-finite values; finite values expected."
        raise ValueError(msg)
    return a

def validate_vectors(a, size = None):
    """
        Checks that 'a' is a 1-D vector or a 2-D stack of row vectors of
        length 'size', with finite entries, and returns it as float64
    """
    a = check_numerical_return_array(a)
    a = check_ndim_return_array(a, (1,2))
    if size is not None and a.shape[-1] != size:
        raise DimensionError(size, a.shape[-1])
    if not np.all(np.isfinite(a)):
        msg = "Sequence contains non-finite values; finite values expected."
        raise ValueError(msg)
    return a

def validate_grid(a, name, minimum = None):
    """
        Checks that 'a' is a non-empty 1-D sequence of finite numbers, each
        no smaller than 'minimum' when given, and returns it as a tuple
    """
    a = check_numerical_return_array(a)
    a = check_ndim_return_array(a, 1)
    if a.shape[0] == 0:
        msg = f"Grid '{name}' must not be empty."
        raise ValueError(msg)
    if not np.all(np.isfinite(a)):
        msg = f"Grid '{name}' contains non-finite values."
        raise ValueError(msg)
    if minimum is not None and np.any(a < minimum):
        msg = f"Grid '{name}' has values below {minimum:g}."
        raise ValueError(msg)
    return tuple(float(i) for i in a)
