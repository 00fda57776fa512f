from .exceptions import ShapeError
import numpy as np

def check_ndim_return_array(a, ndim):
    """
        Checks that the given sequence 'a' is of the given dimension(s).
        Returns the array, if successful.
    """
    a = np.asarray(a)
    if not isinstance(ndim, (list, tuple, np.ndarray)):
        seq = f"{ndim:d}-D"
        ndim = [ndim]
    else:
        seq = [f"{n:d}-D" for n in ndim]
        if len(seq) == 0:
            msg = "Argument 'ndim' cannot be an empty sequence"
            raise ValueError(msg)
        elif len(seq) == 1:
            seq = seq[0]
        else:
            seq = ", ".join(seq[:-1]) + f" or {seq[-1]}"

    if a.ndim not in ndim:
        msg = (f"The given sequence is {a.ndim:d}-D; a {seq} sequence "
               f"is required.")
        raise ShapeError(msg)

    return a

def check_numerical_return_array(a):
    """
        Checks that the array 'a' contains numbers by converting it to float64,
        then returns it, if it's numerical.
    """
    try:
        a = np.asarray(a, dtype = np.float64)
    except (TypeError, ValueError):
        msg = (f"Sequence contains invalid elements: numerical sequence "
               f"of real numbers expected.")
        raise ValueError(msg)
    return a

def check_binary_return_array(a):
    """
        Checks that the array 'a' only holds the values 0 and 1, and returns
        it as an int8 array.
    """
    a = check_numerical_return_array(a)
    if not np.all((a == 0) | (a == 1)):
        msg = "Sequence contains values other than 0 and 1."
        raise ValueError(msg)
    return a.astype(np.int8)
