class DimensionError(Exception):
    """
        Raised when a vector or matrix does not match the size of the object
        it is combined with (basis, similarity matrix, tree).
    """
    def __init__(self, expected, given):
        """
            Arguments 'expected' and 'given' should be of type <int>;
            'expected' is the size of the main instance, and 'given' is
            the size of the other object being combined with it.
        """

        message = (f"Attempted to combine an object of size {given:d} with "
                   f"an object of size {expected:d}.")

        # Call the base class constructor with the parameters it needs
        super(DimensionError, self).__init__(message)

class ShapeError(Exception):
    """
        Raised when an array is of invalid shape.
    """
    def __init__(self, message):
        super(ShapeError, self).__init__(message)

class SimilarityError(Exception):
    """
        Raised when a similarity matrix is non-square, non-symmetric, or
        contains undefined entries.
    """
    def __init__(self, message):
        super(SimilarityError, self).__init__(message)

class ContractError(Exception):
    """
        Raised when an operation is called with arguments that break its
        preconditions, e.g. overlapping clusters passed to a linkage.
    """
    def __init__(self, message):
        super(ContractError, self).__init__(message)

class HierarchyError(Exception):
    """
        Raised when a collection of clusters is not laminar, or does not
        cover the expected leaf set.
    """
    def __init__(self, message):
        super(HierarchyError, self).__init__(message)

class ModelError(Exception):
    """
        Raised for invalid tree models or interaction schedules, and for
        models too large for exhaustive enumeration.
    """
    def __init__(self, message):
        super(ModelError, self).__init__(message)

class SeparationError(Exception):
    """
        Raised when a similarity matrix has no positive gap with respect to
        a hierarchy.
    """
    def __init__(self, tau):
        message = (f"Similarity gap is {tau:g}; a strictly positive gap is "
                   f"required for the hierarchy to be recoverable.")
        self.tau = tau
        super(SeparationError, self).__init__(message)

class ConfigError(Exception):
    """
        Raised when an experiment configuration is malformed.
    """
    def __init__(self, message):
        super(ConfigError, self).__init__(message)

class FileFormatError(Exception):
    """
        Raised when an input file cannot be parsed; 'row' and 'column' are
        1-based positions in the file, when known.
    """
    def __init__(self, path, message, row = None, column = None):
        where = f"{path}"
        if row is not None:
            where += f", row {row:d}"
        if column is not None:
            where += f", column {column:d}"
        self.path = path
        self.row = row
        self.column = column
        super(FileFormatError, self).__init__(f"{where}: {message}")
