"""semimod's custom exceptions.

This module contains the implementation of Custom Exceptions.

Input errors derive from SemimodInputError, internal consistency failures
from ConsistencyError. The CLI maps them to exit codes 2, 3 and 4.

"""


class SemimodInputError(ValueError):
    """
    Base class for errors caused by invalid user input.

    Args:
        ValueError (ValueError): SemimodInputError
    """


class ConsistencyError(RuntimeError):
    """
    Base class for violated internal consistency checks, i.e. a computed
    result contradicts a statement the library relies on.

    Args:
        RuntimeError (RuntimeError): ConsistencyError
    """


class InvalidSemigroupError(SemimodInputError):
    """
    Raised when (alpha, beta) does not define a two-generated numerical
    semigroup with 2 <= alpha < beta and gcd(alpha, beta) = 1.

    Args:
        alpha (int): first generator.
        beta (int): second generator.
        reason (str): what is wrong with the pair.
    """

    def __init__(self, alpha, beta, reason):
        self.alpha = alpha
        self.beta = beta
        self.reason = reason
        super().__init__(f"Invalid semigroup <{alpha},{beta}>: {reason}")


class NonCanonicalLeanSetError(SemimodInputError):
    """
    Raised when a generator list is not a canonical lean set (minimum 0,
    nonzero entries gaps, ordered increasingly with respect to <_L).

    Args:
        SemimodInputError (SemimodInputError): NonCanonicalLeanSetError
    """


class DegenerateLeanSetError(SemimodInputError):
    """
    Raised when an operation needs at least two generators but receives the
    class of the semigroup itself.

    Args:
        operation (str): name of the rejecting operation.
    """

    def __init__(self, operation):
        self.operation = operation
        super().__init__(
            f"'{operation}' needs a lean set with at least two generators."
        )


class InvalidMatrixError(SemimodInputError):
    """
    Raised when a two-row matrix has rows of different length, non-positive
    entries or row sums that do not define a valid semigroup.

    Args:
        SemimodInputError (SemimodInputError): InvalidMatrixError
    """


class InvalidPathError(SemimodInputError):
    """
    Raised when a lattice path has the wrong step counts or crosses the
    diagonal.

    Args:
        SemimodInputError (SemimodInputError): InvalidPathError
    """


class InvalidGeneratorCountError(SemimodInputError):
    """
    Raised when a requested generator count is out of range.

    Args:
        SemimodInputError (SemimodInputError): InvalidGeneratorCountError
    """


class ParityMismatchError(SemimodInputError):
    """
    Raised when an operation restricted to a parity of alpha or beta is
    called on a semigroup of the other parity.

    Args:
        SemimodInputError (SemimodInputError): ParityMismatchError
    """


class UnrecognizedSelfdualFormError(SemimodInputError):
    """
    Raised when a matrix is in none of the palindromic forms required by an
    operation, e.g. the matrix of a class that is not selfdual.

    Args:
        SemimodInputError (SemimodInputError): UnrecognizedSelfdualFormError
    """


class InvalidWorkspacePathError(SemimodInputError):
    """
    Raised when the environment variable of workspace exist but path is invalid

    Args:
        SemimodInputError (SemimodInputError): InvalidWorkspacePathError
    """


class InvalidConfigError(SemimodInputError):
    """
    Raised when config value is not applicable
    Args:
        SemimodInputError (SemimodInputError): InvalidConfigError
    """


class RotationUniquenessError(ConsistencyError):
    """
    Raised when not exactly one cyclic rotation of a matrix describes a
    lattice path below the diagonal.

    Args:
        top (tuple): top row of the matrix.
        bottom (tuple): bottom row of the matrix.
        valid_rotations (list): rotations that decoded to a lean set.
    """

    def __init__(self, top, bottom, valid_rotations):
        self.top = top
        self.bottom = bottom
        self.valid_rotations = valid_rotations
        super().__init__(
            f"Matrix ({top}, {bottom}) has {len(valid_rotations)} rotations "
            f"below the diagonal, expected exactly one: {valid_rotations}"
        )


class OracleMismatchError(ConsistencyError):
    """
    Raised when a closed formula and its brute-force oracle disagree.

    Args:
        operation (str): the checked operation.
        formula (Any): result of the closed formula.
        oracle (Any): result of the oracle.
    """

    def __init__(self, operation, formula, oracle):
        self.operation = operation
        self.formula = formula
        self.oracle = oracle
        super().__init__(
            f"{operation}: formula result {formula} differs from oracle {oracle}"
        )


class CensusMismatchError(ConsistencyError):
    """
    Raised when an observed selfdual census differs from the counting
    theorems.

    Args:
        mismatches (list): (alpha, beta, generator_count, observed, expected) rows.
    """

    def __init__(self, mismatches):
        self.mismatches = mismatches
        super().__init__(
            f"Census differs from the expected counts in {len(mismatches)} row(s): "
            f"{mismatches}"
        )


class TemplateFileNotFoundError(FileNotFoundError):
    """
    Raised when a template file cannot be found.
    """

    def __init__(self, template_path, report_name="Unknown"):
        """
        __init__ method of TemplateFileNotFoundError Class

        Args:
            template_path (str): Path for template file.
            report_name (str): Report name. Defaults to "Unknown".
        """
        self.template_path = template_path
        super().__init__(
            f"Unable to find a file with template at '{template_path}' "
            f"for '{report_name}' report."
        )


class UnSupportedLogicUnit(Exception):
    """
    Raised when unsupported logic unit is added in the pipeline
    Args:
        Exception (Exception): UnSupportedLogicUnit
    """


class PipelineConcatenationError(Exception):
    """
    Raise error if pipelines of different kinds are concatenated
    Args:
        Exception (Exception): Concatenating wrong pipelines
    """
