"""
Exceptions

Every validation failure in pysoil raises a subclass of PySoilError. The
command line maps InfeasibleError to exit code 2 and every other PySoilError
to exit code 1.

"""


class PySoilError(Exception):
    """ Base class for all pysoil errors. """
    exit_code = 1


class GraphFormatError(PySoilError):
    """ Malformed line in a graph file; message is prefixed by its line. """

    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__('line ' + str(lineno) + ': ' + message)


class GraphValidationError(PySoilError):
    pass


class LogFormatError(PySoilError):
    pass


class ConfigError(PySoilError):
    pass


class ConstraintError(PySoilError):
    pass


class SearchError(PySoilError):
    pass


class InfeasibleError(PySoilError):
    """ Raised when every candidate is gate-undefined. """
    exit_code = 2
