class MonogamyError(Exception):
    """Base error. `code` is the stable identifier printed by the CLI."""

    code = "E_GENERIC"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InvalidStateError(MonogamyError):
    code = "E_STATE"


class InvalidPartitionError(MonogamyError):
    code = "E_PARTITION"


class NotPositiveSemidefiniteError(MonogamyError):
    code = "E_PSD"


class QubitCountError(MonogamyError):
    code = "E_QUBITS"


class StateFileError(MonogamyError):
    """Raised by parse_state. code is one of E_MALFORMED, E_LENGTH, E_NORM."""

    code = "E_MALFORMED"


class OutputWriteError(MonogamyError):
    code = "E_IO"


class ConvexRoofError(MonogamyError):
    code = "E_ORACLE"

    def __init__(self, message: str, reconstruction_error: float):
        super().__init__(message)
        self.reconstruction_error = reconstruction_error


class NotWClassError(MonogamyError):
    code = "E_WCLASS"
