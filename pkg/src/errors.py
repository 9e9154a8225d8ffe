class DendrexError(Exception):
    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail

class PreconditionError(DendrexError):
    exit_code = 2

class UnsupportedCaseError(PreconditionError):
    pass

class ResourceLimitError(DendrexError):
    exit_code = 2

class InputError(DendrexError):
    exit_code = 2

class PresheafValidationError(DendrexError):
    exit_code = 1

class InternalConsistencyError(DendrexError):
    exit_code = 1
