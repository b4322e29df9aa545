"""Exception hierarchy shared by every stage of the pipeline."""


class WsregressError(Exception):
    """Base class for all analysis errors raised by the package."""


class XmlSyntaxError(WsregressError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class WsdlError(WsregressError):
    """Raised for WSDL documents that violate the model invariants."""


class SuiteError(WsregressError):
    """Raised for malformed or inconsistent test-suite files."""


class CallGraphError(WsregressError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class SourceError(WsregressError):
    """Raised when a source file cannot be split into code units."""


class SelectionError(WsregressError):
    """Raised for unknown operation, case, or step names in a selection."""
